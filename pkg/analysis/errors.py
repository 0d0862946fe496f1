class AnalysisError(Exception):
    """Base error for distance, spectral and bound computations."""


class DisconnectedGraph(AnalysisError):
    def __init__(self, source: int, target: int):
        self.source = source
        self.target = target
        super().__init__(f"graph is disconnected: vertex {target} unreachable from {source}")


class NotSymmetric(AnalysisError):
    pass


class NoConvergence(AnalysisError):
    def __init__(self, sweeps: int, off_norm: float, target: float):
        self.sweeps = sweeps
        self.off_norm = off_norm
        self.target = target
        super().__init__(
            f"Jacobi did not converge after {sweeps} sweeps "
            f"(off-diagonal norm {off_norm:.3e} > {target:.3e})"
        )


class BoundDomainError(AnalysisError):
    """Bound formula called outside its domain (negative argument, inconsistent W/M)."""
