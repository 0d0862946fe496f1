"""
Analysis module: distance invariants, D-spectrum and DEE bounds.

Includes:
- BFS distance matrix, Wiener index, distance degrees, spectral moments
- Cyclic Jacobi eigensolver and the distance Estrada index
- Bounds for DEE and the checks tying them together
"""

from .errors import AnalysisError, BoundDomainError, DisconnectedGraph, NoConvergence, NotSymmetric
from .distance_metrics import (
    DistanceProfile,
    distance_matrix,
    distance_profile,
    is_distance_degree_regular,
    kober_gap,
    spectral_moment_from_distances,
    wiener_index_edge_cut,
)
from .spectral import (
    DSpectrum,
    DeeValue,
    cycle_spectrum_closed_form,
    d_spectrum,
    dee,
    distinct_eigenvalues,
    eigen_symmetric,
    eigen_symmetric_with_vectors,
    spectral_moment,
    spectrum_from_values,
)
from .bounds import (
    BoundsReport,
    SplitExp,
    bounds_report,
    bounds_report_from,
    corollary1_bounds,
    f_monotone,
    lower_bound_prior,
    lower_bound_spectral,
    lower_bound_thm1,
    mu1_lower_bound_degrees,
    mu1_lower_bound_prior,
    mu1_lower_bound_wiener,
    upper_bound_moment,
    upper_bound_prior,
    upper_bound_thm1,
)

__all__ = [
    'AnalysisError',
    'BoundDomainError',
    'DisconnectedGraph',
    'NoConvergence',
    'NotSymmetric',
    'DistanceProfile',
    'distance_matrix',
    'distance_profile',
    'is_distance_degree_regular',
    'kober_gap',
    'spectral_moment_from_distances',
    'wiener_index_edge_cut',
    'DSpectrum',
    'DeeValue',
    'cycle_spectrum_closed_form',
    'd_spectrum',
    'dee',
    'distinct_eigenvalues',
    'eigen_symmetric',
    'eigen_symmetric_with_vectors',
    'spectral_moment',
    'spectrum_from_values',
    'BoundsReport',
    'SplitExp',
    'bounds_report',
    'bounds_report_from',
    'corollary1_bounds',
    'f_monotone',
    'lower_bound_prior',
    'lower_bound_spectral',
    'lower_bound_thm1',
    'mu1_lower_bound_degrees',
    'mu1_lower_bound_prior',
    'mu1_lower_bound_wiener',
    'upper_bound_moment',
    'upper_bound_prior',
    'upper_bound_thm1',
]
