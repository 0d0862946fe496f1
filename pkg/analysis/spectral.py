# spectral.py
# D-spectrum of a graph via a cyclic Jacobi eigensolver, the distance Estrada
# index DEE = sum(exp(mu_i)), and the circulant closed form for cycles.

from __future__ import annotations

import logging
import math
import os
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from config import get_jacobi_max_sweeps, get_jacobi_tol, get_rotation_skip, get_zero_tol

from graphs import Graph

from .distance_metrics import distance_matrix
from .errors import AnalysisError, NoConvergence, NotSymmetric

logger = logging.getLogger(__name__)

SYMMETRY_TOL = 1e-12


# ---------------- cyclic Jacobi ---------------- #

def _off_norm(a: List[List[float]]) -> float:
    n = len(a)
    return math.sqrt(2.0 * sum(a[i][j] * a[i][j] for i in range(n) for j in range(i + 1, n)))


def _jacobi(
    m,
    want_vectors: bool,
    max_sweeps: Optional[int] = None,
    tol: Optional[float] = None,
) -> Tuple[np.ndarray, Optional[np.ndarray]]:
    """
    Row-cyclic Jacobi on a private copy of m.

    Stops when off(A)_F <= tol * ||A||_F. Returns (eigenvalues, vectors), both
    sorted so eigenvalues are non-increasing. Rotations update the symmetric
    working matrix in place on plain lists, touching rows p and q only.
    """
    arr = np.array(m, dtype=np.float64, copy=True)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise NotSymmetric(f"matrix must be square, got shape {arr.shape}")
    asym = float(np.max(np.abs(arr - arr.T))) if arr.size else 0.0
    if asym > SYMMETRY_TOL:
        raise NotSymmetric(f"matrix is not symmetric (max |a_ij - a_ji| = {asym:.3e})")
    arr = 0.5 * (arr + arr.T)

    n = arr.shape[0]
    max_sweeps = get_jacobi_max_sweeps() if max_sweeps is None else max_sweeps
    tol = get_jacobi_tol() if tol is None else tol
    skip = get_rotation_skip()
    target = tol * float(np.linalg.norm(arr))
    a = arr.tolist()
    v = np.eye(n).tolist() if want_vectors else None

    sweep = 0
    while True:
        off = _off_norm(a)
        if off <= target:
            break
        if sweep >= max_sweeps:
            raise NoConvergence(sweep, off, target)
        sweep += 1
        for p in range(n - 1):
            row_p = a[p]
            for q in range(p + 1, n):
                row_q = a[q]
                apq = row_p[q]
                if abs(apq) < skip:
                    continue
                theta = (row_q[q] - row_p[p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c

                for k in range(n):
                    if k == p or k == q:
                        continue
                    row_k = a[k]
                    akp = row_k[p]
                    akq = row_k[q]
                    row_k[p] = row_p[k] = c * akp - s * akq
                    row_k[q] = row_q[k] = s * akp + c * akq
                row_p[p] -= t * apq
                row_q[q] += t * apq
                row_p[q] = row_q[p] = 0.0

                if v is not None:
                    for row_v in v:
                        vp = row_v[p]
                        vq = row_v[q]
                        row_v[p] = c * vp - s * vq
                        row_v[q] = s * vp + c * vq

    logger.debug("[Jacobi] n=%d converged after %d sweeps", n, sweep)
    values = np.array([a[i][i] for i in range(n)], dtype=np.float64)
    order = np.argsort(-values, kind="stable")
    values = values[order]
    vectors = None
    if v is not None:
        vectors = np.array(v, dtype=np.float64).reshape(n, n)[:, order]
    return values, vectors


def eigen_symmetric(m) -> List[float]:
    """Eigenvalues of a real symmetric matrix, non-increasing."""
    values, _ = _jacobi(m, want_vectors=False)
    return [float(x) for x in values]


def eigen_symmetric_with_vectors(m) -> Tuple[List[float], np.ndarray]:
    """Eigenvalues plus the orthonormal eigenvector matrix (column i pairs with value i)."""
    values, vectors = _jacobi(m, want_vectors=True)
    return [float(x) for x in values], vectors


# ---------------- D-spectrum ---------------- #

@dataclass(frozen=True)
class DSpectrum:
    eigenvalues: Tuple[float, ...]
    n_plus: int
    n_zero: int
    n_minus: int

    @property
    def n(self) -> int:
        return len(self.eigenvalues)

    @property
    def mu1(self) -> float:
        return self.eigenvalues[0]


def classify_signs(eigenvalues: Sequence[float], zero_tol: Optional[float] = None) -> Tuple[int, int, int]:
    """(n_plus, n_zero, n_minus) with threshold zero_tol * max(1, mu_1)."""
    zero_tol = get_zero_tol() if zero_tol is None else zero_tol
    threshold = zero_tol * max(1.0, max(eigenvalues))
    n_plus = sum(1 for x in eigenvalues if x > threshold)
    n_zero = sum(1 for x in eigenvalues if abs(x) <= threshold)
    return n_plus, n_zero, len(eigenvalues) - n_plus - n_zero


def spectrum_from_values(eigenvalues: Sequence[float]) -> DSpectrum:
    values = tuple(sorted((float(x) for x in eigenvalues), reverse=True))
    n_plus, n_zero, n_minus = classify_signs(values)
    return DSpectrum(eigenvalues=values, n_plus=n_plus, n_zero=n_zero, n_minus=n_minus)


def d_spectrum(g: Graph) -> DSpectrum:
    return spectrum_from_values(eigen_symmetric(distance_matrix(g)))


def distinct_eigenvalues(spectrum: DSpectrum, tol: float = 1e-7) -> int:
    """Number of eigenvalue clusters, neighbours closer than tol merged."""
    count = 0
    previous = None
    for x in spectrum.eigenvalues:
        if previous is None or previous - x > tol:
            count += 1
        previous = x
    return count


def spectral_moment(spectrum: DSpectrum, k: int) -> float:
    return math.fsum(x ** k for x in spectrum.eigenvalues)


# ---------------- distance Estrada index ---------------- #

@dataclass(frozen=True)
class DeeValue:
    """
    DEE = remainder + exp(mu1).

    value is +inf with overflow=True once exp(mu1) leaves the float range;
    (remainder, mu1) stays exact either way.
    """

    value: float
    remainder: float
    mu1: float
    overflow: bool = False

    @property
    def split_lead(self) -> Tuple[float, float]:
        return self.remainder, self.mu1

    def split_text(self, precision: int = 6) -> str:
        return f"{self.remainder:.{precision}g} + e^{self.mu1:.{precision}g}"


def _exp_or_inf(x: float) -> float:
    try:
        return math.exp(x)
    except OverflowError:
        return math.inf


def dee(spectrum: DSpectrum) -> DeeValue:
    # smallest exponents first
    ascending = sorted(spectrum.eigenvalues)
    terms = [_exp_or_inf(x) for x in ascending]
    overflow = math.isinf(terms[-1])
    value = math.inf if any(math.isinf(t) for t in terms) else math.fsum(terms)
    remainder = terms[:-1]
    rest = math.inf if any(math.isinf(t) for t in remainder) else math.fsum(remainder)
    if overflow:
        logger.warning("[DEE] exp(%.6g) overflows; reporting split form only", spectrum.mu1)
    return DeeValue(value=value, remainder=rest, mu1=spectrum.mu1, overflow=overflow)


# ---------------- cycles: circulant closed form ---------------- #

def cycle_spectrum_closed_form(n: int) -> List[float]:
    """
    D(C_n) is circulant with first row d(0, k) = min(k, n - k), so
    mu_j = sum_k d(0, k) * cos(2*pi*j*k / n), j = 0..n-1.
    """
    if n < 3:
        raise AnalysisError(f"cycle closed form needs n >= 3, got {n}")
    k = np.arange(1, n)
    first_row = np.minimum(k, n - k).astype(np.float64)
    j = np.arange(n)[:, None]
    values = (first_row * np.cos(2.0 * np.pi * j * k / n)).sum(axis=1)
    return sorted((float(x) for x in values), reverse=True)
