# bounds.py
# Lower and upper bounds for the distance Estrada index in terms of the
# Wiener index, distance degrees and diameter, plus the older bounds they
# improve on. Every bound has the shape  remainder + e^exponent  and is kept
# in that split form so nothing is lost when e^exponent leaves float range.

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

from config import get_equality_tol
from graphs import Graph

from .distance_metrics import (
    DistanceProfile,
    distance_profile,
    is_distance_degree_regular,
    spectral_moment_from_distances,
)
from .errors import BoundDomainError
from .spectral import DSpectrum, DeeValue, dee, eigen_symmetric, spectrum_from_values

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class SplitExp:
    """remainder + e^exponent, with remainder >= 0."""

    remainder: float
    exponent: float

    @property
    def overflow(self) -> bool:
        return math.isinf(self.value)

    @property
    def value(self) -> float:
        try:
            return self.remainder + math.exp(self.exponent)
        except OverflowError:
            return math.inf

    @property
    def log_value(self) -> float:
        if self.remainder <= 0:
            return self.exponent
        log_r = math.log(self.remainder)
        hi, lo = max(self.exponent, log_r), min(self.exponent, log_r)
        return hi + math.log1p(math.exp(lo - hi))

    def text(self, precision: int = 6) -> str:
        """Plain number when it fits a float, otherwise 'c + e^x'."""
        if not self.overflow:
            return f"{self.value:.{precision}g}"
        return f"{self.remainder:.{precision}g} + e^{self.exponent:.{precision}g}"

    @classmethod
    def from_dee(cls, value: DeeValue) -> "SplitExp":
        return cls(remainder=value.remainder, exponent=value.mu1)


def _le(a: SplitExp, b: SplitExp, tol: float) -> bool:
    # relative comparison a <= b * (1 + tol), done on logs
    return a.log_value <= b.log_value + math.log1p(tol)


def _close(a: SplitExp, b: SplitExp, tol: float) -> bool:
    return abs(a.log_value - b.log_value) <= math.log1p(tol)


# ===================== the monotone function f =====================

def f_monotone_split(x: float, n: int) -> SplitExp:
    """f(x) = e^x + (n-1) e^{-x/(n-1)}; the limit e^x when n = 1."""
    if x < 0:
        raise BoundDomainError(f"f(x) is only used on x >= 0, got {x}")
    if n < 1:
        raise BoundDomainError(f"n must be positive, got {n}")
    if n == 1:
        return SplitExp(0.0, float(x))
    return SplitExp((n - 1) * math.exp(-x / (n - 1)), float(x))


def f_monotone(x: float, n: int) -> float:
    return f_monotone_split(x, n).value


# ===================== estimates for mu_1 =====================

def mu1_lower_bound_degrees(profile: DistanceProfile) -> float:
    """sqrt(sum D_i^2 / n)."""
    return math.sqrt(math.fsum(d * d for d in profile.distance_degrees) / profile.n)


def mu1_lower_bound_wiener(W: float, M: float, n: int) -> float:
    """
    sqrt((4W^2 - M^2 n) / (n(n-1))).

    Returns 0 for n = 1; the n = 1 convention of the DEE bound itself is
    applied in lower_bound_thm1.
    """
    if n < 1:
        raise BoundDomainError(f"n must be positive, got {n}")
    if n == 1:
        return 0.0
    four_w2 = 4.0 * float(W) * float(W)
    disc = four_w2 - float(M) * float(M) * n
    if disc < 0:
        # rounding in M can only move it by a few ulps
        if disc < -1e-9 * max(1.0, four_w2):
            raise BoundDomainError(f"inconsistent inputs: 4W^2 < M^2 n (W={W}, M={M}, n={n})")
        disc = 0.0
    return math.sqrt(disc / (n * (n - 1)))


def mu1_lower_bound_prior(W: float, n: int) -> float:
    """2W/n, the average distance degree."""
    return 2.0 * W / n


# ===================== DEE bounds =====================

def lower_bound_thm1_split(profile: DistanceProfile) -> SplitExp:
    n = profile.n
    if n == 1:
        return SplitExp(0.0, 0.0)
    mu = mu1_lower_bound_wiener(profile.wiener, profile.geo_mean, n)
    return f_monotone_split(mu, n)


def lower_bound_thm1(profile: DistanceProfile) -> float:
    return lower_bound_thm1_split(profile).value


def upper_bound_thm1_split(profile: DistanceProfile) -> SplitExp:
    return SplitExp(float(profile.n - 1), math.sqrt(2.0 * profile.diameter * profile.wiener))


def upper_bound_thm1(profile: DistanceProfile) -> float:
    return upper_bound_thm1_split(profile).value


def lower_bound_spectral_split(mu1: float, n: int) -> SplitExp:
    if mu1 < 0:
        raise BoundDomainError(f"mu_1 of a connected graph is nonnegative, got {mu1}")
    return f_monotone_split(mu1, n)


def lower_bound_spectral(mu1: float, n: int) -> float:
    return lower_bound_spectral_split(mu1, n).value


def lower_bound_prior_split(W: float, n: int) -> SplitExp:
    if n < 1:
        raise BoundDomainError(f"n must be positive, got {n}")
    return f_monotone_split(mu1_lower_bound_prior(W, n), n)


def lower_bound_prior(W: float, n: int) -> float:
    return lower_bound_prior_split(W, n).value


def upper_bound_prior_split(delta: int, n: int) -> SplitExp:
    if n < 1 or delta < 0:
        raise BoundDomainError(f"need n >= 1 and diameter >= 0, got n={n}, diameter={delta}")
    return SplitExp(float(n - 1), delta * math.sqrt(n * (n - 1)))


def upper_bound_prior(delta: int, n: int) -> float:
    return upper_bound_prior_split(delta, n).value


def upper_bound_moment_split(N2: float, n: int) -> SplitExp:
    """n - 1 + e^{sqrt(N_2)}: sits between DEE and the diameter/Wiener upper bound."""
    if N2 < 0:
        raise BoundDomainError(f"N_2 is a sum of squares, got {N2}")
    return SplitExp(float(n - 1), math.sqrt(N2))


def upper_bound_moment(N2: float, n: int) -> float:
    return upper_bound_moment_split(N2, n).value


def corollary1_bounds_split(r: float, delta: int, n: int) -> Tuple[SplitExp, SplitExp]:
    """Bounds for a graph whose distance degrees all equal r."""
    lower = f_monotone_split(r, n)
    upper = SplitExp(float(n - 1), math.sqrt(delta * n * r))
    return lower, upper


def corollary1_bounds(r: float, delta: int, n: int) -> Tuple[float, float]:
    lower, upper = corollary1_bounds_split(r, delta, n)
    return lower.value, upper.value


# ===================== report =====================

@dataclass(frozen=True)
class BoundsReport:
    n: int
    mu1: float
    lower_thm1: SplitExp
    upper_thm1: SplitExp
    lower_spectral: SplitExp
    upper_moment: SplitExp
    lower_prior: SplitExp
    upper_prior: SplitExp
    mu1_lb_degrees: float
    mu1_lb_wiener: float
    mu1_lb_prior: float
    corollary1: Optional[Tuple[SplitExp, SplitExp]]
    dee_exact: DeeValue
    equality_lower: bool
    equality_upper: bool

    def chain(self) -> List[Tuple[str, SplitExp]]:
        """The DEE sandwich, loosest lower bound first."""
        return [
            ("lower_prior", self.lower_prior),
            ("lower_thm1", self.lower_thm1),
            ("lower_spectral", self.lower_spectral),
            ("dee", SplitExp.from_dee(self.dee_exact)),
            ("upper_moment", self.upper_moment),
            ("upper_thm1", self.upper_thm1),
            ("upper_prior", self.upper_prior),
        ]

    def violations(self, tol: float = DEFAULT_TOL) -> List[str]:
        """Every broken link of the DEE chain and of the mu_1 chain."""
        problems = []
        links = self.chain()
        for (name_a, a), (name_b, b) in zip(links, links[1:]):
            if not _le(a, b, tol):
                problems.append(f"{name_a} ({a.text(12)}) > {name_b} ({b.text(12)})")
        mu_links = [
            ("mu1_lb_prior", self.mu1_lb_prior),
            ("mu1_lb_wiener", self.mu1_lb_wiener),
            ("mu1_lb_degrees", self.mu1_lb_degrees),
            ("mu1", self.mu1),
        ]
        for (name_a, a), (name_b, b) in zip(mu_links, mu_links[1:]):
            if a > b + tol * max(1.0, abs(b)):
                problems.append(f"{name_a} ({a:.12g}) > {name_b} ({b:.12g})")
        if self.corollary1 is not None:
            lower, upper = self.corollary1
            if not _close(lower, self.lower_thm1, tol):
                problems.append("corollary1 lower differs from lower_thm1 on a distance-degree regular graph")
            if not (_le(lower, SplitExp.from_dee(self.dee_exact), tol) and _le(SplitExp.from_dee(self.dee_exact), upper, tol)):
                problems.append("dee outside corollary1 bounds")
        return problems


def bounds_report_from(
    profile: DistanceProfile,
    spectrum: DSpectrum,
    tol: Optional[float] = None,
) -> BoundsReport:
    """Assemble the report from an already computed profile and spectrum."""
    tol = get_equality_tol() if tol is None else tol
    n = profile.n
    exact = dee(spectrum)
    exact_split = SplitExp.from_dee(exact)
    lower = lower_bound_thm1_split(profile)
    upper = upper_bound_thm1_split(profile)

    r = is_distance_degree_regular(profile)
    corollary = corollary1_bounds_split(r, profile.diameter, n) if r is not None else None

    report = BoundsReport(
        n=n,
        mu1=spectrum.mu1,
        lower_thm1=lower,
        upper_thm1=upper,
        lower_spectral=lower_bound_spectral_split(max(spectrum.mu1, 0.0), n),
        upper_moment=upper_bound_moment_split(spectral_moment_from_distances(profile, 2), n),
        lower_prior=lower_bound_prior_split(profile.wiener, n),
        upper_prior=upper_bound_prior_split(profile.diameter, n),
        mu1_lb_degrees=mu1_lower_bound_degrees(profile),
        mu1_lb_wiener=mu1_lower_bound_wiener(profile.wiener, profile.geo_mean, n),
        mu1_lb_prior=mu1_lower_bound_prior(profile.wiener, n),
        corollary1=corollary,
        dee_exact=exact,
        equality_lower=_close(exact_split, lower, tol),
        equality_upper=_close(exact_split, upper, tol),
    )
    problems = report.violations(tol)
    if problems:
        logger.warning("[Bounds] chain violated: %s", "; ".join(problems))
    return report


def bounds_report(g: Graph) -> BoundsReport:
    profile = distance_profile(g)
    spectrum = spectrum_from_values(eigen_symmetric(profile.dist))
    return bounds_report_from(profile, spectrum)
