# report.py
# ReportDocument: one self-describing document per `dee compute` run.
# JSON key order follows field order; floats are rounded to a fixed number of
# significant digits so repeated runs are byte-identical.

from __future__ import annotations

import logging
import math
import os
import sys
from typing import List, Optional, Union

from pydantic import BaseModel, ConfigDict

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from config import TOOL_NAME, TOOL_VERSION, get_precision, get_zero_tol

from analysis import (
    BoundsReport,
    DSpectrum,
    DistanceProfile,
    SplitExp,
    bounds_report_from,
    distance_profile,
    eigen_symmetric,
    is_distance_degree_regular,
    spectrum_from_values,
)
from graphs import Graph, graph_digest

logger = logging.getLogger(__name__)

Number = Union[float, str]


def round_sig(x: float, precision: int) -> float:
    """Round to `precision` significant digits; -0.0 becomes 0.0."""
    value = float(f"{x:.{precision}g}")
    return value + 0.0


def number(value: SplitExp, precision: int) -> Number:
    """Rounded float, or 'c + e^x' text when the value overflows a float."""
    if value.overflow:
        return value.text(precision)
    return round_sig(value.value, precision)


class _Frozen(BaseModel):
    model_config = ConfigDict(frozen=True)


class GraphSummary(_Frozen):
    n: int
    m: int
    family: Optional[str] = None


class ProfileSection(_Frozen):
    wiener: int
    geo_mean: float
    diameter: int
    distance_degrees: List[int]
    distance_degree_regular: Optional[int] = None


class SpectrumSection(_Frozen):
    eigenvalues: List[float]
    n_plus: int
    n_zero: int
    n_minus: int


class DeeSection(_Frozen):
    value: Number
    remainder: float
    mu1: float
    split: str
    overflow: bool


class BoundsSection(_Frozen):
    lower_prior: Number
    lower_thm1: Number
    lower_spectral: Number
    upper_moment: Number
    upper_thm1: Number
    upper_prior: Number
    mu1_lb_prior: float
    mu1_lb_wiener: float
    mu1_lb_degrees: float
    corollary1_lower: Optional[Number] = None
    corollary1_upper: Optional[Number] = None
    equality_lower: bool
    equality_upper: bool
    chain_holds: bool


class Provenance(_Frozen):
    tool: str = TOOL_NAME
    version: str = TOOL_VERSION
    input_sha256: str


class ReportDocument(_Frozen):
    graph: GraphSummary
    profile: ProfileSection
    spectrum: SpectrumSection
    dee: DeeSection
    bounds: BoundsSection
    provenance: Provenance

    def to_json(self) -> str:
        return self.model_dump_json(indent=2) + "\n"


# ---------------- assembly ---------------- #

def _eigenvalues_for_report(spectrum: DSpectrum, precision: int) -> List[float]:
    # eigenvalues counted as zero are printed as exact 0
    threshold = get_zero_tol() * max(1.0, spectrum.mu1)
    return [0.0 if abs(x) <= threshold else round_sig(x, precision) for x in spectrum.eigenvalues]


def build_report(
    g: Graph,
    family: Optional[str] = None,
    precision: Optional[int] = None,
    profile: Optional[DistanceProfile] = None,
    spectrum: Optional[DSpectrum] = None,
) -> ReportDocument:
    precision = get_precision() if precision is None else precision
    if profile is None:
        profile = distance_profile(g)
    if spectrum is None:
        spectrum = spectrum_from_values(eigen_symmetric(profile.dist))
    bounds: BoundsReport = bounds_report_from(profile, spectrum)
    exact = bounds.dee_exact

    corollary = bounds.corollary1
    return ReportDocument(
        graph=GraphSummary(n=g.n, m=g.m, family=family),
        profile=ProfileSection(
            wiener=profile.wiener,
            geo_mean=round_sig(profile.geo_mean, precision),
            diameter=profile.diameter,
            distance_degrees=list(profile.distance_degrees),
            distance_degree_regular=is_distance_degree_regular(profile),
        ),
        spectrum=SpectrumSection(
            eigenvalues=_eigenvalues_for_report(spectrum, precision),
            n_plus=spectrum.n_plus,
            n_zero=spectrum.n_zero,
            n_minus=spectrum.n_minus,
        ),
        dee=DeeSection(
            value=number(SplitExp.from_dee(exact), precision),
            remainder=round_sig(exact.remainder, precision),
            mu1=round_sig(exact.mu1, precision),
            split=exact.split_text(precision),
            overflow=exact.overflow,
        ),
        bounds=BoundsSection(
            lower_prior=number(bounds.lower_prior, precision),
            lower_thm1=number(bounds.lower_thm1, precision),
            lower_spectral=number(bounds.lower_spectral, precision),
            upper_moment=number(bounds.upper_moment, precision),
            upper_thm1=number(bounds.upper_thm1, precision),
            upper_prior=number(bounds.upper_prior, precision),
            mu1_lb_prior=round_sig(bounds.mu1_lb_prior, precision),
            mu1_lb_wiener=round_sig(bounds.mu1_lb_wiener, precision),
            mu1_lb_degrees=round_sig(bounds.mu1_lb_degrees, precision),
            corollary1_lower=number(corollary[0], precision) if corollary else None,
            corollary1_upper=number(corollary[1], precision) if corollary else None,
            equality_lower=bounds.equality_lower,
            equality_upper=bounds.equality_upper,
            chain_holds=not bounds.violations(),
        ),
        provenance=Provenance(input_sha256=graph_digest(g)),
    )


# ---------------- human-readable table ---------------- #

def _fmt(value: Union[Number, None], precision: int) -> str:
    if value is None:
        return "-"
    if isinstance(value, str):
        return value
    if isinstance(value, float) and math.isfinite(value):
        return f"{value:.{precision}g}"
    return str(value)


def render_table(doc: ReportDocument, precision: Optional[int] = None) -> str:
    precision = get_precision() if precision is None else precision
    b = doc.bounds
    rows = [
        ("vertices n", str(doc.graph.n)),
        ("edges m", str(doc.graph.m)),
        ("family", doc.graph.family or "-"),
        ("Wiener index W", str(doc.profile.wiener)),
        ("geometric mean M", _fmt(doc.profile.geo_mean, precision)),
        ("diameter", str(doc.profile.diameter)),
        ("distance degrees", " ".join(str(d) for d in doc.profile.distance_degrees)),
        ("distance-degree regular", _fmt(doc.profile.distance_degree_regular, precision)),
        ("D-eigenvalues", " ".join(_fmt(x, precision) for x in doc.spectrum.eigenvalues)),
        ("n+ / n0 / n-", f"{doc.spectrum.n_plus} / {doc.spectrum.n_zero} / {doc.spectrum.n_minus}"),
        ("DEE", _fmt(doc.dee.value, precision)),
        ("DEE split", doc.dee.split),
        ("lower (prior)", _fmt(b.lower_prior, precision)),
        ("lower (W, M)", _fmt(b.lower_thm1, precision)),
        ("lower (mu1)", _fmt(b.lower_spectral, precision)),
        ("upper (N2)", _fmt(b.upper_moment, precision)),
        ("upper (diameter, W)", _fmt(b.upper_thm1, precision)),
        ("upper (prior)", _fmt(b.upper_prior, precision)),
        ("mu1 >= 2W/n", _fmt(b.mu1_lb_prior, precision)),
        ("mu1 >= (W, M)", _fmt(b.mu1_lb_wiener, precision)),
        ("mu1 >= sqrt(sum D^2/n)", _fmt(b.mu1_lb_degrees, precision)),
        ("regular lower", _fmt(b.corollary1_lower, precision)),
        ("regular upper", _fmt(b.corollary1_upper, precision)),
        ("lower bound tight", "yes" if b.equality_lower else "no"),
        ("upper bound tight", "yes" if b.equality_upper else "no"),
        ("input sha256", doc.provenance.input_sha256),
    ]
    width = max(len(label) for label, _ in rows)
    lines = [f"{label.ljust(width)}  {value}" for label, value in rows]
    lines.append("[OK] bound chain holds" if b.chain_holds else "[!] bound chain violated")
    return "\n".join(lines) + "\n"
