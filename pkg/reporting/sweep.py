# sweep.py
# Batch evaluation of one parametric family over an inclusive parameter range.
# Instances run on a thread pool; rows come back in parameter order no matter
# which instance finishes first. A failing instance yields a row with `error`
# set instead of stopping the sweep.

from __future__ import annotations

import csv
import io
import logging
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict
from tqdm import tqdm

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from config import TOOL_NAME, TOOL_VERSION, get_precision, get_sweep_workers

from analysis import (
    AnalysisError,
    SplitExp,
    bounds_report_from,
    distance_profile,
    eigen_symmetric,
    spectrum_from_values,
)
from graphs import FAMILIES, GraphError, GraphFamily, GraphFamilyError, generate, parametric_families

from .report import Number, number, round_sig

logger = logging.getLogger(__name__)


class SweepRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    param: int
    n: Optional[int] = None
    wiener: Optional[int] = None
    geo_mean: Optional[float] = None
    diameter: Optional[int] = None
    mu1: Optional[float] = None
    dee: Optional[Number] = None
    lower_prior: Optional[Number] = None
    lower_thm1: Optional[Number] = None
    lower_spectral: Optional[Number] = None
    upper_moment: Optional[Number] = None
    upper_thm1: Optional[Number] = None
    upper_prior: Optional[Number] = None
    corollary1_lower: Optional[Number] = None
    corollary1_upper: Optional[Number] = None
    lower_ratio: Optional[float] = None
    upper_ratio: Optional[float] = None
    equality_lower: Optional[bool] = None
    chain_holds: Optional[bool] = None
    error: Optional[str] = None


class SweepDocument(BaseModel):
    model_config = ConfigDict(frozen=True)

    family: str
    start: int
    end: int
    rows: List[SweepRow]
    tool: str = TOOL_NAME
    version: str = TOOL_VERSION

    def to_json(self) -> str:
        return self.model_dump_json(indent=2) + "\n"


def parse_range(text: str) -> Tuple[int, int]:
    """'a..b' -> (a, b), inclusive on both ends."""
    parts = text.split("..")
    if len(parts) != 2:
        raise GraphFamilyError(f"range must look like START..END, got {text!r}")
    try:
        start, end = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphFamilyError(f"range bounds must be integers, got {text!r}") from None
    if start > end:
        raise GraphFamilyError(f"empty range {text!r}")
    return start, end


def _ratio(a: SplitExp, b: SplitExp) -> float:
    """a / b computed on logs so it survives overflowing operands."""
    return math.exp(a.log_value - b.log_value)


def sweep_row(family: str, param: int, precision: int) -> SweepRow:
    try:
        g = generate(GraphFamily(tag=family, params=(param,)))
        profile = distance_profile(g)
        spectrum = spectrum_from_values(eigen_symmetric(profile.dist))
        report = bounds_report_from(profile, spectrum)
    except (GraphError, AnalysisError) as exc:
        logger.warning("[Sweep] %s(%d) failed: %s", family, param, exc)
        return SweepRow(param=param, error=str(exc))

    exact = SplitExp.from_dee(report.dee_exact)
    corollary = report.corollary1
    return SweepRow(
        param=param,
        n=g.n,
        wiener=profile.wiener,
        geo_mean=round_sig(profile.geo_mean, precision),
        diameter=profile.diameter,
        mu1=round_sig(report.mu1, precision),
        dee=number(exact, precision),
        lower_prior=number(report.lower_prior, precision),
        lower_thm1=number(report.lower_thm1, precision),
        lower_spectral=number(report.lower_spectral, precision),
        upper_moment=number(report.upper_moment, precision),
        upper_thm1=number(report.upper_thm1, precision),
        upper_prior=number(report.upper_prior, precision),
        corollary1_lower=number(corollary[0], precision) if corollary else None,
        corollary1_upper=number(corollary[1], precision) if corollary else None,
        lower_ratio=round_sig(_ratio(report.lower_thm1, exact), precision),
        upper_ratio=round_sig(_ratio(exact, report.upper_thm1), precision),
        equality_lower=report.equality_lower,
        chain_holds=not report.violations(),
    )


def run_sweep(
    family: str,
    start: int,
    end: int,
    workers: Optional[int] = None,
    precision: Optional[int] = None,
    progress: bool = False,
) -> SweepDocument:
    if family not in FAMILIES or FAMILIES[family].arity != 1:
        raise GraphFamilyError(
            f"sweep needs a one-parameter family ({', '.join(parametric_families())}), got {family!r}"
        )
    workers = get_sweep_workers() if workers is None else workers
    precision = get_precision() if precision is None else precision
    params = list(range(start, end + 1))
    logger.info("[Sweep] %s %d..%d on %d worker(s)", family, start, end, workers)

    with ThreadPoolExecutor(max_workers=workers) as pool:
        # map() yields results in submission order
        results = pool.map(lambda p: sweep_row(family, p, precision), params)
        rows = list(tqdm(results, total=len(params), desc=f"sweep {family}",
                         disable=not progress or not sys.stderr.isatty(), file=sys.stderr))
    return SweepDocument(family=family, start=start, end=end, rows=rows)


def rows_to_csv(doc: SweepDocument) -> str:
    columns = list(SweepRow.model_fields)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in doc.rows:
        values = row.model_dump()
        writer.writerow(["" if values[c] is None else values[c] for c in columns])
    return buffer.getvalue()
