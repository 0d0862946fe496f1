"""
Reporting module: documents produced by the command line.

Includes:
- ReportDocument for a single graph (JSON or table)
- Family sweeps (CSV or JSON)
"""

from .report import ReportDocument, build_report, render_table
from .sweep import SweepDocument, SweepRow, parse_range, rows_to_csv, run_sweep

__all__ = [
    'ReportDocument',
    'build_report',
    'render_table',
    'SweepDocument',
    'SweepRow',
    'parse_range',
    'rows_to_csv',
    'run_sweep',
]
