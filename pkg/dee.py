# dee.py
# Command line:
#   python dee.py gen <family> [params] [-o FILE]
#   python dee.py compute <FILE|-> [--json|--table] [--precision N]
#   python dee.py sweep <family> <start>..<end> [--json|--csv] [-o FILE]
#
# Exit codes:
#   0 success
#   1 usage, unknown family, bad parameters, I/O failure
#   2 GraphFile parse error
#   3 disconnected graph
#   4 eigensolver did not converge
#
# Diagnostics and logs go to stderr only; stdout carries the document.

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from config import config, get_log_level
from analysis import AnalysisError, DisconnectedGraph, NoConvergence
from graphs import (
    GraphError,
    GraphParseError,
    generate,
    parse_family,
    read_graph_file,
    resolve_family_name,
    write_graph_file,
)
from reporting import build_report, render_table, rows_to_csv, run_sweep
from reporting.sweep import parse_range

logger = logging.getLogger("dee")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_DISCONNECTED = 3
EXIT_NO_CONVERGENCE = 4


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on bad usage, which is taken by parse errors here."""

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def _emit(text: str, path: Optional[str]) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    out = Path(path)
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w", encoding="utf-8", newline="") as f:
        f.write(text)
    logger.info("[Output] wrote %s", out)


def _fail(code: int, message: str) -> int:
    sys.stderr.write(f"dee: {message}\n")
    return code


# ---------------- subcommands ---------------- #

def cmd_gen(args) -> int:
    family = parse_family(args.family, args.params)
    g = generate(family)
    write_graph_file(g, args.output)
    logger.info("[Gen] %s: n=%d m=%d", family.label(), g.n, g.m)
    return EXIT_OK


def cmd_compute(args) -> int:
    g = read_graph_file(args.input)
    doc = build_report(g, precision=args.precision)
    if args.format == "json":
        sys.stdout.write(doc.to_json())
    else:
        sys.stdout.write(render_table(doc, precision=args.precision))
    return EXIT_OK


def cmd_sweep(args) -> int:
    family = resolve_family_name(args.family)
    start, end = parse_range(args.range)
    doc = run_sweep(family, start, end, workers=args.workers,
                    precision=args.precision, progress=args.progress)
    text = doc.to_json() if args.format == "json" else rows_to_csv(doc)
    _emit(text, args.output)
    failed = sum(1 for row in doc.rows if row.error)
    if failed:
        logger.warning("[Sweep] %d of %d instances failed", failed, len(doc.rows))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dee", description="Distance Estrada index and its bounds.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("gen", help="write a named graph as a GraphFile")
    gen.add_argument("family", help="complete|cycle|path|star N, chemical_tree_fig1 (tree5), c60")
    gen.add_argument("params", nargs="*", help="family parameters")
    gen.add_argument("-o", "--output", default=None, help="output file (default stdout)")
    gen.set_defaults(handler=cmd_gen)

    compute = sub.add_parser("compute", help="profile, spectrum, DEE and bounds of a GraphFile")
    compute.add_argument("input", help="GraphFile path, or - for stdin")
    fmt = compute.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const", const="json")
    fmt.add_argument("--table", dest="format", action="store_const", const="table")
    compute.add_argument("--precision", type=int, default=None, help="significant digits (default 6)")
    compute.set_defaults(handler=cmd_compute, format="table")

    sweep = sub.add_parser("sweep", help="bounds for one family over a parameter range")
    sweep.add_argument("family", help="complete|cycle|path|star")
    sweep.add_argument("range", help="START..END, inclusive")
    fmt = sweep.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const", const="json")
    fmt.add_argument("--csv", dest="format", action="store_const", const="csv")
    sweep.add_argument("-o", "--output", default=None, help="output file (default stdout)")
    sweep.add_argument("--precision", type=int, default=None, help="significant digits (default 6)")
    sweep.add_argument("--workers", type=int, default=None, help="thread count")
    sweep.add_argument("--progress", action="store_true", help="progress bar on stderr")
    sweep.set_defaults(handler=cmd_sweep, format="csv")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    level = logging.INFO if args.verbose else getattr(logging, get_log_level(), logging.WARNING)
    logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s %(message)s", force=True)

    problems = config.validate()
    if problems:
        return _fail(EXIT_USAGE, "bad configuration: " + "; ".join(problems))
    if getattr(args, "precision", None) is not None and args.precision < 1:
        return _fail(EXIT_USAGE, "--precision must be >= 1")

    try:
        return args.handler(args)
    except GraphParseError as exc:
        return _fail(EXIT_PARSE, f"parse error: {exc}")
    except DisconnectedGraph as exc:
        return _fail(EXIT_DISCONNECTED, str(exc))
    except NoConvergence as exc:
        return _fail(EXIT_NO_CONVERGENCE, str(exc))
    except (GraphError, AnalysisError) as exc:
        return _fail(EXIT_USAGE, str(exc))
    except OSError as exc:
        return _fail(EXIT_USAGE, f"I/O error: {exc}")


if __name__ == "__main__":
    sys.exit(main())
