"""Command line entry point: ``weakform analyze`` and ``weakform simulate``.

Exit codes: 0 success, 1 input or format error, 2 numerical failure.
"""

from __future__ import annotations

import argparse
import sys
from contextlib import contextmanager
from typing import Iterator, Optional, Sequence, TextIO

from .errors import DegenerateSeriesError, InvalidInputError, SingularDesignError
from .io import ingest_csv, write_csv
from .report import AnalysisConfig, analyze, render
from .series import month_of
from .simulate import SimSpec, simulate

EXIT_OK, EXIT_INPUT, EXIT_NUMERIC = 0, 1, 2

_CHANGE = {"diff": "arithmetic_diff", "log": "log_return"}
_KS = {"standardized": "standardized", "raw": "raw_standard_normal"}
_FORMAT = {"md": "markdown", "markdown": "markdown", "csv": "csv", "json": "json"}
_MODEL = {"random-walk": "random_walk", "ar1": "ar1", "iid": "iid_changes"}


@contextmanager
def _open_out(path: Optional[str]) -> Iterator[TextIO]:
    if path in (None, "-", "stdout"):
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def _cmd_analyze(args: argparse.Namespace) -> int:
    config = AnalysisConfig(
        change_mode=_CHANGE[args.change_mode],
        max_lag=args.max_lag,
        adf_lags=args.adf_lags,
        adf_deterministic="constant_trend" if args.adf_trend else "constant",
        ks_mode=_KS[args.ks_mode],
    )
    if args.input == "-":
        series = ingest_csv(sys.stdin)
    else:
        with open(args.input, encoding="utf-8", newline="") as fh:
            series = ingest_csv(fh)
    text = render(analyze(series, config), _FORMAT[args.format])
    with _open_out(args.output) as out:
        out.write(text)
    return EXIT_OK


def _cmd_simulate(args: argparse.Namespace) -> int:
    spec = SimSpec(
        model=_MODEL[args.model],
        length=args.length,
        drift=args.drift,
        sigma=args.sigma,
        phi=args.phi,
        start_price=args.start,
        seed=args.seed,
        start_month=month_of(args.start_month),
        label=args.label or "",
    )
    series = simulate(spec)
    for note in series.notes:
        print(f"note: {note}", file=sys.stderr)
    with _open_out(args.output) as out:
        write_csv([series], out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weakform",
        description="Random-walk / weak-form efficiency tests for monthly index closes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="run the test battery on a wide CSV of closes")
    a.add_argument("--input", required=True, help="CSV path, or - for stdin")
    a.add_argument("--change-mode", choices=sorted(_CHANGE), default="diff")
    a.add_argument("--max-lag", type=int, default=20)
    a.add_argument("--adf-lags", type=int, default=1)
    a.add_argument("--adf-trend", action="store_true", help="add a linear trend to the ADF regression")
    a.add_argument("--ks-mode", choices=sorted(_KS), default="standardized")
    a.add_argument("--format", choices=["md", "markdown", "csv", "json"], default="md")
    a.add_argument("--output", default="-", help="output path, or - for stdout")
    a.set_defaults(func=_cmd_analyze)

    s = sub.add_parser("simulate", help="write a seeded synthetic series as CSV")
    s.add_argument("--model", choices=sorted(_MODEL), default="random-walk")
    s.add_argument("--length", type=int, default=118)
    s.add_argument("--drift", type=float, default=0.0)
    s.add_argument("--sigma", type=float, default=1.0)
    s.add_argument("--phi", type=float, default=0.0)
    s.add_argument("--start", type=float, default=100.0, help="starting price")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--start-month", default="2005-09")
    s.add_argument("--label", default=None)
    s.add_argument("--output", default="-")
    s.set_defaults(func=_cmd_simulate)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DegenerateSeriesError, SingularDesignError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (InvalidInputError, OSError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
