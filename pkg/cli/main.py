"""Command-line front end: eval, approx, check, table and genfun.

Exit codes: 0 success, 1 an identity check found counterexamples, 2 invalid input.
"""

from __future__ import annotations

import argparse
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from pydantic import ValidationError

from cli.run_config import RunConfig
from config.settings import AppSettings, load_settings
from functions.library import default_registry
from identities.report import encode
from reports.summary import build_summary
from reports.writer import ReportWriter
from simplex.errors import BernsteinError
from simplex.multiindex import MultiIndex, SimplexPoint
from workbench.core import Workbench
from workbench.suites import default_suites

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_INVALID = 2

SUITE_FLAGS = ("thm1", "thm2", "thm3", "thm4")


# -- parsing helpers -------------------------------------------------------


def parse_scalar(token: str) -> Fraction | float:
    """"1/4" and "3" are exact; "0.25" is a float."""
    token = token.strip()
    try:
        if "/" in token or token.lstrip("+-").isdigit():
            return Fraction(token)
        return float(token)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {token!r}") from None


def parse_scalars(text: str) -> list[Fraction | float]:
    return [parse_scalar(token) for token in text.split(",")]


def parse_rational(token: str) -> Fraction:
    """"0.05" and "1/20" both give Fraction(1, 20)."""
    try:
        return Fraction(token.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {token!r}") from None


def parse_rationals(text: str) -> list[Fraction]:
    return [parse_rational(token) for token in text.split(",")]


def parse_ints(text: str) -> list[int]:
    try:
        return [int(token) for token in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a list of integers: {text!r}") from None


def parse_names(text: str) -> list[str]:
    return [token.strip() for token in text.split(",") if token.strip()]


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", type=Path, default=None, help="write to a file, not stdout")
    common.add_argument("--format", choices=["json", "csv"], default=None)
    common.add_argument("--seed", type=int, default=None, help="seed for sampled points")
    common.add_argument("--config", type=Path, default=None, help="settings JSON file")
    common.add_argument("-v", "--verbose", action="count", default=0)
    common.add_argument("--k", type=int, default=None, help="simplex dimension")

    parser = argparse.ArgumentParser(
        prog="simplex-bernstein",
        description="Bernstein polynomials on the k-simplex: evaluation, identities, tables.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_eval = sub.add_parser("eval", parents=[common], help="evaluate B_{v,n}(x) or B_{v,n}(x|q)")
    p_eval.add_argument("--n", type=int, required=True)
    p_eval.add_argument("--v", type=parse_ints, required=True, help="e.g. 1,0")
    p_eval.add_argument("--x", type=parse_scalars, required=True, help="e.g. 1/2,1/4 or 0.5,0.25")
    p_eval.add_argument("--q", type=parse_scalar, default=None)

    p_approx = sub.add_parser(
        "approx",
        parents=[common],
        help="evaluate B_n(f|x) next to f(x)",
        epilog="functions:\n" + default_registry().to_description(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p_approx.add_argument("--f", required=True, help="function label")
    p_approx.add_argument("--n", type=int, required=True)
    p_approx.add_argument("--x", type=parse_scalars, required=True)

    p_check = sub.add_parser(
        "check",
        parents=[common],
        help="run identity suites",
        epilog="suites:\n" + default_suites().to_description(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    for flag in SUITE_FLAGS:
        p_check.add_argument(f"--{flag}", action="store_true")
    p_check.add_argument("--all", action="store_true")
    p_check.add_argument("--n-max", type=int, default=None)
    p_check.add_argument("--weight", choices=["convolution", "printed", "perturbed"], default=None)
    p_check.add_argument("--points", type=int, default=None, help="sample points per case")
    p_check.add_argument("--q", type=parse_rationals, default=None, help="e.g. 1/4,1/2,3/4")

    p_table = sub.add_parser(
        "table",
        parents=[common],
        help="convergence table as CSV",
        epilog="functions:\n" + default_registry().to_description(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p_table.add_argument("--f", type=parse_names, default=None, help="function labels")
    p_table.add_argument("--degrees", type=parse_ints, default=None)
    p_table.add_argument("--grid-step", type=parse_rational, default=None)

    p_gen = sub.add_parser("genfun", parents=[common], help="generating series vs closed form")
    p_gen.add_argument("--v", type=parse_ints, required=True)
    p_gen.add_argument("--x", type=parse_scalars, required=True)
    p_gen.add_argument("--t", type=float, default=None)
    p_gen.add_argument("--N", type=int, default=None, dest="truncation")

    return parser


def to_run_config(args: argparse.Namespace, settings: AppSettings) -> RunConfig:
    """Merge parsed flags over settings defaults."""
    checks = settings.checks
    v = MultiIndex(tuple(args.v)) if getattr(args, "v", None) is not None else None
    x = SimplexPoint(tuple(args.x)) if getattr(args, "x", None) is not None else None
    k = args.k
    if k is None:
        k = next((obj.k for obj in (v, x) if obj is not None), checks.k)

    fields: dict = {
        "subcommand": args.subcommand,
        "k": k,
        "output": args.output,
        "seed": args.seed if args.seed is not None else checks.seed,
        "v": v,
        "x": x,
    }
    if args.subcommand == "eval":
        fields.update(n=args.n, q=None if args.q is None else float(args.q))
    elif args.subcommand == "approx":
        fields.update(function=args.f, n=args.n)
    elif args.subcommand == "check":
        suites = list(SUITE_FLAGS) if args.all else [s for s in SUITE_FLAGS if getattr(args, s)]
        fields.update(
            suites=suites,
            n_max=args.n_max if args.n_max is not None else checks.n_max,
            points=args.points if args.points is not None else checks.points_per_case,
            weight=args.weight or checks.weight,
            qs=[float(q) for q in (args.q if args.q is not None else checks.q_values)],
        )
    elif args.subcommand == "table":
        convergence = settings.convergence
        fields.update(
            functions=args.f or convergence.functions,
            degrees=args.degrees or convergence.degrees,
            grid_step=args.grid_step if args.grid_step is not None else convergence.grid_step,
        )
    elif args.subcommand == "genfun":
        generating = settings.generating
        fields.update(
            t=args.t if args.t is not None else generating.t,
            truncation=(
                args.truncation if args.truncation is not None else generating.truncation
            ),
        )
    default_format = "csv" if args.subcommand == "table" else "json"
    fields["format"] = args.format or default_format
    return RunConfig(**fields)


# -- subcommands -----------------------------------------------------------


def cmd_eval(config: RunConfig, bench: Workbench, writer: ReportWriter) -> int:
    value = bench.evaluate(config.v, config.n, config.x, config.q)
    record = {
        "v": list(config.v.entries),
        "n": config.n,
        "x": [_plain(c) for c in config.x],
        "value": _plain(value),
    }
    if config.q is not None:
        record["q"] = config.q
    if config.format == "csv":
        writer.write_csv(
            ("v", "n", "x", "q", "value"),
            [(
                " ".join(map(str, config.v.entries)),
                config.n,
                " ".join(str(c) for c in config.x),
                "" if config.q is None else config.q,
                value if isinstance(value, float) else str(value),
            )],
        )
    else:
        writer.write_json(record)
    return EXIT_OK


def cmd_approx(config: RunConfig, bench: Workbench, writer: ReportWriter) -> int:
    result = bench.approximate(config.function, config.n, config.x)
    if config.format == "csv":
        writer.write_csv(
            ("function", "n", "x", "value", "f", "error"),
            [(
                result.function,
                config.n,
                " ".join(str(c) for c in config.x),
                result.value,
                result.exact,
                result.error,
            )],
        )
    else:
        writer.write_json(
            {
                "function": result.function,
                "k": config.k,
                "n": config.n,
                "x": [_plain(c) for c in config.x],
                "value": result.value,
                "f": result.exact,
                "error": result.error,
            }
        )
    return EXIT_OK


def cmd_check(config: RunConfig, bench: Workbench, writer: ReportWriter) -> int:
    params = bench.suite_params(
        k=config.k,
        n_max=config.n_max,
        seed=config.seed,
        points=config.points,
        weight=config.weight,
        qs=config.qs,
    )
    results = bench.run_checks(config.suites, params)
    writer.write_json(ReportWriter.check_payload(results))
    sys.stderr.write(
        build_summary(
            results, k=config.k, n_max=config.n_max, weight=config.weight, seed=config.seed
        )
    )
    failed = any(not report.passed for reports in results.values() for report in reports)
    return EXIT_COUNTEREXAMPLE if failed else EXIT_OK


def cmd_table(config: RunConfig, bench: Workbench, writer: ReportWriter) -> int:
    rows = bench.convergence(config.functions, config.k, config.degrees, config.grid_step)
    writer.write_convergence(rows, config.format)
    return EXIT_OK


def cmd_genfun(config: RunConfig, bench: Workbench, writer: ReportWriter) -> int:
    pair = bench.generating(config.v, config.x, config.t, config.truncation)
    if config.format == "csv":
        writer.write_csv(("partial", "closed", "diff"), [(pair.partial, pair.closed, pair.diff)])
    else:
        writer.write_json(
            {
                "v": list(config.v.entries),
                "t": config.t,
                "N": config.truncation,
                "partial": pair.partial,
                "closed": pair.closed,
                "diff": pair.diff,
            }
        )
    return EXIT_OK


COMMANDS = {
    "eval": cmd_eval,
    "approx": cmd_approx,
    "check": cmd_check,
    "table": cmd_table,
    "genfun": cmd_genfun,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.config is not None and not args.config.exists():
            raise FileNotFoundError(f"settings file not found: {args.config}")
        settings = load_settings(args.config)
        _configure_logging(settings, args.verbose)
        config = to_run_config(args, settings)
        logger.debug("run config: %s", config)
        bench = Workbench(settings)
        writer = ReportWriter(config.output)
        return COMMANDS[config.subcommand](config, bench, writer)
    except (BernsteinError, ValidationError, OSError, OverflowError) as exc:
        print(f"error: {type(exc).__name__}: {_diagnostic(exc)}", file=sys.stderr)
        return EXIT_INVALID


def _configure_logging(settings: AppSettings, verbose: int) -> None:
    level = settings.log_level_value
    if verbose == 1:
        level = min(level, logging.INFO)
    elif verbose >= 2:
        level = logging.DEBUG
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )


def _plain(value: object) -> object:
    if isinstance(value, Fraction):
        return encode(value).model_dump()
    return value


def _diagnostic(exc: Exception) -> str:
    """One line naming the violated constraint."""
    if isinstance(exc, ValidationError):
        first = exc.errors()[0]
        where = ".".join(str(part) for part in first["loc"])
        return f"{where}: {first['msg']}" if where else first["msg"]
    return str(exc).splitlines()[0] if str(exc) else ""
