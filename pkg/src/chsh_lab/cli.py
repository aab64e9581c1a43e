"""Command-line entry point.

Exit codes:
  0  success
  2  usage error (bad flags, unknown format, index out of range)
  3  scan only: the population CHSH value exceeds the bound |S| > 2
  4  input/output error (unreadable input, malformed CSV, unwritable output)

The default output format comes from CHSH_LAB_FORMAT when set; --format wins.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from pathlib import Path

from . import __version__
from . import bell_suite as suite
from . import diffraction, stats
from .core import DEFAULT_GRID_SIZE, ChshSetting, DomainError, equal_spacing_setting, make_grid
from .hv_model import MC_ALGORITHM, mc_expected_value
from .report import FORMATS, Row, Table, UsageError, render_report

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BOUND = 3
EXIT_IO = 4
FORMAT_ENV = "CHSH_LAB_FORMAT"


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _angle(text: str) -> float:
    value = float(text)
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"angle must be finite: {text!r}")
    return value


def _setting(text: str) -> ChshSetting:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("--setting needs four comma-separated angles a,b,a',b'")
    try:
        return ChshSetting(*(_angle(p) for p in parts))
    except (ValueError, DomainError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _index_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(",") if p.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {text!r}") from None


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer: {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=None,
                        help=f"output format (default: ${FORMAT_ENV} or json)")
    common.add_argument("--output", "-o", type=Path, default=None,
                        help="output file; a directory for multi-table CSV output")
    common.add_argument("--grid-size", type=_positive_int, default=DEFAULT_GRID_SIZE,
                        help="number of polarization states (default: %(default)s)")
    common.add_argument("--seed", type=int, default=None, help="seed for Monte-Carlo estimates")
    common.add_argument("--strict", action="store_true", help="treat malformed input rows as fatal")

    parser = argparse.ArgumentParser(
        prog="chsh-lab",
        description="CHSH quantities for the polarization hidden-variable and QM models.",
        epilog="Exit codes: 0 ok, 2 usage error, 3 population |S| > 2 (scan), 4 I/O error.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tables", parents=[common], help="per-state pp/nn/pn/np/E matrices")
    p.add_argument("--lambda-index", type=int, default=1,
                   help="0-based polarization state index (default: 1, i.e. 11.25 deg)")

    p = sub.add_parser("scan", parents=[common], help="per-state CHSH values for one setting")
    p.add_argument("--theta", type=_angle, default=None, help="equal-spacing step in degrees")
    p.add_argument("--setting", type=_setting, default=None, help="explicit a,b,a',b' in degrees")

    p = sub.add_parser("compare", parents=[common], help="population CHSH: hidden variables vs QM vs lab")
    p.add_argument("--theta", type=_angle, nargs="+", default=list(suite.ref.COMPARISON_THETAS))
    p.add_argument("--mc-samples", type=int, default=None,
                   help="also estimate S by Monte-Carlo sampling of the polarization angle")

    p = sub.add_parser("breakdown", parents=[common], help="population correlator components")
    p.add_argument("--theta", type=_angle, default=22.5)

    p = sub.add_parser("suite", parents=[common], help="population CHSH test cases")
    p.add_argument("--all", action="store_true", help="emit every regenerated table")

    p = sub.add_parser("diffract", parents=[common], help="diffraction maxima positions")
    p.add_argument("--d", default="0.01mm", help="slit spacing with unit (default: %(default)s)")
    p.add_argument("--x", default="2.0m", help="screen distance with unit (default: %(default)s)")
    p.add_argument("--orders", type=int, default=2, help="highest order J (default: %(default)s)")
    p.add_argument("--wavelengths", default="485,565,750nm", help="comma list (default: %(default)s)")

    p = sub.add_parser("stats", parents=[common], help="grouped statistics of a CSV file")
    p.add_argument("--input", type=Path, required=True)
    p.add_argument("--group-by", required=True, help="comma-separated grouping columns")
    p.add_argument("--value", required=True, help="numeric value column")

    p = sub.add_parser("series", parents=[common], help="plot data series")
    p.add_argument("--kind", choices=suite.SERIES_KINDS, required=True)
    p.add_argument("--b-indices", type=_index_list, default=suite.FIG2_B_INDICES,
                   help="0-based filter B indices for fig2")
    p.add_argument("--lambda-indices", type=_index_list, default=suite.FIG3_LAMBDA_INDICES,
                   help="0-based polarization state indices for fig3")
    return parser


def _resolve_format(args: argparse.Namespace) -> str:
    if args.format is not None:
        return args.format
    env = os.environ.get(FORMAT_ENV)
    if env:
        if env not in FORMATS:
            raise CliError(f"{FORMAT_ENV}={env!r} is not one of {', '.join(FORMATS)}", EXIT_USAGE)
        return env
    return "json"


def _metadata(args: argparse.Namespace) -> dict:
    return {"tool": f"chsh-lab {__version__}", "command": args.command}


def _cmd_tables(args, grid):
    try:
        tables = suite.regenerate_per_state_tables(args.lambda_index, grid)
    except DomainError as exc:
        raise CliError(str(exc), EXIT_USAGE) from None
    return suite.per_state_tables(tables, grid), EXIT_OK


def _cmd_scan(args, grid):
    if (args.theta is None) == (args.setting is None):
        raise CliError("scan needs exactly one of --theta or --setting", EXIT_USAGE)
    setting = args.setting if args.setting is not None else equal_spacing_setting(args.theta)
    result = suite.scan_individual(setting, grid)
    code = EXIT_BOUND if suite.violates_bound(result.population_s) else EXIT_OK
    return [suite.scan_table(result, grid)], code


def _cmd_compare(args, grid, meta):
    rows = [suite.compare_models(t, grid) for t in args.theta]
    table = suite.comparison_table(rows)
    if args.mc_samples is not None:
        if args.mc_samples < 2:
            raise CliError("--mc-samples must be >= 2", EXIT_USAGE)
        seed = 0 if args.seed is None else args.seed
        meta.update(mc_seed=seed, mc_samples=args.mc_samples, mc_algorithm=MC_ALGORITHM)
        for row, comparison in zip(table.rows, rows):
            setting = equal_spacing_setting(comparison.theta)
            estimate, var = 0.0, 0.0
            for sign, (x, y) in zip((1, -1, 1, 1), setting.pairs()):
                e, se = mc_expected_value(x, y, args.mc_samples, seed)
                estimate += sign * e
                var += se * se
            row.computed["mc_s"] = estimate
            row.computed["mc_s_std_error"] = math.sqrt(var)
    return [table], EXIT_OK


def _cmd_diffract(args):
    try:
        setup = diffraction.DiffractionSetup(
            slit_spacing=diffraction.parse_length(args.d),
            screen_distance=diffraction.parse_length(args.x),
            wavelengths=diffraction.parse_wavelengths(args.wavelengths),
            max_order=args.orders,
        )
    except (ValueError, DomainError) as exc:
        raise CliError(str(exc), EXIT_USAGE) from None
    return [diffraction.spectrum_table(setup, diffraction.spectrum(setup))], EXIT_OK


def _cmd_stats(args, meta):
    columns = [c.strip() for c in args.group_by.split(",") if c.strip()]
    if not columns:
        raise CliError("--group-by needs at least one column", EXIT_USAGE)
    try:
        result = stats.ingest_csv(args.input, columns, args.value, strict=args.strict)
    except OSError as exc:
        raise CliError(f"cannot read {args.input}: {exc}", EXIT_IO) from None
    except (stats.SchemaError, stats.RowError) as exc:
        raise CliError(f"{args.input}: {exc}", EXIT_IO) from None
    for diag in result.diagnostics:
        print(f"{args.input}:{diag.line}: {diag.message}", file=sys.stderr)
    meta.update(
        records=len(result.records),
        skipped_rows=len(result.diagnostics),
        std_convention=stats.STD_CONVENTION,
    )
    tables = []
    if result.records:
        tables.append(stats.summary_table(stats.group_summary(result.records), columns))
    else:
        tables.append(Table(id="group_summary", caption="Grouped summary of the input records"))
    tables.append(stats.reference_summary_table())
    return tables, EXIT_OK


def _cmd_suite(args, grid):
    tables = [suite.population_suite_table(suite.run_population_suite(grid))]
    if args.all:
        tables += [
            suite.individual_bounds_table(grid),
            *suite.per_state_tables(suite.regenerate_per_state_tables(min(1, grid.n_states - 1), grid), grid),
            suite.per_state_s_table(grid),
            suite.population_e_table(grid),
            suite.comparison_table([suite.compare_models(t, grid) for t in suite.ref.COMPARISON_THETAS]),
            suite.breakdown_table(suite.correlator_breakdown(equal_spacing_setting(22.5), grid)),
            diffraction.spectrum_table(diffraction.DEFAULT_SETUP, diffraction.spectrum(diffraction.DEFAULT_SETUP)),
            stats.reference_summary_table(),
        ]
    return tables, EXIT_OK


def _cmd_series(args, grid):
    try:
        series = suite.emit_series(args.kind, grid, args.b_indices, args.lambda_indices)
    except UsageError as exc:
        raise CliError(str(exc), EXIT_USAGE) from None
    return [suite.series_table(args.kind, series)], EXIT_OK


def _write(documents: dict[str, str], output: Path | None) -> None:
    if output is None:
        sys.stdout.write("\n".join(documents.values()))
        return
    if len(documents) == 1:
        output.parent.mkdir(parents=True, exist_ok=True)
        output.write_text(next(iter(documents.values())), encoding="utf-8", newline="\n")
        return
    output.mkdir(parents=True, exist_ok=True)
    for name, text in documents.items():
        (output / name).write_text(text, encoding="utf-8", newline="\n")


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        fmt = _resolve_format(args)
        grid = make_grid(args.grid_size)
        meta = _metadata(args)
        if args.command == "tables":
            tables, code = _cmd_tables(args, grid)
        elif args.command == "scan":
            tables, code = _cmd_scan(args, grid)
        elif args.command == "compare":
            tables, code = _cmd_compare(args, grid, meta)
        elif args.command == "breakdown":
            tables, code = [suite.breakdown_table(suite.correlator_breakdown(equal_spacing_setting(args.theta), grid))], EXIT_OK
        elif args.command == "suite":
            tables, code = _cmd_suite(args, grid)
        elif args.command == "diffract":
            tables, code = _cmd_diffract(args)
        elif args.command == "stats":
            tables, code = _cmd_stats(args, meta)
        else:
            tables, code = _cmd_series(args, grid)
        documents = render_report(tables, fmt, n_states=grid.n_states, metadata=meta)
        try:
            _write(documents, args.output)
        except OSError as exc:
            raise CliError(f"cannot write output: {exc}", EXIT_IO) from None
    except CliError as exc:
        print(f"chsh-lab: error: {exc}", file=sys.stderr)
        return exc.code
    return code


def main() -> None:
    sys.exit(run())
