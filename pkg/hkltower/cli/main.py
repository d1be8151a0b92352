"""This module contains the hkltower command line.

Every subcommand prints to stdout in the table, json or tsv format and logs to
stderr. The exit code is 0 on success, 2 when a computed value disagrees with
its closed form and 64 on a usage error.
"""
import argparse
import logging
import sys
from collections.abc import Sequence

from hkltower.borcherds.relations import mu_table as computed_mu_table
from hkltower.borcherds.relations import relation
from hkltower.divisors.calculus import (
    canonical_class,
    parse_class,
    restrict_polarization,
)
from hkltower.divisors.maps import MapLabel, tower_path
from hkltower.divisors.pullback import pullback
from hkltower.divisors.space_label import HH, SpaceLabel
from hkltower.dtower.decorated_lattice import U_WIDTH, make_dlattice
from hkltower.enums.disc_label import DiscLabel
from hkltower.enums.group_kind import GroupKind
from hkltower.enums.map_kind import MapKind
from hkltower.enums.output_format import OutputFormat
from hkltower.enums.provenance import Provenance
from hkltower.exceptions import (
    ClassExpressionError,
    ConsistencyError,
    LatticeError,
    RangeError,
    SpaceMismatchError,
    require_range,
)
from hkltower.file_managers.report_writer import render
from hkltower.managers.check_manager import CheckManager
from hkltower.picard.rank import rank_report
from hkltower.predictions.audit import positivity_audit
from hkltower.predictions.tower import centers, tower
from hkltower.predictions.walls import note_for_small_N, walls
from hkltower.rationals import as_rational
from hkltower.report_strings import table_titles
from hkltower.settings import (
    EXIT_OK,
    EXIT_SELF_CHECK,
    EXIT_USAGE,
    FIRST_RELATION_MAX_N,
    MIN_N,
    TOWER_MIN_N,
    default_output_format,
    log_level,
)
from hkltower.tower_data import mu_table

logger = logging.getLogger(__name__)


def _emit(payload, rows: list[dict], columns, output_format: OutputFormat) -> None:
    print(render(payload, rows, columns, output_format))


def _emit_line(payload, line: str, output_format: OutputFormat) -> None:
    """Print a one line result, or its payload for json and tsv."""
    if output_format is OutputFormat.table:
        print(line)
        return
    columns = list(payload) if isinstance(payload, dict) else ["result"]
    rows = [payload] if isinstance(payload, dict) else [{"result": line}]
    _emit(payload, rows, columns, output_format)


def _check_range(low: int, high: int) -> None:
    require_range("--min", low, MIN_N)
    if high < low:
        raise RangeError(f"ERROR: --max {high} is below --min {low}")


def cmd_rank(args: argparse.Namespace) -> int:
    """Print the terms of the dimension formula for N in --min..--max."""
    _check_range(args.min, args.max)
    reports = [rank_report(n) for n in range(args.min, args.max + 1)]
    rows = [report.to_dict() for report in reports]
    payload = rows[0] if len(rows) == 1 else rows
    _emit(payload, rows, table_titles["rank"] + ("closed_form_rank",), args.format)
    return EXIT_OK if all(report.matches for report in reports) else EXIT_SELF_CHECK


def cmd_relation(args: argparse.Namespace) -> int:
    """Print a Borcherds or Gritsenko relation."""
    found = relation(
        args.n,
        Provenance(args.which),
        GroupKind(args.group),
        DiscLabel(args.decoration),
    )
    line = str(found)
    if found.provenance is Provenance.gritsenko:
        line = found.render_solved(HH)
    _emit_line(found.to_dict(), line, args.format)
    return EXIT_OK


def cmd_walls(args: argparse.Namespace) -> int:
    """Print the predicted walls, or the note that replaces them below 15."""
    if args.n < TOWER_MIN_N:
        note = note_for_small_N(args.n)
        _emit_line({"N": args.n, "note": note}, note, args.format)
        return EXIT_OK
    report = walls(args.n)
    payload = report.to_dict()
    rows = [
        {
            "beta": wall["beta"],
            "k": wall["k"],
            "case": wall["case"],
            "centers": [center["description"] for center in wall["centers"]],
        }
        for wall in payload["walls"]
    ]
    _emit(payload, rows, table_titles["walls"], args.format)
    if args.format is OutputFormat.table:
        print(report.terminal_contraction())
    return EXIT_OK


def cmd_mu(args: argparse.Namespace) -> int:
    """Print μ(N) from root counts next to the reference table."""
    _check_range(args.min, args.max)
    computed = computed_mu_table(args.min, args.max)
    rows = [
        {"N": n, "mu": value, "expected": mu_table.get(n)}
        for n, value in computed.items()
    ]
    _emit(rows, rows, table_titles["mu"], args.format)
    matches = all(row["mu"] == row["expected"] for row in rows)
    return EXIT_OK if matches else EXIT_SELF_CHECK


def cmd_pullback(args: argparse.Namespace) -> int:
    """Pull a class back along one map."""
    label = MapLabel(MapKind(args.map), args.n)
    divisor = parse_class(args.divisor, label.codomain)
    image = pullback(label, divisor)
    _emit_line(image.to_dict(), str(image), args.format)
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    """Run the self-check suites and print one line per suite."""
    manager = CheckManager()
    names = None if args.all or not args.suite else args.suite
    passed = manager.run(names)
    for line in manager.summary_lines():
        print(line)
    return EXIT_OK if passed else EXIT_SELF_CHECK


def cmd_classify(args: argparse.Namespace) -> int:
    """Classify a vector of Λ_N given in U + U and D coordinates."""
    dlattice = make_dlattice(args.n, DiscLabel(args.decoration))
    vector = dlattice.vector_from_frame(args.u, args.d)
    payload = dlattice.classification(vector)
    _emit(payload, [payload], list(payload), args.format)
    return EXIT_OK


def cmd_canonical(args: argparse.Namespace) -> int:
    """Print the canonical class of a space."""
    divisor = canonical_class(SpaceLabel.parse(args.space))
    _emit_line(divisor.to_dict(), str(divisor), args.format)
    return EXIT_OK


def _parse_path(n: int, text: str) -> list[MapLabel]:
    kinds = [MapKind(part.strip()) for part in text.split(",") if part.strip()]
    depth = 0
    while depth < len(kinds) and kinds[depth] is MapKind.f:
        depth += 1
    return tower_path(n, depth, tuple(kinds[depth:]))


def cmd_restrict(args: argparse.Namespace) -> int:
    """Restrict λ + βΔ(N) along a path such as "f,f,l"."""
    path = _parse_path(args.n, args.path)
    divisor = restrict_polarization(args.n, path, as_rational(args.beta))
    _emit_line(divisor.to_dict(), str(divisor), args.format)
    return EXIT_OK


def cmd_tower(args: argparse.Namespace) -> int:
    """Print Tower(N) with t values and the centers marked."""
    selected = set(centers(args.n))
    rows = []
    for stratum in tower(args.n):
        row = stratum.to_dict()
        row["center"] = stratum in selected
        rows.append(row)
    columns = ("description", "kind", "M", "dim", "t_value", "center")
    _emit(rows, rows, columns, args.format)
    return EXIT_OK


def cmd_audit(args: argparse.Namespace) -> int:
    """Print the positivity audit of λ + βΔ(N) on Tower(N)."""
    report = positivity_audit(args.n, as_rational(args.beta))
    payload = report.to_dict()
    columns = ("stratum", "t_value", "lambda_coeff", "remainder", "passes")
    _emit(payload, payload["rows"], columns, args.format)
    return EXIT_OK


def _format(value: str) -> OutputFormat:
    try:
        return OutputFormat(value.strip().lower())
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown format {value!r}") from None


def build_parser() -> argparse.ArgumentParser:
    """Build the parser with one subcommand per calculator."""
    parser = argparse.ArgumentParser(
        prog="hkltower", description="Exact lattice arithmetic for the D-tower."
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        type=_format,
        default=default_output_format(),
        help="table, json or tsv (default from HKL_FORMAT, else table)",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    rank = commands.add_parser("rank", parents=[common], help="Picard ranks")
    rank.add_argument("--min", type=int, required=True)
    rank.add_argument("--max", type=int, required=True)
    rank.set_defaults(handler=cmd_rank)

    rel = commands.add_parser("relation", parents=[common], help="relations")
    rel.add_argument("--n", type=int, required=True)
    rel.add_argument(
        "--which", choices=[p.value for p in Provenance], default="first"
    )
    rel.add_argument(
        "--group", choices=[g.value for g in GroupKind], default="decorated"
    )
    rel.add_argument(
        "--decoration", choices=["xi", "zeta", "zeta_prime"], default="xi"
    )
    rel.set_defaults(handler=cmd_relation)

    wall = commands.add_parser("walls", parents=[common], help="predicted walls")
    wall.add_argument("--n", type=int, required=True)
    wall.set_defaults(handler=cmd_walls)

    mu = commands.add_parser("mu", parents=[common], help="unigonal coefficients")
    mu.add_argument("--min", type=int, default=MIN_N)
    mu.add_argument("--max", type=int, default=FIRST_RELATION_MAX_N)
    mu.set_defaults(handler=cmd_mu)

    pull = commands.add_parser("pullback", parents=[common], help="pull a class back")
    pull.add_argument("--map", choices=[k.value for k in MapKind], required=True)
    pull.add_argument(
        "--n", type=int, required=True, help="N for f, l, m, q and rho; k for p, r"
    )
    pull.add_argument("--class", dest="divisor", required=True)
    pull.set_defaults(handler=cmd_pullback)

    check = commands.add_parser("check", parents=[common], help="self-checks")
    check.add_argument("--all", action="store_true")
    check.add_argument(
        "--suite", action="append", choices=CheckManager().suite_names
    )
    check.set_defaults(handler=cmd_check)

    classify = commands.add_parser("classify", parents=[common], help="vector kind")
    classify.add_argument("--n", type=int, required=True)
    classify.add_argument("--u", type=int, nargs=U_WIDTH, default=[0] * U_WIDTH)
    classify.add_argument("--d", type=int, nargs="+", required=True)
    classify.add_argument(
        "--decoration", choices=["xi", "zeta", "zeta_prime"], default="xi"
    )
    classify.set_defaults(handler=cmd_classify)

    canonical = commands.add_parser("canonical", parents=[common], help="K of a space")
    canonical.add_argument("--space", required=True, help='e.g. "F(19)"')
    canonical.set_defaults(handler=cmd_canonical)

    restrict = commands.add_parser(
        "restrict", parents=[common], help="restrict λ+βΔ"
    )
    restrict.add_argument("--n", type=int, required=True)
    restrict.add_argument("--path", required=True, help='e.g. "f,f,l"')
    restrict.add_argument("--beta", required=True)
    restrict.set_defaults(handler=cmd_restrict)

    strata = commands.add_parser("tower", parents=[common], help="Tower(N)")
    strata.add_argument("--n", type=int, required=True)
    strata.set_defaults(handler=cmd_tower)

    audit = commands.add_parser("audit", parents=[common], help="positivity audit")
    audit.add_argument("--n", type=int, required=True)
    audit.add_argument("--beta", required=True)
    audit.set_defaults(handler=cmd_audit)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Run one subcommand and return its exit code."""
    logging.basicConfig(
        stream=sys.stderr,
        level=log_level(),
        format="%(levelname)s %(name)s: %(message)s",
    )
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_request:
        return EXIT_OK if exit_request.code in (0, None) else EXIT_USAGE
    try:
        return args.handler(args)
    except ConsistencyError as error:
        print(error, file=sys.stderr)
        return EXIT_SELF_CHECK
    except (
        RangeError,
        ClassExpressionError,
        SpaceMismatchError,
        LatticeError,
        ValueError,
    ) as error:
        print(error, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
