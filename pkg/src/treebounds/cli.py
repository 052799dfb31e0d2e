"""Command-line interface: ``treebounds <subcommand> ...``.

Exit codes: 0 success, 1 usage or input error, 2 bound violation or
metric-dimension method disagreement.
"""

from __future__ import annotations

import argparse
import sys

from . import bounds, enumeration, harness
from .graph import TreeError, parse_edge_list
from .indices import M2_PATH_ERRATUM, Index, invariant_record
from .metric_dimension import (
    BRUTE_FORCE_MAX_ORDER,
    Method,
    metric_dimension_bruteforce,
    metric_dimension_tree,
)

EXIT_OK, EXIT_USAGE, EXIT_VIOLATION = 0, 1, 2

ERRATUM_NOTE = f"Note: {M2_PATH_ERRATUM}."


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _int_range(lo: int, hi: int):
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None
        if not lo <= value <= hi:
            raise argparse.ArgumentTypeError(f"{value} not in [{lo}, {hi}]")
        return value

    return parse


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid number {text!r}") from None
    if not value > 0:
        raise argparse.ArgumentTypeError(f"{value} must be positive")
    return value


def _read_tree(path: str | None):
    if path is None or path == "-":
        text = sys.stdin.read()
    else:
        with open(path) as fh:
            text = fh.read()
    return parse_edge_list(text)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="treebounds",
        description="Zagreb/ABC indices, metric dimension and bound verification for trees.",
        epilog=ERRATUM_NOTE,
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    edge_help = "edge-list file: one 'u v' per line, 0-based ids, '#' comments; '-' or omitted reads stdin"
    jobs = _int_range(1, 256)

    p = sub.add_parser("enum", help="list one tree per isomorphism class", epilog=ERRATUM_NOTE)
    p.add_argument("--n", type=_int_range(1, enumeration.MAX_ORDER), required=True)
    p.add_argument(
        "--format",
        choices=["level", "edges"],
        default="level",
        help="comma-separated level sequence, or edge-list blocks separated by blank lines",
    )

    p = sub.add_parser(
        "indices",
        help="print n, M1, M2 and ABC of a tree",
        description="Prints 'n=<n> m1=<int> m2=<int> abc=<15 significant digits>'.",
        epilog=ERRATUM_NOTE,
    )
    p.add_argument("input", nargs="?", help=edge_help)

    p = sub.add_parser("metric-dim", help="metric dimension of a tree", epilog=ERRATUM_NOTE)
    p.add_argument("input", nargs="?", help=edge_help)
    p.add_argument(
        "--method",
        choices=[m.value for m in Method],
        default="both",
        help="'both' runs brute force and the leg formula and exits 2 if they disagree",
    )
    p.add_argument(
        "--no-prune",
        action="store_true",
        help="brute force over all vertex subsets instead of leaf subsets only",
    )

    p = sub.add_parser("bounds", help="evaluate all five bounds on a tree (n >= 4)", epilog=ERRATUM_NOTE)
    p.add_argument("input", nargs="?", help=edge_help)
    p.add_argument("--eps-method", choices=[m.value for m in Method], default="tree")

    p = sub.add_parser(
        "lemma-scan",
        help="numerically scan one of the three lemma inequalities",
        description="Lemma 1: upsilon(x) > 0; lemma 2: g(x,y) <= 0; "
        "lemma 3: F(x,y) > sqrt(5)/(2 sqrt(2)). Grid x in [3, x-max], y in [2, y-max].",
        epilog=ERRATUM_NOTE,
    )
    p.add_argument("--lemma", choices=["1", "2", "3"], required=True)
    p.add_argument("--x-max", type=_int_range(3, 10**7), required=True)
    p.add_argument("--y-max", type=_int_range(2, 10**7), default=2)
    p.add_argument("--real-step", type=_positive_float, default=None)
    p.add_argument("--jobs", type=jobs, default=1)

    p = sub.add_parser(
        "verify",
        help="exhaustively check all bounds over every tree of each order",
        description="Writes one CSV row per tree: " + ",".join(harness.CSV_HEADER)
        + ". Flags are in order AbcMax, M1Lower, M1Upper, M2Lower, M2Upper.",
        epilog=ERRATUM_NOTE,
    )
    p.add_argument("--min-n", type=_int_range(4, enumeration.MAX_ORDER), required=True)
    p.add_argument("--max-n", type=_int_range(4, enumeration.MAX_ORDER), required=True)
    p.add_argument("--eps-method", choices=[m.value for m in Method], default="both")
    p.add_argument("--out", required=True, help="CSV output path")
    p.add_argument("--jobs", type=jobs, default=1)

    p = sub.add_parser("extremal", help="minimum and maximum of an index over all trees", epilog=ERRATUM_NOTE)
    p.add_argument("--n", type=_int_range(1, enumeration.MAX_ORDER), required=True)
    p.add_argument("--index", choices=[i.value for i in Index], required=True)
    return parser


def _cmd_enum(args, out) -> int:
    for t in enumeration.enumerate_trees(args.n):
        if args.format == "level":
            out.write(enumeration.format_code(enumeration.canonical_code(t), ",") + "\n")
        else:
            out.write(t.to_edge_list() + "\n")
    return EXIT_OK


def _cmd_indices(args, out) -> int:
    rec = invariant_record(_read_tree(args.input), eps=0)
    out.write(f"n={rec.n} m1={rec.m1} m2={rec.m2} abc={rec.abc:.15g}\n")
    return EXIT_OK


def _cmd_metric_dim(args, out) -> int:
    t = _read_tree(args.input)
    method = Method(args.method)
    if method is not Method.TREE and t.order > BRUTE_FORCE_MAX_ORDER:
        raise UsageError(f"brute force supports n <= {BRUTE_FORCE_MAX_ORDER}, got {t.order}")
    status = EXIT_OK
    if method is Method.TREE:
        res = metric_dimension_tree(t)
    else:
        res = metric_dimension_bruteforce(t, leaves_only=not args.no_prune)
        if method is Method.BOTH:
            fast = metric_dimension_tree(t)
            if fast.eps != res.eps:
                print(
                    f"treebounds: method disagreement: brute eps={res.eps}, tree eps={fast.eps}",
                    file=sys.stderr,
                )
                status = EXIT_VIOLATION
    witness = ",".join(map(str, res.witness))
    out.write(f"eps={res.eps} witness={witness} method={method.value}\n")
    return status


def _cmd_bounds(args, out) -> int:
    t = _read_tree(args.input)
    if t.order < 4:
        raise UsageError(f"bounds need n >= 4, got {t.order}")
    method = Method(args.eps_method)
    if method is not Method.TREE and t.order > BRUTE_FORCE_MAX_ORDER:
        raise UsageError(f"brute force supports n <= {BRUTE_FORCE_MAX_ORDER}, got {t.order}")
    result = harness.evaluate_code(enumeration.canonical_code(t), method)
    rec = result.record
    out.write(f"n={rec.n}\neps={rec.eps}\nm1={rec.m1}\nm2={rec.m2}\nabc={rec.abc:.15g}\n")
    for ev in result.evaluations:
        name = ev.theorem.value
        out.write(
            f"{name}.bound={harness._fmt(ev.bound_value)}\n"
            f"{name}.slack={harness._fmt(ev.slack)}\n"
            f"{name}.equality={int(ev.equality)}\n"
            f"{name}.violated={int(ev.violated)}\n"
        )
    if result.disagreement is not None:
        return EXIT_VIOLATION
    return EXIT_VIOLATION if any(ev.violated for ev in result.evaluations) else EXIT_OK


def _cmd_lemma_scan(args, out) -> int:
    report = bounds.lemma_scan(args.lemma, args.x_max, args.y_max, args.real_step, args.jobs)
    out.write("".join(line + "\n" for line in report.lines()))
    return EXIT_VIOLATION if report.violations else EXIT_OK


def _cmd_verify(args, out) -> int:
    method = Method(args.eps_method)
    if args.min_n > args.max_n:
        raise UsageError(f"--min-n {args.min_n} exceeds --max-n {args.max_n}")
    if method is not Method.TREE and args.max_n > BRUTE_FORCE_MAX_ORDER:
        raise UsageError(f"--eps-method {method.value} supports n <= {BRUTE_FORCE_MAX_ORDER}")
    reports = harness.sweep(args.min_n, args.max_n, method, args.out, args.jobs)
    out.write(f"erratum={M2_PATH_ERRATUM}\n")
    for rep in reports:
        out.write("".join(line + "\n" for line in rep.summary_lines()))
    ok = all(rep.ok for rep in reports)
    out.write(f"status={'ok' if ok else 'violation'}\n")
    return EXIT_OK if ok else EXIT_VIOLATION


def _cmd_extremal(args, out) -> int:
    lo, hi = harness.extremal_search(args.n, args.index)
    for label, ext in (("min", lo), ("max", hi)):
        codes = ";".join(enumeration.format_code(c) for c in ext.witnesses)
        out.write(f"{label}={harness._fmt(ext.value)}\n{label}_witnesses={codes}\n")
    return EXIT_OK


COMMANDS = {
    "enum": _cmd_enum,
    "indices": _cmd_indices,
    "metric-dim": _cmd_metric_dim,
    "bounds": _cmd_bounds,
    "lemma-scan": _cmd_lemma_scan,
    "verify": _cmd_verify,
    "extremal": _cmd_extremal,
}


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except (TreeError, OSError, ValueError) as exc:
        print(f"treebounds: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
