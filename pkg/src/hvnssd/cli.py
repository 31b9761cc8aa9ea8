"""Command-line front end.

Exit status: 0 on success, 1 when a verification disagrees with the
published values (or a construction guarantee fails), 2 on usage errors.
Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import catalog
from .constructions import TheoremViolation, bridge_join, pendant_union
from .dihedral import ElementSyntaxError
from .enumeration import (CLASSIFIERS, MAX_ORDER, compare_with_published, default_workers,
                          enumerate_table, write_report)
from .graph import commuting_graph, export_dot, export_graph6
from .hyperop import HvGroup, check_reproduction, check_weak_associativity
from .nssd import is_nssd

AXIOM_MAX_N = 64


class UsageError(Exception):
    pass


def _n_range(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"\s*(\d+)\s*\.\.\s*(\d+)\s*", text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}")
    a, b = int(m.group(1)), int(m.group(2))
    if a > b:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return a, b


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hvnssd", description="NSSD commuting graphs of the Hv-group (D_2n, o).")
    sub = p.add_subparsers(dest="command", required=True)

    ax = sub.add_parser("axioms", help="check the Hv-group axioms exhaustively")
    ax.add_argument("--n", type=int, required=True)

    ch = sub.add_parser("check", help="build one commuting graph and decide NSSD")
    ch.add_argument("--n", type=int, required=True)
    ch.add_argument("--subset", required=True, help='comma-separated elements, e.g. "a,a^3,b,a b"')
    ch.add_argument("--dot", type=Path, help="write the graph in DOT format to this file")
    ch.add_argument("--graph6", action="store_true", help="print the graph6 encoding")

    tb = sub.add_parser("table", help="enumerate NSSD subsets and graph classes")
    which = tb.add_mutually_exclusive_group(required=True)
    which.add_argument("--n", type=int)
    which.add_argument("--n-range", type=_n_range, metavar="A..B")
    tb.add_argument("--min-order", type=int, default=2)
    tb.add_argument("--max-order", type=int, default=10)
    tb.add_argument("--format", choices=("csv", "json"), default="csv")
    tb.add_argument("--out", type=Path)
    tb.add_argument("--workers", type=_positive)
    tb.add_argument("--connected-only", action="store_true", help="count only connected NSSD graphs")
    tb.add_argument("--classify", choices=CLASSIFIERS, default="isomorphism",
                    help="how graphs are grouped into classes (default: isomorphism)")
    tb.add_argument("--expect-paper", action="store_true", help="compare rows with the published table")

    co = sub.add_parser("construct", help="pendant or bridge construction")
    co.add_argument("--n", type=int, required=True)
    co.add_argument("--mode", choices=("pendant", "bridge"), required=True)
    co.add_argument("--u", required=True)
    co.add_argument("--v", required=True)

    ga = sub.add_parser("gamma", help="verify the published vertex sets")
    pick = ga.add_mutually_exclusive_group(required=True)
    pick.add_argument("--id", type=int)
    pick.add_argument("--all", action="store_true")
    ga.add_argument("--dot", type=Path)
    ga.add_argument("--graph6", action="store_true")
    ga.add_argument("--format", choices=("text", "csv"), default="text")
    ga.add_argument("--expect-paper", action="store_true", help="exit 1 if any set is not NSSD")
    return p


def _print_graph(G, out) -> None:
    print("adjacency:", file=out)
    for row in G.adjacency:
        print(" ".join(str(x) for x in row), file=out)


def _print_certificate(cert, out) -> None:
    print(f"det={cert.det}", file=out)
    print(f"minors={list(cert.minor_diag)}", file=out)
    print(f"verdict: {cert.describe()}", file=out)


def _cmd_axioms(args, out, err) -> int:
    if not 2 <= args.n <= AXIOM_MAX_N:
        raise UsageError(f"--n must be in 2..{AXIOM_MAX_N} for exhaustive axiom checks")
    hv = HvGroup(args.n)
    reports = [check_weak_associativity(hv), check_reproduction(hv)]
    for r in reports:
        print(r.describe(), file=out)
    return 0 if all(r.holds for r in reports) else 1


def _cmd_check(args, out, err) -> int:
    hv = HvGroup(args.n)
    subset = hv.group.parse_subset(args.subset)
    if not subset:
        raise UsageError("--subset is empty")
    if len(set(subset)) != len(subset):
        raise UsageError("--subset names the same element twice (exponents are reduced mod n)")
    G = commuting_graph(hv, subset)
    print(f"n={args.n} vertices: " + ", ".join(str(x) for x in G.labels), file=out)
    _print_graph(G, out)
    _print_certificate(is_nssd(G), out)
    print(f"molecular: {str(G.is_molecular()).lower()}", file=out)
    if args.graph6:
        print(f"graph6: {export_graph6(G)}", file=out)
    if args.dot:
        args.dot.write_text(export_dot(G), encoding="utf-8")
    return 0


def _cmd_table(args, out, err) -> int:
    ns = [args.n] if args.n is not None else list(range(args.n_range[0], args.n_range[1] + 1))
    if min(ns) < 2:
        raise UsageError("n must be >= 2")
    if args.min_order < 2 or args.max_order < args.min_order:
        raise UsageError("order bounds must satisfy 2 <= --min-order <= --max-order")
    if args.max_order > MAX_ORDER:
        raise UsageError(f"--max-order above {MAX_ORDER} is not supported")
    workers = args.workers if args.workers is not None else default_workers()
    report = enumerate_table(ns, args.min_order, args.max_order, workers=workers,
                             connected_only=args.connected_only, classify=args.classify)
    if args.out:
        write_report(report, args.format, args.out)
    else:
        write_report(report, args.format, out)
    if not args.expect_paper:
        return 0
    found = compare_with_published(report)
    for d in found:
        print(d.describe(), file=err)
    if found:
        print(f"{len(found)} row(s) differ from the published table", file=err)
        return 1
    return 0


def _cmd_construct(args, out, err) -> int:
    hv = HvGroup(args.n)
    us, vs = hv.group.parse_subset(args.u), hv.group.parse_subset(args.v)
    build = pendant_union if args.mode == "pendant" else bridge_join
    try:
        result = build(hv, us, vs)
        status = 0
    except TheoremViolation as exc:
        result = exc.result
        status = 1
    for line in result.report_lines():
        print(line, file=out)
    print("vertices: " + ", ".join(str(x) for x in result.graph.labels), file=out)
    _print_graph(result.graph, out)
    _print_certificate(result.certificate, out)
    if status:
        print("hypotheses met but the graph is not NSSD", file=err)
    return status


def _cmd_gamma(args, out, err) -> int:
    if args.all:
        if args.dot or args.graph6:
            raise UsageError("--dot/--graph6 need a single --id")
        results = catalog.verify_all()
        if args.format == "csv":
            out.write(catalog.format_summary_csv(results))
        else:
            for row in catalog.summary_rows(results):
                gid, n, order, fig, verdict, mol = row
                print(f"set {gid:2d} n={n} order={order:2d} figure={fig:2d} "
                      f"{'NSSD' if verdict else 'NOT NSSD'} molecular={str(mol).lower()}", file=out)
        bad = catalog.discrepancies(results)
        for d in bad:
            print(d.describe(), file=err)
        return 1 if (bad and args.expect_paper) else 0

    try:
        r = catalog.verify_gamma(args.id)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    print(f"set {r.gamma.id} n={r.gamma.n} order={r.order}", file=out)
    print("vertices: " + r.gamma.text(), file=out)
    _print_graph(r.graph, out)
    _print_certificate(r.certificate, out)
    print(f"molecular: {str(r.molecular).lower()}", file=out)
    if args.graph6:
        print(f"graph6: {export_graph6(r.graph)}", file=out)
    if args.dot:
        args.dot.write_text(export_dot(r.graph, f"G{r.gamma.id}"), encoding="utf-8")
    if not r.certificate.verdict:
        for d in catalog.discrepancies([r]):
            print(d.describe(), file=err)
        return 1 if args.expect_paper else 0
    return 0


COMMANDS = {
    "axioms": _cmd_axioms,
    "check": _cmd_check,
    "table": _cmd_table,
    "construct": _cmd_construct,
    "gamma": _cmd_gamma,
}


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out, err)
    except (UsageError, ElementSyntaxError, ValueError) as exc:
        print(f"hvnssd {args.command}: error: {exc}", file=err)
        print(f"hint: run 'hvnssd {args.command} --help' for usage", file=err)
        return 2
    except OSError as exc:
        print(f"hvnssd {args.command}: error: {exc}", file=err)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
