"""Command-line surface.

Exit codes: 0 success/agreement, 2 usage or input error, 3 semantic negative
(invalid coloring, theorem mismatch), 4 budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict

from . import __version__
from .errors import GapInputError, MvChromaError
from .formats import (
    read_coloring,
    read_graph,
    write_coloring,
    write_graph,
    write_labels,
)
from .gluedtrees import (
    build_glued_tree,
    chi_mu_formula,
    verify_theorem,
)
from .graph import all_pairs_distances
from .reduction import (
    build_reduction,
    format_nae_formula,
    legend_to_dict,
    normalize,
    parse_nae_formula,
    verify_reduction,
)
from .solver import Budget, Status, chi_mu_exact, mv_k_colorable, nae_satisfiable
from .visibility import validate_gp_coloring, validate_mv_coloring

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NEGATIVE = 3
EXIT_BUDGET = 4


def _write(path: str | None, content: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(content)
    else:
        with open(path, "w") as fh:
            fh.write(content)


def _read(path: str) -> str:
    with open(path) as fh:
        return fh.read()


def _json_report(payload: dict, args: argparse.Namespace) -> str:
    payload = dict(payload)
    payload["tool_version"] = __version__
    payload["config"] = {
        k: v for k, v in sorted(vars(args).items()) if k != "func"
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _budget(args: argparse.Namespace) -> Budget | None:
    nodes = getattr(args, "budget_nodes", None)
    secs = getattr(args, "budget_secs", None)
    if nodes is None and secs is None:
        return None
    return Budget(max_nodes=nodes, max_seconds=secs)


def cmd_gen_tree(args) -> int:
    tree = build_glued_tree(args.r, args.t)
    _write(args.out, write_graph(tree.graph))
    if args.labels:
        _write(args.labels, write_labels(tree))
    return EXIT_OK


def cmd_theorem(args) -> int:
    formula = chi_mu_formula(args.r, args.t)
    if formula.gap:
        print(
            "formula gap: candidates "
            + ",".join(str(c) for c in formula.candidates),
            file=sys.stderr,
        )
        return EXIT_USAGE
    report = verify_theorem(
        args.r, args.t, exact=args.exact, gp=args.gp, budget=_budget(args)
    )
    payload = {
        "r": report.r,
        "t": report.t,
        "formula": {
            "i": report.formula.i,
            "value": report.formula.value,
            "gap": report.formula.gap,
            "candidates": list(report.formula.candidates),
        },
        "construction_colors": report.construction_colors,
        "mv_valid": report.mv_valid,
        "gp_valid": report.gp_valid,
        "exact": report.exact,
    }
    _write(args.json, _json_report(payload, args))
    return EXIT_OK if report.agree else EXIT_NEGATIVE


def cmd_validate(args) -> int:
    g = read_graph(_read(args.graph))
    coloring, mapping = read_coloring(_read(args.coloring))
    if coloring.n != g.n:
        print(
            f"coloring covers {coloring.n} vertices, graph has {g.n}",
            file=sys.stderr,
        )
        return EXIT_USAGE
    o = all_pairs_distances(g)
    if args.mode == "mv":
        report = validate_mv_coloring(g, o, coloring, exhaustive=True)
    else:
        report = validate_gp_coloring(g, o, coloring, exhaustive=True)
    payload = {
        "valid": report.valid,
        "mode": args.mode,
        "violations": [
            {"u": u + 1, "v": v + 1, "color": color + 1}
            for u, v, color in report.violations
        ],
        "checked_pairs": report.checked_pairs,
    }
    if any(ext - 1 != dense for ext, dense in mapping.items()):
        payload["color_mapping"] = {str(ext): dense + 1 for ext, dense in mapping.items()}
    _write(args.json, _json_report(payload, args))
    return EXIT_OK if report.valid else EXIT_NEGATIVE


def cmd_solve(args) -> int:
    g = read_graph(_read(args.graph))
    o = all_pairs_distances(g)
    budget = _budget(args)
    if args.k is not None:
        outcome = mv_k_colorable(g, args.k, budget=budget, oracle=o)
        if outcome.status is Status.FEASIBLE:
            print(f"FEASIBLE {outcome.coloring.k}")
            if args.out:
                _write(args.out, write_coloring(outcome.coloring))
            return EXIT_OK
        if outcome.status is Status.INFEASIBLE:
            print("INFEASIBLE")
            return EXIT_NEGATIVE
        print("BUDGET")
        return EXIT_BUDGET
    try:
        k, coloring = chi_mu_exact(g, budget=budget, oracle=o)
    except MvChromaError as e:
        if hasattr(e, "lo"):
            print(f"BUDGET bounds [{e.lo}, {e.hi}]")
            return EXIT_BUDGET
        raise
    print(f"CHI {k}")
    if args.out:
        _write(args.out, write_coloring(coloring))
    return EXIT_OK


def cmd_reduce(args) -> int:
    f = parse_nae_formula(_read(args.formula))
    outcome = normalize(f)
    if outcome.trivially_unsat:
        print("TRIVIALLY-UNSAT", file=sys.stderr)
        return EXIT_NEGATIVE
    rg = build_reduction(outcome.formula)
    _write(args.out, write_graph(rg.graph))
    if args.legend:
        _write(args.legend, json.dumps(legend_to_dict(rg.legend), indent=2) + "\n")
    return EXIT_OK


def cmd_reduce_verify(args) -> int:
    f = parse_nae_formula(_read(args.formula))
    report = verify_reduction(f, budget=_budget(args))
    payload = {
        "trivially_unsat": report.trivially_unsat,
        "nae_satisfiable": report.nae_satisfiable,
        "mv_two_colorable": report.mv_two_colorable,
        "agree": report.agree,
        "forward_coloring_validates": report.forward_coloring_validates,
        "solver_nodes": report.solver_nodes,
        "solver_budget_exhausted": report.solver_budget_exhausted,
    }
    _write(args.json, _json_report(payload, args))
    if report.solver_budget_exhausted:
        return EXIT_BUDGET
    return EXIT_OK if report.agree else EXIT_NEGATIVE


def cmd_nae(args) -> int:
    f = parse_nae_formula(_read(args.formula))
    outcome = normalize(f)
    if outcome.trivially_unsat:
        print("TRIVIALLY-UNSAT")
        return EXIT_OK
    assignment = nae_satisfiable(outcome.formula)
    if assignment is None:
        print("UNSAT")
        return EXIT_OK
    lits = " ".join(
        str(i if val else -i) for i, val in enumerate(assignment.values, start=1)
    )
    print(f"SAT {lits}")
    return EXIT_OK


def cmd_normalize(args) -> int:
    f = parse_nae_formula(_read(args.formula))
    outcome = normalize(f)
    if outcome.trivially_unsat:
        print("TRIVIALLY-UNSAT")
        return EXIT_NEGATIVE
    _write(args.out, format_nae_formula(outcome.formula))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mvchroma",
        description="Mutual-visibility colorings: generate, validate, solve, reduce.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument(
        "--threads",
        type=int,
        default=int(os.environ.get("MVCHROMA_THREADS", "1")),
        help="solver parallelism hint; never changes output bytes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-tree", help="generate a glued t-ary tree")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--out", default="-")
    p.add_argument("--labels", default=None)
    p.set_defaults(func=cmd_gen_tree)

    p = sub.add_parser("theorem", help="check formula vs constructive coloring")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--exact", action="store_true")
    p.add_argument("--gp", action="store_true")
    p.add_argument("--json", default="-")
    p.add_argument("--budget-nodes", type=int, default=None)
    p.add_argument("--budget-secs", type=float, default=None)
    p.set_defaults(func=cmd_theorem)

    p = sub.add_parser("validate", help="validate a coloring file")
    p.add_argument("--graph", required=True)
    p.add_argument("--coloring", required=True)
    p.add_argument("--mode", choices=["mv", "gp"], default="mv")
    p.add_argument("--json", default="-")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("solve", help="decide k-colorability or compute the exact value")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--out", default=None)
    p.add_argument("--budget-nodes", type=int, default=None)
    p.add_argument("--budget-secs", type=float, default=None)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("reduce", help="build the reduction graph from a formula")
    p.add_argument("--formula", required=True)
    p.add_argument("--out", default="-")
    p.add_argument("--legend", default=None)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("reduce-verify", help="check both reduction directions")
    p.add_argument("--formula", required=True)
    p.add_argument("--json", default="-")
    p.add_argument("--budget-nodes", type=int, default=None)
    p.add_argument("--budget-secs", type=float, default=None)
    p.set_defaults(func=cmd_reduce_verify)

    p = sub.add_parser("nae", help="brute-force NAE3SAT decision")
    p.add_argument("--formula", required=True)
    p.set_defaults(func=cmd_nae)

    p = sub.add_parser("normalize", help="normalize a formula to 3 distinct variables per clause")
    p.add_argument("--formula", required=True)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_normalize)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors and 0 on --help/--version
        return int(e.code or 0)
    try:
        return args.func(args)
    except GapInputError as e:
        print(str(e), file=sys.stderr)
        return EXIT_USAGE
    except (MvChromaError, OSError) as e:
        if hasattr(e, "lo"):
            print(f"BUDGET bounds [{e.lo}, {e.hi}]", file=sys.stderr)
            return EXIT_BUDGET
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
