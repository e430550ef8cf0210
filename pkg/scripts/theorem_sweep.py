#!/usr/bin/env python3
"""Sweep glued-tree instances and compare the closed-form color count with
the constructive coloring (and optionally the exact solver).

Example:
    python scripts/theorem_sweep.py --max-n 2000
    python scripts/theorem_sweep.py --max-n 200 --exact
"""

import argparse
import json
import sys
import time
from dataclasses import dataclass

from mvchroma import Budget, chi_mu_formula, glued_tree_order, verify_theorem


@dataclass
class SweepConfig:
    max_n: int = 2000
    min_r: int = 1
    exact: bool = False
    gp: bool = False
    include_odd_t: bool = False
    budget_secs: float | None = None


def covered_instances(cfg: SweepConfig):
    t = 2
    while glued_tree_order(cfg.min_r, t) <= cfg.max_n:
        if t % 2 == 0 or cfg.include_odd_t:
            r = cfg.min_r
            while glued_tree_order(r, t) <= cfg.max_n:
                yield r, t
                r += 1
        t += 1


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=2000)
    parser.add_argument("--min-r", type=int, default=1)
    parser.add_argument("--exact", action="store_true", help="also run the exact solver")
    parser.add_argument("--gp", action="store_true", help="also validate general position")
    parser.add_argument("--include-odd-t", action="store_true")
    parser.add_argument("--budget-secs", type=float, default=None)
    parser.add_argument("--json", default=None, help="write a JSON summary here")
    args = parser.parse_args()
    cfg = SweepConfig(
        max_n=args.max_n,
        min_r=args.min_r,
        exact=args.exact,
        gp=args.gp,
        include_odd_t=args.include_odd_t,
        budget_secs=args.budget_secs,
    )

    rows = []
    failures = 0
    start = time.perf_counter()
    for r, t in covered_instances(cfg):
        formula = chi_mu_formula(r, t)
        if formula.gap:
            print(f"GT({r},{t}): formula gap, candidates {formula.candidates}")
            rows.append({"r": r, "t": t, "gap": True, "candidates": list(formula.candidates)})
            continue
        budget = Budget(max_seconds=cfg.budget_secs) if cfg.budget_secs else None
        report = verify_theorem(r, t, exact=cfg.exact, gp=cfg.gp, budget=budget)
        mark = "ok" if report.agree else "MISMATCH"
        if not report.agree:
            failures += 1
        n = glued_tree_order(r, t)
        print(
            f"GT({r},{t}): n={n} formula={formula.value} "
            f"construction={report.construction_colors} mv_valid={report.mv_valid}"
            + (f" exact={report.exact}" if cfg.exact else "")
            + (f" gp_valid={report.gp_valid}" if cfg.gp else "")
            + f" [{mark}]"
        )
        rows.append(
            {
                "r": r,
                "t": t,
                "n": n,
                "gap": False,
                "formula": formula.value,
                "construction": report.construction_colors,
                "mv_valid": report.mv_valid,
                "gp_valid": report.gp_valid,
                "exact": report.exact,
                "agree": report.agree,
            }
        )
    elapsed = time.perf_counter() - start
    print(f"{len(rows)} instances, {failures} mismatches, {elapsed:.1f} s")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump({"config": vars(args), "rows": rows}, fh, indent=2, sort_keys=True)
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
