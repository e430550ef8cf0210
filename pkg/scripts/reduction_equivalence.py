#!/usr/bin/env python3
"""Empirically check the NAE3SAT <-> 2-color equivalence on random formulas.

For each seeded random instance the formula is normalized, the reduction
graph is built, and the brute-force NAE verdict is compared with the exact
solver's 2-colorability verdict.

Example:
    python scripts/reduction_equivalence.py --count 50 --seed 20240817
"""

import argparse
import random
import sys
import time
from dataclasses import dataclass

from mvchroma import make_formula, verify_reduction


@dataclass
class RunConfig:
    count: int = 50
    seed: int = 20240817
    max_q: int = 5
    max_clauses: int = 6
    allow_degenerate: bool = True


def random_formula(rng: random.Random, cfg: RunConfig):
    q = rng.randrange(3, cfg.max_q + 1)
    m = rng.randrange(1, cfg.max_clauses + 1)
    clauses = []
    for _ in range(m):
        if cfg.allow_degenerate and rng.random() < 0.2:
            # repeated or opposing literals exercise normalization
            v = rng.randrange(1, q + 1)
            w = rng.randrange(1, q + 1)
            clauses.append(
                [(v, rng.random() < 0.5), (v, rng.random() < 0.5), (w, rng.random() < 0.5)]
            )
        else:
            vars_ = rng.sample(range(1, q + 1), 3)
            clauses.append([(v, rng.random() < 0.5) for v in vars_])
    return make_formula(q, clauses)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=50)
    parser.add_argument("--seed", type=int, default=20240817)
    parser.add_argument("--max-q", type=int, default=5)
    parser.add_argument("--max-clauses", type=int, default=6)
    parser.add_argument("--no-degenerate", action="store_true")
    args = parser.parse_args()
    cfg = RunConfig(
        count=args.count,
        seed=args.seed,
        max_q=args.max_q,
        max_clauses=args.max_clauses,
        allow_degenerate=not args.no_degenerate,
    )

    rng = random.Random(cfg.seed)
    disagreements = 0
    start = time.perf_counter()
    for idx in range(cfg.count):
        f = random_formula(rng, cfg)
        report = verify_reduction(f)
        tag = "trivial" if report.trivially_unsat else (
            "sat" if report.nae_satisfiable else "unsat"
        )
        mark = "ok" if report.agree else "DISAGREE"
        if not report.agree:
            disagreements += 1
        print(
            f"[{idx:3d}] q={f.q} m={len(f.clauses)} {tag:7s} "
            f"nodes={report.solver_nodes} [{mark}]"
        )
    elapsed = time.perf_counter() - start
    print(f"{cfg.count} instances, {disagreements} disagreements, {elapsed:.1f} s")
    return 0 if disagreements == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
