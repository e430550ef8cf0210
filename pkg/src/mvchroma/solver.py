"""Exact search for mutual-visibility colorability and the NAE3SAT brute-force
oracle.

The backtracking solver assigns colors in a fixed vertex order (descending
degree, ties by id), breaks color symmetry by allowing a new color id only
when all smaller ids are in use, and prunes with the pair visibility test:
after each assignment every same-colored pair that could be affected must
still have a geodesic whose assigned internal vertices avoid that color.
Unassigned vertices never block, so the rule is sound along a branch.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from enum import Enum

from .errors import (
    BudgetExhaustedError,
    DisconnectedGraphError,
    InvalidParamsError,
    TooManyVariablesError,
)
from .graph import (
    UNREACHABLE,
    DistanceOracle,
    Graph,
    all_pairs_distances,
    geodesic_exists_avoiding,
)
from .visibility import Coloring, validate_mv_coloring


class Status(Enum):
    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"
    BUDGET_EXHAUSTED = "budget"


@dataclass(frozen=True)
class SearchOutcome:
    status: Status
    coloring: Coloring | None
    nodes_explored: int
    elapsed: float


@dataclass(frozen=True)
class Budget:
    """Dual node/wall-clock budget; whichever trips first wins."""

    max_nodes: int | None = None
    max_seconds: float | None = None


@dataclass(frozen=True)
class NaeAssignment:
    """Truth values for variables 1..q; values[i-1] is the value of x_i."""

    values: tuple[bool, ...]

    def value(self, var: int) -> bool:
        return self.values[var - 1]


def solver_vertex_order(g: Graph) -> list[int]:
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


class _PairVisibility:
    """Cached per-pair geodesic data for the solver's visibility test.

    For each unordered pair the internal vertices of every geodesic are
    enumerated as bitmasks; the pair is visible under a color mask iff some
    geodesic mask misses it entirely. Pairs with too many geodesics fall back
    to the DAG-reachability predicate.
    """

    def __init__(self, g: Graph, o: DistanceOracle, mask_cap: int = 4096):
        self.g = g
        self.o = o
        self.mask_cap = mask_cap
        self._cache: dict[tuple[int, int], tuple[tuple[int, ...] | None, int]] = {}

    def _enumerate(self, u: int, v: int) -> tuple[tuple[int, ...] | None, int]:
        g, o = self.g, self.o
        du = o.dist[u]
        dv = o.dist[v]
        duv = int(du[v])
        masks: set[int] = set()
        union = 0
        # iterative DFS over the u-v shortest-path DAG
        stack: list[tuple[int, int]] = [(u, 0)]
        steps = 0
        while stack:
            w, mask = stack.pop()
            steps += 1
            if steps > 64 * self.mask_cap or len(masks) > self.mask_cap:
                return None, self._union_via_scan(u, v)
            dw = int(du[w])
            for x in g.adjacency[w]:
                if int(du[x]) != dw + 1 or int(du[x]) + int(dv[x]) != duv:
                    continue
                if x == v:
                    masks.add(mask)
                else:
                    stack.append((x, mask | (1 << x)))
        for m in masks:
            union |= m
        return tuple(sorted(masks)), union

    def _union_via_scan(self, u: int, v: int) -> int:
        du = self.o.dist[u]
        dv = self.o.dist[v]
        duv = int(du[v])
        union = 0
        for w in range(self.g.n):
            if w in (u, v):
                continue
            if int(du[w]) != UNREACHABLE and int(du[w]) + int(dv[w]) == duv:
                union |= 1 << w
        return union

    def _info(self, u: int, v: int) -> tuple[tuple[int, ...] | None, int]:
        key = (u, v) if u < v else (v, u)
        info = self._cache.get(key)
        if info is None:
            info = self._enumerate(*key)
            self._cache[key] = info
        return info

    def union_mask(self, u: int, v: int) -> int:
        return self._info(u, v)[1]

    def visible(self, u: int, v: int, color_mask: int) -> bool:
        masks, union = self._info(u, v)
        if masks is not None:
            if union & color_mask == 0:
                return True
            return any(m & color_mask == 0 for m in masks)
        return geodesic_exists_avoiding(
            self.g, self.o, u, v, lambda w: (color_mask >> w) & 1 == 1
        )


class _BudgetTracker:
    def __init__(self, budget: Budget | None):
        self.max_nodes = budget.max_nodes if budget else None
        self.max_seconds = budget.max_seconds if budget else None
        self.nodes = 0
        self.start = time.perf_counter()

    def tick(self) -> bool:
        """Count a node; True when the budget is exhausted."""
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            return True
        if self.max_seconds is not None and self.nodes % 256 == 0:
            if time.perf_counter() - self.start > self.max_seconds:
                return True
        return False

    @property
    def elapsed(self) -> float:
        return time.perf_counter() - self.start


def _require_connected(g: Graph, o: DistanceOracle) -> None:
    if g.n and (o.dist == UNREACHABLE).any():
        raise DisconnectedGraphError("solver requires a connected graph")


def _check_assignment(
    pv: _PairVisibility,
    members: list[int],
    v: int,
    color_mask: int,
) -> bool:
    """Partial-validity of the class after adding v, rechecking affected pairs."""
    bit = 1 << v
    for i, u in enumerate(members):
        if u == v:
            continue
        if not pv.visible(u, v, color_mask):
            return False
    for i, x in enumerate(members):
        if x == v:
            continue
        for y in members[i + 1:]:
            if y == v:
                continue
            if pv.union_mask(x, y) & bit and not pv.visible(x, y, color_mask):
                return False
    return True


def mv_k_colorable(
    g: Graph,
    k: int,
    budget: Budget | None = None,
    oracle: DistanceOracle | None = None,
) -> SearchOutcome:
    """Decide whether g admits a mutual-visibility coloring with <= k colors."""
    if k < 1:
        raise InvalidParamsError("color budget must be >= 1")
    o = oracle if oracle is not None else all_pairs_distances(g)
    _require_connected(g, o)
    n = g.n
    order = solver_vertex_order(g)
    pv = _PairVisibility(g, o)
    tracker = _BudgetTracker(budget)

    colors = [-1] * n
    color_masks = [0] * k
    color_members: list[list[int]] = [[] for _ in range(k)]

    if n == 0:
        return SearchOutcome(Status.FEASIBLE, Coloring((), 0), 0, tracker.elapsed)

    def _assign(v: int, c: int) -> None:
        colors[v] = c
        color_masks[c] |= 1 << v
        color_members[c].append(v)

    def _undo(v: int, c: int) -> None:
        colors[v] = -1
        color_masks[c] &= ~(1 << v)
        color_members[c].remove(v)

    # iterative backtracking; choice[d] is the color currently held at depth d
    choice = [-1] * n
    used = [0] * (n + 1)  # colors in use entering depth d
    depth = 0
    while True:
        v = order[depth]
        if choice[depth] >= 0:
            _undo(v, choice[depth])
        c = choice[depth] + 1
        limit = min(used[depth] + 1, k)
        descended = False
        while c < limit:
            if tracker.tick():
                return SearchOutcome(
                    Status.BUDGET_EXHAUSTED, None, tracker.nodes, tracker.elapsed
                )
            _assign(v, c)
            ok = _check_assignment(pv, color_members[c], v, color_masks[c])
            if ok and depth == n - 1:
                candidate = Coloring(tuple(colors), max(colors) + 1)
                if validate_mv_coloring(g, o, candidate).valid:
                    return SearchOutcome(
                        Status.FEASIBLE, candidate, tracker.nodes, tracker.elapsed
                    )
                ok = False
            if ok:
                choice[depth] = c
                used[depth + 1] = max(used[depth], c + 1)
                depth += 1
                descended = True
                break
            _undo(v, c)
            c += 1
        if descended:
            continue
        choice[depth] = -1
        depth -= 1
        if depth < 0:
            return SearchOutcome(
                Status.INFEASIBLE, None, tracker.nodes, tracker.elapsed
            )


def greedy_upper_bound(
    g: Graph, oracle: DistanceOracle | None = None
) -> tuple[int, Coloring]:
    """First-fit over the solver's vertex order; the result always validates.

    A fresh color is always safe (its class is a singleton and a vertex never
    blocks classes of other colors), so the loop terminates with a valid
    coloring.
    """
    o = oracle if oracle is not None else all_pairs_distances(g)
    _require_connected(g, o)
    n = g.n
    if n == 0:
        return 0, Coloring((), 0)
    pv = _PairVisibility(g, o)
    colors = [-1] * n
    color_masks: list[int] = []
    color_members: list[list[int]] = []
    for v in solver_vertex_order(g):
        placed = False
        for c in range(len(color_members)):
            mask = color_masks[c] | (1 << v)
            color_members[c].append(v)
            if _check_assignment(pv, color_members[c], v, mask):
                colors[v] = c
                color_masks[c] = mask
                placed = True
                break
            color_members[c].pop()
        if not placed:
            colors[v] = len(color_members)
            color_members.append([v])
            color_masks.append(1 << v)
    coloring = Coloring(tuple(colors), len(color_members))
    report = validate_mv_coloring(g, o, coloring)
    assert report.valid, "greedy invariant broken"
    return coloring.k, coloring


def chi_mu_exact(
    g: Graph,
    budget: Budget | None = None,
    oracle: DistanceOracle | None = None,
) -> tuple[int, Coloring]:
    """Smallest k with a feasible mutual-visibility coloring, swept upward.

    Raises BudgetExhaustedError with the best known bounds [lo, hi] when the
    budget runs out before the sweep settles.
    """
    o = oracle if oracle is not None else all_pairs_distances(g)
    ub, greedy_coloring = greedy_upper_bound(g, o)
    tracker = _BudgetTracker(budget)
    for k in range(1, ub):
        remaining = None
        if budget is not None:
            remaining = Budget(
                max_nodes=(
                    budget.max_nodes - tracker.nodes
                    if budget.max_nodes is not None
                    else None
                ),
                max_seconds=(
                    budget.max_seconds - tracker.elapsed
                    if budget.max_seconds is not None
                    else None
                ),
            )
        outcome = mv_k_colorable(g, k, budget=remaining, oracle=o)
        tracker.nodes += outcome.nodes_explored
        if outcome.status is Status.FEASIBLE:
            return k, outcome.coloring
        if outcome.status is Status.BUDGET_EXHAUSTED:
            raise BudgetExhaustedError(lo=k, hi=ub)
    return ub, greedy_coloring


def nae_satisfiable(f, variable_cap: int = 24) -> NaeAssignment | None:
    """Exhaustive NAE3SAT scan in increasing binary order, x_1 most significant.

    Accepts any formula object exposing ``q`` and ``clauses`` (each clause an
    iterable of (variable, positive) literals).
    """
    q = f.q
    if q > variable_cap:
        raise TooManyVariablesError(f"{q} variables exceeds cap {variable_cap}")
    clauses = [tuple(cl) for cl in f.clauses]
    for bits in range(1 << q):
        values = tuple(bool((bits >> (q - i)) & 1) for i in range(1, q + 1))
        ok = True
        for cl in clauses:
            truths = [values[var - 1] == positive for var, positive in cl]
            if all(truths) or not any(truths):
                ok = False
                break
        if ok:
            return NaeAssignment(values=values)
    return None


def nae_assignment_satisfies(f, assignment: NaeAssignment) -> bool:
    """Independent clause-by-clause NAE check."""
    for cl in f.clauses:
        truths = [assignment.value(var) == positive for var, positive in cl]
        if all(truths) or not any(truths):
            return False
    return True
