"""Shared helpers: seeded random graphs and independent brute-force oracles."""

from __future__ import annotations

import random
from itertools import combinations, product

from mvchroma import (
    Coloring,
    DistanceOracle,
    Graph,
    graph_from_edge_list,
)

DEFAULT_SEED = 20240817


def random_connected_graph(rng: random.Random, n: int) -> Graph:
    """Random spanning tree plus random extra edges."""
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u = order[i]
        v = order[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    extra = rng.randrange(0, n * (n - 1) // 2 - (n - 1) + 1)
    candidates = [
        (u, v) for u, v in combinations(range(n), 2) if (u, v) not in edges
    ]
    rng.shuffle(candidates)
    edges.update(candidates[:extra])
    return graph_from_edge_list(n, sorted(edges))


def enumerate_shortest_paths(g: Graph, u: int, v: int) -> list[tuple[int, ...]]:
    """All shortest u-v paths by exhaustive DFS (independent of the DAG code)."""
    from mvchroma import bfs_distances

    dist = bfs_distances(g, u)
    target = dist[v]
    assert target >= 0
    paths = []

    def rec(path):
        w = path[-1]
        if w == v:
            paths.append(tuple(path))
            return
        if len(path) - 1 == target:
            return
        for x in g.neighbors(w):
            if x not in path:
                path.append(x)
                rec(path)
                path.pop()

    rec([u])
    return [p for p in paths if len(p) - 1 == target]


def brute_pair_visible(g: Graph, u: int, v: int, blocked_set) -> bool:
    """Some shortest path with no blocked internal vertex, by enumeration."""
    if u == v:
        return True
    return any(
        all(w not in blocked_set for w in p[1:-1])
        for p in enumerate_shortest_paths(g, u, v)
    )


def brute_is_mv_set(g: Graph, s) -> bool:
    s = set(s)
    return all(
        brute_pair_visible(g, u, v, s - {u, v}) for u, v in combinations(sorted(s), 2)
    )


def brute_coloring_valid(g: Graph, colors) -> bool:
    classes: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        classes.setdefault(c, []).append(v)
    return all(brute_is_mv_set(g, members) for members in classes.values())


def restricted_growth_strings(n: int, max_colors: int):
    """Color assignments canonical up to color renaming, first vertex color 0."""

    def rec(prefix, used):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for c in range(min(used + 1, max_colors)):
            prefix.append(c)
            yield from rec(prefix, max(used, c + 1))
            prefix.pop()

    yield from rec([], 0)


def brute_chi_mu(g: Graph, max_colors: int) -> int | None:
    """Smallest color count over canonical enumeration, or None if > max_colors."""
    best = None
    for colors in restricted_growth_strings(g.n, max_colors):
        k = max(colors) + 1
        if best is not None and k >= best:
            continue
        if brute_coloring_valid(g, colors):
            best = k
            if best == 1:
                break
    return best


def all_two_colorings(n: int):
    yield from product((0, 1), repeat=n)


def coloring_with_k(colors) -> Coloring:
    """A coloring drawn from a fixed palette; unused trailing colors dropped."""
    dense_map = {}
    dense = []
    for c in colors:
        if c not in dense_map:
            dense_map[c] = len(dense_map)
        dense.append(dense_map[c])
    return Coloring(tuple(dense), len(dense_map))
