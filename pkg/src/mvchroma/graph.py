"""Immutable simple undirected graphs, BFS distances and geodesic primitives.

Vertex ids are dense 0-based integers. Distances are stored as a dense
matrix with -1 marking unreachable pairs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .errors import (
    DisconnectedGraphError,
    OutOfRangeVertexError,
    SelfLoopError,
    UnreachablePairError,
)

UNREACHABLE = -1


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with sorted adjacency lists."""

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    m: int

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (u, v) pairs with u < v, sorted."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def sparse_adjacency(self) -> csr_matrix:
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        for v in range(self.n):
            indptr[v + 1] = indptr[v] + len(self.adjacency[v])
        indices = np.fromiter(
            (w for v in range(self.n) for w in self.adjacency[v]),
            dtype=np.int64,
            count=int(indptr[-1]),
        )
        data = np.ones(len(indices), dtype=np.int8)
        return csr_matrix((data, indices, indptr), shape=(self.n, self.n))


@dataclass(frozen=True)
class DistanceOracle:
    """All-pairs hop distances; dist[u, v] == -1 when unreachable."""

    dist: np.ndarray = field(repr=False)

    @property
    def n(self) -> int:
        return self.dist.shape[0]

    def d(self, u: int, v: int) -> int:
        return int(self.dist[u, v])

    def require_connected(self, u: int, v: int) -> int:
        d = int(self.dist[u, v])
        if d == UNREACHABLE:
            raise UnreachablePairError(f"vertices {u} and {v} are not connected")
        return d


def _check_vertex(v: int, n: int) -> None:
    if not 0 <= v < n:
        raise OutOfRangeVertexError(f"vertex {v} out of range 0..{n - 1}")


def graph_from_edge_list(n: int, edges) -> Graph:
    """Build a canonical simple graph; duplicate edges collapse, self-loops raise."""
    if n < 0:
        raise OutOfRangeVertexError("vertex count must be non-negative")
    seen: set[tuple[int, int]] = set()
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        _check_vertex(u, n)
        _check_vertex(v, n)
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            continue
        seen.add(key)
        adj[u].add(v)
        adj[v].add(u)
    return Graph(
        n=n,
        adjacency=tuple(tuple(sorted(s)) for s in adj),
        m=len(seen),
    )


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from source; -1 for unreachable vertices."""
    _check_vertex(source, g.n)
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    frontier = [source]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for w in g.adjacency[u]:
                if dist[w] == UNREACHABLE:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist


def all_pairs_distances(g: Graph) -> DistanceOracle:
    """Dense all-pairs BFS distance matrix."""
    if g.n == 0:
        return DistanceOracle(dist=np.zeros((0, 0), dtype=np.int32))
    if g.m == 0:
        dist = np.full((g.n, g.n), UNREACHABLE, dtype=np.int32)
        np.fill_diagonal(dist, 0)
        return DistanceOracle(dist=dist)
    d = shortest_path(g.sparse_adjacency(), method="auto", unweighted=True)
    dist = np.where(np.isinf(d), UNREACHABLE, d).astype(np.int32)
    dist.setflags(write=False)
    return DistanceOracle(dist=dist)


def diameter(g: Graph, o: DistanceOracle | None = None) -> int:
    """Max hop distance; raises on disconnected input."""
    if o is None:
        o = all_pairs_distances(g)
    if g.n == 0:
        raise DisconnectedGraphError("empty graph has no diameter")
    if np.any(o.dist == UNREACHABLE):
        raise DisconnectedGraphError("graph is disconnected")
    return int(o.dist.max())


def on_some_geodesic(o: DistanceOracle, u: int, w: int, v: int) -> bool:
    """True iff w lies on some shortest u-v path."""
    for x in (u, w, v):
        _check_vertex(x, o.n)
    duv = o.require_connected(u, v)
    duw = o.d(u, w)
    dwv = o.d(w, v)
    if duw == UNREACHABLE or dwv == UNREACHABLE:
        return False
    return duw + dwv == duv


def geodesic_count(g: Graph, o: DistanceOracle, u: int, v: int) -> int:
    """Number of shortest u-v paths (exact, arbitrary precision)."""
    _check_vertex(u, g.n)
    _check_vertex(v, g.n)
    duv = o.require_connected(u, v)
    if u == v:
        return 1
    # vertices on the u-v shortest-path DAG, processed by distance from u
    du = o.dist[u]
    dv = o.dist[v]
    on_dag = [w for w in range(g.n) if du[w] != UNREACHABLE and du[w] + dv[w] == duv]
    on_dag.sort(key=lambda w: int(du[w]))
    count: dict[int, int] = {u: 1}
    for w in on_dag:
        if w == u:
            continue
        dw = int(du[w])
        count[w] = sum(
            count.get(x, 0) for x in g.adjacency[w] if int(du[x]) == dw - 1 and x in count
        )
    return count.get(v, 0)


def geodesic_exists_avoiding(g: Graph, o: DistanceOracle, u: int, v: int, blocked) -> bool:
    """True iff some shortest u-v path has no internal vertex w with blocked(w).

    Endpoints are always admitted. ``blocked`` is a predicate over vertex ids.
    """
    _check_vertex(u, g.n)
    _check_vertex(v, g.n)
    duv = o.require_connected(u, v)
    if u == v or duv == 1:
        return True
    du = o.dist[u]
    dv = o.dist[v]
    on_dag = sorted(
        (
            w
            for w in range(g.n)
            if du[w] != UNREACHABLE and du[w] + dv[w] == duv
        ),
        key=lambda w: int(du[w]),
    )
    # reach[w]: some geodesic prefix u..w with all strict internals unblocked
    reach: set[int] = {u}
    for w in on_dag:
        if w == u:
            continue
        dw = int(du[w])
        ok = any(x in reach for x in g.adjacency[w] if int(du[x]) == dw - 1)
        if w == v:
            return ok
        if ok and not blocked(w):
            reach.add(w)
    return False
