import numpy as np
import pytest

from mvchroma import (
    all_pairs_distances,
    bfs_distances,
    build_glued_tree,
    diameter,
    geodesic_count,
    geodesic_exists_avoiding,
    graph_from_edge_list,
    on_some_geodesic,
)
from mvchroma.errors import (
    DisconnectedGraphError,
    OutOfRangeVertexError,
    SelfLoopError,
    UnreachablePairError,
)

C4_EDGES = [(0, 1), (1, 2), (2, 3), (3, 0)]


def c4():
    return graph_from_edge_list(4, C4_EDGES)


def test_c4_construction():
    g = c4()
    assert g.n == 4
    assert g.m == 4
    assert g.adjacency[0] == (1, 3)


def test_duplicate_edge_collapsed():
    g = graph_from_edge_list(2, [(0, 1), (0, 1), (1, 0)])
    assert g.m == 1


def test_self_loop_rejected():
    with pytest.raises(SelfLoopError):
        graph_from_edge_list(3, [(1, 1)])


def test_out_of_range_endpoint():
    with pytest.raises(OutOfRangeVertexError):
        graph_from_edge_list(3, [(0, 3)])


def test_h2_edge_count():
    # two stars on 4 vertices with 2 identified leaves
    from mvchroma import build_h_gadget

    g, _ = build_h_gadget(2)
    assert g.n == 6
    assert g.m == 6


def test_bfs_c4():
    assert bfs_distances(c4(), 0) == [0, 1, 2, 1]


def test_bfs_path():
    g = graph_from_edge_list(3, [(0, 1), (1, 2)])
    assert bfs_distances(g, 0) == [0, 1, 2]


def test_bfs_unreachable_sentinel():
    g = graph_from_edge_list(3, [(0, 1)])
    assert bfs_distances(g, 0) == [0, 1, -1]


def test_bfs_source_out_of_range():
    with pytest.raises(OutOfRangeVertexError):
        bfs_distances(c4(), 7)


def test_all_pairs_matches_bfs():
    g = c4()
    o = all_pairs_distances(g)
    for s in range(g.n):
        assert list(o.dist[s]) == bfs_distances(g, s)
    assert o.dist.max() == 2


def test_all_pairs_single_vertex():
    g = graph_from_edge_list(1, [])
    o = all_pairs_distances(g)
    assert o.dist.shape == (1, 1)
    assert o.dist[0, 0] == 0


def test_oracle_invariants_gt2():
    tree = build_glued_tree(2, 2)
    g = tree.graph
    o = all_pairs_distances(g)
    d = o.dist
    assert (d == d.T).all()
    assert (np.diag(d) == 0).all()
    assert d.max() == 4
    for u in range(g.n):
        for v in g.neighbors(u):
            assert d[u, v] == 1
    # dist v_{1,1} to v'_{1,1}
    assert d[tree.internal(1, 1, 1), tree.internal(2, 1, 1)] == 4


def test_diameter():
    assert diameter(graph_from_edge_list(3, [(0, 1), (0, 2), (1, 2)])) == 1
    assert diameter(build_glued_tree(3, 2).graph) == 6


def test_diameter_disconnected():
    with pytest.raises(DisconnectedGraphError):
        diameter(graph_from_edge_list(3, [(0, 1)]))


def test_on_some_geodesic_path():
    g = graph_from_edge_list(3, [(0, 1), (1, 2)])
    o = all_pairs_distances(g)
    assert on_some_geodesic(o, 0, 1, 2)


def test_on_some_geodesic_c4_both_routes():
    o = all_pairs_distances(c4())
    assert on_some_geodesic(o, 0, 1, 2)
    assert on_some_geodesic(o, 0, 3, 2)


def test_on_some_geodesic_gt2_quasi_leaves():
    tree = build_glued_tree(2, 2)
    o = all_pairs_distances(tree.graph)
    assert on_some_geodesic(o, tree.quasi(1), tree.internal(1, 1, 1), tree.quasi(4))


def test_on_some_geodesic_unreachable():
    g = graph_from_edge_list(3, [(0, 1)])
    o = all_pairs_distances(g)
    with pytest.raises(UnreachablePairError):
        on_some_geodesic(o, 0, 1, 2)


def test_geodesic_count_c4():
    g = c4()
    o = all_pairs_distances(g)
    assert geodesic_count(g, o, 0, 2) == 2
    assert geodesic_count(g, o, 0, 1) == 1


def test_geodesic_count_gt2():
    tree = build_glued_tree(2, 2)
    g = tree.graph
    o = all_pairs_distances(g)
    # same copy: unique geodesic
    assert geodesic_count(g, o, tree.internal(1, 2, 1), tree.internal(1, 2, 2)) == 1
    # mirror roots: one geodesic per quasi-leaf
    assert geodesic_count(g, o, tree.internal(1, 1, 1), tree.internal(2, 1, 1)) == 4


def test_geodesic_exists_avoiding_c4():
    g = c4()
    o = all_pairs_distances(g)
    assert geodesic_exists_avoiding(g, o, 0, 2, lambda w: w == 1)
    assert not geodesic_exists_avoiding(g, o, 0, 2, lambda w: w in (1, 3))


def test_geodesic_exists_avoiding_adjacent():
    g = c4()
    o = all_pairs_distances(g)
    # adjacent pair has no internal vertices
    assert geodesic_exists_avoiding(g, o, 0, 1, lambda w: True)


def test_geodesic_exists_avoiding_never_blocked():
    g = build_glued_tree(2, 2).graph
    o = all_pairs_distances(g)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            assert geodesic_exists_avoiding(g, o, u, v, lambda w: False)
