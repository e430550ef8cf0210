import random

import pytest

from conftest import DEFAULT_SEED, brute_chi_mu, random_connected_graph
from mvchroma import (
    Budget,
    Status,
    all_pairs_distances,
    build_glued_tree,
    build_reduction,
    chi_mu_exact,
    graph_from_edge_list,
    greedy_upper_bound,
    make_formula,
    mv_k_colorable,
    nae_assignment_satisfies,
    nae_satisfiable,
    solver_vertex_order,
    validate_mv_coloring,
)
from mvchroma.errors import (
    BudgetExhaustedError,
    DisconnectedGraphError,
    InvalidParamsError,
    TooManyVariablesError,
)


def c4():
    return graph_from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


def test_vertex_order_degree_then_id():
    g = graph_from_edge_list(4, [(0, 1), (1, 2), (1, 3), (2, 3)])
    assert solver_vertex_order(g) == [1, 2, 3, 0]


def test_k1_on_complete_graph():
    g = graph_from_edge_list(3, [(0, 1), (0, 2), (1, 2)])
    outcome = mv_k_colorable(g, 1)
    assert outcome.status is Status.FEASIBLE
    assert outcome.coloring.k == 1


def test_k1_on_path_infeasible():
    g = graph_from_edge_list(3, [(0, 1), (1, 2)])
    outcome = mv_k_colorable(g, 1)
    assert outcome.status is Status.INFEASIBLE


def test_c4_two_colorable():
    outcome = mv_k_colorable(c4(), 2)
    assert outcome.status is Status.FEASIBLE
    o = all_pairs_distances(c4())
    assert validate_mv_coloring(c4(), o, outcome.coloring).valid


def test_feasible_colorings_always_validate():
    rng = random.Random(DEFAULT_SEED)
    for _ in range(25):
        n = rng.randrange(2, 9)
        g = random_connected_graph(rng, n)
        o = all_pairs_distances(g)
        for k in (1, 2, 3):
            outcome = mv_k_colorable(g, k, oracle=o)
            if outcome.status is Status.FEASIBLE:
                assert outcome.coloring.k <= k
                assert validate_mv_coloring(g, o, outcome.coloring).valid


def test_matches_naive_oracle_small():
    rng = random.Random(DEFAULT_SEED + 1)
    for _ in range(15):
        n = rng.randrange(2, 8)
        g = random_connected_graph(rng, n)
        naive = brute_chi_mu(g, 3)
        for k in (1, 2, 3):
            outcome = mv_k_colorable(g, k)
            expected = naive is not None and naive <= k
            assert (outcome.status is Status.FEASIBLE) == expected


def test_invalid_k_rejected():
    with pytest.raises(InvalidParamsError):
        mv_k_colorable(c4(), 0)


def test_disconnected_rejected():
    g = graph_from_edge_list(4, [(0, 1), (2, 3)])
    with pytest.raises(DisconnectedGraphError):
        mv_k_colorable(g, 2)


def test_node_budget_exhausts():
    tree = build_glued_tree(3, 2)
    outcome = mv_k_colorable(tree.graph, 3, budget=Budget(max_nodes=1))
    assert outcome.status is Status.BUDGET_EXHAUSTED
    assert outcome.coloring is None
    assert outcome.nodes_explored <= 2


def test_gt3_three_colors_infeasible():
    tree = build_glued_tree(3, 2)
    outcome = mv_k_colorable(tree.graph, 3, budget=Budget(max_seconds=900))
    assert outcome.status is Status.INFEASIBLE


def test_greedy_upper_bound_validates():
    rng = random.Random(DEFAULT_SEED + 2)
    for _ in range(20):
        g = random_connected_graph(rng, rng.randrange(2, 10))
        o = all_pairs_distances(g)
        k, coloring = greedy_upper_bound(g, o)
        assert coloring.k == k
        assert validate_mv_coloring(g, o, coloring).valid


def test_chi_mu_exact_c4():
    k, coloring = chi_mu_exact(c4())
    assert k == 2
    assert validate_mv_coloring(c4(), all_pairs_distances(c4()), coloring).valid


def test_chi_mu_exact_gt2():
    tree = build_glued_tree(2, 2)
    k, _ = chi_mu_exact(tree.graph)
    assert k == 3


def test_chi_mu_exact_matches_naive():
    rng = random.Random(DEFAULT_SEED + 3)
    for _ in range(12):
        g = random_connected_graph(rng, rng.randrange(2, 8))
        naive = brute_chi_mu(g, 6)
        k, _ = chi_mu_exact(g)
        assert k == naive


def test_chi_mu_exact_budget_bounds():
    tree = build_glued_tree(3, 2)
    with pytest.raises(BudgetExhaustedError) as exc:
        chi_mu_exact(tree.graph, budget=Budget(max_nodes=5))
    assert 1 <= exc.value.lo <= exc.value.hi


def test_nae_first_hit_order():
    f = make_formula(3, [[(1, True), (2, True), (3, True)]])
    a = nae_satisfiable(f)
    # increasing binary order with x1 most significant: first hit is F,F,T
    assert a.values == (False, False, True)
    assert nae_assignment_satisfies(f, a)


def test_nae_unsat_covering():
    clauses = [
        [(1, True), (2, True), (3, True)],
        [(1, True), (2, False), (3, False)],
        [(1, False), (2, True), (3, False)],
        [(1, False), (2, False), (3, True)],
    ]
    f = make_formula(3, clauses)
    assert nae_satisfiable(f) is None


def test_nae_matches_direct_scan():
    rng = random.Random(DEFAULT_SEED + 4)
    for _ in range(30):
        q = rng.randrange(3, 6)
        clauses = []
        for _ in range(rng.randrange(1, 6)):
            vars_ = rng.sample(range(1, q + 1), 3)
            clauses.append([(v, rng.random() < 0.5) for v in vars_])
        f = make_formula(q, clauses)
        a = nae_satisfiable(f)
        # independent scan over every assignment
        def sat(values):
            for cl in f.clauses:
                truths = [values[var - 1] == pos for var, pos in cl]
                if all(truths) or not any(truths):
                    return False
            return True

        any_sat = any(
            sat(tuple(bool((bits >> s) & 1) for s in range(q)))
            for bits in range(1 << q)
        )
        assert (a is not None) == any_sat
        if a is not None:
            assert nae_assignment_satisfies(f, a)


def test_nae_variable_cap():
    f = make_formula(30, [[(1, True), (2, True), (3, True)]])
    with pytest.raises(TooManyVariablesError):
        nae_satisfiable(f)


def test_symmetry_breaking_node_counts_reasonable():
    # the reduction graph for one clause must resolve quickly
    f = make_formula(3, [[(1, True), (2, True), (3, True)]])
    rg = build_reduction(f)
    outcome = mv_k_colorable(rg.graph, 2)
    assert outcome.status is Status.FEASIBLE
    assert outcome.nodes_explored < 50_000
