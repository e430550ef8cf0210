"""Property-based checks against the brute-force oracles."""

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import (
    brute_chi_mu,
    brute_is_mv_set,
    brute_pair_visible,
    enumerate_shortest_paths,
    random_connected_graph,
)
from mvchroma import (
    Status,
    all_pairs_distances,
    chi_mu_formula,
    geodesic_count,
    geodesic_exists_avoiding,
    is_gp_set,
    is_mv_set,
    mv_k_colorable,
)


@st.composite
def connected_graphs(draw, max_n=9):
    n = draw(st.integers(min_value=2, max_value=max_n))
    seed = draw(st.integers(min_value=0, max_value=2**32 - 1))
    return random_connected_graph(random.Random(seed), n)


@given(connected_graphs())
@settings(max_examples=60, deadline=None)
def test_geodesic_count_matches_enumeration(g):
    o = all_pairs_distances(g)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            assert geodesic_count(g, o, u, v) == len(
                enumerate_shortest_paths(g, u, v)
            )


@given(connected_graphs(), st.integers(min_value=0, max_value=2**32 - 1))
@settings(max_examples=60, deadline=None)
def test_pair_visibility_matches_enumeration(g, seed):
    o = all_pairs_distances(g)
    rng = random.Random(seed)
    blocked = {v for v in range(g.n) if rng.random() < 0.4}
    for u in range(g.n):
        for v in range(u + 1, g.n):
            expected = brute_pair_visible(g, u, v, blocked - {u, v})
            got = geodesic_exists_avoiding(
                g, o, u, v, lambda w: w in blocked and w not in (u, v)
            )
            assert got == expected


@given(connected_graphs(max_n=8), st.integers(min_value=0, max_value=2**32 - 1))
@settings(max_examples=50, deadline=None)
def test_mv_set_matches_brute_force(g, seed):
    o = all_pairs_distances(g)
    rng = random.Random(seed)
    s = [v for v in range(g.n) if rng.random() < 0.5]
    assert is_mv_set(g, o, s) == brute_is_mv_set(g, s)


@given(connected_graphs(max_n=8), st.integers(min_value=0, max_value=2**32 - 1))
@settings(max_examples=40, deadline=None)
def test_mv_set_monotone_under_removal(g, seed):
    o = all_pairs_distances(g)
    rng = random.Random(seed)
    s = [v for v in range(g.n) if rng.random() < 0.5]
    if is_mv_set(g, o, s):
        for drop in s:
            assert is_mv_set(g, o, [v for v in s if v != drop])


@given(connected_graphs(max_n=8), st.integers(min_value=0, max_value=2**32 - 1))
@settings(max_examples=40, deadline=None)
def test_gp_implies_mv(g, seed):
    o = all_pairs_distances(g)
    rng = random.Random(seed)
    s = [v for v in range(g.n) if rng.random() < 0.4]
    if is_gp_set(o, s):
        assert is_mv_set(g, o, s)


@given(connected_graphs(max_n=7))
@settings(max_examples=40, deadline=None)
def test_solver_matches_naive_oracle(g):
    naive = brute_chi_mu(g, 3)
    for k in (1, 2, 3):
        outcome = mv_k_colorable(g, k)
        assert outcome.status in (Status.FEASIBLE, Status.INFEASIBLE)
        expected = naive is not None and naive <= k
        assert (outcome.status is Status.FEASIBLE) == expected


@given(
    st.integers(min_value=1, max_value=60),
    st.integers(min_value=2, max_value=5),
)
@settings(max_examples=120, deadline=None)
def test_formula_total_or_explicit_gap(r, t):
    res = chi_mu_formula(r, t)
    if res.gap:
        assert t % 2 == 1
        assert res.value is None
        assert res.candidates == (2 * (r - res.i) + 2, 2 * (r - res.i) + 3)
    else:
        assert res.value >= 2
        assert res.candidates == ()
    # the interval index is the unique one containing r
    a_i = (t ** (res.i - 1) - 1) // (t - 1)
    a_next = (t**res.i - 1) // (t - 1)
    assert a_i + res.i - 1 <= r <= a_next + res.i - 1 or r == 1
