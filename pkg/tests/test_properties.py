"""Randomized properties checked against brute force."""

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from ghtree import (
    GHConfig,
    Hypergraph,
    WeightedGraph,
    compute_ghtree,
    compute_isolating_cuts,
    contract,
    cut_value,
    hyper_ghtree,
    maxflow,
    verify_ghtree,
)
from ghtree.oracle import enumerate_all_pairs, enumerate_mincut


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(2, max_n))
    pairs = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1), st.integers(1, 9))
    edges = draw(st.lists(pairs, max_size=3 * n))
    return WeightedGraph(n, edges)


@st.composite
def hypergraphs(draw, max_n=8):
    n = draw(st.integers(2, max_n))
    edge = st.lists(st.integers(0, n - 1), min_size=2, max_size=min(n, 4), unique=True)
    return Hypergraph(n, draw(st.lists(edge, max_size=2 * n)))


@settings(max_examples=60, deadline=None)
@given(graphs(), st.data())
def test_cut_value_is_symmetric(G, data):
    side = data.draw(st.sets(st.integers(0, G.n - 1), min_size=1, max_size=G.n - 1))
    rest = set(range(G.n)) - side
    assert cut_value(G, side) == cut_value(G, rest)


@settings(max_examples=60, deadline=None)
@given(graphs(), st.data())
def test_contraction_keeps_cuts_of_unions(G, data):
    part = sorted(data.draw(st.sets(st.integers(0, G.n - 1), min_size=1, max_size=G.n)))
    Q, cmap = contract(G, [part])
    if Q.n < 2:
        return
    qside = data.draw(st.sets(st.integers(0, Q.n - 1), min_size=1, max_size=Q.n - 1))
    assert cut_value(Q, qside) == cut_value(G, cmap.preimage(qside))


@settings(max_examples=60, deadline=None)
@given(graphs(), st.data())
def test_maxflow_matches_enumeration(G, data):
    s, t = data.draw(st.lists(st.integers(0, G.n - 1), min_size=2, max_size=2, unique=True))
    value, side = enumerate_mincut(G, s, t)
    res = maxflow(G, s, t)
    assert res.value == value
    assert set(res.source_side.tolist()) <= set(side.tolist())


@settings(max_examples=40, deadline=None)
@given(graphs(), st.data())
def test_isolating_sides_are_disjoint_and_isolating(G, data):
    k = data.draw(st.integers(2, G.n))
    picks = data.draw(st.lists(st.integers(0, G.n - 1), min_size=k, max_size=k, unique=True))
    groups = [[v] for v in picks]
    res = compute_isolating_cuts(G, groups)
    owner = np.full(G.n, -1)
    for c in res:
        assert (owner[c.side] == -1).all()
        owner[c.side] = c.group
        assert set(c.side.tolist()) & set(picks) == {picks[c.group]}


@settings(max_examples=50, deadline=None)
@given(graphs(max_n=10), st.integers(0, 2**32 - 1))
def test_tree_matches_enumeration(G, seed):
    T = compute_ghtree(G, None, seed, GHConfig(base_factor=0.1))
    lam = enumerate_all_pairs(G)
    for (s, t), v in T.all_pairs().items():
        assert v == lam[s, t]
    assert verify_ghtree(G, None, T).ok


@settings(max_examples=40, deadline=None)
@given(hypergraphs(), st.integers(0, 2**32 - 1))
def test_hypertree_matches_enumeration(H, seed):
    T = hyper_ghtree(H, None, seed, GHConfig(base_factor=0.1))
    lam = enumerate_all_pairs(H)
    for (s, t), v in T.all_pairs().items():
        assert v == lam[s, t]
