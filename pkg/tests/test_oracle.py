import numpy as np
import pytest

from conftest import bridge, h1, k4, path_graph
from ghtree import (
    GomoryHuTree,
    OracleRefusedError,
    all_pairs_mincut,
    compute_ghtree,
    enumerate_all_pairs,
    enumerate_mincut,
    oracle_maxflow,
    verify_ghtree,
)
from ghtree.generators import gnp, hyper_random


def test_all_pairs_examples():
    lam = all_pairs_mincut(bridge())
    for s in range(6):
        for t in range(6):
            if s != t:
                assert lam[s, t] == (2 if (s < 3) == (t < 3) else 1)
    lam = all_pairs_mincut(path_graph())
    assert (lam[0, 1], lam[0, 2], lam[1, 2]) == (3, 2, 2)
    assert set(all_pairs_mincut(k4())[np.triu_indices(4, 1)].tolist()) == {3}


def test_enumerate_ties_and_sides():
    value, side = enumerate_mincut(bridge(), 0, 4)
    assert value == 1 and side.tolist() == [0, 1, 2]
    # a-b in the unit triangle: {a} and {a, c} both cut 2, the smaller wins
    from conftest import triangle

    value, side = enumerate_mincut(triangle(), 0, 1)
    assert value == 2 and side.tolist() == [0]


def test_caps():
    with pytest.raises(OracleRefusedError):
        all_pairs_mincut(gnp(61, 0.1, seed=0))
    with pytest.raises(OracleRefusedError):
        enumerate_mincut(gnp(15, 0.3, seed=0), 0, 1)


@pytest.mark.parametrize("seed", range(20))
def test_oracles_agree(seed):
    G = gnp(10, 0.35, (1, 7), seed=seed, connected=bool(seed % 2))
    lam = all_pairs_mincut(G)
    assert np.array_equal(lam, enumerate_all_pairs(G))
    assert lam[0, 9] == oracle_maxflow(G, 0, 9).value


@pytest.mark.parametrize("seed", range(5))
def test_hypergraph_oracles_agree(seed):
    H = hyper_random(9, 12, (2, 4), seed=seed)
    assert np.array_equal(all_pairs_mincut(H), enumerate_all_pairs(H))


def test_verify_accepts_correct_tree(gbt):
    rep = verify_ghtree(gbt, None, compute_ghtree(gbt))
    assert rep.ok and rep.pairs_checked == 15 and rep.edges_checked == 5


def test_verify_flags_wrong_weight(gbt):
    T = compute_ghtree(gbt)
    a, b, w = T.edges[0]
    bad = GomoryHuTree(T.terminals, [(a, b, w + 1)] + T.edges[1:], T.f)
    rep = verify_ghtree(gbt, None, bad)
    assert not rep.ok
    assert rep.edge_errors == [(a, b, w + 1, w)]
    assert rep.pair_errors and all(got == w + 1 for _, _, got, _ in rep.pair_errors)


def test_verify_flags_unassigned_vertex(gbt):
    T = compute_ghtree(gbt, [0, 4])
    f = T.f.copy()
    f[1] = -1
    rep = verify_ghtree(gbt, [0, 4], GomoryHuTree(T.terminals, T.edges, f))
    assert rep.structure_errors and not rep.ok


def test_verify_flags_shape_errors(gbt):
    T = compute_ghtree(gbt)
    rep = verify_ghtree(gbt, None, GomoryHuTree(T.terminals, T.edges[:-1], T.f))
    assert "edge count is not |U| - 1" in rep.structure_errors


def test_verify_refuses_large_pairs_but_checks_edges():
    G = gnp(80, 0.08, seed=3)
    rep = verify_ghtree(G, None, compute_ghtree(G))
    assert rep.ok and rep.oracle_refused and rep.edges_checked == 79


def test_verify_hypergraph():
    assert verify_ghtree(h1(), None, compute_ghtree(h1())).ok
