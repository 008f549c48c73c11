import numpy as np
import pytest

from conftest import bridge, k4, path_graph, triangle
from ghtree import (
    GHConfig,
    GomoryHuTree,
    InvalidInputError,
    InvalidQueryError,
    WeightedGraph,
    classic_ghtree,
    classic_steiner_tree,
    compute_ghtree,
    k_components,
    read_tree,
    tree_query,
    verify_ghtree,
    write_tree,
)
from ghtree.generators import gnp
from ghtree.oracle import all_pairs_mincut
from ghtree.tree import parse_tree

# tiny base case so small graphs go through the full recursion
DEEP = GHConfig(base_factor=0.1)


def _pairs(T):
    return T.all_pairs()


def test_bridge_values():
    T = compute_ghtree(bridge(), None, 0)
    vals = _pairs(T)
    for (s, t), v in vals.items():
        assert v == (2 if (s < 3) == (t < 3) else 1)
    assert verify_ghtree(bridge(), None, T).ok


def test_path_is_its_own_tree():
    T = compute_ghtree(path_graph())
    assert T.edges == [(0, 1, 3), (1, 2, 2)]


@pytest.mark.parametrize("build", [compute_ghtree, classic_ghtree])
def test_single_terminal(build):
    T = build(bridge(), [3])
    assert T.edges == [] and T.f.tolist() == [3] * 6


def test_classic_examples():
    edges, f = classic_steiner_tree(triangle(), np.arange(3))
    assert sorted(w for _, _, w in edges) == [2, 2]
    edges, f = classic_steiner_tree(path_graph(), np.array([0, 2]))
    assert edges == [(0, 2, 2)]
    assert f[1] == 0  # b sits on a's side of the bottleneck
    edges, _ = classic_steiner_tree(k4(), np.arange(4))
    assert [w for _, _, w in edges] == [3, 3, 3]


def test_query_examples(gbt):
    T = compute_ghtree(gbt)
    value, side = tree_query(T, 0, 4)
    assert value == 1 and side.tolist() == [0, 1, 2]
    assert T.value(0, 1) == 2
    P = compute_ghtree(path_graph())
    assert P.value(0, 2) == 2


def test_query_errors(gbt):
    T = compute_ghtree(gbt, [0, 4])
    with pytest.raises(InvalidQueryError):
        T.query(0, 0)
    with pytest.raises(InvalidQueryError):
        T.query(0, 2)


def test_k_components(gbt):
    T = compute_ghtree(gbt)
    assert [c.tolist() for c in k_components(T, 2)] == [[0, 1, 2], [3, 4, 5]]
    assert [c.tolist() for c in k_components(T, 1)] == [list(range(6))]
    assert len(k_components(T, 3)) == 6


def test_tree_file_roundtrip(tmp_path, gbt):
    T = compute_ghtree(gbt)
    write_tree(T, tmp_path / "t.txt")
    back = read_tree(tmp_path / "t.txt")
    assert back.edges == T.edges and np.array_equal(back.f, T.f)
    assert np.array_equal(back.terminals, T.terminals)


@pytest.mark.parametrize("text", ["", "# ghtree n=2 terminals=0 1\n0 1\n", "# ghtree n=2 terminals=0 1\n0 5 1\n"])
def test_tree_file_errors(text):
    with pytest.raises(InvalidInputError):
        parse_tree(text)


def test_disconnected_input():
    G = WeightedGraph(7, [(0, 1, 2), (1, 2, 1), (3, 4, 5), (5, 6, 1)])
    T = compute_ghtree(G, [0, 2, 3, 4])
    assert T.value(0, 3) == 0 and T.value(3, 4) == 5 and T.value(0, 2) == 1
    rep = verify_ghtree(G, [0, 2, 3, 4], T)
    assert rep.ok, rep


@pytest.mark.parametrize("seed", range(25))
def test_deep_recursion_matches_oracle(seed):
    G = gnp(22, 0.3, (1, 6), seed=seed)
    T = compute_ghtree(G, None, seed, DEEP)
    assert T.stats.depth >= 1
    rep = verify_ghtree(G, None, T)
    assert rep.ok, rep


@pytest.mark.parametrize("seed", range(10))
def test_deep_recursion_terminal_subsets(seed):
    G = gnp(20, 0.25, (1, 4), seed=100 + seed)
    rng = np.random.default_rng(seed)
    U = np.sort(rng.choice(20, 12, replace=False))
    T = compute_ghtree(G, U, seed, DEEP)
    assert verify_ghtree(G, U, T).ok
    lam = all_pairs_mincut(G)
    for (s, t), v in T.all_pairs().items():
        assert v == lam[s, t]


def test_reproducible():
    G = gnp(30, 0.2, (1, 9), seed=4)
    a = compute_ghtree(G, None, 11, DEEP)
    b = compute_ghtree(G, None, 11, DEEP)
    assert a.edges == b.edges and np.array_equal(a.f, b.f)


def test_verify_flag_and_stats():
    G = gnp(25, 0.3, seed=1)
    T = compute_ghtree(G, None, 3, DEEP, verify=True)
    assert T.stats.maxflow_calls > 0 and T.stats.wall_ms > 0
    assert T.stats.instance_edge_sum >= G.m


def test_tree_dataclass_normalises_edges():
    T = GomoryHuTree([2, 0], [(2, 0, 4)], [0, 0, 2])
    assert T.edges == [(0, 2, 4)] and T.terminals.tolist() == [0, 2]
