import pytest

from conftest import bridge
from ghtree import InvalidInputError, connected_components
from ghtree.generators import KINDS, generate, gnm, gnp, grid, hyper_random, tree_plus_edges, two_cliques_bridge
from ghtree.graph import format_graph
from ghtree.hypergraph import format_hypergraph


def test_gnp_is_deterministic():
    a = format_graph(gnp(10, 0.4, (1, 5), seed=7))
    b = format_graph(gnp(10, 0.4, (1, 5), seed=7))
    assert a == b
    assert a != format_graph(gnp(10, 0.4, (1, 5), seed=8))


def test_canonical_bridge():
    assert two_cliques_bridge(6) == bridge()


def test_hyper_random_format():
    H = hyper_random(8, 10, (2, 4), seed=1)
    lines = format_hypergraph(H).splitlines()
    assert lines[0].split()[:2] == ["h", "8"]
    assert sum(int(line.split()[1]) for line in lines[1:]) == H.p
    assert all(2 <= len(e) <= 4 for e, _ in H.hyperedges())


@pytest.mark.parametrize("seed", range(5))
def test_connected_generators(seed):
    for G in (gnp(30, 0.02, seed=seed), gnm(40, 60, seed), tree_plus_edges(25, 3, seed=seed),
              hyper_random(12, 2, seed=seed, connected=True)):
        assert len(connected_components(G)) == 1


def test_gnm_counts():
    G = gnm(200, 2000, 0)
    assert G.m == 2000 and G.max_weight == 1


def test_grid_shape():
    G = grid(3, 4)
    assert G.n == 12 and G.m == 17


@pytest.mark.parametrize("kind", KINDS)
def test_generate_dispatch(kind):
    assert generate(kind, 3).n >= 2


def test_invalid_params():
    with pytest.raises(InvalidInputError):
        gnp(5, 1.5)
    with pytest.raises(InvalidInputError):
        two_cliques_bridge(5)
    with pytest.raises(InvalidInputError):
        generate("petersen")
    with pytest.raises(InvalidInputError):
        gnp(5, 0.5, (0, 3))
