"""Shared fixtures: the small named graphs and a few brute-force helpers.

Vertex names follow the usual letters, ``a = 0``, ``b = 1`` and so on.
"""

from __future__ import annotations

import sys

import numpy as np
import pytest

from ghtree import Hypergraph, WeightedGraph, cut_value
from ghtree.generators import gnp, grid, two_cliques_bridge


def path_graph():
    # a-b weight 3, b-c weight 2
    return WeightedGraph(3, [(0, 1, 3), (1, 2, 2)])


def triangle():
    return WeightedGraph(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])


def k4():
    return WeightedGraph(4, [(a, b, 1) for a in range(4) for b in range(a + 1, 4)])


def bridge():
    """Unit triangles abc and def joined by the bridge c-d."""
    return two_cliques_bridge(6)


def star():
    # center 0, leaves 1 2 3
    return WeightedGraph(4, [(0, 1, 1), (0, 2, 1), (0, 3, 1)])


def h1():
    """Hyperedges abc, bcd, ad, all unit."""
    return Hypergraph(4, [[0, 1, 2], [1, 2, 3], [0, 3]])


def small_fixtures():
    """Every named fixture with n <= 14, paired with the terminal sets used on it."""
    out = [
        ("path", path_graph(), [None, [0, 2]]),
        ("triangle", triangle(), [None]),
        ("k4", k4(), [None, [0, 1, 2]]),
        ("two-triangle-bridge", bridge(), [None, [0, 1, 2, 3], [0, 4]]),
        ("star", star(), [None]),
        ("grid3x3", grid(3, 3), [None, [0, 4, 8]]),
        ("grid3x4w", grid(3, 4, (1, 5), seed=2), [None]),
        ("two-k4-bridge", two_cliques_bridge(8), [None]),
    ]
    for seed in range(8):
        G = gnp(8 + seed % 7, 0.35, (1, 6), seed=seed)
        out.append((f"gnp-{seed}", G, [None, [0, 1, 2, 3, 4], [1, G.n - 1]]))
    return out


def lambda_classes(lam: np.ndarray, U, k: int) -> list[list[int]]:
    """Classes of ``U`` under ``lambda >= k``, as sorted lists ordered by smallest member."""
    U = sorted(U)
    seen, out = set(), []
    for u in U:
        if u in seen:
            continue
        cls = [v for v in U if v == u or lam[u, v] >= k]
        seen.update(cls)
        out.append(cls)
    return out


def brute_threshold(lam: np.ndarray, U) -> tuple[int, list[int]]:
    """Largest tau whose largest tau-class holds more than half of ``U``."""
    U = sorted(U)
    top = int(max(lam[u, v] for u in U for v in U if u != v))
    for tau in range(top, 0, -1):
        big = max(lambda_classes(lam, U, tau), key=len)
        if 2 * len(big) > len(U):
            return tau, big
    raise AssertionError("connected input always has tau >= 1")


def partial_problems(G, U, tau, P, lam) -> list[str]:
    """Everything wrong with partial tree ``P`` for ``(G, U, tau)``, empty if correct."""
    bad = []
    got = sorted(sorted(grp.tolist()) for grp in P.nodes)
    want = sorted(lambda_classes(lam, U, tau + 1))
    if got != want:
        bad.append(f"classes {got} != {want}")
    if len(P.edges) != len(P.nodes) - 1:
        bad.append("edge count is not classes - 1")
    cls = P.class_of()
    for u in U:
        if P.preimage[u] != cls[u]:
            bad.append(f"terminal {u} maps outside its class")
    for i, (a, b, w) in enumerate(P.edges):
        if w != tau:
            bad.append(f"edge {a}-{b} has weight {w}")
        side = P.side(i, a)
        if side.size in (0, G.n) or cut_value(G, side) != w:
            bad.append(f"edge {a}-{b} preimage does not cut {w}")
    return bad


@pytest.fixture
def gbt():
    return bridge()


def pytest_terminal_summary(terminalreporter):
    # acceptance criteria print one line each at the end of the run
    lines = []
    for mod in list(sys.modules.values()):
        lines.extend(getattr(mod, "ACCEPTANCE_RESULTS", {}).items())
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
