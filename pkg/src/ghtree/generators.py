"""Seeded instance generators.

Every generator is a pure function of its parameters and seed.  With
``connected=True`` a uniformly random recursive spanning tree is added
first, so the result is connected.
"""

from __future__ import annotations

import numpy as np

from .errors import InvalidInputError
from .graph import WeightedGraph
from .hypergraph import Hypergraph


def _weights(rng, size, w_range):
    lo, hi = w_range
    if lo < 1 or hi < lo:
        raise InvalidInputError("weight range must satisfy 1 <= lo <= hi")
    return rng.integers(lo, hi + 1, size=size)


def _spanning_pairs(rng, n):
    if n < 2:
        return np.zeros((0, 2), dtype=np.int64)
    order = rng.permutation(n)
    child = order[1:]
    parent = order[(rng.random(n - 1) * np.arange(1, n)).astype(np.int64)]
    return np.stack([child, parent], axis=1)


def gnp(n: int, p: float, w_range=(1, 1), seed: int = 0, *, connected: bool = True) -> WeightedGraph:
    """Erdos-Renyi graph; each pair joins independently with probability ``p``."""
    if n < 1 or not 0.0 <= p <= 1.0:
        raise InvalidInputError("gnp needs n >= 1 and 0 <= p <= 1")
    rng = np.random.default_rng(seed)
    a, b = np.triu_indices(n, 1)
    keep = rng.random(a.size) < p
    pairs = np.stack([a[keep], b[keep]], axis=1)
    if connected:
        pairs = np.concatenate([pairs, _spanning_pairs(rng, n)])
    w = _weights(rng, len(pairs), w_range)
    return WeightedGraph.from_arrays(n, pairs[:, 0], pairs[:, 1], w)


def gnm(n: int, m: int, seed: int = 0, *, connected: bool = True) -> WeightedGraph:
    """Unweighted graph with exactly ``m`` distinct edges."""
    if n < 2 or m > n * (n - 1) // 2 or (connected and m < n - 1):
        raise InvalidInputError("gnm needs n >= 2 and a feasible edge count")
    rng = np.random.default_rng(seed)
    chosen: set[tuple[int, int]] = set()
    if connected:
        for a, b in _spanning_pairs(rng, n).tolist():
            chosen.add((min(a, b), max(a, b)))
    while len(chosen) < m:
        need = m - len(chosen)
        a = rng.integers(0, n, 2 * need + 8)
        b = rng.integers(0, n, 2 * need + 8)
        for x, y in zip(a.tolist(), b.tolist()):
            if x != y:
                chosen.add((min(x, y), max(x, y)))
                if len(chosen) == m:
                    break
    pairs = np.array(sorted(chosen), dtype=np.int64)
    return WeightedGraph.from_arrays(n, pairs[:, 0], pairs[:, 1])


def two_cliques_bridge(n: int = 6, w: int = 1) -> WeightedGraph:
    """Two cliques on ``n/2`` vertices each, joined by the bridge ``(n/2 - 1, n/2)``."""
    if n < 4 or n % 2:
        raise InvalidInputError("two-cliques-bridge needs an even n >= 4")
    h = n // 2
    edges = [(a, b, w) for a in range(h) for b in range(a + 1, h)]
    edges += [(a + h, b + h, w) for a in range(h) for b in range(a + 1, h)]
    edges.append((h - 1, h, 1))
    return WeightedGraph(n, edges)


def grid(rows: int, cols: int, w_range=(1, 1), seed: int = 0) -> WeightedGraph:
    if rows < 1 or cols < 1:
        raise InvalidInputError("grid needs positive dimensions")
    rng = np.random.default_rng(seed)
    ids = np.arange(rows * cols).reshape(rows, cols)
    pairs = np.concatenate([
        np.stack([ids[:, :-1].ravel(), ids[:, 1:].ravel()], axis=1),
        np.stack([ids[:-1, :].ravel(), ids[1:, :].ravel()], axis=1),
    ])
    w = _weights(rng, len(pairs), w_range)
    return WeightedGraph.from_arrays(rows * cols, pairs[:, 0], pairs[:, 1], w)


def tree_plus_edges(n: int, extra: int, w_range=(1, 1), seed: int = 0) -> WeightedGraph:
    """Random spanning tree plus ``extra`` random (possibly parallel) edges."""
    if n < 1 or extra < 0:
        raise InvalidInputError("tree-plus-edges needs n >= 1 and extra >= 0")
    rng = np.random.default_rng(seed)
    pairs = _spanning_pairs(rng, n)
    if n >= 2 and extra:
        a = rng.integers(0, n, extra)
        b = (a + rng.integers(1, n, extra)) % n
        pairs = np.concatenate([pairs, np.stack([a, b], axis=1)])
    w = _weights(rng, len(pairs), w_range)
    return WeightedGraph.from_arrays(n, pairs[:, 0], pairs[:, 1], w)


def hyper_random(n: int, m: int, arity=(2, 3), seed: int = 0, *, connected: bool = False) -> Hypergraph:
    """``m`` unit hyperedges with sizes drawn uniformly from ``arity``."""
    lo, hi = arity
    if n < 2 or lo < 2 or hi < lo or hi > n or m < 0:
        raise InvalidInputError("hyper-random needs n >= 2 and 2 <= lo <= hi <= n")
    rng = np.random.default_rng(seed)
    edges = [rng.choice(n, int(rng.integers(lo, hi + 1)), replace=False).tolist() for _ in range(m)]
    if connected:
        edges += _spanning_pairs(rng, n).tolist()
    return Hypergraph(n, edges)


KINDS = ("gnp", "gnm", "two-cliques-bridge", "grid", "tree-plus-edges", "hyper-random")


def generate(kind: str, seed: int = 0, **params):
    """Dispatch on ``kind`` with keyword parameters."""
    if kind == "gnp":
        return gnp(params.get("n", 10), params.get("p", 0.3), params.get("w_range", (1, 1)), seed,
                   connected=params.get("connected", True))
    if kind == "gnm":
        return gnm(params.get("n", 10), params.get("m", 20), seed, connected=params.get("connected", True))
    if kind == "two-cliques-bridge":
        return two_cliques_bridge(params.get("n", 6))
    if kind == "grid":
        return grid(params.get("rows", 3), params.get("cols", 3), params.get("w_range", (1, 1)), seed)
    if kind == "tree-plus-edges":
        return tree_plus_edges(params.get("n", 10), params.get("extra", 10), params.get("w_range", (1, 1)), seed)
    if kind == "hyper-random":
        return hyper_random(params.get("n", 8), params.get("m", 10), params.get("arity", (2, 3)), seed,
                            connected=params.get("connected", False))
    raise InvalidInputError(f"unknown generator kind {kind!r}")
