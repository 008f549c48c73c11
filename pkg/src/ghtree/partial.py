"""Partial Gomory-Hu trees over the (tau+1)-connected classes of a terminal set.

Given terminals ``U`` that are pairwise ``tau``-connected, the tree has one
node per ``(tau+1)``-connected class of ``U`` and every edge carries weight
``tau``: it records exactly the mincuts of value below ``tau + 1``.

The construction repeatedly peels off balanced cuts of value ``tau`` found
by :func:`balanced_decomposition`, recursing on each piece (the rest of
the graph contracted to one vertex) and on the remainder (each piece
contracted to one vertex), and then joins the sub-trees along the cuts.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

import numpy as np

from . import stats as _stats
from .config import DEFAULT_CONFIG, GHConfig
from .decomposition import _decompose, _terminal_array
from .errors import InvalidInputError, RandomizedFailureError
from .graph import CutResult, split_labels
from .rng import RngHandle, as_rng


@dataclass(frozen=True)
class PartialTree:
    """Tree over terminal classes plus the vertex-to-class map.

    ``nodes[i]`` holds the sorted terminals of class ``i``; ``edges`` are
    ``(i, j, weight)`` triples over class indices; ``preimage[v]`` is the
    class index vertex ``v`` is mapped to.
    """

    nodes: list[np.ndarray]
    edges: list[tuple[int, int, int]]
    preimage: np.ndarray

    @property
    def num_classes(self) -> int:
        return len(self.nodes)

    def class_of(self) -> dict[int, int]:
        """Terminal id to class index."""
        return {int(u): i for i, grp in enumerate(self.nodes) for u in grp.tolist()}

    def side(self, edge_index: int, anchor: int) -> np.ndarray:
        """Vertices mapped into the component of ``anchor`` after deleting an edge."""
        a, b, _ = self.edges[edge_index]
        adj = [[] for _ in self.nodes]
        for k, (x, y, _) in enumerate(self.edges):
            if k != edge_index:
                adj[x].append(y)
                adj[y].append(x)
        seen = np.zeros(len(self.nodes), dtype=bool)
        seen[anchor] = True
        stack = [anchor]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        return np.flatnonzero(seen[self.preimage])


def _single(n: int, U: np.ndarray) -> PartialTree:
    return PartialTree([U], [], np.zeros(n, dtype=np.int64))


def combine(G, rest: PartialTree, rest_kept: np.ndarray, y_ids: list[int],
            pieces: list[tuple[PartialTree, np.ndarray, int, int]]) -> PartialTree:
    """Join piece trees onto the remainder tree along their cuts.

    ``rest`` lives on the graph where every piece ``i`` is the vertex
    ``y_ids[i]`` and the other vertices are ``rest_kept`` in order.  Each piece
    is ``(tree, side, x_id, weight)`` where ``tree`` lives on the graph with
    ``side`` kept in order and the complement merged into ``x_id``.
    """
    nodes = [rest_kept[grp] for grp in rest.nodes]
    edges = list(rest.edges)
    preimage = np.full(G.n, -1, dtype=np.int64)
    preimage[rest_kept] = rest.preimage[: rest_kept.size]
    for (tree, side, x_id, weight), y in zip(pieces, y_ids):
        offset = len(nodes)
        nodes.extend(side[grp] for grp in tree.nodes)
        edges.extend((a + offset, b + offset, w) for a, b, w in tree.edges)
        preimage[side] = tree.preimage[: side.size] + offset
        edges.append((int(tree.preimage[x_id]) + offset, int(rest.preimage[y]), int(weight)))
    assert (preimage >= 0).all(), "combine left a vertex unmapped"
    assert len(edges) == len(nodes) - 1
    return PartialTree(nodes, edges, preimage)


def _singleton_cuts(G, U, tau, cuts):
    """Add ``{u}`` for every terminal whose degree already matches ``tau``."""
    covered = np.zeros(G.n, dtype=bool)
    for c in cuts:
        covered[c.side] = True
    light = U[(G.degrees[U] <= tau) & ~covered[U]]
    return cuts + [CutResult(np.array([u]), int(G.degrees[u])) for u in light.tolist()]


def _run(G, U, tau, rng, config, depth, cap, stall_limit, seed):
    stats = _stats.active()
    stall = 0
    while True:
        if stats is not None:
            stats.partial_depth = max(stats.partial_depth, depth)
        if U.size <= 1 or depth >= cap or stall >= stall_limit:
            return _single(G.n, U)
        cuts, sampled = _decompose(G, U, tau + 1, rng.split(), config.solver)
        if config.degree_prune:
            cuts = _singleton_cuts(G, U, tau, cuts)
        if not cuts:
            # the remainder is the whole instance again
            depth += 1
            stall += sampled
            continue
        in_cut = np.zeros(G.n, dtype=bool)
        for c in cuts:
            in_cut[c.side] = True
        if in_cut[U].all():
            drop = max(range(len(cuts)), key=lambda i: int(cuts[i].side[0]))
            cuts = cuts[:drop] + cuts[drop + 1:]
        break

    pieces = []
    block = np.full(G.n, -1, dtype=np.int64)
    for i, c in enumerate(cuts):
        if c.value != tau:
            raise RandomizedFailureError(
                f"partial tree cut has value {c.value}, expected {tau}", seed=seed)
        block[c.side] = i
        side_mask = np.zeros(G.n, dtype=bool)
        side_mask[c.side] = True
        Ui = U[side_mask[U]]
        if Ui.size > 1:
            outside = np.where(side_mask, -1, 0)
            labels, k, kept, _ = split_labels(outside)
            Gi = G.quotient(labels, k)
            Ti = _run(Gi, labels[Ui], tau, rng.split(), config, depth + 1, cap, stall_limit, seed)
            pieces.append((Ti, kept, k - 1, c.value))
        else:
            local = np.searchsorted(c.side, Ui)
            pieces.append((_single(c.side.size + 1, local), c.side, c.side.size, c.value))

    labels, k, kept, super_of = split_labels(block)
    Grest = G.quotient(labels, k)
    Urest = U[block[U] < 0]
    Trest = _run(Grest, labels[Urest], tau, rng.split(), config, depth + 1, cap, stall_limit, seed)
    y_ids = [int(super_of[i]) for i in range(len(cuts))]
    return combine(G, Trest, kept, y_ids, pieces)


def partial_ghtree(G, U, tau: int, rng: RngHandle, config: GHConfig = DEFAULT_CONFIG,
                   *, depth_cap_n: int | None = None) -> PartialTree:
    """Partial tree over the ``(tau+1)``-classes of the ``tau``-connected set ``U``.

    ``depth_cap_n`` sets the vertex count used for the recursion depth cap
    (default: ``G.n``).
    """
    U = _terminal_array(G, U)
    if U.size == 0:
        raise InvalidInputError("terminal set must be nonempty")
    if int(tau) != tau or tau < 1:
        raise InvalidInputError("tau must be a positive integer")
    rng = as_rng(rng)
    n_cap = G.n if depth_cap_n is None else depth_cap_n
    cap = config.partial_cap(n_cap)
    stall_limit = config.stall_rounds(n_cap)
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 20 * cap + 1000))
    return _run(G, U, int(tau), rng, config, 0, cap, stall_limit, rng.seed)
