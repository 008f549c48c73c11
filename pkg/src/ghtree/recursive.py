"""The recursive Gomory-Hu construction on few maxflow calls.

One level of the recursion on ``(G, U)``:

1. find the largest ``tau`` whose ``tau``-connected component ``C`` holds
   more than half of ``U`` (only ``A = C ∩ U`` is needed);
2. contract ``A`` into one terminal and solve the remaining, smaller
   instance; the subtrees hanging off that terminal are mincuts that can
   all be contracted at once, giving ``G_large``;
3. build the ``(tau+1)``-partial tree of ``A`` on ``G_large``;
4. solve each ``(tau+1)``-class with the neighbouring parts of the partial
   tree contracted;
5. glue everything, reattaching every edge at the terminal that the
   contracted vertex on the other side was mapped to, so every tree edge
   still cuts along an actual mincut.

Small terminal sets fall back to the classic algorithm.  The graph code
only relies on ``n``, ``size``, ``degrees``, ``quotient`` and the
maxflow routines, so hypergraphs run through the same path.
"""

from __future__ import annotations

import time

import numpy as np

from . import stats as _stats
from .classic import classic_steiner_tree
from .config import DEFAULT_CONFIG, GHConfig
from .decomposition import _terminal_array, find_threshold
from .errors import InvalidInputError, RandomizedFailureError
from .graph import WeightedGraph, connected_components, split_labels
from .hypergraph import Hypergraph
from .partial import partial_ghtree
from .rng import RngHandle, as_rng
from .stats import RecursionStats
from .tree import GomoryHuTree


def _hanging(edges, root, n_nodes=None):
    """Index of the subtree (off ``root``) containing each tree node.

    ``edges`` are ``(a, b, w)`` over hashable node ids.  Returns
    ``(index_of, neighbours)`` where ``neighbours[i]`` is the neighbour of
    ``root`` heading subtree ``i``.
    """
    adj: dict = {}
    for a, b, _ in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    nbrs = sorted(adj.get(root, []))
    index_of = {}
    for i, y in enumerate(nbrs):
        index_of[y] = i
        stack = [y]
        while stack:
            x = stack.pop()
            for z in adj[x]:
                if z != root and z not in index_of:
                    index_of[z] = i
                    stack.append(z)
    return index_of, nbrs


def _spawn_check(child: int, parent: int, seed):
    if 3 * child > 2 * parent:
        raise RandomizedFailureError(
            f"sub-instance keeps {child} of {parent} terminals", seed=seed)


def _build(G, U, rng: RngHandle, config: GHConfig, level: int, seed):
    """Edges over ``U`` and the map ``f`` for a connected instance."""
    stats = _stats.active()
    if stats is not None:
        stats.record_instance(level, G.n, G.size, U.size)
    if U.size == 1:
        return [], np.full(G.n, U[0], dtype=np.int64)
    if U.size <= config.base_case_size(G.n):
        return classic_steiner_tree(G, U, solver=config.solver)

    thr = find_threshold(G, U, rng.split(), config)
    tau, A = thr.tau, thr.component_terminals

    # small side: A becomes one terminal x
    block = np.full(G.n, -1, dtype=np.int64)
    block[A] = 0
    lab_s, k_s, kept_s, sup = split_labels(block)
    x = int(sup[0])
    G_small = G.quotient(lab_s, k_s)
    U_small = np.append(lab_s[U[~np.isin(U, A)]], x)
    _spawn_check(U_small.size, U.size, seed)
    E_s, f_s = _build(G_small, U_small, rng.split(), config, level + 1, seed)

    # large side: every subtree hanging off x collapses to one vertex
    index_of, nbrs = _hanging(E_s, x)
    sub_of_term = np.full(k_s, -1, dtype=np.int64)
    for t, i in index_of.items():
        sub_of_term[t] = i
    block_l = sub_of_term[f_s[lab_s]]
    lab_l, k_l, kept_l, sup_l = split_labels(block_l)
    G_large = G.quotient(lab_l, k_l)
    U_large = lab_l[A]

    P = partial_ghtree(G_large, U_large, tau, rng.split(), config)
    f_large = np.full(k_l, -1, dtype=np.int64)
    E_large = []
    contact: dict[tuple[int, int], int] = {}
    for i, members in enumerate(P.nodes):
        node_index, node_nbrs = _hanging(P.edges, i)
        comp = np.full(P.num_classes, -1, dtype=np.int64)
        for c, j in node_index.items():
            comp[c] = j
        lab_c, k_c, kept_c, sup_c = split_labels(comp[P.preimage])
        G_c = G_large.quotient(lab_c, k_c)
        U_c = lab_c[members]
        _spawn_check(U_c.size, U.size, seed)
        E_c, f_c = _build(G_c, U_c, rng.split(), config, level + 1, seed)
        f_large[kept_c] = kept_c[f_c[: kept_c.size]]
        E_large.extend((int(kept_c[a]), int(kept_c[b]), w) for a, b, w in E_c)
        for j, y in enumerate(node_nbrs):
            contact[(i, y)] = int(kept_c[f_c[sup_c[j]]])
    assert (f_large >= 0).all(), "large side left a vertex unmapped"
    E_large.extend((contact[(a, b)], contact[(b, a)], w) for a, b, w in P.edges)

    f = np.empty(G.n, dtype=np.int64)
    root = block_l < 0
    f[root] = kept_l[f_large[lab_l[root]]]
    f[~root] = kept_s[f_s[lab_s[~root]]]

    def lift_small(a, b):
        if a == x:
            return int(kept_l[f_large[sup_l[index_of[b]]]])
        return int(kept_s[a])

    edges = [(int(kept_l[a]), int(kept_l[b]), w) for a, b, w in E_large]
    edges.extend((lift_small(a, b), lift_small(b, a), w) for a, b, w in E_s)
    return edges, f


def _induced(G, verts: np.ndarray):
    """Sub-instance on ``verts`` (a union of components) with local ids."""
    local = np.full(G.n, -1, dtype=np.int64)
    local[verts] = np.arange(verts.size)
    if isinstance(G, Hypergraph):
        labels = np.where(local >= 0, local, verts.size)
        Q = G.quotient(labels, verts.size + 1)
        return Hypergraph._from_map(int(verts.size), {m: w for m, w in Q.hyperedges()})
    keep = local[G.u] >= 0
    return WeightedGraph.from_arrays(
        int(verts.size), local[G.u[keep]], local[G.v[keep]], G.w[keep], validate=False)


def _solve(G, U, rng, config, classic):
    """Edges and ``f`` for any (possibly disconnected) instance."""
    comps = connected_components(G)
    if len(comps) == 1:
        if classic:
            return classic_steiner_tree(G, U, solver=config.solver)
        return _build(G, U, rng, config, 0, rng.seed)
    f = np.full(G.n, U[0], dtype=np.int64)
    edges = []
    in_u = np.zeros(G.n, dtype=bool)
    in_u[U] = True
    anchors = []
    for comp in comps:
        Uc = np.flatnonzero(in_u[comp])
        if Uc.size == 0:
            continue
        sub = _induced(G, comp)
        if classic:
            E, fc = classic_steiner_tree(sub, Uc, solver=config.solver)
        else:
            E, fc = _build(sub, Uc, rng.split(), config, 0, rng.seed)
        f[comp] = comp[fc]
        edges.extend((int(comp[a]), int(comp[b]), w) for a, b, w in E)
        anchors.append(int(comp[Uc[0]]))
    # no cut separates different components, so they hang off each other at 0
    edges.extend((anchors[0], a, 0) for a in anchors[1:])
    return edges, f


def compute_ghtree(G, U=None, rng=0, config: GHConfig = DEFAULT_CONFIG, *,
                   classic: bool = False, verify: bool = False) -> GomoryHuTree:
    """Gomory-Hu Steiner tree of ``G`` over terminals ``U`` (default: all vertices).

    Randomized failures and, with ``verify=True``, failed certificates are
    retried on fresh random streams up to ``config.max_retries`` times.
    """
    U = np.arange(G.n, dtype=np.int64) if U is None else _terminal_array(G, U)
    if U.size == 0:
        raise InvalidInputError("terminal set must be nonempty")
    rng = as_rng(rng)
    retries = 0
    last_error = None
    for _ in range(config.max_retries + 1):
        stats = RecursionStats(seed=rng.seed)
        start = time.perf_counter()
        try:
            with _stats.collecting(stats):
                edges, f = _solve(G, U, rng, config, classic)
        except RandomizedFailureError as exc:
            last_error = exc
        else:
            stats.wall_ms = (time.perf_counter() - start) * 1000.0
            stats.retries = retries
            tree = GomoryHuTree(U, edges, f, stats)
            if not verify:
                return tree
            from .oracle import verify_ghtree

            if verify_ghtree(G, U, tree).ok:
                return tree
            last_error = RandomizedFailureError("tree failed verification", seed=rng.seed)
        retries += 1
        rng = rng.split()
    raise last_error


def classic_ghtree(G, U=None, *, config: GHConfig = DEFAULT_CONFIG) -> GomoryHuTree:
    """The classic ``|U| - 1`` maxflow construction."""
    return compute_ghtree(G, U, 0, config, classic=True)


def hyper_ghtree(H: Hypergraph, U=None, rng=0, config: GHConfig = DEFAULT_CONFIG, **kw) -> GomoryHuTree:
    if not isinstance(H, Hypergraph):
        raise TypeError("hyper_ghtree expects a Hypergraph")
    return compute_ghtree(H, U, rng, config, **kw)
