"""Ground truth for small instances and certificates for trees of any size.

``all_pairs_mincut`` runs Gusfield's cut-tree scheme on top of the
shortest-augmenting-path solver, which shares no code with the fast
solvers.  ``enumerate_mincut`` and ``enumerate_all_pairs`` inspect every
cut and are meant for ``n <= 14``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

import numpy as np

from .errors import InvalidQueryError, OracleRefusedError
from .hypergraph import Hypergraph
from .maxflow import oracle_maxflow

MAXFLOW_ORACLE_CAP = 60
ENUMERATION_CAP = 14


# -- exhaustive enumeration -------------------------------------------------------


def _cut_values(G, masks: np.ndarray) -> np.ndarray:
    """Cut value of every row of a boolean ``(k, n)`` mask matrix."""
    if isinstance(G, Hypergraph):
        if G.m == 0:
            return np.zeros(masks.shape[0], dtype=np.int64)
        inside = np.add.reduceat(masks[:, G.members].astype(np.int64), G.eptr[:-1], axis=1)
        crossing = (inside > 0) & (inside < G.sizes)
        return crossing.astype(np.int64) @ G.w
    crossing = masks[:, G.u] != masks[:, G.v]
    return crossing.astype(np.int64) @ G.w


def _subset_masks(n: int, free: np.ndarray) -> np.ndarray:
    k = free.size
    codes = np.arange(2**k, dtype=np.int64)
    masks = np.zeros((codes.size, n), dtype=bool)
    masks[:, free] = ((codes[:, None] >> np.arange(k)) & 1).astype(bool)
    return masks


def enumerate_mincut(G, s: int, t: int, *, cap: int = ENUMERATION_CAP):
    """Minimum ``(s, t)`` cut by inspecting every side containing ``s`` but not ``t``.

    Ties go to the smallest side, then to the lexicographically first one.
    Returns ``(value, side)``.
    """
    if G.n > cap:
        raise OracleRefusedError(f"enumeration is limited to n <= {cap}")
    s, t = int(s), int(t)
    if s == t or not (0 <= s < G.n and 0 <= t < G.n):
        raise InvalidQueryError("need two distinct known vertices")
    free = np.array([v for v in range(G.n) if v not in (s, t)], dtype=np.int64)
    masks = _subset_masks(G.n, free)
    masks[:, s] = True
    values = _cut_values(G, masks)
    best = values.min()
    cands = [np.flatnonzero(row) for row in masks[values == best]]
    side = min(cands, key=lambda c: (c.size, c.tolist()))
    return int(best), side


def enumerate_all_pairs(G, *, cap: int = ENUMERATION_CAP) -> np.ndarray:
    """``lam[s, t]`` for every pair, from the values of all cuts."""
    if G.n > cap:
        raise OracleRefusedError(f"enumeration is limited to n <= {cap}")
    n = G.n
    lam = np.zeros((n, n), dtype=np.int64)
    if n < 2:
        return lam
    # vertex n-1 sits outside every side; complements give the rest
    masks = _subset_masks(n, np.arange(n - 1))[1:]
    values = _cut_values(G, masks)
    for s in range(n):
        for t in range(s + 1, n):
            sep = masks[:, s] != masks[:, t]
            lam[s, t] = lam[t, s] = values[sep].min()
    return lam


# -- maxflow-based all pairs ------------------------------------------------------


def gusfield_tree(G) -> tuple[np.ndarray, np.ndarray]:
    """Gusfield's flow-equivalent tree: ``parent`` and ``weight`` arrays (root 0)."""
    n = G.n
    parent = np.zeros(n, dtype=np.int64)
    weight = np.zeros(n, dtype=np.int64)
    for s in range(1, n):
        t = int(parent[s])
        res = oracle_maxflow(G, s, t)
        weight[s] = res.value
        side = res.source_mask(n)
        later = np.arange(n) > s
        parent[later & side & (parent == t)] = s
    return parent, weight


def all_pairs_mincut(G, *, cap: int = MAXFLOW_ORACLE_CAP) -> np.ndarray:
    """``lam[s, t]`` for every vertex pair via ``n - 1`` oracle maxflows."""
    if G.n > cap:
        raise OracleRefusedError(f"all-pairs oracle is limited to n <= {cap}")
    n = G.n
    lam = np.zeros((n, n), dtype=np.int64)
    if n < 2:
        return lam
    parent, weight = gusfield_tree(G)
    adj = [[] for _ in range(n)]
    for v in range(1, n):
        adj[v].append((int(parent[v]), int(weight[v])))
        adj[int(parent[v])].append((v, int(weight[v])))
    for s in range(n):
        best = {s: None}
        stack = [s]
        while stack:
            x = stack.pop()
            for y, w in adj[x]:
                if y not in best:
                    best[y] = w if best[x] is None else min(best[x], w)
                    stack.append(y)
        for t, w in best.items():
            if t != s:
                lam[s, t] = w
    return lam


# -- certification ------------------------------------------------------------------


@dataclass
class VerificationReport:
    """Everything wrong with a tree; empty lists mean certified.

    ``pair_errors`` holds ``(s, t, tree_value, true_value)``, ``edge_errors``
    holds ``(u, v, weight, cut_value)`` and ``structure_errors`` lists
    violations of the tree shape or of the totality of ``f``.
    """

    pair_errors: list = field(default_factory=list)
    edge_errors: list = field(default_factory=list)
    structure_errors: list = field(default_factory=list)
    oracle_refused: bool = False
    pairs_checked: int = 0
    edges_checked: int = 0

    @property
    def ok(self) -> bool:
        return not (self.pair_errors or self.edge_errors or self.structure_errors)

    def to_dict(self) -> dict:
        out = asdict(self)
        out["ok"] = self.ok
        return out


def _structure(G, U, T, report):
    U = np.unique(np.asarray(U, dtype=np.int64))
    if not np.array_equal(T.terminals, U):
        report.structure_errors.append("tree terminals differ from the requested terminal set")
    if T.f.size != G.n:
        report.structure_errors.append(f"f covers {T.f.size} vertices, graph has {G.n}")
        return False
    bad = np.flatnonzero(~np.isin(T.f, T.terminals))
    for v in bad.tolist():
        report.structure_errors.append(f"f maps vertex {v} to non-terminal {int(T.f[v])}")
    for u in T.terminals.tolist():
        if u < G.n and T.f[u] != u:
            report.structure_errors.append(f"terminal {u} is mapped to {int(T.f[u])}")
    if len(T.edges) != T.terminals.size - 1:
        report.structure_errors.append("edge count is not |U| - 1")
        return False
    known = set(T.terminals.tolist())
    if any(a not in known or b not in known for a, b, _ in T.edges):
        report.structure_errors.append("a tree edge joins a non-terminal")
        return False
    if T.terminals.size and len(T.component(int(T.terminals[0]), -1)) != T.terminals.size:
        report.structure_errors.append("tree is not connected")
        return False
    return not bad.size


def _edge_certificates(G, T, report):
    """Every edge's f-preimage side must cut exactly its weight."""
    root = int(T.terminals[0])
    adj = T.adjacency()
    order, parent_edge = [], {root: -1}
    tin = {}
    stack = [(root, iter(adj[root]))]
    tin[root] = 0
    order.append(root)
    tout = {}
    while stack:
        x, it = stack[-1]
        nxt = next(it, None)
        if nxt is None:
            tout[x] = len(order)
            stack.pop()
            continue
        y, i = nxt
        if y in tin:
            continue
        parent_edge[y] = i
        tin[y] = len(order)
        order.append(y)
        stack.append((y, iter(adj[y])))
    pos = np.full(int(T.f.max()) + 1, -1, dtype=np.int64)
    for u, p in tin.items():
        pos[u] = p
    fpos = pos[T.f]
    for child in order[1:]:
        a, b, w = T.edges[parent_edge[child]]
        mask = (fpos >= tin[child]) & (fpos < tout[child])
        value = G.cut_weight(mask)
        report.edges_checked += 1
        if value != w:
            report.edge_errors.append((a, b, w, int(value)))


def verify_ghtree(G, U, T, *, oracle_cap: int = MAXFLOW_ORACLE_CAP) -> VerificationReport:
    """Check path minima against an oracle, edge cut certificates and ``f``."""
    report = VerificationReport()
    U = np.arange(G.n) if U is None else np.unique(np.asarray(list(U), dtype=np.int64))
    if not _structure(G, U, T, report):
        return report
    if T.terminals.size > 1:
        _edge_certificates(G, T, report)
    if G.n > oracle_cap:
        report.oracle_refused = True
        return report
    if isinstance(G, Hypergraph) and G.n <= ENUMERATION_CAP:
        lam = enumerate_all_pairs(G)
    else:
        lam = all_pairs_mincut(G, cap=oracle_cap)
    for (s, t), w in T.all_pairs().items():
        report.pairs_checked += 1
        if w != lam[s, t]:
            report.pair_errors.append((s, t, w, int(lam[s, t])))
    return report
