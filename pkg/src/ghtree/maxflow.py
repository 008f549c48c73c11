"""(s, t)-maxflow / mincut on graphs and hypergraphs.

All solvers share one paired-arc network format (arc ``2i`` and ``2i+1``
are mutual reverses):

* ``compiled``: level graphs and blocking flows with current-arc pointers,
  compiled with numba; the default;
* ``dinic``: the same algorithm in plain Python, kept as a reference;
* ``scipy``: SciPy's Dinic;
* ``edmonds-karp``: shortest augmenting paths over dict residuals.  This is
  the oracle and shares no code with the other two.

Every result carries the inclusion-minimal source side (vertices reachable
from ``s`` in the final residual network) and the inclusion-minimal sink
side (vertices that can still reach ``t``).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from . import stats as _stats
from .errors import InvalidQueryError
from .hypergraph import Hypergraph

INT32_LIMIT = 2**31 - 1


@dataclass(frozen=True)
class FlowResult:
    value: int
    source_side: np.ndarray
    sink_side: np.ndarray

    def source_mask(self, n: int) -> np.ndarray:
        mask = np.zeros(n, dtype=bool)
        mask[self.source_side] = True
        return mask

    def sink_mask(self, n: int) -> np.ndarray:
        mask = np.zeros(n, dtype=bool)
        mask[self.sink_side] = True
        return mask


# -- network construction ------------------------------------------------------


def flow_network(G):
    """Paired-arc network ``(N, tail, head, cap_fwd, cap_rev)`` for ``G``."""
    net = G.__dict__.get("_flow_network")
    if net is None:
        if isinstance(G, Hypergraph):
            N, tail, head, cap = G.expansion()
            net = (N, tail, head, cap, np.zeros_like(cap))
        else:
            net = (G.n, G.u, G.v, G.w, G.w)
        G.__dict__["_flow_network"] = net
    return net


# -- interpreter Dinic -----------------------------------------------------------


def _paired_lists(N, tail, head, cf, cr):
    M = len(tail)
    to = [0] * (2 * M)
    cap = [0] * (2 * M)
    to[0::2] = head.tolist()
    to[1::2] = tail.tolist()
    cap[0::2] = cf.tolist()
    cap[1::2] = cr.tolist()
    adj = [[] for _ in range(N)]
    for i, (a, b) in enumerate(zip(to[1::2], to[0::2])):
        adj[a].append(2 * i)
        adj[b].append(2 * i + 1)
    return to, cap, adj


def _residual_sides(N, to, cap, adj, s, t):
    seen_s = [False] * N
    seen_s[s] = True
    queue = deque([s])
    while queue:
        x = queue.popleft()
        for a in adj[x]:
            y = to[a]
            if cap[a] > 0 and not seen_s[y]:
                seen_s[y] = True
                queue.append(y)
    seen_t = [False] * N
    seen_t[t] = True
    queue = deque([t])
    while queue:
        y = queue.popleft()
        for a in adj[y]:
            x = to[a]
            if cap[a ^ 1] > 0 and not seen_t[x]:
                seen_t[x] = True
                queue.append(x)
    return np.array(seen_s, dtype=bool), np.array(seen_t, dtype=bool)


def dinic(N, tail, head, cf, cr, s, t):
    to, cap, adj = _paired_lists(N, tail, head, cf, cr)
    total = 0
    while True:
        level = [-1] * N
        level[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for a in adj[x]:
                y = to[a]
                if cap[a] > 0 and level[y] < 0:
                    level[y] = level[x] + 1
                    queue.append(y)
        if level[t] < 0:
            break
        it = [0] * N
        path: list[int] = []
        x = s
        while True:
            if x == t:
                push = min(cap[a] for a in path)
                for a in path:
                    cap[a] -= push
                    cap[a ^ 1] += push
                total += push
                # resume from the tail of the first saturated arc
                k = next(i for i, a in enumerate(path) if cap[a] == 0)
                x = to[path[k] ^ 1]
                del path[k:]
                continue
            lst = adj[x]
            i = it[x]
            nxt = level[x] + 1
            while i < len(lst):
                a = lst[i]
                if cap[a] > 0 and level[to[a]] == nxt:
                    break
                i += 1
            it[x] = i
            if i < len(lst):
                path.append(lst[i])
                x = to[lst[i]]
            elif x == s:
                break
            else:
                level[x] = -1
                a = path.pop()
                x = to[a ^ 1]
                it[x] += 1
    src, snk = _residual_sides(N, to, cap, adj, s, t)
    return total, src, snk


# -- SciPy Dinic -------------------------------------------------------------------


def scipy_dinic(N, tail, head, cf, cr, s, t):
    from scipy.sparse import csr_matrix
    from scipy.sparse.csgraph import breadth_first_order, maximum_flow

    if int(cf.sum()) + int(cr.sum()) > INT32_LIMIT:
        return dinic(N, tail, head, cf, cr, s, t)
    rows = np.concatenate([tail, head])
    cols = np.concatenate([head, tail])
    data = np.concatenate([cf, cr]).astype(np.int32)
    C = csr_matrix((data, (rows, cols)), shape=(N, N))
    C.sum_duplicates()
    res = maximum_flow(C, int(s), int(t), method="dinic")
    R = (C - res.flow).tocsr()
    R.data[R.data < 0] = 0
    R.eliminate_zeros()
    src = np.zeros(N, dtype=bool)
    src[breadth_first_order(R, int(s), directed=True, return_predecessors=False)] = True
    snk = np.zeros(N, dtype=bool)
    snk[breadth_first_order(R.T.tocsr(), int(t), directed=True, return_predecessors=False)] = True
    return int(res.flow_value), src, snk


def auto_solver(N, tail, head, cf, cr, s, t):
    from ._flowkernel import compiled_dinic

    return compiled_dinic(N, tail, head, cf, cr, s, t)


# -- Edmonds-Karp oracle -----------------------------------------------------------


def edmonds_karp(N, tail, head, cf, cr, s, t):
    residual: list[dict[int, int]] = [dict() for _ in range(N)]
    for a, b, c1, c2 in zip(tail.tolist(), head.tolist(), cf.tolist(), cr.tolist()):
        residual[a][b] = residual[a].get(b, 0) + c1
        residual[b][a] = residual[b].get(a, 0) + c2
    total = 0
    while True:
        parent = {s: s}
        queue = deque([s])
        while queue and t not in parent:
            x = queue.popleft()
            for y, c in residual[x].items():
                if c > 0 and y not in parent:
                    parent[y] = x
                    queue.append(y)
        if t not in parent:
            break
        bottleneck = None
        y = t
        while y != s:
            x = parent[y]
            c = residual[x][y]
            bottleneck = c if bottleneck is None or c < bottleneck else bottleneck
            y = x
        y = t
        while y != s:
            x = parent[y]
            residual[x][y] -= bottleneck
            residual[y][x] += bottleneck
            y = x
        total += bottleneck
    src = np.zeros(N, dtype=bool)
    src[list(parent)] = True
    # vertices that can still push into t
    snk = np.zeros(N, dtype=bool)
    snk[t] = True
    queue = deque([t])
    while queue:
        y = queue.popleft()
        for x in residual[y]:
            if not snk[x] and residual[x].get(y, 0) > 0:
                snk[x] = True
                queue.append(x)
    return total, src, snk


SOLVERS = {
    "auto": auto_solver,
    "compiled": auto_solver,
    "dinic": dinic,
    "scipy": scipy_dinic,
    "edmonds-karp": edmonds_karp,
}

DEFAULT_SOLVER = "auto"


# -- public API ----------------------------------------------------------------------


def _check_query(G, s, t):
    if s == t:
        raise InvalidQueryError("source and sink must differ")
    for x in (s, t):
        if not 0 <= x < G.n:
            raise InvalidQueryError(f"unknown vertex {x}")


def _run(G, s, t, solver):
    s, t = int(s), int(t)
    _check_query(G, s, t)
    N, tail, head, cf, cr = flow_network(G)
    fn = SOLVERS[solver] if isinstance(solver, str) else solver
    value, src, snk = fn(N, tail, head, cf, cr, s, t)
    n = G.n
    return FlowResult(int(value), np.flatnonzero(src[:n]), np.flatnonzero(snk[:n]))


def maxflow(G, s: int, t: int, *, solver: str | None = None) -> FlowResult:
    """Maximum ``s``-``t`` flow value with the minimal source and sink sides."""
    result = _run(G, s, t, solver or DEFAULT_SOLVER)
    _stats.record_maxflow(G.size)
    return result


def oracle_maxflow(G, s: int, t: int) -> FlowResult:
    """Same contract as :func:`maxflow`, computed by shortest augmenting paths."""
    return _run(G, s, t, "edmonds-karp")


def hyper_maxflow(H: Hypergraph, s: int, t: int, *, solver: str | None = None) -> FlowResult:
    if not isinstance(H, Hypergraph):
        raise TypeError("hyper_maxflow expects a Hypergraph")
    return maxflow(H, s, t, solver=solver)
