"""Compiled Dinic kernel over paired-arc networks.

Arc ``2i`` runs ``tail[i] -> head[i]`` with capacity ``cf[i]``; arc
``2i + 1`` is its reverse with capacity ``cr[i]``.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _dinic_kernel(N, tail, head, cf, cr, s, t):
    M = tail.size
    A = 2 * M
    to = np.empty(A, np.int64)
    cap = np.empty(A, np.int64)
    deg = np.zeros(N + 1, np.int64)
    for i in range(M):
        to[2 * i] = head[i]
        to[2 * i + 1] = tail[i]
        cap[2 * i] = cf[i]
        cap[2 * i + 1] = cr[i]
        deg[tail[i] + 1] += 1
        deg[head[i] + 1] += 1
    for x in range(N):
        deg[x + 1] += deg[x]
    start = deg.copy()
    fill = deg[:N].copy()
    arcs = np.empty(A, np.int64)
    for i in range(M):
        arcs[fill[tail[i]]] = 2 * i
        fill[tail[i]] += 1
        arcs[fill[head[i]]] = 2 * i + 1
        fill[head[i]] += 1

    level = np.empty(N, np.int64)
    queue = np.empty(N, np.int64)
    it = np.empty(N, np.int64)
    path = np.empty(N, np.int64)
    total = 0
    while True:
        level[:] = -1
        level[s] = 0
        qh, qt = 0, 1
        queue[0] = s
        while qh < qt:
            x = queue[qh]
            qh += 1
            for p in range(start[x], start[x + 1]):
                a = arcs[p]
                y = to[a]
                if cap[a] > 0 and level[y] < 0:
                    level[y] = level[x] + 1
                    queue[qt] = y
                    qt += 1
        if level[t] < 0:
            break
        for x in range(N):
            it[x] = start[x]
        depth = 0
        x = s
        while True:
            if x == t:
                push = cap[path[0]]
                for k in range(1, depth):
                    if cap[path[k]] < push:
                        push = cap[path[k]]
                cut = -1
                for k in range(depth):
                    a = path[k]
                    cap[a] -= push
                    cap[a ^ 1] += push
                    if cut < 0 and cap[a] == 0:
                        cut = k
                total += push
                depth = cut
                x = to[path[cut] ^ 1]
                continue
            p = it[x]
            end = start[x + 1]
            nxt = level[x] + 1
            while p < end:
                a = arcs[p]
                if cap[a] > 0 and level[to[a]] == nxt:
                    break
                p += 1
            it[x] = p
            if p < end:
                path[depth] = arcs[p]
                depth += 1
                x = to[arcs[p]]
            elif x == s:
                break
            else:
                level[x] = -1
                depth -= 1
                x = to[path[depth] ^ 1]
                it[x] += 1

    src = np.zeros(N, np.bool_)
    src[s] = True
    qh, qt = 0, 1
    queue[0] = s
    while qh < qt:
        x = queue[qh]
        qh += 1
        for p in range(start[x], start[x + 1]):
            a = arcs[p]
            y = to[a]
            if cap[a] > 0 and not src[y]:
                src[y] = True
                queue[qt] = y
                qt += 1
    snk = np.zeros(N, np.bool_)
    snk[t] = True
    qh, qt = 0, 1
    queue[0] = t
    while qh < qt:
        y = queue[qh]
        qh += 1
        for p in range(start[y], start[y + 1]):
            a = arcs[p]
            x = to[a]
            if cap[a ^ 1] > 0 and not snk[x]:
                snk[x] = True
                queue[qt] = x
                qt += 1
    return total, src, snk


def compiled_dinic(N, tail, head, cf, cr, s, t):
    value, src, snk = _dinic_kernel(
        int(N),
        np.ascontiguousarray(tail, dtype=np.int64),
        np.ascontiguousarray(head, dtype=np.int64),
        np.ascontiguousarray(cf, dtype=np.int64),
        np.ascontiguousarray(cr, dtype=np.int64),
        int(s),
        int(t),
    )
    return int(value), src, snk
