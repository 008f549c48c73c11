"""The 1961 Gomory-Hu construction for a terminal subset.

The tree is kept as a partition of the vertices into buckets, each bucket
holding at least one terminal.  A bucket with two terminals ``s < t`` is
split by one maxflow, computed on the graph where every subtree hanging off
the bucket is contracted into a single vertex.  ``|U| - 1`` maxflows in all.
"""

from __future__ import annotations

import numpy as np

from .decomposition import _terminal_array
from .errors import InvalidInputError
from .graph import split_labels
from .maxflow import maxflow


def _subtree_buckets(adj, root, first):
    """Buckets reachable from ``first`` without passing through ``root``."""
    seen = {root, first}
    stack = [first]
    out = [first]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
                out.append(y)
    return out


def classic_steiner_tree(G, U, *, solver=None):
    """Edges ``(s, t, w)`` over terminals and the map ``f`` as an array."""
    U = _terminal_array(G, U)
    if U.size == 0:
        raise InvalidInputError("terminal set must be nonempty")
    bucket = np.zeros(G.n, dtype=np.int64)
    terms = [list(U.tolist())]
    adj: list[dict[int, int]] = [dict()]
    pending = [0] if len(terms[0]) > 1 else []
    while pending:
        x = pending.pop()
        s, t = sorted(terms[x])[:2]
        nbrs = sorted(adj[x])
        block = np.full(G.n, -1, dtype=np.int64)
        inside = bucket == x
        for j, y in enumerate(nbrs):
            members = np.isin(bucket, _subtree_buckets(adj, x, y))
            block[members] = j
        labels, k, kept, super_of = split_labels(block)
        Q = G.quotient(labels, k)
        res = maxflow(Q, labels[s], labels[t], solver=solver)
        src = res.source_mask(Q.n)

        # split bucket x; the t-part becomes a fresh bucket
        z = len(terms)
        moved = inside & ~src[labels]
        bucket[moved] = z
        terms.append([u for u in terms[x] if moved[u]])
        terms[x] = [u for u in terms[x] if not moved[u]]
        adj.append(dict())
        for j, y in enumerate(nbrs):
            if not src[super_of[j]]:
                w = adj[x].pop(y)
                del adj[y][x]
                adj[z][y] = w
                adj[y][z] = w
        adj[x][z] = res.value
        adj[z][x] = res.value
        for b in (x, z):
            if len(terms[b]) > 1:
                pending.append(b)

    rep = np.array([terms[b][0] for b in range(len(terms))], dtype=np.int64)
    edges = sorted(
        (int(min(rep[a], rep[b])), int(max(rep[a], rep[b])), int(w))
        for a in range(len(adj)) for b, w in adj[a].items() if a < b
    )
    return edges, rep[bucket]
