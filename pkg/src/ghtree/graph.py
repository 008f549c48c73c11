"""Undirected weighted graphs, contraction and cut evaluation.

Graphs are immutable once built.  Vertices are the dense ids ``0..n-1``;
edges are stored once per unordered pair with ``u < v`` and parallel edges
merged by adding their weights.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    CapacityOverflowError,
    InvalidCutError,
    InvalidInputError,
    InvalidPartitionError,
)

# Any contracted weight is bounded by the total weight, so checking the total
# once keeps every quotient inside int64.
MAX_TOTAL_WEIGHT = 2**62


def _merge_pairs(n, a, b, w):
    """Drop self-loops, orient pairs as (min, max) and merge duplicates."""
    keep = a != b
    a, b, w = a[keep], b[keep], w[keep]
    lo = np.minimum(a, b)
    hi = np.maximum(a, b)
    if lo.size == 0:
        empty = np.zeros(0, dtype=np.int64)
        return empty, empty.copy(), empty.copy()
    key = lo * n + hi
    order = np.argsort(key, kind="stable")
    key = key[order]
    starts = np.flatnonzero(np.r_[True, key[1:] != key[:-1]])
    merged = np.add.reduceat(w[order], starts)
    first = order[starts]
    return lo[first], hi[first], merged.astype(np.int64)


class WeightedGraph:
    """Undirected multigraph with merged parallel edges and positive integer weights."""

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        rows = [tuple(e) for e in edges]
        for e in rows:
            if len(e) not in (2, 3):
                raise InvalidInputError(f"edge {e!r} must be (u, v) or (u, v, w)")
        u = np.array([e[0] for e in rows], dtype=np.int64)
        v = np.array([e[1] for e in rows], dtype=np.int64)
        w = np.array([e[2] if len(e) == 3 else 1 for e in rows], dtype=np.int64)
        self._init(n, u, v, w, validate=True)

    @classmethod
    def from_arrays(cls, n, u, v, w=None, *, validate=True) -> "WeightedGraph":
        u = np.asarray(u, dtype=np.int64)
        v = np.asarray(v, dtype=np.int64)
        w = np.ones_like(u) if w is None else np.asarray(w)
        obj = cls.__new__(cls)
        obj._init(n, u, v, w, validate=validate)
        return obj

    def _init(self, n, u, v, w, validate):
        n = int(n)
        if validate:
            if n < 0:
                raise InvalidInputError("vertex count must be nonnegative")
            if not (u.shape == v.shape == np.shape(w)) or u.ndim != 1:
                raise InvalidInputError("edge arrays must be 1-d and of equal length")
            if u.size and (min(u.min(), v.min()) < 0 or max(u.max(), v.max()) >= n):
                raise InvalidInputError("edge endpoint out of range")
            w_arr = np.asarray(w)
            if w_arr.size:
                if not np.issubdtype(w_arr.dtype, np.integer):
                    if not np.all(np.mod(w_arr, 1) == 0):
                        raise InvalidInputError("weights must be integers")
                if w_arr.min() < 1:
                    raise InvalidInputError("weights must be positive integers")
            w = w_arr.astype(np.int64)
            if int(w.sum(dtype=object) if w.size else 0) >= MAX_TOTAL_WEIGHT:
                raise CapacityOverflowError("total edge weight exceeds the 64-bit capacity bound")
        self.n = n
        self.u, self.v, self.w = _merge_pairs(n, u, v, np.asarray(w, dtype=np.int64))
        for arr in (self.u, self.v, self.w):
            arr.setflags(write=False)

    # -- basic properties -------------------------------------------------

    @property
    def m(self) -> int:
        return int(self.u.size)

    @property
    def size(self) -> int:
        """Instance size used for accounting (number of stored edges)."""
        return self.m

    @cached_property
    def total_weight(self) -> int:
        return int(self.w.sum())

    @cached_property
    def max_weight(self) -> int:
        return int(self.w.max()) if self.m else 0

    @cached_property
    def degrees(self) -> np.ndarray:
        """Weighted degree of every vertex, i.e. the value of each singleton cut."""
        deg = np.zeros(self.n, dtype=np.int64)
        np.add.at(deg, self.u, self.w)
        np.add.at(deg, self.v, self.w)
        deg.setflags(write=False)
        return deg

    @cached_property
    def adjacency(self):
        """CSR adjacency ``(indptr, neighbors, weights)`` with both directions."""
        a = np.concatenate([self.u, self.v])
        b = np.concatenate([self.v, self.u])
        ww = np.concatenate([self.w, self.w])
        order = np.argsort(a, kind="stable")
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        np.cumsum(np.bincount(a, minlength=self.n), out=indptr[1:])
        return indptr, b[order], ww[order]

    def neighbors(self, x: int):
        indptr, nbr, wt = self.adjacency
        lo, hi = indptr[x], indptr[x + 1]
        return nbr[lo:hi], wt[lo:hi]

    def edges(self) -> list[tuple[int, int, int]]:
        return list(zip(self.u.tolist(), self.v.tolist(), self.w.tolist()))

    def __repr__(self):
        return f"WeightedGraph(n={self.n}, m={self.m})"

    def __eq__(self, other):
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.u, other.u)
            and np.array_equal(self.v, other.v)
            and np.array_equal(self.w, other.w)
        )

    __hash__ = None

    # -- cuts and contraction ---------------------------------------------

    def cut_weight(self, mask: np.ndarray) -> int:
        """Value of the cut given by a boolean vertex mask (unchecked)."""
        cross = mask[self.u] != mask[self.v]
        return int(self.w[cross].sum())

    def quotient(self, labels: np.ndarray, k: int) -> "WeightedGraph":
        """Graph on ``k`` vertices obtained by merging vertices with equal labels."""
        labels = np.asarray(labels, dtype=np.int64)
        obj = WeightedGraph.__new__(WeightedGraph)
        obj._init(k, labels[self.u], labels[self.v], self.w, validate=False)
        return obj

    def region_instances(self, region: np.ndarray, wanted: np.ndarray):
        """Build one flow instance per wanted region.

        ``region[x]`` is a region index or -1.  The instance for region ``r``
        keeps the vertices of ``r`` (as local ids in increasing original id)
        and merges everything else into one extra vertex with the last id.
        Returns a dict ``r -> (vertices, graph)``.
        """
        region = np.asarray(region, dtype=np.int64)
        count = int(wanted.size)
        sizes = np.bincount(region[region >= 0], minlength=count)
        local = np.zeros(self.n, dtype=np.int64)
        order = np.argsort(region, kind="stable")
        sorted_reg = region[order]
        inside = sorted_reg >= 0
        starts = np.zeros(count + 1, dtype=np.int64)
        np.cumsum(sizes, out=starts[1:])
        first = np.searchsorted(sorted_reg, 0)
        idx = np.arange(order.size) - first
        local[order[inside]] = idx[inside] - starts[sorted_reg[inside]]

        ra, rb = region[self.u], region[self.v]
        ok_a = (ra >= 0) & wanted[np.maximum(ra, 0)]
        ok_b = (rb >= 0) & wanted[np.maximum(rb, 0)]
        same = ra == rb
        internal = ok_a & same
        cross_a = ok_a & ~same
        cross_b = ok_b & ~same
        inst = np.concatenate([ra[internal], ra[cross_a], rb[cross_b]])
        ea = np.concatenate([local[self.u[internal]], local[self.u[cross_a]], local[self.v[cross_b]]])
        eb = np.concatenate([local[self.v[internal]], sizes[ra[cross_a]], sizes[rb[cross_b]]])
        ew = np.concatenate([self.w[internal], self.w[cross_a], self.w[cross_b]])
        eord = np.argsort(inst, kind="stable")
        inst, ea, eb, ew = inst[eord], ea[eord], eb[eord], ew[eord]
        bounds = np.searchsorted(inst, np.arange(count + 1))

        out = {}
        for r in np.flatnonzero(wanted).tolist():
            lo, hi = bounds[r], bounds[r + 1]
            verts = order[first + starts[r]: first + starts[r + 1]]
            g = WeightedGraph.__new__(WeightedGraph)
            g._init(int(sizes[r]) + 1, ea[lo:hi], eb[lo:hi], ew[lo:hi], validate=False)
            out[r] = (verts, g)
        return out


@dataclass(frozen=True)
class CutResult:
    """A cut side (sorted vertex ids) together with its value."""

    side: np.ndarray
    value: int

    def __len__(self):
        return int(self.side.size)


# -- contraction maps ------------------------------------------------------


@dataclass(frozen=True)
class ContractionMap:
    """Total map from original vertices onto quotient vertices."""

    forward: np.ndarray
    k: int

    @cached_property
    def blocks(self) -> list[np.ndarray]:
        order = np.argsort(self.forward, kind="stable")
        cuts = np.searchsorted(self.forward[order], np.arange(1, self.k))
        return np.split(order, cuts)

    def preimage(self, quotient_ids) -> np.ndarray:
        sel = np.zeros(self.k, dtype=bool)
        sel[np.asarray(list(quotient_ids), dtype=np.int64)] = True
        return np.flatnonzero(sel[self.forward])

    def compose(self, then: "ContractionMap") -> "ContractionMap":
        """Apply ``self`` first and ``then`` second."""
        if then.forward.size != self.k:
            raise InvalidPartitionError("contraction maps do not compose")
        return ContractionMap(then.forward[self.forward], then.k)


def canonical_labels(block: np.ndarray):
    """Relabel an arbitrary integer labelling densely, ordered by smallest member."""
    block = np.asarray(block, dtype=np.int64)
    _, first_idx, inv = np.unique(block, return_index=True, return_inverse=True)
    rank = np.empty(first_idx.size, dtype=np.int64)
    rank[np.argsort(first_idx, kind="stable")] = np.arange(first_idx.size)
    return rank[inv.ravel()], int(first_idx.size)


def split_labels(block: np.ndarray):
    """Labels keeping every ``block == -1`` vertex and merging each other block.

    Kept vertices get ids ``0..r-1`` in increasing order; the nonempty blocks,
    in increasing block index, follow as ``r, r+1, ...``.  Returns
    ``(labels, k, kept, super_of)`` where ``super_of`` maps a block index to its
    quotient id (-1 when the block is empty).
    """
    block = np.asarray(block, dtype=np.int64)
    kept = np.flatnonzero(block < 0)
    r = kept.size
    nblocks = int(block.max()) + 1 if block.size else 0
    present = np.zeros(max(nblocks, 0), dtype=bool)
    present[block[block >= 0]] = True
    super_of = np.full(max(nblocks, 0), -1, dtype=np.int64)
    super_of[present] = r + np.arange(int(present.sum()))
    labels = np.empty(block.size, dtype=np.int64)
    labels[kept] = np.arange(r)
    inb = block >= 0
    labels[inb] = super_of[block[inb]]
    return labels, r + int(present.sum()), kept, super_of


def _as_mask(n: int, S) -> np.ndarray:
    if isinstance(S, np.ndarray) and S.dtype == bool:
        if S.shape != (n,):
            raise InvalidCutError("boolean cut mask has the wrong length")
        return S
    ids = np.asarray(sorted(set(int(x) for x in S)), dtype=np.int64)
    if ids.size and (ids[0] < 0 or ids[-1] >= n):
        raise InvalidCutError("cut names an unknown vertex")
    mask = np.zeros(n, dtype=bool)
    mask[ids] = True
    return mask


def cut_value(G: WeightedGraph, S) -> int:
    """Total weight of edges with exactly one endpoint in ``S``."""
    mask = _as_mask(G.n, S)
    size = int(mask.sum())
    if size == 0 or size == G.n:
        raise InvalidCutError("cut side must be nonempty and proper")
    return G.cut_weight(mask)


def contract(G: WeightedGraph, parts: Sequence[Iterable[int]]):
    """Contract each part into one vertex.

    Quotient ids are ordered by the smallest original vertex of each block.
    Returns ``(quotient, ContractionMap)``.
    """
    block = np.arange(G.n, dtype=np.int64)
    seen = np.zeros(G.n, dtype=bool)
    for part in parts:
        ids = np.asarray(sorted(set(int(x) for x in part)), dtype=np.int64)
        if ids.size == 0:
            raise InvalidPartitionError("contraction parts must be nonempty")
        if ids[0] < 0 or ids[-1] >= G.n:
            raise InvalidPartitionError("contraction part names an unknown vertex")
        if seen[ids].any():
            raise InvalidPartitionError("contraction parts overlap")
        seen[ids] = True
        block[ids] = ids[0]
    labels, k = canonical_labels(block)
    return G.quotient(labels, k), ContractionMap(labels, k)


def connected_components(G) -> list[np.ndarray]:
    """Vertex sets of the connected components, ordered by smallest id.

    Works for graphs and hypergraphs (anything with ``n`` and ``pairs()`` or
    edge arrays).
    """
    from scipy.sparse import coo_matrix
    from scipy.sparse.csgraph import connected_components as _cc

    if G.n == 0:
        return []
    a, b = G.spanning_pairs() if hasattr(G, "spanning_pairs") else (G.u, G.v)
    mat = coo_matrix((np.ones(a.size), (a, b)), shape=(G.n, G.n)).tocsr()
    _, labels = _cc(mat, directed=False)
    labels, k = canonical_labels(labels)
    return ContractionMap(labels, k).blocks


# -- text format -------------------------------------------------------------


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _parse_int(tok, lineno):
    try:
        return int(tok)
    except ValueError:
        raise InvalidInputError(f"line {lineno}: expected an integer, got {tok!r}") from None


def parse_graph(text: str) -> WeightedGraph:
    lines = _data_lines(text)
    try:
        lineno, head = next(lines)
    except StopIteration:
        raise InvalidInputError("empty graph file") from None
    if len(head) != 3 or head[0] != "g":
        raise InvalidInputError(f"line {lineno}: expected header 'g <n> <m>'")
    n, m = _parse_int(head[1], lineno), _parse_int(head[2], lineno)
    rows = []
    for lineno, toks in lines:
        if len(toks) != 3:
            raise InvalidInputError(f"line {lineno}: expected '<u> <v> <w>'")
        u, v, w = (_parse_int(t, lineno) for t in toks)
        if w < 1:
            raise InvalidInputError(f"line {lineno}: weight must be a positive integer")
        rows.append((u, v, w))
    if len(rows) != m:
        raise InvalidInputError(f"header announces {m} edges, found {len(rows)}")
    arr = np.array(rows, dtype=np.int64).reshape(-1, 3)
    return WeightedGraph.from_arrays(n, arr[:, 0], arr[:, 1], arr[:, 2])


def format_graph(G: WeightedGraph) -> str:
    out = [f"g {G.n} {G.m}"]
    out.extend(f"{a} {b} {c}" for a, b, c in G.edges())
    return "\n".join(out) + "\n"


def read_graph(path) -> WeightedGraph:
    return parse_graph(Path(path).read_text())


def write_graph(G: WeightedGraph, path) -> None:
    Path(path).write_text(format_graph(G))
