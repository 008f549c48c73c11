"""Weighted hypergraphs with the same surface as :class:`WeightedGraph`.

A cut ``S`` is crossed by every hyperedge with members on both sides.
Contraction merges members inside each hyperedge, drops hyperedges that
collapse to one vertex and merges identical hyperedges by adding weights;
that is exactly what makes cut values commute with contraction.
"""

from __future__ import annotations

from functools import cached_property
from pathlib import Path
from typing import Iterable

import numpy as np

from .errors import CapacityOverflowError, InvalidCutError, InvalidInputError
from .graph import MAX_TOTAL_WEIGHT, WeightedGraph, _as_mask, _data_lines, _parse_int


def _canonical(edge_map):
    keys = sorted(edge_map)
    eptr = np.zeros(len(keys) + 1, dtype=np.int64)
    np.cumsum([len(k) for k in keys], out=eptr[1:])
    members = np.fromiter((x for k in keys for x in k), dtype=np.int64, count=int(eptr[-1]))
    weights = np.array([edge_map[k] for k in keys], dtype=np.int64)
    return eptr, members, weights


class Hypergraph:
    """Vertex set ``0..n-1`` plus weighted hyperedges of cardinality >= 2."""

    def __init__(self, n: int, hyperedges: Iterable = ()):
        n = int(n)
        if n < 0:
            raise InvalidInputError("vertex count must be nonnegative")
        edge_map: dict[tuple, int] = {}
        for item in hyperedges:
            if isinstance(item, tuple) and len(item) == 2 and not np.isscalar(item[0]):
                members, w = item
            else:
                members, w = item, 1
            members = [int(x) for x in members]
            if len(set(members)) != len(members):
                raise InvalidInputError(f"hyperedge {members} repeats a vertex")
            if len(members) < 2:
                raise InvalidInputError("hyperedges need at least two members")
            if min(members) < 0 or max(members) >= n:
                raise InvalidInputError(f"hyperedge {members} names an unknown vertex")
            if int(w) != w or w < 1:
                raise InvalidInputError("hyperedge weights must be positive integers")
            key = tuple(sorted(members))
            edge_map[key] = edge_map.get(key, 0) + int(w)
        if sum(edge_map.values()) >= MAX_TOTAL_WEIGHT:
            raise CapacityOverflowError("total hyperedge weight exceeds the 64-bit capacity bound")
        self.n = n
        self.eptr, self.members, self.w = _canonical(edge_map)

    @classmethod
    def _from_map(cls, n, edge_map):
        obj = cls.__new__(cls)
        obj.n = n
        obj.eptr, obj.members, obj.w = _canonical(edge_map)
        return obj

    @classmethod
    def from_graph(cls, G: WeightedGraph) -> "Hypergraph":
        return cls._from_map(G.n, {(a, b): c for a, b, c in G.edges()})

    # -- properties ----------------------------------------------------------

    @property
    def m(self) -> int:
        return int(self.w.size)

    @property
    def p(self) -> int:
        """Total size: sum of hyperedge cardinalities."""
        return int(self.members.size)

    @property
    def size(self) -> int:
        return self.p

    @cached_property
    def sizes(self) -> np.ndarray:
        return np.diff(self.eptr)

    @cached_property
    def edge_of(self) -> np.ndarray:
        """Hyperedge index of every entry in ``members``."""
        return np.repeat(np.arange(self.m), self.sizes)

    @cached_property
    def total_weight(self) -> int:
        return int(self.w.sum())

    @cached_property
    def max_weight(self) -> int:
        return int(self.w.max()) if self.m else 0

    @cached_property
    def degrees(self) -> np.ndarray:
        """Weighted degree (value of every singleton cut)."""
        deg = np.zeros(self.n, dtype=np.int64)
        np.add.at(deg, self.members, self.w[self.edge_of])
        return deg

    def hyperedges(self) -> list[tuple[tuple[int, ...], int]]:
        return [
            (tuple(self.members[self.eptr[i]: self.eptr[i + 1]].tolist()), int(self.w[i]))
            for i in range(self.m)
        ]

    def is_graph(self) -> bool:
        return bool(np.all(self.sizes == 2))

    def spanning_pairs(self):
        """Pairs (first member, other member) connecting each hyperedge."""
        heads = self.members[self.eptr[:-1]]
        rest = np.ones(self.p, dtype=bool)
        rest[self.eptr[:-1]] = False
        return np.repeat(heads, self.sizes - 1), self.members[rest]

    def __repr__(self):
        return f"Hypergraph(n={self.n}, m={self.m}, p={self.p})"

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.eptr, other.eptr)
            and np.array_equal(self.members, other.members)
            and np.array_equal(self.w, other.w)
        )

    __hash__ = None

    # -- cuts and contraction ------------------------------------------------

    def cut_weight(self, mask: np.ndarray) -> int:
        if self.m == 0:
            return 0
        inside = np.add.reduceat(mask[self.members].astype(np.int64), self.eptr[:-1])
        crossing = (inside > 0) & (inside < self.sizes)
        return int(self.w[crossing].sum())

    def quotient(self, labels: np.ndarray, k: int) -> "Hypergraph":
        labels = np.asarray(labels, dtype=np.int64)
        mapped = labels[self.members]
        order = np.lexsort((mapped, self.edge_of))
        e_sorted = self.edge_of[order]
        v_sorted = mapped[order]
        fresh = np.ones(e_sorted.size, dtype=bool)
        fresh[1:] = (e_sorted[1:] != e_sorted[:-1]) | (v_sorted[1:] != v_sorted[:-1])
        e_sorted, v_sorted = e_sorted[fresh], v_sorted[fresh]
        counts = np.bincount(e_sorted, minlength=self.m)
        edge_map: dict[tuple, int] = {}
        bounds = np.r_[0, np.cumsum(counts)]
        vals = v_sorted.tolist()
        weights = self.w.tolist()
        for i in np.flatnonzero(counts >= 2).tolist():
            key = tuple(vals[bounds[i]: bounds[i + 1]])
            edge_map[key] = edge_map.get(key, 0) + weights[i]
        return Hypergraph._from_map(int(k), edge_map)

    def region_instances(self, region: np.ndarray, wanted: np.ndarray):
        """Same contract as :meth:`WeightedGraph.region_instances`."""
        region = np.asarray(region, dtype=np.int64)
        out = {}
        for r in np.flatnonzero(wanted).tolist():
            verts = np.flatnonzero(region == r)
            labels = np.full(self.n, verts.size, dtype=np.int64)
            labels[verts] = np.arange(verts.size)
            out[r] = (verts, self.quotient(labels, verts.size + 1))
        return out

    def expansion(self):
        """Directed flow network whose ``(s, t)`` cuts match hypergraph cuts.

        Hyperedge ``e`` becomes an arc ``e_in -> e_out`` of capacity ``w(e)``;
        each member ``v`` gets ``v -> e_in`` and ``e_out -> v`` with a
        capacity no finite cut can afford.  Returns ``(N, tail, head, cap)``.
        """
        big = self.total_weight + 1
        e_in = self.n + 2 * np.arange(self.m, dtype=np.int64)
        e_out = e_in + 1
        tail = np.concatenate([self.members, e_in, e_out[self.edge_of]])
        head = np.concatenate([e_in[self.edge_of], e_out, self.members])
        cap = np.concatenate([
            np.full(self.p, big, dtype=np.int64),
            self.w,
            np.full(self.p, big, dtype=np.int64),
        ])
        return self.n + 2 * self.m, tail, head, cap


def hyper_cut_value(H: Hypergraph, S) -> int:
    """Total weight of hyperedges with members both inside and outside ``S``."""
    mask = _as_mask(H.n, S)
    size = int(mask.sum())
    if size == 0 or size == H.n:
        raise InvalidCutError("cut side must be nonempty and proper")
    return H.cut_weight(mask)


def parse_hypergraph(text: str) -> Hypergraph:
    lines = _data_lines(text)
    try:
        lineno, head = next(lines)
    except StopIteration:
        raise InvalidInputError("empty hypergraph file") from None
    if len(head) != 3 or head[0] != "h":
        raise InvalidInputError(f"line {lineno}: expected header 'h <n> <m>'")
    n, m = _parse_int(head[1], lineno), _parse_int(head[2], lineno)
    edges = []
    for lineno, toks in lines:
        vals = [_parse_int(t, lineno) for t in toks]
        if len(vals) < 2 or len(vals) != vals[1] + 2:
            raise InvalidInputError(f"line {lineno}: expected '<w> <k> <v1> ... <vk>'")
        if vals[0] < 1:
            raise InvalidInputError(f"line {lineno}: weight must be a positive integer")
        edges.append((vals[2:], vals[0]))
    if len(edges) != m:
        raise InvalidInputError(f"header announces {m} hyperedges, found {len(edges)}")
    try:
        return Hypergraph(n, edges)
    except InvalidInputError as exc:
        raise InvalidInputError(f"invalid hypergraph: {exc}") from None


def format_hypergraph(H: Hypergraph) -> str:
    out = [f"h {H.n} {H.m}"]
    for members, w in H.hyperedges():
        out.append(" ".join(map(str, (w, len(members), *members))))
    return "\n".join(out) + "\n"


def read_hypergraph(path) -> Hypergraph:
    return parse_hypergraph(Path(path).read_text())


def write_hypergraph(H: Hypergraph, path) -> None:
    Path(path).write_text(format_hypergraph(H))
