"""Minimum isolating cuts for disjoint terminal groups.

For groups ``U_1..U_h`` this finds pairwise disjoint sets ``S_i ⊇ U_i``,
each an inclusion-minimal ``(U_i, ∪_{j≠i} U_j)``-mincut, using one maxflow
per bit of the group labels plus one maxflow per group on its carved region.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError, InvalidPartitionError
from .graph import split_labels
from .maxflow import maxflow


@dataclass(frozen=True)
class IsolatingCut:
    group: int
    side: np.ndarray
    value: int


@dataclass(frozen=True)
class IsolatingCutsResult:
    cuts: list[IsolatingCut]

    def __len__(self):
        return len(self.cuts)

    def __iter__(self):
        return iter(self.cuts)


def _owner_array(n, groups):
    owner = np.full(n, -1, dtype=np.int64)
    members = []
    for i, grp in enumerate(groups):
        ids = np.unique(np.asarray(list(grp), dtype=np.int64))
        if ids.size == 0:
            raise InvalidInputError("isolating-cut groups must be nonempty")
        if ids[0] < 0 or ids[-1] >= n:
            raise InvalidInputError(f"group {i} names an unknown vertex")
        if (owner[ids] >= 0).any():
            raise InvalidPartitionError("isolating-cut groups overlap")
        owner[ids] = i
        members.append(ids)
    return owner, members


def _carve_regions(G, owner, h, solver):
    """Region label per vertex (-1 outside every region) from the bit rounds."""
    code = np.zeros(G.n, dtype=np.int64)
    valid = np.ones(G.n, dtype=bool)
    labels_of_group = np.arange(h)
    grouped = owner >= 0
    for b in range(max(1, math.ceil(math.log2(h)))):
        bit = (labels_of_group >> b) & 1
        block = np.full(G.n, -1, dtype=np.int64)
        block[grouped] = bit[owner[grouped]]
        if not (block == 0).any() or not (block == 1).any():
            # every label agrees on this bit, nothing to separate
            code |= int(bit[0]) << b
            continue
        labels, k, _, super_of = split_labels(block)
        Q = G.quotient(labels, k)
        res = maxflow(Q, super_of[0], super_of[1], solver=solver)
        src = res.source_mask(k)[labels]
        snk = res.sink_mask(k)[labels]
        code |= snk.astype(np.int64) << b
        valid &= src | snk
    region = np.where(valid & (code < h), code, -1)
    assert np.array_equal(region[grouped], owner[grouped])
    return region


def _isolate_in_region(verts, Q, group_ids, solver):
    sink = Q.n - 1
    local = np.searchsorted(verts, group_ids)
    if local.size > 1:
        labels = np.arange(Q.n, dtype=np.int64)
        labels[local] = local[0]
        keep = np.ones(Q.n, dtype=bool)
        keep[local[1:]] = False
        dense = np.cumsum(keep) - 1
        labels = dense[labels]
        Q2 = Q.quotient(labels, int(keep.sum()))
        res = maxflow(Q2, labels[local[0]], labels[sink], solver=solver)
        side_local = res.source_mask(Q2.n)[labels[:-1]]
    else:
        res = maxflow(Q, int(local[0]), sink, solver=solver)
        side_local = res.source_mask(Q.n)[:-1]
    return verts[side_local], res.value


def compute_isolating_cuts(G, groups, *, solver=None) -> IsolatingCutsResult:
    """Disjoint minimal isolating mincuts, one per group, in input order."""
    groups = list(groups)
    h = len(groups)
    if h < 2:
        raise InvalidInputError("isolating cuts need at least two groups")
    owner, members = _owner_array(G.n, groups)
    region = _carve_regions(G, owner, h, solver)

    region_size = np.bincount(region[region >= 0], minlength=h)
    group_size = np.array([ids.size for ids in members])
    trivial = region_size == group_size
    instances = G.region_instances(region, ~trivial) if not trivial.all() else {}

    cuts = []
    for i, ids in enumerate(members):
        if trivial[i]:
            # the region is the group itself, so is its isolating cut
            if ids.size == 1:
                value = int(G.degrees[ids[0]])
            else:
                mask = np.zeros(G.n, dtype=bool)
                mask[ids] = True
                value = G.cut_weight(mask)
            cuts.append(IsolatingCut(i, ids, value))
        else:
            verts, Q = instances[i]
            side, value = _isolate_in_region(verts, Q, ids, solver)
            cuts.append(IsolatingCut(i, side, int(value)))
    return IsolatingCutsResult(cuts)


def hyper_isolating_cuts(H, groups, *, solver=None) -> IsolatingCutsResult:
    from .hypergraph import Hypergraph

    if not isinstance(H, Hypergraph):
        raise TypeError("hyper_isolating_cuts expects a Hypergraph")
    return compute_isolating_cuts(H, groups, solver=solver)
