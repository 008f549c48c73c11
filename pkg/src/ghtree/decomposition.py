"""Randomized search for the large connected component and its threshold.

``balanced_decomposition`` samples terminals at a random rate and keeps the
isolating cuts that are both light (value below ``tau``) and balanced (at
most half the active terminals).  Repeating it strips every terminal outside
the largest ``tau``-connected component, which ``detect_large_cc`` uses and
``find_threshold`` binary-searches over ``tau``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import stats as _stats
from .config import DEFAULT_CONFIG, GHConfig
from .errors import InvalidInputError, RandomizedFailureError
from .graph import CutResult, connected_components
from .isolating import compute_isolating_cuts
from .rng import RngHandle, as_rng


@dataclass(frozen=True)
class ThresholdResult:
    tau: int
    component_terminals: np.ndarray


def _terminal_array(G, U) -> np.ndarray:
    arr = np.unique(np.asarray(list(U) if not isinstance(U, np.ndarray) else U, dtype=np.int64))
    if arr.size and (arr[0] < 0 or arr[-1] >= G.n):
        raise InvalidInputError("terminal set names an unknown vertex")
    return arr


def _decompose(G, A: np.ndarray, tau: int, rng: RngHandle, solver):
    """One sampling round; also reports whether at least two terminals were sampled."""
    j = rng.integers(1, int(math.log2(A.size)) + 1)
    R = A[rng.random(A.size) < 2.0 ** (-j)]
    if R.size < 2:
        return [], False
    active = np.zeros(G.n, dtype=bool)
    active[A] = True
    iso = compute_isolating_cuts(G, [[r] for r in R.tolist()], solver=solver)
    out = [
        CutResult(c.side, c.value)
        for c in iso.cuts
        if c.value < tau and 2 * int(active[c.side].sum()) <= A.size
    ]
    if out:
        sizes = sum(c.side.size for c in out)
        assert np.unique(np.concatenate([c.side for c in out])).size == sizes, "cuts overlap"
    return out, True


def balanced_decomposition(G, A, tau: int, rng: RngHandle, *, solver=None) -> list[CutResult]:
    """Disjoint cuts ``S`` with ``value < tau`` and ``|S ∩ A| <= |A|/2``."""
    A = _terminal_array(G, A)
    if A.size < 2:
        raise InvalidInputError("balanced decomposition needs at least two active terminals")
    return _decompose(G, A, tau, as_rng(rng), solver)[0]


def detect_large_cc(G, U, tau: int, rng: RngHandle, config: GHConfig = DEFAULT_CONFIG) -> np.ndarray:
    """Terminals of the largest ``tau``-connected component if it holds > |U|/2 of them.

    Returns an empty array otherwise.
    """
    U = _terminal_array(G, U)
    if U.size == 0:
        raise InvalidInputError("terminal set must be nonempty")
    rng = as_rng(rng)
    half = U.size / 2
    A = U
    if config.degree_prune and U.size >= 2:
        # a singleton cut lighter than tau already isolates its vertex
        A = A[G.degrees[A] >= tau]
    rounds = config.detect_rounds(G.n)
    stall_limit = config.stall_rounds(G.n)
    stats = _stats.active()
    stall = 0
    for _ in range(rounds):
        if A.size <= half or A.size < 2:
            break
        if stats is not None:
            stats.detect_rounds += 1
        cuts, sampled = _decompose(G, A, tau, rng, config.solver)
        if cuts:
            gone = np.concatenate([c.side for c in cuts])
            keep = ~np.isin(A, gone)
            if not keep.all():
                A = A[keep]
                stall = 0
                continue
        # a round that sampled fewer than two terminals says nothing about A
        stall += sampled
        if stall >= stall_limit:
            break
    if A.size > half:
        return A
    return np.zeros(0, dtype=np.int64)


def threshold_upper_bound(G, U: np.ndarray) -> int:
    """Largest ``tau`` that can possibly qualify.

    More than half the terminals must be pairwise ``tau``-connected, and each
    of them then has weighted degree at least ``tau``.
    """
    if U.size < 2:
        return max(1, G.m * G.max_weight)
    deg = np.sort(G.degrees[U])[::-1]
    need = U.size // 2 + 1
    return int(max(1, min(deg[need - 1], G.m * G.max_weight)))


def find_threshold(G, U, rng: RngHandle, config: GHConfig = DEFAULT_CONFIG) -> ThresholdResult:
    """Largest ``tau`` whose largest ``tau``-connected component holds > |U|/2 terminals."""
    U = _terminal_array(G, U)
    if U.size < 2:
        raise InvalidInputError("threshold search needs at least two terminals")
    if len(connected_components(G)) != 1:
        raise InvalidInputError("threshold search needs a connected graph")
    rng = as_rng(rng)
    top = threshold_upper_bound(G, U)
    for _ in range(config.max_retries + 1):
        attempt = rng.split()
        # tau = 1 is exact on a connected graph: every pair is 1-connected
        answers = {1: U}
        lo, hi = 1, top
        if top > 1:
            # the bound itself is often the answer; one probe settles it
            answers[top] = detect_large_cc(G, U, top, attempt.split(), config)
            if answers[top].size:
                lo = top
            else:
                hi = top - 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            found = detect_large_cc(G, U, mid, attempt.split(), config)
            answers[mid] = found
            if found.size:
                lo = mid
            else:
                hi = mid - 1
        comp = answers[lo]
        above = answers.get(lo + 1)
        ok = comp.size > U.size / 2 and (lo + 1 > top or (above is not None and above.size == 0))
        if ok:
            return ThresholdResult(lo, comp)
    raise RandomizedFailureError("threshold search failed validation", seed=rng.seed)
