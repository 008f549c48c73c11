"""Input checks shared by the estimator and the command line."""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .errors import InvalidInputError, InvalidQueryError
from .graph import WeightedGraph, _data_lines, _parse_int
from .hypergraph import Hypergraph


def check_graph(X, n: int | None = None):
    """Coerce ``X`` into a :class:`WeightedGraph` or :class:`Hypergraph`.

    Accepts either graph type unchanged, or an integer array of rows
    ``(u, v)`` / ``(u, v, w)``; ``n`` defaults to one past the largest id.
    """
    if isinstance(X, (WeightedGraph, Hypergraph)):
        return X
    arr = np.asarray(X)
    if arr.size == 0:
        return WeightedGraph(0 if n is None else int(n), [])
    if arr.ndim != 2 or arr.shape[1] not in (2, 3):
        raise InvalidInputError("edge array must have shape (m, 2) or (m, 3)")
    if not np.issubdtype(arr.dtype, np.integer):
        if not np.all(np.mod(arr, 1) == 0):
            raise InvalidInputError("edge endpoints and weights must be integers")
        arr = arr.astype(np.int64)
    if (arr[:, :2] < 0).any():
        raise InvalidInputError("vertex ids must be nonnegative")
    size = int(arr[:, :2].max()) + 1 if n is None else int(n)
    w = arr[:, 2] if arr.shape[1] == 3 else None
    return WeightedGraph.from_arrays(size, arr[:, 0], arr[:, 1], w)


def check_terminals(U, n: int) -> np.ndarray:
    """Sorted unique terminal ids, all inside ``0..n-1`` (default: every vertex)."""
    if U is None:
        return np.arange(n, dtype=np.int64)
    arr = np.unique(np.asarray(list(U), dtype=np.int64))
    if arr.size == 0:
        raise InvalidInputError("terminal set must be nonempty")
    if arr[0] < 0 or arr[-1] >= n:
        raise InvalidInputError("terminal set names an unknown vertex")
    return arr


def check_pairs(pairs, terminals: np.ndarray) -> np.ndarray:
    """An ``(k, 2)`` array of distinct terminal pairs."""
    arr = np.asarray(pairs, dtype=np.int64)
    if arr.ndim == 1 and arr.size == 2:
        arr = arr.reshape(1, 2)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise InvalidQueryError("queries must be pairs (s, t)")
    if (arr[:, 0] == arr[:, 1]).any():
        raise InvalidQueryError("source and sink must differ")
    if not np.isin(arr, terminals).all():
        raise InvalidQueryError("queries must name terminals")
    return arr


def read_terminals(path) -> np.ndarray:
    """Whitespace separated terminal ids; ``#`` starts a comment."""
    ids = [_parse_int(tok, lineno) for lineno, toks in _data_lines(Path(path).read_text()) for tok in toks]
    if not ids:
        raise InvalidInputError("terminal file lists no vertices")
    return np.array(ids, dtype=np.int64)


def read_groups(path) -> list[list[int]]:
    """One terminal group per line."""
    return [[_parse_int(tok, lineno) for tok in toks] for lineno, toks in _data_lines(Path(path).read_text())]
