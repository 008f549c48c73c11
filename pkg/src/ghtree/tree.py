"""Gomory-Hu Steiner trees: storage, queries and the tree text format."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import InvalidInputError, InvalidQueryError
from .graph import _data_lines, _parse_int
from .stats import RecursionStats


@dataclass(eq=False)
class GomoryHuTree:
    """Tree over the terminals plus the total map ``f`` from vertices to terminals.

    ``edges`` are ``(u, v, w)`` with ``u < v`` terminals.  ``f[v]`` is the
    terminal vertex ``v`` is assigned to.
    """

    terminals: np.ndarray
    edges: list[tuple[int, int, int]]
    f: np.ndarray
    stats: RecursionStats = field(default_factory=RecursionStats)

    def __post_init__(self):
        self.terminals = np.unique(np.asarray(self.terminals, dtype=np.int64))
        self.f = np.asarray(self.f, dtype=np.int64)
        self.edges = sorted((min(int(a), int(b)), max(int(a), int(b)), int(w)) for a, b, w in self.edges)
        self._adj = None

    @property
    def n(self) -> int:
        return int(self.f.size)

    def adjacency(self) -> dict[int, list[tuple[int, int]]]:
        """Terminal -> list of (neighbor, edge index)."""
        if self._adj is None:
            adj = {int(u): [] for u in self.terminals.tolist()}
            for i, (a, b, _) in enumerate(self.edges):
                adj[a].append((b, i))
                adj[b].append((a, i))
            self._adj = adj
        return self._adj

    def _check_terminal(self, x):
        if int(x) not in self.adjacency():
            raise InvalidQueryError(f"{x} is not a terminal of the tree")

    def path_edges(self, s: int, t: int) -> list[int]:
        """Edge indices along the tree path from ``s`` to ``t``, in order from ``s``."""
        self._check_terminal(s)
        self._check_terminal(t)
        adj = self.adjacency()
        parent = {int(s): (None, None)}
        stack = [int(s)]
        while stack:
            x = stack.pop()
            if x == t:
                break
            for y, i in adj[x]:
                if y not in parent:
                    parent[y] = (x, i)
                    stack.append(y)
        if int(t) not in parent:
            raise InvalidQueryError("tree is disconnected")
        path = []
        x = int(t)
        while parent[x][0] is not None:
            x, i = parent[x]
            path.append(i)
        return path[::-1]

    def component(self, start: int, removed: int) -> np.ndarray:
        """Terminals reachable from ``start`` without using edge ``removed``."""
        adj = self.adjacency()
        seen = {int(start)}
        stack = [int(start)]
        while stack:
            x = stack.pop()
            for y, i in adj[x]:
                if i != removed and y not in seen:
                    seen.add(y)
                    stack.append(y)
        return np.array(sorted(seen), dtype=np.int64)

    def preimage(self, terminals) -> np.ndarray:
        return np.flatnonzero(np.isin(self.f, np.asarray(terminals, dtype=np.int64)))

    def query(self, s: int, t: int) -> tuple[int, np.ndarray]:
        """Minimum cut value between terminals and the f-preimage of the ``s`` side."""
        if int(s) == int(t):
            raise InvalidQueryError("source and sink must differ")
        path = self.path_edges(s, t)
        best = min(path, key=lambda i: self.edges[i][2])
        return self.edges[best][2], self.preimage(self.component(s, best))

    def value(self, s: int, t: int) -> int:
        if int(s) == int(t):
            raise InvalidQueryError("source and sink must differ")
        return min(self.edges[i][2] for i in self.path_edges(s, t))

    def all_pairs(self) -> dict[tuple[int, int], int]:
        """Path minimum for every terminal pair ``u < v``."""
        adj = self.adjacency()
        out = {}
        for s in self.terminals.tolist():
            best = {s: None}
            stack = [s]
            while stack:
                x = stack.pop()
                for y, i in adj[x]:
                    if y not in best:
                        w = self.edges[i][2]
                        best[y] = w if best[x] is None else min(best[x], w)
                        stack.append(y)
            for t, w in best.items():
                if s < t:
                    out[(s, t)] = w
        return out

    def k_components(self, k: int) -> list[np.ndarray]:
        """Terminal groups left after deleting edges of weight below ``k``."""
        parent = {u: u for u in self.terminals.tolist()}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b, w in self.edges:
            if w >= k:
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
        groups: dict[int, list[int]] = {}
        for u in self.terminals.tolist():
            groups.setdefault(find(u), []).append(u)
        return sorted((np.array(g, dtype=np.int64) for g in groups.values()), key=lambda g: int(g[0]))


def tree_query(T: GomoryHuTree, s: int, t: int) -> tuple[int, np.ndarray]:
    return T.query(s, t)


def k_components(T: GomoryHuTree, k: int) -> list[np.ndarray]:
    return T.k_components(k)


# -- text format --------------------------------------------------------------


def format_tree(T: GomoryHuTree) -> str:
    out = [f"# ghtree n={T.n} terminals={T.terminals.size}"]
    out += [f"{a} {b} {w}" for a, b, w in T.edges]
    out += [f"f {v} {u}" for v, u in enumerate(T.f.tolist())]
    return "\n".join(out) + "\n"


def parse_tree(text: str) -> GomoryHuTree:
    edges = []
    fmap: dict[int, int] = {}
    for lineno, toks in _data_lines(text):
        if toks[0] == "f":
            if len(toks) != 3:
                raise InvalidInputError(f"line {lineno}: expected 'f <v> <terminal>'")
            v, u = _parse_int(toks[1], lineno), _parse_int(toks[2], lineno)
            if v in fmap:
                raise InvalidInputError(f"line {lineno}: vertex {v} mapped twice")
            fmap[v] = u
        else:
            if len(toks) != 3:
                raise InvalidInputError(f"line {lineno}: expected '<u> <v> <w>'")
            edges.append(tuple(_parse_int(t, lineno) for t in toks))
    n = len(fmap)
    if sorted(fmap) != list(range(n)):
        raise InvalidInputError("f lines must cover vertices 0..n-1 exactly once")
    f = np.array([fmap[v] for v in range(n)], dtype=np.int64)
    terminals = np.unique(f)
    known = set(terminals.tolist())
    for a, b, w in edges:
        if a not in known or b not in known:
            raise InvalidInputError(f"tree edge ({a}, {b}) joins a non-terminal")
        if w < 0:
            raise InvalidInputError("tree edge weights must be nonnegative")
    if len(edges) != terminals.size - 1:
        raise InvalidInputError("tree must have exactly |terminals| - 1 edges")
    return GomoryHuTree(terminals, edges, f)


def read_tree(path) -> GomoryHuTree:
    return parse_tree(Path(path).read_text())


def write_tree(T: GomoryHuTree, path) -> None:
    Path(path).write_text(format_tree(T))
