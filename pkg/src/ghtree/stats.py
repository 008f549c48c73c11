"""Run instrumentation: maxflow counters and recursion bookkeeping.

Collection is scoped with :func:`collecting`; code outside such a block
pays nothing for the hooks.
"""

from __future__ import annotations

import contextvars
import math
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field

_ACTIVE: contextvars.ContextVar = contextvars.ContextVar("ghtree_stats", default=None)


@dataclass
class RecursionStats:
    seed: int | None = None
    depth: int = 0
    per_level_edges: list[int] = field(default_factory=list)
    per_level_vertices: list[int] = field(default_factory=list)
    per_level_terminals: list[int] = field(default_factory=list)
    instances: int = 0
    maxflow_calls: int = 0
    maxflow_edge_sum: int = 0
    partial_depth: int = 0
    detect_rounds: int = 0
    retries: int = 0
    wall_ms: float = 0.0

    def record_instance(self, depth: int, n: int, size: int, terminals: int) -> None:
        self.instances += 1
        self.depth = max(self.depth, depth)
        for seq in (self.per_level_edges, self.per_level_vertices, self.per_level_terminals):
            while len(seq) <= depth:
                seq.append(0)
        self.per_level_edges[depth] += size
        self.per_level_vertices[depth] += n
        self.per_level_terminals[depth] += terminals

    @property
    def instance_edge_sum(self) -> int:
        return sum(self.per_level_edges)

    def merge(self, other: "RecursionStats") -> "RecursionStats":
        """Associative combination of two runs' counters."""
        out = RecursionStats(seed=self.seed if self.seed is not None else other.seed)
        out.depth = max(self.depth, other.depth)
        for name in ("per_level_edges", "per_level_vertices", "per_level_terminals"):
            a, b = getattr(self, name), getattr(other, name)
            merged = [x + y for x, y in zip(a, b)] + (a[len(b):] if len(a) > len(b) else b[len(a):])
            setattr(out, name, merged)
        for name in ("instances", "maxflow_calls", "maxflow_edge_sum", "detect_rounds", "retries"):
            setattr(out, name, getattr(self, name) + getattr(other, name))
        out.partial_depth = max(self.partial_depth, other.partial_depth)
        out.wall_ms = self.wall_ms + other.wall_ms
        return out

    def to_dict(self) -> dict:
        return asdict(self)


@contextmanager
def collecting(stats: RecursionStats | None = None):
    stats = RecursionStats() if stats is None else stats
    token = _ACTIVE.set(stats)
    try:
        yield stats
    finally:
        _ACTIVE.reset(token)


def active() -> RecursionStats | None:
    return _ACTIVE.get()


def record_maxflow(size: int) -> None:
    stats = _ACTIVE.get()
    if stats is not None:
        stats.maxflow_calls += 1
        stats.maxflow_edge_sum += int(size)


def depth_bound(num_terminals: int) -> int:
    """``floor(log_{3/2} |U|)``, the bound on the main recursion depth."""
    if num_terminals <= 1:
        return 0
    bound = math.floor(math.log(num_terminals) / math.log(1.5))
    # guard against log rounding just below an exact power of 3/2
    if 1.5 ** (bound + 1) <= num_terminals:
        bound += 1
    return bound


def size_constant(instance_edges: int, m: int, num_terminals: int) -> float:
    """Fitted constant ``sum of instance sizes / (m * log2(|U|)^2)``."""
    return instance_edges / (m * math.log2(max(num_terminals, 2)) ** 2)
