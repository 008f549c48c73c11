"""Tunable constants of the recursive construction."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace


@dataclass(frozen=True)
class GHConfig:
    """Constants hidden behind the O() bounds of the construction.

    ``base_factor``     base case when ``|U| <= base_factor * log_{3/2} n``
    ``detect_factor``   large-component search runs ``detect_factor * log2(n)^2`` rounds
    ``stall_factor``    either loop stops after ``stall_factor * log2(n)^2`` rounds
                        without progress
    ``partial_factor``  partial-tree recursion depth cap ``partial_factor * log2(n)^2``
    ``degree_prune``    drop terminals whose singleton cut is already below the
                        threshold before sampling
    """

    base_factor: float = 4.0
    detect_factor: float = 4.0
    stall_factor: float = 1.0
    partial_factor: float = 4.0
    degree_prune: bool = True
    max_retries: int = 3
    solver: str = "auto"

    def replace(self, **changes) -> "GHConfig":
        return replace(self, **changes)

    @staticmethod
    def _log2sq(n: int) -> float:
        return math.log2(max(n, 4)) ** 2

    def detect_rounds(self, n: int) -> int:
        return max(1, math.ceil(self.detect_factor * self._log2sq(n)))

    def stall_rounds(self, n: int) -> int:
        return max(1, math.ceil(self.stall_factor * self._log2sq(n)))

    def partial_cap(self, n: int) -> int:
        return max(1, math.ceil(self.partial_factor * self._log2sq(n)))

    def base_case_size(self, n: int) -> int:
        return math.ceil(self.base_factor * math.log(max(n, 3)) / math.log(1.5))


DEFAULT_CONFIG = GHConfig()
