"""Splittable deterministic random streams."""

from __future__ import annotations

import numpy as np


class RngHandle:
    """A seeded stream that can spawn independent child streams.

    Identical seeds and identical call sequences give identical draws, and
    children spawned in the same order are identical across runs.
    """

    def __init__(self, seed: int = 0, *, _seq: np.random.SeedSequence | None = None):
        if _seq is None:
            if seed < 0 or seed >= 2**64:
                raise ValueError("seed must be an unsigned 64-bit integer")
            _seq = np.random.SeedSequence(int(seed))
        self._seq = _seq
        self.seed = int(seed)
        self.generator = np.random.default_rng(_seq)

    def split(self) -> "RngHandle":
        (child,) = self._seq.spawn(1)
        return RngHandle(self.seed, _seq=child)

    def integers(self, low, high):
        return int(self.generator.integers(low, high))

    def random(self, size):
        return self.generator.random(size)

    def __repr__(self):
        return f"RngHandle(seed={self.seed}, spawn_key={self._seq.spawn_key})"


def as_rng(rng) -> RngHandle:
    if isinstance(rng, RngHandle):
        return rng
    return RngHandle(0 if rng is None else int(rng))
