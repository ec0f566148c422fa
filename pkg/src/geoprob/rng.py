"""Seedable, splittable random streams.

A :class:`RngStream` is identified by a root seed plus a path of substream
indices. Each distinct ``(seed, path)`` maps to an independent PCG64 state via
numpy's ``SeedSequence`` spawn keys, so a chunk of work can always rebuild its
own stream without coordinating with other workers.
"""

from __future__ import annotations

import numpy as np

SEED_BITS = 64
_SEED_LIMIT = 1 << SEED_BITS


class RngStream:
    """A deterministic random stream. Single owner: do not share across workers."""

    __slots__ = ("seed", "path", "generator")

    def __init__(self, seed: int, path: tuple[int, ...] = ()) -> None:
        seed = int(seed)
        if not 0 <= seed < _SEED_LIMIT:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
        if any(i < 0 for i in path):
            raise ValueError("substream indices must be non-negative")
        self.seed = seed
        self.path = tuple(int(i) for i in path)
        seq = np.random.SeedSequence(entropy=seed, spawn_key=self.path)
        self.generator = np.random.Generator(np.random.PCG64(seq))

    def substream(self, index: int) -> "RngStream":
        return substream(self, index)

    def uniform(self, low=0.0, high=1.0, size=None):
        return self.generator.uniform(low, high, size)

    def normal(self, size=None):
        return self.generator.standard_normal(size)

    def integers(self, low, high=None, size=None):
        return self.generator.integers(low, high, size)

    def __repr__(self) -> str:
        return f"RngStream(seed={self.seed}, path={self.path})"


def substream(rng: RngStream, index: int) -> RngStream:
    """Child stream ``index`` of ``rng``.

    The child depends only on ``(rng.seed, rng.path, index)``, never on how
    many numbers the parent has already produced.
    """
    if index < 0:
        raise ValueError(f"substream index must be >= 0, got {index}")
    return RngStream(rng.seed, rng.path + (int(index),))
