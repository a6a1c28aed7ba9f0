"""Seed streams derived from a master seed and a spawn path."""

from __future__ import annotations

import random

import numpy as np

SeedLike = int | random.Random


class SeedStream:
    """Deterministic source of RNGs addressed by (master seed, path).

    Two streams with the same master seed and path yield identical RNGs,
    independent of how many sibling streams exist.
    """

    def __init__(self, master_seed: int, path: tuple[int, ...] = ()):
        self._master_seed = master_seed
        self._path = path

    @property
    def master_seed(self) -> int:
        return self._master_seed

    @property
    def lineage(self) -> list[int]:
        """Master seed followed by the spawn path."""
        return [self._master_seed, *self._path]

    def child(self, *key: int) -> SeedStream:
        return SeedStream(self._master_seed, self._path + tuple(key))

    def seed(self) -> int:
        """A 64-bit integer seed for this stream."""
        sequence = np.random.SeedSequence(entropy=self._master_seed, spawn_key=self._path)
        low, high = sequence.generate_state(2, dtype=np.uint32)
        return (int(high) << 32) | int(low)

    def random(self) -> random.Random:
        return random.Random(self.seed())

    def numpy(self) -> np.random.Generator:
        return np.random.default_rng(np.random.SeedSequence(entropy=self._master_seed, spawn_key=self._path))

    def __repr__(self) -> str:
        return f"SeedStream({self._master_seed}, path={self._path})"


def as_random(seed: SeedLike) -> random.Random:
    """Accept an integer seed or an existing RNG."""
    if isinstance(seed, random.Random):
        return seed
    return random.Random(seed)
