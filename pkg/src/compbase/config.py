"""Shared knobs for exhaustive sweeps and randomized checks."""

from __future__ import annotations

import random
import zlib
from dataclasses import dataclass


@dataclass(frozen=True)
class CheckConfig:
    """Bounds and seeding for every verification routine.

    height_bound caps the multiples of the unit used when sweeping bounded
    regions of an infinite group.  samples is the randomized-check budget.
    Two runs with the same config produce the same verdicts and the same
    reports, byte for byte.
    """

    height_bound: int = 3
    samples: int = 1000
    seed: int = 0

    def __post_init__(self) -> None:
        if self.height_bound < 1:
            raise ValueError("height_bound must be at least 1")
        if self.samples < 0:
            raise ValueError("samples must be nonnegative")

    def rng(self, tag: str = "") -> random.Random:
        """Deterministic stream for one named sweep.

        Distinct tags decorrelate the sweeps while keeping every one of them
        reproducible from the single seed.
        """

        salt = zlib.crc32(tag.encode("utf-8"))
        return random.Random((self.seed * 0x9E3779B1 + salt) & 0x7FFFFFFFFFFFFFFF)

    @property
    def spot(self) -> int:
        """Sample count for cheap side checks of certified facts."""

        return max(8, min(64, self.samples))


DEFAULT = CheckConfig()
