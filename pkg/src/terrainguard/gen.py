"""Seeded random terrains with integer vertices at x = 0, 1, ..., n-1."""
from __future__ import annotations

import random
from dataclasses import dataclass

from .terrain import Terrain, parse_terrain

PROFILES = ("uniform", "spiky", "staircase")


@dataclass(frozen=True)
class GenSpec:
    n: int
    seed: int = 0
    height_range: tuple[int, int] = (0, 8)
    profile: str = "uniform"

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"n must be at least 2, got {self.n}")
        lo, hi = self.height_range
        if lo > hi:
            raise ValueError(f"empty height range {self.height_range}")
        if self.profile not in PROFILES:
            raise ValueError(f"unknown profile {self.profile!r}; choose from {PROFILES}")


def _heights(spec: GenSpec, rng: random.Random) -> list[int]:
    lo, hi = spec.height_range
    if spec.profile == "uniform":
        return [rng.randint(lo, hi) for _ in range(spec.n)]
    if spec.profile == "spiky":
        # odd positions strictly above even ones whenever the range allows
        mid = (lo + hi) // 2
        low_top = mid if hi > lo else lo
        high_bot = min(mid + 1, hi)
        return [rng.randint(high_bot, hi) if i % 2 else rng.randint(lo, low_top)
                for i in range(spec.n)]
    # staircase: mostly flat or rising steps with occasional drops, clamped
    ys = [rng.randint(lo, (lo + hi) // 2)]
    for _ in range(spec.n - 1):
        step = rng.choice((0, 0, 1, 1, 2, -1, -3))
        ys.append(min(hi, max(lo, ys[-1] + step)))
    return ys


def gen_terrain(spec: GenSpec) -> Terrain:
    rng = random.Random(spec.seed)
    return parse_terrain(list(enumerate(_heights(spec, rng))))
