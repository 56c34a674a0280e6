"""Seeded rational test points on the simplex."""

from __future__ import annotations

import random
from fractions import Fraction

from simplex.multiindex import SimplexPoint

DEFAULT_SEED = 0x5EED
DEFAULT_POINTS = 5
DEFAULT_MAX_DENOMINATOR = 64


def point_rng(seed: int, k: int, purpose: str = "points") -> random.Random:
    """Independent deterministic stream per (seed, k, purpose)."""
    return random.Random(f"{seed}/{k}/{purpose}")


def sample_points(
    k: int,
    count: int,
    rng: random.Random,
    max_denominator: int = DEFAULT_MAX_DENOMINATOR,
) -> list[SimplexPoint]:
    """Random exact points with denominators <= max_denominator.

    The first point lies on the face |x| = 1 and the second on the face
    x_1 = 0; the rest are unconstrained.
    """
    points: list[SimplexPoint] = []
    for i in range(count):
        den = rng.randint(1, max_denominator)
        if i == 0:
            parts = _composition(k, den, rng)
        elif i == 1:
            parts = [0, *_composition(k, den, rng)[: k - 1]]
        else:
            parts = _composition(k + 1, den, rng)[:k]
        points.append(SimplexPoint(tuple(Fraction(p, den) for p in parts)))
    return points


def default_points(
    k: int, seed: int = DEFAULT_SEED, count: int = DEFAULT_POINTS
) -> list[SimplexPoint]:
    return sample_points(k, count, point_rng(seed, k))


def _composition(parts: int, total: int, rng: random.Random) -> list[int]:
    """``parts`` nonnegative integers summing to ``total``."""
    cuts = sorted(rng.randint(0, total) for _ in range(parts - 1))
    bounds = [0, *cuts, total]
    return [b - a for a, b in zip(bounds, bounds[1:])]
