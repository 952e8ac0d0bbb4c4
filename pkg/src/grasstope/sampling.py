"""Seeded random instances for property tests and the acceptance suite."""

from __future__ import annotations

import random
from fractions import Fraction

from .gaussian import GaussianRational, exact_det, exact_rank
from .grassmann import PointMatrix, point_matrix

DEFAULT_SEED = 1729


def random_fraction(rng: random.Random, span: int = 3, max_den: int = 3) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, max_den))


def random_scalar(rng: random.Random, zero_chance: float = 0.0) -> GaussianRational:
    if zero_chance and rng.random() < zero_chance:
        return GaussianRational(0)
    re = random_fraction(rng)
    im = random_fraction(rng) if rng.random() < 0.5 else Fraction(0)
    return GaussianRational(re, im)


def random_point(rng: random.Random, n: int, k: int, zero_chance: float = 0.25) -> PointMatrix:
    """Random n x k point of full column rank; zero density drops if unlucky."""
    for attempt in range(60):
        chance = zero_chance if attempt < 20 else 0.0
        rows = [[random_scalar(rng, chance) for _ in range(k)] for _ in range(n)]
        if exact_rank(rows) == k:
            return point_matrix(rows)
    raise RuntimeError(f"failed to sample a rank-{k} matrix with {n} rows")


def random_invertible(rng: random.Random, k: int) -> list[list[GaussianRational]]:
    while True:
        g = [[random_scalar(rng) for _ in range(k)] for _ in range(k)]
        if exact_det(g):
            return g


def random_split_instance(
    rng: random.Random, n: int
) -> tuple[PointMatrix, tuple[tuple[tuple[int, ...], int], ...]]:
    """A column-scrambled block matrix plus the block partition it hides.

    Rows of each block occupy an arbitrary subset of [n], so the instance
    also exercises row positions; blocks are reported sorted by minimum
    element with the rank each block carries.
    """
    elements = list(range(1, n + 1))
    rng.shuffle(elements)
    blocks: list[tuple[tuple[int, ...], int]] = []
    while elements:
        size = rng.randint(1, min(3, len(elements)))
        chunk = tuple(sorted(elements[:size]))
        del elements[:size]
        blocks.append((chunk, rng.randint(0, size)))
    blocks.sort(key=lambda blk: blk[0][0])
    k = sum(rank for _, rank in blocks)

    rows = [[GaussianRational(0)] * k for _ in range(n)]
    offset = 0
    for chunk, rank in blocks:
        if rank:
            while True:
                sub = [[random_scalar(rng, 0.2) for _ in range(rank)] for _ in chunk]
                if exact_rank(sub) == rank:
                    break
            for local, e in enumerate(chunk):
                rows[e - 1][offset : offset + rank] = sub[local]
        offset += rank
    plain = point_matrix(rows)
    if k == 0:
        return plain, tuple(blocks)
    g = random_invertible(rng, k)
    scrambled = point_matrix(
        [[sum((row[t] * g[t][c] for t in range(k)), GaussianRational(0)) for c in range(k)] for row in plain.rows]
    )
    return scrambled, tuple(blocks)
