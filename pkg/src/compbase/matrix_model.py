"""Samplers and projection helpers for the symmetric rational matrix model.

All randomness flows through an explicit random.Random instance, so every
sweep is reproducible from its seed. Orthogonal matrices come from the
Cayley transform of a rational antisymmetric matrix, which is exactly
orthogonal in rational arithmetic; conjugating a 0/1 coordinate mask by one
yields an exactly idempotent symmetric rational projection.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import linalg
from .elements import SymMat

DEFAULT_BOUND = 16


def is_projection(p: SymMat) -> bool:
    """Exact test: p is symmetric (by type) and p*p == p."""
    return linalg.mat_mul(p.rows, p.rows) == p.rows


def cayley_orthogonal(dim: int, rng: random.Random, bound: int = DEFAULT_BOUND):
    """Rational orthogonal matrix (I - S)(I + S)^-1 for random antisymmetric S."""
    s = [[Fraction(0)] * dim for _ in range(dim)]
    for i in range(dim):
        for j in range(i + 1, dim):
            x = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
            s[i][j] = x
            s[j][i] = -x
    s = tuple(tuple(row) for row in s)
    eye = linalg.identity(dim)
    return linalg.mat_mul(linalg.mat_sub(eye, s), linalg.invert(linalg.mat_add(eye, s)))


def _mask(dim: int, bits) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(
        tuple(Fraction(1 if (i == j and bits[i]) else 0) for j in range(dim))
        for i in range(dim)
    )


def projection_from_mask(q, bits) -> SymMat:
    """q^T diag(bits) q for orthogonal q; exactly idempotent and symmetric."""
    dim = len(q)
    m = linalg.mat_mul(linalg.transpose(q), linalg.mat_mul(_mask(dim, bits), q))
    return SymMat(m)


def draw_projection(
    dim: int,
    rng: random.Random,
    bound: int = DEFAULT_BOUND,
    rank: int | None = None,
) -> SymMat:
    q = cayley_orthogonal(dim, rng, bound)
    if rank is None:
        bits = [rng.randint(0, 1) for _ in range(dim)]
    else:
        bits = [1] * rank + [0] * (dim - rank)
    return projection_from_mask(q, bits)


def draw_projection_pair(
    dim: int,
    rng: random.Random,
    commuting: bool,
    bound: int = DEFAULT_BOUND,
) -> tuple[SymMat, SymMat]:
    """A pair of projections; commuting=True shares one orthogonal frame."""
    if commuting:
        q = cayley_orthogonal(dim, rng, bound)
        bits_p = [rng.randint(0, 1) for _ in range(dim)]
        bits_q = [rng.randint(0, 1) for _ in range(dim)]
        return projection_from_mask(q, bits_p), projection_from_mask(q, bits_q)
    return draw_projection(dim, rng, bound), draw_projection(dim, rng, bound)


def draw_nested_projections(
    dim: int, rng: random.Random, bound: int = DEFAULT_BOUND
) -> tuple[SymMat, SymMat]:
    """(p, q) with q <= p, built from nested masks in a shared frame."""
    q_frame = cayley_orthogonal(dim, rng, bound)
    bits_p = [rng.randint(0, 1) for _ in range(dim)]
    bits_q = [b if rng.randint(0, 1) else 0 for b in bits_p]
    return projection_from_mask(q_frame, bits_p), projection_from_mask(q_frame, bits_q)


def draw_effect(dim: int, rng: random.Random, bound: int = DEFAULT_BOUND) -> SymMat:
    """Random element of the unit interval: q^T D q with diagonal D in [0,1]."""
    q = cayley_orthogonal(dim, rng, bound)
    diag = []
    for _ in range(dim):
        den = rng.randint(1, bound)
        diag.append(Fraction(rng.randint(0, den), den))
    d = tuple(
        tuple(diag[i] if i == j else Fraction(0) for j in range(dim))
        for i in range(dim)
    )
    return SymMat(linalg.mat_mul(linalg.transpose(q), linalg.mat_mul(d, q)))


def draw_positive(
    dim: int, rng: random.Random, height: int, bound: int = DEFAULT_BOUND
) -> SymMat:
    """Sum of at most `height` random effects; lies between 0 and height*unit."""
    total = SymMat.zero(dim)
    for _ in range(rng.randint(0, height)):
        total = total + draw_effect(dim, rng, bound)
    return total


def draw_signed(
    dim: int, rng: random.Random, height: int, bound: int = DEFAULT_BOUND
) -> SymMat:
    return draw_positive(dim, rng, height, bound) - draw_positive(dim, rng, height, bound)


def random_effect(dim: int, seed: int = 0, bound: int = DEFAULT_BOUND) -> SymMat:
    """Single-shot deterministic effect sample for a given seed."""
    return draw_effect(dim, random.Random(seed), bound)


def random_projection(dim: int, seed: int = 0, bound: int = DEFAULT_BOUND) -> SymMat:
    """Single-shot deterministic projection sample for a given seed."""
    return draw_projection(dim, random.Random(seed), bound)
