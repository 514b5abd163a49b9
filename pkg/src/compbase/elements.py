"""Group elements: integer lattice vectors and symmetric rational matrices.

Both carriers are modelled by small frozen dataclasses with exact
arithmetic. A Vec lives in Z^n; a SymMat lives in the real symmetric
d x d matrices with rational entries. Symmetry is enforced at
construction time, so a SymMat in hand is always actually symmetric.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg


@dataclass(frozen=True)
class Vec:
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        if not all(isinstance(c, int) for c in self.coords):
            raise TypeError("Vec coordinates must be ints")

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __add__(self, other: "Vec") -> "Vec":
        self._check(other)
        return Vec(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Vec") -> "Vec":
        self._check(other)
        return Vec(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Vec":
        return Vec(tuple(-a for a in self.coords))

    def scale(self, k: int) -> "Vec":
        return Vec(tuple(k * a for a in self.coords))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def sort_key(self):
        return self.coords

    def _check(self, other: "Vec") -> None:
        if not isinstance(other, Vec) or other.dim != self.dim:
            raise ValueError(
                f"shape mismatch: expected Vec of dim {self.dim}, got {other!r}"
            )

    @staticmethod
    def zero(dim: int) -> "Vec":
        return Vec((0,) * dim)


@dataclass(frozen=True)
class SymMat:
    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.rows)
        if any(len(r) != n for r in self.rows):
            raise ValueError("SymMat must be square")
        if not all(
            self.rows[i][j] == self.rows[j][i]
            for i in range(n)
            for j in range(i + 1, n)
        ):
            raise ValueError("SymMat must be exactly symmetric")

    @staticmethod
    def from_rows(rows) -> "SymMat":
        return SymMat(linalg.mat(rows))

    @staticmethod
    def zero(dim: int) -> "SymMat":
        return SymMat(linalg.zeros(dim, dim))

    @staticmethod
    def identity(dim: int) -> "SymMat":
        return SymMat(linalg.identity(dim))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __add__(self, other: "SymMat") -> "SymMat":
        self._check(other)
        return SymMat(linalg.mat_add(self.rows, other.rows))

    def __sub__(self, other: "SymMat") -> "SymMat":
        self._check(other)
        return SymMat(linalg.mat_sub(self.rows, other.rows))

    def __neg__(self) -> "SymMat":
        return SymMat(linalg.mat_scale(-1, self.rows))

    def scale(self, k) -> "SymMat":
        return SymMat(linalg.mat_scale(k, self.rows))

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.rows for x in row)

    def sort_key(self):
        return tuple(x for row in self.rows for x in row)

    def _check(self, other: "SymMat") -> None:
        if not isinstance(other, SymMat) or other.dim != self.dim:
            raise ValueError(
                f"shape mismatch: expected SymMat of dim {self.dim}, got {other!r}"
            )


def conjugate(p: SymMat, g: SymMat) -> SymMat:
    """p g p, the sandwich of g by p. Symmetric whenever p and g are."""
    pg = linalg.mat_mul(p.rows, g.rows)
    return SymMat(linalg.mat_mul(pg, p.rows))


GroupElement = "Vec | SymMat"
