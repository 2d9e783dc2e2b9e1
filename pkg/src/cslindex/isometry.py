"""Rational orthogonal matrices as coincidence isometries of Z^n.

A coincidence isometry of the hypercubic lattice is exactly a rational
orthogonal matrix Y, stored in the canonical form Y = (1/q) Z with Z
integral, gcd of the entries of Z equal to 1 and q > 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .matrices import IntMatrix, RatMatrix, gcd_entries, mat_mul
from .rng import Lcg


class NotOrthogonal(ValueError):
    """Raised when a matrix fails the exact orthogonality check Y^T Y = I."""


@dataclass(frozen=True)
class RationalIsometry:
    """Y = (1/q) z with z^T z == q^2 I and gcd of entries of z equal to 1."""

    n: int
    q: int
    z: IntMatrix

    def __post_init__(self) -> None:
        if self.q < 1:
            raise ValueError("q must be positive")
        if not self.z.is_square or self.z.rows != self.n:
            raise ValueError("z must be an n x n matrix")
        if gcd_entries(self.z) != 1:
            raise ValueError("entries of z must have gcd 1")
        qsq = self.q * self.q
        ztz = mat_mul(self.z.transpose(), self.z)
        for i in range(self.n):
            for j in range(self.n):
                expected = qsq if i == j else 0
                got = ztz.at(i, j)
                if got != expected:
                    raise NotOrthogonal(
                        f"columns {i} and {j} have inner product "
                        f"{Fraction(got, qsq)}, expected {0 if i != j else 1}"
                    )

    def as_rational(self) -> RatMatrix:
        return RatMatrix.make(self.z, self.q)


def identity_isometry(n: int) -> RationalIsometry:
    return RationalIsometry(n, 1, IntMatrix.identity(n))


def _canonical(q: int, z: IntMatrix) -> RationalIsometry:
    if q < 0:
        q, z = -q, z.scale(-1)
    g = math.gcd(q, gcd_entries(z))
    if g > 1:
        q //= g
        z = z.exact_div(g)
    return RationalIsometry(z.rows, q, z)


def from_rational_matrix(m: RatMatrix) -> RationalIsometry:
    """Validate an exact rational matrix as an isometry and canonicalize it."""
    if not m.numerator.is_square:
        raise ValueError("isometries must be square")
    return _canonical(m.denominator, m.numerator)


@dataclass(frozen=True)
class ReflectionAxis:
    """Primitive integer axis vector, first nonzero coordinate positive."""

    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        if not any(self.coords):
            raise ValueError("reflection axis must be nonzero")
        if math.gcd(*self.coords) != 1:
            raise ValueError("axis must be primitive; use ReflectionAxis.from_coords")

    @classmethod
    def from_coords(cls, coords: Sequence[int]) -> "ReflectionAxis":
        coords = tuple(int(c) for c in coords)
        if not any(coords):
            raise ValueError("reflection axis must be nonzero")
        g = math.gcd(*coords)
        coords = tuple(c // g for c in coords)
        first = next(c for c in coords if c)
        if first < 0:
            coords = tuple(-c for c in coords)
        return cls(coords)

    @property
    def dimension(self) -> int:
        return len(self.coords)

    @property
    def norm_sq(self) -> int:
        return sum(c * c for c in self.coords)

    @property
    def parity(self) -> str:
        return "even" if self.norm_sq % 2 == 0 else "odd"

    @property
    def coincidence_index(self) -> int:
        """Index of the reflection: v^T v when odd, v^T v / 2 when even."""
        w = self.norm_sq
        return w // 2 if w % 2 == 0 else w


def reflection(v) -> RationalIsometry:
    """Reflection through the hyperplane orthogonal to v.

    The matrix is (1/w)(w I - 2 v v^T) with w = v^T v; its canonical
    denominator is w when w is odd and w/2 when w is even, because the gcd
    of the entries of w I - 2 v v^T is 1 or 2 accordingly.
    """
    axis = v if isinstance(v, ReflectionAxis) else ReflectionAxis.from_coords(v)
    a = axis.coords
    n = axis.dimension
    w = axis.norm_sq
    t = IntMatrix(
        n,
        n,
        tuple(
            (w if i == j else 0) - 2 * a[i] * a[j] for i in range(n) for j in range(n)
        ),
    )
    if w % 2 == 0:
        return RationalIsometry(n, w // 2, t.exact_div(2))
    return RationalIsometry(n, w, t)


def compose(a: RationalIsometry, b: RationalIsometry) -> RationalIsometry:
    """Canonical form of the product a * b."""
    if a.n != b.n:
        raise ValueError("dimension mismatch")
    return _canonical(a.q * b.q, mat_mul(a.z, b.z))


def transpose_inverse(a: RationalIsometry) -> RationalIsometry:
    """The inverse, which for an isometry is the transpose."""
    return RationalIsometry(a.n, a.q, a.z.transpose())


def random_axis(n: int, coordinate_bound: int, rng: Lcg) -> ReflectionAxis:
    while True:
        coords = [rng.integer(-coordinate_bound, coordinate_bound) for _ in range(n)]
        if any(coords):
            return ReflectionAxis.from_coords(coords)


def random_isometry(
    n: int, k: int, coordinate_bound: int, seed: int
) -> RationalIsometry:
    """Product of k seeded random reflections with primitive axes."""
    if n < 2:
        raise ValueError("dimension must be at least 2")
    if k < 0 or coordinate_bound < 1:
        raise ValueError("reflection count must be >= 0 and bound >= 1")
    rng = Lcg(seed)
    iso = identity_isometry(n)
    for _ in range(k):
        iso = compose(iso, reflection(random_axis(n, coordinate_bound, rng)))
    return iso


def random_corpus(
    n: int,
    count: int,
    seed: int,
    max_reflections: int = 3,
    coordinate_bound: int = 4,
) -> list[RationalIsometry]:
    """Deterministic corpus of products of at most max_reflections reflections."""
    rng = Lcg(seed)
    out = []
    for _ in range(count):
        k = rng.integer(0, max_reflections)
        out.append(random_isometry(n, k, coordinate_bound, rng.next_bits()))
    return out
