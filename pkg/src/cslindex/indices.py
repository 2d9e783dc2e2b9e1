"""Coincidence index formulas.

Four routes to Sigma(Y) = [Z^n : Z^n ∩ Y Z^n]:

* the general invariant-factor product (Fortes),
* the closed form q^m / delta_m with m = floor(n/2),
* the reflection formula v^T v (odd) or v^T v / 2 (even),
* the multiplicative rule for products of reflections with pairwise
  coprime individual indices.

Every operation returns an IndexReport so callers can see which formula
produced the value and from what data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .isometry import RationalIsometry, ReflectionAxis
from .matrices import minors_gcd
from .normalform import invariant_factors

# minor enumeration stays cheap up to this dimension (C(8,4)^2 = 4900 minors)
_MINOR_CROSSCHECK_MAX_DIM = 8


@dataclass(frozen=True)
class IndexReport:
    """Sigma with provenance.

    factors holds the data the method used: the invariant factors for
    `fortes`, (q, delta_m) for `closed_form`, (v^T v,) for `reflection`,
    the individual reflection indices for `coprime_product`, (q, residue
    solution count) for `oracle_count` and the HNF diagonal for
    `oracle_hnf`.
    """

    sigma: int
    method: str
    factors: tuple[int, ...]


class CoprimalityViolated(ValueError):
    """The product rule was applied to reflections whose indices share a factor."""

    def __init__(self, i: int, j: int, ri: int, rj: int):
        super().__init__(
            f"reflection indices r_{i}={ri} and r_{j}={rj} share the factor "
            f"{math.gcd(ri, rj)}; the product formula does not apply"
        )
        self.pair = (i, j)
        self.indices = (ri, rj)


def index_fortes(y: RationalIsometry) -> IndexReport:
    """Sigma as the product of q / gcd(q, q_i) over the invariant factors q_i of Z."""
    d = invariant_factors(y.z)
    sigma = math.prod(y.q // math.gcd(y.q, di) for di in d)
    return IndexReport(sigma, "fortes", d)


def index_closed_form(y: RationalIsometry) -> IndexReport:
    """Sigma = q^m / delta_m with m = floor(n/2).

    delta_m (the gcd of the m x m minors of Z) is taken as the product of
    the first m invariant factors; for small dimensions the value is
    cross-checked against direct minor enumeration.
    """
    m = y.n // 2
    d = invariant_factors(y.z)
    delta_m = math.prod(d[:m])
    if y.n <= _MINOR_CROSSCHECK_MAX_DIM and minors_gcd(y.z, m) != delta_m:
        raise RuntimeError(
            "invariant-factor product disagrees with direct minor enumeration"
        )
    sigma = y.q**m // delta_m
    return IndexReport(sigma, "closed_form", (y.q, delta_m))


def index_reflection(v) -> IndexReport:
    """Index of the reflection along v, straight from the axis."""
    axis = v if isinstance(v, ReflectionAxis) else ReflectionAxis.from_coords(v)
    return IndexReport(axis.coincidence_index, "reflection", (axis.norm_sq,))


def index_coprime_product(vs) -> IndexReport:
    """Index of a product of reflections with pairwise coprime indices.

    The precondition is verified, not assumed: the rule is known to fail
    without it (a reflection squared is the identity).
    """
    axes = [
        v if isinstance(v, ReflectionAxis) else ReflectionAxis.from_coords(v)
        for v in vs
    ]
    rs = [axis.coincidence_index for axis in axes]
    for i in range(len(rs)):
        for j in range(i + 1, len(rs)):
            if math.gcd(rs[i], rs[j]) != 1:
                raise CoprimalityViolated(i, j, rs[i], rs[j])
    return IndexReport(math.prod(rs), "coprime_product", tuple(rs))


def palindrome_factors(y: RationalIsometry) -> tuple[tuple[int, int], ...]:
    """Pairs (d_i, d_{n+1-i}) of invariant factors; each product equals q^2."""
    d = invariant_factors(y.z)
    return tuple((d[i], d[y.n - 1 - i]) for i in range((y.n + 1) // 2))
