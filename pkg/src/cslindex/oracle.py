"""Formula-independent computation of the coincidence index.

Two oracles that never look at the invariant factors of Z:

* residue counting: Z^n ∩ Y Z^n = Y M with M = {x : Z x ≡ 0 (mod q)};
  M contains q Z^n, so Sigma(Y) = [Z^n : M] = q^n / #solutions in (Z/q)^n.
* lattice basis: a basis of M from the integer kernel of [Z^T ; -q I],
  mapped through Y and canonicalized by the Hermite form.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .indices import IndexReport
from .isometry import RationalIsometry
from .matrices import IntMatrix, mat_mul
from .normalform import hermite_normal_form, integer_row_kernel

DEFAULT_RESIDUE_CAP = 10**7


class CapExceeded(ValueError):
    """q^n residues exceed the enumeration cap; use the HNF oracle instead."""


def count_congruence_solutions(z: IntMatrix, q: int) -> int:
    """Number of x in (Z/q)^n with Z x ≡ 0 (mod q), by exhaustive enumeration.

    The residues are enumerated in mixed-radix order (all values of the
    trailing n-1 coordinates, then the leading coordinate), with row-wise
    rejection as soon as some congruence fails.
    """
    if q == 1:
        return 1
    n = z.cols
    zm = np.array([[z.at(i, j) % q for j in range(n)] for i in range(z.rows)], dtype=np.int64)
    if n == 1:
        return sum(1 for t in range(q) if not np.any((zm[:, 0] * t) % q))
    grid = np.indices((q,) * (n - 1), dtype=np.int64).reshape(n - 1, -1).T
    partial = (grid @ zm[:, 1:].T) % q
    del grid
    first = zm[:, 0]
    total = 0
    for t in range(q):
        alive = np.ones(partial.shape[0], dtype=bool)
        for i in range(zm.shape[0]):
            alive &= (partial[:, i] + t * first[i]) % q == 0
            if not alive.any():
                break
        total += int(alive.sum())
    return total


def index_by_counting(
    y: RationalIsometry, cap: int = DEFAULT_RESIDUE_CAP
) -> IndexReport:
    """Sigma by counting kernel residues mod q; independent of normal forms."""
    if y.q**y.n > cap:
        raise CapExceeded(f"q^n = {y.q ** y.n} exceeds the cap {cap}")
    count = count_congruence_solutions(y.z, y.q)
    sigma = y.q**y.n // count
    return IndexReport(sigma, "oracle_count", (y.q, count))


@dataclass(frozen=True)
class IntersectionBasis:
    """Rows of basis generate Z^n ∩ Y Z^n; index is |det basis|."""

    basis: IntMatrix
    index: int


def intersection_hnf(y: RationalIsometry) -> IntersectionBasis:
    """Canonical basis of the coincidence sublattice via Hermite reduction.

    Solves x Z^T ≡ 0 (mod q) by extracting the left kernel of the stacked
    matrix [Z^T ; -q I] (rows (x, w) with x Z^T = q w), then maps the
    solution lattice through Y.
    """
    n, q, z = y.n, y.q, y.z
    zt = z.transpose()
    stacked = zt.vstack(IntMatrix.identity(n).scale(-q))
    kernel = integer_row_kernel(stacked)
    m_basis = kernel.submatrix(range(kernel.rows), range(n))
    csl = mat_mul(m_basis, zt).exact_div(q)
    h = hermite_normal_form(csl).h
    index = 1
    for i in range(n):
        index *= h.at(i, i)
    return IntersectionBasis(h, index)


def index_by_hnf(y: RationalIsometry) -> IndexReport:
    basis = intersection_hnf(y)
    return IndexReport(
        basis.index,
        "oracle_hnf",
        tuple(basis.basis.at(i, i) for i in range(basis.basis.rows)),
    )
