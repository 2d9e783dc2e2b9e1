"""Smith and Hermite normal forms over the integers, with transforms.

Both algorithms use elementary (unimodular) row/column operations only, so
the recorded transforms P, Q, U are exact witnesses of the reduction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matrices import IntMatrix


@dataclass(frozen=True)
class SmithDecomposition:
    """p * A * q_right == diag(d) with p, q_right unimodular and d a divisibility chain."""

    p: IntMatrix
    q_right: IntMatrix
    d: tuple[int, ...]

    def diagonal_matrix(self, rows: int, cols: int) -> IntMatrix:
        return IntMatrix(
            rows,
            cols,
            tuple(
                self.d[i] if i == j and i < len(self.d) else 0
                for i in range(rows)
                for j in range(cols)
            ),
        )


@dataclass(frozen=True)
class HermiteForm:
    """Row-style Hermite form: u * A equals h with zero rows appended.

    h keeps only the nonzero rows (the canonical lattice basis); u is the
    full unimodular row transform.
    """

    h: IntMatrix
    u: IntMatrix


def _swap_rows(m: list[list[int]], i: int, k: int) -> None:
    m[i], m[k] = m[k], m[i]


def _add_row(m: list[list[int]], i: int, k: int, c: int) -> None:
    """row_i += c * row_k"""
    ri, rk = m[i], m[k]
    for j in range(len(ri)):
        ri[j] += c * rk[j]


def _negate_row(m: list[list[int]], i: int) -> None:
    m[i] = [-x for x in m[i]]


def _swap_cols(m: list[list[int]], j: int, k: int) -> None:
    for row in m:
        row[j], row[k] = row[k], row[j]


def _add_col(m: list[list[int]], j: int, k: int, c: int) -> None:
    """col_j += c * col_k"""
    for row in m:
        row[j] += c * row[k]


def smith_normal_form(a: IntMatrix) -> SmithDecomposition:
    """Smith normal form with unimodular transforms.

    Pivots are chosen as the smallest nonzero absolute value of the
    remaining submatrix to keep coefficient growth in check.  Invariant
    factors are normalized nonnegative, so the result is canonical.
    """
    m, n = a.rows, a.cols
    A = a.to_rows()
    P = IntMatrix.identity(m).to_rows()
    Q = IntMatrix.identity(n).to_rows()
    limit = min(m, n)

    for t in range(limit):
        # smallest nonzero |entry| of the remaining submatrix becomes the pivot
        piv = None
        best = None
        for i in range(t, m):
            row = A[i]
            for j in range(t, n):
                e = row[j]
                if e and (best is None or abs(e) < best):
                    best = abs(e)
                    piv = (i, j)
        if piv is None:
            break  # remaining submatrix is zero; trailing factors stay 0
        if piv[0] != t:
            _swap_rows(A, t, piv[0])
            _swap_rows(P, t, piv[0])
        if piv[1] != t:
            _swap_cols(A, t, piv[1])
            _swap_cols(Q, t, piv[1])

        while True:
            # clear column t by row operations
            for i in range(t + 1, m):
                while A[i][t]:
                    q = A[i][t] // A[t][t]
                    if q:
                        _add_row(A, i, t, -q)
                        _add_row(P, i, t, -q)
                    if A[i][t]:
                        _swap_rows(A, t, i)
                        _swap_rows(P, t, i)
            # clear row t by column operations (may re-dirty column t via swaps)
            for j in range(t + 1, n):
                while A[t][j]:
                    q = A[t][j] // A[t][t]
                    if q:
                        _add_col(A, j, t, -q)
                        _add_col(Q, j, t, -q)
                    if A[t][j]:
                        _swap_cols(A, t, j)
                        _swap_cols(Q, t, j)
            if any(A[i][t] for i in range(t + 1, m)):
                continue
            if any(A[t][j] for j in range(t + 1, n)):
                continue
            # enforce the divisibility chain before advancing
            pivot = A[t][t]
            offender = None
            for i in range(t + 1, m):
                row = A[i]
                for j in range(t + 1, n):
                    if row[j] % pivot:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            _add_row(A, t, offender, 1)
            _add_row(P, t, offender, 1)

        if A[t][t] < 0:
            _negate_row(A, t)
            _negate_row(P, t)

    d = tuple(A[i][i] for i in range(limit))
    return SmithDecomposition(IntMatrix.from_rows(P), IntMatrix.from_rows(Q), d)


def invariant_factors(a: IntMatrix) -> tuple[int, ...]:
    return smith_normal_form(a).d


def _row_echelon(a: IntMatrix):
    """Integer row echelon form via unimodular row ops.

    Returns (reduced rows, transform rows, rank).  Pivots are positive and
    entries above each pivot are reduced into [0, pivot).
    """
    m, n = a.rows, a.cols
    A = a.to_rows()
    U = IntMatrix.identity(m).to_rows()
    r = 0
    for j in range(n):
        while True:
            nz = [i for i in range(r, m) if A[i][j]]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(A[i][j]))
            if i0 != r:
                _swap_rows(A, r, i0)
                _swap_rows(U, r, i0)
            done = True
            for i in range(r + 1, m):
                if A[i][j]:
                    q = A[i][j] // A[r][j]
                    _add_row(A, i, r, -q)
                    _add_row(U, i, r, -q)
                    if A[i][j]:
                        done = False
            if done:
                break
        if r < m and A[r][j]:
            if A[r][j] < 0:
                _negate_row(A, r)
                _negate_row(U, r)
            for i in range(r):
                q = A[i][j] // A[r][j]
                if q:
                    _add_row(A, i, r, -q)
                    _add_row(U, i, r, -q)
            r += 1
    return A, U, r


def hermite_normal_form(a: IntMatrix) -> HermiteForm:
    """Canonical row-style Hermite normal form of a full-column-rank matrix."""
    if a.rows < a.cols:
        raise ValueError("hermite_normal_form expects rows >= cols")
    A, U, rank = _row_echelon(a)
    if rank < a.cols:
        raise ValueError(f"rank-deficient input: rank {rank} < {a.cols} columns")
    return HermiteForm(IntMatrix.from_rows(A[:rank]), IntMatrix.from_rows(U))


def integer_row_kernel(a: IntMatrix) -> IntMatrix:
    """Basis (rows) of the left kernel {x : x * a == 0}."""
    A, U, rank = _row_echelon(a)
    if rank == a.rows:
        raise ValueError("trivial kernel")
    return IntMatrix.from_rows(U[rank:])


def hnf_lattice_contains(h: IntMatrix, vec) -> bool:
    """Membership test for the row lattice of an HNF basis h (square, upper triangular)."""
    if not h.is_square:
        raise ValueError("expected a square HNF basis")
    n = h.cols
    vec = [int(x) for x in vec]
    if len(vec) != n:
        raise ValueError("vector dimension mismatch")
    coeffs = [0] * n
    residue = list(vec)
    for i in range(n):
        pivot = h.at(i, i)
        if residue[i] % pivot:
            return False
        c = residue[i] // pivot
        coeffs[i] = c
        for j in range(i, n):
            residue[j] -= c * h.at(i, j)
    return all(x == 0 for x in residue)
