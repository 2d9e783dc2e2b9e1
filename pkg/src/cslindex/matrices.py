"""Exact dense matrices over arbitrary-precision integers and rationals.

Everything here is pure and immutable; no floating point is ever used.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

# Enumerating all i x i minors is a reference oracle, not a production path;
# refuse combinatorial blowups beyond this many minors.
MINOR_BUDGET = 1_000_000


@dataclass(frozen=True)
class IntMatrix:
    """Row-major integer matrix."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise ValueError("matrix dimensions must be positive")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows) -> "IntMatrix":
        rows = [list(r) for r in rows]
        if not rows:
            raise ValueError("matrix needs at least one row")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, tuple(int(x) for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, values) -> "IntMatrix":
        values = [int(v) for v in values]
        n = len(values)
        return cls(n, n, tuple(values[i] if i == j else 0 for i in range(n) for j in range(n)))

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols,
            self.rows,
            tuple(self.at(i, j) for j in range(self.cols) for i in range(self.rows)),
        )

    def scale(self, c: int) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(c * e for e in self.entries))

    def exact_div(self, c: int) -> "IntMatrix":
        """Divide every entry by c, which must divide exactly."""
        if c == 0:
            raise ZeroDivisionError("division of matrix by zero")
        if any(e % c for e in self.entries):
            raise ValueError(f"{c} does not divide all entries")
        return IntMatrix(self.rows, self.cols, tuple(e // c for e in self.entries))

    def vstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.cols:
            raise ValueError("column count mismatch in vstack")
        return IntMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def submatrix(self, row_idx, col_idx) -> "IntMatrix":
        return IntMatrix.from_rows(
            [[self.at(i, j) for j in col_idx] for i in row_idx]
        )

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __mul__(self, other: "IntMatrix") -> "IntMatrix":
        return mat_mul(self, other)


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """Exact matrix product."""
    if a.cols != b.rows:
        raise ValueError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    bt = b.transpose()
    out = []
    for i in range(a.rows):
        ra = a.row(i)
        out.extend(sum(x * y for x, y in zip(ra, bt.row(j))) for j in range(b.cols))
    return IntMatrix(a.rows, b.cols, tuple(out))


def det(a: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if not a.is_square:
        raise ValueError("determinant of a non-square matrix")
    n = a.rows
    m = a.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact by the Bareiss identity
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def gcd_entries(a: IntMatrix) -> int:
    """gcd of the absolute values of the nonzero entries."""
    g = 0
    for e in a.entries:
        if e:
            g = math.gcd(g, e)
    if g == 0:
        raise ValueError("gcd of entries is undefined for the zero matrix")
    return g


def minors_gcd(a: IntMatrix, i: int) -> int:
    """gcd of the determinants of all i x i minors, by full enumeration."""
    if i < 1 or i > min(a.rows, a.cols):
        raise ValueError(f"minor order {i} out of range for {a.rows}x{a.cols}")
    if math.comb(a.rows, i) * math.comb(a.cols, i) > MINOR_BUDGET:
        raise ValueError("too many minors to enumerate; use the normal-form route")
    g = 0
    for ri in combinations(range(a.rows), i):
        for ci in combinations(range(a.cols), i):
            g = math.gcd(g, det(a.submatrix(ri, ci)))
    if g == 0:
        raise ValueError(f"all {i}x{i} minors vanish")
    return g


@dataclass(frozen=True)
class RatMatrix:
    """(1/denominator) * numerator with denominator > 0, in lowest terms."""

    numerator: IntMatrix
    denominator: int

    def __post_init__(self) -> None:
        if self.denominator <= 0:
            raise ValueError("denominator must be positive")
        if self.denominator > 1:
            g = math.gcd(self.denominator, gcd_entries(self.numerator))
            if g != 1:
                raise ValueError("RatMatrix not in canonical form; use RatMatrix.make")

    @classmethod
    def make(cls, numerator: IntMatrix, denominator: int) -> "RatMatrix":
        if denominator == 0:
            raise ZeroDivisionError("zero denominator")
        if denominator < 0:
            numerator, denominator = numerator.scale(-1), -denominator
        if any(numerator.entries):
            g = math.gcd(denominator, gcd_entries(numerator))
            if g > 1:
                numerator = numerator.exact_div(g)
                denominator //= g
        else:
            denominator = 1
        return cls(numerator, denominator)

    @classmethod
    def from_fractions(cls, rows) -> "RatMatrix":
        rows = [[Fraction(x) for x in r] for r in rows]
        den = 1
        for r in rows:
            for x in r:
                den = den * x.denominator // math.gcd(den, x.denominator)
        num = IntMatrix.from_rows(
            [[x.numerator * (den // x.denominator) for x in r] for r in rows]
        )
        return cls.make(num, den)

    def entry(self, i: int, j: int) -> Fraction:
        return Fraction(self.numerator.at(i, j), self.denominator)


# --- text format -----------------------------------------------------------
#
# First line: "rows cols".  Then one line per row of whitespace-separated
# tokens; integer tokens for IntMatrix, "p/q" tokens allowed for RatMatrix.


def format_int_matrix(a: IntMatrix) -> str:
    lines = [f"{a.rows} {a.cols}"]
    lines.extend(" ".join(str(x) for x in a.row(i)) for i in range(a.rows))
    return "\n".join(lines) + "\n"


def _parse_header_and_tokens(text: str):
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty matrix text")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError("first line must be 'rows cols'")
    try:
        rows, cols = int(header[0]), int(header[1])
    except ValueError as exc:
        raise ValueError("first line must be 'rows cols'") from exc
    if len(lines) - 1 != rows:
        raise ValueError(f"expected {rows} rows of entries, got {len(lines) - 1}")
    body = []
    for ln in lines[1:]:
        toks = ln.split()
        if len(toks) != cols:
            raise ValueError(f"expected {cols} entries per row, got {len(toks)}")
        body.append(toks)
    return body


def parse_int_matrix(text: str) -> IntMatrix:
    body = _parse_header_and_tokens(text)
    try:
        return IntMatrix.from_rows([[int(t) for t in row] for row in body])
    except ValueError as exc:
        raise ValueError(f"bad integer matrix: {exc}") from exc


def parse_rat_matrix(text: str) -> RatMatrix:
    body = _parse_header_and_tokens(text)
    try:
        return RatMatrix.from_fractions([[Fraction(t) for t in row] for row in body])
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad rational matrix: {exc}") from exc


def format_rat_matrix(m: RatMatrix) -> str:
    lines = [f"{m.numerator.rows} {m.numerator.cols}"]
    for i in range(m.numerator.rows):
        toks = []
        for j in range(m.numerator.cols):
            f = m.entry(i, j)
            toks.append(str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}")
        lines.append(" ".join(toks))
    return "\n".join(lines) + "\n"
