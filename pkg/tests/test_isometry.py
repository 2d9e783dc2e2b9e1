import math
from itertools import product

import pytest

from cslindex.isometry import (
    NotOrthogonal,
    ReflectionAxis,
    compose,
    from_rational_matrix,
    identity_isometry,
    random_corpus,
    random_isometry,
    reflection,
    transpose_inverse,
)
from cslindex.matrices import IntMatrix, RatMatrix, gcd_entries, mat_mul


def canonical_primitive_axes(n, max_norm):
    """Non-increasing nonnegative primitive tuples with norm <= max_norm."""

    def rec(remaining, slots, cap, prefix):
        if slots == 0:
            yield prefix
            return
        for a in range(min(cap, math.isqrt(remaining)), -1, -1):
            yield from rec(remaining - a * a, slots - 1, a, prefix + (a,))

    for tup in rec(max_norm, n, math.isqrt(max_norm), ()):
        if any(tup) and math.gcd(*tup) == 1:
            yield tup


class TestFromRationalMatrix:
    def test_identity(self):
        y = from_rational_matrix(RatMatrix.make(IntMatrix.identity(3), 1))
        assert y.q == 1 and y.z == IntMatrix.identity(3)

    def test_block_rotation(self):
        z = IntMatrix.from_rows([[3, -4, 0], [4, 3, 0], [0, 0, 5]])
        y = from_rational_matrix(RatMatrix.make(z, 5))
        assert y.q == 5 and y.z == z

    def test_canonicalizes_scaled_input(self):
        scaled = RatMatrix.from_fractions([["6/10", "-8/10"], ["8/10", "6/10"]])
        y = from_rational_matrix(scaled)
        assert y.q == 5
        assert y.z == IntMatrix.from_rows([[3, -4], [4, 3]])

    def test_not_orthogonal(self):
        with pytest.raises(NotOrthogonal) as exc:
            from_rational_matrix(RatMatrix.make(IntMatrix.from_rows([[1, 1], [0, 1]]), 1))
        assert "inner product" in str(exc.value)

    def test_non_square(self):
        with pytest.raises(ValueError):
            from_rational_matrix(RatMatrix.make(IntMatrix.from_rows([[1, 0]]), 1))


class TestReflection:
    def test_signed_permutation_case(self):
        r = reflection((1, 1, 0))
        assert r.q == 1
        assert r.z == IntMatrix.from_rows([[0, -1, 0], [-1, 0, 0], [0, 0, 1]])

    def test_odd_norm(self):
        r = reflection((1, 1, 1))
        assert r.q == 3
        assert r.z == IntMatrix.from_rows([[1, -2, -2], [-2, 1, -2], [-2, -2, 1]])

    def test_even_norm_halved(self):
        r = reflection((1, 1, 1, 1))
        assert r.q == 2
        assert r.z == IntMatrix.from_rows(
            [[1, -1, -1, -1], [-1, 1, -1, -1], [-1, -1, 1, -1], [-1, -1, -1, 1]]
        )

    def test_zero_vector(self):
        with pytest.raises(ValueError):
            reflection((0, 0, 0))

    def test_scale_invariance(self):
        for c in (2, -3, 7):
            assert reflection((3 * c, 2 * c, c)) == reflection((3, 2, 1))

    def test_involution(self):
        for v in [(1, 1, 1), (3, 2, 1), (1, 2, 0, 4)]:
            r = reflection(v)
            assert compose(r, r) == identity_isometry(r.n)

    def test_fixes_orthogonal_hyperplane(self):
        v = (1, 2, 3)
        r = reflection(v)
        for w in [(2, -1, 0), (3, 0, -1), (0, 3, -2)]:
            assert sum(a * b for a, b in zip(v, w)) == 0
            img = mat_mul(r.z, IntMatrix.from_rows([[x] for x in w]))
            assert img == IntMatrix.from_rows([[r.q * x] for x in w])

    def test_entry_gcd_dichotomy_exhaustive(self):
        # gcd(v^T v I - 2 v v^T) is 1 for odd norms, 2 for even norms;
        # canonical axes up to signed permutation cover all primitive v
        for n in range(2, 6):
            for coords in canonical_primitive_axes(n, 50):
                w = sum(c * c for c in coords)
                t = IntMatrix.from_rows(
                    [
                        [(w if i == j else 0) - 2 * coords[i] * coords[j] for j in range(n)]
                        for i in range(n)
                    ]
                )
                assert gcd_entries(t) == (2 if w % 2 == 0 else 1)

    def test_signed_permutations_give_same_q(self):
        base = (3, 2, 1)
        r0 = reflection(base)
        for signs in product([1, -1], repeat=3):
            for perm in [(0, 1, 2), (2, 0, 1), (1, 2, 0)]:
                v = tuple(signs[i] * base[perm[i]] for i in range(3))
                assert reflection(v).q == r0.q


class TestReflectionAxis:
    def test_normalization(self):
        axis = ReflectionAxis.from_coords((-2, 4, -6))
        assert axis.coords == (1, -2, 3)

    def test_parity(self):
        assert ReflectionAxis.from_coords((1, 1, 1)).parity == "odd"
        assert ReflectionAxis.from_coords((1, 1, 1, 1)).parity == "even"

    def test_non_primitive_direct_construction_rejected(self):
        with pytest.raises(ValueError):
            ReflectionAxis((2, 4))


class TestCompose:
    def test_coprime_pair_denominator(self):
        c = compose(reflection((1, 1, 1)), reflection((1, 2, 0)))
        assert c.q == 15

    def test_inverse(self):
        y = random_isometry(4, 3, 4, 99)
        assert compose(y, transpose_inverse(y)) == identity_isometry(4)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            compose(identity_isometry(2), identity_isometry(3))

    def test_associative_on_samples(self):
        a, b, c = (random_isometry(3, 2, 4, s) for s in (1, 2, 3))
        assert compose(compose(a, b), c) == compose(a, compose(b, c))

    def test_denominator_divides_product(self):
        for s in range(10):
            a = random_isometry(3, 2, 4, 100 + s)
            b = random_isometry(3, 2, 4, 200 + s)
            assert (a.q * b.q) % compose(a, b).q == 0


class TestTransposeInverse:
    def test_identity(self):
        assert transpose_inverse(identity_isometry(3)) == identity_isometry(3)

    def test_transpose(self):
        z = IntMatrix.from_rows([[3, -4], [4, 3]])
        y = from_rational_matrix(RatMatrix.make(z, 5))
        assert transpose_inverse(y).z == IntMatrix.from_rows([[3, 4], [-4, 3]])

    def test_involution_and_antihomomorphism(self):
        a = random_isometry(4, 2, 3, 5)
        b = random_isometry(4, 3, 3, 6)
        assert transpose_inverse(transpose_inverse(a)) == a
        assert transpose_inverse(compose(a, b)) == compose(
            transpose_inverse(b), transpose_inverse(a)
        )


class TestRandomIsometry:
    def test_zero_reflections_is_identity(self):
        assert random_isometry(4, 0, 4, 42) == identity_isometry(4)

    def test_deterministic(self):
        assert random_isometry(5, 3, 4, 1234) == random_isometry(5, 3, 4, 1234)
        assert random_corpus(3, 20, 7) == random_corpus(3, 20, 7)

    def test_every_output_validates(self):
        # construction re-validates; round-trip through the rational form too
        for s in range(25):
            y = random_isometry(4, 3, 4, s)
            assert from_rational_matrix(y.as_rational()) == y

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            random_isometry(1, 2, 4, 0)
        with pytest.raises(ValueError):
            random_isometry(3, -1, 4, 0)
