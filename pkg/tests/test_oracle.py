import pytest

from cslindex.indices import index_fortes
from cslindex.isometry import (
    from_rational_matrix,
    identity_isometry,
    random_corpus,
    reflection,
)
from cslindex.matrices import IntMatrix, RatMatrix, mat_mul
from cslindex.normalform import hnf_lattice_contains
from cslindex.oracle import (
    CapExceeded,
    count_congruence_solutions,
    index_by_counting,
    index_by_hnf,
    intersection_hnf,
)

ROT_2D = from_rational_matrix(
    RatMatrix.make(IntMatrix.from_rows([[3, -4], [4, 3]]), 5)
)
ROT_4D = from_rational_matrix(
    RatMatrix.make(
        IntMatrix.from_rows([[3, -4, 0, 0], [4, 3, 0, 0], [0, 0, 3, -4], [0, 0, 4, 3]]),
        5,
    )
)


class TestCounting:
    def test_identity(self):
        report = index_by_counting(identity_isometry(3))
        assert report.sigma == 1
        assert report.factors == (1, 1)

    def test_planar_rotation(self):
        report = index_by_counting(ROT_2D)
        assert report.sigma == 5
        assert report.factors == (5, 5)  # 5 solutions among 25 residues

    def test_double_rotation(self):
        report = index_by_counting(ROT_4D)
        assert report.sigma == 25
        assert report.factors == (5, 25)

    def test_cap(self):
        with pytest.raises(CapExceeded):
            index_by_counting(ROT_4D, cap=100)

    def test_solution_count_direct(self):
        # brute force over all 25 residue pairs, written out independently
        z = [[3, -4], [4, 3]]
        expected = sum(
            1
            for x in range(5)
            for y in range(5)
            if (3 * x - 4 * y) % 5 == 0 and (4 * x + 3 * y) % 5 == 0
        )
        assert count_congruence_solutions(IntMatrix.from_rows(z), 5) == expected == 5


class TestIntersectionHnf:
    def test_identity(self):
        basis = intersection_hnf(identity_isometry(4))
        assert basis.basis == IntMatrix.identity(4)
        assert basis.index == 1

    def test_reflection(self):
        assert intersection_hnf(reflection((1, 1, 1))).index == 3

    def test_planar_rotation_membership(self):
        y = ROT_2D
        basis = intersection_hnf(y)
        assert basis.index == 5
        for i in range(basis.basis.rows):
            row = IntMatrix.from_rows([list(basis.basis.row(i))])
            # Y^{-1} b integral: q divides every coordinate of Z^T b, i.e. of b Z
            image = mat_mul(row, y.z)
            assert all(x % y.q == 0 for x in image.entries)

    def test_sublattice_saturation(self):
        for y in [ROT_2D, ROT_4D, reflection((3, 2, 1))]:
            basis = intersection_hnf(y)
            for i in range(y.n):
                unit = [y.q if j == i else 0 for j in range(y.n)]
                assert hnf_lattice_contains(basis.basis, unit)


class TestOracleAgreement:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_oracles_and_formula_agree(self, n):
        for y in random_corpus(n, 15, 900 + n):
            hnf_sigma = index_by_hnf(y).sigma
            assert hnf_sigma == index_fortes(y).sigma
            if y.q**y.n <= 10**6:
                assert index_by_counting(y).sigma == hnf_sigma
