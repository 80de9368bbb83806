"""
Tests for exact rational linear algebra
"""
import random
from fractions import Fraction

import pytest
import sympy

from dbs_rank.exceptions import DimensionError
from dbs_rank.linalg import (
    EchelonSpan,
    Orientation,
    RatMatrix,
    RatVector,
    column_sum,
    column_sums,
    dot,
    format_matrix,
    in_span,
    mat_mul,
    mat_pow,
    mat_vec,
    rank,
    row_reduce,
    to_rational,
    transpose,
    vec_mat,
)

FIG5_M = [[0, 0, 0, 1], [1, 0, 0, 1], [1, 1, 1, 0], [0, 1, 0, 0]]


def _random_matrix(rng, rows, cols, low=-3, high=3):
    return RatMatrix.from_rows(
        [[Fraction(rng.randint(low, high), rng.randint(1, 3)) for _ in range(cols)] for _ in range(rows)]
    )


def _to_sympy(m: RatMatrix) -> sympy.Matrix:
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in m.to_rows()])


class TestRationals:
    """Scalar conversion."""

    def test_accepts_int_fraction_and_strings(self):
        assert to_rational(3) == Fraction(3)
        assert to_rational(Fraction(2, 4)) == Fraction(1, 2)
        assert to_rational("-6/4") == Fraction(-3, 2)
        assert to_rational(" 7 ") == Fraction(7)

    @pytest.mark.parametrize("bad", [0.5, True, "1/0", "abc", None])
    def test_rejects_inexact_or_malformed(self, bad):
        with pytest.raises(ValueError):
            to_rational(bad)

    def test_entries_stay_canonical(self):
        m = RatMatrix.from_rows([["2/4", "-3/6"]])
        assert m[0, 0] == Fraction(1, 2)
        assert m[0, 1] == Fraction(-1, 2)
        assert Fraction(0).denominator == 1


class TestMatrixBasics:
    """Construction, shape checks and rendering."""

    def test_wrong_entry_count(self):
        with pytest.raises(DimensionError):
            RatMatrix(2, 2, (1, 2, 3))

    def test_identity_and_zeros(self):
        assert RatMatrix.identity(2).to_rows() == [[1, 0], [0, 1]]
        assert RatMatrix.zeros(1, 3).to_rows() == [[0, 0, 0]]

    def test_format_matrix(self):
        assert format_matrix(RatMatrix.from_rows([[0, 1], [1, 0]])) == "[[0, 1], [1, 0]]"
        assert str(RatMatrix.from_rows([["1/2", -1]])) == "[[1/2, -1]]"

    def test_transpose(self):
        m = RatMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
        assert transpose(m).to_rows() == [[1, 4], [2, 5], [3, 6]]

    def test_mul_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            mat_mul(RatMatrix.zeros(2, 3), RatMatrix.zeros(2, 3))


class TestProducts:
    """Products and powers against sympy."""

    def test_mat_mul_matches_sympy(self):
        rng = random.Random(7)
        for _ in range(30):
            a = _random_matrix(rng, 3, 4)
            b = _random_matrix(rng, 4, 2)
            assert _to_sympy(mat_mul(a, b)) == _to_sympy(a) * _to_sympy(b)

    def test_figure_five_powers(self):
        m = RatMatrix.from_rows(FIG5_M)
        assert mat_pow(m, 2).to_rows() == [[0, 1, 0, 0], [0, 1, 0, 1], [2, 1, 1, 2], [1, 0, 0, 1]]
        assert mat_pow(m, 3).to_rows() == [[1, 0, 0, 1], [1, 1, 0, 1], [2, 3, 1, 3], [0, 1, 0, 1]]

    def test_figure_five_column_sums(self):
        m = RatMatrix.from_rows(FIG5_M)
        assert column_sums(m)[:2] == (2, 2)
        assert column_sums(mat_pow(m, 2))[:2] == (3, 3)
        assert (column_sum(mat_pow(m, 3), 0), column_sum(mat_pow(m, 3), 1)) == (4, 5)

    def test_mat_pow_zero_is_identity(self):
        assert mat_pow(RatMatrix.from_rows(FIG5_M), 0) == RatMatrix.identity(4)

    def test_mat_pow_matches_sympy(self):
        rng = random.Random(11)
        for k in range(6):
            m = _random_matrix(rng, 3, 3)
            assert _to_sympy(mat_pow(m, k)) == _to_sympy(m) ** k

    def test_column_sum_out_of_range(self):
        with pytest.raises(IndexError):
            column_sum(RatMatrix.identity(2), 2)

    def test_vector_products(self):
        m = RatMatrix.from_rows([[1, 2], [3, 4]])
        assert vec_mat(RatVector.row([1, 1]), m) == RatVector.row([4, 6])
        assert mat_vec(m, RatVector.column([1, 1])) == RatVector.column([3, 7])
        assert dot(RatVector.row([1, "1/2"]), RatVector.column([2, 4])) == 4

    def test_vector_orientation_is_checked(self):
        m = RatMatrix.identity(2)
        with pytest.raises(DimensionError):
            vec_mat(RatVector.column([1, 1]), m)
        with pytest.raises(DimensionError):
            mat_vec(m, RatVector.row([1, 1]))
        with pytest.raises(DimensionError):
            dot(RatVector.row([1]), RatVector.row([1, 2]))


class TestRowReduction:
    """Echelon forms, rank and span membership."""

    def test_row_reduce_matches_sympy(self):
        rng = random.Random(3)
        for _ in range(30):
            m = _random_matrix(rng, rng.randint(1, 4), rng.randint(1, 4), low=-2, high=2)
            reduced, r = row_reduce(m)
            expected, pivots = _to_sympy(m).rref()
            assert _to_sympy(reduced) == expected
            assert r == len(pivots) == _to_sympy(m).rank()

    def test_rank_of_singular_matrix(self):
        assert rank(RatMatrix.from_rows([[1, 2], [2, 4]])) == 1
        assert rank(RatMatrix.zeros(3, 3)) == 0

    def test_in_span(self):
        basis = [RatVector.row([1, 0, 1]), RatVector.row([0, 1, 1])]
        assert in_span(basis, RatVector.row([2, 3, 5]))
        assert not in_span(basis, RatVector.row([0, 0, 1]))

    def test_empty_basis_spans_zero_only(self):
        assert in_span([], RatVector.zeros(3))
        assert not in_span([], RatVector.unit(3, 1))

    def test_in_span_rejects_mixed_vectors(self):
        with pytest.raises(DimensionError):
            in_span([RatVector.row([1, 0])], RatVector.row([1, 0, 0]))
        with pytest.raises(DimensionError):
            in_span([RatVector.row([1, 0])], RatVector.column([1, 0]))


class TestEchelonSpan:
    """Incremental span agrees with the rank-based test."""

    def test_agrees_with_in_span(self):
        rng = random.Random(5)
        for _ in range(40):
            span = EchelonSpan(4)
            kept = []
            for _ in range(6):
                v = RatVector.row(rng.randint(-1, 1) for _ in range(4))
                expected_member = in_span(kept, v)
                assert span.contains(v) == expected_member
                added = span.add(v)
                assert added == (not expected_member)
                if added:
                    kept.append(v)
            assert len(span) == len(kept)

    def test_rejects_wrong_length(self):
        with pytest.raises(DimensionError):
            EchelonSpan(3).add(RatVector.row([1, 2]))

    def test_orientation_default_is_row(self):
        assert RatVector.zeros(2).orientation is Orientation.ROW


class TestAlgebraicLaws:
    """Field, product and elimination laws on random small inputs."""

    def test_field_laws(self):
        rng = random.Random(11)

        def rational():
            return Fraction(rng.randint(-9, 9), rng.randint(1, 9))

        for _ in range(500):
            a, b, c = rational(), rational(), rational()
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a + b == b + a and a * b == b * a
            if a:
                assert a / a == 1
                assert a * (1 / a) == 1

    def test_row_reduce_is_idempotent(self):
        rng = random.Random(12)
        for _ in range(50):
            rows, cols = rng.randint(1, 5), rng.randint(1, 5)
            m = _random_matrix(rng, rows, cols, low=-2, high=2)
            reduced, r = row_reduce(m)
            again, r_again = row_reduce(reduced)
            assert again == reduced
            assert r == r_again <= min(rows, cols)

    def test_mat_mul_is_associative(self):
        rng = random.Random(13)
        for _ in range(50):
            n, k, p, q = (rng.randint(1, 5) for _ in range(4))
            a, b, c = (
                RatMatrix.from_rows([[rng.randint(0, 1) for _ in range(cols)] for _ in range(rows)])
                for rows, cols in ((n, k), (k, p), (p, q))
            )
            assert mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c))

    def test_powers_of_zero_one_matrices_are_integral(self):
        rng = random.Random(14)
        for _ in range(30):
            n = rng.randint(1, 5)
            m = RatMatrix.from_rows([[rng.randint(0, 1) for _ in range(n)] for _ in range(n)])
            for k in range(6):
                power = mat_pow(m, k)
                assert power.is_integral()
                assert all(x >= 0 for row in power.to_rows() for x in row)


JOINT_BLOCK_A = [
    [0, 0, 0, 1, 1, 1, 1],
    [1, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0],
]

JOINT_BLOCK_H = [
    [0, 0, 0, 1, 1, 1, 1],
    [1, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0],
]

JOINT_BASIS = [
    [1] * 7 + [-1] * 7,
    [2, 2, 2, 1, 1, 1, 1, -2, -1, -3, -1, -1, -1, -1],
    [4, 2, 2, 2, 2, 2, 2, -4, -1, -3, -2, -2, -2, -2],
    [4, 4, 4, 4, 4, 4, 4, -4, -2, -6, -4, -4, -4, -4],
]


def _block_diagonal(top, bottom):
    n, m = len(top), len(bottom)
    return RatMatrix.from_rows([row + [0] * m for row in top] + [[0] * n + row for row in bottom])


class TestDifferenceBasis:
    """The four basis vectors of the a-versus-h difference automaton."""

    @pytest.fixture(scope="class")
    def basis(self):
        return [RatVector.row(b) for b in JOINT_BASIS]

    @pytest.fixture(scope="class")
    def step(self):
        return _block_diagonal(JOINT_BLOCK_A, JOINT_BLOCK_H)

    def test_vectors_are_independent(self, basis):
        stacked = RatMatrix.from_rows([b.entries for b in basis])
        assert rank(stacked) == 4
        as_sympy = _to_sympy(stacked)
        assert (as_sympy * as_sympy.T).det() != 0
        assert as_sympy.rank() == 4

    def test_vectors_follow_from_the_initial_row(self, basis, step):
        v = basis[0]
        for expected in basis[1:]:
            v = vec_mat(v, step)
            assert v == expected

    def test_next_word_stays_in_span(self, basis, step):
        fourth_power = vec_mat(RatVector.row(JOINT_BASIS[0]), mat_pow(step, 4))
        assert fourth_power == vec_mat(basis[3], step)
        assert in_span(basis, fourth_power)
        assert not in_span(basis[:3], basis[3])

    def test_vectors_annihilate_final_column(self, basis):
        eta = RatVector.column([1] + [0] * 6 + [1] + [0] * 6)
        assert dot(basis[0], eta) == 0
        assert dot(basis[1], eta) == 0
        assert all(dot(b, eta) == 0 for b in basis)
