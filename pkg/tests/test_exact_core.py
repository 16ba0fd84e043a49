from __future__ import annotations

import random
from fractions import Fraction as F
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tnncomb.errors import DomainError, GuardExceeded, NotTotallyNonnegativeError, SingularMatrixError
from tnncomb.exact_core import (
    Matrix,
    all_minors,
    char_poly,
    exterior_power,
    format_matrix,
    is_totally_nonnegative,
    is_totally_positive,
    minor,
    neville_factorize,
    number_of_minors,
    parse_matrix,
)
from tnncomb.planar_network import random_tnn_matrix
from tnncomb.polynomial import Poly
from tnncomb.rational import format_rat, parse_rat, to_rat
from tnncomb.realroots import sturm_real_root_count

M21 = Matrix([[5, 6, 3, 0], [4, 7, 4, 0], [1, 4, 4, 2], [0, 1, 2, 3]])
A22 = Matrix([[1, 0, 0, 0], [1, 1, 0, 0], [1, 1, 1, 0], [1, 1, 1, 1]])


def perm_det(rows: list[list[F]]) -> F:
    """Leibniz formula; independent of the elimination code."""
    n = len(rows)
    total = F(0)
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = F(1)
        for i, j in enumerate(perm):
            term *= rows[i][j]
        total += -term if inv % 2 else term
    return total


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def square_matrices(max_n: int = 4):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.lists(rationals, min_size=n, max_size=n), min_size=n, max_size=n)
    )


# --- rationals -------------------------------------------------------------------


def test_rational_text_round_trip():
    assert parse_rat("6/4") == F(3, 2)
    assert format_rat(F(3, 2)) == "3/2"
    assert format_rat(F(4, 2)) == "2"
    assert format_rat(F(-1, 3)) == "-1/3"


def test_rational_rejects_floats_and_garbage():
    with pytest.raises(TypeError):
        to_rat(0.5)
    with pytest.raises(TypeError):
        to_rat(True)
    with pytest.raises(ValueError):
        parse_rat("1/0")
    with pytest.raises(ValueError):
        parse_rat("abc")


# --- minors -----------------------------------------------------------------------


def test_minor_examples():
    assert minor(M21, (1, 2), (1, 3)) == 8
    assert minor(M21, (), ()) == 1
    assert minor(Matrix.identity(4), (2, 3), (2, 3)) == 1


def test_minor_errors():
    with pytest.raises(DomainError):
        minor(M21, (1, 2), (1,))
    with pytest.raises(DomainError):
        minor(M21, (1, 5), (1, 2))
    with pytest.raises(DomainError):
        minor(M21, (2, 1), (1, 2))


@settings(max_examples=60, deadline=None)
@given(square_matrices())
def test_minor_matches_permutation_sum(rows):
    M = Matrix(rows)
    n = M.nrows
    for k in range(1, n + 1):
        for I in combinations(range(1, n + 1), k):
            for J in combinations(range(1, n + 1), k):
                sub = [[rows[i - 1][j - 1] for j in J] for i in I]
                assert minor(M, I, J) == perm_det(sub)


def test_number_of_minors_4x4():
    assert number_of_minors(4, 4) == 70
    assert len(all_minors(M21)) == 70


def test_all_minors_guard():
    with pytest.raises(GuardExceeded):
        all_minors(Matrix.identity(9))
    assert len(all_minors(Matrix.identity(9), size_limit=None)) == number_of_minors(9, 9)


# --- positivity ------------------------------------------------------------------


def test_tnn_examples():
    assert is_totally_nonnegative(M21)
    assert is_totally_nonnegative(A22)
    assert is_totally_nonnegative(A22 @ A22)
    check = is_totally_nonnegative(Matrix([[0, 1], [1, 0]]))
    assert not check
    assert check.witness == ((1, 2), (1, 2), -1)


def test_tp_examples():
    check = is_totally_positive(M21)
    assert not check
    assert check.witness[2] == 0
    assert is_totally_positive(Matrix([[5]]))
    V = Matrix([[x**i for x in (1, 2, 3, 4)] for i in range(4)])
    assert is_totally_positive(V)


def test_tnn_agrees_with_brute_force_sign_scan():
    rng = random.Random(3)
    for _ in range(50):
        n = rng.randint(1, 3)
        M = Matrix([[rng.randint(-1, 3) for _ in range(n)] for _ in range(n)])
        rows = [list(r) for r in M.rows()]
        brute = all(
            perm_det([[rows[i - 1][j - 1] for j in J] for i in I]) >= 0
            for k in range(1, n + 1)
            for I in combinations(range(1, n + 1), k)
            for J in combinations(range(1, n + 1), k)
        )
        assert bool(is_totally_nonnegative(M)) == brute


# --- exterior powers --------------------------------------------------------------


def test_exterior_power_edges():
    assert exterior_power(M21, 1) == M21
    assert exterior_power(M21, 4) == Matrix([[M21.det()]])
    assert exterior_power(M21, 2).entry(1, 2) == 8  # rows {1,2}, cols {1,3}
    with pytest.raises(DomainError):
        exterior_power(M21, 0)
    with pytest.raises(DomainError):
        exterior_power(M21, 5)


@settings(max_examples=30, deadline=None)
@given(square_matrices(4), st.data())
def test_exterior_power_entries_are_minors(rows, data):
    M = Matrix(rows)
    n = M.nrows
    k = data.draw(st.integers(1, n))
    E = exterior_power(M, k)
    subsets = list(combinations(range(1, n + 1), k))
    for a, I in enumerate(subsets):
        for b, J in enumerate(subsets):
            assert E[a, b] == minor(M, I, J)


def test_exterior_power_is_multiplicative():
    rng = random.Random(11)
    for _ in range(10):
        A, B = random_tnn_matrix(rng, 3), random_tnn_matrix(rng, 3)
        for k in (1, 2, 3):
            assert exterior_power(A @ B, k) == exterior_power(A, k) @ exterior_power(B, k)


# --- Neville factorization -------------------------------------------------------


def test_factor_identity_is_empty():
    fac = neville_factorize(Matrix.identity(4))
    assert fac.lower == () and fac.upper == ()
    assert fac.diagonal == (1, 1, 1, 1)


def test_factor_examples_round_trip():
    for M in (A22, M21, A22 @ A22):
        fac = neville_factorize(M)
        assert fac.product() == M
        assert all(f.c > 0 for f in fac.lower + fac.upper)
        assert all(d > 0 for d in fac.diagonal)


def test_factor_kinds_have_documented_shape():
    fac = neville_factorize(M21)
    for f in fac.lower:
        M = f.matrix(4)
        assert M == Matrix.identity(4) + Matrix.elementary(4, f.j + 1, f.j, f.c) - Matrix.identity(4)
        assert M.entry(f.j + 1, f.j) == f.c
    for f in fac.upper:
        assert f.matrix(4).entry(f.j, f.j + 1) == f.c


def test_factor_rejects_singular_and_non_tnn():
    with pytest.raises(SingularMatrixError):
        neville_factorize(Matrix([[1, 1], [1, 1]]))
    with pytest.raises(NotTotallyNonnegativeError):
        neville_factorize(Matrix([[1, 2], [3, 1]]))
    with pytest.raises(NotTotallyNonnegativeError):
        neville_factorize(Matrix([[0, 1], [1, 0]]))
    with pytest.raises(DomainError):
        neville_factorize(Matrix([[1, 2, 3]]))


def test_factor_random_tnn_round_trip():
    rng = random.Random(21)
    for _ in range(60):
        M = random_tnn_matrix(rng, rng.randint(1, 5))
        fac = neville_factorize(M)
        assert fac.product() == M
        assert fac.lower_product() @ Matrix.diagonal(fac.diagonal) @ fac.upper_product() == M
        assert all(f.c >= 0 for f in fac.lower + fac.upper)


# --- characteristic polynomial ---------------------------------------------------


def test_char_poly_examples():
    assert char_poly(Matrix.identity(2)) == Poly([1, -2, 1])
    assert char_poly(Matrix([[0, 1], [0, 0]])) == Poly([0, 0, 1])
    P = char_poly(M21)
    assert P == Poly([17, -95, 84, -19, 1])
    assert sturm_real_root_count(P) == 4


@settings(max_examples=40, deadline=None)
@given(square_matrices(4))
def test_char_poly_at_points_is_det(rows):
    M = Matrix(rows)
    P = char_poly(M)
    n = M.nrows
    for z in (F(0), F(1), F(-2), F(1, 3)):
        assert P(z) == (Matrix.identity(n) * z - M).det()


# --- text format ----------------------------------------------------------------------


def test_matrix_text_round_trip():
    text = "2 3\n1 -1/2 0\n3/4 5 -6\n"
    M = parse_matrix(text)
    assert M.shape == (2, 3)
    assert M.entry(1, 2) == F(-1, 2)
    assert format_matrix(M) == text
    assert parse_matrix(format_matrix(M21)) == M21


@pytest.mark.parametrize("bad", ["", "2", "2 2\n1 2 3", "x y\n1", "1 1\n1/0"])
def test_matrix_text_errors(bad):
    with pytest.raises(ValueError):
        parse_matrix(bad)


def test_matrix_algebra():
    A = Matrix([[1, 2], [3, 4]])
    assert A.inverse() @ A == Matrix.identity(2)
    assert A**0 == Matrix.identity(2)
    assert A**2 == A @ A
    assert A.T.T == A
    assert (A - A) == Matrix.zeros(2, 2)
    with pytest.raises(DomainError):
        Matrix([[1, 1], [1, 1]]).inverse()
