from __future__ import annotations

import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tnncomb.errors import DomainError
from tnncomb.exact_core import Matrix, minor
from tnncomb.polynomial import Poly, format_poly, from_roots, parse_poly
from tnncomb.realroots import (
    certify_real_distinct,
    hankel_matrix,
    normalize,
    poly_gcd,
    power_sums_from_coeffs,
    random_real_rooted,
    real_root_count,
    squarefree_parts,
    sturm_real_root_count,
    toeplitz_matrix,
    toeplitz_refute,
)
from tnncomb.symfunc import p

betas_strategy = st.lists(
    st.fractions(min_value=F(1, 8), max_value=9, max_denominator=8), min_size=1, max_size=5, unique=True
)


# --- parsing ---------------------------------------------------------------------------


def test_parse_both_formats():
    a = parse_poly("1 + 6 z + 5 z^2 + 1 z^3")
    assert a == Poly([1, 6, 5, 1])
    assert parse_poly("1,6,5,1") == a
    assert parse_poly("1+6z+11z^2+6z^3") == from_roots([1, 2, 3])
    assert parse_poly(format_poly(a)) == a


def test_normalize():
    assert normalize(Poly([2, 4])) == Poly([1, 2])
    with pytest.raises(DomainError):
        normalize(Poly([0, 1]))


# --- power sums and Hankel ------------------------------------------------------------


def test_power_sums_of_known_roots():
    assert power_sums_from_coeffs(from_roots([1, 2, 3]), 3) == [3, 6, 14, 36]
    assert power_sums_from_coeffs(Poly([1, 1, 1]), 2) == [2, 1, -1]


@settings(max_examples=50, deadline=None)
@given(betas_strategy)
def test_power_sums_match_roots(betas):
    a = from_roots(betas)
    ps = power_sums_from_coeffs(a, 6)
    assert ps == [sum(b**k for b in betas) for k in range(7)]


def test_power_sums_through_p4_in_e_basis():
    # p_k written in e, with e_i evaluated at the coefficients a_i.
    rng = random.Random(5)
    for _ in range(20):
        a, betas = random_real_rooted(rng, rng.randint(1, 4))
        for k in range(1, 5):
            pe = p(k).to("e")
            val = F(0)
            for lam, c in pe.items():
                term = c
                for part in lam:
                    term *= a[part]
                val += term
            assert val == power_sums_from_coeffs(a, k)[k] == sum(b**k for b in betas)


def test_hankel_examples():
    assert hankel_matrix(from_roots([1, 2, 3])) == Matrix([[3, 6, 14], [6, 14, 36], [14, 36, 98]])
    assert hankel_matrix(Poly([1, 1, 1])) == Matrix([[2, 1], [1, -1]])
    assert hankel_matrix(Poly([1, 2, 1])) == Matrix([[2, 2], [2, 2]])


@settings(max_examples=40, deadline=None)
@given(st.lists(st.fractions(min_value=F(1, 4), max_value=5, max_denominator=4), min_size=1, max_size=4))
def test_hankel_is_vandermonde_gram(betas):
    V = Matrix([[b**i for b in betas] for i in range(len(betas))])
    assert hankel_matrix(from_roots(betas)) == V @ V.T


# --- certification --------------------------------------------------------------------


def test_certify_examples():
    assert certify_real_distinct(from_roots([1, 2, 3]))
    assert certify_real_distinct(Poly([1, 6, 5, 1]))
    bad = certify_real_distinct(Poly([1, 1, 1]))
    assert not bad and bad.witness == ((2,), (2,), -1)
    rep = certify_real_distinct(Poly([1, 2, 1]))
    assert not rep and rep.witness[2] == 0


def test_certify_rejects_nonpositive_coefficients():
    with pytest.raises(DomainError):
        certify_real_distinct(Poly([1, -1]))
    with pytest.raises(DomainError):
        certify_real_distinct(Poly([1, 0, 1]))


def test_certify_random_real_rooted():
    rng = random.Random(2024)
    for _ in range(100):
        n = rng.randint(1, 5)
        a, _ = random_real_rooted(rng, n)
        assert certify_real_distinct(a)
        assert sturm_real_root_count(a) == n


def test_never_certifies_polynomials_with_complex_roots():
    rng = random.Random(99)
    found = 0
    while found < 100:
        n = rng.randint(2, 5)
        a = Poly([1] + [rng.randint(1, 6) for _ in range(n)])
        if sturm_real_root_count(a) >= n:
            continue
        found += 1
        assert not certify_real_distinct(a)
        r = toeplitz_refute(a, n + 3)
        if r:
            I, J, v = r.witness
            assert v < 0 and minor(toeplitz_matrix(a, n + 3), I, J) == v


# --- Toeplitz --------------------------------------------------------------------------


def test_toeplitz_matrix_shape():
    T = toeplitz_matrix(Poly([1, 1, 1]), 4)
    assert T == Matrix([[1, 1, 1, 0], [0, 1, 1, 1], [0, 0, 1, 1], [0, 0, 0, 1]])


def test_toeplitz_examples():
    r = toeplitz_refute(Poly([1, 1, 1]), 4)
    assert r and r.witness == ((1, 2, 3), (2, 3, 4), -1)
    assert not toeplitz_refute(Poly([1, 6, 5, 1]), 6)
    for m in (1, 3, 6):
        assert not toeplitz_refute(Poly([1, 1]), m)


def test_toeplitz_needs_enough_rows():
    with pytest.raises(DomainError):
        toeplitz_refute(Poly([1, 6, 5, 1]), 2)


def test_toeplitz_never_refutes_real_rooted():
    rng = random.Random(8)
    for _ in range(15):
        a, _ = random_real_rooted(rng, rng.randint(1, 3), max_num=4, max_den=2)
        assert not toeplitz_refute(a, a.degree + 2)


# --- Sturm oracle and multiplicities ----------------------------------------------------


def test_sturm_examples():
    assert sturm_real_root_count(Poly([1, 6, 5, 1])) == 3
    assert sturm_real_root_count(Poly([1, 1, 1])) == 0
    assert sturm_real_root_count(Poly([1, 2, 1])) == 1
    assert sturm_real_root_count(Poly([5])) == 0
    with pytest.raises(DomainError):
        sturm_real_root_count(Poly())


@settings(max_examples=50, deadline=None)
@given(
    st.lists(st.fractions(min_value=-6, max_value=6, max_denominator=3), min_size=1, max_size=6),
    st.integers(0, 2),
)
def test_root_counts_on_products(roots, quad):
    # (z - r) factors times copies of z^2 + 1, which has no real root.
    a = Poly([1])
    for r in roots:
        a = a * Poly([-r, 1])
    for _ in range(quad):
        a = a * Poly([1, 0, 1])
    assert real_root_count(a) == len(roots)
    assert sturm_real_root_count(a) == len(set(roots))
    assert real_root_count(a, multiplicity=False) == len(set(roots))


def test_squarefree_parts_and_gcd():
    a = from_roots([1, 1, 2, 3, 3, 3])
    parts = squarefree_parts(a)
    assert [f.degree for f in parts] == [1, 1, 1]
    assert real_root_count(a) == 6
    g = poly_gcd(Poly([-1, 0, 1]), Poly([1, 1]))
    assert g == Poly([1, 1])
    assert poly_gcd(Poly(), Poly()).is_zero()
