"""Certifying and refuting real-rootedness of positive-coefficient polynomials.

A polynomial is handled in the normalized form ``a(z) = 1 + a_1 z + ... + a_n z^n``
and thought of as ``prod (1 + beta_i z)``; the ``beta_i`` are never computed.
Their power sums follow from the coefficients by Newton's identities, and

* the Hankel matrix of those power sums is totally positive exactly when
  all roots are real and distinct (certificate), while
* a negative minor in a finite corner of the Toeplitz matrix of the
  coefficients proves some root is not real (refutation only).

:func:`sturm_real_root_count` is an independent oracle for both.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DomainError
from .exact_core import DEFAULT_SIZE_LIMIT, IndexSet, Matrix, all_minors
from .polynomial import Poly, format_poly, from_roots, parse_poly

__all__ = [
    "Poly",
    "parse_poly",
    "format_poly",
    "from_roots",
    "normalize",
    "power_sums_from_coeffs",
    "hankel_matrix",
    "toeplitz_matrix",
    "certify_real_distinct",
    "toeplitz_refute",
    "sturm_sequence",
    "sturm_real_root_count",
    "real_root_count",
    "squarefree_parts",
    "poly_gcd",
    "Certificate",
    "Refutation",
]


def normalize(a: Poly) -> Poly:
    """Scale so the constant term is 1."""
    if a.is_zero() or a[0] == 0:
        raise DomainError("normalized form needs a nonzero constant term")
    return Poly(c / a[0] for c in a.coeffs)


def _require_positive(a: Poly) -> Poly:
    a = normalize(a)
    if a.degree < 1:
        raise DomainError("polynomial must have degree >= 1")
    if any(c <= 0 for c in a.coeffs):
        raise DomainError(f"all coefficients must be positive: {format_poly(a)}")
    return a


def power_sums_from_coeffs(a: Poly, upto: int) -> list[Fraction]:
    """``[p_0, p_1, ..., p_upto]`` where ``p_k = sum beta_i^k`` and ``p_0 = n``.

    Newton's identities with ``e_i = a_i`` (zero beyond the degree):
    ``p_k = sum_{i=1}^{k-1} (-1)^(i-1) e_i p_{k-i} + (-1)^(k-1) k e_k``.
    """
    a = normalize(a)
    if upto < 1:
        raise DomainError("upto must be >= 1")
    n = a.degree
    e = [a[i] if i <= n else Fraction(0) for i in range(upto + 1)]
    p = [Fraction(n)]
    for k in range(1, upto + 1):
        acc = Fraction((-1) ** (k - 1) * k) * e[k]
        for i in range(1, k):
            if e[i]:
                acc += (-1) ** (i - 1) * e[i] * p[k - i]
        p.append(acc)
    return p


def hankel_matrix(a: Poly) -> Matrix:
    """``n x n`` matrix with entry ``(i, j) = p_{i+j-2}`` (1-based)."""
    a = normalize(a)
    n = a.degree
    if n < 1:
        raise DomainError("Hankel matrix needs degree >= 1")
    p = power_sums_from_coeffs(a, max(2 * n - 2, 1))
    return Matrix([[p[i + j] for j in range(n)] for i in range(n)])


def toeplitz_matrix(a: Poly, m: int) -> Matrix:
    """Leading ``m x m`` corner of the upper triangular Toeplitz matrix ``[a_{j-i}]``."""
    a = normalize(a)
    return Matrix([[a[j - i] if j >= i else 0 for j in range(m)] for i in range(m)])


@dataclass(frozen=True)
class Certificate:
    """Verdict of :func:`certify_real_distinct`.

    When not certified, ``witness`` is the first non-positive Hankel minor
    ``(I, J, value)``.
    """

    certified: bool
    hankel: Matrix
    witness: tuple[IndexSet, IndexSet, Fraction] | None = None

    def __bool__(self) -> bool:
        return self.certified


def certify_real_distinct(a: Poly, size_limit: int | None = DEFAULT_SIZE_LIMIT) -> Certificate:
    """Certify real, distinct roots via total positivity of the Hankel matrix.

    Repeated real roots give ``certified=False`` too: the Hankel matrix is then
    singular. Pair with :func:`sturm_real_root_count` to tell the cases apart.
    """
    a = _require_positive(a)
    P = hankel_matrix(a)
    for (I, J), v in all_minors(P, size_limit).items():
        if I and v <= 0:
            return Certificate(False, P, (I, J, v))
    return Certificate(True, P)


@dataclass(frozen=True)
class Refutation:
    """Verdict of :func:`toeplitz_refute`.

    ``refuted`` means a negative Toeplitz minor was found, so some root is
    not real. ``refuted=False`` is inconclusive, never a certificate.
    """

    refuted: bool
    m: int
    witness: tuple[IndexSet, IndexSet, Fraction] | None = None

    def __bool__(self) -> bool:
        return self.refuted


def toeplitz_refute(a: Poly, m: int, size_limit: int | None = 12) -> Refutation:
    """Search the ``m x m`` Toeplitz corner for a negative minor."""
    a = _require_positive(a)
    if m < a.degree:
        raise DomainError(f"truncation m = {m} is smaller than the degree {a.degree}")
    T = toeplitz_matrix(a, m)
    for (I, J), v in all_minors(T, size_limit).items():
        if v < 0:
            return Refutation(True, m, (I, J, v))
    return Refutation(False, m)


def sturm_sequence(a: Poly) -> list[Poly]:
    """``a, a', -rem(...)`` with each term scaled to a primitive integer polynomial."""
    if a.is_zero():
        raise DomainError("Sturm sequence of the zero polynomial")
    seq = [a.primitive()]
    d = a.derivative()
    if d.is_zero():
        return seq
    seq.append(d.primitive())
    while True:
        r = -(seq[-2] % seq[-1])
        if r.is_zero():
            return seq
        seq.append(r.primitive())


def _sign_changes(signs: Sequence[int]) -> int:
    nz = [s for s in signs if s]
    return sum(1 for x, y in zip(nz, nz[1:]) if x != y)


def _sign_at_infinity(p: Poly, negative: bool) -> int:
    s = 1 if p.leading > 0 else -1
    if negative and p.degree % 2:
        s = -s
    return s


def sturm_real_root_count(a: Poly) -> int:
    """Number of distinct real roots on the whole real line."""
    seq = sturm_sequence(a)
    at_minus = _sign_changes([_sign_at_infinity(p, True) for p in seq])
    at_plus = _sign_changes([_sign_at_infinity(p, False) for p in seq])
    return at_minus - at_plus


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor (zero only when both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a if a.is_zero() else a.monic()


def squarefree_parts(a: Poly) -> list[Poly]:
    """Yun's decomposition ``a = c * f_1 * f_2^2 * f_3^3 ...``; returns ``[f_1, f_2, ...]``."""
    if a.is_zero():
        raise DomainError("square-free decomposition of the zero polynomial")
    parts: list[Poly] = []
    b = a.derivative()
    g = poly_gcd(a, b)
    c, d = a // g, b // g - (a // g).derivative()
    while c.degree > 0:
        f = poly_gcd(c, d)
        parts.append(f)
        c = c // f
        d = d // f - c.derivative()
    return parts


def real_root_count(a: Poly, multiplicity: bool = True) -> int:
    """Real roots counted with multiplicity, by a Sturm count on each square-free part."""
    if not multiplicity:
        return sturm_real_root_count(a)
    total = 0
    for k, f in enumerate(squarefree_parts(a), start=1):
        if f.degree > 0:
            total += k * sturm_real_root_count(f)
    return total


def random_real_rooted(rng, n: int, max_num: int = 9, max_den: int = 4) -> tuple[Poly, list[Fraction]]:
    """``prod (1 + beta_i z)`` for ``n`` distinct random positive rationals."""
    betas: list[Fraction] = []
    while len(betas) < n:
        b = Fraction(rng.randint(1, max_num), rng.randint(1, max_den))
        if b not in betas:
            betas.append(b)
    return from_roots(betas), betas
