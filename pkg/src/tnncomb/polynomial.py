"""Dense univariate polynomials with exact rational coefficients."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence

from .rational import format_rat, parse_rat, to_rat


class Poly:
    """Polynomial stored constant term first; trailing zeros are stripped.

    >>> Poly([1, 6, 5, 1]).degree
    3
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [to_rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    def __call__(self, z) -> Fraction:
        z = to_rat(z)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * z + c
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == Poly([other])._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"Poly({[format_rat(c) for c in self._coeffs]})"

    def __str__(self) -> str:
        return format_poly(self)

    def __neg__(self) -> Poly:
        return Poly(-c for c in self._coeffs)

    def __add__(self, other) -> Poly:
        other = _as_poly(other)
        n = max(len(self._coeffs), len(other._coeffs))
        return Poly(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __sub__(self, other) -> Poly:
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> Poly:
        return _as_poly(other) - self

    def __mul__(self, other) -> Poly:
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a:
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        other = _as_poly(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._coeffs)
        dq = len(rem) - len(other._coeffs)
        if dq < 0:
            return Poly(), Poly(rem)
        quot = [Fraction(0)] * (dq + 1)
        lead = other.leading
        for k in range(dq, -1, -1):
            q = rem[k + other.degree] / lead
            quot[k] = q
            if q:
                for i, b in enumerate(other._coeffs):
                    rem[k + i] -= q * b
        return Poly(quot), Poly(rem[: other.degree])

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def derivative(self) -> Poly:
        return Poly(k * c for k, c in enumerate(self._coeffs) if k)

    def monic(self) -> Poly:
        return Poly(c / self.leading for c in self._coeffs)

    def primitive(self) -> Poly:
        """Positive rational multiple with coprime integer coefficients.

        Signs are preserved, which is all a Sturm sequence needs.
        """
        if self.is_zero():
            return self
        from math import gcd, lcm

        den = 1
        for c in self._coeffs:
            den = lcm(den, c.denominator)
        ints = [int(c * den) for c in self._coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        return Poly(Fraction(v, g) for v in ints)


def _as_poly(x) -> Poly:
    return x if isinstance(x, Poly) else Poly([x])


_TERM = re.compile(r"^([+-]?[^z]*?)\s*\*?\s*(z(?:\^(\d+))?)?$")


def parse_poly(text: str) -> Poly:
    """Parse ``"1,6,5,1"`` (constant first) or ``"1 + 6 z + 5 z^2 + 1 z^3"``."""
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial")
    if "z" not in text:
        parts = [t for t in re.split(r"[,\s]+", text) if t]
        return Poly(parse_rat(t) for t in parts)
    compact = text.replace(" ", "")
    terms = re.findall(r"[+-]?[^+-]+", compact)
    coeffs: dict[int, Fraction] = {}
    for term in terms:
        m = _TERM.match(term)
        if not m:
            raise ValueError(f"cannot parse polynomial term {term!r}")
        coef_txt, var, power = m.groups()
        if var is None:
            k = 0
        else:
            k = int(power) if power else 1
        if coef_txt in ("", "+"):
            c = Fraction(1)
        elif coef_txt == "-":
            c = Fraction(-1)
        else:
            c = parse_rat(coef_txt)
        coeffs[k] = coeffs.get(k, Fraction(0)) + c
    top = max(coeffs)
    return Poly(coeffs.get(k, 0) for k in range(top + 1))


def format_poly(a: Poly, var: str = "z") -> str:
    if a.is_zero():
        return "0"
    pieces = []
    for k, c in enumerate(a.coeffs):
        if c == 0:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        body = format_rat(abs(c)) + (f" {mono}" if mono else "")
        sign = "-" if c < 0 else "+"
        pieces.append((sign, body))
    first_sign, first = pieces[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def from_roots(betas: Sequence) -> Poly:
    """The product of ``(1 + beta z)`` over ``betas``."""
    out = Poly([1])
    for b in betas:
        out = out * Poly([1, b])
    return out
