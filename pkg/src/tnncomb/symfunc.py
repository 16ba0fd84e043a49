"""The ring of symmetric functions over the rationals.

A :class:`SymFn` is a finite rational combination of basis elements
``b_lam`` for one of the bases

====  ==============================
s     Schur functions
h     complete homogeneous ``h_lam``
e     elementary ``e_lam``
p     power sums ``p_lam``
m     monomial symmetric functions
====  ==============================

Schur is the hub: every basis has an expansion in Schur functions, products
of Schur functions go through :func:`lr_multiply`, and the reverse
conversions invert the per-degree transition matrices exactly. Variables
are infinitely many unless :func:`monomial_expansion` is asked for a finite
number.
"""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations
from typing import Iterable, Mapping, Sequence

from .errors import DegreeBoundError, DomainError, GuardExceeded
from .exact_core import Matrix
from .lr import DEFAULT_DEGREE_BOUND, lr_multiply, skew_schur_expand
from .rational import format_rat, parse_rat, to_rat
from .tableaux import (
    DEFAULT_ENUMERATION_CAP,
    Partition,
    SkewShape,
    content,
    enumerate_ssyt,
    partition,
    partitions,
)

BASES = ("s", "h", "e", "p", "m")
MULTIPLICATIVE = ("h", "e", "p")

Monomials = dict[tuple[int, ...], Fraction]


def order_key(lam: Partition) -> tuple:
    """Descending size, then reverse lexicographic: (5,2) before (5,1,1) before (4,3)."""
    return (-sum(lam), tuple(-x for x in lam))


class SymFn:
    """Rational combination of basis elements of a single basis."""

    __slots__ = ("basis", "degree_bound", "_coeffs")

    def __init__(
        self,
        basis: str,
        coeffs: Mapping[Sequence[int], object] | None = None,
        degree_bound: int = DEFAULT_DEGREE_BOUND,
    ):
        if basis not in BASES:
            raise DomainError(f"unknown basis {basis!r}; expected one of {BASES}")
        self.basis = basis
        self.degree_bound = degree_bound
        acc: dict[Partition, Fraction] = defaultdict(Fraction)
        for lam, c in (coeffs or {}).items():
            lam = partition(sorted(lam, reverse=True)) if basis in MULTIPLICATIVE else partition(lam)
            if sum(lam) > degree_bound:
                raise DegreeBoundError(f"{basis}{list(lam)} exceeds the degree bound {degree_bound}")
            acc[lam] += to_rat(c)
        self._coeffs = {lam: c for lam, c in sorted(acc.items(), key=lambda kv: order_key(kv[0])) if c != 0}

    # -- container protocol ------------------------------------------------

    @property
    def coeffs(self) -> dict[Partition, Fraction]:
        return dict(self._coeffs)

    def items(self):
        return self._coeffs.items()

    def __getitem__(self, lam: Sequence[int]) -> Fraction:
        return self._coeffs.get(partition(lam), Fraction(0))

    def __len__(self) -> int:
        return len(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def degree(self) -> int:
        return max((sum(lam) for lam in self._coeffs), default=0)

    def is_homogeneous(self) -> bool:
        return len({sum(lam) for lam in self._coeffs}) <= 1

    # -- arithmetic ----------------------------------------------------------

    def _new(self, coeffs, basis: str | None = None, bound: int | None = None) -> SymFn:
        return SymFn(basis or self.basis, coeffs, self.degree_bound if bound is None else bound)

    def __neg__(self) -> SymFn:
        return self._new({lam: -c for lam, c in self._coeffs.items()})

    def __add__(self, other) -> SymFn:
        other = self._coerce(other)
        acc = dict(self._coeffs)
        for lam, c in other._coeffs.items():
            acc[lam] = acc.get(lam, Fraction(0)) + c
        return self._new(acc)

    __radd__ = __add__

    def __sub__(self, other) -> SymFn:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> SymFn:
        return self._coerce(other) - self

    def __mul__(self, other) -> SymFn:
        if not isinstance(other, SymFn):
            c = to_rat(other)
            return self._new({lam: c * v for lam, v in self._coeffs.items()})
        bound = min(self.degree_bound, other.degree_bound)
        if self.degree + other.degree > bound:
            raise DegreeBoundError(f"product degree {self.degree + other.degree} exceeds the bound {bound}")
        if self.basis == other.basis and self.basis in MULTIPLICATIVE:
            acc: dict[Partition, Fraction] = defaultdict(Fraction)
            for a, x in self._coeffs.items():
                for b, y in other._coeffs.items():
                    acc[tuple(sorted(a + b, reverse=True))] += x * y
            return self._new(acc, bound=bound)
        prod = _schur_product(convert(self, "s")._coeffs, convert(other, "s")._coeffs, bound)
        return convert(SymFn("s", prod, bound), self.basis)

    def __rmul__(self, other) -> SymFn:
        return self * other

    def __pow__(self, k: int) -> SymFn:
        if k < 0:
            raise DomainError("negative powers are not symmetric functions")
        out = self._new({(): 1})
        for _ in range(k):
            out = out * self
        return out

    def _coerce(self, other) -> SymFn:
        if isinstance(other, SymFn):
            return convert(other, self.basis)
        return self._new({(): to_rat(other)})

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self._coerce(other)
        if not isinstance(other, SymFn):
            return NotImplemented
        return convert(other, self.basis)._coeffs == self._coeffs

    __hash__ = None  # type: ignore[assignment]

    def to(self, basis: str) -> SymFn:
        return convert(self, basis)

    def __repr__(self) -> str:
        return f"SymFn({self.basis!r}, {{{', '.join(f'{lam}: {format_rat(c)}' for lam, c in self._coeffs.items())}}})"

    def __str__(self) -> str:
        return format_symfn_inline(self)


# -- constructors --------------------------------------------------------------


def _basis_element(basis: str, parts, degree_bound: int) -> SymFn:
    if len(parts) == 1 and not isinstance(parts[0], int):
        parts = tuple(parts[0])
    return SymFn(basis, {tuple(parts): 1}, degree_bound)


def s(*parts, degree_bound: int = DEFAULT_DEGREE_BOUND) -> SymFn:
    """``s(3, 1)`` or ``s((3, 1))``."""
    return _basis_element("s", parts, degree_bound)


def h(*parts, degree_bound: int = DEFAULT_DEGREE_BOUND) -> SymFn:
    return _basis_element("h", parts, degree_bound)


def e(*parts, degree_bound: int = DEFAULT_DEGREE_BOUND) -> SymFn:
    return _basis_element("e", parts, degree_bound)


def p(*parts, degree_bound: int = DEFAULT_DEGREE_BOUND) -> SymFn:
    return _basis_element("p", parts, degree_bound)


def m(*parts, degree_bound: int = DEFAULT_DEGREE_BOUND) -> SymFn:
    return _basis_element("m", parts, degree_bound)


def skew_schur(outer: Sequence[int], inner: Sequence[int] = (), degree_bound: int = DEFAULT_DEGREE_BOUND) -> SymFn:
    """``s_{outer/inner}`` in the Schur basis."""
    shape = SkewShape(tuple(outer), tuple(inner))
    return SymFn("s", skew_schur_expand(shape, degree_bound), degree_bound)


# -- Schur hub -----------------------------------------------------------------


def _schur_product(a: Mapping[Partition, Fraction], b: Mapping[Partition, Fraction], bound: int) -> dict:
    acc: dict[Partition, Fraction] = defaultdict(Fraction)
    for lam, x in a.items():
        for mu, y in b.items():
            for nu, c in lr_multiply(lam, mu, bound).items():
                acc[nu] += x * y * c
    return acc


@lru_cache(maxsize=None)
def _p_in_h(k: int) -> tuple[tuple[Partition, Fraction], ...]:
    """Newton's identity ``p_k = k h_k - sum_{i<k} p_i h_{k-i}`` in the h basis."""
    acc: dict[Partition, Fraction] = defaultdict(Fraction)
    acc[(k,)] += k
    for i in range(1, k):
        for lam, c in _p_in_h(i):
            acc[tuple(sorted(lam + (k - i,), reverse=True))] -= c
    return tuple((lam, c) for lam, c in acc.items() if c)


def _product_chain(factors: Iterable[Mapping[Partition, Fraction]]) -> dict[Partition, Fraction]:
    out: dict[Partition, Fraction] = {(): Fraction(1)}
    for f in factors:
        out = _schur_product(out, f, bound=10**9)
    return {lam: c for lam, c in out.items() if c}


@lru_cache(maxsize=None)
def _single_in_schur(basis: str, k: int) -> tuple[tuple[Partition, Fraction], ...]:
    if basis == "h":
        return (((k,), Fraction(1)),)
    if basis == "e":
        return (((1,) * k, Fraction(1)),)
    # basis == "p"
    acc: dict[Partition, Fraction] = defaultdict(Fraction)
    for mu, c in _p_in_h(k):
        for nu, d in _to_schur("h", mu):
            acc[nu] += c * d
    return tuple((lam, c) for lam, c in acc.items() if c)


@lru_cache(maxsize=None)
def _to_schur(basis: str, lam: Partition) -> tuple[tuple[Partition, Fraction], ...]:
    """Schur expansion of one basis element."""
    if basis == "s":
        return ((lam, Fraction(1)),)
    if basis in MULTIPLICATIVE:
        res = _product_chain(dict(_single_in_schur(basis, k)) for k in lam)
    else:  # "m": invert the Kostka matrix of this degree
        d = sum(lam)
        index, _, kinv = _kostka_tables(d)
        res = {mu: kinv[index[lam]][index[mu]] for mu in partitions(d) if kinv[index[lam]][index[mu]]}
    return tuple(sorted(res.items(), key=lambda kv: order_key(kv[0])))


@lru_cache(maxsize=None)
def kostka(lam: Partition, mu: Partition) -> int:
    """Number of semistandard tableaux of shape ``lam`` and content ``mu``."""
    lam, mu = partition(lam), tuple(x for x in mu if x)
    if sum(lam) != sum(mu):
        return 0
    if not mu:
        return 1
    k, rest = mu[-1], mu[:-1]
    total = 0
    # remove a horizontal strip of size k carrying the largest label
    for inner in _horizontal_strip_removals(lam, k):
        total += kostka(inner, rest)
    return total


def _horizontal_strip_removals(lam: Partition, k: int) -> list[Partition]:
    out = []
    n = len(lam)

    def rec(i: int, left: int, acc: list[int]) -> None:
        if i == n:
            if left == 0:
                out.append(partition(acc))
            return
        below = lam[i + 1] if i + 1 < n else 0
        for take in range(0, min(left, lam[i] - below) + 1):
            rec(i + 1, left - take, acc + [lam[i] - take])

    rec(0, k, [])
    return out


@lru_cache(maxsize=None)
def _kostka_tables(d: int):
    """``(index, K, K^{-1})`` with ``K[lam][mu] = kostka(lam, mu)`` over partitions of ``d``."""
    parts = partitions(d)
    index = {lam: i for i, lam in enumerate(parts)}
    K = Matrix([[kostka(lam, mu) for mu in parts] for lam in parts]) if d else Matrix([[1]])
    Kinv = K.inverse()
    return index, K, [list(r) for r in Kinv.rows()]


@lru_cache(maxsize=None)
def _from_schur_table(basis: str, d: int) -> tuple[dict, list[list[Fraction]]]:
    """Inverse of the Schur expansion matrix of ``basis`` in degree ``d``.

    Column ``lam`` of the forward matrix holds the Schur coefficients of
    ``b_lam``; row ``lam`` of the inverse's transpose gives ``s_lam`` in ``b``.
    """
    parts = partitions(d)
    index = {lam: i for i, lam in enumerate(parts)}
    if d == 0:
        return index, [[Fraction(1)]]
    fwd = [[Fraction(0)] * len(parts) for _ in parts]
    for j, lam in enumerate(parts):
        for mu, c in _to_schur(basis, lam):
            fwd[index[mu]][j] = c
    inv = Matrix(fwd).inverse()
    return index, [list(r) for r in inv.rows()]


@lru_cache(maxsize=None)
def _from_schur(basis: str, lam: Partition) -> tuple[tuple[Partition, Fraction], ...]:
    """Expansion of ``s_lam`` in ``basis``."""
    if basis == "s":
        return ((lam, Fraction(1)),)
    d = sum(lam)
    if basis == "m":
        res = {mu: Fraction(kostka(lam, mu)) for mu in partitions(d) if kostka(lam, mu)}
    else:
        index, inv = _from_schur_table(basis, d)
        col = index[lam]
        res = {mu: inv[index[mu]][col] for mu in partitions(d) if inv[index[mu]][col]}
    return tuple(sorted(res.items(), key=lambda kv: order_key(kv[0])))


def convert(f: SymFn, target: str) -> SymFn:
    """Re-express ``f`` in the ``target`` basis."""
    if target not in BASES:
        raise DomainError(f"unknown basis {target!r}")
    if f.basis == target:
        return f
    if f.degree > f.degree_bound:  # pragma: no cover - guarded at construction
        raise DegreeBoundError("degree bound exceeded")
    schur: dict[Partition, Fraction] = defaultdict(Fraction)
    for lam, c in f.items():
        for mu, d in _to_schur(f.basis, lam):
            schur[mu] += c * d
    if target == "s":
        return SymFn("s", schur, f.degree_bound)
    out: dict[Partition, Fraction] = defaultdict(Fraction)
    for mu, c in schur.items():
        if c:
            for nu, d in _from_schur(target, mu):
                out[nu] += c * d
    return SymFn(target, out, f.degree_bound)


# -- Jacobi-Trudi ----------------------------------------------------------------


def h_entry(k: int, degree_bound: int = DEFAULT_DEGREE_BOUND) -> SymFn:
    """``h_k`` with ``h_0 = 1`` and ``h_k = 0`` for ``k < 0``."""
    if k < 0:
        return SymFn("h", {}, degree_bound)
    return SymFn("h", {(k,) if k else (): 1}, degree_bound)


def symbolic_det(entries: Sequence[Sequence[SymFn]]) -> SymFn:
    """Determinant of a square matrix of symmetric functions.

    Expands row by row over subsets of used columns, so a ``k x k`` matrix
    costs ``O(k 2^k)`` ring multiplications rather than ``k!``.
    """
    k = len(entries)
    if k == 0:
        return SymFn("h", {(): 1})
    basis = entries[0][0].basis
    bound = entries[0][0].degree_bound
    layer: dict[int, SymFn] = {0: SymFn(basis, {(): 1}, bound)}
    for r in range(k):
        nxt: dict[int, SymFn] = {}
        for used, val in layer.items():
            if val.is_zero():
                continue
            for c in range(k):
                if used >> c & 1:
                    continue
                a = entries[r][c]
                if a.is_zero():
                    continue
                # sign: number of used columns to the right of c
                term = val * a
                if bin(used >> (c + 1)).count("1") % 2:
                    term = -term
                key = used | (1 << c)
                nxt[key] = nxt[key] + term if key in nxt else term
        layer = nxt
    return layer.get((1 << k) - 1, SymFn(basis, {}, bound))


@dataclass(frozen=True)
class JacobiTrudi:
    """Jacobi-Trudi matrix of a (skew) shape: entry ``(i, j)`` is ``h_{nu_i - mu_j - i + j}``."""

    shape: SkewShape
    degree_bound: int = DEFAULT_DEGREE_BOUND

    @property
    def indices(self) -> tuple[tuple[int, ...], ...]:
        nu, mu = self.shape.outer, self.shape.inner
        k = len(nu)
        mu = tuple(mu) + (0,) * (k - len(mu))
        return tuple(tuple(nu[i] - mu[j] - i + j for j in range(k)) for i in range(k))

    def entry(self, i: int, j: int) -> SymFn:
        """1-based entry as an h-basis symmetric function."""
        return h_entry(self.indices[i - 1][j - 1], self.degree_bound)

    def matrix(self) -> list[list[SymFn]]:
        return [[h_entry(v, self.degree_bound) for v in row] for row in self.indices]

    def determinant(self) -> SymFn:
        """The (skew) Schur function in the h basis."""
        if not self.shape.outer:
            return SymFn("h", {(): 1}, self.degree_bound)
        return symbolic_det(self.matrix())

    def format(self) -> str:
        def cell(v: int) -> str:
            return "0" if v < 0 else ("1" if v == 0 else f"h{v}")

        return "\n".join(" ".join(cell(v) for v in row) for row in self.indices)


def jacobi_trudi(shape: SkewShape | Sequence[int], degree_bound: int = DEFAULT_DEGREE_BOUND) -> JacobiTrudi:
    if not isinstance(shape, SkewShape):
        shape = SkewShape(tuple(shape))
    if shape.size > degree_bound:
        raise DegreeBoundError(f"degree {shape.size} exceeds the bound {degree_bound}")
    return JacobiTrudi(shape, degree_bound)


def h_matrix_minor(rows: Sequence[int], cols: Sequence[int], degree_bound: int = DEFAULT_DEGREE_BOUND) -> SymFn:
    """Minor ``Delta_{rows, cols}`` of the infinite Toeplitz matrix ``[h_{j-i}]``."""
    if len(rows) != len(cols):
        raise DomainError("row and column index sets differ in size")
    return symbolic_det([[h_entry(c - r, degree_bound) for c in cols] for r in rows])


# -- monomial expansion ------------------------------------------------------------


def _mono_mul(a: Monomials, b: Monomials) -> Monomials:
    out: Monomials = defaultdict(Fraction)
    for x, c in a.items():
        for y, d in b.items():
            out[tuple(i + j for i, j in zip(x, y))] += c * d
    return {k: v for k, v in out.items() if v}


def _exps(n: int, idx: Iterable[int]) -> tuple[int, ...]:
    v = [0] * n
    for i in idx:
        v[i] += 1
    return tuple(v)


def _single_monomials(basis: str, k: int, n: int) -> Monomials:
    one = Fraction(1)
    if basis == "e":
        return {_exps(n, c): one for c in combinations(range(n), k)}
    if basis == "h":
        return {_exps(n, c): one for c in combinations_with_replacement(range(n), k)}
    return {tuple(k if j == i else 0 for j in range(n)): one for i in range(n)}


def _element_monomials(basis: str, lam: Partition, n: int, cap: int) -> Monomials:
    if basis == "s":
        out: Monomials = defaultdict(Fraction)
        if len(lam) > n:
            return {}
        for T in enumerate_ssyt(SkewShape(lam), n, cap):
            out[content(T, n)] += 1
        return dict(out)
    if basis == "m":
        if len(lam) > n:
            return {}
        padded = tuple(lam) + (0,) * (n - len(lam))
        return {perm: Fraction(1) for perm in set(permutations(padded))}
    acc: Monomials = {(0,) * n: Fraction(1)}
    for k in lam:
        acc = _mono_mul(acc, _single_monomials(basis, k, n))
        if len(acc) > cap:
            raise GuardExceeded(f"more than {cap} monomials")
    return acc


def monomial_expansion(f: SymFn, n_vars: int, cap: int = DEFAULT_ENUMERATION_CAP) -> Monomials:
    """Exact polynomial in ``x_1..x_n`` as ``{exponent vector: coefficient}``."""
    if n_vars < 1:
        raise DomainError("n_vars must be >= 1")
    out: Monomials = defaultdict(Fraction)
    for lam, c in f.items():
        for mono, d in _element_monomials(f.basis, lam, n_vars, cap).items():
            out[mono] += c * d
    return {k: v for k, v in sorted(out.items(), reverse=True) if v}


# -- positivity ----------------------------------------------------------------------


@dataclass(frozen=True)
class SchurPositivity:
    """``witness`` is the first negative Schur coefficient ``(lam, c)`` in display order."""

    positive: bool
    expansion: SymFn
    witness: tuple[Partition, Fraction] | None = None

    def __bool__(self) -> bool:
        return self.positive


def is_schur_positive(f: SymFn) -> SchurPositivity:
    fs = convert(f, "s")
    for lam, c in fs.items():
        if c < 0:
            return SchurPositivity(False, fs, (lam, c))
    return SchurPositivity(True, fs)


def schur_positive_difference(i: int, degree_bound: int = DEFAULT_DEGREE_BOUND) -> SymFn:
    """``s_{(i+3,i)/(1)} s_{i+1} - s_{(i+2,i+1)} s_i`` in the Schur basis."""
    if i < 0:
        raise DomainError("i must be a nonnegative integer")
    if 2 * i + 3 > degree_bound:
        raise DegreeBoundError(f"degree {2 * i + 3} exceeds the bound {degree_bound}")
    left = skew_schur((i + 3, i), (1,), degree_bound) * s(i + 1, degree_bound=degree_bound)
    right = s(i + 2, i + 1, degree_bound=degree_bound) * s(i, degree_bound=degree_bound)
    return left - right


# -- text I/O --------------------------------------------------------------------------


def _format_parts(lam: Partition) -> str:
    return "[" + ",".join(map(str, lam)) + "]"


def format_symfn(f: SymFn) -> str:
    """One ``coef * b[parts]`` line per term, in display order; ``0`` when empty."""
    if f.is_zero():
        return "0"
    return "\n".join(f"{format_rat(c)} * {f.basis}{_format_parts(lam)}" for lam, c in f.items())


def format_symfn_inline(f: SymFn) -> str:
    if f.is_zero():
        return "0"
    out = []
    for k, (lam, c) in enumerate(f.items()):
        mag = abs(c)
        coef = "" if mag == 1 else f"{format_rat(mag)}*"
        term = f"{coef}{f.basis}{_format_parts(lam)}"
        if k == 0:
            out.append(("-" if c < 0 else "") + term)
        else:
            out.append(("- " if c < 0 else "+ ") + term)
    return " ".join(out)


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([sehpm])\[([^\]]*)\]|(.))")


def parse_expression(text: str, degree_bound: int = DEFAULT_DEGREE_BOUND) -> SymFn:
    """Parse expressions such as ``"s[3,1]*s[2,1] - h[4]"`` or ``"s[4,1/1]*s[2]"``.

    Grammar: sums and differences of products of factors; a factor is a
    rational number, a basis element ``b[parts]`` (``s`` also accepts a skew
    ``s[outer/inner]``), a parenthesized expression, optionally raised to a
    nonnegative integer power with ``^``.
    """
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt or mt.end() == pos:
            raise DomainError(f"cannot parse expression at {text[pos:]!r}")
        num, basis, body, other = mt.groups()
        if num is not None:
            tokens.append(("num", parse_rat(num)))
        elif basis is not None:
            tokens.append(("elt", basis, body))
        elif other is not None and other.strip():
            if other not in "+-*^()":
                raise DomainError(f"unexpected character {other!r} in expression")
            tokens.append(("op", other))
        pos = mt.end()
    tokens.append(("end",))
    k = 0

    def peek():
        return tokens[k]

    def take():
        nonlocal k
        tok = tokens[k]
        k += 1
        return tok

    def element(basis: str, body: str) -> SymFn:
        if "/" in body:
            if basis != "s":
                raise DomainError("skew shapes are only defined for Schur functions")
            o, i = body.split("/", 1)
            return skew_schur(_ints(o), _ints(i), degree_bound)
        return SymFn(basis, {_ints(body): 1}, degree_bound)

    def factor() -> SymFn:
        tok = take()
        if tok[0] == "num":
            val = SymFn("s", {(): tok[1]}, degree_bound)
        elif tok[0] == "elt":
            val = element(tok[1], tok[2])
        elif tok == ("op", "("):
            val = expr()
            if take() != ("op", ")"):
                raise DomainError("missing ')'")
        elif tok == ("op", "-"):
            return -factor()
        else:
            raise DomainError(f"unexpected token {tok!r}")
        if peek() == ("op", "^"):
            take()
            exp = take()
            if exp[0] != "num" or exp[1].denominator != 1:
                raise DomainError("exponent must be a nonnegative integer")
            val = val ** int(exp[1])
        return val

    def term() -> SymFn:
        val = factor()
        while peek() == ("op", "*"):
            take()
            val = val * factor()
        return val

    def expr() -> SymFn:
        val = term()
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            rhs = term()
            val = val + rhs if op == "+" else val - rhs
        return val

    result = expr()
    if peek() != ("end",):
        raise DomainError(f"trailing input in expression: {tokens[k:]!r}")
    return result


def _ints(body: str) -> Partition:
    body = body.strip()
    if not body:
        return ()
    try:
        return tuple(int(t) for t in body.split(",") if t.strip())
    except ValueError as exc:
        raise DomainError(f"bad partition {body!r}") from exc
