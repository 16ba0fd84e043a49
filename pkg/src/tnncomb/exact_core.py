"""Exact rational dense linear algebra.

Matrices are immutable grids of :class:`~fractions.Fraction`. Index sets
passed to :func:`minor` and friends are 1-based, matching the usual
``Delta_{I,J}`` notation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, NotTotallyNonnegativeError, SingularMatrixError, GuardExceeded
from .polynomial import Poly
from .rational import format_rat, parse_rat, to_rat

DEFAULT_SIZE_LIMIT = 8

IndexSet = tuple[int, ...]


class Matrix:
    """Immutable ``rows x cols`` matrix of rationals."""

    __slots__ = ("_rows", "_nrows", "_ncols")

    def __init__(self, rows: Iterable[Iterable]):
        grid = tuple(tuple(to_rat(v) for v in row) for row in rows)
        if not grid or not grid[0]:
            raise DomainError("a matrix needs at least one row and one column")
        width = len(grid[0])
        if any(len(r) != width for r in grid):
            raise DomainError("ragged rows")
        self._rows = grid
        self._nrows = len(grid)
        self._ncols = width

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Matrix:
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def diagonal(cls, values: Sequence) -> Matrix:
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def elementary(cls, n: int, row: int, col: int, c) -> Matrix:
        """``I + c E_{row,col}`` with 1-based ``row``, ``col``."""
        grid = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        grid[row - 1][col - 1] += to_rat(c)
        return cls(grid)

    @property
    def shape(self) -> tuple[int, int]:
        return self._nrows, self._ncols

    @property
    def nrows(self) -> int:
        return self._nrows

    @property
    def ncols(self) -> int:
        return self._ncols

    @property
    def is_square(self) -> bool:
        return self._nrows == self._ncols

    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        """0-based element access ``M[i, j]``."""
        i, j = ij
        return self._rows[i][j]

    def entry(self, i: int, j: int) -> Fraction:
        """1-based element access."""
        return self._rows[i - 1][j - 1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_rat(v) for v in row) for row in self._rows)
        return f"Matrix([{body}])"

    def __add__(self, other: Matrix) -> Matrix:
        _same_shape(self, other)
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)])

    def __sub__(self, other: Matrix) -> Matrix:
        _same_shape(self, other)
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self @ other
        c = to_rat(other)
        return Matrix([[c * v for v in row] for row in self._rows])

    __rmul__ = __mul__

    def __matmul__(self, other: Matrix) -> Matrix:
        if self._ncols != other._nrows:
            raise DomainError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other._rows))
        return Matrix([[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols] for row in self._rows])

    def __pow__(self, k: int) -> Matrix:
        if not self.is_square or k < 0:
            raise DomainError("power needs a square matrix and k >= 0")
        out = Matrix.identity(self._nrows)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    @property
    def T(self) -> Matrix:
        return Matrix(zip(*self._rows))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
        """1-based row/column selection (both non-empty)."""
        return Matrix([[self._rows[i - 1][j - 1] for j in cols] for i in rows])

    def det(self) -> Fraction:
        if not self.is_square:
            raise DomainError("determinant of a non-square matrix")
        return _det([list(r) for r in self._rows])

    def inverse(self) -> Matrix:
        if not self.is_square:
            raise DomainError("inverse of a non-square matrix")
        n = self._nrows
        a = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(self._rows)]
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col] != 0), None)
            if piv is None:
                raise SingularMatrixError("matrix is singular")
            a[col], a[piv] = a[piv], a[col]
            inv = 1 / a[col][col]
            a[col] = [v * inv for v in a[col]]
            for r in range(n):
                if r != col and a[r][col] != 0:
                    f = a[r][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        return Matrix(row[n:] for row in a)

    def is_diagonal(self) -> bool:
        return all(v == 0 for i, row in enumerate(self._rows) for j, v in enumerate(row) if i != j)


def _same_shape(a: Matrix, b: Matrix) -> None:
    if a.shape != b.shape:
        raise DomainError(f"shape mismatch {a.shape} vs {b.shape}")


def _det(a: list[list[Fraction]]) -> Fraction:
    """Gaussian elimination on a scratch copy."""
    n = len(a)
    sign = 1
    result = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            sign = -sign
        p = a[col][col]
        result *= p
        for r in range(col + 1, n):
            if a[r][col] != 0:
                f = a[r][col] / p
                row_r, row_c = a[r], a[col]
                for k in range(col + 1, n):
                    row_r[k] -= f * row_c[k]
    return sign * result


def _check_index_set(idx: Sequence[int], bound: int, what: str) -> IndexSet:
    idx = tuple(idx)
    if any(b <= a for a, b in zip(idx, idx[1:])):
        raise DomainError(f"{what} must be strictly increasing: {idx}")
    if idx and (idx[0] < 1 or idx[-1] > bound):
        raise DomainError(f"{what} index out of range 1..{bound}: {idx}")
    return idx


def minor(M: Matrix, I: Sequence[int], J: Sequence[int]) -> Fraction:
    """``det M[I, J]``; the empty minor is 1."""
    if len(I) != len(J):
        raise DomainError(f"|I| = {len(I)} differs from |J| = {len(J)}")
    I = _check_index_set(I, M.nrows, "I")
    J = _check_index_set(J, M.ncols, "J")
    if not I:
        return Fraction(1)
    return _det([[M.entry(i, j) for j in J] for i in I])


def index_pairs(rows: int, cols: int) -> Iterator[tuple[IndexSet, IndexSet]]:
    """All equal-size non-empty ``(I, J)`` pairs: by size, then lexicographically."""
    for k in range(1, min(rows, cols) + 1):
        for I in combinations(range(1, rows + 1), k):
            for J in combinations(range(1, cols + 1), k):
                yield I, J


def all_minors(M: Matrix, size_limit: int | None = DEFAULT_SIZE_LIMIT) -> dict[tuple[IndexSet, IndexSet], Fraction]:
    """Every minor, computed by Laplace expansion over smaller minors.

    Each ``k x k`` minor expands along its first row using the
    already-tabulated ``(k-1) x (k-1)`` minors, so the whole table costs
    ``k`` multiplications per entry.
    """
    _guard_size(M, size_limit)
    rows, cols = M.shape
    table: dict[tuple[IndexSet, IndexSet], Fraction] = {((), ()): Fraction(1)}
    for I, J in index_pairs(rows, cols):
        i0, rest = I[0], I[1:]
        total = Fraction(0)
        for t, j in enumerate(J):
            a = M.entry(i0, j)
            if a:
                sub = table[(rest, J[:t] + J[t + 1 :])]
                total += -a * sub if t % 2 else a * sub
        table[(I, J)] = total
    return table


def _guard_size(M: Matrix, size_limit: int | None) -> None:
    if size_limit is not None and max(M.shape) > size_limit:
        raise GuardExceeded(f"exhaustive minor enumeration refused for {M.shape} (limit {size_limit})")


@dataclass(frozen=True)
class PositivityCheck:
    """Outcome of an exhaustive minor test.

    ``witness`` is the first failing ``(I, J, value)`` in the order of
    :func:`index_pairs`; ``minors_checked`` counts the empty minor too.
    """

    ok: bool
    witness: tuple[IndexSet, IndexSet, Fraction] | None = None
    minors_checked: int = 0

    def __bool__(self) -> bool:
        return self.ok


def _scan(M: Matrix, strict: bool, size_limit: int | None) -> PositivityCheck:
    table = all_minors(M, size_limit)
    checked = 0
    for (I, J), v in table.items():
        checked += 1
        if not I:
            continue
        if v < 0 or (strict and v == 0):
            return PositivityCheck(False, (I, J, v), checked)
    return PositivityCheck(True, None, checked)


def is_totally_nonnegative(M: Matrix, size_limit: int | None = DEFAULT_SIZE_LIMIT) -> PositivityCheck:
    """Exhaustively test every square minor for ``>= 0``."""
    return _scan(M, strict=False, size_limit=size_limit)


def is_totally_positive(M: Matrix, size_limit: int | None = DEFAULT_SIZE_LIMIT) -> PositivityCheck:
    """Exhaustively test every square minor for ``> 0``."""
    return _scan(M, strict=True, size_limit=size_limit)


def exterior_power(M: Matrix, k: int, size_limit: int | None = DEFAULT_SIZE_LIMIT) -> Matrix:
    """``k``-th compound matrix, subsets in lexicographic order."""
    if not M.is_square:
        raise DomainError("exterior power needs a square matrix")
    n = M.nrows
    if not 1 <= k <= n:
        raise DomainError(f"k = {k} outside 1..{n}")
    subsets = list(combinations(range(1, n + 1), k))
    if size_limit is not None and n > size_limit:
        return Matrix([[minor(M, I, J) for J in subsets] for I in subsets])
    table = all_minors(M, size_limit)
    return Matrix([[table[(I, J)] for J in subsets] for I in subsets])


def subsets_of_size(n: int, k: int) -> list[IndexSet]:
    return list(combinations(range(1, n + 1), k))


# --- Neville factorization ------------------------------------------------


@dataclass(frozen=True)
class ElementaryFactor:
    """``I + c E_{j+1,j}`` (kind ``"lower"``) or ``I + c E_{j,j+1}`` (``"upper"``)."""

    kind: str
    j: int
    c: Fraction

    def matrix(self, n: int) -> Matrix:
        if self.kind == "lower":
            return Matrix.elementary(n, self.j + 1, self.j, self.c)
        return Matrix.elementary(n, self.j, self.j + 1, self.c)


@dataclass(frozen=True)
class Factorization:
    """``M = L_1 ... L_m  D  U_1 ... U_r`` with every parameter >= 0."""

    n: int
    lower: tuple[ElementaryFactor, ...]
    diagonal: tuple[Fraction, ...]
    upper: tuple[ElementaryFactor, ...] = field(default=())

    def matrices(self) -> list[Matrix]:
        return (
            [f.matrix(self.n) for f in self.lower]
            + [Matrix.diagonal(self.diagonal)]
            + [f.matrix(self.n) for f in self.upper]
        )

    def product(self) -> Matrix:
        out = Matrix.identity(self.n)
        for F in self.matrices():
            out = out @ F
        return out

    def lower_product(self) -> Matrix:
        out = Matrix.identity(self.n)
        for f in self.lower:
            out = out @ f.matrix(self.n)
        return out

    def upper_product(self) -> Matrix:
        out = Matrix.identity(self.n)
        for f in self.upper:
            out = out @ f.matrix(self.n)
        return out


def _neville_lower(a: list[list[Fraction]]) -> list[ElementaryFactor]:
    """Zero the strict lower triangle of ``a`` in place by adjacent-row steps.

    Returns the L-type factors whose product times the reduced matrix gives
    back the input. Raises if a step would need a row exchange or a
    negative multiplier.
    """
    n = len(a)
    factors: list[ElementaryFactor] = []
    for k in range(n - 1):
        # bottom-up, so every multiplier of this sweep reads unmodified rows
        for i in range(n - 1, k, -1):
            below, above = a[i][k], a[i - 1][k]
            if below == 0:
                continue
            if above == 0:
                raise NotTotallyNonnegativeError(
                    f"elimination needs a row exchange at ({i + 1}, {k + 1}); matrix is not TNN"
                )
            m = below / above
            if m < 0:
                raise NotTotallyNonnegativeError(
                    f"negative multiplier {format_rat(m)} at ({i + 1}, {k + 1}); matrix is not TNN"
                )
            a[i] = [x - m * y for x, y in zip(a[i], a[i - 1])]
            factors.append(ElementaryFactor("lower", i, m))
    return factors


def neville_factorize(M: Matrix) -> Factorization:
    """Factor an invertible TNN matrix into elementary bidiagonal pieces.

    Neville elimination clears the lower triangle with adjacent-row
    operations; the same sweep on the transpose of what remains clears the
    upper triangle. Zero multipliers are dropped, so the identity factors
    into an empty product times ``D = I``.
    """
    if not M.is_square:
        raise DomainError("factorization needs a square matrix")
    n = M.nrows
    if M.det() == 0:
        raise SingularMatrixError("matrix is singular; only invertible TNN matrices are factored")
    a = [list(r) for r in M.rows()]
    lower = _neville_lower(a)
    # a is now upper triangular: a = D * (unit upper); eliminate its transpose
    t = [list(col) for col in zip(*a)]
    upper_t = _neville_lower(t)
    diag = tuple(t[i][i] for i in range(n))
    if any(d <= 0 for d in diag):
        raise NotTotallyNonnegativeError("non-positive pivot; matrix is not TNN")
    # U = (L'_1 ... L'_r D)^T = D L'_r^T ... L'_1^T
    upper = tuple(ElementaryFactor("upper", f.j, f.c) for f in reversed(upper_t))
    fac = Factorization(n, tuple(lower), diag, upper)
    if fac.product() != M:  # pragma: no cover - algebraic invariant
        raise AssertionError("factorization does not reproduce its input")
    return fac


# --- characteristic polynomial --------------------------------------------


def char_poly(M: Matrix) -> Poly:
    """``det(zI - M)`` via the Faddeev-LeVerrier recurrence."""
    if not M.is_square:
        raise DomainError("characteristic polynomial needs a square matrix")
    n = M.nrows
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    Mk = Matrix.zeros(n, n)
    I = Matrix.identity(n)
    c = Fraction(1)
    for k in range(1, n + 1):
        Mk = M @ (Mk + c * I)
        c = -sum((Mk[i, i] for i in range(n)), Fraction(0)) / k
        coeffs[n - k] = c
    return Poly(coeffs)


# --- text format ----------------------------------------------------------


def parse_matrix(text: str) -> Matrix:
    """First line ``rows cols``, then row-major rationals ``p/q`` or ``p``."""
    tokens = text.split()
    if len(tokens) < 2:
        raise ValueError("matrix text needs a 'rows cols' header")
    try:
        rows, cols = int(tokens[0]), int(tokens[1])
    except ValueError as exc:
        raise ValueError("matrix header must be two integers") from exc
    body = tokens[2:]
    if rows < 1 or cols < 1 or len(body) != rows * cols:
        raise ValueError(f"expected {rows}x{cols} entries, found {len(body)}")
    vals = [parse_rat(t) for t in body]
    return Matrix([vals[r * cols : (r + 1) * cols] for r in range(rows)])


def format_matrix(M: Matrix) -> str:
    lines = [f"{M.nrows} {M.ncols}"]
    lines += [" ".join(format_rat(v) for v in row) for row in M.rows()]
    return "\n".join(lines) + "\n"


def number_of_minors(rows: int, cols: int) -> int:
    """Count of square minors including the empty one."""
    return sum(comb(rows, k) * comb(cols, k) for k in range(min(rows, cols) + 1))
