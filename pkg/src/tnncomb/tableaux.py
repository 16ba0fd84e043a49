"""Partitions, skew shapes, Young tableaux and jeu de taquin.

Cells are ``(row, column)`` pairs, 1-based, English orientation (row 1 on
top). Partitions are plain tuples of positive integers in weakly decreasing
order; the empty partition is ``()``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, GuardExceeded

Partition = tuple[int, ...]
Cell = tuple[int, int]

DEFAULT_ENUMERATION_CAP = 10**6


def partition(parts: Iterable[int]) -> Partition:
    """Validate and strip trailing zeros."""
    lam = tuple(int(x) for x in parts)
    while lam and lam[-1] == 0:
        lam = lam[:-1]
    if any(x < 0 for x in lam) or any(a < b for a, b in zip(lam, lam[1:])):
        raise DomainError(f"not a partition: {lam}")
    return lam


def is_partition(parts: Sequence[int]) -> bool:
    return all(x >= 0 for x in parts) and all(a >= b for a, b in zip(parts, parts[1:]))


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """Partitions of ``n`` in reverse lexicographic order, e.g. (3), (2,1), (1,1,1)."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def parse_partition(text: str) -> Partition:
    """``"3,2,1"`` or ``"[3, 2, 1]"``; ``""`` and ``"[]"`` give the empty partition."""
    body = text.strip().strip("[]()").strip()
    if not body:
        return ()
    try:
        return partition(int(t) for t in body.replace(" ", "").split(",") if t)
    except ValueError as exc:
        raise DomainError(f"not a partition: {text!r}") from exc


@dataclass(frozen=True)
class SkewShape:
    """Cells of ``outer`` that are not in ``inner``."""

    outer: Partition
    inner: Partition = ()

    def __post_init__(self):
        outer = partition(self.outer)
        inner = partition(self.inner)
        if len(inner) > len(outer) or any(m > v for m, v in zip(inner, outer)):
            raise DomainError(f"{inner} is not contained in {outer}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    @classmethod
    def parse(cls, text: str) -> SkewShape:
        """``"3,2,1/2,1"`` or a straight ``"3,1"``."""
        if "/" in text:
            o, i = text.split("/", 1)
            return cls(parse_partition(o), parse_partition(i))
        return cls(parse_partition(text))

    def inner_row(self, r: int) -> int:
        return self.inner[r - 1] if r <= len(self.inner) else 0

    def row_cells(self, r: int) -> range:
        """Column indices of the skew cells in row ``r``."""
        return range(self.inner_row(r) + 1, self.outer[r - 1] + 1)

    def cells(self) -> list[Cell]:
        """Skew cells in reading order."""
        return [(r, c) for r in range(1, len(self.outer) + 1) for c in self.row_cells(r)]

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    @property
    def is_straight(self) -> bool:
        return not self.inner

    def inner_corners(self) -> list[Cell]:
        """Cells of ``inner`` with no inner cell below or to the right."""
        return _inner_corners(self.inner)

    def __str__(self) -> str:
        o = ",".join(map(str, self.outer))
        return f"{o}/{','.join(map(str, self.inner))}" if self.inner else o


@dataclass(frozen=True)
class Tableau:
    """A filling of a skew shape.

    ``rows[r-1]`` lists the entries of the skew cells of row ``r`` from left
    to right; the inner shape supplies each row's offset.
    """

    rows: tuple[tuple[int, ...], ...]
    inner: Partition = ()

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        while rows and not rows[-1] and len(rows) > len(self.inner):
            rows = rows[:-1]
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "inner", partition(self.inner))
        self.shape  # validates

    @classmethod
    def from_cells(cls, cells: dict[Cell, int], inner: Sequence[int] = ()) -> Tableau:
        inner = partition(inner)
        nrows = max([r for r, _ in cells] + [len(inner)], default=0)
        rows = []
        for r in range(1, nrows + 1):
            offset = inner[r - 1] if r <= len(inner) else 0
            cols = sorted(c for rr, c in cells if rr == r)
            if cols != list(range(offset + 1, offset + 1 + len(cols))):
                raise DomainError(f"row {r} cells are not contiguous after the inner shape")
            rows.append(tuple(cells[(r, c)] for c in cols))
        return cls(tuple(rows), inner)

    @property
    def shape(self) -> SkewShape:
        outer = [(self.inner[r] if r < len(self.inner) else 0) + len(row) for r, row in enumerate(self.rows)]
        if len(self.inner) > len(outer):
            outer += list(self.inner[len(outer) :])
        return SkewShape(tuple(outer), self.inner)

    def cells(self) -> dict[Cell, int]:
        out = {}
        for r, row in enumerate(self.rows, start=1):
            off = self.inner[r - 1] if r <= len(self.inner) else 0
            for k, v in enumerate(row, start=1):
                out[(r, off + k)] = v
        return out

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def entries(self) -> list[int]:
        return reading_word(self)

    def is_semistandard(self) -> bool:
        cells = self.cells()
        for (r, c), v in cells.items():
            if (r, c + 1) in cells and cells[(r, c + 1)] < v:
                return False
            if (r + 1, c) in cells and cells[(r + 1, c)] <= v:
                return False
        return all(v >= 1 for v in cells.values())

    def is_standard(self) -> bool:
        return self.is_semistandard() and sorted(self.entries()) == list(range(1, self.size + 1))

    def __str__(self) -> str:
        return format_tableau(self)


# --- basic statistics ------------------------------------------------------


def content(T: Tableau, length: int | None = None) -> tuple[int, ...]:
    """Multiplicities of 1, 2, ... up to the largest entry (or ``length``)."""
    ents = reading_word(T)
    top = max(ents, default=0) if length is None else length
    out = [0] * top
    for v in ents:
        if v > top:
            raise DomainError(f"entry {v} exceeds requested length {top}")
        out[v - 1] += 1
    return tuple(out)


def reading_word(T: Tableau) -> list[int]:
    """Entries row by row, top to bottom, left to right."""
    return [v for row in T.rows for v in row]


def column_suffix(T: Tableau, j: int) -> Tableau:
    """The sub-tableau made of columns ``j, j+1, ...``."""
    shape = T.shape
    ncols = shape.outer[0] if shape.outer else 0
    if not 1 <= j <= max(ncols, 1):
        raise DomainError(f"column {j} outside 1..{ncols}")
    cells = {rc: v for rc, v in T.cells().items() if rc[1] >= j}
    inner = tuple(max(shape.inner_row(r), min(o, j - 1)) for r, o in enumerate(shape.outer, start=1))
    return Tableau.from_cells(cells, inner)


# --- enumeration -----------------------------------------------------------


def enumerate_ssyt(
    shape: SkewShape | Sequence[int],
    max_entry: int,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> list[Tableau]:
    """Semistandard fillings with entries in ``1..max_entry``.

    Cells are filled in reading order with values tried in increasing
    order, so the output is lexicographic in the reading word.
    """
    if not isinstance(shape, SkewShape):
        shape = SkewShape(tuple(shape))
    if max_entry < 1:
        raise DomainError("max_entry must be >= 1")
    return list(_fillings(shape, max_entry, cap, standard=False))


def standard_tableaux(shape: SkewShape | Sequence[int], cap: int = DEFAULT_ENUMERATION_CAP) -> list[Tableau]:
    """Standard fillings of ``shape``, lexicographic in the reading word."""
    if not isinstance(shape, SkewShape):
        shape = SkewShape(tuple(shape))
    return list(_fillings(shape, shape.size, cap, standard=True))


def _fillings(shape: SkewShape, max_entry: int, cap: int, standard: bool) -> Iterator[Tableau]:
    cells = shape.cells()
    skew = set(cells)
    filled: dict[Cell, int] = {}
    used: set[int] = set()
    count = 0

    def rec(k: int) -> Iterator[Tableau]:
        nonlocal count
        if k == len(cells):
            count += 1
            if count > cap:
                raise GuardExceeded(f"more than {cap} tableaux of shape {shape}")
            yield Tableau.from_cells(dict(filled), shape.inner)
            return
        r, c = cells[k]
        lo = 1
        if (r, c - 1) in skew:
            lo = max(lo, filled[(r, c - 1)] + (1 if standard else 0))
        if (r - 1, c) in skew:
            lo = max(lo, filled[(r - 1, c)] + 1)
        for v in range(lo, max_entry + 1):
            if standard and v in used:
                continue
            filled[(r, c)] = v
            used.add(v)
            yield from rec(k + 1)
            used.discard(v)
        filled.pop((r, c), None)

    yield from rec(0)


# --- jeu de taquin ---------------------------------------------------------


def _slide(cells: dict[Cell, int], hole: Cell) -> dict[Cell, int]:
    """Slide into ``hole`` until it leaves the tableau; returns new cells."""
    cells = dict(cells)
    r, c = hole
    while True:
        below = cells.get((r + 1, c))
        right = cells.get((r, c + 1))
        if below is None and right is None:
            return cells
        if right is None or (below is not None and below < right):
            src = (r + 1, c)
        else:
            src = (r, c + 1)
        cells[(r, c)] = cells.pop(src)
        r, c = src


def _inner_corners(inner: Sequence[int]) -> list[Cell]:
    return [(r, m) for r, m in enumerate(inner, start=1) if m > (inner[r] if r < len(inner) else 0)]


def _shrink(inner: tuple[int, ...], corner: Cell) -> tuple[int, ...]:
    r, _ = corner
    new = list(inner)
    new[r - 1] -= 1
    return partition(new)


def slide_step(T: Tableau, corner: Cell) -> Tableau:
    """One forward slide into the inner corner ``corner``."""
    if corner not in _inner_corners(T.inner):
        raise DomainError(f"{corner} is not an inner corner of {T.inner}")
    return Tableau.from_cells(_slide(T.cells(), corner), _shrink(T.inner, corner))


def _check_standard(T: Tableau) -> None:
    if not T.is_standard():
        raise DomainError("jeu de taquin is applied to standard tableaux only")


def jeu_de_taquin(T: Tableau, choose=None) -> Tableau:
    """Rectify a standard skew tableau to straight shape.

    ``choose`` picks an inner corner from the list of available ones; the
    default takes the lexicographically last, i.e. the bottom-most.
    """
    _check_standard(T)
    if choose is None:
        choose = max
    cells, inner = T.cells(), T.inner
    while inner:
        corner = choose(_inner_corners(inner))
        cells = _slide(cells, corner)
        inner = _shrink(inner, corner)
    return Tableau.from_cells(cells)


def jdt_all_results(T: Tableau) -> set[Tableau]:
    """Rectifications reached by every possible sequence of corner choices."""
    _check_standard(T)
    memo: dict[tuple, frozenset] = {}

    def explore(cells: dict[Cell, int], inner: tuple[int, ...]) -> frozenset:
        key = (inner, tuple(sorted(cells.items())))
        if key in memo:
            return memo[key]
        if not inner:
            res = frozenset([Tableau.from_cells(cells)])
        else:
            res = frozenset()
            for corner in _inner_corners(inner):
                res |= explore(_slide(cells, corner), _shrink(inner, corner))
        memo[key] = res
        return res

    return set(explore(T.cells(), T.inner))


def superstandard(lam: Sequence[int]) -> Tableau:
    """Straight tableau of shape ``lam`` whose reading word is ``1..|lam|``."""
    rows, k = [], 1
    for part in lam:
        rows.append(tuple(range(k, k + part)))
        k += part
    return Tableau(tuple(rows))


# --- text format -------------------------------------------------------------


def format_tableau(T: Tableau) -> str:
    """One row per line, inner cells written ``.``."""
    lines = []
    for r, row in enumerate(T.rows, start=1):
        off = T.inner[r - 1] if r <= len(T.inner) else 0
        lines.append(" ".join(["."] * off + [str(v) for v in row]))
    for r in range(len(T.rows) + 1, len(T.inner) + 1):
        lines.append(" ".join(["."] * T.inner[r - 1]))
    return "\n".join(lines)


def parse_tableau(text: str) -> Tableau:
    inner, rows = [], []
    for line in text.strip("\n").splitlines():
        toks = line.split()
        if not toks:
            continue
        dots = 0
        while dots < len(toks) and toks[dots] == ".":
            dots += 1
        if "." in toks[dots:]:
            raise DomainError(f"inner cells must come first in a row: {line!r}")
        inner.append(dots)
        rows.append(tuple(int(t) for t in toks[dots:]))
    return Tableau(tuple(rows), partition(inner))
