"""Littlewood-Richardson coefficients by two independent routes.

``lr_multiply`` fills tableaux of shape ``mu`` column by column and keeps
those for which ``lam + c(T_j)`` stays a partition for every column suffix
``T_j``. ``skew_schur_expand`` instead rectifies every standard tableau of
a skew shape with jeu de taquin and counts the rectifications whose
reading word is ``1, 2, ..., N``.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Sequence

from .errors import DegreeBoundError
from .tableaux import (
    Partition,
    SkewShape,
    Tableau,
    jeu_de_taquin,
    partition,
    reading_word,
    standard_tableaux,
)

DEFAULT_DEGREE_BOUND = 20

LRCoefficients = dict[Partition, int]


def _check_degree(total: int, bound: int | None) -> None:
    if bound is not None and total > bound:
        raise DegreeBoundError(f"degree {total} exceeds the bound {bound}")


def lr_tableaux(lam: Sequence[int], mu: Sequence[int]) -> list[Tableau]:
    """Semistandard tableaux of shape ``mu`` with ``lam + c(T_j)`` a partition for all ``j``.

    Sorted lexicographically by reading word.
    """
    lam, mu = partition(lam), partition(mu)
    return sorted(_lr_fillings(lam, mu), key=reading_word)


def _lr_fillings(lam: Partition, mu: Partition) -> list[Tableau]:
    if not mu:
        return [Tableau(())]
    max_entry = len(lam) + len(mu)
    ncols = mu[0]
    heights = [sum(1 for m in mu if m >= c) for c in range(1, ncols + 1)]
    filled: dict[tuple[int, int], int] = {}
    weight = list(lam) + [0] * max_entry
    out: list[Tableau] = []

    def place(col: int, row: int) -> None:
        if col == 0:
            out.append(Tableau.from_cells(dict(filled)))
            return
        if row > heights[col - 1]:
            place(col - 1, 1)
            return
        lo = filled[(row - 1, col)] + 1 if row > 1 else 1
        hi = filled.get((row, col + 1), max_entry)
        for v in range(lo, hi + 1):
            # adding v to part v must keep it <= part v-1 (entries grow down a column)
            if v > 1 and weight[v - 1] + 1 > weight[v - 2]:
                continue
            filled[(row, col)] = v
            weight[v - 1] += 1
            place(col, row + 1)
            weight[v - 1] -= 1
        filled.pop((row, col), None)

    place(ncols, 1)
    return out


@lru_cache(maxsize=4096)
def _lr_cached(lam: Partition, mu: Partition) -> tuple[tuple[Partition, int], ...]:
    counts: Counter = Counter()
    for T in _lr_fillings(lam, mu):
        nu = list(lam) + [0] * (len(mu))
        for v in reading_word(T):
            nu[v - 1] += 1
        counts[partition(nu)] += 1
    return tuple(sorted(counts.items(), key=lambda kv: _order_key(kv[0])))


def _order_key(lam: Partition) -> tuple:
    return (-sum(lam), tuple(-x for x in lam))


def lr_multiply(lam: Sequence[int], mu: Sequence[int], degree_bound: int | None = DEFAULT_DEGREE_BOUND) -> LRCoefficients:
    """Schur expansion of ``s_lam * s_mu`` as ``{nu: c^nu_{lam,mu}}``."""
    lam, mu = partition(lam), partition(mu)
    _check_degree(sum(lam) + sum(mu), degree_bound)
    return dict(_lr_cached(lam, mu))


def reads_in_order(T: Tableau) -> bool:
    """True when the reading word of ``T`` is exactly ``1, 2, ..., N``."""
    return reading_word(T) == list(range(1, T.size + 1))


@lru_cache(maxsize=4096)
def _skew_cached(outer: Partition, inner: Partition) -> tuple[tuple[Partition, int], ...]:
    shape = SkewShape(outer, inner)
    if not inner:
        return ((outer, 1),)
    counts: Counter = Counter()
    for T in standard_tableaux(shape):
        R = jeu_de_taquin(T)
        if reads_in_order(R):
            counts[R.shape.outer] += 1
    return tuple(sorted(counts.items(), key=lambda kv: _order_key(kv[0])))


def skew_schur_expand(shape: SkewShape, degree_bound: int | None = DEFAULT_DEGREE_BOUND) -> LRCoefficients:
    """Schur expansion of ``s_{nu/mu}`` via jeu de taquin."""
    if not isinstance(shape, SkewShape):
        shape = SkewShape(*shape)
    _check_degree(sum(shape.outer), degree_bound)
    return dict(_skew_cached(shape.outer, shape.inner))


def jdt_table(shape: SkewShape) -> list[tuple[Tableau, Tableau, bool]]:
    """``(T, jdt(T), counted)`` for every standard tableau ``T`` of ``shape``."""
    rows = []
    for T in standard_tableaux(shape):
        R = jeu_de_taquin(T)
        rows.append((T, R, reads_in_order(R)))
    return rows


__all__ = [
    "DEFAULT_DEGREE_BOUND",
    "LRCoefficients",
    "reads_in_order",
    "jdt_table",
    "lr_multiply",
    "lr_tableaux",
    "skew_schur_expand",
]
