"""Comparing products of complementary principal minors of TNN matrices.

For ``I`` a subset of ``[n]`` with complement ``Ibar`` write
``P(I) = Delta_{I,I} * Delta_{Ibar,Ibar}``. Two combinatorial criteria
decide when ``P(I) <= P(J)`` holds for every totally nonnegative matrix:

* Temperley-Lieb: color ``s_i, t_i`` by membership in ``I`` and keep the
  noncrossing matchings whose arcs join two sources of different colors,
  two sinks of different colors, or a source and a sink of the same color.
  ``P(I) <= P(J)`` iff the kept set for ``I`` is contained in that for ``J``.
* Lattice path: step ``i`` goes up when ``i`` is in ``I`` and down
  otherwise; steps covering the same height interval form a block.
  ``P(I) <= P(J)`` iff the partition for ``I`` refines the one for ``J``.

Boundary points of a diagram are numbered counterclockwise: ``1..n`` are
``s_1..s_n`` top to bottom and ``n+1..2n`` are ``t_n..t_1`` bottom to top.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DomainError, GuardExceeded
from .exact_core import Matrix, minor
from .planar_network import DEFAULT_PATH_CAP, PlanarNetwork, _paths, _require_valid

DEFAULT_POSET_BOUND = 8

METHODS = ("TL", "lattice")


@dataclass(frozen=True, order=True)
class TLDiagram:
    """Noncrossing perfect matching of ``2n`` boundary points, arcs ``(a, b)`` with ``a < b``."""

    n: int
    arcs: tuple[tuple[int, int], ...]

    def endpoint(self, p: int) -> tuple[str, int]:
        """``("s", i)`` or ``("t", j)`` for boundary point ``p``."""
        return ("s", p) if p <= self.n else ("t", 2 * self.n + 1 - p)

    def labelled_arcs(self) -> list[tuple[str, str]]:
        out = []
        for a, b in self.arcs:
            ka, ia = self.endpoint(a)
            kb, ib = self.endpoint(b)
            out.append((f"{ka}{ia}", f"{kb}{ib}"))
        return out

    def __str__(self) -> str:
        return " ".join(f"{a}-{b}" for a, b in self.labelled_arcs())


def _matchings(points: tuple[int, ...]) -> list[tuple[tuple[int, int], ...]]:
    if not points:
        return [()]
    first = points[0]
    out = []
    for k in range(1, len(points), 2):
        inside, outside = points[1:k], points[k + 1:]
        for m_in in _matchings(inside):
            for m_out in _matchings(outside):
                out.append(tuple(sorted(((first, points[k]),) + m_in + m_out)))
    return out


@lru_cache(maxsize=None)
def tl_basis(n: int) -> tuple[TLDiagram, ...]:
    """All Catalan(n) noncrossing perfect matchings on ``2n`` points, sorted."""
    if n < 1:
        raise DomainError("n must be >= 1")
    return tuple(sorted(TLDiagram(n, m) for m in _matchings(tuple(range(1, 2 * n + 1)))))


def is_noncrossing(arcs: Iterable[tuple[int, int]]) -> bool:
    arcs = [tuple(sorted(a)) for a in arcs]
    return not any(a < c < b < d or c < a < d < b for (a, b), (c, d) in combinations(arcs, 2))


@dataclass(frozen=True)
class Coloring:
    """A subset ``I`` of ``[n]``; its complement carries the other color."""

    n: int
    I: tuple[int, ...]

    def __post_init__(self):
        I = tuple(sorted(set(self.I)))
        if self.n < 1 or any(not 1 <= i <= self.n for i in I):
            raise DomainError(f"coloring {I} is not a subset of [1..{self.n}]")
        object.__setattr__(self, "I", I)

    @classmethod
    def of(cls, n: int, I: Iterable[int]) -> Coloring:
        return cls(n, tuple(I))

    @property
    def complement(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.n + 1) if i not in self.I)

    def swapped(self) -> Coloring:
        return Coloring(self.n, self.complement)

    def canonical(self) -> Coloring:
        """The representative containing index 1; both describe the same product."""
        return self if 1 in self.I else self.swapped()

    def color(self, i: int) -> bool:
        return i in self.I

    def product(self, M: Matrix) -> Fraction:
        """``Delta_{I,I} * Delta_{Ibar,Ibar}`` evaluated on ``M``."""
        if M.shape != (self.n, self.n):
            raise DomainError(f"matrix must be {self.n} x {self.n}")
        return minor(M, self.I, self.I) * minor(M, self.complement, self.complement)

    def label(self) -> str:
        def d(idx: tuple[int, ...]) -> str:
            return "D{" + ",".join(map(str, idx)) + "}"

        a, b = self.I, self.complement
        if len(a) < len(b) or (len(a) == len(b) and a > b):
            a, b = b, a
        return d(a) + d(b)

    def __str__(self) -> str:
        return self.label()


def all_colorings(n: int) -> list[Coloring]:
    """One coloring per product, each containing index 1, ordered by ``I``."""
    rest = range(2, n + 1)
    out = [Coloring(n, (1,) + c) for k in range(n) for c in combinations(rest, k)]
    return sorted(out, key=lambda c: (-len(c.I), c.I))


def _arc_allowed(c: Coloring, D: TLDiagram, arc: tuple[int, int]) -> bool:
    (ka, ia), (kb, ib) = D.endpoint(arc[0]), D.endpoint(arc[1])
    same = c.color(ia) == c.color(ib)
    return same if ka != kb else not same


def tl_subset(c: Coloring) -> frozenset[TLDiagram]:
    """Diagrams all of whose arcs respect the coloring."""
    return frozenset(D for D in tl_basis(c.n) if all(_arc_allowed(c, D, a) for a in D.arcs))


def lattice_heights(c: Coloring) -> list[int]:
    h = [0]
    for i in range(1, c.n + 1):
        h.append(h[-1] + (1 if c.color(i) else -1))
    return h


def lattice_partition(c: Coloring) -> tuple[tuple[int, ...], ...]:
    """Steps grouped by the height interval they cover, blocks sorted by least element."""
    h = lattice_heights(c)
    blocks: dict[int, list[int]] = {}
    for i in range(1, c.n + 1):
        blocks.setdefault(min(h[i - 1], h[i]), []).append(i)
    return tuple(sorted(tuple(b) for b in blocks.values()))


def refines(p: Sequence[Sequence[int]], q: Sequence[Sequence[int]]) -> bool:
    """Every block of ``p`` lies inside a block of ``q``."""
    where = {i: k for k, block in enumerate(q) for i in block}
    return all(len({where[i] for i in block}) == 1 for block in p)


def _leq(c1: Coloring, c2: Coloring, method: str) -> bool:
    if method == "TL":
        return tl_subset(c1) <= tl_subset(c2)
    if method == "lattice":
        return refines(lattice_partition(c1), lattice_partition(c2))
    raise DomainError(f"unknown method {method!r}; use one of {METHODS}")


def compare(c1: Coloring, c2: Coloring, method: str = "TL") -> str:
    """``"<="``, ``">="``, ``"="`` or ``"incomparable"`` for ``P(I1)`` against ``P(I2)``."""
    if c1.n != c2.n:
        raise DomainError(f"colorings of different sizes {c1.n} and {c2.n}")
    a, b = _leq(c1, c2, method), _leq(c2, c1, method)
    if a and b:
        return "="
    if a:
        return "<="
    if b:
        return ">="
    return "incomparable"


@dataclass(frozen=True)
class Poset:
    """Products ordered by one criterion. ``relations`` holds every strict pair ``(lo, hi)``."""

    n: int
    method: str
    nodes: tuple[Coloring, ...]
    relations: tuple[tuple[Coloring, Coloring], ...]
    covers: tuple[tuple[Coloring, Coloring], ...]

    def key(self) -> tuple:
        """Criterion-independent description used to compare posets."""
        return (self.n, self.nodes, frozenset(self.relations))

    def inequalities(self) -> list[dict]:
        return [{"lhs": list(lo.I), "rhs": list(hi.I), "n": self.n} for lo, hi in self.relations]

    def to_json(self) -> str:
        return json.dumps(self.inequalities())

    def to_dot(self) -> str:
        lines = ["digraph poset {", "  rankdir=BT;"]
        for c in self.nodes:
            lines.append(f'  "{c.label()}";')
        for lo, hi in self.covers:
            lines.append(f'  "{lo.label()}" -> "{hi.label()}";')
        lines.append("}")
        return "\n".join(lines)

    def format(self) -> str:
        lines = [f"products: {len(self.nodes)}", f"relations: {len(self.relations)}"]
        lines += [f"{lo.label()} <= {hi.label()}" for lo, hi in self.relations]
        return "\n".join(lines)


def poset(n: int, method: str = "TL", bound: int | None = DEFAULT_POSET_BOUND) -> Poset:
    """All products ``P(I)`` for ``I`` in ``[n]`` with their strict relations and covers.

    Colorings with equal products (``I`` and its complement) are merged, so
    there are ``2^(n-1)`` nodes.
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    if bound is not None and n > bound:
        raise GuardExceeded(f"poset size n = {n} exceeds the bound {bound}")
    nodes = all_colorings(n)
    if method == "TL":
        keys = {c: tl_subset(c) for c in nodes}
        leq = lambda a, b: keys[a] <= keys[b]  # noqa: E731
    elif method == "lattice":
        keys = {c: lattice_partition(c) for c in nodes}
        leq = lambda a, b: refines(keys[a], keys[b])  # noqa: E731
    else:
        raise DomainError(f"unknown method {method!r}; use one of {METHODS}")
    strict = [(a, b) for a in nodes for b in nodes if a != b and leq(a, b) and not leq(b, a)]
    above: dict[Coloring, set[Coloring]] = {c: set() for c in nodes}
    for a, b in strict:
        above[a].add(b)
    covers = [(a, b) for a, b in strict if not any(b in above[m] for m in above[a])]
    return Poset(n, method, tuple(nodes), tuple(strict), tuple(covers))


def verify_inequality_on(M: Matrix, c1: Coloring, c2: Coloring) -> bool:
    """``P(I1) <= P(I2)`` evaluated exactly on ``M``."""
    return c1.product(M) <= c2.product(M)


def two_colored_family_weight(G: PlanarNetwork, c: Coloring, cap: int | None = DEFAULT_PATH_CAP) -> Fraction:
    """Weight of path families ``s_i -> t_i`` (all ``i``) where same-colored paths share no vertex.

    Enumerated explicitly; ``cap`` bounds the number of partial families.
    """
    if G.order != c.n:
        raise DomainError(f"network order {G.order} differs from coloring size {c.n}")
    _require_valid(G)
    out = G.out_edges()
    n = c.n
    visited = 0
    total = Fraction(0)

    def rec(i: int, used: dict[bool, frozenset], w: Fraction) -> None:
        nonlocal visited, total
        if i > n:
            total += w
            return
        col = c.color(i)
        for path, pw in _paths(out, G.sources[i - 1], G.sinks[i - 1], set(used[col])):
            visited += 1
            if cap is not None and visited > cap:
                raise GuardExceeded(f"family enumeration exceeded the cap {cap}")
            nxt = dict(used)
            nxt[col] = used[col] | frozenset(path)
            rec(i + 1, nxt, w * pw)

    rec(1, {True: frozenset(), False: frozenset()}, Fraction(1))
    return total


def parse_coloring(n: int, text: str) -> Coloring:
    """``"1,3"`` (or ``""`` for the empty set) as a coloring of ``[n]``."""
    text = text.strip().strip("{}")
    try:
        I = tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError as exc:
        raise DomainError(f"not an index set: {text!r}") from exc
    return Coloring(n, I)


__all__ = [
    "Coloring",
    "DEFAULT_POSET_BOUND",
    "METHODS",
    "Poset",
    "TLDiagram",
    "all_colorings",
    "compare",
    "is_noncrossing",
    "lattice_heights",
    "lattice_partition",
    "parse_coloring",
    "poset",
    "refines",
    "tl_basis",
    "tl_subset",
    "two_colored_family_weight",
    "verify_inequality_on",
]
