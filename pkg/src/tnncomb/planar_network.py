"""Weighted planar networks and their weight matrices.

A network is embedded in the plane: every vertex has rational coordinates,
edges are straight segments pointing strictly rightwards, sources sit on
the left boundary and sinks on the right one, ``s_1`` / ``t_1`` on top.
Planarity is then a finite geometric check.

Vertex ids are strings. Networks built here use ``s1..sn`` for sources,
``t1..tn`` for sinks and ``v0, v1, ...`` for internal vertices.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterator, Sequence

from .errors import DomainError, GuardExceeded, InvalidNetworkError
from .exact_core import IndexSet, Matrix, neville_factorize
from .rational import format_rat, to_rat

DEFAULT_PATH_CAP = 10**6

Point = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class Vertex:
    id: str
    x: Fraction
    y: Fraction


@dataclass(frozen=True)
class Edge:
    tail: str
    head: str
    weight: Fraction


@dataclass(frozen=True)
class Validation:
    """Result of :meth:`PlanarNetwork.validate`; falsy when a rule is broken."""

    ok: bool
    violation: str | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True, eq=False)
class PlanarNetwork:
    order: int
    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]
    sources: tuple[str, ...]
    sinks: tuple[str, ...]

    @classmethod
    def build(cls, order: int, vertices, edges, sources, sinks) -> PlanarNetwork:
        """Coerce plain tuples ``(id, x, y)`` / ``(tail, head, weight)`` into a network."""
        vs = tuple(v if isinstance(v, Vertex) else Vertex(str(v[0]), to_rat(v[1]), to_rat(v[2])) for v in vertices)
        es = tuple(e if isinstance(e, Edge) else Edge(str(e[0]), str(e[1]), to_rat(e[2])) for e in edges)
        return cls(order, vs, es, tuple(map(str, sources)), tuple(map(str, sinks)))

    def position(self, vid: str) -> Point:
        v = self._index()[vid]
        return v.x, v.y

    def _index(self) -> dict[str, Vertex]:
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {v.id: v for v in self.vertices}
            object.__setattr__(self, "_idx", idx)
        return idx

    def out_edges(self) -> dict[str, list[Edge]]:
        out: dict[str, list[Edge]] = defaultdict(list)
        for e in self.edges:
            out[e.tail].append(e)
        return out

    def topological_order(self) -> list[str]:
        """Vertices by increasing ``x``; valid because every edge points right."""
        return [v.id for v in sorted(self.vertices, key=lambda v: (v.x, -v.y, v.id))]

    def validate(self) -> Validation:
        return validate(self)

    def weight_matrix(self, path_cap: int | None = DEFAULT_PATH_CAP) -> Matrix:
        return weight_matrix(self, path_cap)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PlanarNetwork):
            return NotImplemented
        return (self.order, self.vertices, self.edges, self.sources, self.sinks) == (
            other.order, other.vertices, other.edges, other.sources, other.sinks
        )

    def __hash__(self) -> int:
        return hash((self.order, self.vertices, self.edges, self.sources, self.sinks))


# --- validation -------------------------------------------------------------


def _orient(a: Point, b: Point, c: Point) -> int:
    v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (v > 0) - (v < 0)


def _on_segment(a: Point, b: Point, p: Point) -> bool:
    """``p`` on the closed segment ``ab``, given the three are collinear."""
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def _segments_meet(p1: Point, p2: Point, q1: Point, q2: Point) -> bool:
    o1, o2 = _orient(p1, p2, q1), _orient(p1, p2, q2)
    o3, o4 = _orient(q1, q2, p1), _orient(q1, q2, p2)
    if o1 != o2 and o3 != o4 and 0 not in (o1, o2, o3, o4):
        return True
    return (
        (o1 == 0 and _on_segment(p1, p2, q1))
        or (o2 == 0 and _on_segment(p1, p2, q2))
        or (o3 == 0 and _on_segment(q1, q2, p1))
        or (o4 == 0 and _on_segment(q1, q2, p2))
    )


def _edges_cross(G: PlanarNetwork, e: Edge, f: Edge) -> bool:
    """True when the segments of ``e`` and ``f`` meet away from a shared endpoint."""
    shared = {e.tail, e.head} & {f.tail, f.head}
    pe = (G.position(e.tail), G.position(e.head))
    pf = (G.position(f.tail), G.position(f.head))
    if not shared:
        return _segments_meet(*pe, *pf)
    if len(shared) == 2:
        return True
    (v,) = shared
    other_e = e.head if e.tail == v else e.tail
    other_f = f.head if f.tail == v else f.tail
    c = G.position(v)
    a, b = G.position(other_e), G.position(other_f)
    if _orient(c, a, b) != 0:
        return False
    # collinear through c: they overlap iff both leave c on the same side
    return (a[0] - c[0] > 0) == (b[0] - c[0] > 0)


def validate(G: PlanarNetwork) -> Validation:
    """Check every structural rule and report the first one broken.

    Violation names: ``"order"``, ``"duplicate vertex"``, ``"unknown vertex"``,
    ``"negative weight"``, ``"source in-degree"``, ``"sink out-degree"``,
    ``"edge direction"``, ``"boundary"``, ``"vertex on edge"``,
    ``"edge crossing"``.
    """
    n = G.order
    if n < 1 or len(G.sources) != n or len(G.sinks) != n:
        return Validation(False, "order", f"need {n} sources and {n} sinks")
    ids = [v.id for v in G.vertices]
    if len(set(ids)) != len(ids):
        return Validation(False, "duplicate vertex", "vertex ids must be unique")
    if len(set(G.sources) | set(G.sinks)) != 2 * n:
        return Validation(False, "duplicate vertex", "sources and sinks must be distinct vertices")
    known = set(ids)
    for vid in (*G.sources, *G.sinks):
        if vid not in known:
            return Validation(False, "unknown vertex", vid)
    for e in G.edges:
        if e.tail not in known or e.head not in known:
            return Validation(False, "unknown vertex", f"{e.tail} -> {e.head}")
        if e.weight < 0:
            return Validation(False, "negative weight", f"{e.tail} -> {e.head}: {format_rat(e.weight)}")
    sources, sinks = set(G.sources), set(G.sinks)
    for e in G.edges:
        if e.head in sources:
            return Validation(False, "source in-degree", f"{e.tail} -> {e.head}")
        if e.tail in sinks:
            return Validation(False, "sink out-degree", f"{e.tail} -> {e.head}")
        if G.position(e.head)[0] <= G.position(e.tail)[0]:
            return Validation(False, "edge direction", f"{e.tail} -> {e.head} does not increase x")
    xs = [v.x for v in G.vertices]
    left, right = min(xs), max(xs)
    for vid, want in [*((s, left) for s in G.sources), *((t, right) for t in G.sinks)]:
        if G.position(vid)[0] != want:
            return Validation(False, "boundary", f"{vid} is not on its boundary line")
    for v in G.vertices:
        if v.id not in sources and v.id not in sinks and v.x in (left, right):
            return Validation(False, "boundary", f"internal vertex {v.id} on a boundary line")
    for col in (G.sources, G.sinks):
        ys = [G.position(v)[1] for v in col]
        if any(a <= b for a, b in zip(ys, ys[1:])):
            return Validation(False, "boundary", "terminals must be listed top to bottom")
    for e in G.edges:
        a, b = G.position(e.tail), G.position(e.head)
        for v in G.vertices:
            if v.id in (e.tail, e.head):
                continue
            p = (v.x, v.y)
            if _orient(a, b, p) == 0 and _on_segment(a, b, p):
                return Validation(False, "vertex on edge", f"{v.id} lies on {e.tail} -> {e.head}")
    for i, e in enumerate(G.edges):
        for f in G.edges[i + 1:]:
            if _edges_cross(G, e, f):
                return Validation(False, "edge crossing", f"{e.tail} -> {e.head} meets {f.tail} -> {f.head}")
    return Validation(True)


def _require_valid(G: PlanarNetwork) -> None:
    check = validate(G)
    if not check:
        raise InvalidNetworkError(f"{check.violation}: {check.detail}")


# --- evaluation -------------------------------------------------------------


def weight_matrix(G: PlanarNetwork, path_cap: int | None = DEFAULT_PATH_CAP) -> Matrix:
    """Entry ``(i, j)`` is the total weight of all paths ``s_i -> t_j``.

    Computed by dynamic programming in topological order. The number of
    paths per pair is tracked alongside and must stay within ``path_cap``.
    """
    _require_valid(G)
    order = G.topological_order()
    out = G.out_edges()
    rows = []
    for i, s in enumerate(G.sources, start=1):
        weight: dict[str, Fraction] = defaultdict(Fraction)
        count: dict[str, int] = defaultdict(int)
        weight[s], count[s] = Fraction(1), 1
        for v in order:
            if not count[v]:
                continue
            for e in out.get(v, ()):
                weight[e.head] += weight[v] * e.weight
                count[e.head] += count[v]
        row = []
        for j, t in enumerate(G.sinks, start=1):
            if path_cap is not None and count[t] > path_cap:
                raise GuardExceeded(f"{count[t]} paths from s{i} to t{j} exceed the cap {path_cap}")
            row.append(weight[t])
        rows.append(row)
    return Matrix(rows)


def path_matrix(G: PlanarNetwork, path_cap: int | None = DEFAULT_PATH_CAP) -> Matrix:
    """Path counts, i.e. the weight matrix with every weight set to 1."""
    ones = PlanarNetwork(G.order, G.vertices, tuple(Edge(e.tail, e.head, Fraction(1)) for e in G.edges), G.sources, G.sinks)
    return weight_matrix(ones, path_cap)


def _paths(out: dict[str, list[Edge]], start: str, goal: str, blocked: set[str]) -> Iterator[tuple[list[str], Fraction]]:
    if start in blocked:
        return
    stack = [(start, [start], Fraction(1))]
    while stack:
        v, path, w = stack.pop()
        if v == goal:
            yield path, w
            continue
        for e in out.get(v, ()):
            if e.head not in blocked and e.weight:
                stack.append((e.head, path + [e.head], w * e.weight))


def disjoint_families(
    G: PlanarNetwork, I: Sequence[int], J: Sequence[int], cap: int | None = DEFAULT_PATH_CAP
) -> Iterator[tuple[tuple[tuple[str, ...], ...], Fraction]]:
    """Yield ``(paths, weight)`` for every vertex-disjoint family joining ``s_I[k]`` to ``t_J[k]``.

    Enumeration is explicit; ``cap`` bounds the number of partial paths
    visited. Edges of weight zero are skipped since they contribute nothing.
    """
    _require_valid(G)
    I, J = _check_terminals(G, I, J)
    out = G.out_edges()
    visited = 0

    def rec(k: int, used: set[str], acc: list[tuple[str, ...]], w: Fraction):
        nonlocal visited
        if k == len(I):
            yield tuple(acc), w
            return
        s, t = G.sources[I[k] - 1], G.sinks[J[k] - 1]
        for path, pw in _paths(out, s, t, used):
            visited += 1
            if cap is not None and visited > cap:
                raise GuardExceeded(f"path-family enumeration exceeded the cap {cap}")
            acc.append(tuple(path))
            yield from rec(k + 1, used | set(path), acc, w * pw)
            acc.pop()

    yield from rec(0, set(), [], Fraction(1))


def disjoint_family_weight(G: PlanarNetwork, I: Sequence[int], J: Sequence[int], cap: int | None = DEFAULT_PATH_CAP) -> Fraction:
    """Total weight of vertex-disjoint path families from sources ``I`` to sinks ``J``."""
    return sum((w for _, w in disjoint_families(G, I, J, cap)), Fraction(0))


def _check_terminals(G: PlanarNetwork, I: Sequence[int], J: Sequence[int]) -> tuple[IndexSet, IndexSet]:
    I, J = tuple(I), tuple(J)
    if len(I) != len(J):
        raise DomainError(f"index sets have different sizes {len(I)} and {len(J)}")
    for idx in (I, J):
        if list(idx) != sorted(set(idx)):
            raise DomainError(f"index set {idx} must be strictly increasing")
        if idx and not (1 <= idx[0] and idx[-1] <= G.order):
            raise DomainError(f"index set {idx} out of range 1..{G.order}")
    return I, J


# --- construction -------------------------------------------------------------


def _row_y(n: int, i: int) -> Fraction:
    return Fraction(n - i)


class _Builder:
    """Accumulates vertices and edges with fresh internal ids."""

    def __init__(self, n: int):
        self.n = n
        self.vertices: dict[str, Vertex] = {}
        self.edges: list[Edge] = []
        self.counter = 0

    def vertex(self, x, y, vid: str | None = None) -> str:
        if vid is None:
            vid = f"v{self.counter}"
            self.counter += 1
        self.vertices[vid] = Vertex(vid, Fraction(x), Fraction(y))
        return vid

    def edge(self, a: str, b: str, w) -> None:
        self.edges.append(Edge(a, b, to_rat(w)))

    def network(self, sources: Sequence[str], sinks: Sequence[str]) -> PlanarNetwork:
        return PlanarNetwork(self.n, tuple(self.vertices.values()), tuple(self.edges), tuple(sources), tuple(sinks))


def _terminals(b: _Builder, width) -> tuple[list[str], list[str]]:
    n = b.n
    s = [b.vertex(0, _row_y(n, i), f"s{i}") for i in range(1, n + 1)]
    t = [b.vertex(width, _row_y(n, i), f"t{i}") for i in range(1, n + 1)]
    return s, t


def identity_network(n: int) -> PlanarNetwork:
    """``n`` parallel horizontal edges of weight 1."""
    return elementary_network("diag", n, d=[1] * n)


def elementary_network(kind: str, n: int, j: int | None = None, c=None, d: Sequence | None = None) -> PlanarNetwork:
    """Network of a single elementary factor.

    ``kind="diag"`` with positive ``d`` gives ``diag(d)``; ``"lower"`` gives
    ``I + c E_{j+1,j}`` and ``"upper"`` gives ``I + c E_{j,j+1}``, with
    ``c >= 0`` and ``1 <= j < n``.
    """
    if n < 1:
        raise DomainError("order must be >= 1")
    b = _Builder(n)
    s, t = _terminals(b, 3)
    if kind == "diag":
        if d is None or len(d) != n:
            raise DomainError(f"diag needs {n} entries")
        d = [to_rat(x) for x in d]
        if any(x <= 0 for x in d):
            raise DomainError("diagonal entries must be positive")
        for i in range(n):
            b.edge(s[i], t[i], d[i])
        return b.network(s, t)
    if kind not in ("lower", "upper"):
        raise DomainError(f"unknown elementary kind {kind!r}")
    if j is None or not 1 <= j < n:
        raise DomainError(f"j must satisfy 1 <= j < {n}")
    c = to_rat(c if c is not None else 0)
    if c < 0:
        raise DomainError(f"elementary parameter must be >= 0, got {format_rat(c)}")
    # the diagonal leaves row `start` at x=1 and lands on row `end` at x=2
    start, end = (j + 1, j) if kind == "lower" else (j, j + 1)
    for i in range(1, n + 1):
        if i == start:
            a = b.vertex(1, _row_y(n, i))
            b.edge(s[i - 1], a, 1)
            b.edge(a, t[i - 1], 1)
        elif i == end:
            z = b.vertex(2, _row_y(n, i))
            b.edge(s[i - 1], z, 1)
            b.edge(z, t[i - 1], 1)
        else:
            b.edge(s[i - 1], t[i - 1], 1)
    if c:
        ids = list(b.vertices)
        a = next(v for v in ids if b.vertices[v].x == 1)
        z = next(v for v in ids if b.vertices[v].x == 2)
        b.edge(a, z, c)
    return b.network(s, t)


def concatenate(G1: PlanarNetwork, G2: PlanarNetwork) -> PlanarNetwork:
    """Glue the sinks of ``G1`` to the sources of ``G2``; weight matrices multiply.

    Terminals at equal heights are identified. Otherwise ``G2`` is shifted
    one unit further right and joined by weight-1 bridge edges.
    """
    if G1.order != G2.order:
        raise DomainError(f"cannot concatenate networks of orders {G1.order} and {G2.order}")
    n = G1.order
    x1 = max(v.x for v in G1.vertices)
    x2 = min(v.x for v in G2.vertices)
    same_height = all(G1.position(t)[1] == G2.position(s)[1] for t, s in zip(G1.sinks, G2.sources))
    shift = x1 - x2 + (0 if same_height else 1)

    b = _Builder(n)
    rename1: dict[str, str] = {}
    rename2: dict[str, str] = {}
    src1 = set(G1.sources)
    for v in G1.vertices:
        if v.id in src1:
            rename1[v.id] = b.vertex(v.x, v.y, f"s{G1.sources.index(v.id) + 1}")
    for v in G1.vertices:
        if v.id not in src1:
            rename1[v.id] = b.vertex(v.x, v.y)
    src2, snk2 = set(G2.sources), set(G2.sinks)
    for v in G2.vertices:
        if v.id in snk2:
            continue
        if v.id in src2 and same_height:
            rename2[v.id] = rename1[G1.sinks[G2.sources.index(v.id)]]
        else:
            rename2[v.id] = b.vertex(v.x + shift, v.y)
    for v in G2.vertices:
        if v.id in snk2:
            rename2[v.id] = b.vertex(v.x + shift, v.y, f"t{G2.sinks.index(v.id) + 1}")
    for e in G1.edges:
        b.edge(rename1[e.tail], rename1[e.head], e.weight)
    if not same_height:
        for t, s in zip(G1.sinks, G2.sources):
            b.edge(rename1[t], rename2[s], 1)
    for e in G2.edges:
        b.edge(rename2[e.tail], rename2[e.head], e.weight)
    return b.network([f"s{i}" for i in range(1, n + 1)], [f"t{i}" for i in range(1, n + 1)])


def concatenate_all(networks: Sequence[PlanarNetwork]) -> PlanarNetwork:
    if not networks:
        raise DomainError("nothing to concatenate")
    out = networks[0]
    for G in networks[1:]:
        out = concatenate(out, G)
    return out


def network_from_tnn(M: Matrix) -> PlanarNetwork:
    """A network whose weight matrix is the invertible TNN matrix ``M``.

    The elementary factors from Neville elimination are realized one by one
    and concatenated in order.
    """
    fac = neville_factorize(M)
    n = fac.n
    parts = [elementary_network(f.kind, n, f.j, f.c) for f in fac.lower]
    parts.append(elementary_network("diag", n, d=fac.diagonal))
    parts += [elementary_network(f.kind, n, f.j, f.c) for f in fac.upper]
    return concatenate_all(parts)


def vandermonde_matrix(x: Sequence) -> Matrix:
    """Row ``i`` holds the ``(i-1)``-th powers of the points."""
    x = [to_rat(v) for v in x]
    n = len(x)
    return Matrix([[xj**i for xj in x] for i in range(n)])


def vandermonde_network(x: Sequence) -> PlanarNetwork:
    """Network realizing :func:`vandermonde_matrix` for ``0 <= x_1 < ... < x_n``."""
    x = [to_rat(v) for v in x]
    if not x:
        raise DomainError("need at least one point")
    if x[0] < 0 or any(a >= b for a, b in zip(x, x[1:])):
        raise DomainError("points must satisfy 0 <= x_1 < x_2 < ... < x_n")
    return network_from_tnn(vandermonde_matrix(x))


def _strip(n: int, k: int) -> PlanarNetwork:
    """All rows pass straight through; rows ``i > k`` also step up to row ``i - 1``."""
    b = _Builder(n)
    s, t = _terminals(b, 3)
    a = [b.vertex(1, _row_y(n, i)) for i in range(1, n + 1)]
    z = [b.vertex(2, _row_y(n, i)) for i in range(1, n + 1)]
    for i in range(n):
        b.edge(s[i], a[i], 1)
        b.edge(a[i], z[i], 1)
        b.edge(z[i], t[i], 1)
    for i in range(k + 1, n):
        b.edge(a[i], z[i - 1], 1)
    return b.network(s, t)


def binomial_network(n: int) -> PlanarNetwork:
    """Finite staircase whose path matrix is ``[binom(i, j)]`` for ``0 <= i, j < n``."""
    if n < 1:
        raise DomainError("order must be >= 1")
    if n == 1:
        return identity_network(1)
    return concatenate_all([_strip(n, k) for k in range(n - 2, -1, -1)])


def binomial_matrix(n: int) -> Matrix:
    return Matrix([[comb(i, j) for j in range(n)] for i in range(n)])


# --- random networks ------------------------------------------------------------


def _random_weight(rng, zero_prob: float = 0.0, max_num: int = 5, max_den: int = 3) -> Fraction:
    if zero_prob and rng.random() < zero_prob:
        return Fraction(0)
    return Fraction(rng.randint(1, max_num), rng.randint(1, max_den))


def random_network(rng, n: int, max_edges: int = 12, internal: int | None = None, attempts: int = 200) -> PlanarNetwork:
    """A random valid network with at most ``max_edges`` edges.

    Internal vertices get random grid coordinates; candidate edges are kept
    only when they point right and cross nothing already drawn.
    """
    if internal is None:
        internal = rng.randint(0, 2 * n)
    b = _Builder(n)
    width = 4
    s, t = _terminals(b, width)
    used = {(b.vertices[v].x, b.vertices[v].y) for v in b.vertices}
    for _ in range(internal):
        for _ in range(20):
            pt = (Fraction(rng.randint(1, 3 * width - 1), 3), Fraction(rng.randint(0, 3 * (n - 1) + 2) - 1, 3))
            if pt not in used:
                used.add(pt)
                b.vertex(*pt)
                break
    G = b.network(s, t)
    srcs, snks = set(s), set(t)
    edges: list[Edge] = []
    ids = list(b.vertices)
    for _ in range(attempts):
        if len(edges) >= max_edges:
            break
        u, v = rng.sample(ids, 2)
        pu, pv = G.position(u), G.position(v)
        if pu[0] > pv[0]:
            u, v, pu, pv = v, u, pv, pu
        if pu[0] == pv[0] or v in srcs or u in snks:
            continue
        cand = Edge(u, v, _random_weight(rng))
        if any({e.tail, e.head} == {u, v} for e in edges):
            continue
        if any(w not in (u, v) and _orient(pu, pv, G.position(w)) == 0 and _on_segment(pu, pv, G.position(w)) for w in ids):
            continue
        if any(_edges_cross(G, cand, e) for e in edges):
            continue
        edges.append(cand)
    return PlanarNetwork(n, G.vertices, tuple(edges), G.sources, G.sinks)


def random_elementary_word(rng, n: int, length: int, invertible: bool = True) -> list[PlanarNetwork]:
    """Random elementary networks; a positive diagonal is included when ``invertible``."""
    parts = []
    for _ in range(length):
        if n > 1:
            parts.append(elementary_network(rng.choice(("lower", "upper")), n, rng.randint(1, n - 1), _random_weight(rng)))
    if invertible or n == 1:
        parts.insert(rng.randint(0, len(parts)), elementary_network("diag", n, d=[_random_weight(rng) for _ in range(n)]))
    return parts


def random_tnn_network(rng, n: int, length: int | None = None) -> PlanarNetwork:
    """Concatenation of a random elementary word, so its weight matrix is invertible TNN."""
    if length is None:
        length = rng.randint(0, n * (n - 1) + 1)
    return concatenate_all(random_elementary_word(rng, n, length))


def random_tnn_matrix(rng, n: int, length: int | None = None) -> Matrix:
    """Invertible TNN matrix, as the product of a random elementary word."""
    if length is None:
        length = rng.randint(0, n * (n - 1) + 1)
    M = Matrix.identity(n)
    for G in random_elementary_word(rng, n, length):
        M = M @ weight_matrix(G)
    return M


# --- serialization ----------------------------------------------------------------


def to_json_obj(G: PlanarNetwork) -> dict:
    return {
        "order": G.order,
        "vertices": [{"id": v.id, "x": format_rat(v.x), "y": format_rat(v.y)} for v in G.vertices],
        "edges": [{"from": e.tail, "to": e.head, "weight": format_rat(e.weight)} for e in G.edges],
        "sources": list(G.sources),
        "sinks": list(G.sinks),
    }


def from_json_obj(obj: dict) -> PlanarNetwork:
    try:
        return PlanarNetwork.build(
            int(obj["order"]),
            [(v["id"], str(v["x"]), str(v["y"])) for v in obj["vertices"]],
            [(e["from"], e["to"], str(e["weight"])) for e in obj["edges"]],
            obj["sources"],
            obj["sinks"],
        )
    except (KeyError, TypeError) as exc:
        raise DomainError(f"malformed network JSON: {exc}") from exc


def to_json(G: PlanarNetwork) -> str:
    return json.dumps(to_json_obj(G), indent=2)


def from_json(text: str) -> PlanarNetwork:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"invalid JSON: {exc}") from exc
    return from_json_obj(obj)


def to_dot(G: PlanarNetwork) -> str:
    """Graphviz rendering with pinned coordinates and weights as edge labels."""
    lines = ["digraph network {", "  rankdir=LR;", "  node [shape=circle, fixedsize=true, width=0.35];"]
    for v in G.vertices:
        label = v.id if v.id in G.sources or v.id in G.sinks else ""
        lines.append(f'  "{v.id}" [label="{label}", pos="{float(v.x):g},{float(v.y):g}!"];')
    for e in G.edges:
        lines.append(f'  "{e.tail}" -> "{e.head}" [label="{format_rat(e.weight)}"];')
    lines.append("}")
    return "\n".join(lines)


__all__ = [
    "DEFAULT_PATH_CAP",
    "Edge",
    "PlanarNetwork",
    "Validation",
    "Vertex",
    "binomial_matrix",
    "binomial_network",
    "concatenate",
    "concatenate_all",
    "disjoint_families",
    "disjoint_family_weight",
    "elementary_network",
    "from_json",
    "from_json_obj",
    "identity_network",
    "network_from_tnn",
    "path_matrix",
    "random_elementary_word",
    "random_network",
    "random_tnn_matrix",
    "random_tnn_network",
    "to_dot",
    "to_json",
    "to_json_obj",
    "validate",
    "vandermonde_matrix",
    "vandermonde_network",
    "weight_matrix",
]
