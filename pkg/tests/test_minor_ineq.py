from __future__ import annotations

import json
import random
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tnncomb.errors import DomainError, GuardExceeded
from tnncomb.exact_core import Matrix
from tnncomb.minor_ineq import (
    Coloring,
    all_colorings,
    compare,
    is_noncrossing,
    lattice_heights,
    lattice_partition,
    parse_coloring,
    poset,
    refines,
    tl_basis,
    tl_subset,
    two_colored_family_weight,
    verify_inequality_on,
)
from tnncomb.planar_network import network_from_tnn, random_network, random_tnn_matrix, weight_matrix

M21 = Matrix([[5, 6, 3, 0], [4, 7, 4, 0], [1, 4, 4, 2], [0, 1, 2, 3]])


def all_matchings(points):
    """Every perfect matching, crossing or not."""
    if not points:
        yield ()
        return
    a, rest = points[0], points[1:]
    for k, b in enumerate(rest):
        for m in all_matchings(rest[:k] + rest[k + 1:]):
            yield ((a, b),) + m


def crosses(x, y) -> bool:
    (a, b), (c, d) = sorted(x), sorted(y)
    return (a < c < b) != (a < d < b)


def colorings_strategy(max_n: int = 6):
    return st.integers(1, max_n).flatmap(
        lambda n: st.tuples(st.just(n), st.sets(st.integers(1, n)))
    ).map(lambda t: Coloring(t[0], tuple(t[1])))


# --- Temperley-Lieb basis ----------------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 11))
def test_catalan_counts(n):
    assert len(tl_basis(n)) == comb(2 * n, n) // (n + 1)


@pytest.mark.parametrize("n", range(1, 6))
def test_basis_matches_brute_force_filter(n):
    brute = {
        tuple(sorted(m))
        for m in all_matchings(tuple(range(1, 2 * n + 1)))
        if not any(crosses(x, y) for i, x in enumerate(m) for y in m[i + 1:])
    }
    assert {D.arcs for D in tl_basis(n)} == brute
    assert all(is_noncrossing(D.arcs) for D in tl_basis(n))


def test_diagram_labels():
    assert str(tl_basis(1)[0]) == "s1-t1"
    D = next(D for D in tl_basis(3) if D.arcs == ((1, 6), (2, 5), (3, 4)))
    assert D.endpoint(4) == ("t", 3)
    assert str(D) == "s1-t1 s2-t2 s3-t3"
    assert D.labelled_arcs()[0] == ("s1", "t1")


# --- subsets ---------------------------------------------------------------------------------


def test_tl_subset_examples():
    assert [str(D) for D in tl_subset(Coloring(1, (1,)))] == ["s1-t1"]
    full = tl_subset(Coloring(3, (1, 2, 3)))
    # all one color: no source-source or sink-sink arcs allowed, only the identity diagram
    assert len(full) == 1
    assert tl_subset(Coloring(3, (1, 3))) == tl_subset(Coloring(3, (2,)))


@settings(max_examples=60, deadline=None)
@given(colorings_strategy())
def test_complement_symmetry(c):
    assert tl_subset(c) == tl_subset(c.swapped())
    assert lattice_partition(c) == lattice_partition(c.swapped())


def test_lattice_examples():
    assert lattice_partition(Coloring(2, (1, 2))) == ((1,), (2,))
    assert lattice_partition(Coloring(2, (1,))) == ((1, 2),)
    assert lattice_heights(Coloring(3, (1, 3))) == [0, 1, 0, 1]
    assert lattice_partition(Coloring(3, (1, 3))) == ((1, 2, 3),)
    assert refines(((1,), (2,)), ((1, 2),))
    assert not refines(((1, 2),), ((1,), (2,)))


@pytest.mark.parametrize("n", range(1, 7))
def test_two_criteria_agree(n):
    assert poset(n, "TL").key() == poset(n, "lattice").key()


# --- comparisons and posets -----------------------------------------------------------------


def test_compare_examples():
    c = lambda *I: Coloring(3, I)  # noqa: E731
    assert compare(c(1), c(1, 3)) == "<="
    assert compare(c(1, 3), c(1)) == ">="
    assert compare(c(1, 2), c(1, 2)) == "="
    assert compare(c(1, 2), c(1)) == "incomparable"
    assert compare(c(1, 2), c(1), "lattice") == "incomparable"
    with pytest.raises(DomainError):
        compare(c(1), Coloring(2, (1,)))
    with pytest.raises(DomainError):
        compare(c(1), c(2), "other")


def test_small_posets():
    p1 = poset(1)
    assert len(p1.nodes) == 1 and not p1.relations
    p2 = poset(2)
    assert [x.I for x in p2.nodes] == [(1, 2), (1,)]
    assert [(lo.I, hi.I) for lo, hi in p2.relations] == [((1, 2), (1,))]
    p3 = poset(3)
    assert len(p3.nodes) == 4 and len(p3.relations) == 5
    assert len(p3.covers) == 4
    bottom = Coloring(3, (1, 2, 3))
    assert sum(1 for lo, _ in p3.relations if lo == bottom) == 3


def test_poset_outputs():
    p3 = poset(3)
    ineqs = json.loads(p3.to_json())
    assert {"lhs": [1, 2, 3], "rhs": [1, 3], "n": 3} in ineqs
    dot = p3.to_dot()
    assert dot.startswith("digraph poset") and dot.count("->") == len(p3.covers)
    assert p3.format().splitlines()[:2] == ["products: 4", "relations: 5"]


def test_poset_guards():
    with pytest.raises(GuardExceeded):
        poset(9)
    with pytest.raises(DomainError):
        poset(0)


def test_all_colorings_are_canonical():
    for n in range(1, 7):
        cs = all_colorings(n)
        assert len(cs) == 2 ** (n - 1)
        assert all(1 in c.I and c.canonical() == c for c in cs)


def test_labels():
    assert Coloring(3, (1, 3)).label() == "D{1,3}D{2}"
    assert Coloring(3, (2,)).label() == "D{1,3}D{2}"
    assert Coloring(2, (2,)).label() == "D{1}D{2}"
    assert Coloring(3, (1, 2, 3)).label() == "D{1,2,3}D{}"


def test_parse_coloring():
    assert parse_coloring(3, "{1,3}") == Coloring(3, (1, 3))
    assert parse_coloring(3, "") == Coloring(3, ())
    with pytest.raises(DomainError):
        parse_coloring(3, "1,x")
    with pytest.raises(DomainError):
        parse_coloring(3, "4")


# --- numeric checks ------------------------------------------------------------------------------


def test_verify_on_named_matrices():
    lo, hi = Coloring(3, (1,)), Coloring(3, (1, 3))
    assert verify_inequality_on(Matrix([[5, 6, 3], [4, 7, 4], [1, 4, 4]]), lo, hi)
    for a, b in poset(4).relations:
        assert verify_inequality_on(M21, a, b)
        assert verify_inequality_on(Matrix.identity(4), a, b)


def test_soundness_on_random_tnn():
    rng = random.Random(404)
    for n in (2, 3, 4):
        rels = poset(n).relations
        for _ in range(60):
            M = random_tnn_matrix(rng, n)
            assert all(verify_inequality_on(M, a, b) for a, b in rels)


def test_incomparable_pair_has_both_directions_violated():
    # The incomparable pair of n = 3 must fail in each direction on some TNN matrix.
    a, b = Coloring(3, (1, 2)), Coloring(3, (1,))
    rng = random.Random(5)
    seen = set()
    for _ in range(400):
        M = random_tnn_matrix(rng, 3)
        pa, pb = a.product(M), b.product(M)
        if pa < pb:
            seen.add("<")
        elif pa > pb:
            seen.add(">")
        if len(seen) == 2:
            break
    assert seen == {"<", ">"}


def test_two_colored_families_give_products():
    rng = random.Random(12)
    for _ in range(25):
        n = rng.randint(1, 3)
        G = random_network(rng, n)
        W = weight_matrix(G)
        for c in all_colorings(n):
            assert two_colored_family_weight(G, c) == c.product(W)
    G = network_from_tnn(M21)
    assert two_colored_family_weight(G, Coloring(4, (1, 3))) == Coloring(4, (1, 3)).product(M21)
