from __future__ import annotations

import json
import random
from fractions import Fraction as F
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tnncomb.errors import DomainError, GuardExceeded, InvalidNetworkError
from tnncomb.exact_core import Matrix, is_totally_nonnegative, is_totally_positive, minor
from tnncomb.planar_network import (
    PlanarNetwork,
    binomial_matrix,
    binomial_network,
    concatenate,
    concatenate_all,
    disjoint_families,
    disjoint_family_weight,
    elementary_network,
    from_json,
    identity_network,
    network_from_tnn,
    path_matrix,
    random_elementary_word,
    random_network,
    random_tnn_matrix,
    to_dot,
    to_json,
    validate,
    vandermonde_matrix,
    vandermonde_network,
    weight_matrix,
)

M21 = Matrix([[5, 6, 3, 0], [4, 7, 4, 0], [1, 4, 4, 2], [0, 1, 2, 3]])
A22 = Matrix([[1, 0, 0, 0], [1, 1, 0, 0], [1, 1, 1, 0], [1, 1, 1, 1]])
B22 = Matrix([[1, 0, 0, 0], [2, 1, 0, 0], [3, 2, 1, 0], [4, 3, 2, 1]])


def brute_weight_matrix(G: PlanarNetwork) -> Matrix:
    """Sum of path weights by naive recursion over edges."""
    out: dict[str, list] = {}
    for e in G.edges:
        out.setdefault(e.tail, []).append(e)

    def total(v: str, goal: str) -> F:
        if v == goal:
            return F(1)
        return sum((e.weight * total(e.head, goal) for e in out.get(v, [])), F(0))

    return Matrix([[total(s, t) for t in G.sinks] for s in G.sources])


def two_edge_net(edges, extra=()) -> PlanarNetwork:
    vs = [("s1", 0, 1), ("s2", 0, 0), ("t1", 3, 1), ("t2", 3, 0), *extra]
    return PlanarNetwork.build(2, vs, edges, ["s1", "s2"], ["t1", "t2"])


# --- validation -----------------------------------------------------------------


def test_valid_examples():
    assert validate(elementary_network("diag", 4, d=[1, 1, 1, 1]))
    assert validate(two_edge_net([("s1", "t1", 1), ("s2", "t2", 1)]))


@pytest.mark.parametrize(
    "edges, extra, violation",
    [
        ([("s1", "t2", 1), ("s2", "t1", 1)], (), "edge crossing"),
        ([("v", "s1", 1), ("s2", "t2", 1)], (("v", -1, 1),), "source in-degree"),
        ([("t1", "v", 1)], (("v", 4, 1),), "sink out-degree"),
        ([("s1", "t1", -1)], (), "negative weight"),
        ([("s1", "zz", 1)], (), "unknown vertex"),
        ([("v", "w", 1)], (("v", 2, F(1, 2)), ("w", 1, F(1, 2))), "edge direction"),
        ([("s1", "v", 1), ("s1", "t1", 1)], (("v", 1, 1),), "vertex on edge"),
        ([], (("s1", 1, 1),), "duplicate vertex"),
    ],
)
def test_violations(edges, extra, violation):
    G = two_edge_net(edges, extra)
    check = validate(G)
    assert not check
    assert check.violation == violation


def test_boundary_violations():
    G = PlanarNetwork.build(2, [("s1", 0, 0), ("s2", 0, 1), ("t1", 3, 1), ("t2", 3, 0)], [], ["s1", "s2"], ["t1", "t2"])
    assert validate(G).violation == "boundary"
    G = PlanarNetwork.build(1, [("s1", 0, 0), ("t1", 3, 0), ("v", 0, 5)], [], ["s1"], ["t1"])
    assert validate(G).violation == "boundary"
    G = PlanarNetwork.build(2, [("s1", 0, 0), ("t1", 3, 0)], [], ["s1"], ["t1"])
    assert validate(G).violation == "order"


def test_invalid_network_is_not_evaluated():
    G = two_edge_net([("s1", "t2", 1), ("s2", "t1", 1)])
    with pytest.raises(InvalidNetworkError):
        disjoint_family_weight(G, (1,), (1,))


# --- elementary networks ---------------------------------------------------------


def test_elementary_weight_matrices():
    assert weight_matrix(elementary_network("diag", 4, d=[2, 3, 5, 7])) == Matrix.diagonal([2, 3, 5, 7])
    assert weight_matrix(elementary_network("diag", 4, d=[1, 1, 1, 1])) == Matrix.identity(4)
    e, f = F(5, 2), F(3)
    L = Matrix([[1, 0, 0, 0], [0, 1, 0, 0], [0, e, 1, 0], [0, 0, 0, 1]])
    U = Matrix([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, f], [0, 0, 0, 1]])
    assert weight_matrix(elementary_network("lower", 4, j=2, c=e)) == L
    assert weight_matrix(elementary_network("upper", 4, j=3, c=f)) == U


def test_elementary_errors():
    with pytest.raises(DomainError):
        elementary_network("lower", 4, j=2, c=-1)
    with pytest.raises(DomainError):
        elementary_network("diag", 2, d=[1, 0])
    with pytest.raises(DomainError):
        elementary_network("upper", 3, j=3, c=1)
    with pytest.raises(DomainError):
        elementary_network("sideways", 3, j=1, c=1)


@settings(max_examples=40, deadline=None)
@given(
    st.integers(2, 5).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.sampled_from(["lower", "upper"]),
            st.integers(1, n - 1),
            st.fractions(min_value=0, max_value=9, max_denominator=5),
        )
    )
)
def test_elementary_networks_are_valid_and_match_brute_force(args):
    n, kind, j, c = args
    G = elementary_network(kind, n, j=j, c=c)
    assert validate(G)
    W = weight_matrix(G)
    assert W == brute_weight_matrix(G)
    r, col = (j + 1, j) if kind == "lower" else (j, j + 1)
    want = Matrix([[1 if a == b else (c if (a, b) == (r, col) else 0) for b in range(1, n + 1)] for a in range(1, n + 1)])
    assert W == want


# --- concatenation ---------------------------------------------------------------


def test_concatenation_examples():
    GA = network_from_tnn(A22)
    assert weight_matrix(GA) == A22
    GB = concatenate(GA, GA)
    assert validate(GB)
    assert weight_matrix(GB) == B22
    assert weight_matrix(concatenate(GA, identity_network(4))) == A22
    G = concatenate(elementary_network("lower", 4, j=2, c=1), elementary_network("upper", 4, j=2, c=1))
    E32 = Matrix([[1, 0, 0, 0], [0, 1, 0, 0], [0, 1, 1, 0], [0, 0, 0, 1]])
    assert weight_matrix(G) == E32 @ E32.T


def test_concatenate_order_mismatch():
    with pytest.raises(DomainError):
        concatenate(identity_network(2), identity_network(3))


def test_concatenate_random_words():
    rng = random.Random(17)
    for _ in range(40):
        n = rng.randint(1, 4)
        word = random_elementary_word(rng, n, rng.randint(1, 6))
        G = concatenate_all(word)
        assert validate(G)
        want = Matrix.identity(n)
        for H in word:
            want = want @ weight_matrix(H)
        assert weight_matrix(G) == want


def test_concatenate_with_bridges_keeps_product():
    rng = random.Random(4)
    for _ in range(30):
        G1, G2 = random_network(rng, 3), random_network(rng, 3)
        G = concatenate(G1, G2)
        assert validate(G)
        assert weight_matrix(G) == weight_matrix(G1) @ weight_matrix(G2)


# --- TNN round trip ---------------------------------------------------------------


def test_network_from_tnn_examples():
    G = network_from_tnn(M21)
    assert validate(G)
    assert weight_matrix(G) == M21
    assert all(isinstance(e.weight, F) for e in G.edges)
    assert disjoint_family_weight(G, (1, 2), (1, 3)) == 8
    assert weight_matrix(network_from_tnn(Matrix.identity(3))) == Matrix.identity(3)


def test_network_from_tnn_round_trip_random():
    rng = random.Random(31)
    for _ in range(60):
        M = random_tnn_matrix(rng, rng.randint(1, 5))
        G = network_from_tnn(M)
        assert validate(G)
        assert weight_matrix(G) == M


# --- Lindstrom and total nonnegativity --------------------------------------------


def test_lindstrom_on_random_networks():
    rng = random.Random(77)
    for _ in range(80):
        n = rng.randint(1, 3)
        G = random_network(rng, n)
        assert validate(G)
        W = weight_matrix(G)
        assert W == brute_weight_matrix(G)
        for k in range(0, n + 1):
            for I in combinations(range(1, n + 1), k):
                for J in combinations(range(1, n + 1), k):
                    assert minor(W, I, J) == disjoint_family_weight(G, I, J)


def test_weight_matrices_are_tnn():
    rng = random.Random(13)
    for _ in range(40):
        G = random_network(rng, rng.randint(1, 4))
        assert is_totally_nonnegative(weight_matrix(G))


def test_disjoint_families_are_vertex_disjoint():
    G = network_from_tnn(M21)
    for fam, _ in disjoint_families(G, (1, 2, 3), (1, 2, 3)):
        seen = [v for path in fam for v in path]
        assert len(seen) == len(set(seen))


def test_disjoint_family_trivial_cases():
    G = PlanarNetwork.build(1, [("s1", 0, 0), ("t1", 1, 0)], [("s1", "t1", "7/3")], ["s1"], ["t1"])
    assert disjoint_family_weight(G, (1,), (1,)) == F(7, 3)
    assert disjoint_family_weight(G, (), ()) == 1


# --- named families ------------------------------------------------------------------


def test_binomial_network():
    for n in range(1, 6):
        G = binomial_network(n)
        assert validate(G)
        want = Matrix([[_binom(i, j) for j in range(n)] for i in range(n)])
        assert weight_matrix(G) == want == binomial_matrix(n)
        assert path_matrix(G) == want


def _binom(i: int, j: int) -> int:
    # Pascal recursion, independent of math.comb
    row = [1]
    for _ in range(i):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    return row[j] if j < len(row) else 0


def test_vandermonde_network():
    assert weight_matrix(vandermonde_network([0, 1])) == Matrix([[1, 1], [0, 1]])
    V = weight_matrix(vandermonde_network([1, 2, 3, 4]))
    assert V == Matrix([[x**i for x in (1, 2, 3, 4)] for i in range(4)])
    assert is_totally_positive(V)
    assert vandermonde_matrix([1, 2, 3, 4]) == V
    with pytest.raises(DomainError):
        vandermonde_network([2, 1])
    with pytest.raises(DomainError):
        vandermonde_network([-1, 2])


# --- serialization and guards --------------------------------------------------------------


def test_json_round_trip():
    rng = random.Random(2)
    for _ in range(20):
        G = random_network(rng, rng.randint(1, 4))
        H = from_json(to_json(G))
        assert H == G
        assert weight_matrix(H) == weight_matrix(G)
    obj = json.loads(to_json(network_from_tnn(M21)))
    assert set(obj) == {"order", "vertices", "edges", "sources", "sinks"}
    assert all(isinstance(e["weight"], str) for e in obj["edges"])


def test_json_errors():
    with pytest.raises(DomainError):
        from_json("{")
    with pytest.raises(DomainError):
        from_json('{"order": 1}')


def test_dot_output():
    text = to_dot(identity_network(2))
    assert text.startswith("digraph network {") and text.endswith("}")
    assert text.count("->") == 2


def test_path_cap_guard():
    G = binomial_network(6)
    with pytest.raises(GuardExceeded):
        weight_matrix(G, path_cap=5)
    assert weight_matrix(G, path_cap=None) == binomial_matrix(6)
