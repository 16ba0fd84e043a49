"""Planar networks and the matrices they produce.

Run with ``python3 demos/01_networks.py``.
"""

from tnncomb import (
    Matrix,
    concatenate,
    disjoint_family_weight,
    is_totally_nonnegative,
    minor,
    network_from_tnn,
    neville_factorize,
    validate,
    weight_matrix,
)
from tnncomb.exact_core import format_matrix
from tnncomb.planar_network import binomial_network, vandermonde_network


def show(title: str, M: Matrix) -> None:
    print(title)
    print(format_matrix(M), end="")


M = Matrix([[5, 6, 3, 0], [4, 7, 4, 0], [1, 4, 4, 2], [0, 1, 2, 3]])
show("A 4x4 matrix:", M)

check = is_totally_nonnegative(M)
print(f"every one of its {check.minors_checked} minors is >= 0: {bool(check)}\n")

# Neville elimination splits it into elementary bidiagonal pieces.
fac = neville_factorize(M)
print("lower factors:", [(f.j, str(f.c)) for f in fac.lower])
print("diagonal:     ", [str(d) for d in fac.diagonal])
print("upper factors:", [(f.j, str(f.c)) for f in fac.upper])
assert fac.product() == M

# Each piece is a tiny network; gluing them left to right multiplies the matrices.
G = network_from_tnn(M)
print(f"\nrealizing network: {len(G.vertices)} vertices, {len(G.edges)} edges, valid: {bool(validate(G))}")
assert weight_matrix(G) == M

# Minors count weighted families of vertex-disjoint paths.
I, J = (1, 2), (1, 3)
print(f"minor {I},{J} = {minor(M, I, J)}; disjoint families = {disjoint_family_weight(G, I, J)}")

# Gluing a network to itself squares its matrix.
A = Matrix([[1 if j <= i else 0 for j in range(4)] for i in range(4)])
GA = network_from_tnn(A)
show("\nlower-triangular ones, squared through concatenation:", weight_matrix(concatenate(GA, GA)))

show("\nstaircase network counting lattice paths (Pascal's triangle):", weight_matrix(binomial_network(5)))
show("\nVandermonde network at x = 1, 2, 3, 4:", weight_matrix(vandermonde_network([1, 2, 3, 4])))
