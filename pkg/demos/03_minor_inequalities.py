"""Inequalities between products of complementary principal minors.

Run with ``python3 demos/03_minor_inequalities.py``.
"""

import random

from tnncomb.minor_ineq import Coloring, compare, lattice_partition, poset, tl_basis, tl_subset
from tnncomb.planar_network import random_tnn_matrix

print("Noncrossing matchings on 2n points:", [len(tl_basis(n)) for n in range(1, 8)])

print("\nFor n = 3, each product keeps the diagrams compatible with its coloring:")
for n_I in [(1, 2, 3), (1, 2), (1, 3), (1,)]:
    c = Coloring(3, n_I)
    kept = sorted(str(D) for D in tl_subset(c))
    print(f"  {c.label():<14} lattice blocks {lattice_partition(c)}  diagrams {kept}")

P = poset(3)
print("\nResulting order:")
print(P.format())

a, b = Coloring(3, (1, 2)), Coloring(3, (1,))
print(f"\n{a.label()} vs {b.label()}: {compare(a, b)}")

rng = random.Random(0)
for n in (3, 4):
    rels = poset(n).relations
    for _ in range(200):
        M = random_tnn_matrix(rng, n)
        assert all(lo.product(M) <= hi.product(M) for lo, hi in rels)
    print(f"n={n}: all {len(rels)} inequalities hold on 200 random TNN matrices")

print("\nHasse diagram for n = 4 in DOT:")
print(poset(4).to_dot())
