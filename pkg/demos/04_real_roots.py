"""Real-rootedness from total positivity.

Run with ``python3 demos/04_real_roots.py``.
"""

import random

from tnncomb.exact_core import char_poly, format_matrix
from tnncomb.planar_network import random_tnn_matrix
from tnncomb.polynomial import parse_poly
from tnncomb.realroots import (
    certify_real_distinct,
    hankel_matrix,
    real_root_count,
    sturm_real_root_count,
    toeplitz_refute,
)

for text in ("1 + 6 z + 5 z^2 + z^3", "1 + z + z^2", "1 + 2 z + z^2"):
    a = parse_poly(text)
    cert = certify_real_distinct(a)
    ref = toeplitz_refute(a, a.degree + 3)
    print(a)
    print("  Hankel matrix of power sums:")
    print("  " + format_matrix(cert.hankel).rstrip().replace("\n", "\n  "))
    print(f"  certified real and distinct: {bool(cert)}" + ("" if cert else f" (witness {cert.witness})"))
    print(f"  Toeplitz refutation: {bool(ref)}" + (f" (witness {ref.witness})" if ref else ""))
    print(f"  Sturm: {sturm_real_root_count(a)} distinct real roots, {real_root_count(a)} with multiplicity\n")

print("Characteristic polynomials of random TNN matrices:")
rng = random.Random(3)
for _ in range(5):
    M = random_tnn_matrix(rng, 4)
    P = char_poly(M)
    print(f"  degree {P.degree}, real roots with multiplicity {real_root_count(P)}")

print("\nThe Hankel matrix of prod(1 + b z) for b = 1, 2, 3:")
print(format_matrix(hankel_matrix(parse_poly("1 + 6 z + 11 z^2 + 6 z^3"))))
