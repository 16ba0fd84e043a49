"""Symmetric functions, Littlewood-Richardson coefficients and jeu de taquin.

Run with ``python3 demos/02_symmetric_functions.py``.
"""

from tnncomb import SkewShape, is_schur_positive, jacobi_trudi, schur_positive_difference
from tnncomb.lr import jdt_table, lr_tableaux
from tnncomb.symfunc import e, h, p, s, skew_schur
from tnncomb.tableaux import format_tableau

print("e4 in the h basis: ", e(4).to("h"))
print("h4 in the p basis: ", h(4).to("p"))
print("p4 in the s basis: ", p(4).to("s"))
w = is_schur_positive(p(4))
print(f"p4 Schur-positive? {bool(w)}; first negative coefficient at s{list(w.witness[0])}\n")

print("Fillings of shape (2,1) that survive the column-suffix test for s31 * s21:")
for T in lr_tableaux((3, 1), (2, 1)):
    print("  " + format_tableau(T).replace("\n", " / "))
print("s31 * s21 =", s(3, 1) * s(2, 1), "\n")

shape = SkewShape((3, 2, 1), (2, 1))
print(f"Rectifying every standard tableau of shape {shape}:")
for T, R, counted in jdt_table(shape):
    flag = "counted" if counted else "skipped"
    print(f"  {format_tableau(T).replace(chr(10), ' / '):>16}  ->  {format_tableau(R).replace(chr(10), ' / '):<10} {flag}")
print("so s_{321/21} =", skew_schur((3, 2, 1), (2, 1)), "\n")

J = jacobi_trudi((2, 2, 1))
print("Jacobi-Trudi matrix of (2,2,1):")
print(J.format())
print("its determinant in Schur terms:", J.determinant().to("s"), "\n")

for i in range(1, 4):
    d = schur_positive_difference(i)
    print(f"i={i}: s_({i + 3},{i})/(1) s_{i + 1} - s_({i + 2},{i + 1}) s_{i}")
    print(f"     = {d}")
    print(f"     Schur-positive: {bool(is_schur_positive(d))}")
