"""Symmetric group characters and Schur functor multiplicities of graded spaces.

    python3 demos/characters_and_schur.py
"""

from symgenera import GradedDims, character_table, functional, phi_power, schur_multiplicity
from symgenera.symgroup import partitions

rows, cols, table = character_table(4)
print("character table of S_4 (columns:", ", ".join(map(str, cols)) + ")")
for lam, values in zip(rows, table):
    print(f"  {str(lam):<14}", values)

V = GradedDims({(0, 0, 0): 2, (0, 1, 1): 1})
print("\nV =", V)
for lam in partitions(3):
    print(f"  S_{lam}(V):", schur_multiplicity(V, 3, lam).hodge_poly())

# the sigma_n, lambda_n and Psi_n functionals give Sym^n, Alt^n and Adams
for kind in ("sigma", "lambda", "psi"):
    print(f"  {kind}_3(V):", phi_power(V, functional(kind, 3)).hodge_poly())
print("  Psi_3 of h :", V.hodge_poly().adams(3))
