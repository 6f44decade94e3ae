"""Hodge, Betti and Euler series of symmetric products and configuration spaces.

    python3 demos/symmetric_products.py
"""

from symgenera import GenusProfile, configuration_series, invariant_of_symmetric_product, parse_poly, symmetric_series

P1 = GenusProfile("P1", "hodge", parse_poly("1 + y*x*z^2"))
E = GenusProfile("E", "hodge", parse_poly("1 - y*z - x*z + y*x*z^2"))

print("symmetric products of P1 are projective spaces:")
for n, h in enumerate(symmetric_series(P1, 4).coeffs):
    print(f"  n={n}: {h}")

h2 = invariant_of_symmetric_product(E, 2)
print("\nHodge polynomial of Sym^2 E:", h2)
betti = h2.specialize(y=1, x=1)
# Betti numbers are the coefficients of (-z)^k
print("Betti numbers:", [betti.coefficient((k,)) * (-1) ** k for k in range(5)])

print("\nEuler characteristics of Sym^n of a sphere:")
print(" ", symmetric_series(GenusProfile("S2", "euler", 2), 8).coeffs)

print("\nconfiguration spaces use the alternating powers instead:")
for n, h in enumerate(configuration_series(P1, 3).coeffs):
    print(f"  n={n}: {h}")

# disjoint union turns into a product of series
both = P1 + E
assert symmetric_series(both, 5) == symmetric_series(P1, 5) * symmetric_series(E, 5)
print("\nseries(P1 + E) = series(P1) * series(E) up to t^5")
