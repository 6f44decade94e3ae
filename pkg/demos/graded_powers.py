"""Symmetric and alternating powers of a tri-graded space, two ways.

The brute-force route builds the Koszul-signed averaging projector on
V^(x)n and takes exact ranks.  The series route reads the same numbers
off sigma_t and lambda_t of the Hodge polynomial.

    python3 demos/graded_powers.py
"""

from symgenera import GradedDims, alt_power_brute, lambda_series, sigma_series, sym_power_brute
from symgenera.graded import cycle_supertrace

# one even class in degree 0 and two odd classes in degree 1, as for H^*(E) minus the top
V = GradedDims({(0, 0, 0): 1, (1, 0, 1): 1, (0, 1, 1): 1})
h = V.hodge_poly()
print("V        =", V)
print("h(V)     =", h)

sig, lam = sigma_series(h, 4), lambda_series(h, 4)
for n in range(1, 5):
    sym, alt = sym_power_brute(V, n), alt_power_brute(V, n)
    print(f"\nn={n}")
    print("  Sym^n brute :", sym.hodge_poly())
    print("  sigma_t     :", sig[n])
    print("  Alt^n brute :", alt.hodge_poly())
    print("  lambda_t    :", lam[n])
    assert sym.hodge_poly() == sig[n] and alt.hodge_poly() == lam[n]

# a single transposition acting on V (x) V: signed trace equals Psi_2(h)
print("\nsupertrace of (1 2):", cycle_supertrace(V, (2,)))
print("Psi_2(h)           :", h.adams(2))
