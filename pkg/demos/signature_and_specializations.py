"""From Hodge data down to e, chi_y, Betti, Euler, arithmetic genus and signature.

    python3 demos/signature_and_specializations.py
"""

from symgenera import GenusProfile, parse_poly, signature_series, specialization_bridge, symmetric_series

P2 = GenusProfile("P2", "hodge", parse_poly("1 + y*x*z^2 + y^2*x^2*z^4"))
derived = specialization_bridge(P2)
print("e       :", derived.e.data)
print("chi_y   :", derived.chi_y.data)
print("Betti   :", derived.betti.data)
print("Euler   :", derived.euler)
print("chi_a   :", derived.arithmetic_genus)
print("(sigma, chi):", derived.signature)

closed = signature_series(*derived.signature, 10, chi_y=derived.chi_y)
print("\nsignatures of Sym^n P2 :", closed.coeffs)
print("chi_y series at y = -1 :", symmetric_series(derived.chi_y, 10).specialize(y=-1).coeffs)
