"""Laurent polynomials, truncated series and the pre-lambda structure on them.

    python3 demos/laurent_and_adams.py
"""

from symgenera import adams_from_lambda, adams_from_sigma, adams_newton, lambda_series, parse_poly, sigma_series

p = parse_poly("y + 2*x^-1*z")
print("p          =", p)
print("p^2        =", p * p)
print("Psi_3(p)   =", p.adams(3))
print("p at z=1   =", p.specialize(z=1))

# sigma_t of a sum of monomials is a product of geometric factors
a = parse_poly("y + x")
s = sigma_series(a, 4)
print("\nsigma_t(y + x) =", s)
print("lambda_t(y + x) =", lambda_series(a, 4))

# the Adams operations come back out of sigma_t three different ways
for name, psi in [
    ("log", adams_from_sigma(s)),
    ("Newton", adams_newton(s)),
    ("lambda", adams_from_lambda(lambda_series(a, 4))),
]:
    print(f"{name:>7}:", ", ".join(map(str, psi)))

# a single odd class: sigma_t stops after degree one
print("\nsigma_t(-x*z) =", sigma_series(parse_poly("-x*z"), 4))
