"""Estimate a divisor class number, then confirm it with the exact oracle.

The model is the purely cubic field y^3 = x^2 + x over F_7.  The estimate
comes from the truncated Euler product over places of degree <= lambda with
a proven interval [E - L^2, E + L^2]; the oracle builds the L-polynomial
from place counts and evaluates h = L(1).  Watch the interval shrink as
lambda grows and always contain the exact value.
"""

from funcfields import (
    GF,
    CubicModel,
    FqPoly,
    ZetaData,
    divisibility_certificates,
    estimate_h,
    exact_h,
    genus,
    parse_poly,
)

F = GF(7)
B = parse_poly(F, "x^2 + x")
model = CubicModel(FqPoly.zero(F), -B)  # y^3 = B
print("model: y^3 =", B, "over F_7")

g = genus(model).genus
print("genus:", g)

zeta = ZetaData(model)
oracle = exact_h(model, zeta=zeta, genus_value=g)
print("\nL-polynomial coefficients:", oracle.L.coeffs)
print("exact class number h =", oracle.h)

print("\n lambda    E      L    interval")
for lam in (1, 2, 3, 4):
    est = estimate_h(model, lam, zeta=zeta, genus_value=g)
    lo, hi = est.interval
    mark = "contains h" if lo <= oracle.h <= hi else "VIOLATION"
    print("   %d     %4d   %3d   [%d, %d]  %s" % (lam, est.E, est.L, lo, hi, mark))

print("\ndivisibility certificates:")
for cert in divisibility_certificates(model):
    print("   %d | h   (%s)" % (cert.modulus, cert.rule))
print("indeed h =", oracle.h)
