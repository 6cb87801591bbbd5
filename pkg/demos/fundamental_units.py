"""Construct cubic fields with an obvious fundamental system of units.

Two families: rank 1 with fundamental unit a + y (the regulator has a
closed form n1 or n1/2 depending on the parity of deg A), and the rank-2
family y^3 = A^2 y + 1 with fundamental system {y, A + y}.  Each
construction verifies its hypotheses at runtime and certifies the result
through maximum-value additivity and the exact regulator determinant.
"""

from funcfields import GF, FqPoly, construct_rank1, construct_rank2, genus, max_value, parse_poly

F = GF(7)

print("rank 1, odd degree: A = x^3, a = x, kappa = 1")
model, cert = construct_rank1(F, parse_poly(F, "x^3"), parse_poly(F, "x"), 1, "Thm245")
print("   model:", model.text_form())
print("   fundamental unit: a + y with a = x")
print("   regulator R =", cert.regulator_R, " (closed form: deg A)")
print("   hypothesis checklist:", sorted(k for k, v in cert.hypotheses.items() if v))

print("\nrank 2: y^3 = A^2 y + 1 with A = x")
model2, cert2 = construct_rank2(F, FqPoly.x(F))
print("   model:", model2.text_form())
print("   fundamental system {y, A + y}, R =", cert2.regulator_R)
print("   genus:", genus(model2).genus, " (closed form 3 n1/2 - 2 with n1 = 2)")
for eps, name in zip(cert2.units, ("y", "A + y")):
    mv = max_value(model2, eps)
    print("   max value of %s = %s; additivity through k = 6:" % (name, mv.value),
          all(max_value(model2, eps ** k).value == k * mv.value for k in range(2, 7)))
