"""
Invariants of a Picard curve and its reduction types
====================================================
"""

from picardcm.invariants import PicardCurve, absolute_denominators, classify_reduction, invariants

# y^3 = x^4 + a x^2 + b x + c
C = PicardCurve(-2 * 7**2 * 13, 2**3 * 5 * 13 * 47, -(5**2) * 13**2 * 31)
inv = invariants(C)
print("j1 =", inv.j1)
print("j2 =", inv.j2)
print("j3 =", inv.j3)

dens = absolute_denominators(C)
print("den_abs    ", dens.den_abs)
print("den_KW_abs ", dens.den_KW_abs)

# primes dividing b are the interesting ones; 7 is a control
for p in (5, 47, 7):
    v = classify_reduction(C, p)
    print(p, v.case, v.reason, v.a_bar_squared)

# rescaling x -> lam^3 x leaves every invariant alone
print(invariants(C.scale(3)).j1 == inv.j1)
