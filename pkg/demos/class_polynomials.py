"""
Class polynomials from a list of (j1, j2) points
================================================

Toy data: three rational points, so H1 splits completely.
"""

from fractions import Fraction as F

from picardcm.exact import factorize
from picardcm.invariants import class_polynomials

pts = [(F(1, 4), F(3)), (F(-2, 9), F(5, 2)), (F(7), F(-1, 6))]
pair = class_polynomials(pts)
print("H1    ", [str(c) for c in pair.H1])
print("H2hat ", [str(c) for c in pair.H2hat])
print("den(H1)    =", factorize(pair.den_H1))
print("den(H2hat) =", factorize(pair.den_H2hat))

# j2 comes back from the interpolation
print([pair.recover_j2(j1) == j2 for j1, j2 in pts])
