"""
The trace-form constant B across the reference fields
=====================================================
"""

from picardcm.fields import make_cubic_field, maximal_sextic_order
from picardcm.lattice import compute_B
from picardcm.reference import load_examples, matches_printed

from fractions import Fraction

for i, rec in load_examples().items():
    O = maximal_sextic_order(make_cubic_field(*rec.field_poly))
    B, x = compute_B(O)
    literal, _ = compute_B(O, primitive=False)
    printed = rec.b10_over_8 or "-"
    ok = matches_printed(Fraction(B**10, 8), printed) if rec.b10_over_8 else None
    print(f"{i}  B={B:<4} literal={literal}  B^10/8={B**10 / 8:.2g}  printed={printed}  {ok}")
