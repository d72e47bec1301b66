"""
Necklaces and irreducible polynomials
=====================================

Aperiodic binary necklaces of length n and monic irreducible polynomials of
degree n over F_2 are counted by the same formula.  This walks through both
sides for small n.
"""

from necklace_sandpile.gfpoly import FieldCtx, enumerate_irreducible, frobenius_orbit, minimal_polynomial
from necklace_sandpile.necklace import averaging, count_aperiodic, enumerate_necklaces

# the six aperiodic necklaces of length 5, as Lyndon words
print([str(v) for v in enumerate_necklaces(2, 5)])

# the six irreducible quintics over F_2
print([str(f) for f in enumerate_irreducible(2, 5)])

# counts agree for every n, here up to 16
for n in range(1, 17):
    assert count_aperiodic(2, n) == len(enumerate_irreducible(2, n))
print("counts agree for n <= 16")

# F_16 built on x^4+x+1; the Frobenius orbit of x has 4 roots sharing one minimal polynomial
F = FieldCtx(2, 4)
a = F.gen
print([str(b.as_poly()) for b in frobenius_orbit(a)], minimal_polynomial(a))

# an element of the subfield F_4 has a shorter orbit and a quadratic minimal polynomial
b = F.from_index(7)
print([str(c.as_poly()) for c in frobenius_orbit(b)], minimal_polynomial(b))

# averaging adds neighbouring digits mod p and may land on a periodic string
for v in enumerate_necklaces(2, 4):
    print(v, "->", averaging(v))
