"""
Circulant units modulo shifts
=============================

Invertible circulant n x n matrices over F_p form the unit group of
F_p[x]/(x^n - 1).  Dividing out the cyclic shifts gives a group that can be
compared with the one generated by the normal-basis bijections.
"""

import numpy as np

from necklace_sandpile.bijection import reutenauer_group
from necklace_sandpile.circulant import CirculantFp, count_units_brute_force, quotient_group_type, unit_group_order

c = CirculantFp(2, (1, 1, 0, 1))
print(np.array(c.matrix()))
one = CirculantFp.identity(2, 4)
print("multiplicative order of c:", next(k for k in range(1, 20) if c ** k == one))

for n in range(2, 11):
    assert unit_group_order(2, n) == count_units_brute_force(2, n)
    q, g = quotient_group_type(2, n), reutenauer_group(2, n).type
    print(n, unit_group_order(2, n), q, "match" if q == g else "differ")
