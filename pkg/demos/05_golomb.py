"""
Primitive-root bijections
=========================

A primitive element alpha sends the necklace of v to the minimal polynomial
of alpha^v.  These maps also generate an abelian group on necklaces, whose
order does not grow monotonically with n.
"""

from necklace_sandpile.bijection import family, golomb_map
from necklace_sandpile.orbitlab import group_report

fam = family("golomb", 2, 4)
for param in fam.params:
    print(param.primitive_poly, [str(golomb_map(param, v)) for v in fam.necklaces])

orders = []
for n in range(2, 13):
    rep = group_report("golomb", 2, n, with_averaging=False)
    orders.append(rep.group_order)
    print(n, rep.group_order, rep.group_type, rep.orbit_sizes)
print(orders)
