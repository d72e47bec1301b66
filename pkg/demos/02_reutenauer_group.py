"""
The group generated by normal-basis bijections
==============================================

Each normal element of F_{2^n} gives a bijection from necklaces to
irreducible polynomials.  Quotients of two such bijections permute the
necklaces; together they generate a finite abelian group.
"""

from necklace_sandpile.bijection import family, reutenauer_map
from necklace_sandpile.necklace import enumerate_necklaces
from necklace_sandpile.orbitlab import format_chains, group_report

n = 6
fam = family("reutenauer", 2, n)
param = fam.params[0]
print("normal polynomial:", param.normal_poly)
for v in enumerate_necklaces(2, n):
    print(" ", v, "->", reutenauer_map(param, v))

g = fam.necklace_group()
print("group order", g.order, "type", g.type)
print("orbit sizes", sorted((len(o) for o in g.orbits()), reverse=True))

# how the averaging map moves between orbits
rep = group_report("reutenauer", 2, n)
print(format_chains(rep))

# one orbit is acted on freely for every n tried so far
for n in range(2, 13):
    rep = group_report("reutenauer", 2, n, with_averaging=False)
    print(n, rep.group_type, "main orbit size", len(rep.orbits[rep.main_orbit]))
