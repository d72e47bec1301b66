"""
Sandpile groups of the doubling graphs
======================================

The graph on Z_n with edges i -> 2i and i -> 2i+1 is Eulerian.  Its sandpile
group is the torsion of the cokernel of its Laplacian and also has a closed
form in terms of doubling orbits.
"""

from necklace_sandpile.debruijn import a_matrix, closed_form, doubling_orbits, gamma_sandpile
from necklace_sandpile.zlinalg import conjugate_by_shift_basis, format_matrix, smith_normal_form

A9 = a_matrix(9)
print(format_matrix(A9))
print()
print(format_matrix(conjugate_by_shift_basis(A9)))
print("Smith diagonal:", smith_normal_form(A9).diagonal)

# orbits of x -> 2x on the nonzero residues mod 9
print(doubling_orbits(2, 9).orbits)

for n in (9, 15, 21, 12, 40, 64):
    snf, closed = gamma_sandpile(2, n), closed_form(n)
    print(f"n={n:3d}  {str(snf):30s} {'same' if snf == closed else 'DIFFERENT'}")
