"""Switching a rank-2 Gale diagram between its two shapes.

A four-quadrant diagram can be made imbalanced by a nonsingular change of
basis, and an imbalanced one with at least four rays can be spread over all
four quadrants.  Neither change is unimodular in general, so the new basis
spans a sublattice whose index is |det M|.
"""

from latticecm import four_quadrants_to_imbalanced, from_basis, imbalanced_to_four_quadrants
from latticecm.gale import quadrant
from latticecm.lattice import saturation_index

four = [[3, 3], [-1, 5], [-4, -7], [2, -1]]
r = four_quadrants_to_imbalanced(four)
print("four quadrants -> imbalanced, branch", r.case_tag)
print("  M =", r.M.tolist(), "det", r.det)
print("  B M rows:", r.transformed_basis.tolist())

imb = [[2, 1], [1, 2], [-1, 3], [0, -1]]
r = imbalanced_to_four_quadrants(imb)
aux = r.auxiliary
print("imbalanced -> four quadrants, branch", r.case_tag)
print("  s =", aux["s"], "t =", aux["t"])
print("  M =", r.M.tolist(), "det", r.det)
for row in r.transformed_basis.rows:
    print("  ", row, "in quadrant", quadrant(row))

# the index of the new lattice in the old one is |det M|
print("index:", saturation_index(from_basis(r.transformed_basis)) // saturation_index(from_basis(imb)))

axes = [[1, 0], [0, 1], [-1, 0], [0, -1]]
r = imbalanced_to_four_quadrants(axes)
print("axis diagram:", r.case_tag, r.M.tolist(), "->", r.transformed_basis.tolist())
