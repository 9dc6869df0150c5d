"""A lattice ideal of codimension 2 that is not Cohen-Macaulay.

The rows of B meet all four open quadrants.  The fiber of the sum of the
positive parts of the two columns has exactly four nonnegative members,
their supports form a hollow tetrahedron, and its second reduced homology
gives a nonzero Betti number in homological degree 3 > codimension.
"""

from latticecm import (
    betti_number,
    from_basis,
    is_positive,
    nonneg_members,
    reduced_homology_ranks,
    support_complex,
    syzygy_fiber,
)
from latticecm.complexes import DEFAULT_PRIME
from latticecm.gale import quadrant_coverage

B = [[2, -1], [3, 3], [-1, 5], [-4, -7]]
L = from_basis(B)

pos = is_positive(L)
print("positive:", pos.positive, "grading:", pos.certificate)
print("quadrants met by the rows:", sorted(quadrant_coverage(B)))

C = syzygy_fiber(L)
print("fiber representative:", C.representative)
for a in nonneg_members(C):
    print("  member", a)

D = support_complex(C)
print("facets (0-based vertices):", D.facet_sets())
print("reduced homology over Q:", reduced_homology_ranks(D).nonzero())
print("reduced homology over GF(%d):" % DEFAULT_PRIME,
      reduced_homology_ranks(D, DEFAULT_PRIME).nonzero())

# beta_{3,C} = rank of H~_2, and 3 exceeds the codimension 2
print("beta_3 at C:", betti_number(L, 3, C))
