"""Adding a diagonal block (1, -1) suspends the support complex.

The product fiber's complex is a join with two points, so every reduced
homology class moves up one dimension and the Betti number moves up one
homological degree.  The rank-2 diagram is also drawn as an SVG file.
"""

import sys

from latticecm import from_basis, reduced_homology_ranks, support_complex, syzygy_fiber
from latticecm.svg import gale_svg
from latticecm.transform import block_embed

B0 = [[2, -1], [3, 3], [-1, 5], [-4, -7]]
for m in (2, 3, 4, 5):
    L = from_basis(block_embed(B0, m))
    D = support_complex(syzygy_fiber(L))
    print(f"m={m}: {len(D.facets)} facets, reduced homology {reduced_homology_ranks(D).nonzero()}")

out = sys.argv[1] if len(sys.argv) > 1 else "gale.svg"
with open(out, "w", encoding="utf-8") as fh:
    fh.write(gale_svg(B0))
print("wrote", out)
