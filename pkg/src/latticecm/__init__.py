"""Exact analysis of lattice ideals and certified counterexample pairs.

The main entry points are re-exported here; see the submodules for the
full surface.
"""

from .certify import (
    CertifiedPair,
    CICertificate,
    NonCMCertificate,
    certify_complete_intersection,
    certify_not_cm,
    verify_pair,
)
from .complexes import (
    SupportComplex,
    betti_number,
    join,
    reduced_homology_ranks,
    support_complex,
    suspension,
)
from .exactlin import (
    IntegerMatrix,
    det,
    hermite_normal_form,
    rank,
    rational_kernel_basis,
    smith_normal_form,
)
from .fiber import Fiber, fiber_of, nonneg_members, syzygy_fiber
from .gale import (
    gale_diagram,
    is_dominating,
    is_imbalanced,
    is_mixed,
    quadrant_coverage,
    ray_count,
)
from .lattice import Lattice, from_basis, is_positive, lattices_equal, saturate, saturation_index
from .transform import (
    block_embed,
    four_quadrants_to_imbalanced,
    generate_pair,
    imbalanced_to_four_quadrants,
)

__version__ = "0.1.0"
