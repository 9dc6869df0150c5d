"""Basis changes that flip a rank-2 Gale diagram between the
four-quadrant shape and the imbalanced shape, and the block construction
that lifts such examples to any rank.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import count
from typing import Any, Literal

from .errors import (
    DegenerateTransform,
    NotImbalanced,
    NotPositive,
    QuadrantNotCovered,
    SearchExhausted,
    TooFewRays,
    WrongCodim,
)
from .exactlin import IntegerMatrix, as_matrix, det
from .gale import (
    ALL_QUADRANTS,
    angular_sort_upper,
    cross,
    is_imbalanced,
    primitive_direction,
    quadrant,
    quadrant_coverage,
    ray_count,
    strictly_between,
)
from .lattice import from_basis, is_positive, saturation_index

H = IntegerMatrix([[1], [-1]])
V_SEARCH_CAP = 10**6

Direction = Literal["ci_lattice", "ci_saturation"]


@dataclass(frozen=True)
class TransformResult:
    M: IntegerMatrix
    transformed_basis: IntegerMatrix
    case_tag: str
    auxiliary: dict[str, Any] = field(default_factory=dict)

    @property
    def det(self) -> int:
        return det(self.M)


def _require_positive(B: IntegerMatrix) -> None:
    if not is_positive(from_basis(B, min_ambient=1)).positive:
        raise NotPositive("the lattice spanned by B meets the nonnegative orthant")


def _dot(u, v) -> int:
    return u[0] * v[0] + u[1] * v[1]


def _q4_vectors():
    # integer v with v1 > 0 > v2, by max-norm then lexicographically
    for h in range(1, V_SEARCH_CAP + 1):
        for v1 in range(1, h):
            yield (v1, -h)
        for v2 in range(-h, 0):
            yield (h, v2)


def _q4_construction(b):
    """Branch for cone(b1, b3) containing the fourth quadrant.

    ``b`` holds the four rows ordered so that b[i] lies in quadrant i+1.
    """
    b1, b2, b3, _ = b
    for v in _q4_vectors():
        if _dot(b1, v) >= 0 and _dot(b3, v) >= 0:
            break
    else:  # pragma: no cover - the dual cone always has interior in Q4
        raise SearchExhausted(f"no v found with max-norm <= {V_SEARCH_CAP}")
    M = IntegerMatrix([[b2[1], v[0]], [-b2[0], v[1]]])
    return M, v


def _rotate(p):
    # quarter turn counter-clockwise; maps quadrant i to quadrant i+1
    return (-p[1], p[0])


def four_quadrants_to_imbalanced(B) -> TransformResult:
    """Nonsingular ``M`` for a 4x2 four-quadrant ``B`` with ``G_{BM}`` imbalanced.

    The rows are first matched to quadrants 1..4.  If both opposite pairs
    are parallel, ``M`` is built from the first two rows so that every row
    of ``BM`` gets a zero entry.  Otherwise a vector ``v`` on the far side
    of the cone over an independent opposite pair is found by search, and
    ``M`` pairs it with the normal of the remaining row.
    """
    B = as_matrix(B)
    if B.shape != (4, 2):
        raise WrongCodim(f"expected a 4x2 matrix, got {B.shape}")
    labels = [quadrant(r) for r in B.rows]
    if sorted(labels) != [1, 2, 3, 4]:
        raise QuadrantNotCovered(f"row quadrants are {labels}, need one per quadrant")
    _require_positive(B)
    perm = [labels.index(q) for q in (1, 2, 3, 4)]
    b = [B.row(i) for i in perm]

    dep13 = cross(b[0], b[2]) == 0
    dep24 = cross(b[1], b[3]) == 0
    aux: dict[str, Any] = {"permutation": perm}
    if dep13 and dep24:
        M = IntegerMatrix([[-b[0][1], -b[1][1]], [b[0][0], b[1][0]]])
        tag = "dependent_pairs"
    else:
        # turn the picture a quarter so that the independent pair sits in Q1/Q3
        turns = 1 if dep13 else 0
        R = IntegerMatrix([[0, 1], [-1, 0]]) if turns else IntegerMatrix.identity(2)
        c = [_rotate(p) for p in (b[3], b[0], b[1], b[2])] if turns else b
        if cross(c[0], c[2]) < 0:
            M0, v = _q4_construction(c)
            tag = "cone_Q4"
        else:
            # point reflection swaps Q2 and Q4; B' = -B reordered, then M = -M'
            mirrored = [tuple(-x for x in p) for p in (c[2], c[3], c[0], c[1])]
            M0, v = _q4_construction(mirrored)
            M0 = -M0
            v = tuple(-x for x in v)
            tag = "cone_Q2"
        M = R @ M0
        aux.update(v=v, quarter_turns=turns)
    BM = B @ M
    if det(M) == 0 or not is_imbalanced(BM):
        raise AssertionError(f"transform failed on {B!r}")
    return TransformResult(M, BM, tag, aux)


def imbalanced_to_four_quadrants(B) -> TransformResult:
    """Nonsingular ``M`` for imbalanced ``B`` (>= 4 rays) with ``G_{BM}`` in all
    four open quadrants.

    With ``b_a``/``b_d`` the first/last upper points by angle and ``b_c`` the
    first one strictly between them, ``s = k b_a + b_c`` and
    ``t = b_c + k b_d`` use the least ``k >= 1`` giving ``s_1 > 0`` and
    ``t_1 < 0``; then ``M = [[-s_2, t_2], [s_1, -t_1]]``, so row ``r`` maps to
    ``(cross(s, r), cross(r, t))``.
    """
    B = as_matrix(B)
    if B.ncols != 2:
        raise WrongCodim(f"expected n x 2, got {B.shape}")
    if not is_imbalanced(B):
        raise NotImbalanced("Gale diagram is not imbalanced")
    rays = ray_count(B)
    if rays < 4:
        raise TooFewRays(f"diagram spans {rays} rays, need at least 4")
    _require_positive(B)

    rows = B.rows
    if all(x == 0 or y == 0 for x, y in rows):
        M = IntegerMatrix([[1, -1], [1, 1]])
        tag, aux = "axes", {}
    else:
        order = angular_sort_upper(B)
        a, d = order[0], order[-1]
        ba, bd = rows[a], rows[d]
        c = next(i for i in order if strictly_between(ba, rows[i], bd))
        bc = rows[c]
        s = next(
            s for k in count(1)
            if (s := (k * ba[0] + bc[0], k * ba[1] + bc[1]))[0] > 0
        )
        t = next(
            t for k in count(1)
            if (t := (bc[0] + k * bd[0], bc[1] + k * bd[1]))[0] < 0
        )
        M = IntegerMatrix([[-s[1], t[1]], [s[0], -t[0]]])
        j = next(i for i, (x, y) in enumerate(rows) if x == 0 and y < 0)
        tag = "generic"
        aux = {"a": a, "c": c, "d": d, "j": j, "s": s, "t": t}
    BM = B @ M
    if det(M) == 0 or quadrant_coverage(BM) != ALL_QUADRANTS:
        raise AssertionError(f"transform failed on {B!r}")
    return TransformResult(M, BM, tag, aux)


def block_embed(B0, m: int) -> IntegerMatrix:
    """``B0`` followed by ``m - 2`` diagonal copies of the column (1, -1)."""
    B0 = as_matrix(B0)
    if m < 2:
        raise ValueError("m must be at least 2")
    return IntegerMatrix.block_diag(B0, *([H] * (m - 2)))


def block_transform(M0: IntegerMatrix, m: int) -> IntegerMatrix:
    return IntegerMatrix.block_diag(M0, *([IntegerMatrix([[1]])] * (m - 2)))


# ---------------------------------------------------------------- seed families

def seed_ci_lattice(k: int) -> IntegerMatrix:
    return IntegerMatrix([[1, 1], [-1, 1 + k], [-2, -3], [1, -1]])


def seed_ci_saturation(k: int) -> IntegerMatrix:
    return IntegerMatrix([[2, 1], [1, 2], [-1, 2 + k], [0, -1]])


SEED_FAMILIES = {
    "ci_lattice": seed_ci_lattice,
    "ci_saturation": seed_ci_saturation,
}


def seed_matrix(direction: Direction, k: int) -> IntegerMatrix:
    """Member ``k`` of a seed family, checked before it is returned.

    Every member spans a saturated positive lattice; the ``ci_lattice``
    family meets all four open quadrants and the ``ci_saturation`` family
    is imbalanced with at least four rays.
    """
    if k < 1:
        raise ValueError("family index starts at 1")
    B0 = SEED_FAMILIES[direction](k)
    L0 = from_basis(B0)
    if saturation_index(L0) != 1 or not is_positive(L0).positive:
        raise AssertionError(f"seed {direction}({k}) is not saturated and positive")
    if direction == "ci_lattice":
        ok = quadrant_coverage(B0) == ALL_QUADRANTS
    else:
        ok = is_imbalanced(B0) and ray_count(B0) >= 4
    if not ok:
        raise AssertionError(f"seed {direction}({k}) fails its Gale predicate")
    return B0


@dataclass(frozen=True)
class PairConstruction:
    """Raw output of the generator, before certificates are attached."""

    m: int
    direction: str
    k: int
    seed: IntegerMatrix
    M0: IntegerMatrix
    basis: IntegerMatrix  # B, spans the saturation
    lattice_basis: IntegerMatrix  # B M, spans the lattice
    case_tag: str

    @property
    def expected_index(self) -> int:
        return abs(det(self.M0))


def construct_pair(m: int, direction: Direction, k: int) -> PairConstruction:
    if m < 2:
        raise ValueError("codimension must be at least 2")
    B0 = seed_matrix(direction, k)
    if direction == "ci_lattice":
        tr = four_quadrants_to_imbalanced(B0)
    else:
        tr = imbalanced_to_four_quadrants(B0)
    if abs(tr.det) < 2:
        raise DegenerateTransform(f"|det M0| = {abs(tr.det)} for {direction}({k})")
    B = block_embed(B0, m)
    M = block_transform(tr.M, m)
    return PairConstruction(m, direction, k, B0, tr.M, B, B @ M, tr.case_tag)


def generate_pair(m: int, direction: Direction, k: int):
    """Build the certified pair for family member ``k`` in codimension ``m``.

    The lattice is spanned by ``B M`` and its saturation by ``B``, where
    ``B`` is the seed padded with copies of (1, -1) and ``M`` carries the
    rank-2 basis change in its top-left block.  Certificates are attached
    but the pair is not yet verified; see :func:`latticecm.certify.verify_pair`.
    """
    from .certify import build_pair

    return build_pair(construct_pair(m, direction, k))


def primitive_rays(B) -> set[tuple[int, ...]]:
    return {primitive_direction(r) for r in as_matrix(B).rows}
