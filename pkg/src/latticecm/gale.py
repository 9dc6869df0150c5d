"""Gale diagrams and the sign/angle predicates used to classify them.

A Gale diagram is just the list of rows of a basis matrix, read as points
of Z^m.  For m = 2 all angular reasoning is done with integer cross
products; no trigonometry is involved.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cmp_to_key
from math import gcd
from typing import Literal, Sequence

from .errors import WrongCodim, ZeroPoint
from .exactlin import IntegerMatrix, as_matrix
from .lattice import Lattice, is_mixed_columns

Point = tuple[int, ...]
QuadrantCoverage = frozenset  # subset of {1, 2, 3, 4}
ALL_QUADRANTS = frozenset({1, 2, 3, 4})


@dataclass(frozen=True)
class GaleDiagram:
    points: tuple[Point, ...]

    @property
    def dim(self) -> int:
        return len(self.points[0])

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


def gale_diagram(L) -> GaleDiagram:
    """Rows of the basis of ``L`` (a Lattice or a matrix), in order."""
    B = L.basis if isinstance(L, Lattice) else as_matrix(L)
    return GaleDiagram(B.rows)


def _points(G) -> tuple[Point, ...]:
    if isinstance(G, GaleDiagram):
        return G.points
    if isinstance(G, Lattice):
        return G.basis.rows
    return as_matrix(G).rows


def _planar(G) -> tuple[Point, ...]:
    pts = _points(G)
    if len(pts[0]) != 2:
        raise WrongCodim(f"expected points in Z^2, got dimension {len(pts[0])}")
    return pts


def cross(u: Sequence[int], v: Sequence[int]) -> int:
    return u[0] * v[1] - u[1] * v[0]


def quadrant(p: Sequence[int]) -> int:
    """Open quadrant (1-4) containing ``p``; 0 for points on an axis."""
    x, y = p
    if x > 0 and y > 0:
        return 1
    if x < 0 < y:
        return 2
    if x < 0 and y < 0:
        return 3
    if x > 0 > y:
        return 4
    return 0


def is_mixed(A) -> bool:
    """Every column has a strictly positive and a strictly negative entry."""
    return is_mixed_columns(as_matrix(A))


def _mixed_square_exists(A: IntegerMatrix) -> bool:
    n, m = A.shape
    pos = [{i for i in range(n) if A[i, j] > 0} for j in range(m)]
    neg = [{i for i in range(n) if A[i, j] < 0} for j in range(m)]
    for k in range(2, min(n, m) + 1):
        for cols in itertools.combinations(range(m), k):
            # rows outside every column's support can never help
            useful = sorted(set().union(*(pos[j] | neg[j] for j in cols)))
            if len(useful) < k:
                continue
            for rows in itertools.combinations(useful, k):
                rs = set(rows)
                if all(pos[j] & rs and neg[j] & rs for j in cols):
                    return True
    return False


def is_dominating(A) -> bool:
    """True iff no square submatrix of ``A`` is mixed."""
    return not _mixed_square_exists(as_matrix(A))


def is_imbalanced(G) -> bool:
    """Every point has first coordinate 0 or second coordinate >= 0."""
    return all(x == 0 or y >= 0 for x, y in _planar(G))


def quadrant_coverage(G) -> QuadrantCoverage:
    return frozenset(q for q in map(quadrant, _planar(G)) if q)


def primitive_direction(p: Sequence[int]) -> Point:
    g = gcd(*p)
    if g == 0:
        raise ZeroPoint("the zero vector spans no ray")
    return tuple(x // g for x in p)


def ray_count(G) -> int:
    return len({primitive_direction(p) for p in _planar(G)})


def _angle_cmp(p: Point, q: Point) -> int:
    # valid for points in the closed upper half-plane
    c = cross(p, q)
    if c:
        return -1 if c > 0 else 1
    if p[0] * q[0] + p[1] * q[1] > 0:
        return 0
    # opposite horizontal directions: angle 0 comes before angle pi
    return -1 if p[0] > 0 else 1


def angular_sort_upper(G) -> list[int]:
    """Indices of points with ``y > 0`` or on the horizontal axis, by angle.

    Angles run counter-clockwise from the positive horizontal axis, so the
    first index is the rightmost point and the last the leftmost.  Points
    on a common ray keep their original order.
    """
    pts = _planar(G)
    upper = [i for i, (x, y) in enumerate(pts) if y > 0 or (y == 0 and x != 0)]
    return sorted(
        upper,
        key=cmp_to_key(lambda i, j: _angle_cmp(pts[i], pts[j]) or (i > j) - (i < j)),
    )


def strictly_between(v: Sequence[int], u: Sequence[int], w: Sequence[int]) -> bool:
    """``u`` lies strictly inside the counter-clockwise sweep from ``v`` to ``w``."""
    return cross(v, u) > 0 and cross(u, w) > 0


Target = Literal["imbalanced", "four_quadrants"]


def _target_predicate(target: str):
    if target == "imbalanced":
        return is_imbalanced
    if target == "four_quadrants":
        return lambda G: quadrant_coverage(G) == ALL_QUADRANTS
    raise ValueError(f"unknown target {target!r}")


def unimodular_candidates(bound: int):
    """2x2 matrices of determinant +-1 with entries in ``[-bound, bound]``.

    Ordered by maximum absolute entry, then lexicographically, after the
    identity which is always offered first.
    """
    yield IntegerMatrix.identity(2)
    for h in range(1, bound + 1):
        for a, b, c, d in itertools.product(range(-h, h + 1), repeat=4):
            if max(abs(a), abs(b), abs(c), abs(d)) != h:
                continue
            if abs(a * d - b * c) == 1 and (a, b, c, d) != (1, 0, 0, 1):
                yield IntegerMatrix([[a, b], [c, d]])


def search_unimodular_witness(L, target: Target, bound: int) -> IntegerMatrix | None:
    """Bounded search for unimodular ``M`` making ``G_{BM}`` satisfy ``target``.

    Returns None when nothing qualifies within ``bound``; that is not a
    proof that no such basis exists.
    """
    B = L.basis if isinstance(L, Lattice) else as_matrix(L)
    if B.ncols != 2:
        raise WrongCodim(f"witness search needs rank 2, got {B.ncols}")
    pred = _target_predicate(target)
    for M in unimodular_candidates(bound):
        if pred(B @ M):
            return M
    return None
