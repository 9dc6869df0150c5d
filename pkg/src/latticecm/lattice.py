"""Integer lattices given by a basis matrix, and their saturations."""

from __future__ import annotations

from functools import lru_cache
from math import prod
from typing import NamedTuple, Sequence

from .errors import AmbientTooSmall, DimensionError, NotFullRank, ZeroRow
from .exactlin import (
    IntegerMatrix,
    as_matrix,
    feasible_nonneg,
    hermite_normal_form,
    hnf_reduce,
    invariant_factors,
    primitive_integer_vector,
    rank,
    smith_normal_form,
)

GradingVector = tuple[int, ...]


class Lattice:
    """The lattice spanned by the columns of a full-column-rank matrix.

    ``canonical`` is the Hermite form of the transposed basis; two lattices
    compare equal exactly when their canonical forms agree, whatever bases
    they were built from.
    """

    __slots__ = ("basis", "canonical")

    def __init__(self, basis: IntegerMatrix, canonical: IntegerMatrix):
        self.basis = basis
        self.canonical = canonical

    @property
    def ambient_dim(self) -> int:
        return self.basis.nrows

    @property
    def rank(self) -> int:
        return self.basis.ncols

    def columns(self) -> list[tuple[int, ...]]:
        return self.basis.columns()

    def reduce(self, u: Sequence[int]) -> tuple[int, ...]:
        """Canonical representative of ``u`` modulo the lattice."""
        return hnf_reduce(self.canonical, u)

    def contains(self, u: Sequence[int]) -> bool:
        return not any(self.reduce(u))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Lattice):
            return self.canonical == other.canonical
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.canonical)

    def __repr__(self) -> str:
        return f"Lattice({self.basis.tolist()!r})"


def from_basis(B, *, min_ambient: int = 3, allow_zero_rows: bool = False) -> Lattice:
    """Validate ``B`` and wrap it as a :class:`Lattice`.

    The basis must have full column rank and no zero rows.  By default the
    ambient dimension must exceed 2; pass ``min_ambient=1`` for auxiliary
    lattices such as the one spanned by ``(1, -1)``.  Zero rows (a variable
    untouched by the lattice) can be allowed for plain group computations
    like saturation.
    """
    B = as_matrix(B)
    for i, row in enumerate(B.rows):
        if not any(row) and not allow_zero_rows:
            raise ZeroRow(f"row {i} of the basis is zero")
    if B.nrows < min_ambient:
        raise AmbientTooSmall(f"ambient dimension {B.nrows} < {min_ambient}")
    if rank(B) != B.ncols:
        raise NotFullRank(f"basis of shape {B.shape} has rank {rank(B)}")
    H, _ = hermite_normal_form(B.T)
    return Lattice(B, H)


def saturate(L: Lattice) -> Lattice:
    """The saturation ``{u : q u in L for some q >= 1}``.

    With ``D = U B V`` in Smith form, column ``i`` of ``B V`` equals ``d_i``
    times column ``i`` of ``U^{-1}``; dividing out the invariant factors
    gives a basis of the saturation.  The returned basis is the transposed
    canonical form, so equal saturations come back with identical bases.
    """
    D, _, V = smith_normal_form(L.basis)
    BV = L.basis @ V
    cols = [
        [x // D[i, i] for x in BV.col(i)]
        for i in range(L.rank)
    ]
    H, _ = hermite_normal_form(IntegerMatrix(cols))
    return Lattice(H.T, H)


def saturation_index(L: Lattice) -> int:
    """The group index of ``L`` in its saturation."""
    return prod(invariant_factors(L.basis))


def lattices_equal(L1: Lattice, L2: Lattice) -> bool:
    if L1.ambient_dim != L2.ambient_dim:
        raise DimensionError(
            f"ambient dimensions differ: {L1.ambient_dim} vs {L2.ambient_dim}"
        )
    return L1 == L2


class Positivity(NamedTuple):
    """Outcome of :func:`is_positive`.

    ``certificate`` is a strictly positive grading vector orthogonal to the
    lattice when ``positive`` holds, and otherwise a nonzero nonnegative
    lattice vector.
    """

    positive: bool
    certificate: tuple[int, ...]


@lru_cache(maxsize=4096)
def is_positive(L: Lattice) -> Positivity:
    """Decide whether ``L`` meets the nonnegative orthant only at the origin.

    Looks for ``d >= 1`` with ``B^T d = 0`` by writing ``d = 1 + e``, ``e >= 0``
    (the condition is homogeneous, so ``d > 0`` may be scaled to ``d >= 1``).
    If that fails, Stiemke's alternative guarantees a rational ``y`` with
    ``B y >= 0`` and ``B y != 0``; it is found by a second feasibility
    problem and scaled to an integer lattice vector.
    """
    B = L.basis
    n, m = B.shape
    Bt = B.T
    ones_image = [-sum(r) for r in Bt.rows]
    e = feasible_nonneg(Bt.rows, ones_image)
    if e is not None:
        d = primitive_integer_vector([1 + x for x in e])
        if not is_mixed_columns(B):
            raise AssertionError(f"positive lattice with non-mixed basis {B!r}")
        return Positivity(True, d)

    # variables: y+ (m), y- (m), slack s (n), slack t (1)
    # B y+ - B y- - s = 0 ;  sum_i (B y)_i - t = 1
    rows = []
    for i in range(n):
        rows.append(
            list(B.row(i))
            + [-x for x in B.row(i)]
            + [-int(k == i) for k in range(n)]
            + [0]
        )
    colsum = [sum(B.col(j)) for j in range(m)]
    rows.append(colsum + [-x for x in colsum] + [0] * n + [-1])
    sol = feasible_nonneg(rows, [0] * n + [1])
    if sol is None:
        raise AssertionError("neither grading nor witness found; alternative violated")
    y = primitive_integer_vector([sol[j] - sol[m + j] for j in range(m)])
    return Positivity(False, B.apply(y))


def is_mixed_columns(B: IntegerMatrix) -> bool:
    return all(any(x > 0 for x in c) and any(x < 0 for x in c) for c in B.columns())
