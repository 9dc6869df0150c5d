"""Support complexes of fibers and their reduced homology.

Complexes are stored by their facets, each facet a vertex bitmask
(vertex ``i`` is bit ``i``; vertices are numbered from 0).  Two degenerate
complexes are kept apart:

* the *void* complex has no faces at all (``facets == ()``);
* the *empty* complex ``{∅}`` has the single face ∅ (``facets == (0,)``).

The void complex has no reduced homology; the empty complex has
``H̃_{-1} = k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .errors import InvalidField
from .fiber import Fiber, nonneg_members
from .lattice import Lattice

DEFAULT_PRIME = 32003


def _bits(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def _maximal(masks: Iterable[int]) -> tuple[int, ...]:
    uniq = sorted(set(masks), key=lambda m: (-bin(m).count("1"), m))
    kept: list[int] = []
    for m in uniq:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class SupportComplex:
    vertex_count: int
    facets: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "facets", _maximal(self.facets))

    @classmethod
    def from_faces(cls, vertex_count: int, faces: Iterable[Iterable[int]]) -> SupportComplex:
        return cls(vertex_count, tuple(sum(1 << v for v in f) for f in faces))

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int:
        """Largest face dimension; -1 for ``{∅}`` and -2 for the void complex."""
        return max((bin(f).count("1") for f in self.facets), default=-1) - 1

    def facet_sets(self) -> list[tuple[int, ...]]:
        return [tuple(_bits(f)) for f in self.facets]

    def faces(self) -> dict[int, list[int]]:
        """All faces grouped by dimension, each group sorted."""
        seen: set[int] = set()
        for f in self.facets:
            sub = f
            while True:
                seen.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & f
        out: dict[int, list[int]] = {}
        for s in seen:
            out.setdefault(bin(s).count("1") - 1, []).append(s)
        return {d: sorted(v) for d, v in sorted(out.items())}


def void_complex(n: int = 0) -> SupportComplex:
    return SupportComplex(n, ())


def empty_complex(n: int = 0) -> SupportComplex:
    return SupportComplex(n, (0,))


def two_points() -> SupportComplex:
    return SupportComplex(2, (0b01, 0b10))


def simplex_boundary(k: int) -> SupportComplex:
    """All proper faces of the simplex on ``k + 1`` vertices."""
    full = (1 << (k + 1)) - 1
    return SupportComplex(k + 1, tuple(full ^ (1 << i) for i in range(k + 1)))


def support_complex(F: Fiber) -> SupportComplex:
    """Faces are the subsets of supports of nonnegative members of ``F``."""
    members = nonneg_members(F)
    masks = [sum(1 << i for i, x in enumerate(a) if x) for a in members]
    return SupportComplex(F.lattice.ambient_dim, tuple(masks))


def join(D1: SupportComplex, D2: SupportComplex) -> SupportComplex:
    """Simplicial join; ``D2``'s vertices are shifted past ``D1``'s.

    Joining with the void complex returns the other complex relabelled onto
    the combined vertex set (void acts as an identity element).
    """
    n = D1.vertex_count + D2.vertex_count
    shift = D1.vertex_count
    if D1.is_void:
        return SupportComplex(n, tuple(f << shift for f in D2.facets))
    if D2.is_void:
        return SupportComplex(n, D1.facets)
    return SupportComplex(n, tuple(a | (b << shift) for a, b in product(D1.facets, D2.facets)))


def suspension(D: SupportComplex) -> SupportComplex:
    return join(D, two_points())


def _check_field(field) -> int | None:
    if field in (None, "q", "Q", 0):
        return None
    p = int(field)
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise InvalidField(f"{field!r} is not a prime")
    return p


def _boundary_rows(lower: Sequence[int], upper: Sequence[int]) -> list[dict[int, int]]:
    # one sparse row per face in `upper`, indexed by faces in `lower`
    index = {f: i for i, f in enumerate(lower)}
    rows = []
    for f in upper:
        row = {}
        for pos, v in enumerate(_bits(f)):
            row[index[f & ~(1 << v)]] = -1 if pos % 2 else 1
        rows.append(row)
    return rows


def boundary_matrix(D: SupportComplex, j: int) -> list[list[int]]:
    """Dense matrix of the boundary map from ``j``-faces to ``(j-1)``-faces.

    Rows index ``(j-1)``-faces and columns ``j``-faces, both in the order of
    :meth:`SupportComplex.faces`.  ``j = 0`` is the augmentation map.
    """
    faces = D.faces()
    lower, upper = faces.get(j - 1, []), faces.get(j, [])
    cols = _boundary_rows(lower, upper)
    return [[c.get(i, 0) for c in cols] for i in range(len(lower))]


def _sparse_rank(rows: list[dict[int, int]], p: int | None) -> int:
    pivots: dict[int, dict] = {}
    for raw in rows:
        if p is None:
            r = {k: Fraction(v) for k, v in raw.items() if v}
        else:
            r = {k: v % p for k, v in raw.items() if v % p}
        while r:
            c = min(r)
            piv = pivots.get(c)
            if piv is None:
                inv = 1 / r[c] if p is None else pow(r[c], -1, p)
                pivots[c] = {
                    k: (v * inv if p is None else v * inv % p) for k, v in r.items()
                }
                break
            f = r[c]
            for k, v in piv.items():
                nv = r.get(k, 0) - f * v
                if p is not None:
                    nv %= p
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
    return len(pivots)


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced homology ranks; ``ranks[0]`` is dimension -1."""

    field: int | None
    ranks: tuple[int, ...]

    def __getitem__(self, j: int) -> int:
        i = j + 1
        return self.ranks[i] if 0 <= i < len(self.ranks) else 0

    def nonzero(self) -> dict[int, int]:
        return {j - 1: r for j, r in enumerate(self.ranks) if r}


def reduced_homology_ranks(D: SupportComplex, field=None) -> HomologyProfile:
    """Ranks of reduced homology over Q (default) or GF(p).

    Uses ``rank H̃_j = f_j - rank ∂_j - rank ∂_{j+1}`` on the augmented chain
    complex, with ``∂_0`` mapping every vertex to the empty face.
    """
    p = _check_field(field)
    if D.is_void:
        return HomologyProfile(p, (0,))
    faces = D.faces()
    top = max(faces)
    brank = {}
    for j in range(0, top + 1):
        brank[j] = _sparse_rank(_boundary_rows(faces[j - 1], faces[j]), p)
    ranks = []
    for j in range(-1, top + 1):
        ranks.append(len(faces[j]) - brank.get(j, 0) - brank.get(j + 1, 0))
    return HomologyProfile(p, tuple(ranks))


def betti_number(L: Lattice, j: int, C: Fiber, field=None) -> int:
    """Multigraded Betti number ``β_{j,C}`` as ``rank H̃_{j-1}(Δ_C)``."""
    if C.lattice != L:
        raise ValueError("fiber belongs to a different lattice")
    return reduced_homology_ranks(support_complex(C), field)[j - 1]
