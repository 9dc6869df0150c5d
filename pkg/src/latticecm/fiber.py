"""Fibers of Z^n modulo a lattice and their nonnegative members."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterator, Sequence

from .errors import DimensionError, NotPositive
from .lattice import Lattice, is_positive

Vector = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class Fiber:
    """The coset ``representative + L``."""

    lattice: Lattice
    representative: Vector

    def residue(self) -> Vector:
        return self.lattice.reduce(self.representative)

    def contains(self, u: Sequence[int]) -> bool:
        diff = [a - b for a, b in zip(u, self.representative)]
        return len(u) == len(self.representative) and self.lattice.contains(diff)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Fiber):
            return NotImplemented
        return self.lattice == other.lattice and self.residue() == other.residue()

    def __hash__(self) -> int:
        return hash((self.lattice, self.residue()))


def positive_part(u: Sequence[int]) -> Vector:
    return tuple(max(x, 0) for x in u)


def negative_part(u: Sequence[int]) -> Vector:
    return tuple(max(-x, 0) for x in u)


def fiber_of(L: Lattice, u: Sequence[int]) -> Fiber:
    if len(u) != L.ambient_dim:
        raise DimensionError(f"vector of length {len(u)} in ambient dimension {L.ambient_dim}")
    return Fiber(L, tuple(int(x) for x in u))


def column_sum_degree(L: Lattice, cols: Sequence[int] | None = None) -> Vector:
    """Sum of the positive parts of the chosen basis columns (all by default)."""
    columns = L.columns()
    if cols is None:
        cols = range(len(columns))
    total = [0] * L.ambient_dim
    for j in cols:
        for i, x in enumerate(positive_part(columns[j])):
            total[i] += x
    return tuple(total)


def syzygy_fiber(L: Lattice) -> Fiber:
    return Fiber(L, column_sum_degree(L))


# A constraint (a, r) means sum_j a[j] * z[j] >= r over integer z.
Constraint = tuple[tuple[int, ...], int]


def _tighten(a: tuple[int, ...], r: int) -> Constraint:
    g = gcd(*a)
    if g > 1:
        # valid for integer points: divide and round the bound up
        return tuple(x // g for x in a), -((-r) // g)
    return a, r


def _eliminate_last(cons: list[Constraint]) -> list[Constraint]:
    """Fourier-Motzkin elimination of the last variable."""
    keep, lower, upper = [], [], []
    for a, r in cons:
        c = a[-1]
        if c > 0:
            lower.append((a, r))
        elif c < 0:
            upper.append((a, r))
        else:
            keep.append((a[:-1], r))
    for a, r in lower:
        p = a[-1]
        for b, s in upper:
            q = -b[-1]
            combo = tuple(q * x + p * y for x, y in zip(a[:-1], b[:-1]))
            keep.append((combo, q * r + p * s))
    out = set()
    for a, r in keep:
        out.add(_tighten(a, r) if any(a) else (a, r))
    return _prune(out)


def _prune(cons) -> list[Constraint]:
    # among parallel constraints with equal left side keep the strongest
    best: dict[tuple[int, ...], int] = {}
    for a, r in cons:
        if a not in best or r > best[a]:
            best[a] = r
    return sorted(best.items())


def _first_variable_range(cons: list[Constraint], nvars: int) -> tuple[int, int] | None:
    for _ in range(nvars - 1):
        cons = _eliminate_last(cons)
    lo = hi = None
    for a, r in cons:
        c = a[0] if a else 0
        if c == 0:
            if r > 0:
                return None
        elif c > 0:
            b = -((-r) // c)
            lo = b if lo is None else max(lo, b)
        else:
            # c z >= r with c < 0  ->  z <= r / c, rounded down
            b = r // c
            hi = b if hi is None else min(hi, b)
    if lo is None or hi is None:
        raise NotPositive("enumeration region is unbounded")
    if lo > hi:
        return None
    return lo, hi


def _enumerate(cons: list[Constraint], nvars: int) -> Iterator[tuple[int, ...]]:
    if nvars == 0:
        if all(r <= 0 for _, r in cons):
            yield ()
        return
    rng = _first_variable_range(cons, nvars)
    if rng is None:
        return
    lo, hi = rng
    for z0 in range(lo, hi + 1):
        sub = _prune((a[1:], r - a[0] * z0) for a, r in cons)
        for rest in _enumerate(sub, nvars - 1):
            yield (z0,) + rest


def lattice_points_in_region(B, c: Sequence[int]) -> list[tuple[int, ...]]:
    """All integer ``z`` with ``c + B z >= 0``; the region must be bounded."""
    cons = _prune((tuple(row), -ci) for row, ci in zip(B.rows, c))
    return list(_enumerate(cons, B.ncols))


def nonneg_members(F: Fiber) -> list[Vector]:
    """Every coordinatewise nonnegative vector in ``F``, sorted.

    The lattice must be positive, which makes ``{z : c + B z >= 0}`` a
    polytope; its integer points are listed exactly by Fourier-Motzkin
    bounds on each coordinate in turn.
    """
    L = F.lattice
    if not is_positive(L).positive:
        raise NotPositive("fiber of a non-positive lattice has infinitely many members")
    c = F.representative
    B = L.basis
    return sorted(
        tuple(ci + bi for ci, bi in zip(c, B.apply(z)))
        for z in lattice_points_in_region(B, c)
    )
