"""Brute-force reference computations used by the tests.

Nothing here calls into the elimination, Hermite/Smith, Fourier-Motzkin
or simplex code of the package; these are the slow obvious versions.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from math import gcd

from latticecm.gale import quadrant


def leibniz_det(M) -> int:
    n = len(M)
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(
            1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j]
        )
        term = -1 if inversions % 2 else 1
        for i in range(n):
            term *= M[i][perm[i]]
        total += term
    return total


def minors_gcd(A, k: int) -> int:
    g = 0
    rows, cols = len(A), len(A[0])
    for rs in itertools.combinations(range(rows), k):
        for cs in itertools.combinations(range(cols), k):
            g = gcd(g, leibniz_det([[A[i][j] for j in cs] for i in rs]))
    return g


def brute_rank(A) -> int:
    for k in range(min(len(A), len(A[0])), 0, -1):
        if minors_gcd(A, k):
            return k
    return 0


def cramer(M, b):
    """Solve a square system with Cramer's rule; None when singular."""
    d = leibniz_det(M)
    if d == 0:
        return None
    n = len(M)
    out = []
    for j in range(n):
        Mj = [row[:j] + [b[i]] + row[j + 1:] for i, row in enumerate(M)]
        out.append(Fraction(leibniz_det(Mj), d))
    return out


class RationalSolver:
    """Solve ``B z = u`` over Q for a fixed full-column-rank ``B``."""

    def __init__(self, B):
        self.B = [list(r) for r in B]
        n, m = len(B), len(B[0])
        for rows in itertools.combinations(range(n), m):
            sub = [self.B[i] for i in rows]
            if leibniz_det(sub):
                self.rows = rows
                self.sub = sub
                break

    def solve(self, u):
        z = cramer(self.sub, [u[i] for i in self.rows])
        for row, ui in zip(self.B, u):
            if sum(a * x for a, x in zip(row, z)) != ui:
                return None
        return z


def in_lattice(solver: RationalSolver, u) -> bool:
    z = solver.solve(u)
    return z is not None and all(x.denominator == 1 for x in z)


def in_saturation_bruteforce(solver: RationalSolver, u, bound: int) -> bool:
    z = solver.solve(u)
    if z is None:
        return False
    return any(all((q * x).denominator == 1 for x in z) for q in range(1, bound + 1))


def polytope_box(B, c):
    """Integer box containing every ``z`` with ``c + B z >= 0``.

    Built from the vertices of the polytope (all ``m``-subsets of tight
    constraints solved by Cramer's rule).  None if there is no vertex.
    """
    n, m = len(B), len(B[0])
    verts = []
    for rows in itertools.combinations(range(n), m):
        z = cramer([list(B[i]) for i in rows], [-c[i] for i in rows])
        if z is None:
            continue
        if all(c[i] + sum(B[i][j] * z[j] for j in range(m)) >= 0 for i in range(n)):
            verts.append(z)
    if not verts:
        return None
    lo = [min(v[j] for v in verts) for j in range(m)]
    hi = [max(v[j] for v in verts) for j in range(m)]
    return [(int(l // 1), -int((-h) // 1)) for l, h in zip(lo, hi)]


def nonneg_members_bruteforce(B, c):
    box = polytope_box(B, c)
    if box is None:
        return []
    out = set()
    for z in itertools.product(*(range(lo, hi + 1) for lo, hi in box)):
        a = tuple(ci + sum(bj * zj for bj, zj in zip(row, z)) for ci, row in zip(c, B))
        if min(a) >= 0:
            out.add(a)
    return sorted(out)


def positive_bruteforce(B, radius: int) -> bool:
    """No nonzero combination with coefficients in the box is nonnegative."""
    m = len(B[0])
    for z in itertools.product(range(-radius, radius + 1), repeat=m):
        if any(z):
            u = [sum(r[j] * z[j] for j in range(m)) for r in B]
            if min(u) >= 0:
                return False
    return True


# ---------------------------------------------------------------- generators

def _in_quadrant(rng: random.Random, q: int, lim: int):
    sx = 1 if q in (1, 4) else -1
    sy = 1 if q in (1, 2) else -1
    return (sx * rng.randint(1, lim), sy * rng.randint(1, lim))


def random_four_quadrant(rng: random.Random, lim: int = 9):
    rows = [_in_quadrant(rng, q, lim) for q in (1, 2, 3, 4)]
    rng.shuffle(rows)
    assert sorted(quadrant(r) for r in rows) == [1, 2, 3, 4]
    return [list(r) for r in rows]


def random_imbalanced(rng: random.Random, lim: int = 9):
    """Imbalanced n x 2 rows (n in 4..7) with at least four rays."""
    from latticecm.gale import is_imbalanced, ray_count
    from latticecm.lattice import from_basis, is_positive

    while True:
        n = rng.randint(4, 7)
        rows = [(0, -rng.randint(1, lim))]
        while len(rows) < n:
            kind = rng.random()
            if kind < 0.15:
                r = (0, rng.choice([-1, 1]) * rng.randint(1, lim))
            else:
                r = (rng.randint(-lim, lim), rng.randint(0, lim))
            if r != (0, 0):
                rows.append(r)
        rng.shuffle(rows)
        if not is_imbalanced(rows) or ray_count(rows) < 4:
            continue
        if brute_rank(rows) < 2:
            continue
        if is_positive(from_basis(rows, min_ambient=1)).positive:
            return [list(r) for r in rows]


def random_positive_lattice(rng: random.Random, n: int, m: int, lim: int):
    from latticecm.lattice import from_basis, is_positive

    while True:
        B = [[rng.randint(-lim, lim) for _ in range(m)] for _ in range(n)]
        if any(not any(r) for r in B) or brute_rank(B) < m:
            continue
        L = from_basis(B, min_ambient=1)
        if is_positive(L).positive:
            return L


def random_complex_facets(rng: random.Random, nverts: int):
    k = rng.randint(1, 6)
    facets = []
    for _ in range(k):
        size = rng.randint(0, nverts)
        facets.append(rng.sample(range(nverts), size))
    return facets
