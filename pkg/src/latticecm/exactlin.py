"""Exact integer and rational linear algebra.

Everything here works on Python ints and :class:`fractions.Fraction`, so
there is no overflow and no rounding.  Matrices are small (tens of rows),
so the textbook algorithms are used throughout.
"""

from __future__ import annotations

import operator
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionError

RationalVector = tuple[Fraction, ...]


class IntegerMatrix:
    """Immutable dense matrix of arbitrary-precision integers."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable[int]]):
        data = tuple(tuple(operator.index(x) for x in row) for row in rows)
        if not data or not data[0]:
            raise DimensionError("matrix must have at least one row and one column")
        width = len(data[0])
        if any(len(r) != width for r in data):
            raise DimensionError("rows have inconsistent lengths")
        self._rows = data

    @classmethod
    def identity(cls, n: int) -> IntegerMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntegerMatrix:
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> IntegerMatrix:
        return cls(zip(*columns))

    @classmethod
    def block_diag(cls, *blocks: IntegerMatrix) -> IntegerMatrix:
        ncols = sum(b.ncols for b in blocks)
        rows = []
        offset = 0
        for b in blocks:
            for r in b.rows:
                rows.append([0] * offset + list(r) + [0] * (ncols - offset - b.ncols))
            offset += b.ncols
        return cls(rows)

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    @property
    def shape(self) -> tuple[int, int]:
        return len(self._rows), len(self._rows[0])

    @property
    def nrows(self) -> int:
        return len(self._rows)

    @property
    def ncols(self) -> int:
        return len(self._rows[0])

    def row(self, i: int) -> tuple[int, ...]:
        return self._rows[i]

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self._rows)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.col(j) for j in range(self.ncols)]

    @property
    def T(self) -> IntegerMatrix:
        return IntegerMatrix(zip(*self._rows))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> IntegerMatrix:
        return IntegerMatrix([[self._rows[i][j] for j in cols] for i in rows])

    def is_zero(self) -> bool:
        return not any(any(r) for r in self._rows)

    def __matmul__(self, other: IntegerMatrix) -> IntegerMatrix:
        if not isinstance(other, IntegerMatrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.columns()
        return IntegerMatrix(
            [[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self._rows]
        )

    def __neg__(self) -> IntegerMatrix:
        return IntegerMatrix([[-x for x in r] for r in self._rows])

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        """Matrix-vector product ``self @ v``."""
        if len(v) != self.ncols:
            raise DimensionError(f"vector of length {len(v)} for {self.shape} matrix")
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self._rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self._rows[i][j]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntegerMatrix):
            return self._rows == other._rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._rows)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self._rows]

    def __repr__(self) -> str:
        return f"IntegerMatrix({self.tolist()!r})"


def as_matrix(A) -> IntegerMatrix:
    return A if isinstance(A, IntegerMatrix) else IntegerMatrix(A)


def _identity_rows(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def hermite_normal_form(A) -> tuple[IntegerMatrix, IntegerMatrix]:
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``U`` unimodular and ``H == U @ A``.  Pivots of
    ``H`` are positive, the entries above each pivot lie in ``[0, pivot)``
    and zero rows come last.  ``H`` depends only on the row space of ``A``.

    >>> H, U = hermite_normal_form([[2, 4], [1, 3]])
    >>> H.tolist()
    [[1, 1], [0, 2]]
    """
    A = as_matrix(A)
    m, n = A.shape
    H = A.tolist()
    U = _identity_rows(m)

    def swap(i, k):
        H[i], H[k] = H[k], H[i]
        U[i], U[k] = U[k], U[i]

    def subtract(k, i, q):
        # row k -= q * row i
        H[k] = [a - q * b for a, b in zip(H[k], H[i])]
        U[k] = [a - q * b for a, b in zip(U[k], U[i])]

    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            nonzero = [i for i in range(r, m) if H[i][c]]
            if not nonzero:
                break
            i = min(nonzero, key=lambda i: (abs(H[i][c]), i))
            swap(r, i)
            clean = True
            for k in range(r + 1, m):
                if H[k][c]:
                    subtract(k, r, H[k][c] // H[r][c])
                    clean = clean and H[k][c] == 0
            if clean:
                break
        if H[r][c] == 0:
            continue
        if H[r][c] < 0:
            H[r] = [-x for x in H[r]]
            U[r] = [-x for x in U[r]]
        for k in range(r):
            q = H[k][c] // H[r][c]
            if q:
                subtract(k, r, q)
        r += 1
    return IntegerMatrix(H), IntegerMatrix(U)


def smith_normal_form(A) -> tuple[IntegerMatrix, IntegerMatrix, IntegerMatrix]:
    """Smith normal form ``D == U @ A @ V`` with ``U``, ``V`` unimodular.

    The nonzero diagonal entries ``d_1 | d_2 | ... | d_r`` are positive and
    ``r`` is the rank of ``A``.
    """
    A = as_matrix(A)
    m, n = A.shape
    D = A.tolist()
    U = _identity_rows(m)
    V = _identity_rows(n)

    def swap_rows(i, k):
        D[i], D[k] = D[k], D[i]
        U[i], U[k] = U[k], U[i]

    def swap_cols(j, k):
        for row in D:
            row[j], row[k] = row[k], row[j]
        for row in V:
            row[j], row[k] = row[k], row[j]

    def add_row(k, i, q):
        # row k += q * row i
        D[k] = [a + q * b for a, b in zip(D[k], D[i])]
        U[k] = [a + q * b for a, b in zip(U[k], U[i])]

    def add_col(k, j, q):
        # col k += q * col j
        for row in D:
            row[k] += q * row[j]
        for row in V:
            row[k] += q * row[j]

    for t in range(min(m, n)):
        entries = [
            (abs(D[i][j]), i, j)
            for i in range(t, m)
            for j in range(t, n)
            if D[i][j]
        ]
        if not entries:
            break
        _, i, j = min(entries)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = D[t][t]
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // p))
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // p))
            leftovers = [(abs(D[i][t]), 0, i) for i in range(t + 1, m) if D[i][t]]
            leftovers += [(abs(D[t][j]), 1, j) for j in range(t + 1, n) if D[t][j]]
            if leftovers:
                # remainders are strictly smaller than the pivot
                _, kind, k = min(leftovers)
                if kind == 0:
                    swap_rows(t, k)
                else:
                    swap_cols(t, k)
                continue
            bad = next(
                (
                    i
                    for i in range(t + 1, m)
                    for j in range(t + 1, n)
                    if D[i][j] % p
                ),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
    return IntegerMatrix(D), IntegerMatrix(U), IntegerMatrix(V)


def invariant_factors(A) -> tuple[int, ...]:
    D, _, _ = smith_normal_form(A)
    return tuple(D[i, i] for i in range(min(D.shape)) if D[i, i])


def rank(A) -> int:
    """Rank by fraction-free (Bareiss) elimination."""
    A = as_matrix(A)
    M = A.tolist()
    m, n = A.shape
    r = 0
    prev = 1
    for c in range(n):
        piv = next((i for i in range(r, m) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        p = M[r][c]
        for i in range(r + 1, m):
            a = M[i][c]
            row = M[i]
            for j in range(c + 1, n):
                row[j] = (row[j] * p - a * M[r][j]) // prev
            row[c] = 0
        prev = p
        r += 1
        if r == m:
            break
    return r


def det(A) -> int:
    """Determinant by Bareiss elimination; exact."""
    A = as_matrix(A)
    n, k = A.shape
    if n != k:
        raise DimensionError(f"determinant of non-square {A.shape} matrix")
    M = A.tolist()
    sign = 1
    prev = 1
    for c in range(n - 1):
        if M[c][c] == 0:
            piv = next((i for i in range(c + 1, n) if M[i][c]), None)
            if piv is None:
                return 0
            M[c], M[piv] = M[piv], M[c]
            sign = -sign
        p = M[c][c]
        for i in range(c + 1, n):
            a = M[i][c]
            row = M[i]
            for j in range(c + 1, n):
                row[j] = (row[j] * p - a * M[c][j]) // prev
        prev = p
    return sign * M[n - 1][n - 1]


def rref(A) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over the rationals and its pivot columns."""
    A = as_matrix(A)
    R = [[Fraction(x) for x in row] for row in A.rows]
    m, n = A.shape
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if R[i][c]), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        p = R[r][c]
        R[r] = [x / p for x in R[r]]
        for i in range(m):
            if i != r and R[i][c]:
                f = R[i][c]
                R[i] = [a - f * b for a, b in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return R, pivots


def rational_kernel_basis(A) -> list[RationalVector]:
    """Basis of the right null space of ``A`` over the rationals."""
    A = as_matrix(A)
    R, pivots = rref(A)
    n = A.ncols
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, p in zip(R, pivots):
            v[p] = -row[f]
        basis.append(tuple(v))
    return basis


def primitive_integer_vector(v: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a rational vector to the primitive integer vector on its ray."""
    from math import gcd, lcm

    den = lcm(*(Fraction(x).denominator for x in v)) if v else 1
    ints = [int(Fraction(x) * den) for x in v]
    g = gcd(*ints)
    return tuple(x // g for x in ints) if g else tuple(ints)


def hnf_reduce(H: IntegerMatrix, v: Sequence[int]) -> tuple[int, ...]:
    """Reduce ``v`` modulo the row lattice of the Hermite form ``H``.

    The result is a canonical representative of ``v + rowspace_Z(H)``: its
    entries in pivot columns lie in ``[0, pivot)``.  ``v`` lies in the row
    lattice iff the result is zero.
    """
    if len(v) != H.ncols:
        raise DimensionError(f"vector of length {len(v)} for {H.shape} Hermite form")
    v = list(v)
    for row in H.rows:
        c = next((j for j, x in enumerate(row) if x), None)
        if c is None:
            break
        q = v[c] // row[c]
        if q:
            v = [a - q * b for a, b in zip(v, row)]
    return tuple(v)


def feasible_nonneg(A: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """Find ``x >= 0`` with ``A x = b`` exactly, or return None.

    Phase-one simplex over the rationals with Bland's rule, so it always
    terminates.
    """
    p = len(A)
    n = len(A[0]) if p else 0
    rows = []
    for i in range(p):
        sign = -1 if b[i] < 0 else 1
        coeffs = [Fraction(sign * a) for a in A[i]]
        art = [Fraction(int(k == i)) for k in range(p)]
        rows.append(coeffs + art + [Fraction(sign * b[i])])
    basis = [n + i for i in range(p)]
    width = n + p
    # reduced costs for minimising the sum of artificials; last entry is -objective
    cost = [-sum(rows[i][j] for i in range(p)) for j in range(n)] + [Fraction(0)] * p
    cost.append(-sum(rows[i][width] for i in range(p)))

    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(p):
            a = rows[i][enter]
            if a > 0:
                key = (rows[i][width] / a, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        i = best[1]
        piv = rows[i][enter]
        rows[i] = [x / piv for x in rows[i]]
        for k in range(p):
            if k != i and rows[k][enter]:
                f = rows[k][enter]
                rows[k] = [a - f * c for a, c in zip(rows[k], rows[i])]
        f = cost[enter]
        cost = [a - f * c for a, c in zip(cost, rows[i])]
        basis[i] = enter

    if cost[width] != 0:
        return None
    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        if j < n:
            x[j] = rows[i][width]
    return x
