import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latticecm.errors import ZeroPoint
from latticecm.exactlin import IntegerMatrix
from latticecm.gale import (
    ALL_QUADRANTS,
    angular_sort_upper,
    gale_diagram,
    is_dominating,
    is_imbalanced,
    is_mixed,
    primitive_direction,
    quadrant_coverage,
    ray_count,
    search_unimodular_witness,
    strictly_between,
)
from latticecm.lattice import from_basis
from latticecm.transform import block_embed

from oracles import leibniz_det

TETRA = [[2, -1], [3, 3], [-1, 5], [-4, -7]]


def test_gale_points():
    assert gale_diagram(from_basis(TETRA)).points == ((2, -1), (3, 3), (-1, 5), (-4, -7))
    assert gale_diagram(from_basis([[1], [-1]], min_ambient=1)).points == ((1,), (-1,))
    pts = gale_diagram(from_basis(block_embed(TETRA, 3))).points
    assert pts[:4] == ((2, -1, 0), (3, 3, 0), (-1, 5, 0), (-4, -7, 0))
    assert pts[4:] == ((0, 0, 1), (0, 0, -1))


def test_mixed():
    assert is_mixed([[1], [-1]])
    assert not is_mixed([[1], [2]])
    assert is_mixed(TETRA)


def test_dominating():
    assert is_dominating([[1], [-1]])
    assert is_dominating([[1, 0], [-1, 1], [0, -1]])
    assert not is_dominating([[1, -1], [-1, 1]])


def _dominating_oracle(A):
    n, m = len(A), len(A[0])
    for k in range(1, m + 1):
        for rows in itertools.combinations(range(n), k):
            for cols in itertools.combinations(range(m), k):
                if all(
                    any(A[i][j] > 0 for i in rows) and any(A[i][j] < 0 for i in rows)
                    for j in cols
                ):
                    return False
    return True


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 3).flatmap(
    lambda m: st.lists(st.lists(st.integers(-2, 2), min_size=m, max_size=m),
                       min_size=1, max_size=4)))
def test_dominating_matches_oracle(A):
    assert is_dominating(A) == _dominating_oracle(A)
    if is_dominating(A):
        for rows in itertools.combinations(A, max(1, len(A) - 1)):
            assert is_dominating(list(rows))


def test_imbalanced():
    assert is_imbalanced([[18, 0], [0, -6], [-27, 3], [9, 3]])
    assert not is_imbalanced(TETRA)
    assert is_imbalanced([[0, -1], [0, 1]])


def test_quadrant_coverage():
    assert quadrant_coverage(TETRA) == ALL_QUADRANTS
    assert quadrant_coverage([[1, 1], [-1, 1]]) == {1, 2}
    assert quadrant_coverage([[0, 1], [0, -1]]) == frozenset()


def test_ray_count():
    assert ray_count([[1, 2], [2, 4], [-1, -3], [0, 1]]) == 3
    assert ray_count([[2, 1], [1, 2], [-1, 3], [0, -1]]) == 4
    assert ray_count([[1, 0], [-1, 0]]) == 2
    with pytest.raises(ZeroPoint):
        primitive_direction((0, 0))


def test_angular_sort():
    rows = [[2, 1], [1, 2], [-1, 3], [0, -1]]
    assert angular_sort_upper(rows) == [0, 1, 2]
    assert angular_sort_upper([[1, 0], [0, 1], [-1, 0]]) == [0, 1, 2]
    assert angular_sort_upper([[2, 2], [1, 0], [1, 1]]) == [1, 0, 2]


def test_strictly_between():
    assert strictly_between((2, 1), (1, 2), (-1, 3))
    assert not strictly_between((2, 1), (2, 1), (-1, 3))
    assert not strictly_between((2, 1), (1, -2), (-1, 3))


def test_witness_identity_first():
    M = search_unimodular_witness(from_basis(TETRA), "four_quadrants", 1)
    assert M == IntegerMatrix.identity(2)


def _imbalanced_witness_oracle(rows, bound):
    for a, b, c, d in itertools.product(range(-bound, bound + 1), repeat=4):
        if abs(a * d - b * c) != 1:
            continue
        img = [(x * a + y * c, x * b + y * d) for x, y in rows]
        if all(p[0] == 0 or p[1] >= 0 for p in img):
            return True
    return False


def test_no_unimodular_witness_for_symmetric_diagram():
    rows = [[1, 1], [-1, 1], [1, -1], [-1, -1]]
    L = from_basis(rows)
    assert search_unimodular_witness(L, "imbalanced", 3) is None
    assert not _imbalanced_witness_oracle(rows, 3)


def test_axis_diagram_witnesses():
    rows = [[1, 0], [0, 1], [-1, 0], [0, -1]]
    L = from_basis(rows)
    M = search_unimodular_witness(L, "imbalanced", 1)
    assert M is not None and abs(leibniz_det(M.tolist())) == 1
    assert is_imbalanced(IntegerMatrix(rows) @ M)
    # four quadrants needs determinant 2, so no unimodular witness exists
    assert search_unimodular_witness(L, "four_quadrants", 3) is None
    T = IntegerMatrix(rows) @ IntegerMatrix([[1, -1], [1, 1]])
    assert quadrant_coverage(T) == ALL_QUADRANTS


@settings(max_examples=150, deadline=None)
@given(
    st.lists(st.tuples(st.integers(-6, 6), st.integers(-6, 6)).filter(any), min_size=1, max_size=6),
    st.sampled_from([[[1, 0], [0, 1]], [[1, 1], [0, 1]], [[2, 1], [1, 1]], [[0, -1], [1, 0]],
                     [[1, 0], [3, -1]], [[-1, 2], [-1, 1]]]),
    st.randoms(use_true_random=False),
)
def test_invariants(rows, U, rnd):
    assert ray_count(IntegerMatrix(rows) @ IntegerMatrix(U)) == ray_count(rows)
    perm = list(rows)
    rnd.shuffle(perm)
    assert ray_count(perm) == ray_count(rows)
    assert quadrant_coverage(perm) == quadrant_coverage(rows)
    assert is_imbalanced(perm) == is_imbalanced(rows)
    assert is_dominating(perm) == is_dominating(rows)
