"""End-to-end acceptance checks, one function per criterion.

Each ``criterion_N`` returns ``(passed, detail)``.  Under pytest the lines
are collected into the terminal summary; running this file directly
prints them as it goes.
"""

from __future__ import annotations

import itertools
import random
import time

import pytest

from latticecm.certify import syzygy_betti, verify_pair
from latticecm.complexes import (
    DEFAULT_PRIME,
    SupportComplex,
    betti_number,
    reduced_homology_ranks,
    simplex_boundary,
    support_complex,
    suspension,
)
from latticecm.fiber import fiber_of, negative_part, nonneg_members, positive_part, syzygy_fiber
from latticecm.gale import ALL_QUADRANTS, is_imbalanced, quadrant, quadrant_coverage
from latticecm.lattice import from_basis, lattices_equal, saturate, saturation_index
from latticecm.transform import (
    construct_pair,
    four_quadrants_to_imbalanced,
    generate_pair,
    imbalanced_to_four_quadrants,
)

from oracles import (
    RationalSolver,
    brute_rank,
    in_lattice,
    in_saturation_bruteforce,
    nonneg_members_bruteforce,
    random_complex_facets,
    random_four_quadrant,
    random_imbalanced,
    random_positive_lattice,
)

pytestmark = pytest.mark.acceptance


def criterion_1():
    start = time.perf_counter()
    L = from_basis([[2, -1], [3, 3], [-1, 5], [-4, -7]])
    C = syzygy_fiber(L)
    members = set(nonneg_members(C))
    D = support_complex(C)
    beta_q = betti_number(L, 3, C)
    beta_p = betti_number(L, 3, C, DEFAULT_PRIME)
    elapsed = time.perf_counter() - start
    ok = (
        members == {(2, 6, 5, 0), (3, 3, 0, 7), (0, 3, 6, 4), (1, 0, 1, 11)}
        and sorted(D.facet_sets()) == [tuple(s) for s in itertools.combinations(range(4), 3)]
        and beta_q == beta_p == 1
        and elapsed < 1.0
    )
    return ok, f"golden fiber, hollow tetrahedron, beta_3 = {beta_q} (Q) / {beta_p} (GF(p)) in {elapsed:.3f}s"


def criterion_2():
    rng = random.Random(2024)
    start = time.perf_counter()
    failures = 0
    for _ in range(300):
        L = from_basis(random_four_quadrant(rng))
        b1, b2 = L.columns()
        expected = {
            tuple(x + y for x, y in zip(p(b1), q(b2)))
            for p in (positive_part, negative_part)
            for q in (positive_part, negative_part)
        }
        C = syzygy_fiber(L)
        members = nonneg_members(C)
        if len(members) != 4 or set(members) != expected or betti_number(L, 3, C) != 1:
            failures += 1
    elapsed = time.perf_counter() - start
    return failures == 0 and elapsed < 60, f"300 four-quadrant lattices, {failures} failures, {elapsed:.2f}s"


def criterion_3():
    rng = random.Random(3)
    failures = 0
    generic = 0
    for _ in range(200):
        r = four_quadrants_to_imbalanced(random_four_quadrant(rng))
        if r.det == 0 or not is_imbalanced(r.transformed_basis):
            failures += 1
    for _ in range(200):
        r = imbalanced_to_four_quadrants(random_imbalanced(rng))
        if r.det == 0 or quadrant_coverage(r.transformed_basis) != ALL_QUADRANTS:
            failures += 1
        if r.case_tag == "generic":
            generic += 1
            img = r.transformed_basis.rows
            if [quadrant(img[r.auxiliary[k]]) for k in "acdj"] != [2, 1, 4, 3]:
                failures += 1
    return failures == 0, f"400 transforms ({generic} generic sign patterns), {failures} failures"


def criterion_4():
    rng = random.Random(4)
    failures = 0
    for i in range(100):
        n = rng.randint(1, 7)
        # a handful of {∅} inputs exercise the shift from dimension -1 to 0
        facets = [[]] if i < 5 else random_complex_facets(rng, n)
        D = SupportComplex.from_faces(n, facets)
        before = reduced_homology_ranks(D)
        after = reduced_homology_ranks(suspension(D))
        top = D.dim + 2
        if after[-1] != 0 or any(after[j + 1] != before[j] for j in range(-1, top)):
            failures += 1
    return failures == 0, f"100 random complexes, {failures} failures"


def criterion_5():
    start = time.perf_counter()
    passed = 0
    for m in (2, 3, 4, 5):
        for direction in ("ci_lattice", "ci_saturation"):
            for k in (1, 2, 3):
                p = generate_pair(m, direction, k)
                expected = from_basis(construct_pair(m, direction, k).basis)
                ok = (
                    verify_pair(p).passed
                    and lattices_equal(saturate(p.lattice), expected)
                    and saturation_index(p.lattice) >= 2
                    and syzygy_betti(p.noncm_lattice) == 1
                    and p.noncm_cert.betti_index == m + 1
                )
                passed += ok
    elapsed = time.perf_counter() - start
    return passed == 24 and elapsed < 300, f"{passed}/24 pairs verified in {elapsed:.2f}s"


def criterion_6():
    rng = random.Random(6)
    discrepancies = 0
    for _ in range(100):
        n = rng.choice([3, 4])
        m = rng.choice([1, 2])
        while True:
            B = [[rng.randint(-5, 5) for _ in range(m)] for _ in range(n)]
            if all(any(r) for r in B) and brute_rank(B) == m:
                break
        L = from_basis(B)
        S = saturate(L)
        idx = saturation_index(L)
        solver = RationalSolver(B)
        for u in itertools.product(range(-2, 3), repeat=n):
            if S.contains(u) != in_saturation_bruteforce(solver, u, idx):
                discrepancies += 1
            if L.contains(u) != in_lattice(solver, u):
                discrepancies += 1
    return discrepancies == 0, f"100 lattices, {discrepancies} discrepancies"


def criterion_7():
    spheres_ok = all(
        reduced_homology_ranks(simplex_boundary(k)).nonzero() == {k - 1: 1} for k in range(2, 6)
    )
    rng = random.Random(7)
    zero_ok = 0
    for _ in range(20):
        n = rng.randint(3, 5)
        m = rng.randint(1, min(2, n - 1))
        L = random_positive_lattice(rng, n, m, 5)
        zero_ok += betti_number(L, 0, fiber_of(L, (0,) * n)) == 1
    return spheres_ok and zero_ok == 20, f"spheres k=2..5 {'ok' if spheres_ok else 'wrong'}, beta_0 = 1 for {zero_ok}/20"


def criterion_8():
    rng = random.Random(8)
    discrepancies = 0
    for i in range(100):
        n, m = [(4, 2), (5, 2), (5, 3), (3, 1)][i % 4]
        L = random_positive_lattice(rng, n, m, 4)
        c = tuple(rng.randint(-2, 6) for _ in range(n))
        if nonneg_members(fiber_of(L, c)) != nonneg_members_bruteforce(L.basis.tolist(), c):
            discrepancies += 1
    return discrepancies == 0, f"100 fibers, {discrepancies} discrepancies"


CRITERIA = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
}


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, record_criterion):
    passed, detail = CRITERIA[number]()
    record_criterion(number, passed, detail)
    print(f"{'PASS' if passed else 'FAIL'} criterion {number}: {detail}")
    assert passed, detail


if __name__ == "__main__":
    for number, fn in CRITERIA.items():
        passed, detail = fn()
        print(f"{'PASS' if passed else 'FAIL'} criterion {number}: {detail}")
