"""Certificates for complete intersections and for failure of
Cohen-Macaulayness, and end-to-end verification of generated pairs.

Both searches are one-sided: a returned certificate is a proof, while
``None`` only means nothing was found among the candidates tried.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from itertools import combinations, product
from typing import Literal, Sequence

from .complexes import DEFAULT_PRIME, reduced_homology_ranks, support_complex
from .errors import LatticeCMError, NotPositive
from .exactlin import IntegerMatrix
from .fiber import Fiber, column_sum_degree, fiber_of, syzygy_fiber
from .gale import (
    ALL_QUADRANTS,
    is_dominating,
    is_imbalanced,
    quadrant_coverage,
    search_unimodular_witness,
)
from .lattice import (
    Lattice,
    from_basis,
    is_positive,
    lattices_equal,
    saturate,
    saturation_index,
)

CIKind = Literal["dominating", "imbalanced_codim2", "block_of_certified"]
Side = Literal["lattice", "saturation"]

DEFAULT_SEARCH_BOUND = 2


@dataclass(frozen=True)
class CICertificate:
    """A basis of the lattice exhibiting a complete intersection.

    For ``block_of_certified`` the witness is assembled from the children;
    ``blocks`` lists the (rows, columns) each child occupies.
    """

    kind: CIKind
    witness: IntegerMatrix
    children: tuple[CICertificate, ...] = ()
    blocks: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...] = ()


@dataclass(frozen=True)
class NonCMCertificate:
    fiber: Fiber
    betti_index: int
    betti_value: int
    codim: int


@dataclass(frozen=True)
class CertifiedPair:
    lattice: Lattice
    saturation: Lattice
    index: int
    ci_side: Side
    ci_cert: CICertificate
    noncm_cert: NonCMCertificate
    verified: bool = False

    @property
    def ci_lattice(self) -> Lattice:
        return self.lattice if self.ci_side == "lattice" else self.saturation

    @property
    def noncm_lattice(self) -> Lattice:
        return self.saturation if self.ci_side == "lattice" else self.lattice


def _require_positive(L: Lattice) -> None:
    if not is_positive(L).positive:
        raise NotPositive("certificates are only defined for positive lattices")


def block_decomposition(B: IntegerMatrix) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Connected components of the bipartite row/column support graph.

    Each component is returned as sorted (row indices, column indices);
    components are ordered by their smallest column.
    """
    n, m = B.shape
    parent = list(range(m))

    def find(j):
        while parent[j] != j:
            parent[j] = parent[parent[j]]
            j = parent[j]
        return j

    for i in range(n):
        cols = [j for j in range(m) if B[i, j]]
        for j in cols[1:]:
            parent[find(j)] = find(cols[0])
    groups: dict[int, list[int]] = {}
    for j in range(m):
        groups.setdefault(find(j), []).append(j)
    out = []
    for cols in sorted(groups.values()):
        rows = tuple(i for i in range(n) if any(B[i, j] for j in cols))
        out.append((rows, tuple(cols)))
    return out


def _assemble(shape, blocks, witnesses) -> IntegerMatrix:
    n, m = shape
    W = [[0] * m for _ in range(n)]
    for (rows, cols), w in zip(blocks, witnesses):
        for a, i in enumerate(rows):
            for b, j in enumerate(cols):
                W[i][j] = w[a, b]
    return IntegerMatrix(W)


def certify_complete_intersection(
    L: Lattice, search_bound: int = DEFAULT_SEARCH_BOUND
) -> CICertificate | None:
    """Look for a basis of ``L`` that proves ``I_L`` is a complete intersection.

    Tried in order: splitting a visibly block-diagonal basis and certifying
    every block; an imbalanced basis (rank 2); a dominating basis; a bounded
    search over unimodular changes of basis for an imbalanced one (rank 2).
    """
    _require_positive(L)
    B = L.basis
    blocks = block_decomposition(B)
    if len(blocks) > 1:
        children = []
        for rows, cols in blocks:
            child = from_basis(B.submatrix(rows, cols), min_ambient=1)
            cert = certify_complete_intersection(child, search_bound)
            if cert is None:
                break
            children.append(cert)
        else:
            W = _assemble(B.shape, blocks, [c.witness for c in children])
            return CICertificate("block_of_certified", W, tuple(children), tuple(blocks))
    if L.rank == 2 and is_imbalanced(B):
        return CICertificate("imbalanced_codim2", B)
    if is_dominating(B):
        return CICertificate("dominating", B)
    if L.rank == 2:
        M = search_unimodular_witness(L, "imbalanced", search_bound)
        if M is not None:
            return CICertificate("imbalanced_codim2", B @ M)
    return None


def check_ci_certificate(cert: CICertificate, L: Lattice) -> bool:
    """Re-check a CI certificate against ``L`` from scratch."""
    W = cert.witness
    if W.shape != L.basis.shape:
        return False
    try:
        if from_basis(W, min_ambient=1) != L:
            return False
    except LatticeCMError:
        return False
    if cert.kind == "dominating":
        return is_dominating(W)
    if cert.kind == "imbalanced_codim2":
        return W.ncols == 2 and is_imbalanced(W)
    if cert.kind == "block_of_certified":
        rows_seen = sorted(i for rows, _ in cert.blocks for i in rows)
        cols_seen = sorted(j for _, cols in cert.blocks for j in cols)
        if rows_seen != list(range(W.nrows)) or cols_seen != list(range(W.ncols)):
            return False
        if _assemble(W.shape, cert.blocks, [W.submatrix(r, c) for r, c in cert.blocks]) != W:
            return False  # entries outside the blocks
        if len(cert.children) != len(cert.blocks):
            return False
        for child, (rows, cols) in zip(cert.children, cert.blocks):
            try:
                sub = from_basis(W.submatrix(rows, cols), min_ambient=1)
            except LatticeCMError:
                return False
            if not check_ci_certificate(child, sub):
                return False
        return True
    return False


def _candidate_bases(B: IntegerMatrix, search_bound: int) -> list[IntegerMatrix]:
    """``B`` plus bases of the same lattice whose rank-2 blocks meet all
    four open quadrants, found by the bounded unimodular search."""
    blocks = block_decomposition(B)
    if len(blocks) > 1:
        per_block = [_candidate_bases(B.submatrix(r, c), search_bound) for r, c in blocks]
        return [_assemble(B.shape, blocks, combo) for combo in product(*per_block)]
    out = [B]
    if B.ncols == 2 and quadrant_coverage(B) != ALL_QUADRANTS:
        M = search_unimodular_witness(B, "four_quadrants", search_bound)
        if M is not None:
            out.append(B @ M)
    return out


def candidate_degrees(L: Lattice, search_bound: int = DEFAULT_SEARCH_BOUND) -> list[tuple[int, ...]]:
    """Syzygy degrees first, then positive-part sums over smaller column subsets.

    Sums are taken over the basis of ``L`` and over the alternative bases
    from :func:`_candidate_bases`, without repeats.
    """
    m = L.rank
    bases = [Lattice(W, L.canonical) for W in _candidate_bases(L.basis, search_bound)]
    out: list[tuple[int, ...]] = []
    for size in range(m, 0, -1):
        for W in bases:
            for cols in combinations(range(m), size):
                deg = column_sum_degree(W, cols)
                if deg not in out:
                    out.append(deg)
    return out


def certify_not_cm(
    L: Lattice,
    extra_degrees: Sequence[Sequence[int]] | None = None,
    field=None,
    search_bound: int = DEFAULT_SEARCH_BOUND,
) -> NonCMCertificate | None:
    """Find a fiber ``C`` and ``j > rank L`` with ``β_{j,C} > 0``."""
    _require_positive(L)
    m = L.rank
    seen = set()
    for deg in candidate_degrees(L, search_bound) + [tuple(d) for d in extra_degrees or ()]:
        C = fiber_of(L, deg)
        if C in seen:
            continue
        seen.add(C)
        profile = reduced_homology_ranks(support_complex(C), field)
        for j in range(m + 1, L.ambient_dim + 2):
            if profile[j - 1] > 0:
                return NonCMCertificate(C, j, profile[j - 1], m)
    return None


def check_noncm_certificate(cert: NonCMCertificate, L: Lattice, field=None) -> bool:
    C = cert.fiber
    if C.lattice != L or cert.codim != L.rank or cert.betti_index <= cert.codim:
        return False
    fresh = Fiber(from_basis(L.basis, min_ambient=1), C.representative)
    value = reduced_homology_ranks(support_complex(fresh), field)[cert.betti_index - 1]
    return value >= 1 and value == cert.betti_value


def build_pair(construction) -> CertifiedPair:
    """Attach certificates to a :class:`~latticecm.transform.PairConstruction`."""
    L = from_basis(construction.lattice_basis)
    S = from_basis(construction.basis)
    ci_side: Side = "lattice" if construction.direction == "ci_lattice" else "saturation"
    ci_target, other = (L, S) if ci_side == "lattice" else (S, L)
    ci = certify_complete_intersection(ci_target)
    noncm = certify_not_cm(other)
    if ci is None or noncm is None:
        raise LatticeCMError(
            f"no certificate for {construction.direction}({construction.k}) at m={construction.m}"
        )
    return CertifiedPair(L, S, construction.expected_index, ci_side, ci, noncm)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[Check, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(c.passed for c in self.checks)

    def failed(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]


def verify_pair(p: CertifiedPair) -> VerificationReport:
    """Recompute every claim a pair makes, without trusting cached values."""
    checks = []

    def check(name, fn):
        try:
            ok, detail = fn()
        except LatticeCMError as exc:
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        checks.append(Check(name, bool(ok), detail))

    lattice = from_basis(p.lattice.basis, min_ambient=1)
    saturation = from_basis(p.saturation.basis, min_ambient=1)

    def positive():
        a = is_positive.__wrapped__(lattice).positive
        b = is_positive.__wrapped__(saturation).positive
        return a and b, f"lattice positive={a}, saturation positive={b}"

    def saturation_matches():
        return lattices_equal(saturate(lattice), saturation), "saturate(lattice) vs saturation"

    def index():
        actual = saturation_index(lattice)
        return actual == p.index and actual >= 2, f"recorded {p.index}, recomputed {actual}"

    ci_lat = lattice if p.ci_side == "lattice" else saturation
    other = saturation if p.ci_side == "lattice" else lattice

    def ci():
        return check_ci_certificate(p.ci_cert, ci_lat), f"{p.ci_cert.kind} on {p.ci_side}"

    def noncm():
        cert = p.noncm_cert
        ok = check_noncm_certificate(cert, other)
        return ok, f"beta_{cert.betti_index} = {cert.betti_value} over Q, codim {cert.codim}"

    def noncm_mod_p():
        cert = p.noncm_cert
        ok = check_noncm_certificate(cert, other, DEFAULT_PRIME)
        return ok, f"same Betti number over GF({DEFAULT_PRIME})"

    for name, fn in [
        ("positivity", positive),
        ("saturation", saturation_matches),
        ("saturation_index", index),
        ("ci_certificate", ci),
        ("noncm_certificate", noncm),
        ("noncm_certificate_mod_p", noncm_mod_p),
    ]:
        check(name, fn)
    return VerificationReport(tuple(checks))


def verified(p: CertifiedPair) -> tuple[CertifiedPair, VerificationReport]:
    report = verify_pair(p)
    return replace(p, verified=report.passed), report


def classify(L: Lattice, extra_degrees=None, search_bound: int = DEFAULT_SEARCH_BOUND) -> str:
    """``"complete_intersection"``, ``"not_cohen_macaulay"`` or ``"indeterminate"``."""
    if certify_complete_intersection(L, search_bound) is not None:
        return "complete_intersection"
    if certify_not_cm(L, extra_degrees, search_bound=search_bound) is not None:
        return "not_cohen_macaulay"
    return "indeterminate"


def syzygy_betti(L: Lattice, field=None) -> int:
    """``β_{m+1}`` at the syzygy fiber, where ``m`` is the rank."""
    C = syzygy_fiber(L)
    return reduced_homology_ranks(support_complex(C), field)[L.rank]
