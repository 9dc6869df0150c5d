"""JSON-ready dictionaries for lattices, certificates and pairs.

Every dict produced here contains only JSON types (lists, never tuples),
so ``json.loads(json.dumps(d)) == d``.  Matrices are written in plain-row
form: one string per row, entries separated by single spaces.
"""

from __future__ import annotations

from typing import Any

from .certify import (
    CertifiedPair,
    CICertificate,
    NonCMCertificate,
    VerificationReport,
    certify_complete_intersection,
    certify_not_cm,
    check_ci_certificate,
    check_noncm_certificate,
)
from .exactlin import IntegerMatrix, invariant_factors
from .fiber import fiber_of
from .gale import (
    is_dominating,
    is_imbalanced,
    is_mixed,
    quadrant_coverage,
    ray_count,
)
from .lattice import Lattice, from_basis, is_positive, saturate, saturation_index

SCHEMA = "lattice-cm/1"


def plain_rows(M: IntegerMatrix) -> list[str]:
    return [" ".join(str(x) for x in r) for r in M.rows]


def parse_plain_rows(rows: list[str]) -> IntegerMatrix:
    return IntegerMatrix([[int(x) for x in r.split()] for r in rows])


def ci_cert_to_dict(cert: CICertificate) -> dict[str, Any]:
    d: dict[str, Any] = {"kind": cert.kind, "witness": plain_rows(cert.witness)}
    if cert.kind == "block_of_certified":
        d["blocks"] = [
            {"rows": list(r), "cols": list(c), "certificate": ci_cert_to_dict(ch)}
            for (r, c), ch in zip(cert.blocks, cert.children)
        ]
    return d


def ci_cert_from_dict(d: dict[str, Any]) -> CICertificate:
    blocks = d.get("blocks", [])
    return CICertificate(
        d["kind"],
        parse_plain_rows(d["witness"]),
        tuple(ci_cert_from_dict(b["certificate"]) for b in blocks),
        tuple((tuple(b["rows"]), tuple(b["cols"])) for b in blocks),
    )


def noncm_cert_to_dict(cert: NonCMCertificate) -> dict[str, Any]:
    return {
        "degree": list(cert.fiber.representative),
        "betti_index": cert.betti_index,
        "betti_value": cert.betti_value,
        "codim": cert.codim,
    }


def noncm_cert_from_dict(d: dict[str, Any], L: Lattice) -> NonCMCertificate:
    return NonCMCertificate(fiber_of(L, d["degree"]), d["betti_index"], d["betti_value"], d["codim"])


def verification_to_list(report: VerificationReport) -> list[dict[str, Any]]:
    return [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in report.checks]


def pair_to_dict(p: CertifiedPair, report: VerificationReport | None = None, **extra) -> dict[str, Any]:
    d: dict[str, Any] = {"schema": SCHEMA, "kind": "certified_pair"}
    d.update(extra)
    d.update(
        lattice_basis=plain_rows(p.lattice.basis),
        saturation_basis=plain_rows(p.saturation.basis),
        index=p.index,
        ci_side=p.ci_side,
        ci_certificate=ci_cert_to_dict(p.ci_cert),
        noncm_certificate=noncm_cert_to_dict(p.noncm_cert),
        verified=p.verified,
    )
    if report is not None:
        d["checks"] = verification_to_list(report)
    return d


def pair_from_dict(d: dict[str, Any]) -> CertifiedPair:
    L = from_basis(parse_plain_rows(d["lattice_basis"]), min_ambient=1)
    S = from_basis(parse_plain_rows(d["saturation_basis"]), min_ambient=1)
    other = S if d["ci_side"] == "lattice" else L
    return CertifiedPair(
        L,
        S,
        d["index"],
        d["ci_side"],
        ci_cert_from_dict(d["ci_certificate"]),
        noncm_cert_from_dict(d["noncm_certificate"], other),
        d.get("verified", False),
    )


def lattice_stats(L: Lattice) -> dict[str, Any]:
    pos = is_positive(L)
    sat = saturate(L)
    d: dict[str, Any] = {
        "ambient_dim": L.ambient_dim,
        "rank": L.rank,
        "positive": pos.positive,
    }
    if pos.positive:
        d["grading"] = list(pos.certificate)
    else:
        d["nonnegative_witness"] = list(pos.certificate)
    d["saturation_index"] = saturation_index(L)
    d["invariant_factors"] = list(invariant_factors(L.basis))
    d["saturation_basis"] = plain_rows(sat.basis)
    return d


def gale_stats(L: Lattice) -> dict[str, Any]:
    B = L.basis
    planar = B.ncols == 2
    return {
        "mixed": is_mixed(B),
        "dominating": is_dominating(B),
        "imbalanced": is_imbalanced(B) if planar else None,
        "quadrant_coverage": sorted(quadrant_coverage(B)) if planar else None,
        "ray_count": ray_count(B) if planar else None,
    }


def certificate_section(L: Lattice, extra_degrees=None, field=None, search_bound=2):
    """Certificates for ``L`` plus re-checks; nulls when ``L`` is not positive."""
    if not is_positive(L).positive:
        return {"complete_intersection": None, "not_cohen_macaulay": None,
                "classification": "not_positive"}, []
    ci = certify_complete_intersection(L, search_bound)
    noncm = None if ci is not None else certify_not_cm(L, extra_degrees, field, search_bound)
    if ci is not None:
        cls = "complete_intersection"
    elif noncm is not None:
        cls = "not_cohen_macaulay"
    else:
        cls = "indeterminate"
    section = {
        "complete_intersection": ci_cert_to_dict(ci) if ci else None,
        "not_cohen_macaulay": noncm_cert_to_dict(noncm) if noncm else None,
        "classification": cls,
    }
    checks = []
    if ci is not None:
        checks.append({"name": "ci_certificate", "passed": check_ci_certificate(ci, L),
                       "detail": ci.kind})
    if noncm is not None:
        checks.append({"name": "noncm_certificate",
                       "passed": check_noncm_certificate(noncm, L, field),
                       "detail": f"beta_{noncm.betti_index} = {noncm.betti_value}"})
    return section, checks
