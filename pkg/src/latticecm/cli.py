"""Command line interface: ``lattice-cm analyze|saturate|betti|generate|certify|svg``.

Exit codes: 0 success, 2 usage or parse error, 3 input violates a lattice
invariant, 4 a verification failed, 5 computation refused (non-positive
lattice).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Any

from . import report as rp
from .certify import (
    CertifiedPair,
    build_pair,
    certify_complete_intersection,
    certify_not_cm,
    verified,
    verify_pair,
)
from .complexes import reduced_homology_ranks, support_complex
from .errors import (
    DegenerateTransform,
    DimensionError,
    LatticeCMError,
    NotFullRank,
    NotPositive,
    WrongCodim,
    ZeroRow,
)
from .exactlin import IntegerMatrix
from .fiber import fiber_of, nonneg_members
from .lattice import from_basis, is_positive, saturate, saturation_index
from .svg import gale_svg
from .transform import construct_pair

EXIT_OK, EXIT_USAGE, EXIT_INVARIANT, EXIT_VERIFY, EXIT_REFUSED = 0, 2, 3, 4, 5


class UsageError(Exception):
    pass


def read_matrix_text(source: str) -> str:
    """``-`` reads stdin; an existing path is read; anything else is inline."""
    if source == "-":
        return sys.stdin.read()
    path = Path(source)
    if path.is_file():
        return path.read_text(encoding="utf-8")
    return source


def parse_matrix(text: str) -> IntegerMatrix:
    """Plain rows (one per line or ``;``-separated) or JSON ``{"rows": [...]}``."""
    stripped = text.strip()
    try:
        if stripped.startswith("{"):
            data = json.loads(stripped)
            rows = data["rows"]
            if not all(isinstance(x, int) and not isinstance(x, bool) for r in rows for x in r):
                raise ValueError("entries must be integers")
        else:
            lines = [ln for ln in stripped.replace(";", "\n").splitlines() if ln.strip()]
            rows = [[int(x) for x in ln.split()] for ln in lines]
        return IntegerMatrix(rows)
    except (ValueError, KeyError, TypeError, DimensionError) as exc:
        raise UsageError(f"cannot parse matrix: {exc}") from exc


def parse_vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(",", " ").split())
    except ValueError as exc:
        raise UsageError(f"cannot parse integer vector {text!r}") from exc


def parse_field(text: str):
    if text.lower() == "q":
        return None
    try:
        p = int(text)
    except ValueError as exc:
        raise UsageError(f"--field must be 'q' or a prime, got {text!r}") from exc
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise UsageError(f"--field {p} is not prime")
    return p


def load_lattice(source: str):
    B = parse_matrix(read_matrix_text(source))
    return from_basis(B, min_ambient=1)


def _finish(doc: dict[str, Any], args, started: float) -> dict[str, Any]:
    if not args.no_timing:
        doc["timing"] = {"seconds": round(time.perf_counter() - started, 6),
                         "deterministic": False}
    return doc


def render(doc: Any, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n"
    lines: list[str] = []

    def walk(x, prefix):
        if isinstance(x, dict):
            for k, v in x.items():
                walk(v, f"{prefix}.{k}" if prefix else k)
        elif isinstance(x, list) and x and isinstance(x[0], (dict, list)):
            for i, v in enumerate(x):
                walk(v, f"{prefix}[{i}]")
        else:
            if isinstance(x, list):
                x = ", ".join(map(str, x))
            lines.append(f"{prefix}: {x}")

    walk(doc, "")
    return "\n".join(lines) + "\n"


def emit(text: str, out: str | None) -> None:
    if out and out != "-":
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# ------------------------------------------------------------------ commands

def cmd_analyze(args) -> int:
    started = time.perf_counter()
    L = load_lattice(args.matrix)
    extra = [parse_vector(v) for v in args.extra_degree or []]
    certs, checks = rp.certificate_section(L, extra, args.field, args.search_bound)
    doc = {
        "schema": rp.SCHEMA,
        "command": "analyze",
        "input": {"basis": rp.plain_rows(L.basis)},
        "lattice": rp.lattice_stats(L),
        "gale": rp.gale_stats(L),
        "certificates": certs,
        "checks": checks,
    }
    emit(render(_finish(doc, args, started), args.format), args.out)
    return EXIT_OK


def cmd_saturate(args) -> int:
    started = time.perf_counter()
    L = load_lattice(args.matrix)
    S = saturate(L)
    doc = {
        "schema": rp.SCHEMA,
        "command": "saturate",
        "input": {"basis": rp.plain_rows(L.basis)},
        "saturation_basis": rp.plain_rows(S.basis),
        "saturation_index": saturation_index(L),
        "saturated": S == L,
    }
    emit(render(_finish(doc, args, started), args.format), args.out)
    return EXIT_OK


def cmd_betti(args) -> int:
    started = time.perf_counter()
    L = load_lattice(args.matrix)
    degree = parse_vector(args.degree)
    try:
        F = fiber_of(L, degree)
    except DimensionError as exc:
        raise UsageError(str(exc)) from exc
    members = nonneg_members(F)
    D = support_complex(F)
    profile = reduced_homology_ranks(D, args.field)
    doc = {
        "schema": rp.SCHEMA,
        "command": "betti",
        "input": {"basis": rp.plain_rows(L.basis), "degree": list(degree), "j": args.j},
        "field": "Q" if args.field is None else args.field,
        "members": [list(a) for a in members],
        "facets": [list(f) for f in D.facet_sets()],
        "reduced_homology": {str(j): profile[j] for j in range(-1, len(profile.ranks) - 1)},
        "betti": profile[args.j - 1],
    }
    emit(render(_finish(doc, args, started), args.format), args.out)
    return EXIT_OK


def cmd_generate(args) -> int:
    if args.codim < 2:
        raise UsageError("--codim must be at least 2")
    if args.count < 1 or args.start_k < 1:
        raise UsageError("--count and --start-k must be positive")
    records, failed = [], False
    k = args.start_k
    attempts = 0
    while len(records) < args.count:
        attempts += 1
        if attempts > 10 * args.count + 10:
            raise LatticeCMError("too many degenerate family members")
        try:
            con = construct_pair(args.codim, args.direction, k)
        except DegenerateTransform:
            k += 1
            continue
        pair = build_pair(con)
        report = None
        if not args.no_verify:
            pair, report = verified(pair)
            failed = failed or not report.passed
        records.append(
            rp.pair_to_dict(
                pair, report,
                codim=args.codim, direction=args.direction, k=k,
                seed=rp.plain_rows(con.seed), M0=rp.plain_rows(con.M0),
                transform_case=con.case_tag,
            )
        )
        k += 1
    text = "".join(json.dumps(r) + "\n" for r in records)
    emit(text, args.out)
    if failed:
        print("verification failed for at least one pair", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_certify(args) -> int:
    started = time.perf_counter()
    if args.pair:
        data = json.loads(read_matrix_text(args.pair))
        pair = rp.pair_from_dict(data)
        report = verify_pair(pair)
        doc = {"schema": rp.SCHEMA, "command": "certify", "checks": rp.verification_to_list(report),
               "verified": report.passed}
        emit(render(_finish(doc, args, started), args.format), args.out)
        return EXIT_OK if report.passed else EXIT_VERIFY
    if args.matrix is None:
        raise UsageError("certify needs a matrix or --pair")
    L = load_lattice(args.matrix)
    if not is_positive(L).positive:
        raise NotPositive("lattice is not positive")
    S = saturate(L)
    extra = [parse_vector(v) for v in args.extra_degree or []]
    sides = {}
    for name, lat in (("lattice", L), ("saturation", S)):
        section, checks = rp.certificate_section(lat, extra, args.field, args.search_bound)
        sides[name] = {"basis": rp.plain_rows(lat.basis), "certificates": section, "checks": checks}
    doc: dict[str, Any] = {
        "schema": rp.SCHEMA,
        "command": "certify",
        "saturation_index": saturation_index(L),
        **sides,
    }
    code = EXIT_OK
    classes = (sides["lattice"]["certificates"]["classification"],
               sides["saturation"]["certificates"]["classification"])
    pair_shape = {("complete_intersection", "not_cohen_macaulay"): "lattice",
                  ("not_cohen_macaulay", "complete_intersection"): "saturation"}
    if saturation_index(L) >= 2 and classes in pair_shape:
        ci_side = pair_shape[classes]
        ci_lat, other = (L, S) if ci_side == "lattice" else (S, L)
        pair = CertifiedPair(L, S, saturation_index(L), ci_side,
                             certify_complete_intersection(ci_lat, args.search_bound),
                             certify_not_cm(other, extra, args.field, args.search_bound))
        pair, report = verified(pair)
        doc["pair"] = rp.pair_to_dict(pair, report)
        if not report.passed:
            code = EXIT_VERIFY
    emit(render(_finish(doc, args, started), args.format), args.out)
    return code


def cmd_svg(args) -> int:
    B = parse_matrix(read_matrix_text(args.matrix))
    if B.ncols != 2:
        raise UsageError(f"svg needs an n x 2 matrix, got {B.nrows} x {B.ncols}")
    emit(gale_svg(B), args.out)
    return EXIT_OK


# -------------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lattice-cm",
        description="Lattice ideals: saturation, Gale diagrams, Betti numbers and "
        "certified complete-intersection / non-Cohen-Macaulay pairs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, matrix=True, optional_matrix=False):
        if matrix:
            p.add_argument("matrix", nargs="?" if optional_matrix else None,
                           help="inline rows ('2 -1; 3 3'), a file path, or '-' for stdin")
        p.add_argument("--format", choices=["json", "text"], default="json")
        p.add_argument("--field", type=parse_field_arg, default=None,
                       help="'q' (default) or a prime p")
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--no-timing", action="store_true",
                       help="omit the timing field so output is byte-reproducible")

    p = sub.add_parser("analyze", help="full report for one lattice")
    common(p)
    p.add_argument("--extra-degree", action="append", help="additional fiber degree to test")
    p.add_argument("--search-bound", type=int, default=2)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("saturate", help="saturation basis and index")
    common(p)
    p.set_defaults(func=cmd_saturate)

    p = sub.add_parser("betti", help="fiber members, support complex and Betti number")
    common(p)
    p.add_argument("--degree", required=True, help="degree vector, e.g. '2 6 5 0'")
    p.add_argument("--j", type=int, required=True, help="homological index")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("generate", help="emit verified pairs as JSON lines")
    common(p, matrix=False)
    p.add_argument("--codim", type=int, required=True)
    p.add_argument("--direction", choices=["ci_lattice", "ci_saturation"], default="ci_lattice")
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--start-k", type=int, default=1)
    p.add_argument("--no-verify", action="store_true")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("certify", help="certificates for a lattice and its saturation")
    common(p, optional_matrix=True)
    p.add_argument("--pair", help="re-verify a pair record produced by 'generate'")
    p.add_argument("--extra-degree", action="append")
    p.add_argument("--search-bound", type=int, default=2)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("svg", help="draw a rank-2 Gale diagram")
    common(p)
    p.set_defaults(func=cmd_svg)
    return parser


def parse_field_arg(text: str):
    try:
        return parse_field(text)
    except UsageError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"lattice-cm: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ZeroRow, NotFullRank) as exc:
        print(f"lattice-cm: invalid lattice basis: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except NotPositive as exc:
        print(f"lattice-cm: refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except WrongCodim as exc:
        print(f"lattice-cm: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
