"""Command-line surface: JSON-lines output, TSV tables, and the verify suite.

Exit codes: 0 success, 1 check failure, 2 usage error, 3 resource cap
exceeded. Enumeration-heavy commands refuse inputs larger than the box cap
(--max-boxes, config key "max_boxes", or LRWKIT_MAX_BOXES; default 10)
instead of hanging.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import classical, fermionic, looproot, schur, verify
from .lie import LieSpec, integer_root_coords
from .partitions import (
    DominantWeight,
    Partition,
    RootLatticeElement,
    conjugate,
    contains,
    partition_from_weight,
    size,
    weight_from_partition,
)

DEFAULT_MAX_BOXES = 10


class ResourceCapExceeded(Exception):
    """Raised when an input would push enumeration past the box cap."""


class UsageError(Exception):
    """Raised for malformed values inside otherwise well-formed arguments."""


def parse_partition(text: str) -> Partition:
    """Comma-separated decreasing integers; '' or '-' is the empty partition."""
    text = text.strip()
    if text in ("", "-"):
        return Partition()
    try:
        parts = [int(tok) for tok in text.split(",")]
        return Partition(parts)
    except ValueError as exc:
        raise UsageError(f"bad partition {text!r}: {exc}") from exc


def parse_weight(text: str) -> DominantWeight:
    """Coefficient list with explicit rank, e.g. '1,2,1@rank=3'."""
    try:
        coeff_part, _, rank_part = text.partition("@")
        if not rank_part.startswith("rank="):
            raise ValueError("expected '<coeffs>@rank=<n>'")
        rank = int(rank_part[len("rank="):])
        coeffs = (
            tuple(int(tok) for tok in coeff_part.split(","))
            if coeff_part.strip()
            else ()
        )
        if len(coeffs) < rank:
            coeffs = coeffs + (0,) * (rank - len(coeffs))
        return DominantWeight(coeffs, rank)
    except ValueError as exc:
        raise UsageError(f"bad weight {text!r}: {exc}") from exc


def parse_int_vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise UsageError(f"bad integer vector {text!r}: {exc}") from exc


def parse_factor(text: str) -> tuple[int, int]:
    try:
        m_tok, l_tok = text.split(",")
        return int(m_tok), int(l_tok)
    except ValueError as exc:
        raise UsageError(f"bad factor {text!r} (expected 'm,node'): {exc}") from exc


def _family_tag(text: str) -> str:
    lowered = text.lower()
    if lowered in ("sp", "symplectic"):
        return "sp"
    if lowered in ("o", "orthogonal"):
        return "o"
    raise UsageError(f"family must be sp or o, got {text!r}")


def _check_cap(boxes: int, cap: int, what: str) -> None:
    if boxes > cap:
        raise ResourceCapExceeded(
            f"{what} needs {boxes} boxes, over the cap of {cap}; "
            f"raise --max-boxes to allow it"
        )


def _emit(args: argparse.Namespace, payload: dict, rows: list[list]) -> None:
    if args.resolved_format == "tsv":
        for row in rows:
            print("\t".join(str(cell) for cell in row))
    else:
        print(json.dumps(payload, separators=(",", ":")))


def _partition_str(p: Partition) -> str:
    return ",".join(str(x) for x in p) if p else "-"


def _expansion_rows(e: schur.Expansion) -> list[list]:
    return [[_partition_str(p), e.terms[p]] for p in e.support_sorted()]


# ------------------------------------------------------------------- handlers


def _cmd_part(args: argparse.Namespace) -> int:
    op = args.part_op
    if op == "conjugate":
        p = parse_partition(args.partition)
        result = conjugate(p)
        payload = {"op": op, "partition": list(p), "result": list(result)}
        rows = [[_partition_str(result)]]
    elif op == "size":
        p = parse_partition(args.partition)
        payload = {"op": op, "partition": list(p), "result": size(p)}
        rows = [[size(p)]]
    elif op == "contains":
        outer = parse_partition(args.partition)
        inner = parse_partition(args.inner)
        result = contains(outer, inner)
        payload = {
            "op": op,
            "outer": list(outer),
            "inner": list(inner),
            "result": result,
        }
        rows = [[str(result).lower()]]
    elif op == "toweight":
        p = parse_partition(args.partition)
        w = weight_from_partition(p, args.rank)
        payload = {"op": op, "partition": list(p), "rank": args.rank,
                   "result": list(w.coeffs)}
        rows = [[",".join(map(str, w.coeffs))]]
    else:  # fromweight
        w = parse_weight(args.weight)
        p = partition_from_weight(w)
        payload = {"op": op, "weight": list(w.coeffs), "rank": w.rank,
                   "result": list(p)}
        rows = [[_partition_str(p)]]
    _emit(args, payload, rows)
    return 0


def _cmd_schur(args: argparse.Namespace) -> int:
    cap = args.resolved_max_boxes
    if args.schur_op == "mult":
        a = parse_partition(args.a)
        b = parse_partition(args.b)
        _check_cap(size(a) + size(b), cap, "product")
        result = schur.mult(schur.schur_basis(a), schur.schur_basis(b))
        payload = {"op": "mult", "a": list(a), "b": list(b),
                   "result": result.to_jsonable()}
        rows = _expansion_rows(result)
    elif args.schur_op == "skew":
        lam = parse_partition(args.a)
        nu = parse_partition(args.b)
        _check_cap(size(lam), cap, "skew expansion")
        result = schur.skew_schur_expand(lam, nu)
        payload = {"op": "skew", "outer": list(lam), "inner": list(nu),
                   "result": result.to_jsonable()}
        rows = _expansion_rows(result)
    else:  # jt
        lam = parse_partition(args.a)
        nu = parse_partition(args.b) if args.b is not None else Partition()
        _check_cap(size(lam), cap, "determinant expansion")
        hexp = schur.jacobi_trudi(lam, nu)
        sexp = schur.h_monomial_to_schur(hexp)
        payload = {
            "op": "jt",
            "outer": list(lam),
            "inner": list(nu),
            "h_expansion": hexp.to_jsonable(),
            "schur": sexp.to_jsonable(),
        }
        rows = [["h:" + _partition_str(p), hexp.terms[p]] for p in hexp.support_sorted()]
        rows += [["s:" + _partition_str(p), sexp.terms[p]] for p in sexp.support_sorted()]
    _emit(args, payload, rows)
    return 0


def _cmd_lr(args: argparse.Namespace) -> int:
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu)
    nu = parse_partition(args.nu)
    _check_cap(size(lam), args.resolved_max_boxes, "coefficient")
    from .tableaux import lr_coefficient

    c = lr_coefficient(lam, mu, nu)
    payload = {"lam": list(lam), "mu": list(mu), "nu": list(nu), "coefficient": c}
    _emit(args, payload, [[c]])
    return 0


def _cmd_branch(args: argparse.Namespace) -> int:
    lam = parse_partition(args.lam)
    target = _family_tag(args.target)
    _check_cap(size(lam), args.resolved_max_boxes, "restriction")
    result = classical.branch_schur(lam, target)
    payload = {"lam": list(lam), "target": target, "result": result.to_jsonable()}
    _emit(args, payload, _expansion_rows(result))
    return 0


def _cmd_dcoef(args: argparse.Namespace) -> int:
    mu = parse_partition(args.mu)
    nu = parse_partition(args.nu)
    family = _family_tag(args.family)
    _check_cap(size(mu) + size(nu), args.resolved_max_boxes, "tensor expansion")
    expansion = classical.stable_tensor_expansion(mu, nu, family)
    if args.lam is not None:
        lam = parse_partition(args.lam)
        c = expansion.coefficient(lam)
        payload = {"mu": list(mu), "nu": list(nu), "lam": list(lam),
                   "family": family, "coefficient": c}
        rows = [[c]]
    else:
        payload = {"mu": list(mu), "nu": list(nu), "family": family,
                   "result": expansion.to_jsonable()}
        rows = _expansion_rows(expansion)
    _emit(args, payload, rows)
    return 0


def _cmd_wdecomp(args: argparse.Namespace) -> int:
    lam = parse_partition(args.lam)
    family = _family_tag(args.family)
    _check_cap(size(lam), args.resolved_max_boxes, "decomposition")
    decomp = classical.family_decomposition(lam, family)
    payload = decomp.to_jsonable()
    rows = [[_partition_str(p), m] for p, m in decomp.sorted_terms()]
    _emit(args, payload, rows)
    return 0


def _cmd_wtensor(args: argparse.Namespace) -> int:
    mu = parse_partition(args.mu)
    nu = parse_partition(args.nu)
    family = _family_tag(args.family)
    _check_cap(size(mu) + size(nu), args.resolved_max_boxes, "tensor check")
    lhs, rhs = classical.tensor_product_two_ways(mu, nu, family)
    payload = {
        "mu": list(mu),
        "nu": list(nu),
        "family": family,
        "lhs": lhs.to_jsonable(),
        "rhs": rhs.to_jsonable(),
        "equal": lhs == rhs,
    }
    rows = [["equal", str(lhs == rhs).lower()]] + [
        ["lhs:" + _partition_str(p), c] for p, c in sorted(lhs.terms.items(), reverse=True)
    ] + [["rhs:" + _partition_str(p), c] for p, c in sorted(rhs.terms.items(), reverse=True)]
    _emit(args, payload, rows)
    return 0


def _cmd_fermionic(args: argparse.Namespace) -> int:
    spec = LieSpec(args.family.upper(), args.rank)
    factors = [parse_factor(f) for f in args.factor]
    boxes = sum(m * node for m, node in factors)
    _check_cap(boxes, args.resolved_max_boxes, "configuration sum")
    if args.weight is not None:
        lam = parse_weight(args.weight)
        mult = fermionic.fermionic_multiplicity(spec, factors, lam)
        payload = {
            "family": spec.family,
            "rank": spec.rank,
            "factors": [list(f) for f in factors],
            "weight": list(lam.coeffs),
            "multiplicity": mult,
        }
        rows = [[",".join(map(str, lam.coeffs)), mult]]
    else:
        decomp = fermionic.fermionic_decomp(spec, factors)
        ordered = sorted(decomp.items(), key=lambda kv: kv[0].coeffs, reverse=True)
        payload = {
            "family": spec.family,
            "rank": spec.rank,
            "factors": [list(f) for f in factors],
            "terms": [
                {"weight": list(w.coeffs), "mult": m} for w, m in ordered
            ],
        }
        rows = [[",".join(map(str, w.coeffs)), m] for w, m in ordered]
    _emit(args, payload, rows)
    return 0


def _cmd_roots(args: argparse.Namespace) -> int:
    spec = LieSpec(args.family.upper(), args.rank)
    if args.roots_op == "beta":
        bset = looproot.beta_roots(spec)
        payload = bset.to_jsonable()
        rows = [
            [f"{k},{l}", ",".join(map(str, r.coords))]
            for (k, l), r in zip(bset.labels, bset.roots)
        ]
    elif args.roots_op == "commute":
        payload = looproot.commute_check(spec)
        rows = [
            ["beta_count", payload["beta_count"]],
            ["pair_sum_violations", len(payload["pair_sum_violations"])],
            [
                "pair_sum_minus_simple_violations",
                len(payload["pair_sum_minus_simple_violations"]),
            ],
            ["lowering_violations", len(payload["lowering_violations"])],
            ["ok", str(payload["ok"]).lower()],
        ]
    else:  # cone
        if args.alpha is not None:
            coords = parse_int_vector(args.alpha)
            if len(coords) != spec.rank:
                raise UsageError(
                    f"expected {spec.rank} coordinates, got {len(coords)}"
                )
        elif args.weight is not None:
            wvec = parse_int_vector(args.weight)
            if len(wvec) != spec.rank:
                raise UsageError(f"expected {spec.rank} coefficients, got {len(wvec)}")
            coords = integer_root_coords(spec, wvec)
            if coords is None:
                payload = {
                    "family": spec.family,
                    "rank": spec.rank,
                    "weight": list(wvec),
                    "solutions": [],
                    "note": "not in the root lattice",
                }
                _emit(args, payload, [["solutions", 0]])
                return 0
        else:
            raise UsageError("cone needs --alpha or --weight")
        diff = RootLatticeElement(coords, spec.rank)
        sols = looproot.cone_membership(diff, spec)
        payload = {
            "family": spec.family,
            "rank": spec.rank,
            "alpha": list(coords),
            "solutions": [list(s) for s in sols],
        }
        rows = [[",".join(map(str, s))] for s in sols] or [["(none)"]]
    _emit(args, payload, rows)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    report = verify.run_verify_suite(args.level)
    if args.resolved_format == "tsv":
        for check in report.checks:
            print(f"{check.name}\t{'pass' if check.passed else 'fail'}")
        print(f"summary\t{report.passed}/{len(report.checks)}")
    else:
        for check in report.checks:
            print(json.dumps(check.to_jsonable(), separators=(",", ":")))
        print(
            json.dumps(
                {
                    "summary": {
                        "level": report.level,
                        "total": len(report.checks),
                        "passed": report.passed,
                        "failed": report.failed,
                    }
                },
                separators=(",", ":"),
            )
        )
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(report.to_json())
            fh.write("\n")
    return 0 if report.ok else 1


# ---------------------------------------------------------------- arg parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lrwkit",
        description=(
            "Exact computations with Schur functions, classical universal "
            "characters, fermionic multiplicities, and root combinatorics."
        ),
    )
    parser.add_argument(
        "--max-boxes",
        type=int,
        default=None,
        help=f"cap on enumeration size in boxes (default {DEFAULT_MAX_BOXES}, "
        "or LRWKIT_MAX_BOXES)",
    )
    parser.add_argument(
        "--format", choices=("json", "tsv"), default=None, help="output format"
    )
    parser.add_argument(
        "--config", default=None, help="JSON config file (max_boxes, format)"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    part = sub.add_parser("part", help="partition and weight utilities")
    part_sub = part.add_subparsers(dest="part_op", required=True)
    for op in ("conjugate", "size"):
        sp = part_sub.add_parser(op)
        sp.add_argument("partition")
    sp = part_sub.add_parser("contains")
    sp.add_argument("partition", help="outer partition")
    sp.add_argument("inner")
    sp = part_sub.add_parser("toweight")
    sp.add_argument("partition")
    sp.add_argument("rank", type=int)
    sp = part_sub.add_parser("fromweight")
    sp.add_argument("weight", help="e.g. 1,2,1@rank=3")
    part.set_defaults(handler=_cmd_part)

    schur_p = sub.add_parser("schur", help="ring operations in the Schur basis")
    schur_sub = schur_p.add_subparsers(dest="schur_op", required=True)
    sp = schur_sub.add_parser("mult")
    sp.add_argument("a")
    sp.add_argument("b")
    sp = schur_sub.add_parser("skew")
    sp.add_argument("a", help="outer partition")
    sp.add_argument("b", help="inner partition")
    sp = schur_sub.add_parser("jt")
    sp.add_argument("a", help="outer partition")
    sp.add_argument("b", nargs="?", default=None, help="optional inner partition")
    schur_p.set_defaults(handler=_cmd_schur)

    lr = sub.add_parser("lr", help="Littlewood-Richardson coefficient")
    lr.add_argument("lam")
    lr.add_argument("mu")
    lr.add_argument("nu")
    lr.set_defaults(handler=_cmd_lr)

    branch = sub.add_parser("branch", help="restrict a Schur function")
    branch.add_argument("lam")
    branch.add_argument("--target", required=True, help="sp or o")
    branch.set_defaults(handler=_cmd_branch)

    dcoef = sub.add_parser("dcoef", help="stable tensor multiplicities")
    dcoef.add_argument("mu")
    dcoef.add_argument("nu")
    dcoef.add_argument("--lam", default=None, help="report one coefficient")
    dcoef.add_argument("--family", default="sp", help="sp or o (same answer)")
    dcoef.set_defaults(handler=_cmd_dcoef)

    wdecomp = sub.add_parser("wdecomp", help="tensor-closed family decomposition")
    wdecomp.add_argument("lam")
    wdecomp.add_argument("--family", required=True, help="sp or o")
    wdecomp.set_defaults(handler=_cmd_wdecomp)

    wtensor = sub.add_parser("wtensor", help="both sides of the family tensor rule")
    wtensor.add_argument("mu")
    wtensor.add_argument("nu")
    wtensor.add_argument("--family", required=True, help="sp or o")
    wtensor.set_defaults(handler=_cmd_wtensor)

    ferm = sub.add_parser("fermionic", help="fermionic multiplicities")
    ferm.add_argument("family", choices=("A", "B", "C", "D", "a", "b", "c", "d"))
    ferm.add_argument("rank", type=int)
    ferm.add_argument(
        "--factor",
        action="append",
        required=True,
        help="tensor factor 'm,node'; repeatable",
    )
    ferm.add_argument("--weight", default=None, help="report one multiplicity")
    ferm.set_defaults(handler=_cmd_fermionic)

    roots = sub.add_parser("roots", help="root-system queries")
    roots_sub = roots.add_subparsers(dest="roots_op", required=True)
    for op in ("beta", "commute"):
        sp = roots_sub.add_parser(op)
        sp.add_argument("family", choices=("B", "C", "D", "b", "c", "d"))
        sp.add_argument("rank", type=int)
    sp = roots_sub.add_parser("cone")
    sp.add_argument("family", choices=("B", "C", "D", "b", "c", "d"))
    sp.add_argument("rank", type=int)
    sp.add_argument("--alpha", default=None, help="difference in root coordinates")
    sp.add_argument("--weight", default=None, help="difference in weight coordinates")
    roots.set_defaults(handler=_cmd_roots)

    ver = sub.add_parser("verify", help="run the cross-check suite")
    ver.add_argument("--level", choices=("quick", "full"), default="quick")
    ver.add_argument("--out", default=None, help="also write the report to a file")
    ver.set_defaults(handler=_cmd_verify)

    return parser


def _load_config(path: str | None) -> dict:
    if not path:
        return {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read().strip()
    except OSError as exc:
        raise UsageError(f"cannot read config {path!r}: {exc}") from exc
    if not text:
        return {}
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"bad config {path!r}: {exc}") from exc
    if not isinstance(data, dict):
        raise UsageError(f"config {path!r} must hold a JSON object")
    return data


def _resolve_settings(args: argparse.Namespace) -> None:
    config = _load_config(args.config)
    if args.max_boxes is not None:
        cap = args.max_boxes
    elif "max_boxes" in config:
        cap = int(config["max_boxes"])
    elif os.environ.get("LRWKIT_MAX_BOXES"):
        cap = int(os.environ["LRWKIT_MAX_BOXES"])
    else:
        cap = DEFAULT_MAX_BOXES
    fmt = args.format or config.get("format") or "json"
    if fmt not in ("json", "tsv"):
        raise UsageError(f"format must be json or tsv: {fmt!r}")
    args.resolved_max_boxes = cap
    args.resolved_format = fmt


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _resolve_settings(args)
        return args.handler(args)
    except ResourceCapExceeded as exc:
        print(f"lrwkit: {exc}", file=sys.stderr)
        return 3
    except UsageError as exc:
        print(f"lrwkit: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"lrwkit: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
