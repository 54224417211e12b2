"""Command-line interface.

Subcommands: report, check, verify, export-groupoid, apply.  Group and
ring specs are compact strings (S3, C6, D3, Z4, GF:2:3, Integers,
product:...) or @file.json payloads; outputs are deterministic text or
JSON (all JSON carries a top-level schema_version).  Exit codes: 0 ok,
2 bad spec, 3 size limit exceeded, 4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .derivations import (
    GroupRingElement,
    Derivation,
    ad,
    derivation_module_report,
    outer_vanishing_check,
)
from .errors import SizeLimitError, SpecError
from .groupoid import groupoid_dot
from .groups import DEFAULT_MAX_ORDER, FiniteGroup, construct_group
from .oracle import DEFAULT_MAX_GROUP, compare, solve_all_derivations
from .rings import DEFAULT_MAX_SIZE, FiniteRing, IntegersRing, construct_ring

SCHEMA_VERSION = 1


def parse_group_spec(text: str) -> dict:
    """Compact group spec: S3 | C6 | cyclic:6 | D3 | dihedral:3 |
    symmetric:4 | product:S3+C2 | @file.json."""
    text = text.strip()
    if text.startswith("@"):
        return _load_json_spec(text[1:])
    m = re.fullmatch(r"S(\d+)", text)
    if m:
        return {"kind": "symmetric", "n": int(m.group(1))}
    m = re.fullmatch(r"C(\d+)", text)
    if m:
        return {"kind": "cyclic", "m": int(m.group(1))}
    m = re.fullmatch(r"D(\d+)", text)
    if m:
        return {"kind": "dihedral", "n": int(m.group(1))}
    if ":" in text:
        kind, _, rest = text.partition(":")
        if kind == "symmetric":
            return {"kind": "symmetric", "n": _parse_int(rest)}
        if kind == "cyclic":
            return {"kind": "cyclic", "m": _parse_int(rest)}
        if kind == "dihedral":
            return {"kind": "dihedral", "n": _parse_int(rest)}
        if kind == "product":
            return {
                "kind": "product",
                "factors": [parse_group_spec(f) for f in rest.split("+")],
            }
    raise SpecError(f"cannot parse group spec {text!r}")


def parse_ring_spec(text: str) -> dict:
    """Compact ring spec: Z4 | Zm:4 | GF:2:3[:c0,c1,...] | Integers | Z |
    product:Z4+GF:2:2 | @file.json."""
    text = text.strip()
    if text.startswith("@"):
        return _load_json_spec(text[1:])
    if text in ("Z", "Integers"):
        return {"kind": "Integers"}
    m = re.fullmatch(r"Z(\d+)", text)
    if m:
        return {"kind": "Zm", "m": int(m.group(1))}
    if ":" in text:
        kind, _, rest = text.partition(":")
        if kind == "Zm":
            return {"kind": "Zm", "m": _parse_int(rest)}
        if kind == "GF":
            parts = rest.split(":")
            if len(parts) not in (2, 3):
                raise SpecError("GF spec is GF:p:k or GF:p:k:c0,c1,...,ck")
            spec = {"kind": "GF", "p": _parse_int(parts[0]), "k": _parse_int(parts[1])}
            if len(parts) == 3:
                spec["modulus"] = [_parse_int(c) for c in parts[2].split(",")]
            return spec
        if kind == "product":
            return {
                "kind": "product",
                "factors": [parse_ring_spec(f) for f in rest.split("+")],
            }
    raise SpecError(f"cannot parse ring spec {text!r}")


def _parse_int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise SpecError(f"expected an integer, got {text!r}") from None


def _load_json_spec(path: str) -> dict:
    try:
        with open(path) as fh:
            spec = json.load(fh)
    except OSError as exc:
        raise SpecError(f"cannot read spec file {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise SpecError(f"invalid JSON in {path}: {exc}") from None
    if not isinstance(spec, dict):
        raise SpecError(f"spec file {path} must contain a JSON object")
    return spec


def _emit_json(payload: dict):
    print(json.dumps(payload, indent=2, sort_keys=True))


def parse_element(G: FiniteGroup, A: FiniteRing, text: str) -> GroupRingElement:
    """Parse 'e + 3*(12)' style sums with integer coefficients."""
    coeffs = {g: A.zero for g in range(G.order)}
    name_index = {name: g for g, name in enumerate(G.names)}
    for term in text.split("+"):
        term = term.strip()
        if not term:
            raise SpecError("empty term in group-ring element")
        if "*" in term:
            num, _, name = term.partition("*")
            k = _parse_int(num.strip())
            name = name.strip()
        else:
            k, name = 1, term
        if name not in name_index:
            raise SpecError(f"unknown group element {name!r}")
        g = name_index[name]
        coeffs[g] = A.add(coeffs[g], A.scalar(k, A.one))
    return GroupRingElement(G, A, tuple(coeffs[g] for g in range(G.order)))


def parse_derivation(G: FiniteGroup, A: FiniteRing, report, text: str) -> Derivation:
    """ad:NAME | outer:CLASSNAME:INDEX | @matrix.json."""
    if text.startswith("@"):
        payload = _load_json_spec(text[1:])
        rows = payload.get("matrix")
        if rows is None:
            raise SpecError("derivation file needs a 'matrix' field")
        if len(rows) != G.order or any(len(r) != G.order for r in rows):
            raise SpecError(f"derivation matrix must be {G.order}x{G.order}")
        mat = tuple(tuple(A.from_json_value(x) for x in row) for row in rows)
        return Derivation(G, A, mat)
    if text.startswith("ad:"):
        name = text[3:]
        if name not in G.names:
            raise SpecError(f"unknown group element {name!r}")
        return ad(G, A, G.names.index(name))
    if text.startswith("outer:"):
        parts = text.split(":")
        if len(parts) != 3:
            raise SpecError("outer derivation spec is outer:CLASSNAME:INDEX")
        _, cls_name, idx_text = parts
        idx = _parse_int(idx_text)
        for block in report.outer:
            if G.names[block.class_rep] == cls_name:
                if not 0 <= idx < len(block.generators):
                    raise SpecError(
                        f"class [{cls_name}] has {len(block.generators)} outer generators"
                    )
                return block.generators[idx].derivation
        raise SpecError(f"no class with representative {cls_name!r}")
    raise SpecError(f"cannot parse derivation spec {text!r}")


def _build(args) -> tuple[FiniteGroup, FiniteRing, dict, dict]:
    gspec = parse_group_spec(args.group)
    rspec = parse_ring_spec(args.ring) if getattr(args, "ring", None) else None
    limit = getattr(args, "limit", None)
    G = construct_group(gspec, max_order=limit or DEFAULT_MAX_ORDER)
    A = construct_ring(rspec, max_size=limit or DEFAULT_MAX_SIZE) if rspec else None
    return G, A, gspec, rspec


def cmd_report(args) -> int:
    G, A, gspec, rspec = _build(args)
    if isinstance(A, IntegersRing):
        raise SpecError("report needs a finite ring; use 'check' for Integers")
    report = derivation_module_report(G, A)
    if args.json:
        _emit_json(
            report.to_json_dict(
                include_inner_matrices=args.matrices,
                group_spec=gspec,
                ring_spec=rspec,
            )
        )
        return 0
    st = report.module_structure
    print(f"Der({A.label}[{G.label}])")
    print(f"  group order {G.order}, ring size {A.size}")
    reps = ", ".join(G.names[r] for r in report.representatives)
    print(f"  conjugacy class representatives: {reps}")
    print(f"  inner: free rank {report.inner_rank} over {A.label}, basis ad(g) for g in:")
    names = ", ".join(G.names[g] for g, _ in report.inner)
    print(f"    {names if names else '(empty)'}")
    total_out = 1
    for block in report.outer:
        for gen in block.generators:
            total_out *= gen.order
    print(f"  outer generators ({total_out} outer classes):")
    for block in report.outer:
        if not block.generators:
            continue
        parts = ", ".join(
            f"order {gen.order}" for gen in block.generators
        )
        print(
            f"    class [{G.names[block.class_rep]}] (|Z|={block.centralizer_order}): {parts}"
        )
    if all(not block.generators for block in report.outer):
        print("    (none; all derivations inner)")
    tor = " + ".join(f"Z{p**e}" for p, e in st.torsion) or "0"
    print(f"  module: {A.label}^{st.free_rank} + {tor}, {st.cardinality()} derivations")
    c = report.criteria
    print(
        f"  criteria: paper_prime_criterion={c.paper_prime_criterion} "
        f"gcd_sufficient={c.gcd_sufficient} exact_outer_trivial={c.exact_outer_trivial}"
    )
    if c.conflict:
        print("  criterion-conflict: published prime test disagrees with exact result")
    return 0


def cmd_check(args) -> int:
    G, A, gspec, rspec = _build(args)
    record = outer_vanishing_check(G, A)
    if args.json:
        payload = record.to_json_dict()
        payload.update(
            {
                "schema_version": SCHEMA_VERSION,
                "kind": "criteria-check",
                "group": {"label": G.label, "order": G.order, "spec": gspec},
                "ring": {"label": A.label, "spec": rspec},
            }
        )
        _emit_json(payload)
        return 0
    print(f"outer-vanishing check for {A.label}[{G.label}]")
    print(f"  ring primes: {list(record.ring_primes)}")
    print(f"  abelianization primes: {list(record.abelianization_primes)}")
    print(f"  paper_prime_criterion (primes disjoint): {record.paper_prime_criterion}")
    print(f"  gcd_sufficient: {record.gcd_sufficient}")
    print(f"  exact_outer_trivial: {record.exact_outer_trivial}")
    if record.conflict:
        print("  criterion-conflict: published prime test disagrees with exact result")
    return 0


def cmd_verify(args) -> int:
    G, A, gspec, rspec = _build(args)
    if isinstance(A, IntegersRing):
        raise SpecError("verify needs a finite ring")
    limit = args.limit or DEFAULT_MAX_GROUP
    report = derivation_module_report(G, A)
    sol = solve_all_derivations(G, A, max_group_order=limit)
    verdict = compare(report, sol)
    checks = {
        "cardinality_match": verdict.cardinality_match,
        "report_generators_in_kernel": verdict.report_generators_in_kernel,
        "oracle_generators_decompose": verdict.oracle_generators_decompose,
        "inner_matches_loop_trivial": verdict.inner_matches_loop_trivial,
    }
    if args.json:
        _emit_json(
            {
                "schema_version": SCHEMA_VERSION,
                "kind": "verify",
                "group": {"label": G.label, "order": G.order, "spec": gspec},
                "ring": {"label": A.label, "spec": rspec},
                "cardinality": sol.cardinality,
                "invariants": [list(t) for t in sol.invariants],
                "checks": checks,
                "notes": list(verdict.notes),
                "conflict": report.criteria.conflict,
                "passed": verdict.passed,
            }
        )
    else:
        print(f"verify {A.label}[{G.label}]: oracle cardinality {sol.cardinality}")
        for name, ok in checks.items():
            print(f"  {name}: {'pass' if ok else 'FAIL'}")
        for note in verdict.notes:
            print(f"  note: {note}")
        if report.criteria.conflict:
            print("  criterion-conflict: published prime test disagrees with exact result")
        print(f"  overall: {'PASS' if verdict.passed else 'FAIL'}")
    return 0 if verdict.passed else 4


def cmd_export_groupoid(args) -> int:
    gspec = parse_group_spec(args.group)
    G = construct_group(gspec, max_order=args.limit or DEFAULT_MAX_ORDER)
    sys.stdout.write(groupoid_dot(G, include_loops=args.loops))
    return 0


def cmd_apply(args) -> int:
    G, A, gspec, rspec = _build(args)
    if isinstance(A, IntegersRing):
        raise SpecError("apply needs a finite ring")
    report = derivation_module_report(G, A)
    d = parse_derivation(G, A, report, args.derivation)
    x = parse_element(G, A, args.element)
    y = d.apply(x)
    if args.json:
        _emit_json(
            {
                "schema_version": SCHEMA_VERSION,
                "kind": "apply",
                "group": {"label": G.label, "spec": gspec},
                "ring": {"label": A.label, "spec": rspec},
                "derivation": args.derivation,
                "input": x.format(),
                "result": {
                    "text": y.format(),
                    "coeffs": [A.to_json_value(c) for c in y.coeffs],
                },
            }
        )
    else:
        print(f"d({x.format()}) = {y.format()}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="derring",
        description="Exact derivation modules of finite group rings",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, ring=True):
        p.add_argument("--group", required=True, help="group spec (S3, C6, D3, @file.json)")
        if ring:
            p.add_argument("--ring", required=True, help="ring spec (Z4, GF:2:3, Integers)")
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", action="store_true", help="JSON output")
        fmt.add_argument("--text", action="store_true", help="plain text output (default)")
        p.add_argument("--limit", type=int, help="override size limits (at your own risk)")

    p = sub.add_parser("report", help="derivation module report")
    common(p)
    p.add_argument("--matrices", action="store_true", help="include inner-basis matrices in JSON")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("check", help="outer-vanishing criteria only")
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", help="cross-check the report against the brute-force oracle")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export-groupoid", help="DOT export of the adjoint-action groupoid")
    p.add_argument("--group", required=True, help="group spec")
    p.add_argument("--loops", action="store_true", help="include loop edges")
    p.add_argument("--limit", type=int, help="override size limits")
    p.set_defaults(func=cmd_export_groupoid)

    p = sub.add_parser("apply", help="apply a derivation to a group-ring element")
    common(p)
    p.add_argument(
        "--derivation",
        required=True,
        help="ad:NAME | outer:CLASSNAME:INDEX | @matrix.json",
    )
    p.add_argument("--element", required=True, help="group-ring element, e.g. 'e + 3*(12)'")
    p.set_defaults(func=cmd_apply)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SizeLimitError as exc:
        print(f"size limit: {exc}", file=sys.stderr)
        return 3
    except SpecError as exc:
        print(f"spec error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
