"""Command-line front end.

Commands: verify, analyze, classify, subrings, iso, catalog, enumerate,
solve-cos. Report-producing commands take --json for machine output; JSON
reports use sorted keys and floats rounded to 12 significant digits so that
byte-identical output is reproducible. Exit status: 0 success, 1 domain
error or failed verdict (axiom violations, refuted claims, not isomorphic),
2 command-line usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any

import numpy as np

from . import catalog, groups as gr, structure as st
from .classify import classify, verify_claims
from .numerics import COS_TARGET, ConvergenceError, fp_dimensions, solve_cos_equation, type_signature
from .ring import StructuralError, verify_axioms, find_isomorphism
from .ringfile import RingFormatError, parse_ring, ring_to_document, serialize_ring


class CliError(Exception):
    """Domain failure reported on stderr with exit status 1."""


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


def _jsonable(value: Any) -> Any:
    """Normalize a report tree for deterministic JSON output."""
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(f"{float(value):.12g}")
    return value


def _emit(report: dict) -> None:
    print(json.dumps(_jsonable(report), indent=2, sort_keys=True))


def _read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror or exc}") from None


def _load_ring(path: str):
    try:
        return parse_ring(_read_text(path))
    except RingFormatError as exc:
        raise CliError(f"{path}: {exc}") from None


def _load_valid_ring(path: str):
    ring = _load_ring(path)
    violations = verify_axioms(ring)
    if violations:
        head = "; ".join(str(v) for v in violations[:3])
        raise CliError(
            f"{path}: not a fusion ring ({len(violations)} axiom violation(s): {head})")
    return ring


# ----------------------------------------------------------------- commands

def _cmd_verify(args) -> int:
    ring = _load_ring(args.ringfile)
    violations = verify_axioms(ring)
    if args.json:
        _emit({
            "report": "verify",
            "rank": ring.rank,
            "ok": not violations,
            "violations": [{"axiom": v.axiom, "at": list(v.at)} for v in violations],
        })
    elif violations:
        for v in violations:
            print(v)
        print(f"FAIL: {len(violations)} axiom violation(s)")
    else:
        print(f"ok: all fusion-ring axioms hold (rank {ring.rank})")
    return 1 if violations else 0


def _cmd_analyze(args) -> int:
    ring = _load_valid_ring(args.ringfile)
    data = fp_dimensions(ring)
    sig = type_signature(ring)
    group, emb = st.invertibles(ring)
    grading = st.universal_grading(ring)
    adjoint = st.adjoint_subring(ring)
    nil = st.nilpotency(ring)
    faithful, cyclic = st.faithful_simples(ring)

    if args.json:
        _emit({
            "report": "analyze",
            "rank": ring.rank,
            "commutative": ring.is_commutative(),
            "type": sig.text(),
            "total": data.total,
            "dims": [
                {"index": i, "label": ring.label(i),
                 "value": data.dims[i], "tag": data.recognized[i]}
                for i in range(ring.rank)
            ],
            "invertibles": {"order": group.order,
                            "name": gr.identify_group(group),
                            "members": list(emb)},
            "grading": {"order": grading.group.order,
                        "name": gr.identify_group(grading.group),
                        "components": [list(c) for c in grading.components]},
            "adjoint": list(adjoint.members),
            "nilpotency": nil,
            "faithful_simples": list(faithful),
            "grading_cyclic": cyclic,
        })
        return 0

    print(f"rank: {ring.rank}")
    print(f"commutative: {_yesno(ring.is_commutative())}")
    print(f"type: {sig.text()}")
    print(f"FPdim total: {_fmt(data.total)}")
    print("dimensions:")
    for i in range(ring.rank):
        tag = f" = {data.recognized[i]}" if data.recognized[i] else ""
        print(f"  {i}: {_fmt(data.dims[i])}{tag}  [{ring.label(i)}]")
    print(f"invertibles: order {group.order}, {gr.identify_group(group)}, "
          f"members {list(emb)}")
    print(f"universal grading: order {grading.group.order}, "
          f"{gr.identify_group(grading.group)}")
    for cid, comp in enumerate(grading.components):
        print(f"  component {grading.group.element_name(cid)}: {list(comp)}")
    print(f"adjoint subring: {list(adjoint.members)}")
    print(f"nilpotency class: {nil if nil is not None else 'none (not nilpotent)'}")
    print(f"faithful simples: {list(faithful)} (grading cyclic: {_yesno(cyclic)})")
    return 0


def _cmd_classify(args) -> int:
    ring = _load_valid_ring(args.ringfile)
    cls = classify(ring)
    reports = verify_claims(ring)
    counts = {status: sum(1 for r in reports if r.status == status)
              for status in ("verified", "refuted", "inapplicable")}

    if args.json:
        _emit({
            "report": "classify",
            "rank": ring.rank,
            "type": cls.signature.text(),
            "flags": list(cls.flags()),
            "evidence": dict(cls.evidence),
            "claims": [{"claim": r.claim, "status": r.status, "scope": r.scope,
                        "detail": dict(r.detail)} for r in reports],
            "counts": counts,
        })
    else:
        flags = ", ".join(cls.flags()) if cls.flags() else "(none)"
        print(f"flags: {flags}")
        print(f"type: {cls.signature.text()}")
        print("claims:")
        for r in reports:
            scope = r.scope
            line = f"  {r.status:<13}[{scope}] {r.claim}"
            if r.status == "refuted" and r.detail:
                line += f"  {r.detail}"
            print(line)
        print(f"summary: {counts['verified']} verified, {counts['refuted']} refuted, "
              f"{counts['inapplicable']} inapplicable")
    return 1 if counts["refuted"] else 0


def _cmd_subrings(args) -> int:
    ring = _load_valid_ring(args.ringfile)
    subs = st.all_subrings(ring)
    if args.json:
        _emit({
            "report": "subrings",
            "rank": ring.rank,
            "count": len(subs),
            "subrings": [{"members": list(s.members), "rank": s.rank,
                          "pointed": s.pointed} for s in subs],
        })
    else:
        print(f"subrings: {len(subs)}")
        for s in subs:
            kind = "pointed" if s.pointed else "non-pointed"
            print(f"  rank {s.rank:<3}{kind:<12}{list(s.members)}")
    return 0


def _cmd_iso(args) -> int:
    first = _load_valid_ring(args.ringfile)
    second = _load_valid_ring(args.other)
    perm = find_isomorphism(first, second)
    if args.json:
        _emit({
            "report": "iso",
            "isomorphic": perm is not None,
            "map": list(perm) if perm is not None else None,
        })
    elif perm is not None:
        print("isomorphic: " + ", ".join(f"{i}->{p}" for i, p in enumerate(perm)))
    else:
        print("not isomorphic")
    return 0 if perm is not None else 1


def _catalog_ring(name: str, group_name: str | None):
    key = name.lower()
    if key in ("ising", "yang-lee"):
        if group_name is not None:
            raise CliError(f"catalog {key} takes no --group")
        return catalog.ising() if key == "ising" else catalog.yang_lee()
    if key in ("pointed", "yl-ext", "yl-extension"):
        if group_name is None:
            raise CliError(f"catalog {key} requires --group "
                           f"(one of {', '.join(gr.NAMED_GROUPS)})")
        if key == "pointed":
            return catalog.pointed(group_name)
        return catalog.yl_extension(group_name)
    raise CliError(f"unknown catalog name {name!r} "
                   "(choose from: ising, yang-lee, pointed, yl-ext)")


def _cmd_catalog(args) -> int:
    ring = _catalog_ring(args.name, args.group)
    text = serialize_ring(ring)
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise CliError(f"cannot write {args.output}: {exc.strerror or exc}") from None
    else:
        sys.stdout.write(text)
    return 0


def _cmd_enumerate(args) -> int:
    rings = catalog.enumerate_extensions(args.base, args.group)
    entries = []
    for ring in rings:
        entries.append({
            "rank": ring.rank,
            "type": type_signature(ring).text(),
            "invertibles": int(np.count_nonzero(ring.invertible)),
            "ring": ring_to_document(ring),
        })
    if args.json:
        _emit({
            "report": "enumerate",
            "base": args.base,
            "group": args.group,
            "count": len(rings),
            "rings": entries,
        })
    else:
        print(f"{len(rings)} extension ring(s): base {args.base}, "
              f"grading group {args.group}")
        for idx, entry in enumerate(entries):
            print(f"  [{idx}] rank {entry['rank']}, type {entry['type']}, "
                  f"{entry['invertibles']} invertible(s)")
    return 0


def _cmd_solve_cos(args) -> int:
    solutions = solve_cos_equation(args.terms, target=COS_TARGET, bound=args.bound)
    if args.json:
        _emit({
            "report": "solve-cos",
            "terms": args.terms,
            "bound": args.bound,
            "target": COS_TARGET,
            "solutions": [list(s) for s in solutions],
        })
    elif not solutions:
        print("no solutions")
    else:
        for sol in solutions:
            print(" ".join(f"{name}={v}" for name, v in zip("abc", sol)))
    return 0


# ------------------------------------------------------------------- parser

def _json_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true",
                   help="emit a machine-readable JSON report")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fusionring",
        description="Toolkit for fusion rings: axiom verification, "
                    "Frobenius-Perron data, gradings, family recognition "
                    "and extension enumeration.")
    sub = parser.add_subparsers(dest="command", metavar="command", required=True)

    p = sub.add_parser("verify", help="check the fusion-ring axioms on a ring file")
    p.add_argument("ringfile")
    _json_flag(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("analyze", help="dimensions, type, grading and related invariants")
    p.add_argument("ringfile")
    _json_flag(p)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("classify", help="family flags and the structural-claim suite")
    p.add_argument("ringfile")
    _json_flag(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("subrings", help="enumerate all subrings")
    p.add_argument("ringfile")
    _json_flag(p)
    p.set_defaults(func=_cmd_subrings)

    p = sub.add_parser("iso", help="search for a basis-preserving ring isomorphism")
    p.add_argument("ringfile")
    p.add_argument("other")
    _json_flag(p)
    p.set_defaults(func=_cmd_iso)

    p = sub.add_parser("catalog", help="emit a built-in ring as a ring file")
    p.add_argument("name", help="ising | yang-lee | pointed | yl-ext")
    p.add_argument("--group", help=f"group name ({', '.join(gr.NAMED_GROUPS)})")
    p.add_argument("-o", "--output", help="write to a file instead of stdout")
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("enumerate",
                       help="enumerate extension rings over a grading group")
    p.add_argument("--base", required=True, choices=("yang-lee", "pointed-z2"))
    p.add_argument("--group", required=True,
                   help=f"grading group name ({', '.join(gr.NAMED_GROUPS)})")
    _json_flag(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("solve-cos",
                       help="integer solutions of sum of cos^2(pi/a_i) hitting "
                            "the golden target (5+sqrt(5))/8")
    p.add_argument("--terms", type=int, required=True, choices=(2, 3))
    p.add_argument("--bound", type=int, default=100,
                   help="search bound for each denominator (default 100)")
    _json_flag(p)
    p.set_defaults(func=_cmd_solve_cos)

    return parser


def run(argv: list[str] | None = None) -> int:
    # Reserved for forward compatibility; every current algorithm is
    # deterministic, so the value is read and ignored.
    os.environ.get("FUSIONRING_SEED")

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (RingFormatError, StructuralError, gr.GroupError,
            ConvergenceError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
