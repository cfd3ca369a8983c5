"""Command-line interface.

Exit codes: 0 positive verdict, 1 negative verdict, 2 input error,
3 THEOREM-VIOLATION.
"""

import argparse
import json
import sys
from pathlib import Path

from . import census as census_mod
from .aggroup import ag_group_report, ideals_json
from .core import FiniteGroupoid
from .derived import clifford_decompose, derive
from .errors import (AglabError, ClosureError, InputError, NotCompletelyInverse,
                     NotSemilatticeOfAbelianGroups, TheoremViolation)
from .inflation import inflate, theorem10_check
from .inverses import classify, inverse_data
from .laws import Law, check_law
from .morphisms import are_isomorphic, automorphisms, canonical_form
from .structure import construct_thm20, extract_thm21, make_pair, roundtrip_cor22
from .tableio import read_table, serialize, write_table

SCHEMA_VERSION = 1

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_THEOREM = 0, 1, 2, 3


def _perm_json(g, perm):
    return [g.label(x) for x in perm]


def _parse_perm(spec, g):
    if spec in ("id", "identity"):
        return tuple(range(g.order))
    parts = [p for p in spec.replace(",", " ").split() if p]
    if len(parts) != g.order:
        raise InputError(f"permutation needs {g.order} images, got {len(parts)}")
    return tuple(g.index(p) for p in parts)


def _table_payload(g):
    return {"order": g.order, "text": serialize(g)}


def _maybe_write(g, out):
    if out:
        write_table(g, out)


def cmd_check(args):
    g = read_table(args.file)
    rep = check_law(g, Law.parse(args.law))
    return rep.holds, rep.to_json(g), None


def cmd_classify(args):
    g = read_table(args.file)
    rep = classify(g)
    return rep.class3 == "all-three", rep.to_json(g), None


def cmd_inverses(args):
    g = read_table(args.file)
    data = inverse_data(g)
    return data.inverse_map is not None, data.to_json(g), None


def cmd_derive(args):
    g = read_table(args.file)
    try:
        dg = derive(g)
    except NotCompletelyInverse as exc:
        return False, {"derived": None, "reason": str(exc)}, None
    _maybe_write(dg.derived, args.out)
    summary = {"derived": _table_payload(dg.derived),
               "inverse": _perm_json(g, dg.inverse),
               "commutative": True, "associative": True}
    return True, summary, serialize(dg.derived)


def cmd_decompose(args):
    g = read_table(args.file)
    try:
        dec = clifford_decompose(g)
    except NotSemilatticeOfAbelianGroups as exc:
        return False, {"decomposition": None, "reason": str(exc),
                       "witness": None if exc.witness is None else [int(x) for x in exc.witness]}, None
    return True, {"decomposition": dec.to_json(g)}, None


def cmd_canon(args):
    g = read_table(args.file)
    cf = canonical_form(g)
    return True, {"canonical_table": [list(r) for r in cf.key],
                  "witness_perm": _perm_json(g, cf.witness_perm)}, serialize(cf.canonical_table)


def cmd_iso(args):
    g, h = read_table(args.file1), read_table(args.file2)
    iso = are_isomorphic(g, h)
    payload = {"isomorphic": iso is not None,
               "isomorphism": None if iso is None
               else {g.label(x): h.label(y) for x, y in enumerate(iso)}}
    return iso is not None, payload, None


def cmd_autos(args):
    g = read_table(args.file)
    autos = automorphisms(g)
    if args.involutive:
        autos = [a for a in autos if a.involutive]
    if args.efixed:
        autos = [a for a in autos if a.e_fixed]
    return True, {"count": len(autos), "automorphisms": [a.to_json(g) for a in autos]}, None


def cmd_construct(args):
    sga = read_table(args.file)
    try:
        pair = make_pair(sga, _parse_perm(args.auto, sga))
    except NotSemilatticeOfAbelianGroups as exc:
        raise InputError(f"input is not a semilattice of abelian groups: {exc}") from exc
    g = construct_thm20(pair)
    _maybe_write(g, args.out)
    return True, {"groupoid": _table_payload(g)}, serialize(g)


def cmd_extract(args):
    g = read_table(args.file)
    try:
        pair = extract_thm21(g)
    except NotCompletelyInverse as exc:
        return False, {"sga": None, "automorphism": None, "reason": str(exc)}, None
    _maybe_write(pair.sga, args.out)
    return True, {"sga": _table_payload(pair.sga),
                  "automorphism": _perm_json(g, pair.A.perm)}, serialize(pair.sga)


def cmd_roundtrip(args):
    g = read_table(args.file)
    ok = roundtrip_cor22(g)
    return ok, {"roundtrip": ok}, None


def cmd_aggroup(args):
    g = read_table(args.file)
    rep = ag_group_report(g)
    return rep.is_ag_group, rep.to_json(g), None


def cmd_ideals(args):
    g = read_table(args.file)
    return True, {"ideals": ideals_json(g)}, None


def cmd_inflate(args):
    u = read_table(args.file)
    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    g = inflate(u, sizes)
    _maybe_write(g, args.out)
    return True, {"groupoid": _table_payload(g)}, serialize(g)


def cmd_deflate(args):
    g = read_table(args.file)
    res = theorem10_check(g)
    return res.witness is not None, res.to_json(g), None


def cmd_census(args):
    res = census_mod.enumerate_class(args.order, args.cls, jobs=args.jobs,
                                     method=args.method,
                                     exhaustive_unpruned=args.exhaustive_unpruned)
    if args.emit_tables:
        out = Path(args.emit_tables)
        out.mkdir(parents=True, exist_ok=True)
        for i, key in enumerate(res.canonical_tables):
            write_table(FiniteGroupoid(key), out / f"{res.cls.value}_{res.order}_{i:04d}.tbl")
    return True, res.to_json(timing=args.timing), None


def cmd_omega(args):
    rep = census_mod.omega_cross_check(args.order, jobs=args.jobs)
    return rep.holds, rep.to_json(), None


def build_parser():
    p = argparse.ArgumentParser(prog="aglab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, files=("file",), help=None):
        sp = sub.add_parser(name, help=help)
        for f in files:
            sp.add_argument(f)
        sp.add_argument("--json", action="store_true", help="emit a JSON report")
        sp.set_defaults(func=func)
        return sp

    sp = add("check", cmd_check, help="decide one law")
    sp.add_argument("--law", required=True,
                    choices=["invertive", "medial", "paramedial", "agss", "assoc", "comm",
                             "ag_star_star", "associative", "commutative"])
    add("classify", cmd_classify, help="three-way completely-inverse classification")
    add("inverses", cmd_inverses, help="left inverses and inverse sets")
    add("derive", cmd_derive, help="derived product").add_argument("--out")
    add("decompose", cmd_decompose, help="semilattice of abelian groups decomposition")
    add("canon", cmd_canon, help="canonical form")
    add("iso", cmd_iso, files=("file1", "file2"), help="isomorphism test")
    sp = add("autos", cmd_autos, help="automorphisms")
    sp.add_argument("--involutive", action="store_true")
    sp.add_argument("--efixed", action="store_true")
    sp = add("construct", cmd_construct, help="build from a semilattice of groups and an automorphism")
    sp.add_argument("--auto", required=True, help="images of the elements, comma separated, or 'id'")
    sp.add_argument("--out")
    add("extract", cmd_extract, help="split into semilattice of groups and automorphism").add_argument("--out")
    add("roundtrip", cmd_roundtrip, help="extract then construct; compare tables")
    add("aggroup", cmd_aggroup, help="AG-group conditions and left simplicity")
    add("ideals", cmd_ideals, help="principal ideals per element")
    sp = add("inflate", cmd_inflate, help="inflate a groupoid")
    sp.add_argument("--sizes", required=True)
    sp.add_argument("--out")
    add("deflate", cmd_deflate, help="recover an inflation witness")
    sp = add("census", cmd_census, files=(), help="enumerate a class up to isomorphism")
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--class", dest="cls", required=True,
                    choices=sorted({c.value for c in census_mod.CensusClass}
                                   | set(census_mod.CLASS_ALIASES)))
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--method", choices=["pruned", "naive"], default="pruned")
    sp.add_argument("--emit-tables")
    sp.add_argument("--exhaustive-unpruned", action="store_true")
    sp.add_argument("--timing", action="store_true", help="include wall time (breaks byte-identity)")
    sp = add("omega", cmd_omega, files=(), help="compare direct census with constructed groupoids")
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--jobs", type=int, default=1)
    return p


def _human(payload, indent=0):
    lines = []
    pad = "  " * indent
    for key, value in payload.items():
        if isinstance(value, dict) and value:
            lines.append(f"{pad}{key}:")
            lines.extend(_human(value, indent + 1))
        elif key == "text":
            continue
        else:
            lines.append(f"{pad}{key}: {json.dumps(value)}")
    return lines


def run(argv=None, stdout=None, stderr=None):
    """Parse ``argv``, dispatch, print, and return the exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        verdict, payload, table_text = args.func(args)
    except TheoremViolation as exc:
        report = {"schema": SCHEMA_VERSION, "command": args.command, "error": "THEOREM-VIOLATION",
                  "message": str(exc)}
        print(json.dumps(report), file=stdout if args.json else stderr)
        return EXIT_THEOREM
    except (InputError, ClosureError, FileNotFoundError, IsADirectoryError) as exc:
        report = {"schema": SCHEMA_VERSION, "command": args.command, "error": "input",
                  "message": str(exc)}
        print(json.dumps(report), file=stdout if args.json else stderr)
        return EXIT_INPUT
    except AglabError as exc:
        report = {"schema": SCHEMA_VERSION, "command": args.command, "error": type(exc).__name__,
                  "message": str(exc)}
        print(json.dumps(report), file=stdout if args.json else stderr)
        return EXIT_NEGATIVE
    if args.json:
        doc = {"schema": SCHEMA_VERSION, "command": args.command, "verdict": bool(verdict),
               "result": payload}
        print(json.dumps(doc, separators=(",", ":")), file=stdout)
    else:
        if table_text is not None:
            # the table owns stdout so it can be redirected to a file
            stdout.write(table_text)
            rest = {k: v for k, v in payload.items() if not (isinstance(v, dict) and "text" in v)}
            summary = _human(rest)
            if summary:
                print("\n".join(summary), file=stderr)
        else:
            print("\n".join(_human(payload)), file=stdout)
        print(f"verdict: {'yes' if verdict else 'no'}", file=stdout if table_text is None else stderr)
    return EXIT_OK if verdict else EXIT_NEGATIVE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
