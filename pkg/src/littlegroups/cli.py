"""Command-line front end.

Commands: subduce, littlegroups, table, symmetry, canonicalize, invariants,
lattice, verify.  Group labels use Schoenflies spellings (D4h, C3i, S4,
Cinfv, SO3, O3); irreps are spelled 4+ for O(3), bare 4 for SO(3), and the
axial labels (3-, A2-, E2+) for the infinite axial groups.  Coefficient
vectors are read as JSON {"l": .., "parity": "+"|"-", "coeffs": {"0": ..,
"1+": .., ...}}, from a file or stdin with "-".

Exit codes: 0 success, 1 verification failure, 2 parse error, 3 internal
consistency error, 4 zero vector.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .groups import (Family, GroupError, GroupId, canonicalize_label, dims,
                     group_order, is_finite, element_from_matrix)
from .characters import (IrrepError, InternalConsistencyError, parse_irrep,
                         subduce, subduce_trace, subduce_closed,
                         UnsupportedClosedForm, rep_vectors,
                         RepVectorUnavailable, o3_irrep, so3_irrep)
from .criteria import massive_little_groups, default_n_max
from .axial import little_group_axial
from .lattice import subgroups, export_graph
from .oracle import (CoeffVector, detect_symmetry, canonicalize,
                     invariant_basis, ZeroVectorError, TOL_SYMMETRY)
from . import paperdata, verify as verify_mod

AXIAL = {Family.Cinf, Family.Cinfh, Family.Cinfv, Family.Dinf, Family.Dinfh}


class CliError(Exception):
    def __init__(self, message, code=2):
        super().__init__(message)
        self.code = code


def _emit(payload, fmt: str):
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True, default=str))
        return
    rows = payload.get("rows")
    if rows is not None:
        header = payload.get("header")
        if fmt == "csv":
            if header:
                print(",".join(str(h) for h in header))
            for row in rows:
                print(",".join(str(x) for x in row))
            return
        widths = None
        table = ([header] if header else []) + [[str(x) for x in row]
                                                for row in rows]
        widths = [max(len(str(r[i])) for r in table)
                  for i in range(len(table[0]))]
        for r in table:
            print("  ".join(str(x).ljust(w) for x, w in zip(r, widths)))
        return
    for key, value in payload.items():
        print(f"{key}: {value}")


def _parse_group(text: str) -> GroupId:
    try:
        return canonicalize_label(text)
    except GroupError as exc:
        raise CliError(str(exc)) from exc


def _parse_irrep(parent: GroupId, text: str):
    try:
        return parse_irrep(parent, text)
    except IrrepError as exc:
        raise CliError(str(exc)) from exc


def _guess_parent(irrep_text: str) -> GroupId:
    return GroupId(Family.O3) if irrep_text[-1] in "+-" else GroupId(Family.SO3)


def cmd_subduce(args) -> int:
    g = _parse_group(args.group)
    parent = _guess_parent(args.irrep)
    ir = _parse_irrep(parent, args.irrep)
    result = subduce(g, ir)
    cross = "n/a"
    if is_finite(g):
        try:
            closed = subduce_closed(g, ir).c
            trace = subduce_trace(g, ir).c
            cross = "ok" if closed == trace else \
                f"MISMATCH closed={closed} trace={trace}"
            if closed != trace:
                raise InternalConsistencyError(cross)
        except UnsupportedClosedForm:
            cross = "trace only"
    _emit({"group": g.label, "irrep": str(ir), "c": result.c,
           "method": result.method.value, "cross_check": cross}, args.format)
    return 0


def _axial_rows(parent: GroupId, irrep) -> dict:
    res = little_group_axial(irrep)
    row = [str(irrep), res.little_group.label, res.vector_dim,
           res.note or ""]
    return {"header": ["irrep", "little_group", "vector_dim", "note"],
            "rows": [row]}


def cmd_littlegroups(args) -> int:
    parent = _parse_group(args.parent)
    if parent.family in AXIAL:
        if not args.irrep:
            raise CliError("axial parents need --irrep")
        ir = _parse_irrep(parent, args.irrep)
        _emit(_axial_rows(parent, ir), args.format)
        return 0
    if parent.family not in (Family.SO3, Family.O3):
        raise CliError("parent must be SO3, O3 or an infinite axial group")
    if args.irrep:
        if args.l is not None:
            raise CliError("give either --irrep or --l")
        irreps = [_parse_irrep(parent, args.irrep)]
    elif args.l is not None:
        if parent.family is Family.SO3:
            irreps = [so3_irrep(args.l)]
        else:
            irreps = [o3_irrep(args.l, 1), o3_irrep(args.l, -1)]
    else:
        raise CliError("need --irrep or --l")
    rows = []
    for ir in irreps:
        entries = massive_little_groups(parent, ir, args.nmax)
        for e in entries:
            vec = " ".join(e.rep_vector) if e.rep_vector else "-"
            rows.append([str(ir), e.group.label, e.c, e.f0, e.fm,
                         e.stratum_dim, vec])
    _emit({"header": ["irrep", "group", "c", "f0", "fm", "stratum", "vector"],
           "rows": rows}, args.format)
    return 0


def cmd_table(args) -> int:
    n = args.number
    if n == 3:
        header = ["group", "fbar"] + paperdata.IRREP_COLUMNS
        rows = []
        for lab in paperdata.TABLE3:
            g = canonicalize_label(lab)
            row = [lab, dims(g).fbar]
            for col in paperdata.IRREP_COLUMNS:
                row.append(subduce(g, _parse_irrep(GroupId(Family.O3),
                                                   col)).c)
            rows.append(row)
        _emit({"header": header, "rows": rows}, args.format)
        return 0
    if n in (4, 5):
        l_max = args.lmax if args.lmax is not None else (4 if n == 4 else 9)
        parent = GroupId(Family.SO3) if n == 4 else GroupId(Family.O3)
        rows = []
        if n == 4:
            irreps = [so3_irrep(l) for l in range(0, l_max + 1)]
        else:
            irreps = [o3_irrep(l, p) for p in (1, -1)
                      for l in range(0, l_max + 1)]
        for ir in irreps:
            for e in massive_little_groups(parent, ir, args.nmax):
                rows.append([str(ir), e.group.label, e.stratum_dim])
        _emit({"header": ["irrep", "little_group", "stratum_dim"],
               "rows": rows}, args.format)
        return 0
    if n in (1, 2):
        l_max = args.lmax if args.lmax is not None else 8
        parent = GroupId(Family.SO3) if n == 1 else GroupId(Family.O3)
        rows = []
        for l in range(1, l_max + 1):
            irreps = [so3_irrep(l)] if n == 1 else [o3_irrep(l, -1)]
            for ir in irreps:
                for e in massive_little_groups(parent, ir, args.nmax):
                    if n == 2 and not is_finite(e.group) \
                            and e.group.family is Family.SO3:
                        continue
                    try:
                        vec = " ".join(rep_vectors(e.group, ir)) or "-"
                    except RepVectorUnavailable:
                        vec = "(special combination; see invariants)"
                    rows.append([str(ir), e.group.label, e.c, vec])
        _emit({"header": ["irrep", "little_group", "c", "vector"],
               "rows": rows}, args.format)
        return 0
    raise CliError("table number must be 1..5")


def _read_vector(source: str) -> CoeffVector:
    try:
        text = sys.stdin.read() if source == "-" else open(source).read()
        return CoeffVector.from_json(text)
    except OSError as exc:
        raise CliError(f"cannot read {source}: {exc}") from exc
    except (ValueError, KeyError) as exc:
        raise CliError(f"malformed coefficient vector: {exc}") from exc


def _axis_angle_text(rot) -> str:
    e = element_from_matrix(np.asarray(rot))
    return (f"axis=({e.axis[0]:+.6f},{e.axis[1]:+.6f},{e.axis[2]:+.6f}) "
            f"angle={math.degrees(e.angle):.4f}deg")


def cmd_symmetry(args) -> int:
    cv = _read_vector(args.vector)
    try:
        report = detect_symmetry(cv, tol=args.tol,
                                 proper_only=args.rotations_only)
    except ZeroVectorError as exc:
        raise CliError(str(exc), code=4) from exc
    worst = max((r for _, r in report.witnesses), default=0.0)
    payload = {
        "group": report.group.label,
        "orientation": _axis_angle_text(report.orientation),
        "witnesses": len(report.witnesses),
        "worst_residual": f"{worst:.3e}",
        "warnings": "; ".join(report.warnings) or "none",
    }
    if args.format == "json":
        payload["orientation_matrix"] = [[round(float(x), 12) for x in row]
                                         for row in report.orientation]
    _emit(payload, args.format)
    return 0


def cmd_canonicalize(args) -> int:
    cv = _read_vector(args.vector)
    try:
        rot, out = canonicalize(cv)
    except ZeroVectorError as exc:
        raise CliError(str(exc), code=4) from exc
    payload = {"rotation": _axis_angle_text(rot),
               "coeffs": json.dumps(out.to_dict()["coeffs"], sort_keys=True)}
    _emit(payload, args.format)
    return 0


def cmd_invariants(args) -> int:
    g = _parse_group(args.group)
    parent = _guess_parent(args.irrep)
    ir = _parse_irrep(parent, args.irrep)
    basis = invariant_basis(g, ir)
    rows = []
    for i, cv in enumerate(basis):
        coeffs = {lab: round(float(c), 10)
                  for lab, c in zip(cv.labels, cv.coeffs) if abs(c) > 1e-12}
        rows.append([i, json.dumps(coeffs, sort_keys=True)])
    _emit({"header": ["index", "coefficients"], "rows": rows}, args.format)
    return 0


def cmd_lattice(args) -> int:
    parent = _parse_group(args.parent)
    n_max = args.nmax or 6
    sys.stdout.write(export_graph(subgroups(parent, n_max)))
    return 0


def cmd_verify(args) -> int:
    scopes = {s for s in ("tables", "criteria", "oracle", "axial", "lattice")
              if getattr(args, s)}
    report = verify_mod.run_all(scopes or None)
    if args.format == "json":
        print(json.dumps(report, indent=2, sort_keys=True, default=str))
    else:
        for c in report["checks"]:
            state = "PASS" if c["passed"] else "FAIL"
            print(f"{state}  {c['name']:32s} ({c['seconds']:.2f}s)")
            if not c["passed"]:
                print(f"      {json.dumps(c['details'], default=str)[:400]}")
        print("documented discrepancies (not failures):")
        for d in report["discrepancy_ledger"]:
            print(f"  - {d['id']}: {d['where']}")
        print("overall:", "PASS" if report["ok"] else "FAIL")
    return 0 if report["ok"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="littlegroups",
        description="Little groups of O(3)/SO(3) irreps by the massive chain "
                    "criterion, with numerical verification.")
    parser.add_argument("--format", choices=("text", "json", "csv"),
                        default="text")
    parser.add_argument("--tol", type=float, default=TOL_SYMMETRY,
                        help="symmetry detection tolerance")
    parser.add_argument("--nmax", type=int, default=None,
                        help="lattice truncation override")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for randomized checks")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("subduce", help="subduction frequency of an irrep")
    p.add_argument("group")
    p.add_argument("irrep")
    p.set_defaults(func=cmd_subduce)

    p = sub.add_parser("littlegroups", help="little groups of an irrep")
    p.add_argument("parent")
    p.add_argument("--irrep")
    p.add_argument("--l", type=int)
    p.set_defaults(func=cmd_littlegroups)

    p = sub.add_parser("table", help="emit a computed results table")
    p.add_argument("number", type=int, choices=(1, 2, 3, 4, 5))
    p.add_argument("--lmax", type=int, default=None)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("symmetry", help="detect the symmetry of a vector")
    p.add_argument("vector", help="JSON file or - for stdin")
    p.add_argument("--rotations-only", action="store_true")
    p.set_defaults(func=cmd_symmetry)

    p = sub.add_parser("canonicalize", help="zero the 1+/1- (and 2-) "
                                            "coefficients by rotation")
    p.add_argument("vector", help="JSON file or - for stdin")
    p.set_defaults(func=cmd_canonicalize)

    p = sub.add_parser("invariants", help="orthonormal invariant basis")
    p.add_argument("group")
    p.add_argument("irrep")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("lattice", help="export a subgroup lattice slice")
    p.add_argument("parent")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("verify", help="run the verification sweep")
    for scope in ("tables", "criteria", "oracle", "axial", "lattice"):
        p.add_argument(f"--{scope}", action="store_true",
                       help=f"restrict to the {scope} checks")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (GroupError, IrrepError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalConsistencyError as exc:
        print(f"internal consistency error: {exc}", file=sys.stderr)
        return 3
    except ZeroVectorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
