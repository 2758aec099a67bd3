"""Command-line surface.

Exit codes: 0 success / property holds, 1 property fails (witness on stdout),
2 input error, 3 resource cap exceeded.  FILE arguments accept a path or the
name of an embedded fixture.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algebra import (
    AlgebraError,
    CheckResult,
    FiniteAlgebra,
    InputError,
    ResourceLimitError,
    check_axiom,
    classify,
    le,
    le_l,
    le_q,
    star,
    vee_p,
    vee_q,
    wedge_p,
    wedge_q,
)
from .documents import parse_algebra, serialize_algebra
from .enumeration import (
    counterexample_search,
    enumerate_models,
    goal_from_names,
    is_isomorphic,
)
from .fixtures import FIXTURE_NAMES, fixture
from .orthospace import (
    associated_orthospace,
    blocks,
    cl_algebra,
    enumerate_orthoclosed,
    is_dacey,
    is_normal,
)
from .sasaki import (
    center,
    commutes,
    has_full_sasaki_set,
    is_sasaki_space,
    sasaki_projection,
)
from .theorems import list_checks, run_check

EXIT_OK = 0
EXIT_PROPERTY_FAILS = 1
EXIT_INPUT_ERROR = 2
EXIT_RESOURCE_CAP = 3


def _load(path_or_name: str) -> FiniteAlgebra:
    p = Path(path_or_name)
    if p.exists():
        return parse_algebra(p.read_text(encoding="utf-8"), default_name=p.stem)
    if path_or_name in FIXTURE_NAMES:
        return fixture(path_or_name)
    raise InputError(f"no such file or fixture: {path_or_name}")


def _result_dict(res: CheckResult) -> dict:
    return {
        "check": res.check_id,
        "status": res.status,
        "witness": [list(pair) for pair in res.witness],
    }


def _print_result(res: CheckResult) -> None:
    if res.witness:
        detail = " ".join(f"{role}={value}" for role, value in res.witness)
        print(f"{res.check_id}: {res.status}  [{detail}]")
    else:
        print(f"{res.check_id}: {res.status}")


def _table(header: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(r[i]) for r in [header] + rows) for i in range(len(header))]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    for row in rows:
        lines.append("  ".join(c.rjust(w) for c, w in zip(row, widths)))
    return "\n".join(lines)


def _cmd_validate(args) -> int:
    alg = _load(args.file)
    broken = []
    for axiom_id in ("BE1", "BE2", "BE3", "BE4", "bounded", "DN"):
        res = check_axiom(alg, axiom_id)
        _print_result(res)
        if res.failed:
            broken.append(axiom_id)
    if broken:
        print(f"{alg.name}: not a bounded involutive BE table ({', '.join(broken)})")
        return EXIT_INPUT_ERROR
    print(f"{alg.name}: valid document with {alg.n} elements")
    return EXIT_OK


def _cmd_classify(args) -> int:
    alg = _load(args.file)
    flags = classify(alg).as_dict()
    if args.json:
        print(json.dumps({"name": alg.name, "classification": flags}, indent=2))
    else:
        for key, value in flags.items():
            print(f"{key}: {'yes' if value else 'no'}")
    return EXIT_OK


_DERIVED_BINARY = {
    "arrow": lambda a, x, y: a.arrow[x][y],
    "wedge_q": wedge_q,
    "vee_q": vee_q,
    "wedge_p": wedge_p,
    "vee_p": vee_p,
}
_DERIVED_RELATION = {"le": le, "le_l": le_l, "le_q": le_q}


def _cmd_derive(args) -> int:
    alg = _load(args.file)
    if args.op == "star":
        rows = [[alg.elements[x], alg.elements[star(alg, x)]] for x in range(alg.n)]
        print(_table(["x", "x*"], rows))
        return EXIT_OK
    header = [args.op] + list(alg.elements)
    rows = []
    for x in range(alg.n):
        row = [alg.elements[x]]
        for y in range(alg.n):
            if args.op in _DERIVED_BINARY:
                row.append(alg.elements[_DERIVED_BINARY[args.op](alg, x, y)])
            else:
                row.append("1" if _DERIVED_RELATION[args.op](alg, x, y) else "0")
        rows.append(row)
    print(_table(header, rows))
    return EXIT_OK


def _cmd_ortho(args) -> int:
    alg = _load(args.file)
    space = associated_orthospace(alg)
    out: dict = {"points": list(space.points)}
    results: list[CheckResult] = []
    out["perp"] = {p: list(space.names(space.rel[i])) for i, p in enumerate(space.points)}
    if args.cl:
        family = enumerate_orthoclosed(space)
        out["orthoclosed"] = [space.subset_name(m) for m in family.members]
        logic = cl_algebra(space)
        out["cl_arrow"] = [[logic.elements[v] for v in row] for row in logic.arrow]
    if args.dacey:
        res = is_dacey(space)
        results.append(res)
        out["dacey"] = _result_dict(res)
    if args.blocks:
        out["blocks"] = [space.subset_name(b) for b in blocks(space)]
    if args.normal:
        res = is_normal(space)
        results.append(res)
        out["normal"] = _result_dict(res)
    if args.sasaki_space:
        res = is_sasaki_space(space)
        results.append(res)
        out["sasaki_space"] = _result_dict(res)
    if args.json:
        print(json.dumps(out, indent=2))
    else:
        for point in space.points:
            print(f"{point}^perp = {{{','.join(out['perp'][point])}}}")
        if args.cl:
            print("orthoclosed:", " ".join(out["orthoclosed"]))
        if args.blocks:
            print("blocks:", " ".join(out["blocks"]))
        for res in results:
            _print_result(res)
    return EXIT_PROPERTY_FAILS if any(r.failed for r in results) else EXIT_OK


def _cmd_sasaki(args) -> int:
    alg = _load(args.file)
    out: dict = {"name": alg.name}
    results: list[CheckResult] = []
    if args.projections:
        out["projections"] = {
            alg.elements[a]: [alg.elements[v] for v in sasaki_projection(alg, a).image]
            for a in range(alg.n)
        }
    if args.commute:
        out["commute"] = [
            ["1" if commutes(alg, x, y) else "0" for y in range(alg.n)]
            for x in range(alg.n)
        ]
    if args.center:
        cen = center(alg)
        out["center"] = list(alg.names(cen))
        if not classify(alg).is_ioml:
            out["center_warning"] = "algebra is not orthomodular; center may not be star-closed"
    if args.full_set:
        res = has_full_sasaki_set(alg)
        results.append(res)
        out["full_set"] = _result_dict(res)
    if args.json:
        print(json.dumps(out, indent=2))
    else:
        if args.projections:
            rows = [[f"phi_{a}"] + out["projections"][a] for a in out["projections"]]
            print(_table(["map"] + list(alg.elements), rows))
        if args.commute:
            rows = [[alg.elements[x]] + out["commute"][x] for x in range(alg.n)]
            print(_table(["C"] + list(alg.elements), rows))
        if args.center:
            print("center:", " ".join(out["center"]))
            if "center_warning" in out:
                print("warning:", out["center_warning"])
        for res in results:
            _print_result(res)
    return EXIT_PROPERTY_FAILS if any(r.failed for r in results) else EXIT_OK


def _cmd_theorems(args) -> int:
    alg = _load(args.file)
    wanted = args.filter or [spec.check_id for spec in list_checks()]
    known = {spec.check_id for spec in list_checks()}
    for check_id in wanted:
        if check_id not in known:
            raise InputError(f"unknown check id {check_id!r}")
    results = [run_check(alg, check_id) for check_id in wanted]
    if args.json:
        print(json.dumps([_result_dict(r) for r in results], indent=2))
    else:
        for res in results:
            _print_result(res)
        counts = {
            "pass": sum(r.passed for r in results),
            "fail": sum(r.failed for r in results),
            "skipped": sum(r.skipped for r in results),
        }
        print(f"total: {counts['pass']} pass, {counts['fail']} fail, {counts['skipped']} skipped")
    return EXIT_PROPERTY_FAILS if any(r.failed for r in results) else EXIT_OK


def _cmd_enumerate(args) -> int:
    models = enumerate_models(args.size, args.cls, args.limit)
    if args.count_only:
        print(len(models))
    else:
        for model in models:
            print(serialize_algebra(model, compact=True))
    return EXIT_OK


def _cmd_iso(args) -> int:
    a, b = _load(args.file1), _load(args.file2)
    mapping = is_isomorphic(a, b)
    if mapping is None:
        print("non-isomorphic")
        return EXIT_PROPERTY_FAILS
    print(" ".join(f"{a.elements[i]}->{b.elements[v]}" for i, v in enumerate(mapping)))
    return EXIT_OK


def _cmd_fixture(args) -> int:
    print(serialize_algebra(fixture(args.name)), end="")
    return EXIT_OK


def _cmd_search(args) -> int:
    require = [s for s in (args.require or "").split(",") if s]
    forbid = [s for s in (args.forbid or "").split(",") if s]
    goal = goal_from_names(require, forbid, max_size=args.max_size)
    hit = counterexample_search(goal)
    if hit is None:
        print("none")
        return EXIT_PROPERTY_FAILS
    print(serialize_algebra(hit, compact=True))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orthologic",
        description="verification and exploration workbench for finite "
        "implicative-ortholattices and their orthogonality spaces",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse and validate a document")
    p.add_argument("file")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("classify", help="classification flags")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("derive", help="print a derived table")
    p.add_argument("file")
    p.add_argument(
        "--op",
        required=True,
        choices=["star", "arrow", "wedge_q", "vee_q", "wedge_p", "vee_p", "le", "le_l", "le_q"],
    )
    p.set_defaults(func=_cmd_derive)

    p = sub.add_parser("ortho", help="orthogonality-space reports")
    p.add_argument("file")
    p.add_argument("--cl", action="store_true")
    p.add_argument("--dacey", action="store_true")
    p.add_argument("--blocks", action="store_true")
    p.add_argument("--normal", action="store_true")
    p.add_argument("--sasaki-space", dest="sasaki_space", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_ortho)

    p = sub.add_parser("sasaki", help="projection reports")
    p.add_argument("file")
    p.add_argument("--projections", action="store_true")
    p.add_argument("--commute", action="store_true")
    p.add_argument("--center", action="store_true")
    p.add_argument("--full-set", dest="full_set", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_sasaki)

    p = sub.add_parser("theorems", help="run the check registry")
    p.add_argument("file")
    p.add_argument("--filter", nargs="*", metavar="ID")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_theorems)

    p = sub.add_parser("enumerate", help="stream all models of a size and class")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--class", dest="cls", required=True, choices=["iol", "ioml", "iboolean"])
    p.add_argument("--limit", type=int)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("iso", help="isomorphism test")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=_cmd_iso)

    p = sub.add_parser("fixture", help="print an embedded document")
    p.add_argument("name")
    p.set_defaults(func=_cmd_fixture)

    p = sub.add_parser("search", help="counterexample search")
    p.add_argument("--require", default="")
    p.add_argument("--forbid", default="")
    p.add_argument("--max-size", type=int, default=6)
    p.set_defaults(func=_cmd_search)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_RESOURCE_CAP
    except AlgebraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
