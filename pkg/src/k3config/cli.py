"""Command-line driver: verification suites, tables, graphs, lattice data."""

from __future__ import annotations

import argparse
import json
import sys

from . import abelian, expected, gkm, models
from .catalog import FIRST, SECOND, TABLE_ORDER, pretty
from .quatorder import format_quat, solve_generators
from .suites import EXIT_CODES, SCHEMA_VERSION, SUITES, run_suite


def _dump(obj) -> str:
    return json.dumps({"schema_version": SCHEMA_VERSION, **obj}, indent=2, ensure_ascii=False)


def _markdown(header: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(str(x)) for x in col) for col in zip(header, *rows)]
    fmt = lambda r: "| " + " | ".join(str(x).ljust(w) for x, w in zip(r, widths)) + " |"  # noqa: E731
    out = [fmt(header), "|" + "|".join("-" * (w + 2) for w in widths) + "|"]
    out += [fmt(r) for r in rows]
    return "\n".join(out) + "\n"


# --- commands ------------------------------------------------------------------


def cmd_verify(args) -> int:
    reports = []
    code = 0
    for name in args.suite or list(SUITES):
        rep = run_suite(name)
        reports.append(rep)
        if not args.json:
            print(rep.render() if args.verbose or not rep.passed else f"[PASS] {name}", flush=True)
        if not rep.passed and code == 0:
            code = EXIT_CODES[name]
    if args.json:
        print(_dump({"passed": code == 0, "suites": [r.to_dict() for r in reports]}))
    else:
        total = sum(len(r.checks) for r in reports)
        failed = sum(len(r.failures()) for r in reports)
        print(f"{total - failed}/{total} checks passed")
    return code


def _intersection(fmt: str) -> str:
    from .nslattice import intersection_table

    table = intersection_table()
    if fmt == "json":
        return _dump({"order": list(TABLE_ORDER), "entries": table})
    names = [pretty(n) for n in TABLE_ORDER]
    return _markdown([""] + names, [[names[a]] + table[a] for a in range(8)])


def _f2(fmt: str) -> str:
    t = abelian.incidence_table_f2()
    if fmt == "json":
        return _dump({"cells": [
            {"point": f"P{i}xP{j}", "first": list(v[FIRST]), "second": list(v[SECOND])}
            for (i, j), v in sorted(t.items(), key=lambda kv: (kv[0][1], kv[0][0]))
        ]})
    header = [""] + [f"P{i}" for i in range(3)]
    rows = []
    for j in range(3):
        row = [f"P{j}"]
        for i in range(3):
            v = t[(i, j)]
            row.append(", ".join(map(pretty, v[FIRST])) + " ; " + ", ".join(map(pretty, v[SECOND])))
        rows.append(row)
    return _markdown(header, rows)


def _f4(fmt: str) -> str:
    t = abelian.incidence_table_f4()
    if fmt == "json":
        return _dump({"cells": [
            {"point": f"{col}x{row}", "curves": list(names)} for (col, row), names in t.items()
        ]})
    cols = list(expected.F4_COLUMNS)
    rows = []
    for row in cols:
        rows.append([row] + [", ".join(map(pretty, t.get((col, row), ()))) for col in cols])
    return _markdown([""] + cols, rows)


def cmd_tables(args) -> int:
    render = {"intersection": _intersection, "f2": _f2, "f4": _f4}
    which = [args.which] if args.which != "all" else list(render)
    for w in which:
        sys.stdout.write(render[w](args.format))
    return 0


def _graph(source: str):
    if source == "derived":
        return gkm.derive_incidence()
    if source == "rules":
        return gkm.closed_form_incidence()
    if source == "pg24":
        return models.pg24()
    if source == "p2p2":
        return models.p2p2_lines()
    raise ValueError(source)


def _bipartite(source: str) -> models.BipartiteGraph:
    g = _graph(source)
    return g if isinstance(g, models.BipartiteGraph) else models.from_config(g)


def cmd_config(args) -> int:
    g = _graph(args.source)
    out = {"json": g.to_json, "dot": g.to_dot, "csv": g.to_csv}[args.format]()
    sys.stdout.write(out if out.endswith("\n") else out + "\n")
    return 0


def cmd_fibration(args) -> int:
    rep = gkm.fibration_analysis(gkm.derive_incidence())
    st = gkm.shioda_tate_report()
    if args.json:
        print(_dump({"fibration": rep.to_dict(), "shioda_tate": st}))
    else:
        for h in rep.partitions[0] if rep.partitions else []:
            print("I_6: " + " + ".join(map(gkm.display_name, h)))
        for name, ok in {**rep.checks, **st["checks"]}.items():
            print(f"{'ok  ' if ok else 'FAIL'} {name}")
    return 0 if rep.ok and all(st["checks"].values()) else EXIT_CODES["gkm"]


def cmd_lattice(args) -> int:
    from .nslattice import intersection_table

    g = gkm.gram(_graph(args.source))
    data = {"order": list(TABLE_ORDER), "entries": intersection_table(), **g.to_dict(),
            "index_against_minus_4": g.index_against(-4)}
    if args.json:
        print(_dump(data))
    else:
        sys.stdout.write(_intersection("markdown"))
        for key in ("rank", "radical_rank", "signature", "elementary_divisors", "discriminant", "index_against_minus_4"):
            print(f"{key}: {data[key]}")
    return 0


def cmd_iso(args) -> int:
    g1, g2 = _bipartite(args.a), _bipartite(args.b)
    iso = models.graph_iso(g1, g2)
    if iso is None or not models.check_isomorphism(g1, g2, iso):
        print(_dump({"isomorphic": False}))
        return EXIT_CODES["models"]
    print(_dump({"isomorphic": True, "swaps_families": iso.swaps_families, "mapping": iso.mapping}))
    return 0


def cmd_generators(args) -> int:
    sols = solve_generators()
    shown = sols if args.all else sols[:1]
    if args.json:
        print(_dump({"count": len(sols), "solutions": [
            {k: format_quat(getattr(s, k)) for k in ("sigma", "theta", "frob", "ver", "pi")} for s in shown
        ]}))
    else:
        print(f"{len(sols)} solutions; designated first")
        for s in shown:
            print(f"sigma = {format_quat(s.sigma)}, theta = {format_quat(s.theta)}, "
                  f"F = {format_quat(s.frob)}, V = {format_quat(s.ver)}, pi = {format_quat(s.pi)}")
    return 0


# --- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="k3config", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the verification suites in dependency order")
    v.add_argument("--suite", action="append", choices=list(SUITES), help="run only this suite (repeatable)")
    v.add_argument("--json", action="store_true")
    v.add_argument("-v", "--verbose", action="store_true", help="list passing checks too")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("tables", help="intersection and torsion incidence tables")
    t.add_argument("--which", choices=["intersection", "f2", "f4", "all"], default="all")
    t.add_argument("--format", choices=["markdown", "json"], default="markdown")
    t.set_defaults(func=cmd_tables)

    c = sub.add_parser("config", help="emit a 42-curve incidence graph")
    c.add_argument("--source", choices=["derived", "rules", "pg24", "p2p2"], default="derived")
    c.add_argument("--format", choices=["json", "dot", "csv"], default="json")
    c.set_defaults(func=cmd_config)

    f = sub.add_parser("fibration", help="the elliptic fibration with four I_6 fibers")
    f.add_argument("--json", action="store_true")
    f.set_defaults(func=cmd_fibration)

    lat = sub.add_parser("lattice", help="Gram data of the 42 curves")
    lat.add_argument("--source", choices=["derived", "rules"], default="derived")
    lat.add_argument("--json", action="store_true")
    lat.set_defaults(func=cmd_lattice)

    i = sub.add_parser("iso", help="find an isomorphism between two configuration graphs")
    i.add_argument("--a", choices=["derived", "rules", "pg24", "p2p2"], required=True)
    i.add_argument("--b", choices=["derived", "rules", "pg24", "p2p2"], required=True)
    i.set_defaults(func=cmd_iso)

    g = sub.add_parser("generators", help="quaternion models of sigma, theta, F")
    g.add_argument("--all", action="store_true", help="print every solution")
    g.add_argument("--json", action="store_true")
    g.set_defaults(func=cmd_generators)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
