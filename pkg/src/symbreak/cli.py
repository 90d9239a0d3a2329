"""Command-line front end.

    symbreak compute  (--graph6 STR | --edges FILE | --family SPEC) [--theta] [--dnum] ...
    symbreak generate --family SPEC [--edges]
    symbreak verify   --suite small|johnson|union|fixtures|all

Each invocation prints one JSON object.  Exit status: 0 on success, 1 on a
computation error or a verification violation, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys

from . import families as fam
from .distinguishing import (DEFAULT_COLORING_BUDGET, DEFAULT_GROUP_CAP, Phi_k,
                             automorphism_group, distinguishing_number, group_motion,
                             group_theta, phi_k)
from .errors import SymbreakError
from .graph import Graph, parse_edge_list, parse_graph6, write_edge_list, write_graph6
from .verify import SUITES

FAMILY_GRAMMAR = ('"path N" | "cycle N" | "complete N" | "empty N" | "bipartite M N" | '
                  '"circulant N s1,s2,.." | "johnson N K I" | "kneser N K" | "petersen" | '
                  '"g6fixture NAME"')


class UsageError(Exception):
    pass


def parse_family(spec: str) -> Graph:
    words = spec.split()
    if not words:
        raise UsageError("empty family spec")
    kind, args = words[0].lower(), words[1:]
    try:
        if kind == "petersen" and not args:
            return fam.petersen()
        if kind == "g6fixture" and len(args) == 1:
            if args[0] not in fam.FIXTURES:
                raise UsageError(f"unknown fixture {args[0]!r}; have {sorted(fam.FIXTURES)}")
            return fam.FIXTURES[args[0]]()
        if kind == "circulant" and len(args) == 2:
            return fam.circulant(int(args[0]), [int(s) for s in args[1].split(",") if s])
        nums = [int(a) for a in args]
        if kind in ("path", "cycle", "complete", "empty") and len(nums) == 1:
            return fam.standard_family(kind, *nums)
        if kind == "bipartite" and len(nums) == 2:
            return fam.complete_bipartite(*nums)
        if kind == "johnson" and len(nums) == 3:
            return fam.generalized_johnson(fam.JohnsonParams(*nums))
        if kind == "kneser" and len(nums) == 2:
            return fam.kneser(*nums)
    except ValueError as exc:
        raise UsageError(f"bad family spec {spec!r}: {exc}") from None
    raise UsageError(f"bad family spec {spec!r}; expected {FAMILY_GRAMMAR}")


def _load_graph(args) -> tuple[Graph, str]:
    if args.graph6 is not None:
        return parse_graph6(args.graph6), "graph6"
    if args.edges is not None:
        with open(args.edges) as fh:
            return parse_edge_list(fh.read()), "edges"
    return parse_family(args.family), "family"


def cmd_compute(args) -> dict:
    try:
        g, source = _load_graph(args)
    except SymbreakError as exc:
        raise UsageError(str(exc)) from None
    g6 = write_graph6(g)
    out = {"command": "compute", "source": source, "graph6": g6, "n": g.n,
           "digest": hashlib.sha256(g6.encode()).hexdigest()[:16]}
    wanted = [args.theta, args.dnum, args.motion, args.aut_order,
              args.phi is not None, args.Phi is not None]
    if not any(wanted):
        args.theta = args.aut_order = True
    group = None
    if args.theta or args.motion or args.aut_order:
        group = automorphism_group(g, args.group_cap)
    if args.aut_order:
        out["aut_order"] = len(group.elements)
    if args.theta:
        res = group_theta(group)
        out["theta"] = res.theta
        out["theta_witness"] = res.witness.cycle_notation() if res.witness else None
        out["theta_witness_order"] = res.witness_order
    if args.motion:
        if len(group.elements) == 1:
            out["motion"] = None
            out["motion_witness"] = None
        else:
            m = group_motion(group)
            out["motion"] = m.motion
            out["motion_witness"] = m.witness.cycle_notation()
    if args.dnum:
        out["dnum"] = distinguishing_number(g, args.coloring_budget)
    if args.phi is not None:
        out["phi"] = {"k": args.phi, "value": phi_k(g, args.phi, "brute",
                                                    args.coloring_budget, args.group_cap)}
    if args.Phi is not None:
        out["Phi"] = {"k": args.Phi, "value": Phi_k(g, args.Phi, "brute",
                                                    args.coloring_budget, args.group_cap)}
    return out


def cmd_generate(args) -> dict | str:
    g = parse_family(args.family)
    if args.edges:
        return write_edge_list(g)
    return write_graph6(g) + "\n"


def cmd_verify(args) -> tuple[dict, bool]:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    reports = []
    for name in names:
        if name == "small":
            rep = SUITES[name](nmax=args.nmax, budget=args.coloring_budget)
        elif name == "johnson":
            rep = SUITES[name](max_vertices=args.max_vertices, cap=args.group_cap)
        elif name == "union":
            rep = SUITES[name](trials=args.trials, seed=args.seed)
        else:
            rep = SUITES[name]()
        reports.append(rep)
    ok = all(r.ok for r in reports)
    if len(reports) == 1:
        return reports[0].to_json(), ok
    return {"reports": [r.to_json() for r in reports],
            "violations": sum(r.violations for r in reports)}, ok


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="symbreak", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def budgets(p):
        p.add_argument("--group-cap", type=int, default=DEFAULT_GROUP_CAP)
        p.add_argument("--coloring-budget", type=int, default=DEFAULT_COLORING_BUDGET)
        p.add_argument("--pretty", action="store_true", help="human-readable table")

    c = sub.add_parser("compute", help="compute invariants of one graph")
    src = c.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph6")
    src.add_argument("--edges", metavar="FILE")
    src.add_argument("--family", metavar="SPEC", help=FAMILY_GRAMMAR)
    c.add_argument("--theta", action="store_true")
    c.add_argument("--dnum", action="store_true")
    c.add_argument("--motion", action="store_true")
    c.add_argument("--aut-order", action="store_true")
    c.add_argument("--phi", type=int, metavar="K")
    c.add_argument("--Phi", type=int, metavar="K")
    budgets(c)

    gen = sub.add_parser("generate", help="print a family member as graph6 or an edge list")
    gen.add_argument("--family", metavar="SPEC", required=True, help=FAMILY_GRAMMAR)
    gen.add_argument("--edges", action="store_true")

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", required=True, choices=[*SUITES, "all"])
    v.add_argument("--nmax", type=int, default=6)
    v.add_argument("--seed", type=int, default=1)
    v.add_argument("--trials", type=int, default=100)
    v.add_argument("--max-vertices", type=int, default=36)
    budgets(v)
    return parser


def _pretty(obj: dict, indent: str = "") -> str:
    lines = []
    for key, val in obj.items():
        if isinstance(val, dict):
            lines.append(f"{indent}{key}:")
            lines.append(_pretty(val, indent + "  "))
        elif isinstance(val, list) and val and isinstance(val[0], dict):
            lines.append(f"{indent}{key}:")
            for item in val:
                lines.append(_pretty(item, indent + "  - "))
        else:
            lines.append(f"{indent}{key:<20} {val}")
    return "\n".join(lines)


def _emit(obj: dict, pretty: bool):
    print(_pretty(obj) if pretty else json.dumps(obj))


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    pretty = getattr(args, "pretty", False)
    try:
        if args.command == "compute":
            _emit(cmd_compute(args), pretty)
            return 0
        if args.command == "generate":
            sys.stdout.write(cmd_generate(args))
            return 0
        report, ok = cmd_verify(args)
        _emit(report, pretty)
        return 0 if ok else 1
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"symbreak: error: {exc}", file=sys.stderr)
        return 2
    except SymbreakError as exc:
        err = {"error": type(exc).__name__, "message": str(exc)}
        for attr in ("cap", "budget"):
            if hasattr(exc, attr):
                err[attr] = getattr(exc, attr)
        print(json.dumps(err))
        return 1


if __name__ == "__main__":
    sys.exit(main())
