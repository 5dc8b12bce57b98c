"""Command line frontend.

Exit codes: 0 = yes/accept, 1 = no/reject, 2 = usage or I/O error,
3 = inconclusive (search budget exhausted).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import cube as cube_mod
from . import ecc2 as ecc2_mod
from . import families
from . import graphs
from . import matching as matching_mod
from . import oracle as oracle_mod

EXIT_YES = 0
EXIT_NO = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3

BUDGET_ENV = "CUPSTACK_ORACLE_BUDGET"


def _default_budget() -> int:
    try:
        return int(os.environ.get(BUDGET_ENV, oracle_mod.DEFAULT_BUDGET))
    except ValueError:
        return oracle_mod.DEFAULT_BUDGET


def _emit(data: dict, pretty: bool) -> None:
    if pretty:
        json.dump(data, sys.stdout, indent=2, sort_keys=True)
    else:
        json.dump(data, sys.stdout, sort_keys=True)
    sys.stdout.write("\n")


def _load_graph(path: str) -> graphs.Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return graphs.parse_graph(fh.read())


def _load_plan(path: str) -> graphs.Plan:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    return graphs.Plan.from_json_dict(data)


def _graph_to_dot(g: graphs.Graph) -> str:
    lines = ["graph G {"]
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _cmd_gen(args) -> int:
    spec = families.FamilySpec(args.family, tuple(args.params))
    g = families.generate(spec)
    text = graphs.format_graph(g)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        if g.labels is not None:
            side = args.output + ".labels.json"
            with open(side, "w", encoding="utf-8") as fh:
                json.dump([list(l) if isinstance(l, tuple) else l
                           for l in g.labels], fh)
    else:
        sys.stdout.write(text)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(_graph_to_dot(g))
    if args.output:
        _emit({"family": args.family, "params": list(args.params),
               "n": g.n, "edges": len(g.edges())}, args.pretty)
    return EXIT_YES


def _choose_method(g: graphs.Graph, r: int, method: str) -> str:
    if method != "auto":
        return method
    if set(g.adj[r]) | {r} == set(range(g.n)):
        return "dominating"
    if graphs.eccentricity(g, r) == 2:
        return "ecc2"
    return "oracle"


def _cmd_decide(args) -> int:
    g = _load_graph(args.graph)
    r = args.target
    if not 0 <= r < g.n:
        raise ValueError(f"target {r} out of range")
    method = _choose_method(g, r, args.method)
    out = {"target": r, "method": method}
    if method == "dominating":
        out["stackable"] = True
    elif method == "ecc2":
        w = ecc2_mod.ecc2_decide(g, r)
        out["stackable"] = w.decision
    else:
        dec = oracle_mod.oracle_decide(
            g, graphs.Configuration.all_ones(g.n), r, args.budget)
        if dec is None:
            out["stackable"] = None
            out["inconclusive"] = "budget exhausted"
            _emit(out, args.pretty)
            return EXIT_INCONCLUSIVE
        out["stackable"] = dec
    _emit(out, args.pretty)
    return EXIT_YES if out["stackable"] else EXIT_NO


def _plan_for(g: graphs.Graph, r: int, method: str, budget: int):
    if method == "dominating":
        return families.plan_dominating(g, r)
    if method == "ecc2":
        return ecc2_mod.ecc2_plan(g, r)
    res = oracle_mod.oracle_search(
        g, graphs.Configuration.all_ones(g.n), r, budget)
    if res.inconclusive:
        raise oracle_mod.BudgetExhausted("budget exhausted")
    return res.plan


def _cmd_plan(args) -> int:
    if args.family:
        plan = _family_plan(args)
        g = None
    else:
        if not args.graph:
            raise ValueError("plan needs either -g or --family")
        g = _load_graph(args.graph)
        r = args.target
        if r is None or not 0 <= r < g.n:
            raise ValueError("plan needs a valid -r target")
        method = _choose_method(g, r, args.method)
        try:
            plan = _plan_for(g, r, method, args.budget)
        except oracle_mod.BudgetExhausted:
            _emit({"target": r, "plan": None,
                   "inconclusive": "budget exhausted"}, args.pretty)
            return EXIT_INCONCLUSIVE
    if plan is None:
        _emit({"target": args.target, "plan": None, "stackable": False},
              args.pretty)
        return EXIT_NO
    data = plan.to_json_dict()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            json.dump(data, fh)
        _emit({"target": plan.target, "moves": len(plan.moves),
               "output": args.output}, args.pretty)
    else:
        _emit(data, args.pretty)
    return EXIT_YES


def _family_plan(args) -> graphs.Plan:
    fam = args.family
    p = list(args.params)
    r = args.target
    if fam == "path":
        return families.plan_path(p[0], r if r is not None else 0)
    if fam == "cycle":
        return families.plan_cycle(p[0], r if r is not None else 0)
    if fam == "spider":
        return families.plan_spider(p)
    if fam == "grid":
        m, k = p[0], p[1]
        r = r if r is not None else 0
        return families.plan_grid(m, k, (r % m, r // m))
    if fam == "cube":
        return cube_mod.plan_cube(p[0]).plan
    raise ValueError(f"no direct planner for family {fam!r}")


def _cmd_verify(args) -> int:
    plan = _load_plan(args.plan)
    if args.cube is not None:
        board = graphs.CubeBoard(args.cube)
    else:
        if not args.graph:
            raise ValueError("verify needs -g or --cube")
        board = _load_graph(args.graph)
    res = graphs.verify_plan(board, plan)
    out = {"accepted": bool(res)}
    if not res:
        out["step"] = res.step
        out["reason"] = res.reason
    _emit(out, args.pretty)
    return EXIT_YES if res else EXIT_NO


def _cmd_oracle(args) -> int:
    g = _load_graph(args.graph)
    r = args.target
    if not 0 <= r < g.n:
        raise ValueError(f"target {r} out of range")
    initial = graphs.Configuration.all_ones(g.n)
    if args.config:
        counts = tuple(int(c) for c in args.config.split(","))
        if len(counts) != g.n:
            raise ValueError("configuration length mismatch")
        initial = graphs.Configuration(counts)
    res = oracle_mod.oracle_search(g, initial, r, args.budget)
    out = {"target": r, "states": res.states}
    if res.inconclusive:
        out["stackable"] = None
        out["inconclusive"] = "budget exhausted"
        _emit(out, args.pretty)
        return EXIT_INCONCLUSIVE
    out["stackable"] = res.decision
    if res.decision and args.plan:
        out["moves"] = [[m.src, m.dst] for m in res.plan.moves]
    _emit(out, args.pretty)
    return EXIT_YES if res.decision else EXIT_NO


def _cmd_ge(args) -> int:
    g = _load_graph(args.graph)
    part = matching_mod.gallai_edmonds(matching_mod.BareGraph(g.n, g.edges()))
    _emit({"I": [list(c) for c in part.I_components],
           "A": list(part.A), "Z": list(part.Z)}, args.pretty)
    return EXIT_YES


def _mask_to_sorted(mask: int) -> list[int]:
    return [i + 1 for i in range(mask.bit_length()) if mask >> i & 1]


def _cmd_scd(args) -> int:
    chains = cube_mod.scd(args.n)
    _emit({"n": args.n,
           "chains": [[_mask_to_sorted(m) for m in ch] for ch in chains]},
          args.pretty)
    return EXIT_YES


def _cmd_gray(args) -> int:
    seq = cube_mod.revolving_door(args.m, args.k)
    if len(seq) < 3:
        raise ValueError("parameters too small for a genuine cycle")
    _emit({"m": args.m, "k": args.k,
           "cycle": [sorted(c) for c in seq]}, args.pretty)
    return EXIT_YES


def _cmd_cube(args) -> int:
    if args.d >= 19 and not args.extended:
        raise ValueError("d >= 19 plans are gated behind --extended")
    res = cube_mod.plan_cube(args.d)
    out = {"d": args.d, "moves": len(res.plan.moves),
           "complete": res.complete, "phases": res.phase_moves,
           "unassigned_labels": [_mask_to_sorted(m) for m in res.unassigned]}
    if args.verify:
        ver = graphs.verify_plan(graphs.CubeBoard(args.d), res.plan)
        out["verified"] = bool(ver)
        if not ver:
            out["reason"] = ver.reason
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            json.dump(res.plan.to_json_dict(), fh)
        out["output"] = args.output
    _emit(out, args.pretty)
    ok = res.complete and (out.get("verified", True))
    return EXIT_YES if ok else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cupstack",
                                 description="cup stacking game toolkit")
    sub = ap.add_subparsers(dest="cmd", required=True)

    def common(p, graph=True):
        p.add_argument("--pretty", action="store_true",
                       help="indent JSON output")
        if graph:
            p.add_argument("-g", "--graph", help="graph file")

    p = sub.add_parser("gen", help="generate a family graph")
    p.add_argument("family")
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("-o", "--output", help="graph file to write")
    p.add_argument("--dot", help="also write a DOT rendering")
    common(p, graph=False)

    p = sub.add_parser("decide", help="decide stackability of a target")
    common(p)
    p.add_argument("-r", "--target", type=int, required=True)
    p.add_argument("--method", choices=["auto", "oracle", "ecc2"],
                   default="auto")
    p.add_argument("--budget", type=int, default=_default_budget())

    p = sub.add_parser("plan", help="produce a stacking plan")
    common(p)
    p.add_argument("-r", "--target", type=int)
    p.add_argument("--method", choices=["auto", "oracle", "ecc2"],
                   default="auto")
    p.add_argument("--family", help="use a family planner instead of a file")
    p.add_argument("--params", nargs="*", type=int, default=[])
    p.add_argument("--budget", type=int, default=_default_budget())
    p.add_argument("-o", "--output", help="plan JSON file to write")

    p = sub.add_parser("verify", help="verify a plan file")
    common(p)
    p.add_argument("-p", "--plan", required=True)
    p.add_argument("--cube", type=int,
                   help="verify against a hypercube of this dimension")

    p = sub.add_parser("oracle", help="exhaustive search decision")
    common(p)
    p.add_argument("-r", "--target", type=int, required=True)
    p.add_argument("--budget", type=int, default=_default_budget())
    p.add_argument("--config", help="comma-separated initial cup counts")
    p.add_argument("--plan", action="store_true", help="include the moves")

    p = sub.add_parser("ge", help="Gallai-Edmonds partition")
    common(p)

    p = sub.add_parser("scd", help="symmetric chain decomposition dump")
    p.add_argument("-n", type=int, required=True)
    common(p, graph=False)

    p = sub.add_parser("gray", help="revolving-door subset cycle dump")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    common(p, graph=False)

    p = sub.add_parser("cube", help="hypercube stacking plan")
    p.add_argument("-d", type=int, required=True)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--extended", action="store_true")
    p.add_argument("-o", "--output", help="plan JSON file to write")
    common(p, graph=False)

    return ap


_HANDLERS = {
    "gen": _cmd_gen, "decide": _cmd_decide, "plan": _cmd_plan,
    "verify": _cmd_verify, "oracle": _cmd_oracle, "ge": _cmd_ge,
    "scd": _cmd_scd, "gray": _cmd_gray, "cube": _cmd_cube,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_YES
    try:
        return _HANDLERS[args.cmd](args)
    except (ValueError, OSError, json.JSONDecodeError, KeyError,
            IndexError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
