"""Command-line front end.

Subcommands mirror the four solvers plus oracle-backed verification
sweeps.  Reports are JSON by default (stable key order) or plain text
with --plain.  Exit codes: 0 solved/verified, 2 proven infeasible or
inconsistent (or a verify sweep found mismatches), 1 input or usage
error.  Witnesses are only ever printed on exit 0.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from itertools import permutations

from . import oracle
from .critical_pairs import build_graph, count_critical_pairs, feasible, find_bridges
from .departments import greedy_departments, min_departments, solve_partition
from .hierarchy import TraversalPair, reconstruct, validate
from .interactions import min_structure, solve_composition
from .model import INCONSISTENT, INFEASIBLE, CommunicationGraph, Hierarchy, traverse_bf, traverse_df


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; the exit-code contract
    # reserves 2 for proven-infeasible, so remap usage errors to 1
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(self._fail(message))

    def _fail(self, message: str) -> int:
        print(f"error: {message}", file=sys.stderr)
        return 1


def _build_parser() -> _Parser:
    parser = _Parser(prog="orginfer", description="Infer company structures from scalar observations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("departments", parents=[_output_flags()], help="minimum departments for a pair count")
    p.add_argument("--employees", type=int, required=True, metavar="N")
    p.add_argument("--pairs", type=int, required=True, metavar="K")
    p.add_argument("--departments", type=int, default=None, metavar="D",
                   help="pad the witness to exactly D departments")

    p = sub.add_parser("interactions", parents=[_output_flags()], help="smallest staffing for an interaction total")
    p.add_argument("--total", type=int, required=True, metavar="TI")

    p = sub.add_parser("critical-pairs", parents=[_output_flags()], help="communication graph with k critical pairs")
    p.add_argument("--employees", type=int, required=True, metavar="N")
    p.add_argument("--pairs", type=int, required=True, metavar="K")
    p.add_argument("--dot", metavar="PATH", help="write the witness graph in DOT format")

    p = sub.add_parser("hierarchy", parents=[_output_flags()], help="rebuild a hierarchy from DF and BF orderings")
    p.add_argument("--df", required=True, metavar="FILE", help="depth-first ordering, whitespace/comma separated")
    p.add_argument("--bf", required=True, metavar="FILE", help="breadth-first ordering, whitespace/comma separated")
    p.add_argument("--dot", metavar="PATH", help="write the reconstructed tree in DOT format")

    p = sub.add_parser("verify", parents=[_output_flags()], help="sweep a solver against its brute-force oracle")
    p.add_argument("problem", choices=["departments", "interactions", "critical-pairs", "hierarchy"])
    p.add_argument("--max-n", type=int, default=None, metavar="N", help="instance size bound for the sweep")
    p.add_argument("--max-ti", type=int, default=None, metavar="TI", help="interaction total bound for the sweep")
    return parser


def _output_flags() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    fmt = shared.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="plain", action="store_false", default=False,
                     help="JSON report (default)")
    fmt.add_argument("--plain", dest="plain", action="store_true", help="plain-text report")
    return shared


def _emit(report: dict, plain: bool) -> None:
    if not plain:
        print(json.dumps(report))
        return
    for key, value in report.items():
        if isinstance(value, list):
            if value and isinstance(value[0], dict):
                value = "; ".join(" ".join(f"{k}={v}" for k, v in item.items()) for item in value)
            elif value and isinstance(value[0], list):
                value = " ".join("-".join(str(x) for x in item) for item in value)
            else:
                value = " ".join(str(x) for x in value)
        print(f"{key}: {value}")


def _read_ordering(path: str) -> list[int]:
    with open(path, "r", encoding="ascii") as handle:
        text = handle.read()
    tokens = [t for t in re.split(r"[\s,]+", text) if t]
    return [int(t) for t in tokens]


def _write_graph_dot(path: str, graph: CommunicationGraph) -> None:
    bridges = find_bridges(graph)
    lines = ["graph communication {", "  node [shape=circle];"]
    for v in range(1, graph.n + 1):
        lines.append(f"  {v};")
    for u, v in graph.edge_list():
        style = " [style=bold color=red]" if (u, v) in bridges else ""
        lines.append(f"  {u} -- {v}{style};")
    lines.append("}")
    with open(path, "w", encoding="ascii") as handle:
        handle.write("\n".join(lines) + "\n")


def _write_tree_dot(path: str, h: Hierarchy) -> None:
    lines = ["digraph hierarchy {", "  node [shape=circle];"]
    for v in range(1, h.n + 1):
        lines.append(f"  {v};")
    for v in range(1, h.n + 1):
        p = h.parent[v]
        if p:
            lines.append(f"  {p} -> {v};")
    lines.append("}")
    with open(path, "w", encoding="ascii") as handle:
        handle.write("\n".join(lines) + "\n")


def _cmd_departments(args) -> int:
    n, k = args.employees, args.pairs
    minimum = min_departments(n, k)
    if minimum is INFEASIBLE:
        _emit({"feasible": False, "min_departments": None, "sizes": None,
               "greedy_departments": None}, args.plain)
        return 2
    d = minimum if args.departments is None else args.departments
    witness = solve_partition(n, k, d)
    if witness is INFEASIBLE:  # requested department count below the minimum
        _emit({"feasible": False, "min_departments": None, "sizes": None,
               "greedy_departments": None}, args.plain)
        return 2
    greedy = greedy_departments(n, k)
    _emit({
        "feasible": True,
        "min_departments": minimum,
        "sizes": list(witness.sizes),
        "greedy_departments": None if greedy is INFEASIBLE else greedy,
    }, args.plain)
    return 0


def _cmd_interactions(args) -> int:
    total_employees, bosses = min_structure(args.total)
    composition = solve_composition(args.total)
    _emit({
        "total_employees": total_employees,
        "bosses": bosses,
        "departments": [{"bosses": b, "employees": e} for b, e in composition.departments],
    }, args.plain)
    return 0


def _cmd_critical_pairs(args) -> int:
    n, k = args.employees, args.pairs
    graph = build_graph(n, k)
    if graph is INFEASIBLE:
        _emit({"feasible": False, "edges": None, "critical_pairs_check": None}, args.plain)
        return 2
    if args.dot:
        _write_graph_dot(args.dot, graph)
    _emit({
        "feasible": True,
        "edges": [list(e) for e in graph.edge_list()],
        "critical_pairs_check": count_critical_pairs(graph),
    }, args.plain)
    return 0


def _cmd_hierarchy(args) -> int:
    pair = TraversalPair.make(_read_ordering(args.df), _read_ordering(args.bf))
    tree = reconstruct(pair)
    if tree is INCONSISTENT:
        _emit({"consistent": False, "parent": None}, args.plain)
        return 2
    if args.dot:
        _write_tree_dot(args.dot, tree)
    _emit({"consistent": True, "parent": [tree.parent[v] for v in range(1, tree.n + 1)]}, args.plain)
    return 0


def _verify_departments(max_n: int) -> list[str]:
    mismatches = []
    for n in range(max_n + 1):
        for k in range(n * (n - 1) // 2 + 1):
            got = min_departments(n, k)
            want = oracle.oracle_min_departments(n, k)
            if got != want and not (got is INFEASIBLE and want is INFEASIBLE):
                mismatches.append(f"departments n={n} k={k}: solver {got!r} oracle {want!r}")
    return mismatches


def _verify_interactions(max_ti: int) -> list[str]:
    mismatches = []
    for ti in range(max_ti + 1):
        got = min_structure(ti)
        want = oracle.oracle_min_structure(ti)
        if got != want:
            mismatches.append(f"interactions ti={ti}: solver {got} oracle {want}")
        witness = solve_composition(ti)
        if witness.interactions != ti or (witness.total_employees, witness.bosses) != want:
            mismatches.append(f"interactions ti={ti}: witness {witness.departments} does not re-evaluate")
    return mismatches


def _verify_critical_pairs(max_n: int) -> list[str]:
    mismatches = []
    for n in range(max_n + 1):
        achievable = oracle.oracle_feasible_set(n)
        for k in range(n * (n - 1) // 2 + 1):
            claimed = feasible(n, k)
            if claimed != (k in achievable):
                mismatches.append(f"critical-pairs n={n} k={k}: solver {claimed} oracle {k in achievable}")
            elif claimed:
                witness = build_graph(n, k)
                if count_critical_pairs(witness) != k:
                    mismatches.append(f"critical-pairs n={n} k={k}: witness count is off")
    return mismatches


def _verify_hierarchy(max_n: int) -> list[str]:
    mismatches = []
    for n in range(1, max_n + 1):
        realizable = set()
        for h in oracle.all_rooted_hierarchies(n):
            realizable.add((traverse_df(h).seq, traverse_bf(h).seq))
        for df in permutations(range(1, n + 1)):
            for bf in permutations(range(1, n + 1)):
                if df[0] != bf[0]:
                    continue
                pair = TraversalPair.make(df, bf)
                tree = reconstruct(pair)
                if tree is INCONSISTENT:
                    if (df, bf) in realizable:
                        mismatches.append(f"hierarchy df={df} bf={bf}: solver INCONSISTENT, oracle found a tree")
                elif not validate(pair, tree):
                    mismatches.append(f"hierarchy df={df} bf={bf}: returned tree fails round-trip")
                elif (df, bf) not in realizable:
                    mismatches.append(f"hierarchy df={df} bf={bf}: solver built a tree, oracle says none exists")
    return mismatches


_VERIFY_BUDGETS = {
    "departments": ("--max-n", 10, oracle.PARTITION_LIMIT),
    "interactions": ("--max-ti", 30, oracle.INTERACTION_LIMIT),
    "critical-pairs": ("--max-n", 5, oracle.GRAPH_LIMIT),
    "hierarchy": ("--max-n", 5, oracle.TREE_LIMIT),
}


def _cmd_verify(args) -> int:
    flag, default, cap = _VERIFY_BUDGETS[args.problem]
    bound = args.max_ti if flag == "--max-ti" else args.max_n
    if bound is None:
        bound = default
    if bound < 0 or bound > cap:
        print(f"error: {flag} must be in 0..{cap} for {args.problem}", file=sys.stderr)
        return 1
    if args.problem == "departments":
        mismatches = _verify_departments(bound)
    elif args.problem == "interactions":
        mismatches = _verify_interactions(bound)
    elif args.problem == "critical-pairs":
        mismatches = _verify_critical_pairs(bound)
    else:
        mismatches = _verify_hierarchy(bound)
    report = {"problem": args.problem, "bound": bound, "mismatches": mismatches}
    if args.plain:
        for line in mismatches:
            print(line)
        print(f"verify {args.problem} up to {bound}: {len(mismatches)} mismatches")
    else:
        print(json.dumps(report))
    return 0 if not mismatches else 2


_COMMANDS = {
    "departments": _cmd_departments,
    "interactions": _cmd_interactions,
    "critical-pairs": _cmd_critical_pairs,
    "hierarchy": _cmd_hierarchy,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
