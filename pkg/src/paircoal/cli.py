"""Command-line surface: compute, verify, pcg, gen, suite, survey, conjecture.

Exit codes: 0 on success, 1 when a suite or verification fails, 2 on usage
errors (argparse's own convention).
"""

from __future__ import annotations

import argparse
import json
import sys

from .coalition import is_pc_partition, pc_number
from .conjecture import explore_conjecture
from .enumeration import enumerate_graphs, enumerate_trees, enumerate_unicyclic
from .families import FamilyError, parse_family, generate
from .gformats import (
    FormatError,
    canonical_graph6,
    edge_list_decode,
    edge_list_encode,
    graph6_decode,
    graph6_encode,
    partition_from_json,
    partition_to_json,
)
from .graphs import Graph, GraphError
from .suites import SUITES, run_suite

SURVEY_CLASSES = ("trees", "unicyclic", "connected", "all")


class CliError(Exception):
    pass


def _read_arg(text: str) -> str:
    if text.startswith("@"):
        with open(text[1:], "r", encoding="utf-8") as fh:
            return fh.read()
    return text


def _load_graph(text: str, fmt: str) -> Graph:
    raw = _read_arg(text).strip()
    if fmt == "family":
        return generate(parse_family(raw))
    if fmt == "graph6":
        return graph6_decode(raw)
    if fmt == "edge-list":
        return edge_list_decode(raw)
    # auto: family notation first, then graph6, then an edge list
    try:
        return generate(parse_family(raw))
    except FamilyError:
        pass
    errors = []
    try:
        return graph6_decode(raw)
    except (FormatError, GraphError) as exc:
        errors.append(f"graph6: {exc}")
    try:
        return edge_list_decode(raw)
    except (FormatError, GraphError) as exc:
        errors.append(f"edge-list: {exc}")
    raise CliError(
        "could not interpret graph argument as a family, graph6, or edge list: "
        + "; ".join(errors)
    )


def _cmd_compute(args) -> int:
    g = _load_graph(args.graph, args.format)
    res = pc_number(
        g,
        exact_cap=args.exact_cap,
        lemma_pruning=args.lemma,
        assume_binary_ceiling=args.binary_ceiling,
        canonical_witness=args.canonical_witness,
        budget_s=args.budget,
    )
    if args.json:
        payload = {
            "graph6": graph6_encode(g),
            "order": g.n,
            "pc": res.pc,
            "witness": None if res.witness is None else {
                "blocks": res.witness.vertex_lists()
            },
            "pcg_adjacency": None if res.pcg_adjacency is None else [
                [int(x) for x in row] for row in res.pcg_adjacency
            ],
            "stats": {
                "nodes": res.stats.nodes,
                "elapsed_s": round(res.stats.elapsed_s, 4),
                "mode": res.stats.mode,
                "assumptions": list(res.stats.assumptions),
            },
        }
        print(json.dumps(payload))
        return 0
    print(f"graph: {g.label or graph6_encode(g)} (order {g.n})")
    print(f"pc = {res.pc}")
    if res.witness is not None:
        print(f"witness: {partition_to_json(res.witness)}")
        edges = [
            (i, j)
            for i, row in enumerate(res.pcg_adjacency or ())
            for j, adj in enumerate(row)
            if adj and i < j
        ]
        print(f"coalition graph edges: {edges}")
    print(
        f"search: mode={res.stats.mode} nodes={res.stats.nodes} "
        f"elapsed={res.stats.elapsed_s:.3f}s"
    )
    if res.stats.assumptions:
        print("assumptions: " + ", ".join(res.stats.assumptions))
    return 0


def _cmd_verify(args) -> int:
    g = _load_graph(args.graph, args.format)
    p = partition_from_json(_read_arg(args.partition), g.n)
    check = is_pc_partition(g, p)
    if args.json:
        print(json.dumps({
            "valid": check.valid,
            "partners": [list(x) for x in check.partners],
            "failures": list(check.failures),
        }))
    else:
        print("valid pc-partition" if check.valid else "NOT a pc-partition")
        for i, (mine, fail) in enumerate(zip(check.partners, check.failures)):
            status = fail if fail else f"partners {list(mine)}"
            print(f"  block {i} {p.vertex_lists()[i]}: {status}")
    return 0 if check.valid else 1


def _cmd_pcg(args) -> int:
    g = _load_graph(args.graph, args.format)
    p = partition_from_json(_read_arg(args.partition), g.n)
    from .coalition import coalition_graph

    pcg = coalition_graph(g, p)
    print(graph6_encode(pcg))
    return 0


def _cmd_gen(args) -> int:
    g = generate(parse_family(args.family))
    if args.output_format == "edge-list":
        print(edge_list_encode(g))
    else:
        print(graph6_encode(g))
    return 0


def _cmd_suite(args) -> int:
    params: dict = {}
    if args.max_order is not None:
        params["max_order"] = args.max_order
    if args.max_height is not None:
        params["max_height"] = args.max_height
    if args.workers is not None:
        params["workers"] = args.workers
    ids = sorted(SUITES) if args.id == "all" else [args.id]
    worst = 0
    for sid in ids:
        rep = run_suite(sid, params)
        if args.json:
            print(json.dumps(rep.to_dict()))
        else:
            print(rep.summary())
            for f in rep.failures[:20]:
                print(f"    {f.instance}: expected {f.expected}, got {f.got}")
        if not rep.passed:
            worst = 1
    return worst


def _survey_graphs(cls: str, order: int):
    if cls == "trees":
        return enumerate_trees(order)
    if cls == "unicyclic":
        return enumerate_unicyclic(order)
    if cls == "connected":
        return enumerate_graphs(order, connected=True)
    return enumerate_graphs(order)


def _cmd_survey(args) -> int:
    graphs = _survey_graphs(args.cls, args.order)
    from .suites import pc_many

    values = pc_many(list(graphs), args.workers)
    lines = ["graph6,order,class,pc"]
    lines += [
        f"{canonical_graph6(g)},{g.n},{args.cls},{pc}"
        for g, pc in zip(graphs, values)
    ]
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {len(graphs)} rows to {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def _cmd_conjecture(args) -> int:
    rows = explore_conjecture(args.h_max, args.budget)
    if args.json:
        print(json.dumps([r.to_dict() for r in rows]))
    else:
        for r in rows:
            print(r.summary())
            if r.assumptions:
                print("    assumptions: " + ", ".join(r.assumptions))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="paircoal",
        description="Exact paired coalition partition toolkit for small graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_arg(p):
        p.add_argument(
            "graph",
            help="family text (e.g. P(6), E7(1,2)), a graph6 string, an "
            "edge list, or @file",
        )
        p.add_argument(
            "--format",
            choices=("auto", "family", "graph6", "edge-list"),
            default="auto",
        )

    p = sub.add_parser("compute", help="pc-number with witness and stats")
    add_graph_arg(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--exact-cap", type=int, default=14)
    p.add_argument("--lemma", action="store_true",
                   help="support-block constrained search (min degree 1)")
    p.add_argument("--binary-ceiling", action="store_true",
                   help="cap searched order at 4 (perfect binary trees, h >= 3)")
    p.add_argument("--canonical-witness", action="store_true")
    p.add_argument("--budget", type=float, default=None, metavar="SECONDS")
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("verify", help="check a partition (JSON or @file)")
    add_graph_arg(p)
    p.add_argument("partition", help='e.g. {"blocks": [[0],[1,2,3],[4]]}')
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("pcg", help="coalition graph of a pc-partition, as graph6")
    add_graph_arg(p)
    p.add_argument("partition")
    p.set_defaults(func=_cmd_pcg)

    p = sub.add_parser("gen", help="generate a named family member")
    p.add_argument("family", help="e.g. E7(1,1), T(3), K(2,3), SD(2,2)")
    p.add_argument("--output-format", choices=("graph6", "edge-list"),
                   default="graph6")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("suite", help="run a named check suite")
    p.add_argument("id", help="suite id or 'all'; known: " + ", ".join(sorted(SUITES)))
    p.add_argument("--max-order", type=int, default=None)
    p.add_argument("--max-height", type=int, default=None)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_suite)

    p = sub.add_parser("survey", help="pc distribution over a graph class, CSV")
    p.add_argument("--class", dest="cls", choices=SURVEY_CLASSES, required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--out", default=None, help="CSV file (default: stdout)")
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=_cmd_survey)

    p = sub.add_parser("conjecture", help="bounded exploration of binary-tree pc")
    p.add_argument("--h-max", type=int, default=4)
    p.add_argument("--budget", type=float, default=60.0,
                   help="seconds per height")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_conjecture)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CliError, FamilyError, FormatError, GraphError, ValueError,
            OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
