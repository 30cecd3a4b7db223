"""Command-line interface.

Subcommands: ``compute`` (one invariant, one graph), ``bounds`` (the whole
checker battery on one graph), ``construct`` (family generators),
``product`` (build and emit a product), ``verify`` (corpus run).

Exit codes: 0 clean, 1 a solid-set violation was found, 2 usage or I/O
errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import families, harness, products
from .core import Graph
from .corpus import ALL_TREES, EXHAUSTIVE, GRAPH6_FILE, RANDOM, CorpusSpec
from .graphio import emit_edge_list, emit_graph6, parse_edge_list, parse_graph6
from .partition import partition_number
from .solvers import max_limited_packing, min_dominating


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as handle:
        return handle.read()


def _load_graph(path: str, fmt: str) -> Graph:
    text = _read_text(path)
    if fmt == "graph6":
        line = next((l for l in text.splitlines() if l.strip()), "")
        return parse_graph6(line)
    return parse_edge_list(text)


def _write_graph(g: Graph, fmt: str, out: str | None) -> None:
    if fmt == "graph6":
        payload = emit_graph6(g) + b"\n"
        if out:
            with open(out, "wb") as handle:
                handle.write(payload)
        else:
            sys.stdout.buffer.write(payload)
    else:
        payload = emit_edge_list(g)
        if out:
            with open(out, "w", encoding="ascii") as handle:
                handle.write(payload)
        else:
            sys.stdout.write(payload)


_FAMILIES = {
    "path": (families.path, 1),
    "cycle": (families.cycle, 1),
    "star": (families.star, 1),
    "complete": (families.complete, 1),
    "complete-bipartite": (families.complete_bipartite, 2),
    "empty": (families.empty_graph, 1),
    "double-star": (families.double_star, 2),
    "star-split-example": (families.star_split_example, 0),
    "diameter2-gadget": (families.diameter2_gadget, 1),
    "realization-tree": (families.realization_tree, 2),
}


def _parse_corpus(text: str, args) -> CorpusSpec:
    parts = text.split(":")
    kind = parts[0]
    common = {
        "connected_only": args.connected_only,
        "tree_only": args.tree_only,
        "min_degree": args.min_degree,
    }
    if kind == "exhaustive" and len(parts) == 2:
        return CorpusSpec(EXHAUSTIVE, n=int(parts[1]), **common)
    if kind == "trees" and len(parts) == 2:
        return CorpusSpec(ALL_TREES, n=int(parts[1]), **common)
    if kind == "random" and len(parts) == 4:
        return CorpusSpec(
            RANDOM,
            n=int(parts[1]),
            edge_probability=float(parts[2]),
            count=int(parts[3]),
            seed=args.seed,
            **common,
        )
    if kind == "file" and len(parts) >= 2:
        return CorpusSpec(GRAPH6_FILE, path=":".join(parts[1:]), **common)
    raise ValueError(
        f"bad corpus spec {text!r}; use exhaustive:N, trees:N, random:N:P:COUNT, or file:PATH"
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="limpack")
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="one invariant on one graph")
    p_compute.add_argument("invariant", choices=["packing", "domination", "chi"])
    p_compute.add_argument("--k", type=int, default=1)
    p_compute.add_argument("--total", action="store_true")
    p_compute.add_argument("--in", dest="path", default="-")
    p_compute.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
    p_compute.add_argument("--cap-nodes", type=int, default=None)

    p_bounds = sub.add_parser("bounds", help="the full checker battery on one graph")
    p_bounds.add_argument("--k", default="1,2")
    p_bounds.add_argument("--in", dest="path", default="-")
    p_bounds.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
    p_bounds.add_argument("--theorems", default=None)

    p_construct = sub.add_parser("construct", help="emit a named family member")
    p_construct.add_argument("family", choices=sorted(_FAMILIES))
    p_construct.add_argument("params", nargs="*", type=int)
    p_construct.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
    p_construct.add_argument("--out", default=None)

    p_product = sub.add_parser("product", help="build and emit a product graph")
    p_product.add_argument("kind", choices=["cartesian", "direct", "rooted", "corona"])
    p_product.add_argument("--g", required=True)
    p_product.add_argument("--h", required=True)
    p_product.add_argument("--root", type=int, default=None)
    p_product.add_argument("--in-format", choices=["graph6", "edgelist"], default="graph6")
    p_product.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
    p_product.add_argument("--out", default=None)

    p_verify = sub.add_parser("verify", help="run the battery over a corpus")
    p_verify.add_argument("--source", required=True)
    p_verify.add_argument("--theorems", default=None)
    p_verify.add_argument("--k", default="1,2")
    p_verify.add_argument("--out", default=None)
    p_verify.add_argument("--jobs", type=int, default=None)
    p_verify.add_argument("--seed", type=int, default=None)
    p_verify.add_argument("--cap-nodes", type=int, default=None)
    p_verify.add_argument("--connected-only", action="store_true")
    p_verify.add_argument("--tree-only", action="store_true")
    p_verify.add_argument("--min-degree", type=int, default=None)
    return parser


def _cmd_compute(args) -> int:
    g = _load_graph(args.path, args.format)
    if args.invariant == "packing":
        res = max_limited_packing(g, args.k, total=args.total, node_cap=args.cap_nodes)
        witness = sorted(res.witness)
    elif args.invariant == "domination":
        res = min_dominating(g, total=args.total, node_cap=args.cap_nodes)
        witness = sorted(res.witness)
    else:
        res = partition_number(g, args.k, node_cap=args.cap_nodes)
        witness = [sorted(c) for c in res.witness.classes]
    print(
        json.dumps(
            {
                "invariant": args.invariant,
                "k": args.k,
                "total": getattr(args, "total", False),
                "value": res.value,
                "witness": witness,
                "nodes_explored": res.nodes_explored,
                "method": res.method,
            }
        )
    )
    return 0


def _cmd_bounds(args) -> int:
    g = _load_graph(args.path, args.format)
    ks = tuple(int(x) for x in args.k.split(","))
    groups = args.theorems.split(",") if args.theorems else None
    for row in harness.run_battery(g, groups, ks):
        print(json.dumps(row, sort_keys=False))
    return 0


def _cmd_construct(args) -> int:
    builder, arity = _FAMILIES[args.family]
    if len(args.params) != arity:
        raise ValueError(f"{args.family} takes {arity} parameter(s)")
    _write_graph(builder(*args.params), args.format, args.out)
    return 0


def _cmd_product(args) -> int:
    g = _load_graph(args.g, args.in_format)
    h = _load_graph(args.h, args.in_format)
    if args.kind == "cartesian":
        prod = products.cartesian(g, h)
    elif args.kind == "direct":
        prod = products.direct(g, h)
    elif args.kind == "rooted":
        if args.root is None:
            raise ValueError("rooted product needs --root")
        prod = products.rooted(g, h, args.root)
    else:
        prod = products.corona(g, h)
    _write_graph(prod.graph, args.format, args.out)
    return 0


def _cmd_verify(args) -> int:
    spec = _parse_corpus(args.source, args)
    ks = tuple(int(x) for x in args.k.split(","))
    groups = args.theorems.split(",") if args.theorems else None
    report = harness.verify(
        spec,
        groups=groups,
        ks=ks,
        out_path=args.out,
        jobs=args.jobs,
        node_cap=args.cap_nodes,
    )
    print(json.dumps({"summary": report.summary}, sort_keys=False))
    return 1 if report.solid_violations else 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "compute": _cmd_compute,
        "bounds": _cmd_bounds,
        "construct": _cmd_construct,
        "product": _cmd_product,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
