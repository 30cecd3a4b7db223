"""Batch theorem verification over corpora with deterministic JSON-lines output.

One record per (graph, theorem instance, k). A record never silently
disappears: checkers whose structural preconditions a graph fails, and
checks above their size caps, produce ``skipped`` records. The final line
is a summary with per-theorem tallies, characterization agreement rates,
the corpus fingerprint, and the solid-violation count. Output is
byte-identical across worker counts: workers fan out per graph and results
are merged in corpus order.
"""

from __future__ import annotations

import hashlib
import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import bounds
from .core import CapExceededError, Graph, is_tree, isolated_count, min_internal_degree
from .corpus import CorpusSpec, generate_corpus
from .graphio import emit_graph6

__version__ = "0.1.0"

SKIPPED = "skipped"

THEOREM_GROUPS = (
    "degree_sequence",
    "max_degree",
    "regular",
    "tree_delta_prime",
    "edge_deletion",
    "open_packing_sandwich",
    "tree_sandwich",
    "unique_set_leaves",
    "chi",
    "aux",
)

_K_GROUPS = frozenset({"degree_sequence", "max_degree", "regular", "edge_deletion", "chi", "aux"})

_CHARACTERIZATION_IDS = (
    bounds.STAR_SPLIT_CHAR,
    bounds.STAR_CHAR,
    bounds.TOTAL_DOM_CHAR,
)


def _value(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return x


def _row(theorem_id, k, lhs, rhs, status, witness):
    return {
        "theorem_id": theorem_id,
        "k": k,
        "lhs": _value(lhs),
        "rhs": _value(rhs),
        "status": status,
        "witness": witness,
    }


def _report_row(report: bounds.BoundReport, k):
    return _row(report.theorem_id, k, report.lhs, report.rhs, report.status, report.witness)


def _char_row(char: bounds.CharacterizationReport, k):
    witness = {
        "equality_holds": char.equality_holds,
        "structural_condition_holds": char.structural_condition_holds,
    }
    if char.detail:
        witness.update(char.detail)
    if char.agree is None:
        status = SKIPPED
    else:
        status = bounds.HOLDS if char.agree else bounds.VIOLATED
    return _row(char.theorem_id, k, int(char.equality_holds), None, status, witness)


def _skip_row(theorem_id, k, reason):
    return _row(theorem_id, k, None, None, SKIPPED, {"reason": reason})


def run_battery(g: Graph, groups=None, ks=(1, 2), membership_cap: int = 16, node_cap=None):
    """All requested checker rows for one graph."""
    selected = THEOREM_GROUPS if groups is None else tuple(groups)
    for grp in selected:
        if grp not in THEOREM_GROUPS:
            raise ValueError(f"unknown theorem group {grp!r}")
    rows = []
    tree = is_tree(g)
    for grp in selected:
        k_list = ks if grp in _K_GROUPS else (None,)
        for k in k_list:
            if grp == "degree_sequence":
                if g.n < 2:
                    rows.append(_skip_row(bounds.DEGREE_SEQUENCE, k, "needs at least 2 vertices"))
                else:
                    rows.append(_report_row(bounds.check_degree_sequence_bound(g, k), k))
            elif grp == "max_degree":
                if g.n < 1:
                    rows.append(_skip_row(bounds.MAX_DEGREE, k, "empty graph"))
                    continue
                result = bounds.check_max_degree_bound(g, k, membership_cap)
                rows.append(_report_row(result.bound, k))
                if result.characterization is not None:
                    rows.append(_char_row(result.characterization, k))
            elif grp == "regular":
                rows.append(_report_row(bounds.check_regular_consequence(g, k), k))
            elif grp == "tree_delta_prime":
                if not tree or g.n < 3:
                    rows.append(_skip_row(bounds.TREE_DELTA_PRIME, k, "not a tree on >= 3 vertices"))
                    continue
                c = min_internal_degree(g)
                if c < 4:
                    rows.append(_skip_row(bounds.TREE_DELTA_PRIME, k, "minimum internal degree below 4"))
                    continue
                rows.append(_report_row(bounds.check_tree_delta_prime_bound(g, c), k))
            elif grp == "edge_deletion":
                for edge in g.edges():
                    lower, upper = bounds.check_edge_deletion(g, edge, k)
                    rows.append(_report_row(lower, k))
                    rows.append(_report_row(upper, k))
            elif grp == "open_packing_sandwich":
                if g.n == 0 or isolated_count(g) > 0 or g.max_degree < 2:
                    rows.append(_skip_row(bounds.OPEN_PACKING_SANDWICH_LOWER, k, "needs max degree >= 2 and no isolated vertices"))
                    continue
                lower, upper = bounds.check_open_packing_sandwich(g)
                rows.append(_report_row(lower, k))
                rows.append(_report_row(upper, k))
            elif grp == "tree_sandwich":
                if not tree or g.max_degree < 2:
                    rows.append(_skip_row(bounds.TREE_SANDWICH_LOWER, k, "not a tree with max degree >= 2"))
                    continue
                result = bounds.check_tree_sandwich(g)
                rows.append(_report_row(result.lower, k))
                rows.append(_report_row(result.upper, k))
                rows.append(_char_row(result.star_characterization, k))
                rows.append(_char_row(result.total_domination_characterization, k))
            elif grp == "unique_set_leaves":
                try:
                    rows.append(_report_row(bounds.check_unique_set_leaves(g), k))
                except CapExceededError:
                    rows.append(_skip_row(bounds.UNIQUE_SET_LEAVES, k, "enumeration cap exceeded"))
            elif grp == "chi":
                if g.n < 2:
                    rows.append(_skip_row(bounds.CHI_SUM, k, "needs at least 2 vertices"))
                    continue
                rows.extend(_report_row(r, k) for r in bounds.check_chi_bounds(g, k))
            elif grp == "aux":
                reports = bounds.check_known_auxiliary_bounds(g, k)
                if not reports:
                    rows.append(_skip_row(bounds.AUX_KN_OVER_DELTA, k, "no auxiliary bound applies"))
                rows.extend(_report_row(r, k) for r in reports)
    return rows


@dataclass
class RunReport:
    records: list[dict]
    summary: dict

    @property
    def solid_violations(self) -> int:
        return self.summary["solid_violations"]


def _summarize(records, fingerprint, seed):
    tallies: dict[str, dict[str, int]] = {}
    solid_violations = 0
    for rec in records:
        tid = rec["theorem_id"]
        per = tallies.setdefault(tid, {})
        per[rec["status"]] = per.get(rec["status"], 0) + 1
        if rec["status"] == bounds.VIOLATED and tid in bounds.SOLID_THEOREMS:
            solid_violations += 1
    agreement = {}
    for tid in _CHARACTERIZATION_IDS:
        per = tallies.get(tid)
        if not per:
            continue
        agree = per.get(bounds.HOLDS, 0)
        disagree = per.get(bounds.VIOLATED, 0)
        total = agree + disagree
        agreement[tid] = {
            "agree": agree,
            "disagree": disagree,
            "rate": f"{agree}/{total}" if total else "0/0",
        }
    return {
        "tool_version": __version__,
        "corpus_fingerprint": fingerprint,
        "seed": seed,
        "record_count": len(records),
        "solid_violations": solid_violations,
        "theorems": {tid: dict(sorted(per.items())) for tid, per in sorted(tallies.items())},
        "agreement": agreement,
    }


def default_jobs() -> int:
    env = os.environ.get("LIMPACK_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def verify(
    spec: CorpusSpec,
    groups=None,
    ks=(1, 2),
    out_path: str | None = None,
    jobs: int | None = None,
    membership_cap: int = 16,
    node_cap: int | None = None,
) -> RunReport:
    """Run the checker battery over a corpus and write a JSON-lines report."""
    graphs = list(generate_corpus(spec))
    labels = [emit_graph6(g).decode("ascii") for g in graphs]
    digest = hashlib.sha256("\n".join(labels).encode("ascii")).hexdigest()
    workers = jobs if jobs is not None else default_jobs()

    def work(i: int):
        return run_battery(graphs[i], groups, ks, membership_cap, node_cap)

    if workers > 1 and len(graphs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            per_graph = list(pool.map(work, range(len(graphs))))
    else:
        per_graph = [work(i) for i in range(len(graphs))]

    records = []
    for i, rows in enumerate(per_graph):
        for row in rows:
            rec = {"graph_id": i, "graph6": labels[i]}
            rec.update(row)
            records.append(rec)
    summary = _summarize(records, digest, spec.seed)
    if out_path is not None:
        with open(out_path, "w", encoding="ascii") as handle:
            for rec in records:
                handle.write(json.dumps(rec, sort_keys=False) + "\n")
            handle.write(json.dumps({"summary": summary}, sort_keys=False) + "\n")
    return RunReport(records, summary)


def replay_record(record: dict, g: Graph):
    """Re-evaluate one record's checker in isolation; returns (lhs, rhs, status)."""
    tid = record["theorem_id"]
    k = record["k"]
    if tid == bounds.DEGREE_SEQUENCE:
        rep = bounds.check_degree_sequence_bound(g, k)
    elif tid == bounds.MAX_DEGREE:
        rep = bounds.check_max_degree_bound(g, k).bound
    elif tid == bounds.STAR_SPLIT_CHAR:
        char = bounds.check_max_degree_bound(g, k).characterization
        row = _char_row(char, k)
        return row["lhs"], row["rhs"], row["status"]
    elif tid == bounds.REGULAR:
        rep = bounds.check_regular_consequence(g, k)
    elif tid == bounds.TREE_DELTA_PRIME:
        rep = bounds.check_tree_delta_prime_bound(g, min_internal_degree(g))
    elif tid in (bounds.EDGE_DELETION_LOWER, bounds.EDGE_DELETION_UPPER):
        edge = tuple(record["witness"]["edge"])
        lower, upper = bounds.check_edge_deletion(g, edge, k)
        rep = lower if tid == bounds.EDGE_DELETION_LOWER else upper
    elif tid in (bounds.OPEN_PACKING_SANDWICH_LOWER, bounds.OPEN_PACKING_SANDWICH_UPPER):
        lower, upper = bounds.check_open_packing_sandwich(g)
        rep = lower if tid == bounds.OPEN_PACKING_SANDWICH_LOWER else upper
    elif tid in (bounds.TREE_SANDWICH_LOWER, bounds.TREE_SANDWICH_UPPER):
        result = bounds.check_tree_sandwich(g)
        rep = result.lower if tid == bounds.TREE_SANDWICH_LOWER else result.upper
    elif tid in (bounds.STAR_CHAR, bounds.TOTAL_DOM_CHAR):
        result = bounds.check_tree_sandwich(g)
        char = (
            result.star_characterization
            if tid == bounds.STAR_CHAR
            else result.total_domination_characterization
        )
        row = _char_row(char, k)
        return row["lhs"], row["rhs"], row["status"]
    elif tid == bounds.UNIQUE_SET_LEAVES:
        rep = bounds.check_unique_set_leaves(g)
    elif tid in (bounds.CHI_SUM, bounds.CHI_PRODUCT, bounds.CHI_CEILING):
        index = (bounds.CHI_SUM, bounds.CHI_PRODUCT, bounds.CHI_CEILING).index(tid)
        rep = bounds.check_chi_bounds(g, k)[index]
    elif tid in (bounds.AUX_KN_OVER_DELTA, bounds.AUX_K_GAMMA_T, bounds.AUX_RHO_O_GAMMA_T):
        rep = next(r for r in bounds.check_known_auxiliary_bounds(g, k) if r.theorem_id == tid)
    else:
        raise ValueError(f"cannot replay theorem {tid!r}")
    return _value(rep.lhs), _value(rep.rhs), rep.status
