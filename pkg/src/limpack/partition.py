"""Vertex partitions into k-limited packing classes.

``partition_number`` computes the minimum number of classes exactly; the
search branches on vertices in descending-degree order with the standard
symmetry break (a vertex may only open the next unused class), seeded by a
first-fit greedy incumbent and pruned by closed-neighborhood capacity.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as _iproduct

from .core import CapExceededError, Graph, SearchBudgetExceeded, iter_bits
from .solvers import BRANCH_AND_BOUND, OptResult, _effective_cap, is_k_limited_packing


class MalformedPartitionError(ValueError):
    """Classes overlap, miss vertices, or are empty."""


@dataclass(frozen=True)
class Partition:
    """Disjoint vertex classes covering all of V(G)."""

    classes: tuple[frozenset, ...]

    def __len__(self) -> int:
        return len(self.classes)


def is_klp_partition(g: Graph, p: Partition, k: int) -> bool:
    """True iff every class is a k-limited packing.

    Structurally broken partitions raise MalformedPartitionError instead of
    returning False.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    seen = set()
    for cls in p.classes:
        if not cls:
            raise MalformedPartitionError("empty class")
        for v in cls:
            if not 0 <= v < g.n:
                raise MalformedPartitionError(f"vertex {v} out of range")
            if v in seen:
                raise MalformedPartitionError(f"vertex {v} appears in two classes")
            seen.add(v)
    if len(seen) != g.n:
        raise MalformedPartitionError("classes do not cover every vertex")
    return all(is_k_limited_packing(g, cls, k) for cls in p.classes)


def _fits(v: int, class_mask: int, closed: list[int], k: int) -> bool:
    # adding v bumps the count of every closed neighborhood containing v
    for w in iter_bits(closed[v]):
        if (closed[w] & class_mask).bit_count() >= k:
            return False
    return True


def greedy_partition(g: Graph, k: int) -> tuple[int, Partition]:
    """First-fit over vertices in descending-degree order; an upper bound."""
    if k < 1:
        raise ValueError("k must be at least 1")
    closed = [g.adj[v] | (1 << v) for v in range(g.n)]
    order = sorted(range(g.n), key=lambda v: (-g.adj[v].bit_count(), v))
    class_masks: list[int] = []
    for v in order:
        for i, cm in enumerate(class_masks):
            if _fits(v, cm, closed, k):
                class_masks[i] = cm | (1 << v)
                break
        else:
            class_masks.append(1 << v)
    part = Partition(tuple(frozenset(iter_bits(m)) for m in class_masks))
    return len(class_masks), part


def _search_partition(g, k, m, closed, order, node_budget):
    """First assignment into at most m classes, or None."""
    n = g.n
    class_masks = [0] * m
    assign = [-1] * n
    nodes = 0

    def dfs(i, used):
        nonlocal nodes
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            raise SearchBudgetExceeded("node budget exhausted")
        if i == n:
            return True
        v = order[i]
        vb = 1 << v
        for c in range(min(used + 1, m)):
            cm = class_masks[c]
            ok = True
            for w in iter_bits(closed[v]):
                if (closed[w] & cm).bit_count() >= k:
                    ok = False
                    break
            if ok:
                class_masks[c] = cm | vb
                assign[v] = c
                if dfs(i + 1, used + 1 if c == used else used):
                    return True
                class_masks[c] = cm
                assign[v] = -1
        return False

    found = dfs(0, 0)
    return (assign if found else None), nodes


def partition_number(g: Graph, k: int, node_cap: int | None = None) -> OptResult:
    """Minimum number of classes in a partition into k-limited packings.

    Always defined for n >= 1 (singleton classes are feasible). Returns 1
    exactly when k >= max_degree + 1.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if g.n < 1:
        raise ValueError("partition number needs at least one vertex")
    if k >= g.max_degree + 1:
        return OptResult(1, Partition((frozenset(range(g.n)),)), 0, BRANCH_AND_BOUND)
    closed = [g.adj[v] | (1 << v) for v in range(g.n)]
    lower = max(-(-m.bit_count() // k) for m in closed)
    upper, greedy_part = greedy_partition(g, k)
    order = tuple(sorted(range(g.n), key=lambda v: (-g.adj[v].bit_count(), v)))
    nodes_total = 0
    for m in range(lower, upper):
        assign, nodes = _search_partition(g, k, m, closed, order, node_cap)
        nodes_total += nodes
        if assign is not None:
            used = max(assign) + 1
            masks = [0] * used
            for v, c in enumerate(assign):
                masks[c] |= 1 << v
            part = Partition(tuple(frozenset(iter_bits(cm)) for cm in masks))
            return OptResult(used, part, nodes_total, BRANCH_AND_BOUND)
    return OptResult(upper, greedy_part, nodes_total, BRANCH_AND_BOUND)


def brute_force_partition_number(g: Graph, k: int, cap: int = 6) -> int:
    """Minimum class count by enumerating every class assignment, no pruning."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if g.n < 1:
        raise ValueError("partition number needs at least one vertex")
    if g.n > cap:
        raise CapExceededError(f"partition oracle capped at {cap} vertices, got {g.n}")
    n = g.n
    closed = [g.adj[v] | (1 << v) for v in range(n)]
    for m in range(1, n + 1):
        for assign in _iproduct(range(m), repeat=n):
            masks = [0] * m
            for v, c in enumerate(assign):
                masks[c] |= 1 << v
            ok = True
            for cm in masks:
                for w in range(n):
                    if (closed[w] & cm).bit_count() > k:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                return m
    return n
