"""Corpus generation: exhaustive labeled graphs, labeled trees, random graphs.

Tree streams enumerate labeled trees bijectively through sequence decoding
(n^(n-2) trees on n vertices), so corpus sizes are exact and reproducible.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator

from .core import CapExceededError, Graph, build_graph, is_connected, is_tree
from .graphio import iter_graph6_file

EXHAUSTIVE = "exhaustive_labeled"
GRAPH6_FILE = "graph6_file"
RANDOM = "random"
ALL_TREES = "all_trees"

EXHAUSTIVE_CAP = 6
TREES_CAP = 9


@dataclass(frozen=True)
class CorpusSpec:
    """What to generate plus optional structural filters."""

    source: str
    n: int = 0
    path: str | None = None
    edge_probability: float = 0.5
    count: int = 0
    seed: int | None = None
    connected_only: bool = False
    tree_only: bool = False
    min_degree: int | None = None


def exhaustive_labeled(n: int) -> Iterator[Graph]:
    """All 2^(n(n-1)/2) labeled graphs on n vertices."""
    if n > EXHAUSTIVE_CAP:
        raise CapExceededError(f"exhaustive corpus capped at {EXHAUSTIVE_CAP} vertices")
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        masks = [0] * n
        for i, (u, v) in enumerate(pairs):
            if (bits >> i) & 1:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
        yield Graph(n, tuple(masks))


def _tree_from_sequence(seq: tuple[int, ...], n: int) -> Graph:
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    heap = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(heap)
    edges = []
    for x in seq:
        leaf = heapq.heappop(heap)
        edges.append((leaf, x))
        deg[x] -= 1
        if deg[x] == 1:
            heapq.heappush(heap, x)
    u = heapq.heappop(heap)
    v = heapq.heappop(heap)
    edges.append((u, v))
    return build_graph(n, edges)


def all_labeled_trees(n: int) -> Iterator[Graph]:
    """All n^(n-2) labeled trees on n vertices."""
    if n > TREES_CAP:
        raise CapExceededError(f"tree corpus capped at {TREES_CAP} vertices")
    if n < 1:
        raise ValueError("trees need at least one vertex")
    if n == 1:
        yield Graph(1, (0,))
        return
    if n == 2:
        yield build_graph(2, [(0, 1)])
        return
    for seq in product(range(n), repeat=n - 2):
        yield _tree_from_sequence(seq, n)


def random_graphs(n: int, edge_probability: float, count: int, seed: int | None) -> Iterator[Graph]:
    """Independent uniform-edge random graphs, reproducible from the seed."""
    if not 0.0 <= edge_probability <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    rng = random.Random(seed)
    pairs = list(combinations(range(n), 2))
    for _ in range(count):
        edges = [p for p in pairs if rng.random() < edge_probability]
        yield build_graph(n, edges)


def generate_corpus(spec: CorpusSpec) -> Iterator[Graph]:
    if spec.source == EXHAUSTIVE:
        stream = exhaustive_labeled(spec.n)
    elif spec.source == ALL_TREES:
        stream = all_labeled_trees(spec.n)
    elif spec.source == RANDOM:
        stream = random_graphs(spec.n, spec.edge_probability, spec.count, spec.seed)
    elif spec.source == GRAPH6_FILE:
        if spec.path is None:
            raise ValueError("graph6_file corpus needs a path")
        stream = iter_graph6_file(spec.path)
    else:
        raise ValueError(f"unknown corpus source {spec.source!r}")
    for g in stream:
        if spec.connected_only and not is_connected(g):
            continue
        if spec.tree_only and not is_tree(g):
            continue
        if spec.min_degree is not None and g.min_degree < spec.min_degree:
            continue
        yield g
