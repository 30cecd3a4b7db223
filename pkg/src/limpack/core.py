"""Immutable simple graphs over dense integer vertices.

Vertices are 0..n-1 and adjacency is stored as one bitmask per vertex, so
that neighborhood-intersection counts (the hot loop of every solver in this
package) are single ``&`` + ``bit_count`` operations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator


class CapExceededError(ValueError):
    """An operation was asked to run above its documented size cap."""


class SearchBudgetExceeded(RuntimeError):
    """A solver exceeded its configured node budget."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """A finite simple graph: vertex count plus per-vertex neighbor bitmasks.

    Construction validates symmetry, irreflexivity, and index ranges, so any
    Graph instance in circulation satisfies the simple-graph invariants.
    Instances are immutable and safe to share across workers.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.adj) != self.n:
            raise ValueError("adjacency table size does not match vertex count")
        full = (1 << self.n) - 1
        for v, m in enumerate(self.adj):
            if m & ~full:
                raise ValueError(f"vertex {v}: neighbor index out of range")
            if (m >> v) & 1:
                raise ValueError(f"vertex {v}: self-loop")
        for v, m in enumerate(self.adj):
            for u in iter_bits(m):
                if not (self.adj[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range 0..{self.n - 1}")

    def open_neighborhood(self, v: int) -> frozenset:
        self._check_vertex(v)
        return frozenset(iter_bits(self.adj[v]))

    def closed_neighborhood(self, v: int) -> frozenset:
        self._check_vertex(v)
        return frozenset(iter_bits(self.adj[v] | (1 << v)))

    def closed_mask(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v] | (1 << v)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool((self.adj[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, sorted."""
        out = []
        for u in range(self.n):
            m = self.adj[u] >> (u + 1)
            for off in iter_bits(m):
                out.append((u, u + 1 + off))
        return out

    def num_edges(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def degree_sequence(self) -> tuple[int, ...]:
        """Degrees sorted ascending."""
        return tuple(sorted(m.bit_count() for m in self.adj))

    @property
    def max_degree(self) -> int:
        return max((m.bit_count() for m in self.adj), default=0)

    @property
    def min_degree(self) -> int:
        return min((m.bit_count() for m in self.adj), default=0)

    def vertices(self) -> range:
        return range(self.n)


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a Graph from an explicit edge list.

    Rejects self-loops, duplicate edges (in either orientation), and
    endpoints outside 0..n-1.
    """
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    masks = [0] * n
    seen = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint out of range")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise ValueError(f"duplicate edge ({u}, {v})")
        seen.add(key)
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return Graph(n, tuple(masks))


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    masks = list(g.adj)
    masks[u] &= ~(1 << v)
    masks[v] &= ~(1 << u)
    return Graph(g.n, tuple(masks))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on ``vertices``, relabeled compactly.

    Returns the subgraph and the tuple mapping new index -> original index.
    """
    keep = sorted(set(vertices))
    for v in keep:
        g._check_vertex(v)
    index = {v: i for i, v in enumerate(keep)}
    masks = [0] * len(keep)
    keep_mask = mask_of(keep)
    for v in keep:
        for u in iter_bits(g.adj[v] & keep_mask):
            masks[index[v]] |= 1 << index[u]
    return Graph(len(keep), tuple(masks)), tuple(keep)


def remove_isolated(g: Graph) -> tuple[Graph, int, tuple[int, ...]]:
    """Drop isolated vertices, relabeling compactly.

    Returns (reduced graph, number of vertices removed, new->original index
    map for the kept vertices).
    """
    kept = [v for v in range(g.n) if g.adj[v]]
    reduced, mapping = induced_subgraph(g, kept)
    return reduced, g.n - len(kept), mapping


def isolated_count(g: Graph) -> int:
    return sum(1 for m in g.adj if not m)


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    full = (1 << g.n) - 1
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full


def diameter(g: Graph) -> int | float:
    """Largest shortest-path distance; ``math.inf`` when disconnected."""
    n = g.n
    if n == 0:
        return 0
    full = (1 << n) - 1
    ecc = 0
    for s in range(n):
        seen = 1 << s
        frontier = seen
        dist = 0
        while True:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.adj[v]
            nxt &= ~seen
            if not nxt:
                break
            seen |= nxt
            frontier = nxt
            dist += 1
        if seen != full:
            return math.inf
        ecc = max(ecc, dist)
    return ecc


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.num_edges() == g.n - 1 and is_connected(g)


def is_complete(g: Graph) -> bool:
    return g.num_edges() == g.n * (g.n - 1) // 2


def is_star(g: Graph) -> bool:
    """True for K_{1,x} with x >= 1 (one center adjacent to all leaves)."""
    return g.n >= 2 and is_tree(g) and g.max_degree == g.n - 1


def leaves(g: Graph) -> frozenset:
    return frozenset(v for v in range(g.n) if g.adj[v].bit_count() == 1)


def min_internal_degree(t: Graph) -> int:
    """Minimum degree among the non-leaf vertices of a tree on >= 3 vertices."""
    if not is_tree(t):
        raise ValueError("input is not a tree")
    if t.n < 3:
        raise ValueError("tree must have at least 3 vertices")
    internal = [t.adj[v].bit_count() for v in range(t.n) if t.adj[v].bit_count() >= 2]
    if not internal:
        raise ValueError("tree has no non-leaf vertex")
    return min(internal)
