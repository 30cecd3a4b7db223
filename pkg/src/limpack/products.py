"""Cartesian, direct, rooted, and corona graph products.

Vertex ids are linearized deterministically: (g, h) -> g*|V(H)| + h for the
three products on V(G) x V(H); the corona puts the original vertices first
and then each attached copy blockwise. Identical inputs always produce
identical coordinate orderings, so witness sets are comparable across runs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Graph, build_graph

CARTESIAN = "cartesian"
DIRECT = "direct"
ROOTED = "rooted"
CORONA = "corona"
KINDS = (CARTESIAN, DIRECT, ROOTED, CORONA)

G_LAYER = "G"
H_LAYER = "H"


@dataclass(frozen=True)
class ProductGraph:
    """A product graph plus the coordinate bookkeeping for its factors."""

    graph: Graph
    kind: str
    factor_g_order: int
    factor_h_order: int
    root: int | None = None

    def vertex(self, gi: int, hi: int | None = None) -> int:
        """Linear id of the vertex with factor coordinates (gi, hi)."""
        if not 0 <= gi < self.factor_g_order:
            raise ValueError(f"first coordinate {gi} out of range")
        if self.kind == CORONA:
            if hi is None:
                return gi
            if not 0 <= hi < self.factor_h_order:
                raise ValueError(f"second coordinate {hi} out of range")
            return self.factor_g_order + gi * self.factor_h_order + hi
        if hi is None or not 0 <= hi < self.factor_h_order:
            raise ValueError(f"second coordinate {hi} out of range")
        return gi * self.factor_h_order + hi

    def coord(self, v: int) -> tuple[int, int | None]:
        """Factor coordinates of linear id ``v``; corona originals map to (i, None)."""
        if not 0 <= v < self.graph.n:
            raise ValueError(f"vertex {v} out of range")
        if self.kind == CORONA:
            if v < self.factor_g_order:
                return v, None
            gi, hi = divmod(v - self.factor_g_order, self.factor_h_order)
            return gi, hi
        return divmod(v, self.factor_h_order)


def _check_nonempty(g: Graph, h: Graph) -> None:
    if g.n == 0 or h.n == 0:
        raise ValueError("product factors must be non-empty")


def cartesian(g: Graph, h: Graph) -> ProductGraph:
    """Adjacent iff adjacent in one coordinate and equal in the other."""
    _check_nonempty(g, h)
    nh = h.n
    edges = []
    for gi in range(g.n):
        for (h1, h2) in h.edges():
            edges.append((gi * nh + h1, gi * nh + h2))
    for (g1, g2) in g.edges():
        for hi in range(nh):
            edges.append((g1 * nh + hi, g2 * nh + hi))
    return ProductGraph(build_graph(g.n * nh, edges), CARTESIAN, g.n, h.n)


def direct(g: Graph, h: Graph) -> ProductGraph:
    """Adjacent iff adjacent in both coordinates; layers stay edgeless."""
    _check_nonempty(g, h)
    nh = h.n
    edges = []
    for (g1, g2) in g.edges():
        for (h1, h2) in h.edges():
            edges.append((g1 * nh + h1, g2 * nh + h2))
            edges.append((g1 * nh + h2, g2 * nh + h1))
    return ProductGraph(build_graph(g.n * nh, edges), DIRECT, g.n, h.n)


def rooted(g: Graph, h: Graph, root: int) -> ProductGraph:
    """One copy of H per vertex of G, copies glued along H's root vertex."""
    _check_nonempty(g, h)
    if not 0 <= root < h.n:
        raise ValueError(f"root {root} out of range for the second factor")
    nh = h.n
    edges = []
    for gi in range(g.n):
        for (h1, h2) in h.edges():
            edges.append((gi * nh + h1, gi * nh + h2))
    for (g1, g2) in g.edges():
        edges.append((g1 * nh + root, g2 * nh + root))
    return ProductGraph(build_graph(g.n * nh, edges), ROOTED, g.n, h.n, root=root)


def corona(g: Graph, h: Graph) -> ProductGraph:
    """One copy of H per vertex of G, that vertex joined to its whole copy."""
    _check_nonempty(g, h)
    ng, nh = g.n, h.n
    edges = list(g.edges())
    for gi in range(ng):
        base = ng + gi * nh
        for (h1, h2) in h.edges():
            edges.append((base + h1, base + h2))
        for hi in range(nh):
            edges.append((gi, base + hi))
    return ProductGraph(build_graph(ng * (1 + nh), edges), CORONA, ng, nh)


def layer(p: ProductGraph, which: str, index: int) -> frozenset:
    """Coordinate slice: the G-layer through an H-vertex or vice versa."""
    if p.kind not in (CARTESIAN, DIRECT, ROOTED):
        raise ValueError(f"layers are not defined for the {p.kind} product")
    if which == G_LAYER:
        if not 0 <= index < p.factor_h_order:
            raise ValueError(f"H-vertex {index} out of range")
        return frozenset(p.vertex(gi, index) for gi in range(p.factor_g_order))
    if which == H_LAYER:
        if not 0 <= index < p.factor_g_order:
            raise ValueError(f"G-vertex {index} out of range")
        return frozenset(p.vertex(index, hi) for hi in range(p.factor_h_order))
    raise ValueError(f"unknown layer selector {which!r}")
