"""Standard graph families and the named constructions used by the checkers.

Also home of the star-split membership test: a graph admits a star-split
certificate when its vertex set is covered by a pair (A, B) such that

  * A and B overlap in exactly three vertices,
  * some vertex of A is adjacent to every other vertex of A (a spanning
    star of the induced subgraph on A),
  * every component induced by B is a path (K1 and K2 included) or a cycle,
  * every vertex outside B has at most two neighbors inside B.

Membership is exactly equality in the max-degree ceiling for 2-total
limited packings, which is what the corresponding bound checker audits.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import Graph, build_graph, induced_subgraph, is_connected, iter_bits, mask_of
from .products import corona


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least 1 vertex")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaf_count: int) -> Graph:
    """K_{1,leaf_count}: center 0 joined to leaves 1..leaf_count."""
    if leaf_count < 1:
        raise ValueError("star needs at least 1 leaf")
    return build_graph(leaf_count + 1, [(0, i) for i in range(1, leaf_count + 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs at least 1 vertex")
    return build_graph(n, list(combinations(range(n), 2)))


def complete_bipartite(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise ValueError("complete bipartite graph needs non-empty sides")
    return build_graph(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def empty_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("empty graph needs at least 1 vertex")
    return build_graph(n, [])


_STANDARD = {
    "path": path,
    "cycle": cycle,
    "star": star,
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "empty": empty_graph,
}


def standard(kind: str, *params: int) -> Graph:
    """Dispatch to a named standard family."""
    try:
        builder = _STANDARD[kind]
    except KeyError:
        raise ValueError(f"unknown family {kind!r}") from None
    return builder(*params)


def double_star(x: int, y: int) -> Graph:
    """Two adjacent centers carrying x and y pendant leaves (order x+y+2)."""
    if x < 1 or y < 1:
        raise ValueError("double star needs at least one leaf per center")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(x)]
    edges += [(1, 2 + x + j) for j in range(y)]
    return build_graph(x + y + 2, edges)


def star_split_example() -> Graph:
    """The canonical 8-vertex star-split member.

    Vertex 0 carries a spanning star over {0..4}; vertices 5, 6, 7 hang off
    1, 3, 4 respectively. ({0..4}, {0,2,4,5,6,7}) is a valid certificate.
    """
    return build_graph(8, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (3, 6), (4, 7)])


@dataclass(frozen=True)
class StarSplitCertificate:
    """The (A, B) pair witnessing star-split membership."""

    a: frozenset
    b: frozenset
    star_center: int


class _CapExceeded:
    def __repr__(self) -> str:  # pragma: no cover - repr only
        return "CAP_EXCEEDED"

    def __bool__(self) -> bool:
        return False


#: Returned by :func:`star_split_membership` when the graph is above the
#: search cap; distinct from ``None`` (which means "searched, no certificate").
CAP_EXCEEDED = _CapExceeded()


def star_split_membership(g: Graph, cap: int = 16):
    """Search for a star-split certificate.

    Returns the least certificate under the ordering (star center ascending,
    larger A first, then A and B as sorted tuples), ``None`` when no
    certificate exists, or :data:`CAP_EXCEEDED` above the size cap.

    The search fixes a candidate star center w, runs A over subsets of the
    closed neighborhood of w (the full closed neighborhood first), and fills
    B with the forced complement of A plus each 3-subset of A.
    """
    n = g.n
    if n > cap:
        return CAP_EXCEEDED
    if n < 3:
        return None
    full = (1 << n) - 1
    adj = g.adj
    for w in range(n):
        nb = adj[w]
        if nb.bit_count() < 2:
            continue
        best_key = None
        best_cert = None
        sub = nb
        while True:
            a_mask = sub | (1 << w)
            if a_mask.bit_count() >= 3:
                rest = full & ~a_mask
                base_ok = True
                for v in range(n):
                    if (adj[v] & rest).bit_count() > 2:
                        base_ok = False
                        break
                if base_ok:
                    a_bits = tuple(iter_bits(a_mask))
                    for trio in combinations(a_bits, 3):
                        b_mask = rest | mask_of(trio)
                        ok = True
                        for v in range(n):
                            if (adj[v] & b_mask).bit_count() > 2:
                                ok = False
                                break
                        if ok:
                            b_bits = tuple(iter_bits(b_mask))
                            key = (n - len(a_bits), a_bits, b_bits)
                            if best_key is None or key < best_key:
                                best_key = key
                                best_cert = StarSplitCertificate(
                                    frozenset(a_bits), frozenset(b_bits), w
                                )
            if sub == 0:
                break
            sub = (sub - 1) & nb
        if best_cert is not None:
            return best_cert
    return None


def verify_star_split_certificate(g: Graph, cert: StarSplitCertificate) -> bool:
    """Independent re-check of every certificate condition.

    Walks the components induced by B explicitly instead of reusing the
    degree-count shortcut of the membership search.
    """
    a, b, w = cert.a, cert.b, cert.star_center
    vs = set(range(g.n))
    if not (a <= vs and b <= vs):
        return False
    if a | b != vs:
        return False
    if len(a & b) != 3:
        return False
    if w not in a:
        return False
    if not (a - {w}) <= g.open_neighborhood(w):
        return False
    sub, _ = induced_subgraph(g, b)
    unvisited = set(range(sub.n))
    while unvisited:
        start = min(unvisited)
        comp = {start}
        frontier = [start]
        while frontier:
            v = frontier.pop()
            for u in iter_bits(sub.adj[v]):
                if u not in comp:
                    comp.add(u)
                    frontier.append(u)
        unvisited -= comp
        degs = sorted(sub.adj[v].bit_count() for v in comp)
        m_comp = sum(degs) // 2
        is_path = m_comp == len(comp) - 1 and (not degs or degs[-1] <= 2)
        is_cycle = m_comp == len(comp) and degs[0] == 2 and degs[-1] == 2
        if not (is_path or is_cycle):
            return False
    return all(len(g.open_neighborhood(v) & b) <= 2 for v in vs - b)


def diameter2_gadget(c: int) -> Graph:
    """A diameter-2 graph whose 2-total limited packing number is exactly c.

    An independent set of c vertices, a clique of size c(c-1)/2, and a
    private clique vertex joined to each pair of independent vertices.
    """
    if c < 3:
        raise ValueError("gadget needs c >= 3")
    m = c * (c - 1) // 2
    edges = list((c + i, c + j) for i, j in combinations(range(m), 2))
    for idx, (i, j) in enumerate(combinations(range(c), 2)):
        edges.append((i, c + idx))
        edges.append((j, c + idx))
    return build_graph(c + m, edges)


def realization_tree(a: int, b: int) -> Graph:
    """A tree with open packing number a and 2-total limited packing number b.

    Requires a >= 3 and a+1 <= b <= 2a. For b = 2a the tree is a path of a
    spine vertices with two pendant leaves each; otherwise it is a star
    K_{1,a} whose i-th arm carries two extra leaves for i < b-a and one
    extra leaf for b-a <= i <= a-1 (the last arm stays bare).
    """
    if a < 3:
        raise ValueError("need a >= 3")
    if not a + 1 <= b <= 2 * a:
        raise ValueError("need a+1 <= b <= 2a")
    x = b - a
    edges = []
    if x == a:
        for i in range(a - 1):
            edges.append((i, i + 1))
        nxt = a
        for i in range(a):
            edges.append((i, nxt))
            edges.append((i, nxt + 1))
            nxt += 2
        return build_graph(3 * a, edges)
    for i in range(1, a + 1):
        edges.append((0, i))
    nxt = a + 1
    for i in range(1, x):
        edges.append((i, nxt))
        edges.append((i, nxt + 1))
        nxt += 2
    for i in range(x, a):
        edges.append((i, nxt))
        nxt += 1
    return build_graph(2 * a + x - 1, edges)


def add_pendant_leaves(g: Graph) -> Graph:
    """Attach one pendant leaf to every vertex (the corona with K1).

    The packing number of the result equals the order of the input, which
    makes these graphs sharpness factors for the cartesian product bound.
    """
    if g.n < 1 or not is_connected(g):
        raise ValueError("input must be connected and non-empty")
    return corona(g, complete(1)).graph


def corona_partition_family(a: int, b: int) -> tuple[Graph, Graph]:
    """The (K_{a,a}, edgeless graph on a+b-1 vertices) pair for corona runs."""
    if a < 1 or b < 0:
        raise ValueError("need a >= 1 and b >= 0")
    if a + b - 1 < 1:
        raise ValueError("second factor would be empty")
    return complete_bipartite(a, a), empty_graph(a + b - 1)
