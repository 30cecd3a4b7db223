from itertools import combinations, permutations

from hypothesis import strategies as st

from limpack.core import Graph, build_graph


@st.composite
def graphs(draw, min_n=0, max_n=6):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    bits = draw(st.integers(0, (1 << len(pairs)) - 1))
    edges = [p for i, p in enumerate(pairs) if (bits >> i) & 1]
    return build_graph(n, edges)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Exhaustive permutation check; only meant for n <= 8."""
    if g.n != h.n or g.degree_sequence() != h.degree_sequence():
        return False
    g_edges = set(g.edges())
    for perm in permutations(range(h.n)):
        mapped = {tuple(sorted((perm[u], perm[v]))) for u, v in h.edges()}
        if mapped == g_edges:
            return True
    return False
