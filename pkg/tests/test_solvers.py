import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from limpack.core import CapExceededError, SearchBudgetExceeded, build_graph
from limpack.corpus import all_labeled_trees
from limpack.families import complete, complete_bipartite, cycle, empty_graph, path, star, star_split_example
from limpack.solvers import (
    DOMINATION,
    LIMITED_PACKING,
    TOTAL_DOMINATION,
    TOTAL_LIMITED_PACKING,
    brute_force_oracle,
    enumerate_optimal_sets,
    is_k_limited_packing,
    is_k_total_limited_packing,
    max_limited_packing,
    min_dominating,
    open_packing_number,
    packing_number,
)


def test_predicate_examples():
    assert is_k_limited_packing(cycle(5), {0, 1, 3}, 2)
    assert not is_k_limited_packing(path(4), {0, 1, 2, 3}, 2)
    assert is_k_limited_packing(path(4), set(), 1)
    fig = star_split_example()
    assert is_k_total_limited_packing(fig, {0, 2, 4, 5, 6, 7}, 2)
    assert not is_k_total_limited_packing(complete(4), {0, 1, 2}, 2)
    assert is_k_total_limited_packing(complete(4), set(), 2)


def test_predicate_rejects_bad_input():
    with pytest.raises(ValueError):
        is_k_limited_packing(path(3), {0}, 0)
    with pytest.raises(ValueError):
        is_k_limited_packing(path(3), {5}, 1)


def test_max_limited_packing_examples():
    assert max_limited_packing(complete(6), 2, total=True).value == 2
    assert max_limited_packing(cycle(5), 2, total=True).value == 5  # k >= max degree
    assert max_limited_packing(complete_bipartite(3, 4), 2).value == 2
    assert max_limited_packing(cycle(5), 2).value == 3


def test_k_zero_rejected():
    with pytest.raises(ValueError):
        max_limited_packing(path(3), 0)


def test_min_dominating_examples():
    assert min_dominating(star(5), total=True).value == 2
    assert min_dominating(complete(5)).value == 1
    res = min_dominating(path(4), total=True)
    assert res.value == 2 and res.witness == {1, 2}


def test_total_domination_needs_no_isolated():
    with pytest.raises(ValueError):
        min_dominating(build_graph(3, [(0, 1)]), total=True)
    with pytest.raises(ValueError):
        brute_force_oracle(build_graph(3, [(0, 1)]), TOTAL_DOMINATION)


def test_enumerate_examples():
    assert enumerate_optimal_sets(path(3), TOTAL_LIMITED_PACKING, 2) == [frozenset({0, 1, 2})]
    c4_l2 = enumerate_optimal_sets(cycle(4), LIMITED_PACKING, 2)
    assert sorted(map(sorted, c4_l2)) == [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]
    k4_gamma = enumerate_optimal_sets(complete(4), DOMINATION)
    assert sorted(map(sorted, k4_gamma)) == [[0], [1], [2], [3]]


def test_enumerate_cap():
    with pytest.raises(CapExceededError):
        enumerate_optimal_sets(path(30), LIMITED_PACKING, 1, cap=24)


def test_oracle_examples():
    assert brute_force_oracle(cycle(5), LIMITED_PACKING, 2) == 3
    assert brute_force_oracle(complete(2), TOTAL_LIMITED_PACKING, 1) == 2
    assert brute_force_oracle(empty_graph(3), LIMITED_PACKING, 1) == 3
    with pytest.raises(CapExceededError):
        brute_force_oracle(path(25), LIMITED_PACKING, 1)


def test_node_cap_raises():
    with pytest.raises(SearchBudgetExceeded):
        max_limited_packing(cycle(9), 1, node_cap=2)


def test_packing_aliases():
    p4 = path(4)
    assert packing_number(p4).value == max_limited_packing(p4, 1).value == 2
    assert open_packing_number(p4).value == max_limited_packing(p4, 1, total=True).value == 2


@given(graphs(), st.integers(1, 3), st.booleans())
@settings(max_examples=150, deadline=None)
def test_solver_matches_oracle(g, k, total):
    kind = TOTAL_LIMITED_PACKING if total else LIMITED_PACKING
    res = max_limited_packing(g, k, total=total)
    assert res.value == brute_force_oracle(g, kind, k)
    predicate = is_k_total_limited_packing if total else is_k_limited_packing
    assert predicate(g, res.witness, k)
    assert len(res.witness) == res.value


@given(graphs(), st.booleans())
@settings(max_examples=120, deadline=None)
def test_dominating_matches_oracle(g, total):
    if total and (g.n == 0 or g.min_degree == 0):
        return
    kind = TOTAL_DOMINATION if total else DOMINATION
    res = min_dominating(g, total=total)
    assert res.value == brute_force_oracle(g, kind)
    covered = set()
    for u in res.witness:
        covered |= g.open_neighborhood(u) if total else g.closed_neighborhood(u)
    assert covered == set(range(g.n))


@given(graphs(), st.integers(1, 3), st.booleans())
@settings(max_examples=80, deadline=None)
def test_witness_is_lexicographically_least(g, k, total):
    kind = TOTAL_LIMITED_PACKING if total else LIMITED_PACKING
    res = max_limited_packing(g, k, total=total)
    optima = enumerate_optimal_sets(g, kind, k)
    assert res.witness == min(optima, key=sorted)


@given(graphs(min_n=1), st.integers(1, 3))
@settings(max_examples=100, deadline=None)
def test_containment_chain(g, k):
    lk = max_limited_packing(g, k).value
    lkt = max_limited_packing(g, k, total=True).value
    assert lk <= lkt <= g.n
    assert lk <= max_limited_packing(g, k + 1).value
    assert lkt <= max_limited_packing(g, k + 1, total=True).value
    assert min(k, g.n) <= lkt
    if k >= g.max_degree:
        assert lkt == g.n


def test_open_packing_equals_total_domination_on_trees():
    for n in range(2, 7):
        for t in all_labeled_trees(n):
            assert (
                max_limited_packing(t, 1, total=True).value
                == min_dominating(t, total=True).value
            )


def test_empty_graph_results():
    g = build_graph(0, [])
    assert max_limited_packing(g, 2).value == 0
    assert min_dominating(g).value == 0
