import pytest

from limpack.core import CapExceededError, is_connected, is_tree
from limpack.corpus import (
    ALL_TREES,
    EXHAUSTIVE,
    RANDOM,
    CorpusSpec,
    all_labeled_trees,
    exhaustive_labeled,
    generate_corpus,
    random_graphs,
)
from limpack.graphio import emit_graph6


def test_exhaustive_counts():
    assert len(list(exhaustive_labeled(3))) == 8
    assert len(list(exhaustive_labeled(4))) == 64
    assert len(list(exhaustive_labeled(0))) == 1


def test_exhaustive_cap():
    with pytest.raises(CapExceededError):
        list(exhaustive_labeled(7))


def test_all_trees_counts():
    assert len(list(all_labeled_trees(1))) == 1
    assert len(list(all_labeled_trees(2))) == 1
    assert len(list(all_labeled_trees(3))) == 3
    trees4 = list(all_labeled_trees(4))
    assert len(trees4) == 16
    assert len({tuple(t.edges()) for t in trees4}) == 16
    assert all(is_tree(t) for t in trees4)
    assert len(list(all_labeled_trees(5))) == 125


def test_all_trees_cap():
    with pytest.raises(CapExceededError):
        list(all_labeled_trees(10))


def test_random_deterministic():
    a = [emit_graph6(g) for g in random_graphs(8, 0.5, 100, seed=7)]
    b = [emit_graph6(g) for g in random_graphs(8, 0.5, 100, seed=7)]
    assert a == b
    c = [emit_graph6(g) for g in random_graphs(8, 0.5, 100, seed=8)]
    assert a != c


def test_filters():
    spec = CorpusSpec(EXHAUSTIVE, n=4, connected_only=True)
    graphs = list(generate_corpus(spec))
    assert all(is_connected(g) for g in graphs)
    assert len(graphs) == 38  # connected labeled graphs on 4 vertices
    spec = CorpusSpec(EXHAUSTIVE, n=4, tree_only=True)
    assert len(list(generate_corpus(spec))) == 16
    spec = CorpusSpec(EXHAUSTIVE, n=4, min_degree=3)
    assert len(list(generate_corpus(spec))) == 1  # K4 only


def test_generate_random_through_spec():
    spec = CorpusSpec(RANDOM, n=6, edge_probability=0.5, count=10, seed=3)
    assert len(list(generate_corpus(spec))) == 10


def test_unknown_source():
    with pytest.raises(ValueError):
        list(generate_corpus(CorpusSpec("mystery")))
