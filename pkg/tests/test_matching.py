from __future__ import annotations

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings

from kextend.corpus import exhaustive_graphs, random_graph
from kextend.errors import BudgetExceeded, PreconditionError
from kextend.graph import build_family, complete
from kextend.matching import (
    enumerate_matchings,
    extends_to_one_factor,
    has_one_factor,
    matching_number,
    maximum_matching,
    validate_matching,
)
from oracles import all_matchings, count_matchings, nx_graph, perfect_matchings
from test_graph import graphs


def _has_augmenting_path(G, M) -> bool:
    """Exhaustive search over simple alternating paths that start at a free vertex."""
    mate = {}
    for u, v in M:
        mate[u], mate[v] = v, u
    free = [v for v in range(G.n) if v not in mate]

    def dfs(v, visited, need_matched):
        for w in G.neighbors(v):
            if w in visited:
                continue
            if not need_matched:
                if mate.get(v) == w:
                    continue
                if w not in mate:
                    return True
                if dfs(w, visited | {w}, True):
                    return True
            elif mate.get(v) == w and dfs(w, visited | {w}, False):
                return True
        return False

    return any(dfs(f, {f}, False) for f in free)


def test_maximum_matching_examples():
    assert matching_number(complete(4)) == 2
    assert matching_number(complete(3)) == 1
    # four independent vertices can only be covered through the two core vertices
    assert matching_number(build_family(2, [1] * 4)) == 2


def test_has_one_factor_examples():
    assert has_one_factor(complete(2))
    assert not has_one_factor(complete(3))
    assert has_one_factor(build_family(2, [3, 1]))
    assert not has_one_factor(build_family(2, [1] * 4))


def test_enumerate_matchings_examples():
    assert len(list(enumerate_matchings(complete(4), 1))) == 6
    assert list(enumerate_matchings(complete(4), 2)) == [((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))]
    assert list(enumerate_matchings(complete(5), 0)) == [()]
    with pytest.raises(BudgetExceeded):
        list(enumerate_matchings(complete(8), 2, budget=10))


def test_extends_to_one_factor_examples():
    assert all(extends_to_one_factor(complete(4), [e]) for e in complete(4).edges())
    assert not extends_to_one_factor(build_family(2, [1] * 4), [(0, 1)])
    G = build_family(2, [3, 1])  # core 0,1; triangle 2,3,4; pendant 5
    # remainder {0, 1, 4, 5}: 0-5 and 1-4 are edges
    assert extends_to_one_factor(G, [(2, 3)])
    assert extends_to_one_factor(G, [(3, 4)])
    # the core edge leaves the triangle and the pendant, which is not coverable
    assert not extends_to_one_factor(G, [(0, 1)])


def test_invalid_matchings_rejected():
    G = build_family(2, [3, 1])
    with pytest.raises(PreconditionError) as info:
        extends_to_one_factor(G, [(2, 5)])
    assert info.value.clause == "matching_edge"
    with pytest.raises(PreconditionError) as info:
        validate_matching(G, [(0, 2), (0, 3)])
    assert info.value.clause == "matching_disjoint"


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=10))
def test_maximum_matching_is_maximum(G):
    M = maximum_matching(G)
    validate_matching(G, M)
    assert len(M) == len(nx.max_weight_matching(nx_graph(G), maxcardinality=True))
    assert not _has_augmenting_path(G, M)
    assert maximum_matching(G) == M


def test_maximum_matching_random_corpus_against_networkx():
    rng = np.random.default_rng(11)
    for i in range(400):
        n = int(rng.integers(2, 19))
        G = random_graph(n, [0.1, 0.2, 0.4][i % 3], rng)
        assert matching_number(G) == len(nx.max_weight_matching(nx_graph(G), maxcardinality=True))


def test_matching_counts_two_ways_all_graphs_up_to_7():
    for n in range(2, 8):
        for G in exhaustive_graphs(n, connected=False):
            for k in range(0, n // 2 + 1):
                dfs = list(enumerate_matchings(G, k))
                assert len(dfs) == len(set(dfs))
                assert sorted(dfs) == sorted(all_matchings(G, k))


@pytest.mark.slow
def test_matching_counts_two_ways_order_8():
    for G in exhaustive_graphs(8, connected=False):
        for k in range(0, 5):
            assert sum(1 for _ in enumerate_matchings(G, k)) == count_matchings(G, k)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=8))
def test_empty_matching_extends_iff_one_factor(G):
    assert extends_to_one_factor(G, ()) == has_one_factor(G) == bool(perfect_matchings(G))


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=8))
def test_enumerated_matchings_are_disjoint_edges(G):
    for k in range(0, 4):
        for M in enumerate_matchings(G, k):
            assert validate_matching(G, M) == M
