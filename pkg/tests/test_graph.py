from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kextend.errors import Graph6Error, PreconditionError
from kextend.graph import (
    Graph,
    build_family,
    complement,
    complete,
    components,
    disjoint_union,
    empty,
    is_connected,
    join,
    odd_component_count,
)
from kextend.graph6 import _encode_order, parse_graph6, to_graph6
from oracles import nx_graph


@st.composite
def graphs(draw, min_n=0, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, c in zip(pairs, chosen) if c])


def test_complete_examples():
    assert (complete(1).n, complete(1).num_edges) == (1, 0)
    assert (complete(4).n, complete(4).num_edges) == (4, 6)
    assert list(complete(2).edges()) == [(0, 1)]


def test_disjoint_union_examples():
    g = disjoint_union(complete(1), complete(1))
    assert (g.n, g.num_edges) == (2, 0)
    g = disjoint_union(complete(3), complete(1))
    assert (g.n, g.num_edges, len(components(g))) == (4, 3, 2)
    assert disjoint_union(complete(3), complete(3)).num_edges == 6


def test_join_examples():
    assert join(complete(1), complete(1)) == complete(2)
    g = join(complete(2), empty(4))
    assert (g.n, g.num_edges) == (6, 9)
    assert g == build_family(2, [1, 1, 1, 1])
    assert min(join(complete(3), empty(5)).degrees()) >= 3


def test_build_family_examples():
    g = build_family(2, [1, 1, 1, 1])
    assert g.blocks == ((0, 1), (2, 3, 4, 5))
    g = build_family(3, [7, 1, 1])
    assert g.n == 12
    assert g.blocks == ((0, 1, 2), tuple(range(3, 10)), (10, 11))
    assert g.num_edges == 3 + 21 + 3 * 9
    assert build_family(0, [4]) == complete(4)
    assert build_family(0, [4]).blocks == ((0, 1, 2, 3),)


def test_complement_examples():
    assert complement(complete(5)) == empty(5)
    assert complement(empty(2)) == complete(2)


def test_components_examples():
    assert components(complete(4)) == [(0, 1, 2, 3)]
    g = build_family(2, [1, 1, 1, 1])
    assert components(g, g.blocks[0]) == [(2,), (3,), (4,), (5,)]
    sizes = sorted(len(c) for c in components(disjoint_union(complete(3), complete(1))))
    assert sizes == [1, 3]


def test_odd_component_count_examples():
    g = build_family(2, [1, 1, 1, 1])
    assert odd_component_count(g, g.blocks[0]) == 4
    g = build_family(3, [1] * 5)
    assert odd_component_count(g, g.blocks[0]) == 5
    assert odd_component_count(complete(4), ()) == 0


def test_is_connected_examples():
    assert is_connected(complete(4))
    assert not is_connected(disjoint_union(complete(1), complete(1)))
    assert is_connected(build_family(1, [3, 1]))
    with pytest.raises(PreconditionError):
        is_connected(empty(0))


def test_invalid_graphs_rejected():
    with pytest.raises(ValueError, match="symmetric"):
        Graph(2, (0b10, 0b00))
    with pytest.raises(ValueError, match="loop"):
        Graph(1, (0b1,))
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(PreconditionError):
        components(complete(3), [5])


@given(graphs())
def test_adjacency_symmetric_and_degrees(G):
    A = G.adjacency_matrix()
    assert (A == A.T).all()
    assert not A.diagonal().any()
    assert list(A.sum(axis=1)) == G.degrees()
    assert sum(G.degrees()) == 2 * G.num_edges


@given(graphs(max_n=6), graphs(max_n=6))
def test_join_edge_count(g1, g2):
    assert join(g1, g2).num_edges == g1.num_edges + g2.num_edges + g1.n * g2.n


@given(graphs(), st.data())
def test_component_sizes_and_parity(G, data):
    S = data.draw(st.sets(st.integers(0, max(G.n - 1, 0)), max_size=G.n)) if G.n else set()
    comps = components(G, S)
    assert sum(len(c) for c in comps) == G.n - len(S)
    assert [c[0] for c in comps] == sorted(c[0] for c in comps)
    assert odd_component_count(G, S) % 2 == (G.n - len(S)) % 2
    h = nx_graph(G)
    h.remove_nodes_from(S)
    assert sorted(map(tuple, map(sorted, nx.connected_components(h)))) == sorted(comps)


@given(graphs(min_n=1))
def test_complement_involution_and_connectivity(G):
    assert complement(complement(G)) == G
    assert is_connected(G) == nx.is_connected(nx_graph(G))


def test_graph6_examples():
    assert parse_graph6("A_") == complete(2)
    assert to_graph6(complete(4)) == "C~"
    g = parse_graph6("A?")
    assert (g.n, g.num_edges) == (2, 0)
    assert parse_graph6(">>graph6<<C~") == complete(4)


def test_graph6_round_trip_against_networkx_all_small_graphs():
    # every graph on at most 7 vertices, plus the networkx encoder as reference
    for h in nx.graph_atlas_g():
        G = Graph.from_networkx(h)
        ref = nx.to_graph6_bytes(h, header=False).decode().strip()
        assert to_graph6(G) == ref
        assert parse_graph6(ref) == G


@settings(max_examples=200)
@given(graphs(min_n=0, max_n=10))
def test_graph6_round_trip_random(G):
    s = to_graph6(G)
    assert s == nx.to_graph6_bytes(nx_graph(G), header=False).decode().strip()
    assert parse_graph6(s) == G


def test_graph6_order_headers():
    for n in (62, 63, 100):
        text = to_graph6(empty(n))
        assert text == nx.to_graph6_bytes(nx.empty_graph(n), header=False).decode().strip()
        assert parse_graph6(text).n == n
    assert _encode_order(258047) == "~" + "".join(chr(63 + (258047 >> s & 63)) for s in (12, 6, 0))
    assert _encode_order(258048) == "~~" + "".join(chr(63 + (258048 >> s & 63)) for s in range(30, -1, -6))
    with pytest.raises(Graph6Error):
        parse_graph6(to_graph6(empty(100)), max_order=99)


@pytest.mark.parametrize(
    "text, offset",
    [
        ("A!", 1),  # '!' is below 63
        ("C", 1),  # missing data bytes
        ("C~~", 2),  # one byte too many
        ("A`", 1),  # nonzero padding bit
        ("", 0),
    ],
)
def test_graph6_errors_carry_offsets(text, offset):
    with pytest.raises(Graph6Error) as info:
        parse_graph6(text)
    assert info.value.offset == offset
