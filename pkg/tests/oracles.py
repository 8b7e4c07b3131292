"""Independent brute-force oracles used to freeze and cross-check values."""

from __future__ import annotations

from itertools import combinations

import networkx as nx
import numpy as np

from kextend.graph import Graph


def nx_graph(G: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(G.n))
    h.add_edges_from(G.edges())
    return h


def q_eigvalsh(G: Graph) -> float:
    A = nx.to_numpy_array(nx_graph(G), nodelist=range(G.n))
    Q = np.diag(A.sum(axis=1)) + A
    return float(np.linalg.eigvalsh(Q)[-1]) if G.n else 0.0


def all_matchings(G: Graph, k: int) -> list[tuple]:
    """Every set of k pairwise disjoint edges, by filtering all k-subsets of E."""
    out = []
    for combo in combinations(sorted(G.edges()), k):
        verts = [v for e in combo for v in e]
        if len(set(verts)) == 2 * k:
            out.append(combo)
    return out


def count_matchings(G: Graph, k: int) -> int:
    """Same filter as ``all_matchings`` on vertex bitmasks, fast enough for every 8-vertex graph."""
    masks = [(1 << u) | (1 << v) for u, v in G.edges()]
    count = 0
    for combo in combinations(masks, k):
        covered = 0
        for m in combo:
            if covered & m:
                break
            covered |= m
        else:
            count += 1
    return count


def perfect_matchings(G: Graph) -> list[frozenset]:
    """All 1-factors by recursion on the smallest uncovered vertex."""
    result = []

    def rec(free: list[int], acc: list[tuple[int, int]]) -> None:
        if not free:
            result.append(frozenset(acc))
            return
        u = free[0]
        for v in free[1:]:
            if G.has_edge(u, v):
                rec([w for w in free if w not in (u, v)], acc + [(u, v)])

    if G.n % 2 == 0:
        rec(list(range(G.n)), [])
    return result


def k_extendable(G: Graph, k: int) -> bool:
    pms = perfect_matchings(G)
    if not pms:
        return False
    return all(any(set(M) <= pm for pm in pms) for M in all_matchings(G, k))


def odd_components(G: Graph, S) -> int:
    h = nx_graph(G)
    h.remove_nodes_from(S)
    return sum(len(c) % 2 for c in nx.connected_components(h))


def deficiency_sets(G: Graph, k: int) -> list[tuple[int, ...]]:
    """Every S with k independent edges in G[S] and o(G - S) > |S| - 2k, in (size, lex) order."""
    h = nx_graph(G)
    found = []
    for size in range(2 * k, G.n + 1):
        for S in combinations(range(G.n), size):
            if k and len(nx.max_weight_matching(h.subgraph(S), maxcardinality=True)) < k:
                continue
            if odd_components(G, S) > size - 2 * k:
                found.append(S)
    return found
