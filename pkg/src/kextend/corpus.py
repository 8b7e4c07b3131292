"""Graph corpora for sweeps: exhaustive small orders and seeded random graphs."""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from functools import lru_cache

import numpy as np

from .errors import BudgetExceeded
from .graph import Graph, is_connected
from .matching import has_one_factor

EDGE_PROBABILITIES = (0.3, 0.5, 0.8)
EXHAUSTIVE_MAX_ORDER = 8


@lru_cache(maxsize=None)
def _atlas(n: int) -> tuple[Graph, ...]:
    import networkx as nx

    return tuple(Graph.from_networkx(g) for g in nx.graph_atlas_g() if g.number_of_nodes() == n)


def _certificate(G: Graph) -> bytes:
    import pynauty

    adj = {v: G.neighbors(v) for v in range(G.n)}
    return pynauty.certificate(pynauty.Graph(G.n, adjacency_dict=adj))


@lru_cache(maxsize=None)
def _all_graphs(n: int) -> tuple[Graph, ...]:
    """One graph per isomorphism class on ``n`` vertices.

    Orders up to 7 come from the networkx graph atlas.  Order 8 is grown from
    order 7 by adding a vertex with every possible neighbourhood (each graph
    on 8 vertices arises that way from a vertex-deleted subgraph), deduplicated
    with nauty certificates via the optional ``pynauty`` package.
    """
    if n <= 7:
        return _atlas(n)
    if n > EXHAUSTIVE_MAX_ORDER:
        raise BudgetExceeded(f"exhaustive enumeration is capped at n={EXHAUSTIVE_MAX_ORDER}")
    try:
        import pynauty  # noqa: F401
    except ImportError as exc:
        raise BudgetExceeded("exhaustive n=8 needs the optional pynauty package") from exc
    seen: dict[bytes, Graph] = {}
    for base in _all_graphs(n - 1):
        for nbrs in range(1 << (n - 1)):
            rows = [r | ((nbrs >> v & 1) << (n - 1)) for v, r in enumerate(base.rows)]
            G = Graph(n, tuple(rows) + (nbrs,))
            seen.setdefault(_certificate(G), G)
    return tuple(sorted(seen.values(), key=lambda g: (g.num_edges, g.rows)))


def exhaustive_graphs(n: int, connected: bool = True) -> list[Graph]:
    """Every graph of order ``n`` up to isomorphism (connected ones by default)."""
    graphs = _all_graphs(n)
    if connected:
        return [g for g in graphs if g.n > 0 and is_connected(g)]
    return list(graphs)


def random_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    iu, ju = np.triu_indices(n, 1)
    keep = rng.random(len(iu)) < p
    return Graph.from_edges(n, zip(iu[keep].tolist(), ju[keep].tolist()))


def random_connected_graphs(
    n: int,
    count: int,
    seed: int,
    probabilities: Sequence[float] = EDGE_PROBABILITIES,
    require_one_factor: bool = False,
    distinct: bool = False,
) -> Iterator[Graph]:
    """``count`` connected Erdos-Renyi graphs, cycling through ``probabilities``.

    Rejected draws are skipped without advancing the probability cycle, so the
    stream is a pure function of the arguments.  ``distinct`` also rejects
    repeats of an already generated labelled graph.
    """
    rng = np.random.default_rng(seed)
    seen: set[tuple[int, ...]] = set()
    made = 0
    while made < count:
        p = probabilities[made % len(probabilities)]
        G = random_graph(n, p, rng)
        if not is_connected(G):
            continue
        if require_one_factor and not has_one_factor(G):
            continue
        if distinct:
            if G.rows in seen:
                continue
            seen.add(G.rows)
        made += 1
        yield G
