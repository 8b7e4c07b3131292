"""Dense undirected simple graphs stored as per-vertex neighbour bitmasks.

Vertex ``v`` of a graph ``G`` has neighbourhood ``G.rows[v]``, an ``int`` whose
bit ``u`` is set iff ``uv`` is an edge.  Graphs are immutable; every
constructor returns a fresh object.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field

import numpy as np

from .errors import PreconditionError

Block = tuple[int, ...]


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_of(mask: int) -> list[int]:
    """Sorted vertex indices of the set bits in ``mask``."""
    return list(_bits(mask))


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]
    # Ordered construction partition (join core first), set by build_family.
    blocks: tuple[Block, ...] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.rows) != self.n:
            raise ValueError(f"need {self.n} adjacency rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full or row < 0:
                raise ValueError(f"row {v} references a vertex outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in _bits(row):
                if not self.rows[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_networkx(cls, g) -> Graph:
        nodes = sorted(g.nodes())
        index = {v: i for i, v in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[u], index[v]) for u, v in g.edges()))

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return bits_of(self.rows[v])

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    @property
    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, row in enumerate(self.rows):
            for v in _bits(row >> (u + 1)):
                yield u, u + 1 + v

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, row in enumerate(self.rows):
            a[u, bits_of(row)] = 1
        return a

    def induced_subgraph(self, vertices: Sequence[int]) -> Graph:
        """Subgraph on ``vertices``, relabelled ``0..len-1`` in the given order."""
        pos = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            rows.append(mask_of(pos[u] for u in _bits(self.rows[v]) if u in pos))
        return Graph(len(vertices), tuple(rows))

    def remove_vertices(self, removed: Iterable[int]) -> tuple[Graph, list[int]]:
        """``G - removed`` plus the original label of each surviving vertex."""
        gone = set(removed)
        keep = [v for v in range(self.n) if v not in gone]
        return self.induced_subgraph(keep), keep


def _check_vertex_set(G: Graph, vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        if not 0 <= v < G.n:
            raise PreconditionError(f"vertex {v} not in V(G) (n={G.n})", "vertex_range")
        if m >> v & 1:
            raise PreconditionError(f"duplicate vertex {v}", "vertex_duplicate")
        m |= 1 << v
    return m


def complete(n: int) -> Graph:
    if n < 0:
        raise PreconditionError("n must be nonnegative", "n_nonnegative")
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def empty(n: int) -> Graph:
    """``n`` isolated vertices, i.e. nK_1."""
    return Graph(n, (0,) * n)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    return Graph(g1.n + g2.n, g1.rows + tuple(r << shift for r in g2.rows))


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two parts."""
    shift = g1.n
    left = g1.vertex_mask
    right = g2.vertex_mask << shift
    rows = tuple(r | right for r in g1.rows) + tuple((r << shift) | left for r in g2.rows)
    return Graph(g1.n + g2.n, rows)


def build_family(s: int, clique_sizes: Sequence[int]) -> Graph:
    """K_s joined with the disjoint union of cliques of the given sizes.

    The result carries its construction blocks: the K_s block first, then the
    cliques in the order given, where a run of consecutive equal-size cliques
    (e.g. the 2K_1 in K_3 v (K_7 u 2K_1)) forms a single block.
    """
    if s < 0:
        raise PreconditionError("s must be nonnegative", "s_nonnegative")
    if any(c < 1 for c in clique_sizes):
        raise PreconditionError("clique sizes must be positive", "clique_positive")
    rest = empty(0)
    for c in clique_sizes:
        rest = disjoint_union(rest, complete(c))
    g = join(complete(s), rest)
    blocks = [tuple(range(s))] if s else []
    start = s
    prev = None
    for c in clique_sizes:
        span = tuple(range(start, start + c))
        if c == prev:
            blocks[-1] += span
        else:
            blocks.append(span)
        prev = c
        start += c
    return Graph(g.n, g.rows, tuple(blocks))


def complement(G: Graph) -> Graph:
    full = G.vertex_mask
    return Graph(G.n, tuple(full & ~r & ~(1 << v) for v, r in enumerate(G.rows)))


def component_masks(rows: Sequence[int], alive: int) -> list[int]:
    """Connected components of the subgraph induced by ``alive``, as bitmasks,
    ordered by smallest member."""
    comps = []
    while alive:
        seed = alive & -alive
        comp = seed
        frontier = seed
        while frontier:
            reach = 0
            for v in _bits(frontier):
                reach |= rows[v]
            frontier = reach & alive & ~comp
            comp |= frontier
        comps.append(comp)
        alive &= ~comp
    return comps


def odd_components_mask(rows: Sequence[int], alive: int) -> int:
    return sum(1 for c in component_masks(rows, alive) if c.bit_count() & 1)


def components(G: Graph, removed: Iterable[int] = ()) -> list[Block]:
    """Components of ``G - removed`` in ascending order of smallest member."""
    gone = _check_vertex_set(G, removed)
    return [tuple(bits_of(c)) for c in component_masks(G.rows, G.vertex_mask & ~gone)]


def odd_component_count(G: Graph, S: Iterable[int] = ()) -> int:
    """o(G - S): number of components of ``G - S`` with an odd number of vertices."""
    gone = _check_vertex_set(G, S)
    return odd_components_mask(G.rows, G.vertex_mask & ~gone)


def is_connected(G: Graph) -> bool:
    if G.n == 0:
        raise PreconditionError("connectivity is undefined for the empty graph", "n_positive")
    return len(component_masks(G.rows, G.vertex_mask)) == 1
