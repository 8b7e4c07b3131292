"""Maximum matching (Edmonds' blossom algorithm) and size-k matching enumeration."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator

from .errors import BudgetExceeded, PreconditionError
from .graph import Graph, bits_of

Edge = tuple[int, int]
Matching = tuple[Edge, ...]

MATCHING_BUDGET = 10**8


def _normalize(edges: Iterable[Edge]) -> Matching:
    return tuple(sorted((min(u, v), max(u, v)) for u, v in edges))


def validate_matching(G: Graph, M: Iterable[Edge]) -> Matching:
    M = _normalize(M)
    used: set[int] = set()
    for u, v in M:
        if not (0 <= u < G.n and 0 <= v < G.n) or u == v or not G.has_edge(u, v):
            raise PreconditionError(f"({u}, {v}) is not an edge of G", "matching_edge")
        if u in used or v in used:
            raise PreconditionError(f"edges of the matching share a vertex at ({u}, {v})", "matching_disjoint")
        used.update((u, v))
    return M


def _mate_array(G: Graph) -> list[int]:
    n = G.n
    adj = [bits_of(r) for r in G.rows]
    mate = [-1] * n
    # Greedy start in index order; augmentation below makes it maximum.
    for v in range(n):
        if mate[v] == -1:
            for u in adj[v]:
                if mate[u] == -1:
                    mate[u], mate[v] = v, u
                    break

    for root in range(n):
        if mate[root] != -1:
            continue
        parent = [-1] * n
        base = list(range(n))
        in_tree = [False] * n
        in_tree[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if mate[a] == -1:
                    break
                a = parent[mate[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[mate[b]]

        def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[mate[v]]] = True
                parent[v] = child
                child = mate[v]
                v = parent[mate[v]]

        end = -1
        while queue and end == -1:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    b = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, b, to, blossom)
                    mark_path(to, b, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = b
                            if not in_tree[i]:
                                in_tree[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mate[to] == -1:
                        end = to
                        break
                    in_tree[mate[to]] = True
                    queue.append(mate[to])

        v = end
        while v != -1:
            pv = parent[v]
            nxt = mate[pv]
            mate[v], mate[pv] = pv, v
            v = nxt
    return mate


def maximum_matching(G: Graph) -> Matching:
    """A maximum-cardinality matching; deterministic for a fixed vertex order."""
    mate = _mate_array(G)
    return tuple((v, mate[v]) for v in range(G.n) if mate[v] > v)


def matching_number(G: Graph) -> int:
    return len(maximum_matching(G))


def has_one_factor(G: Graph) -> bool:
    if G.n % 2:
        return False
    return matching_number(G) * 2 == G.n


def enumerate_matchings(G: Graph, k: int, budget: int = MATCHING_BUDGET) -> Iterator[Matching]:
    """Every matching with exactly ``k`` edges, once each, in lexicographic order.

    Depth-first over the lexicographically sorted edge list, extending only with
    later edges.  Raises ``BudgetExceeded`` once more than ``budget`` matchings
    have been produced.
    """
    if k < 0:
        raise PreconditionError("k must be nonnegative", "k_nonnegative")
    edges = list(G.edges())
    m = len(edges)
    chosen: list[Edge] = []
    produced = 0

    def extend(start: int, used: int) -> Iterator[Matching]:
        nonlocal produced
        if len(chosen) == k:
            produced += 1
            if produced > budget:
                raise BudgetExceeded(f"more than {budget} matchings of size {k}")
            yield tuple(chosen)
            return
        need = k - len(chosen)
        for i in range(start, m - need + 1):
            u, v = edges[i]
            if used >> u & 1 or used >> v & 1:
                continue
            chosen.append((u, v))
            yield from extend(i + 1, used | 1 << u | 1 << v)
            chosen.pop()

    yield from extend(0, 0)


def extends_to_one_factor(G: Graph, M: Iterable[Edge]) -> bool:
    """Whether the matching ``M`` is contained in some 1-factor of ``G``."""
    M = validate_matching(G, M)
    covered = {v for e in M for v in e}
    rest, _ = G.remove_vertices(covered)
    return has_one_factor(rest)
