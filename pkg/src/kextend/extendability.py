"""Exact k-extendability deciders and violating-set witnesses.

Two independent routes:

* direct: every size-k matching is tested for extension to a 1-factor;
* deficiency scan: search for S with k independent edges inside G[S] and
  o(G - S) > |S| - 2k.

The scan enumerates candidate sets by increasing size and, within a size, in
lexicographic order, so the first violator found is the canonical witness.
Vertices with identical neighbourhoods (twins) are interchangeable under an
automorphism, so by default only the lexicographically first representative of
each twin-count pattern is examined; this keeps joins of large cliques cheap.
"""

from __future__ import annotations

import math
from collections import defaultdict
from collections.abc import Iterator
from dataclasses import dataclass
from itertools import combinations

from .errors import BudgetExceeded, PreconditionError
from .graph import Graph, bits_of, mask_of, odd_components_mask
from .matching import (
    MATCHING_BUDGET,
    Matching,
    enumerate_matchings,
    has_one_factor,
    maximum_matching,
)

EXHAUSTIVE_MAX_N = 24


@dataclass(frozen=True)
class DeficiencyWitness:
    S: tuple[int, ...]
    odd_components: int
    matching_in_S: Matching
    k: int

    @property
    def size(self) -> int:
        return len(self.S)

    def to_dict(self) -> dict:
        return {
            "S": list(self.S),
            "size": self.size,
            "odd_components": self.odd_components,
            "k": self.k,
            "matching_in_S": [list(e) for e in self.matching_in_S],
        }


def _check_order_and_k(G: Graph, k: int) -> None:
    if G.n % 2:
        raise PreconditionError(f"order n={G.n} is odd", "n_odd")
    if not 0 <= k <= (G.n - 2) // 2:
        raise PreconditionError(f"k={k} outside 0..(n-2)/2 for n={G.n}", "k_range")


def unextendable_matching(G: Graph, k: int, budget: int = MATCHING_BUDGET) -> Matching | None:
    """A size-k matching contained in no 1-factor, or None if G is k-extendable.

    For k = 0 this is the 1-factor question itself: the empty matching is
    returned when G has no 1-factor.  For k >= 1 the graph must have a 1-factor.
    """
    _check_order_and_k(G, k)
    if k == 0:
        return None if has_one_factor(G) else ()
    if not has_one_factor(G):
        raise PreconditionError("G has no 1-factor, so k-extendability is undefined", "no_one_factor")
    verdicts: dict[int, bool] = {}
    full = G.vertex_mask
    for M in enumerate_matchings(G, k, budget=budget):
        covered = mask_of(v for e in M for v in e)
        ok = verdicts.get(covered)
        if ok is None:
            rest = G.induced_subgraph(bits_of(full & ~covered))
            ok = verdicts[covered] = has_one_factor(rest)
        if not ok:
            return M
    return None


def is_k_extendable_direct(G: Graph, k: int, budget: int = MATCHING_BUDGET) -> bool:
    return unextendable_matching(G, k, budget) is None


def twin_classes(G: Graph) -> list[tuple[int, ...]]:
    """Partition of V(G) into twin classes, ordered by smallest member.

    u, v are twins when N[u] = N[v] (adjacent) or N(u) = N(v) (non-adjacent);
    any permutation inside a class is an automorphism.  A vertex cannot have
    both kinds of twin, so the two relations combine into one partition.
    """
    closed: dict[int, list[int]] = defaultdict(list)
    open_: dict[int, list[int]] = defaultdict(list)
    for v, row in enumerate(G.rows):
        closed[row | 1 << v].append(v)
        open_[row].append(v)
    owner: dict[int, tuple[int, ...]] = {}
    for group in list(closed.values()) + list(open_.values()):
        if len(group) > 1:
            for v in group:
                owner[v] = tuple(group)
    classes = {owner.get(v, (v,)) for v in range(G.n)}
    return sorted(classes)


def _count_vectors(sizes: list[int], total: int) -> Iterator[list[int]]:
    if not sizes:
        if total == 0:
            yield []
        return
    head, rest = sizes[0], sizes[1:]
    room = sum(rest)
    for c in range(max(0, total - room), min(head, total) + 1):
        for tail in _count_vectors(rest, total - c):
            yield [c] + tail


def _candidates(G: Graph, size: int, classes: list[tuple[int, ...]] | None) -> Iterator[tuple[int, ...]]:
    if classes is None or all(len(c) == 1 for c in classes):
        yield from combinations(range(G.n), size)
        return
    sets = []
    for counts in _count_vectors([len(c) for c in classes], size):
        sets.append(tuple(sorted(v for c, m in zip(classes, counts) for v in c[:m])))
    yield from sorted(sets)


def _has_k_independent_edges(G: Graph, S: tuple[int, ...], smask: int, k: int) -> Matching | None:
    if k == 0:
        return ()
    taken = 0
    found = []
    for v in S:
        if taken >> v & 1:
            continue
        free = G.rows[v] & smask & ~taken
        if free:
            u = (free & -free).bit_length() - 1
            taken |= 1 << v | 1 << u
            found.append((min(u, v), max(u, v)))
            if len(found) == k:
                return tuple(sorted(found))
    sub = G.induced_subgraph(S)
    mm = maximum_matching(sub)
    if len(mm) < k:
        return None
    return tuple(sorted((S[a], S[b]) for a, b in mm[:k]))


def _scan(G: Graph, k: int, *, prune: bool, twins: bool, max_n: int) -> DeficiencyWitness | None:
    n = G.n
    classes = twin_classes(G) if twins else None
    space = math.prod(len(c) + 1 for c in classes) if classes else 2**n
    if space > 2**max_n:
        raise BudgetExceeded(
            f"subset scan needs {space} candidate sets, above the cap 2^{max_n}"
        )
    if prune:
        # n even: o(G-S) and |S| share parity, so a violation means
        # o >= |S| - 2k + 2, and o <= n - |S| bounds |S| from above.
        sizes = range(2 * k, (n + 2 * k - 2) // 2 + 1)
        slack = 2
    else:
        sizes = range(0, n + 1)
        slack = 1
    full = G.vertex_mask
    for size in sizes:
        need = max(size - 2 * k + slack, 0)
        for S in _candidates(G, size, classes):
            smask = mask_of(S)
            odd = odd_components_mask(G.rows, full & ~smask)
            if odd < need or odd <= size - 2 * k:
                continue
            edges = _has_k_independent_edges(G, S, smask, k)
            if edges is not None:
                return DeficiencyWitness(S, odd, edges, k)
    return None


def deficiency_witness(
    G: Graph,
    k: int,
    *,
    prune: bool = True,
    twins: bool = True,
    max_n: int = EXHAUSTIVE_MAX_N,
) -> DeficiencyWitness | None:
    """Smallest (then lexicographically first) S with k independent edges in
    G[S] and o(G - S) > |S| - 2k, or None when no such S exists.

    ``max_n`` caps the search at 2**max_n candidate sets after twin reduction.
    """
    if k == 0:
        raise PreconditionError(
            "the deficiency characterisation needs k >= 1; use has_one_factor for k = 0",
            "k_zero",
        )
    _check_order_and_k(G, k)
    return _scan(G, k, prune=prune, twins=twins, max_n=max_n)


def is_k_extendable_lemma(G: Graph, k: int, **kwargs) -> bool:
    return deficiency_witness(G, k, **kwargs) is None


def tutte_witness(
    G: Graph, *, prune: bool = True, twins: bool = True, max_n: int = EXHAUSTIVE_MAX_N
) -> DeficiencyWitness | None:
    """Smallest S with o(G - S) > |S| (no 1-factor), for even-order G."""
    if G.n % 2:
        raise PreconditionError(f"order n={G.n} is odd", "n_odd")
    return _scan(G, 0, prune=prune, twins=twins, max_n=max_n)
