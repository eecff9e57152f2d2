"""Brute-force reference implementations.

Used to cross-check the fast paths and to seed the census. Nothing here
touches the primality, containment or family code: the oracle only shares
:class:`Graph` and :func:`canonical_form` with the rest of the package.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from .graph import Graph, GraphError, canonical_form, graph_from_canonical

MAX_CATALOG_ORDER = 7
MAX_NAIVE_PRIME_ORDER = 16


@dataclass(frozen=True)
class GraphCatalog:
    order: int
    members: tuple[Graph, ...]

    def __len__(self) -> int:
        return len(self.members)


def _pattern_graph(k: int, pairs: Sequence[tuple[int, int]], bits: int) -> Graph:
    rows = [0] * k
    for i, (u, v) in enumerate(pairs):
        if bits >> i & 1:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    return Graph(k, tuple(rows))


@lru_cache(maxsize=None)
def enumerate_all_graphs(k: int) -> GraphCatalog:
    """Every isomorphism class of ``k``-vertex graphs, sorted by canonical form.

    All ``2**(k(k-1)/2)`` adjacency patterns are scanned. Only those whose
    degree sequence is non-increasing in vertex order get canonicalised: every
    class has such a labeling (sort vertices by degree), so no class is lost.
    """
    if not 1 <= k <= MAX_CATALOG_ORDER:
        raise GraphError(f"catalog order must be in 1..{MAX_CATALOG_ORDER}, got {k}")
    pairs = list(combinations(range(k), 2))
    patterns = np.arange(1 << len(pairs), dtype=np.int64)
    degrees = np.zeros((k, patterns.size), dtype=np.int8)
    for i, (u, v) in enumerate(pairs):
        bit = ((patterns >> i) & 1).astype(np.int8)
        degrees[u] += bit
        degrees[v] += bit
    keep = np.ones(patterns.size, dtype=bool)
    for i in range(k - 1):
        keep &= degrees[i] >= degrees[i + 1]
    forms = {canonical_form(_pattern_graph(k, pairs, int(bits))) for bits in patterns[keep]}
    return GraphCatalog(k, tuple(graph_from_canonical(f) for f in sorted(forms)))


def naive_is_prime(g: Graph) -> bool:
    """Scan every vertex subset ``X`` with ``2 <= |X| < order`` for homogeneity."""
    n = g.order
    if n > MAX_NAIVE_PRIME_ORDER:
        raise GraphError(f"naive primality limited to order {MAX_NAIVE_PRIME_ORDER}")
    for size in range(2, n):
        for xs in combinations(range(n), size):
            inside = set(xs)
            homogeneous = True
            for w in range(n):
                if w in inside:
                    continue
                seen = {g.has_edge(w, x) for x in xs}
                if len(seen) == 2:
                    homogeneous = False
                    break
            if homogeneous:
                return False
    return True


def naive_is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.order != h.order or g.size != h.size:
        return False
    n = g.order
    h_edges = {frozenset(e) for e in h.edges()}
    for perm in permutations(range(n)):
        if all(frozenset((perm[u], perm[v])) in h_edges for u, v in g.edges()):
            return True
    return False


def naive_contains(pattern: Graph, host: Graph) -> bool:
    """Induced containment by trying every host subset and every bijection."""
    k = pattern.order
    for vs in combinations(range(host.order), k):
        for perm in permutations(vs):
            if all(pattern.has_edge(i, j) == host.has_edge(perm[i], perm[j])
                   for i, j in combinations(range(k), 2)):
                return True
    return False


def naive_primes_up_to(forbidden: Sequence[Graph], k: int) -> dict[int, list[Graph]]:
    """Prime L-free graphs of each order ``1..k``, one per isomorphism class."""
    if k > MAX_CATALOG_ORDER:
        raise GraphError(f"naive census limited to order {MAX_CATALOG_ORDER}")
    for i, h in enumerate(forbidden):
        if h.order < 1:
            raise GraphError(f"forbidden graph {i} has no vertices")
    result = {}
    for order in range(1, k + 1):
        result[order] = [
            g for g in enumerate_all_graphs(order).members
            if naive_is_prime(g) and not any(naive_contains(h, g) for h in forbidden)
        ]
    return result
