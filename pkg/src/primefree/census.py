"""Order-by-order listing of the prime graphs of Free(L).

Every prime graph on ``k >= 3`` vertices has a prime induced subgraph on
``k - 1`` or ``k - 2`` vertices, and the only primes without one on ``k - 1``
are the half-graph of height ``k/2`` and its complement. So order ``k`` is
obtained from the complete list at order ``k - 1`` by one-vertex extensions,
plus those two graphs when ``k`` is even. Free(L) is hereditary, so the
L-free primes of order ``k`` all extend L-free primes of order ``k - 1``.
Two consecutive empty orders mean no larger primes exist.

Orders 1 to 5 are seeded from the brute-force catalog.

For classes with many primes the lists can be capped per order
(``per_order_limit``). A capped list keeps the sparsest graphs, ties broken
by canonical form; every order grown from it is then marked incomplete, and
an incomplete empty order never triggers halting.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .containment import extension_is_l_free, is_l_free
from .families import half_graph
from .graph import (Graph, GraphError, canonical_form, complement, graph_from_canonical,
                    write_graph6)
from .oracle import naive_primes_up_to
from .primality import extension_is_prime, is_prime

SEED_ORDER = 5
MIN_GROWTH_ORDER = SEED_ORDER + 1


@dataclass
class CensusResult:
    by_order: dict[int, list[Graph]] = field(default_factory=dict)
    halted: bool = False
    last_order: int = 0
    truncated: set[int] = field(default_factory=set)
    incomplete: set[int] = field(default_factory=set)

    def is_complete(self, k: int) -> bool:
        return k not in self.incomplete

    def counts(self) -> dict[int, int]:
        return {k: len(gs) for k, gs in sorted(self.by_order.items())}

    def empty_orders(self) -> list[int]:
        return [k for k, gs in sorted(self.by_order.items()) if not gs]


def _critical_primes(k: int) -> list[Graph]:
    if k % 2 or k < 4:
        return []
    h = half_graph(k // 2)
    return [h, complement(h)]


def next_order_candidates(primes_prev: Sequence[Graph], k: int) -> list[Graph]:
    """All one-vertex extensions of ``primes_prev`` plus the order-``k`` critical primes.

    Deduplicated by canonical form and sorted by it; no primality or
    L-freeness filtering happens here.
    """
    if k < MIN_GROWTH_ORDER:
        raise GraphError(f"growth starts at order {MIN_GROWTH_ORDER}, got {k}")
    forms = {}
    for g in primes_prev:
        if g.order != k - 1:
            raise GraphError(f"expected graphs of order {k - 1}, got order {g.order}")
        for nb in range(1 << g.order):
            forms.setdefault(canonical_form(g.add_vertex(nb)), None)
    for g in _critical_primes(k):
        forms.setdefault(canonical_form(g), None)
    return [graph_from_canonical(f) for f in sorted(forms)]


def _grow_one(args: tuple[Graph, tuple[Graph, ...]]) -> set[bytes]:
    g, forbidden = args
    found = set()
    for nb in range(1 << g.order):
        if not extension_is_prime(g, nb):
            continue
        h = g.add_vertex(nb)
        if extension_is_l_free(h, forbidden, g.order):
            found.add(canonical_form(h))
    return found


def grow_order(primes_prev: Sequence[Graph], k: int, forbidden: Sequence[Graph],
               workers: int = 1) -> list[Graph]:
    """Prime L-free graphs of order ``k``, given the complete list at ``k - 1``.

    Same result as filtering :func:`next_order_candidates`, but candidates are
    rejected before canonicalisation: an extension of a prime is prime unless
    the new vertex sees nothing, everything, or has a twin, and an extension
    of an L-free graph can only pick up embeddings through the new vertex.
    """
    forbidden = tuple(forbidden)
    tasks = [(g, forbidden) for g in primes_prev]
    forms: set[bytes] = set()
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for found in pool.map(_grow_one, tasks, chunksize=max(1, len(tasks) // (4 * workers))):
                forms |= found
    else:
        for task in tasks:
            forms |= _grow_one(task)
    for g in _critical_primes(k):
        if is_prime(g) and is_l_free(g, forbidden)[0]:
            forms.add(canonical_form(g))
    return [graph_from_canonical(f) for f in sorted(forms)]


def _seed(forbidden: Sequence[Graph]) -> dict[int, list[Graph]]:
    seeded = naive_primes_up_to(forbidden, SEED_ORDER)
    return {k: sorted(gs, key=canonical_form) for k, gs in seeded.items()}


def run_census(forbidden: Sequence[Graph], max_order: int,
               per_order_limit: int | None = None, workers: int = 1,
               progress=None) -> CensusResult:
    """List prime L-free graphs order by order until two consecutive orders are empty.

    Stops at ``max_order`` with ``halted = False`` otherwise. ``progress`` is
    called with ``(order, count)`` after each order.
    """
    if max_order < MIN_GROWTH_ORDER:
        raise GraphError(f"max_order must be at least {MIN_GROWTH_ORDER}")
    if per_order_limit is not None and per_order_limit < 1:
        raise ValueError("per_order_limit must be positive")
    for i, h in enumerate(forbidden):
        if h.order < 1:
            raise GraphError(f"forbidden graph {i} has no vertices")

    result = CensusResult()
    seeds = _seed(forbidden)

    def record(k: int, graphs: list[Graph], complete: bool) -> bool:
        if per_order_limit is not None and len(graphs) > per_order_limit:
            kept = sorted(graphs, key=lambda g: (g.size, canonical_form(g)))[:per_order_limit]
            graphs = sorted(kept, key=canonical_form)
            result.truncated.add(k)
        result.by_order[k] = graphs
        result.last_order = k
        if not complete:
            result.incomplete.add(k)
        if progress is not None:
            progress(k, len(graphs))
        prev = k - 1
        return (k >= 2 and not graphs and not result.by_order.get(prev)
                and result.is_complete(k) and result.is_complete(prev))

    for k in range(1, SEED_ORDER + 1):
        if record(k, seeds[k], True):
            result.halted = True
            return result
    for k in range(MIN_GROWTH_ORDER, max_order + 1):
        prev = k - 1
        complete = result.is_complete(prev) and prev not in result.truncated
        graphs = grow_order(result.by_order[prev], k, forbidden, workers)
        if record(k, graphs, complete):
            result.halted = True
            return result
    return result


def iter_census_lines(result: CensusResult) -> Iterable[str]:
    for k, graphs in sorted(result.by_order.items()):
        note = ""
        if k in result.truncated:
            note = ", truncated"
        elif k in result.incomplete:
            note = ", incomplete"
        yield f"# order {k} (count {len(graphs)}{note})"
        for g in graphs:
            yield write_graph6(g)
