"""Induced-subgraph embedding search and L-freeness."""

from __future__ import annotations

from collections.abc import Sequence

from .graph import Graph, GraphError


def _pattern_order(pattern: Graph) -> list[int]:
    """Pattern vertices, most constrained first.

    Highest degree starts; afterwards prefer vertices with most already-placed
    neighbours so candidate masks shrink as early as possible.
    """
    n = pattern.order
    remaining = set(range(n))
    order: list[int] = []
    placed = 0
    while remaining:
        v = max(remaining, key=lambda x: ((pattern.adj[x] & placed).bit_count(),
                                          pattern.degree(x), -x))
        order.append(v)
        placed |= 1 << v
        remaining.remove(v)
    return order


def _degree_filter(pattern: Graph, host: Graph) -> list[int]:
    """Host vertices admissible for each pattern vertex.

    A host vertex ``h`` can image pattern vertex ``p`` only if it has at least
    ``deg(p)`` neighbours and ``order(pattern) - 1 - deg(p)`` non-neighbours.
    """
    hdeg = [row.bit_count() for row in host.adj]
    masks = []
    for p in range(pattern.order):
        d = pattern.degree(p)
        nd = pattern.order - 1 - d
        m = 0
        for h in range(host.order):
            if hdeg[h] >= d and host.order - 1 - hdeg[h] >= nd:
                m |= 1 << h
        masks.append(m)
    return masks


def _search(pattern: Graph, host: Graph, fixed: dict[int, int] | None = None
            ) -> list[int] | None:
    n = pattern.order
    if n > host.order:
        return None
    if n == 0:
        return []
    allowed = _degree_filter(pattern, host)
    order = _pattern_order(pattern)
    full = host.vertex_mask
    hadj = host.adj
    padj = pattern.adj
    mapping = [-1] * n
    if fixed:
        for p, h in fixed.items():
            if not allowed[p] >> h & 1:
                return None
        # put the fixed pattern vertices first so every branch respects them
        order = list(fixed) + [p for p in order if p not in fixed]

    def candidates(depth: int, used: int) -> int:
        p = order[depth]
        mask = allowed[p] & ~used
        for q in order[:depth]:
            h = mapping[q]
            if padj[p] >> q & 1:
                mask &= hadj[h]
            else:
                mask &= full ^ hadj[h]
        return mask

    def extend(depth: int, used: int) -> bool:
        if depth == n:
            return True
        p = order[depth]
        mask = candidates(depth, used)
        if fixed and p in fixed:
            mask &= 1 << fixed[p]
        while mask:
            low = mask & -mask
            mapping[p] = low.bit_length() - 1
            if extend(depth + 1, used | low):
                return True
            mask ^= low
        mapping[p] = -1
        return False

    if extend(0, 0):
        return mapping
    return None


def find_induced_embedding(pattern: Graph, host: Graph) -> list[int] | None:
    """Injective map ``pattern -> host`` preserving adjacency and non-adjacency.

    Returns ``None`` when the pattern is not an induced subgraph of the host.
    The search is deterministic; each pattern vertex takes its lowest feasible
    host vertex first.
    """
    return _search(pattern, host)


def embeds_through(pattern: Graph, host: Graph, vertex: int) -> bool:
    """Whether some induced embedding of ``pattern`` uses host ``vertex``."""
    return any(_search(pattern, host, {p: vertex}) is not None for p in range(pattern.order))


def is_embedding(pattern: Graph, host: Graph, mapping: Sequence[int]) -> bool:
    if len(mapping) != pattern.order or len(set(mapping)) != len(mapping):
        return False
    for i in range(pattern.order):
        for j in range(i + 1, pattern.order):
            if pattern.has_edge(i, j) != host.has_edge(mapping[i], mapping[j]):
                return False
    return True


def _check_patterns(forbidden: Sequence[Graph]) -> None:
    for i, h in enumerate(forbidden):
        if h.order < 1:
            raise GraphError(f"forbidden graph {i} has no vertices")


def first_contained(g: Graph, forbidden: Sequence[Graph]) -> int | None:
    """Least index of a member of ``forbidden`` that is an induced subgraph of ``g``."""
    _check_patterns(forbidden)
    for i, h in enumerate(forbidden):
        if find_induced_embedding(h, g) is not None:
            return i
    return None


def is_l_free(g: Graph, forbidden: Sequence[Graph]) -> tuple[bool, int | None]:
    """``(True, None)`` if ``g`` is L-free, else ``(False, least violating index)``."""
    hit = first_contained(g, forbidden)
    return hit is None, hit


def extension_is_l_free(g: Graph, forbidden: Sequence[Graph], vertex: int) -> bool:
    """L-freeness of ``g`` given that ``g - vertex`` is already L-free."""
    _check_patterns(forbidden)
    return not any(embeds_through(h, g, vertex) for h in forbidden)
