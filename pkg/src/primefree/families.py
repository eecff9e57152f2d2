"""The ten unavoidable prime families at parameter ``n``.

Every generated graph uses the same labeling: ``v_1..v_n`` are vertices
``0..n-1``, ``u_1..u_n`` are ``n..2n-1`` and the extra vertex ``w`` (when the
family has one) is ``2n``. For the subdivided star the ``v`` block holds the
subdivision vertices, the ``u`` block the leaves and ``w`` the centre. For the
line graph of ``K_{2,n}`` with sides ``{a, b}`` and ``{1..n}``, ``v_i`` is the
edge ``a-i`` and ``u_i`` the edge ``b-i``.

The half-graph and ``H'`` have no complement member: their complements
contain graphs of the same type on two fewer vertices.
"""

from __future__ import annotations

import enum
from collections.abc import Sequence

from .containment import is_l_free
from .graph import Graph, GraphError, complement
from .primality import is_prime

MIN_PARAMETER = 3


class FamilyKind(enum.Enum):
    SubdividedStar = "subdivided-star"
    SubdividedStarComplement = "subdivided-star-complement"
    LineOfK2n = "line-k2n"
    LineOfK2nComplement = "line-k2n-complement"
    ThinSpider = "thin-spider"
    ThinSpiderComplement = "thin-spider-complement"
    HalfGraph = "half-graph"
    HPrime = "h-prime"
    HStar = "h-star"
    HStarComplement = "h-star-complement"

    @property
    def cli_name(self) -> str:
        return self.value

    @classmethod
    def from_name(cls, name: str) -> FamilyKind:
        for kind in cls:
            if name in (kind.name, kind.value):
                return kind
        raise ValueError(f"unknown family kind {name!r}")


# fixed tag order; l_free_family_member reports the first L-free kind
FAMILY_ORDER: tuple[FamilyKind, ...] = tuple(FamilyKind)


def _v(i: int) -> int:
    return i


def _u(n: int, i: int) -> int:
    return n + i


def subdivided_star(n: int) -> Graph:
    w = 2 * n
    edges = [(w, _v(i)) for i in range(n)] + [(_v(i), _u(n, i)) for i in range(n)]
    return Graph.from_edges(2 * n + 1, edges)


def line_graph_k2n(n: int) -> Graph:
    edges = [(_v(i), _u(n, i)) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            edges += [(_v(i), _v(j)), (_u(n, i), _u(n, j))]
    return Graph.from_edges(2 * n, edges)


def _u_clique(n: int) -> list[tuple[int, int]]:
    return [(_u(n, i), _u(n, j)) for i in range(n) for j in range(i + 1, n)]


def _half_edges(n: int) -> list[tuple[int, int]]:
    return [(_v(i), _u(n, j)) for i in range(n) for j in range(i, n)]


def thin_spider(n: int) -> Graph:
    return Graph.from_edges(2 * n, [(_v(i), _u(n, i)) for i in range(n)] + _u_clique(n))


def half_graph(n: int) -> Graph:
    """Bipartite: ``v_i ~ u_j`` iff ``i <= j``."""
    return Graph.from_edges(2 * n, _half_edges(n))


def h_prime(n: int) -> Graph:
    w = 2 * n
    edges = [(w, _v(i)) for i in range(n)] + _half_edges(n) + _u_clique(n)
    return Graph.from_edges(2 * n + 1, edges)


def h_star(n: int) -> Graph:
    w = 2 * n
    edges = [(w, _v(0))] + _half_edges(n) + _u_clique(n)
    return Graph.from_edges(2 * n + 1, edges)


_BUILDERS = {
    FamilyKind.SubdividedStar: (subdivided_star, False),
    FamilyKind.SubdividedStarComplement: (subdivided_star, True),
    FamilyKind.LineOfK2n: (line_graph_k2n, False),
    FamilyKind.LineOfK2nComplement: (line_graph_k2n, True),
    FamilyKind.ThinSpider: (thin_spider, False),
    FamilyKind.ThinSpiderComplement: (thin_spider, True),
    FamilyKind.HalfGraph: (half_graph, False),
    FamilyKind.HPrime: (h_prime, False),
    FamilyKind.HStar: (h_star, False),
    FamilyKind.HStarComplement: (h_star, True),
}


def generate_family(kind: FamilyKind, n: int, *, allow_small: bool = False) -> Graph:
    """The member of ``kind`` at parameter ``n``.

    ``allow_small`` lifts the ``n >= 3`` guard; below it the graphs need not
    be prime and are only useful in tests.
    """
    if n < MIN_PARAMETER and not (allow_small and n >= 1):
        raise GraphError(f"family parameter must be at least {MIN_PARAMETER}, got {n}")
    build, flip = _BUILDERS[kind]
    g = build(n)
    return complement(g) if flip else g


def family_set(n: int, *, check: bool = __debug__) -> list[Graph]:
    members = [generate_family(kind, n) for kind in FAMILY_ORDER]
    if check:
        for kind, g in zip(FAMILY_ORDER, members):
            assert is_prime(g), f"{kind.name}({n}) is not prime"
    return members


def l_free_family_member(forbidden: Sequence[Graph], n: int) -> FamilyKind | None:
    """First kind, in tag order, whose member at ``n`` is L-free."""
    if n < MIN_PARAMETER:
        raise GraphError(f"family parameter must be at least {MIN_PARAMETER}, got {n}")
    for kind in FAMILY_ORDER:
        free, _ = is_l_free(generate_family(kind, n), forbidden)
        if free:
            return kind
    return None
