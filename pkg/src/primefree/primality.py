"""Homogeneous sets and primality.

A homogeneous set of ``g`` is a vertex set ``X`` with ``2 <= |X| < order``
such that every vertex outside ``X`` sees all of ``X`` or none of it. A graph
is prime when it has none. Graphs on at most two vertices are therefore prime
by the size bounds alone; nothing downstream relies on that convention since
only arbitrarily large primes matter to the decider.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, iter_bits


@dataclass(frozen=True)
class HomogeneousSetWitness:
    members: frozenset[int]

    def verify(self, g: Graph) -> bool:
        mask = sum(1 << v for v in self.members)
        if not 2 <= len(self.members) < g.order:
            return False
        return _splitter(g, mask) is None


def _splitter(g: Graph, mask: int) -> int | None:
    """Lowest vertex outside ``mask`` with both a neighbour and a non-neighbour in it."""
    outside = g.vertex_mask & ~mask
    for w in iter_bits(outside):
        seen = g.adj[w] & mask
        if seen and seen != mask:
            return w
    return None


def minimal_module_closure(g: Graph, u: int, v: int) -> frozenset[int]:
    """Smallest set containing ``u`` and ``v`` that no outside vertex splits.

    Violating vertices are absorbed lowest index first. The result does not
    depend on that order: any module containing ``{u, v}`` must contain every
    vertex absorbed along the way, and modules are closed under intersection.
    """
    for x in (u, v):
        if not 0 <= x < g.order:
            raise GraphError(f"vertex {x} out of range for order {g.order}")
    if u == v:
        raise GraphError("closure needs two distinct vertices")
    mask = 1 << u | 1 << v
    while (w := _splitter(g, mask)) is not None:
        mask |= 1 << w
    return frozenset(iter_bits(mask))


def _closure_mask(g: Graph, u: int, v: int) -> int:
    mask = 1 << u | 1 << v
    while (w := _splitter(g, mask)) is not None:
        mask |= 1 << w
    return mask


def find_homogeneous_set(g: Graph) -> HomogeneousSetWitness | None:
    full = g.vertex_mask
    for u in range(g.order):
        for v in range(u + 1, g.order):
            mask = _closure_mask(g, u, v)
            if mask != full:
                return HomogeneousSetWitness(frozenset(iter_bits(mask)))
    return None


def is_prime(g: Graph) -> bool:
    return find_homogeneous_set(g) is None


def extension_is_prime(g: Graph, neighborhood: int) -> bool:
    """Primality of ``g.add_vertex(neighborhood)`` for a prime ``g`` of order >= 3.

    A module of the extension meets ``V(g)`` in a module of ``g``, so it is
    either ``V(g)`` itself or a pair formed by the new vertex and a twin.
    """
    if neighborhood == 0 or neighborhood == g.vertex_mask:
        return False
    for w in range(g.order):
        if g.adj[w] & ~(1 << w) == neighborhood & ~(1 << w):
            return False
    return True
