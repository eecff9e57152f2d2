"""Chains and their (0,1)-string encoding.

A chain ``v_0, ..., v_k`` has each ``v_i`` (``i >= 2``) adjacent either to
``v_{i-1}`` alone among its predecessors, or to all predecessors except
``v_{i-1}``. Its string is ``s_1 ... s_k`` with ``s_i = '0'`` exactly when
``v_i ~ v_{i-1}``. Strings are plain ``str`` over ``'0'`` and ``'1'``; the
empty string is the one-vertex chain.
"""

from __future__ import annotations

from collections.abc import Sequence

from .graph import Graph, GraphError


class ChainError(ValueError):
    """A vertex sequence is not a chain, or a string is not over {0,1}."""

    def __init__(self, message: str, index: int | None = None) -> None:
        super().__init__(message)
        self.index = index


def check_bitstring(s: str) -> str:
    if not set(s) <= {"0", "1"}:
        raise ChainError(f"not a (0,1)-string: {s!r}")
    return s


def string_to_graph(s: str) -> Graph:
    """The graph induced by the chain whose string is ``s`` (``|s| + 1`` vertices)."""
    check_bitstring(s)
    rows = [0]
    for i, letter in enumerate(s, start=1):
        if letter == "0":
            nb = 1 << (i - 1)
        else:
            nb = (1 << (i - 1)) - 1
        for v in range(i):
            if nb >> v & 1:
                rows[v] |= 1 << i
        rows.append(nb)
    return Graph(len(s) + 1, tuple(rows))


def extend_chain_graph(g: Graph, s: str) -> Graph:
    """Append the chain vertices for letters ``s`` after the last vertex of ``g``.

    ``g`` must be ``string_to_graph(t)`` for some ``t``; the result is
    ``string_to_graph(t + s)`` built without redoing the prefix.
    """
    rows = list(g.adj)
    for letter in s:
        i = len(rows)
        if letter == "0":
            nb = 1 << (i - 1)
        elif letter == "1":
            nb = (1 << (i - 1)) - 1
        else:
            raise ChainError(f"not a (0,1)-string: {s!r}")
        for v in range(i):
            if nb >> v & 1:
                rows[v] |= 1 << i
        rows.append(nb)
    return Graph(len(rows), tuple(rows))


def chain_to_string(g: Graph, order: Sequence[int]) -> str:
    """Inverse of :func:`string_to_graph` for a chain given as a vertex order."""
    if sorted(order) != list(range(g.order)):
        raise GraphError("order must list every vertex of g exactly once")
    letters = []
    for i in range(1, len(order)):
        v = order[i]
        letter = "0" if g.has_edge(v, order[i - 1]) else "1"
        want = letter == "1"
        for j in range(i - 1):
            if g.has_edge(v, order[j]) != want:
                raise ChainError(f"chain condition violated at index {i}", index=i)
        letters.append(letter)
    return "".join(letters)


def complement_string(s: str) -> str:
    check_bitstring(s)
    return s.translate(str.maketrans("01", "10"))


def power(s: str, k: int) -> str:
    if k < 0:
        raise ValueError("repetition count must be non-negative")
    return s * k
