"""Representations of graphs inside chains.

Pick vertices ``v_{i_1}, ..., v_{i_n}`` (increasing indices) of a chain.
Each chosen vertex after the first contributes its chain letter, preceded by
``'|'`` when at least one chain vertex was skipped since the previous chosen
one. The resulting word over ``{0, 1, |}`` is a *representation* of the
induced graph. Its *blocks* are the maximal ``{0,1}`` runs; a leading ``'|'``
means the first block is empty.

A string contains a graph iff it contains one of the graph's representations,
i.e. the blocks occur as substrings in order with at least one unused letter
between consecutive blocks. :func:`string_contains_graph` can decide
containment either that way or by direct embedding search.

:func:`extract_period` turns a long L-free string into a short string whose
every power is L-free, following the pigeonhole construction: cut the string
into 1-disjoint sections, find a section missing some block of every
representation of every forbidden graph, and inside it take the stretch
between two occurrences of a repeated ``(n-2)``-letter word.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from functools import lru_cache
from itertools import product

from .chains import check_bitstring, power, string_to_graph
from .containment import find_induced_embedding
from .graph import Graph, GraphError, canonical_form


class RepresentationError(ValueError):
    """A word over {0,1,|} violates the representation invariants."""


class PeriodExtractionError(ValueError):
    """``extract_period`` called outside its preconditions."""


def check_representation(r: str) -> str:
    if not set(r) <= {"0", "1", "|"}:
        raise RepresentationError(f"symbol outside {{0,1,|}} in {r!r}")
    if "||" in r:
        raise RepresentationError(f"{r!r} contains '||'")
    if r.endswith("|"):
        raise RepresentationError(f"{r!r} ends with '|'")
    return r


def blocks(r: str) -> list[str]:
    """Blocks in order; a leading ``'|'`` yields an empty first block."""
    return check_representation(r).split("|")


def reconstruct_graph(r: str) -> Graph:
    """The graph a representation stands for, on vertices ``w_1..w_n`` = ``0..n-1``."""
    check_representation(r)
    rows = [0]
    gap = False
    for symbol in r:
        if symbol == "|":
            gap = True
            continue
        i = len(rows)
        if gap:
            nb = 0 if symbol == "0" else (1 << i) - 1
        else:
            nb = 1 << (i - 1) if symbol == "0" else (1 << (i - 1)) - 1
        gap = False
        for v in range(i):
            if nb >> v & 1:
                rows[v] |= 1 << i
        rows.append(nb)
    return Graph(len(rows), tuple(rows))


def _candidate_words(n: int) -> Iterator[str]:
    for letters in product("01", repeat=n - 1):
        for bars in product((False, True), repeat=n - 1):
            yield "".join(("|" if bar else "") + x for x, bar in zip(letters, bars))


@lru_cache(maxsize=4096)
def _representations_of_form(form: bytes, n: int) -> tuple[str, ...]:
    found = [w for w in _candidate_words(n) if canonical_form(reconstruct_graph(w)) == form]
    return tuple(sorted(found))


def enumerate_representations(g: Graph) -> tuple[str, ...]:
    """Every representation of ``g``, sorted lexicographically.

    Exhausts the ``4**(n-1)`` words with ``n - 1`` letters, each letter
    optionally preceded by ``'|'``.
    """
    if g.order < 1:
        raise GraphError("graphs without vertices have no representations")
    return _representations_of_form(canonical_form(g), g.order)


def place_blocks(r: str, s: str) -> list[int] | None:
    """1-based start positions of the blocks of ``r`` in ``s``, or ``None``.

    Greedy leftmost placement. It is exact: if any valid placement exists,
    shifting each block to its leftmost admissible occurrence only loosens the
    constraint on the next block. An empty first block sits at position 1
    with length 0, so the next block starts at position 2 or later.
    """
    check_bitstring(s)
    positions = []
    start = 1
    for block in blocks(r):
        if block:
            idx = s.find(block, start - 1)
            if idx < 0:
                return None
            p = idx + 1
        else:
            p = start
        positions.append(p)
        start = p + len(block) + 1
    return positions


def representation_occurs_in(r: str, s: str) -> bool:
    return place_blocks(r, s) is not None


def string_contains_graph(g: Graph, s: str, route: str = "auto", check: bool = False) -> bool:
    """Whether ``g`` is an induced subgraph of the chain graph of ``s``.

    ``route`` is ``"direct"`` (embedding search in ``string_to_graph(s)``),
    ``"representation"`` or ``"auto"``, which uses representations once the
    chain is much larger than the pattern. With ``check`` both routes run and
    must agree.
    """
    if g.order < 1:
        raise GraphError("pattern must have at least one vertex")
    check_bitstring(s)
    if route == "auto":
        route = "representation" if len(s) > 4 * g.order and g.order <= 6 else "direct"
    if route == "direct":
        result = find_induced_embedding(g, string_to_graph(s)) is not None
    elif route == "representation":
        result = any(representation_occurs_in(r, s) for r in enumerate_representations(g))
    else:
        raise ValueError(f"unknown route {route!r}")
    if check:
        other = "representation" if route == "direct" else "direct"
        assert result == string_contains_graph(g, s, other), (g, s)
    return result


def string_is_l_free(s: str, forbidden: Sequence[Graph], route: str = "auto") -> bool:
    return not any(string_contains_graph(h, s, route) for h in forbidden)


def section_count(n: int) -> int:
    """Number of sections the long string is cut into; an integer by construction."""
    return (n - 1) * (4 ** n - 1) // 3 + 1


def section_length(n: int) -> int:
    return 2 ** (n - 2) + n - 2


def extract_period(t: str, forbidden: Sequence[Graph], n: int | None = None) -> str:
    """A string ``S`` with ``1 <= |S| <= 2**(n-2)`` whose powers are all L-free.

    ``t`` must be an L-free string of length at least
    ``chain_length_bound(n)``; ``n`` defaults to ``pattern_bound_n(forbidden)``.
    """
    from .decider import chain_length_bound, pattern_bound_n

    check_bitstring(t)
    bound_n = pattern_bound_n(forbidden)
    if n is None:
        n = bound_n
    if n < bound_n:
        raise PeriodExtractionError(f"n = {n} is smaller than the largest forbidden order")
    need = chain_length_bound(n)
    if len(t) < need:
        raise PeriodExtractionError(f"string has length {len(t)}, need at least {need}")
    if not string_is_l_free(t, forbidden, route="representation"):
        raise PeriodExtractionError("input string contains a forbidden graph")

    reps = {r for h in forbidden for r in enumerate_representations(h)}
    block_sets = [blocks(r) for r in sorted(reps)]
    m = section_length(n)
    sections = [t[j * (m + 1): j * (m + 1) + m] for j in range(section_count(n))]

    chosen = None
    for section in sections:
        if all(any(b not in section for b in bs) for bs in block_sets):
            chosen = section
            break
    # the pigeonhole argument guarantees a section; failing here is a bug
    assert chosen is not None, "no section misses a block of every representation"

    width = n - 2
    first_seen: dict[str, int] = {}
    a1 = a2 = None
    for a in range(len(chosen) - width + 1):
        word = chosen[a:a + width]
        if word in first_seen:
            a1, a2 = first_seen[word], a
            break
        first_seen[word] = a
    assert a1 is not None and a2 is not None, "no repeated word in the chosen section"

    period = chosen[a1:a2]
    assert 1 <= len(period) <= 2 ** (n - 2)
    for k in range(1, 2 * n + 3):
        assert string_is_l_free(power(period, k), forbidden, route="representation"), (
            f"power {k} of extracted period {period!r} contains a forbidden graph"
        )
    return period
