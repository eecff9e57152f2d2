"""Decide whether Free(L) contains infinitely many non-isomorphic prime graphs.

Let ``n = max(3, largest order in L)``. The answer is INFINITE when

* some member of the ten prime families at parameter ``n`` is L-free (such a
  class then contains the members at every larger parameter), or
* some string ``S`` with ``1 <= |S| <= cap`` has ``S^(2n-1)`` L-free; then
  every power of ``S`` is L-free and long chains trim to primes.

Otherwise Free(L) has no chain longer than :func:`chain_length_bound` and,
since every large prime graph contains a family member or a long prime
chain, only finitely many primes. The default cap ``2**n`` is the stated
bound on the period; ``"proof"`` selects ``2**(n-2)``, the bound the
pigeonhole construction actually delivers. Both are sound.

Only L-free strings can have L-free powers, and L-freeness of chain strings
is inherited by prefixes, so candidates are grown letter by letter and
pruned as soon as they contain a forbidden graph. Candidates are tried by
length, then lexicographically with ``'0' < '1'``, which makes the reported
period the least witness regardless of how many worker processes test it.
"""

from __future__ import annotations

import enum
import json
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Union

from .chains import extend_chain_graph, power, string_to_graph
from .containment import embeds_through, extension_is_l_free, is_l_free
from .families import FamilyKind, generate_family, l_free_family_member
from .graph import Graph, GraphError
from .primality import is_prime

MIN_N = 3
VERIFY_EXTRA_POWERS = 5


class Outcome(str, enum.Enum):
    INFINITE = "INFINITE"
    FINITE = "FINITE"


@dataclass(frozen=True)
class FamilyWitness:
    kind: FamilyKind
    n: int

    def to_dict(self) -> dict:
        return {"type": "family", "kind": self.kind.name, "n": self.n}


@dataclass(frozen=True)
class PeriodicChain:
    period: str
    power_checked: int

    def to_dict(self) -> dict:
        return {"type": "periodic_chain", "period": self.period,
                "power_checked": self.power_checked}


Certificate = Union[FamilyWitness, PeriodicChain]


@dataclass(frozen=True)
class Decision:
    outcome: Outcome
    n: int
    certificate: Certificate | None = None
    chain_length: int | None = None
    period_cap: int | None = None

    @property
    def infinite(self) -> bool:
        return self.outcome is Outcome.INFINITE

    def to_dict(self) -> dict:
        return {
            "outcome": self.outcome.value,
            "n": self.n,
            "certificate": self.certificate.to_dict() if self.certificate else None,
            "bounds": None if self.chain_length is None else {"chain_length": self.chain_length},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _check_forbidden(forbidden: Sequence[Graph]) -> None:
    for i, h in enumerate(forbidden):
        if h.order < 1:
            raise GraphError(f"forbidden graph {i} has no vertices")


def pattern_bound_n(forbidden: Sequence[Graph]) -> int:
    _check_forbidden(forbidden)
    return max([MIN_N] + [h.order for h in forbidden])


def chain_length_bound(n: int) -> int:
    """Length below which every chain string of an L-free class must stay.

    Uses ``(n-1)(4^n-1)/3 + 1`` sections, an integer that dominates the
    ``(n-1)4^n/3 + 1`` the pigeonhole step needs.
    """
    if n < MIN_N:
        raise GraphError(f"n must be at least {MIN_N}, got {n}")
    sections = (n - 1) * (4 ** n - 1) // 3 + 1
    return sections * (2 ** (n - 2) + n - 1)


def resolve_period_cap(n: int, period_cap: str | int = "stated") -> int:
    if period_cap == "stated":
        return 2 ** n
    if period_cap == "proof":
        return 2 ** (n - 2)
    if isinstance(period_cap, str):
        raise ValueError(f"unknown period cap {period_cap!r}")
    if period_cap < 1:
        raise ValueError("period cap must be at least 1")
    return period_cap


def powers_are_l_free(s: str, forbidden: Sequence[Graph], copies: int,
                      assume_first: bool = False) -> bool:
    """Whether ``string_to_graph(s * k)`` is L-free for every ``k <= copies``.

    The chain graph grows one copy of ``s`` at a time and only embeddings
    through the new vertices are searched, so a hit stops the check early.
    """
    g = string_to_graph(s)
    if not assume_first and not is_l_free(g, forbidden)[0]:
        return False
    for _ in range(copies - 1):
        start = g.order
        g = extend_chain_graph(g, s)
        for v in range(start, g.order):
            if any(embeds_through(h, g, v) for h in forbidden):
                return False
    return True


def _test_chunk(args: tuple[list[str], tuple[Graph, ...], int]) -> int | None:
    candidates, forbidden, copies = args
    for i, s in enumerate(candidates):
        if powers_are_l_free(s, forbidden, copies, assume_first=True):
            return i
    return None


def _first_periodic(candidates: list[str], forbidden: tuple[Graph, ...], copies: int,
                    pool: ProcessPoolExecutor | None, workers: int) -> str | None:
    if pool is None or len(candidates) < 2 * workers:
        hit = _test_chunk((candidates, forbidden, copies))
        return None if hit is None else candidates[hit]
    size = -(-len(candidates) // workers)
    chunks = [candidates[i:i + size] for i in range(0, len(candidates), size)]
    results = pool.map(_test_chunk, [(c, forbidden, copies) for c in chunks])
    # reduce by minimum index, not by completion order
    for offset, hit in zip(range(0, len(candidates), size), results):
        if hit is not None:
            return candidates[offset + hit]
    return None


def find_periodic_string(forbidden: Sequence[Graph], n: int, cap: int,
                         workers: int = 1) -> str | None:
    """Least ``S`` (by length, then lexicographically) with ``S^(2n-1)`` L-free."""
    forbidden = tuple(forbidden)
    copies = 2 * n - 1
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        # strings of the current length whose chain graph is L-free, in lex order
        level: list[tuple[str, Graph]] = [("", string_to_graph(""))]
        for _ in range(cap):
            nxt = []
            for s, g in level:
                for letter in "01":
                    h = extend_chain_graph(g, letter)
                    if extension_is_l_free(h, forbidden, h.order - 1):
                        nxt.append((s + letter, h))
            level = nxt
            if not level:
                return None
            hit = _first_periodic([s for s, _ in level], forbidden, copies, pool, workers)
            if hit is not None:
                return hit
        return None
    finally:
        if pool is not None:
            pool.shutdown()


def decide(forbidden: Sequence[Graph], period_cap: str | int = "stated",
           workers: int = 1) -> Decision:
    _check_forbidden(forbidden)
    n = pattern_bound_n(forbidden)
    cap = resolve_period_cap(n, period_cap)
    kind = l_free_family_member(forbidden, n)
    if kind is not None:
        return Decision(Outcome.INFINITE, n, FamilyWitness(kind, n), period_cap=cap)
    period = find_periodic_string(forbidden, n, cap, workers)
    if period is not None:
        return Decision(Outcome.INFINITE, n, PeriodicChain(period, 2 * n - 1), period_cap=cap)
    return Decision(Outcome.FINITE, n, chain_length=chain_length_bound(n), period_cap=cap)


def verify_certificate(decision: Decision, forbidden: Sequence[Graph]) -> bool:
    """Re-check an INFINITE certificate from scratch.

    A family member must be prime and L-free. A period must satisfy the
    power-``(2n-1)`` premise and stay L-free up to power ``2n+4``.
    """
    cert = decision.certificate
    n = decision.n
    if decision.outcome is not Outcome.INFINITE or cert is None:
        return False
    if isinstance(cert, FamilyWitness):
        g = generate_family(cert.kind, cert.n)
        return is_prime(g) and is_l_free(g, forbidden)[0]
    period = cert.period
    if not 1 <= len(period) <= 2 ** n or cert.power_checked != 2 * n - 1:
        return False
    for k in range(1, 2 * n + VERIFY_EXTRA_POWERS):
        if not is_l_free(string_to_graph(power(period, k)), forbidden)[0]:
            return False
    return True
