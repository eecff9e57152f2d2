import json
from itertools import combinations, product

import pytest

from primefree.chains import power, string_to_graph
from primefree.containment import find_induced_embedding
from primefree.decider import (
    Decision,
    FamilyWitness,
    Outcome,
    PeriodicChain,
    chain_length_bound,
    decide,
    find_periodic_string,
    pattern_bound_n,
    powers_are_l_free,
    resolve_period_cap,
    verify_certificate,
)
from primefree.families import FamilyKind
from primefree.graph import Graph, GraphError, complement

from .conftest import C4, C5, CLAW, K2, K3, P4, classes_up_to


def naive_first_period(forbidden, n, cap):
    """Least S by length then lex with every forbidden graph absent from S^(2n-1)."""
    for m in range(1, cap + 1):
        for s in map("".join, product("01", repeat=m)):
            host = string_to_graph(power(s, 2 * n - 1))
            if all(find_induced_embedding(h, host) is None for h in forbidden):
                return s
    return None


ORDER_FOUR = [g for g in classes_up_to(4) if g.order == 4]


def test_pattern_bound_n():
    assert pattern_bound_n([P4]) == 4
    assert pattern_bound_n([]) == 3
    assert pattern_bound_n([K2, C5]) == 5
    with pytest.raises(GraphError):
        pattern_bound_n([Graph.empty(0)])


def test_chain_length_bound():
    assert chain_length_bound(3) == 172
    assert chain_length_bound(4) == 1792
    # 4 * 1023 // 3 + 1 = 1365 sections of length 12
    assert chain_length_bound(5) == 16380
    with pytest.raises(GraphError):
        chain_length_bound(2)


def test_period_caps():
    assert resolve_period_cap(4) == 16
    assert resolve_period_cap(4, "proof") == 4
    assert resolve_period_cap(4, 7) == 7
    with pytest.raises(ValueError):
        resolve_period_cap(4, 0)
    with pytest.raises(ValueError):
        resolve_period_cap(4, "tight")


class TestDecideExamples:
    def test_cographs(self):
        d = decide([P4])
        assert d.outcome is Outcome.FINITE
        assert d.chain_length == 1792 and d.certificate is None

    def test_claw_free(self):
        d = decide([CLAW])
        assert d.infinite
        assert d.certificate == FamilyWitness(FamilyKind.SubdividedStarComplement, 4)

    def test_edgeless(self):
        for m in range(1, 9):
            for s in map("".join, product("01", repeat=m)):
                assert string_to_graph(power(s, 5)).size > 0
        d = decide([K2])
        assert d.outcome is Outcome.FINITE and d.n == 3 and d.chain_length == 172

    def test_empty_list(self):
        assert decide([]).certificate == FamilyWitness(FamilyKind.SubdividedStar, 3)

    def test_periodic_witness(self):
        d = decide([K3, CLAW, C4])
        assert d.certificate == PeriodicChain("0", 7)
        assert verify_certificate(d, [K3, CLAW, C4])

    def test_ramsey(self):
        assert decide([K3, Graph.empty(3)]).outcome is Outcome.FINITE

    def test_errors(self):
        with pytest.raises(GraphError):
            decide([K2, Graph.empty(0)])
        with pytest.raises(ValueError):
            decide([K2], period_cap=0)


class TestJson:
    def test_finite_schema(self):
        doc = json.loads(decide([P4]).to_json())
        assert doc == {"outcome": "FINITE", "n": 4, "certificate": None,
                       "bounds": {"chain_length": 1792}}

    def test_family_schema(self):
        doc = json.loads(decide([]).to_json())
        assert doc["certificate"] == {"type": "family", "kind": "SubdividedStar", "n": 3}
        assert doc["bounds"] is None

    def test_periodic_schema(self):
        doc = json.loads(decide([K3, CLAW, C4]).to_json())
        assert doc["certificate"] == {"type": "periodic_chain", "period": "0", "power_checked": 7}

    def test_stable_bytes(self):
        assert decide([CLAW]).to_json() == decide([CLAW]).to_json()


class TestVerification:
    def test_rejects_finite(self):
        assert not verify_certificate(decide([P4]), [P4])

    def test_rejects_forged_period(self):
        forged = Decision(Outcome.INFINITE, 3, PeriodicChain("1", 5))
        assert not verify_certificate(forged, [K3, CLAW, C4])

    def test_rejects_forged_family(self):
        forged = Decision(Outcome.INFINITE, 3, FamilyWitness(FamilyKind.HalfGraph, 3))
        assert not verify_certificate(forged, [P4])

    def test_all_small_certificates(self):
        for r in (1, 2):
            for forbidden in combinations(classes_up_to(4)[1:], r):
                d = decide(list(forbidden))
                if d.infinite:
                    assert verify_certificate(d, list(forbidden))


def test_powers_check_matches_full_rebuild():
    for s in ("0", "01", "011", "0010"):
        for h in (K3, P4, C4, CLAW):
            direct = all(find_induced_embedding(h, string_to_graph(power(s, k))) is None
                         for k in range(1, 6))
            assert powers_are_l_free(s, [h], 5) == direct


def test_search_matches_brute_force():
    patterns = [g for g in classes_up_to(4) if g.order >= 2]
    periods = set()
    for r in (1, 2, 3):
        for forbidden in combinations(patterns, r):
            n = pattern_bound_n(forbidden)
            cap = 4 if n == 4 else 8
            expected = naive_first_period(forbidden, n, cap)
            assert find_periodic_string(forbidden, n, cap) == expected, forbidden
            periods.add(expected)
    assert {"0", "1", "01", None} <= periods


def test_complement_symmetry():
    for g in ORDER_FOUR:
        assert decide([g]).outcome == decide([complement(g)]).outcome


def test_proof_cap_agrees_with_stated():
    for r in (1, 2):
        for forbidden in combinations(classes_up_to(4)[1:], r):
            stated = decide(list(forbidden))
            proof = decide(list(forbidden), period_cap="proof")
            assert stated.outcome == proof.outcome, forbidden


def test_workers_do_not_change_result():
    cases = [[K3, CLAW, C4], [P4], [K3, Graph.empty(3)]]
    cases += [list(f) for f in combinations(ORDER_FOUR, 2)][:12]
    for forbidden in cases:
        outputs = {decide(forbidden, workers=w).to_json() for w in (1, 4)}
        assert len(outputs) == 1
    assert find_periodic_string([K3, CLAW, C4], 3, 8, workers=4) == "0"
