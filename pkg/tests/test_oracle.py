import pytest

from primefree.graph import Graph, GraphError, canonical_form, cycle
from primefree.oracle import (
    enumerate_all_graphs,
    naive_contains,
    naive_is_prime,
    naive_primes_up_to,
)

from .conftest import C5, K3, P4


@pytest.mark.parametrize("k, count", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)])
def test_catalog_counts(k, count):
    assert len(enumerate_all_graphs(k)) == count


@pytest.mark.slow
def test_catalog_order_7():
    assert len(enumerate_all_graphs(7)) == 1044


def test_catalog_order_3_classes():
    sizes = sorted(g.size for g in enumerate_all_graphs(3).members)
    assert sizes == [0, 1, 2, 3]


def test_catalog_members_distinct():
    members = enumerate_all_graphs(5).members
    assert len({canonical_form(g) for g in members}) == len(members)


def test_catalog_range():
    for k in (0, 8):
        with pytest.raises(GraphError):
            enumerate_all_graphs(k)


def test_naive_is_prime():
    assert naive_is_prime(P4)
    assert not naive_is_prime(K3)
    assert naive_is_prime(C5)
    with pytest.raises(GraphError):
        naive_is_prime(Graph.empty(17))


def test_naive_contains():
    assert naive_contains(P4, C5)
    assert not naive_contains(C5, P4)
    assert not naive_contains(K3, cycle(6))


def test_naive_primes_cographs():
    lists = naive_primes_up_to([P4], 6)
    assert all(not lists[k] for k in range(3, 7))
    assert len(lists[1]) == 1 and len(lists[2]) == 2


def test_naive_primes_unrestricted():
    lists = naive_primes_up_to([], 5)
    assert canonical_form(C5) in {canonical_form(g) for g in lists[5]}
    assert [len(lists[k]) for k in range(1, 6)] == [1, 2, 0, 1, 4]


def test_naive_primes_forbid_vertex():
    assert all(not gs for gs in naive_primes_up_to([Graph.empty(1)], 4).values())
