import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from primefree.containment import (
    embeds_through,
    extension_is_l_free,
    find_induced_embedding,
    is_embedding,
    is_l_free,
)
from primefree.families import thin_spider
from primefree.graph import Graph, GraphError, complement, induced_subgraph
from primefree.oracle import naive_contains

from .conftest import C5, CLAW, K3, P4, classes_up_to, graphs


def test_p4_in_c5():
    mapping = find_induced_embedding(P4, C5)
    assert mapping is not None and is_embedding(P4, C5, mapping)


def test_larger_pattern():
    assert find_induced_embedding(C5, P4) is None


def test_triangle_on_spider_body():
    spider = thin_spider(3)
    mapping = find_induced_embedding(K3, spider)
    assert mapping is not None
    assert set(mapping) == {3, 4, 5}  # the u-block


def test_empty_pattern_embeds_trivially():
    assert find_induced_embedding(Graph.empty(0), P4) == []


def test_is_l_free_examples():
    assert is_l_free(C5, [P4]) == (False, 0)
    assert is_l_free(C5, []) == (True, None)
    assert is_l_free(C5, [K3, CLAW, P4]) == (False, 2)


@pytest.mark.parametrize("n", range(3, 7))
def test_thin_spiders_claw_free(n):
    assert is_l_free(thin_spider(n), [CLAW]) == (True, None)


def test_zero_vertex_pattern_rejected():
    with pytest.raises(GraphError):
        is_l_free(P4, [Graph.empty(0)])


def test_agrees_with_oracle_on_classes():
    patterns = classes_up_to(4)
    hosts = classes_up_to(6)
    for h in patterns:
        for g in hosts:
            assert (find_induced_embedding(h, g) is not None) == naive_contains(h, g), (h, g)


@settings(max_examples=200)
@given(graphs(min_order=1, max_order=4), graphs(max_order=7))
def test_agrees_with_oracle_labeled(pattern, host):
    mapping = find_induced_embedding(pattern, host)
    assert (mapping is not None) == naive_contains(pattern, host)
    if mapping is not None:
        assert is_embedding(pattern, host, mapping)


@settings(max_examples=100)
@given(graphs(min_order=1, max_order=5), graphs(max_order=6))
def test_complement_duality(pattern, host):
    a = find_induced_embedding(pattern, host) is not None
    b = find_induced_embedding(complement(pattern), complement(host)) is not None
    assert a == b


def test_monotonicity_sampled():
    rnd = random.Random(7)
    classes = classes_up_to(6)
    small = classes_up_to(4)
    checked = 0
    while checked < 200:
        p = rnd.choice(small)
        h = rnd.choice(classes)
        if find_induced_embedding(p, h) is None:
            continue
        # grow h by a random vertex to get a supergraph
        h2 = h.add_vertex(rnd.getrandbits(h.order) if h.order else 0)
        assert find_induced_embedding(h, h2) is not None
        assert find_induced_embedding(p, h2) is not None
        checked += 1


@settings(max_examples=150)
@given(graphs(min_order=1, max_order=4), graphs(min_order=1, max_order=7), st.data())
def test_embeds_through(pattern, host, data):
    v = data.draw(st.integers(0, host.order - 1))
    rest = [w for w in range(host.order) if w != v]
    without = induced_subgraph(host, rest)
    through = embeds_through(pattern, host, v)
    anywhere = find_induced_embedding(pattern, host) is not None
    elsewhere = find_induced_embedding(pattern, without) is not None
    assert anywhere == (through or elsewhere)
    if not elsewhere:
        assert extension_is_l_free(host, [pattern], v) == (not anywhere)
