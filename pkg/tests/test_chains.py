from itertools import product

import pytest

from primefree.chains import (
    ChainError,
    chain_to_string,
    complement_string,
    extend_chain_graph,
    power,
    string_to_graph,
)
from primefree.graph import Graph, canonical_form, complement, induced_subgraph
from primefree.primality import is_prime

from .conftest import K2, K3, P3


def strings(max_len: int, min_len: int = 0):
    for n in range(min_len, max_len + 1):
        for letters in product("01", repeat=n):
            yield "".join(letters)


def test_single_letter():
    assert string_to_graph("0") == K2
    assert string_to_graph("1") == Graph.empty(2)
    assert string_to_graph("") == Graph.empty(1)


def test_path_chain():
    assert string_to_graph("00") == P3


def test_different_strings_same_graph():
    a, b = string_to_graph("011000"), string_to_graph("001000")
    assert a != b and canonical_form(a) == canonical_form(b)


def test_definition_adjacency():
    s = "0110100"
    g = string_to_graph(s)
    for i in range(1, len(s) + 1):
        assert g.has_edge(i, i - 1) == (s[i - 1] == "0")
        for j in range(i - 1):
            assert g.has_edge(i, j) == (s[i - 1] == "1")


def test_chain_to_string_examples():
    assert chain_to_string(K2, [0, 1]) == "0"
    assert chain_to_string(P3, [0, 1, 2]) == "00"
    with pytest.raises(ChainError) as err:
        chain_to_string(K3, [2, 0, 1])
    assert err.value.index == 2


def test_bijection_round_trip():
    for s in strings(12):
        g = string_to_graph(s)
        assert chain_to_string(g, list(range(g.order))) == s


def test_complement_duality():
    for s in strings(12):
        assert string_to_graph(complement_string(s)) == complement(string_to_graph(s))


def test_complement_string_examples():
    assert complement_string("0") == "1"
    assert complement_string("00") == "11"
    assert string_to_graph("11") == Graph.from_edges(3, [(0, 2)])
    assert complement_string("010101") == "101010"


def test_power():
    assert power("01", 3) == "010101"
    assert power("0110", 0) == ""
    assert power("011", 2) == "011011"
    with pytest.raises(ValueError):
        power("0", -1)


def test_incremental_build():
    for s in strings(6):
        for t in strings(3):
            assert extend_chain_graph(string_to_graph(s), t) == string_to_graph(s + t)


def test_bad_letters():
    with pytest.raises(ChainError):
        string_to_graph("012")


def test_long_chains_trim_to_prime():
    # a chain of length n > 3 drops one vertex to a prime chain of length n - 1
    for s in strings(8, min_len=4):
        g = string_to_graph(s)
        found = False
        for drop in range(g.order):
            h = induced_subgraph(g, [v for v in range(g.order) if v != drop])
            try:
                chain_to_string(h, list(range(h.order)))
            except ChainError:
                continue
            if is_prime(h):
                found = True
                break
        assert found, s
