"""Decide whether a class of graphs with finitely many forbidden induced
subgraphs contains infinitely many prime graphs, and list them when it does not."""

from .census import CensusResult, next_order_candidates, run_census
from .chains import chain_to_string, complement_string, power, string_to_graph
from .containment import find_induced_embedding, is_l_free
from .decider import (
    Decision,
    FamilyWitness,
    Outcome,
    PeriodicChain,
    chain_length_bound,
    decide,
    pattern_bound_n,
    verify_certificate,
)
from .families import FamilyKind, family_set, generate_family, l_free_family_member
from .graph import (
    Graph,
    are_isomorphic,
    canonical_form,
    complement,
    cycle,
    induced_subgraph,
    parse_graph6,
    path,
    star,
    write_graph6,
)
from .primality import find_homogeneous_set, is_prime, minimal_module_closure
from .representations import (
    enumerate_representations,
    extract_period,
    reconstruct_graph,
    representation_occurs_in,
    string_contains_graph,
)

__version__ = "0.1.0"
