"""Ramsey and Turán computations for 3-uniform Berge hypergraphs."""

from .berge import (
    BergeCertificate,
    BergeClique,
    BergeCycle,
    BergeOf,
    FamilySpec,
    check_certificate,
    find_berge,
    find_berge_clique,
    find_berge_copy,
    find_berge_cycle,
    lift_shadow_clique,
    lift_shadow_cycle,
    parse_family,
)
from .hypergraph import Hypergraph, complete
from .shadow import ColoredHypergraph

__version__ = "0.1.0"
