"""og4kit: four-valent oriented graph-group pairs and their cyclic normal quotients."""

from .classify import classify_independent, find_independent_quotients, reduce_to_base
from .families import (FamilySpec, cayley_pair, double_cover_pair, gamma_pair, gamma_plus_pair,
                       lex_cycle_pair)
from .graphcore import OrientedGraph
from .metacirc import check_weak_metacirculant, rho_quotient_status, verify_corollary_wm
from .ogpair import OrientedPair, check_og4, pair_isomorphic
from .permgroup import Partition, PermGroup, normal_subgroups
from .quotient import cyclic_quotient_census, independent, normal_quotient

__version__ = "0.1.0"

__all__ = [
    "FamilySpec", "OrientedGraph", "OrientedPair", "Partition", "PermGroup",
    "cayley_pair", "check_og4", "check_weak_metacirculant", "classify_independent",
    "cyclic_quotient_census", "double_cover_pair", "find_independent_quotients",
    "gamma_pair", "gamma_plus_pair", "independent", "lex_cycle_pair", "normal_quotient",
    "normal_subgroups", "pair_isomorphic", "reduce_to_base", "rho_quotient_status",
    "verify_corollary_wm",
]
