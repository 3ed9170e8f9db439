"""Heyting algebras of Dyck paths, their interval-logic counterpart and
down-set algebras of interval posets."""

from .birkhoff import (
    IntervalAntichain,
    StatsRecord,
    antichain_join,
    antichain_meet,
    antichain_neg,
    atom,
    from_antichain,
    join_irreducible,
    stats_formula,
    stats_geometric,
    to_antichain,
)
from .dyck import DyckError, DyckPath, enumerate_paths, features, join, leq, meet, parse_word
from .heyting import (
    Composition,
    CrossingSet,
    closure,
    composition_to_regular,
    crossing_set,
    is_regular,
    pseudocomplement,
    refinement_covers,
    regular_to_composition,
    rel_pseudocomplement,
)
from .itl import (
    cdf,
    dyck_to_theta,
    equivalent,
    evaluate,
    in_theta,
    is_valid,
    parse_formula,
    theta_to_dyck,
    to_text,
)
from .posets import (
    DownSet,
    FinitePoset,
    downset_lattice,
    ds_implies,
    ds_pseudo,
    intervals_poset,
    is_isomorphic,
    lattice_atoms,
    parse_poset,
)

__version__ = "0.1.0"
