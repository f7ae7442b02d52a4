"""
Clopen tuples over a quantale and the lattice L^d(Q)
"""

from .tuples import (
    TupleD,
    Classification,
    couples,
    triples,
    bottom_tuple,
    top_tuple,
    is_closed,
    is_open,
    is_compatible,
    is_clopen,
    classify,
    triple_is_open_by_mix,
    dual,
)
from .closure import closure, interior, closure_oracle, interior_oracle, subdivisions
from .lattice import (
    ClopenLattice,
    Enumeration,
    JOIN,
    MEET,
    lattice_op,
    enumerate_clopen,
    brute_force_join,
    brute_force_meet,
    cover_relation,
    rank_profile,
    verify_lattice_ops,
    to_dot,
)

__all__ = [
    'TupleD',
    'Classification',
    'couples',
    'triples',
    'bottom_tuple',
    'top_tuple',
    'is_closed',
    'is_open',
    'is_compatible',
    'is_clopen',
    'classify',
    'triple_is_open_by_mix',
    'dual',
    'closure',
    'interior',
    'closure_oracle',
    'interior_oracle',
    'subdivisions',
    'ClopenLattice',
    'Enumeration',
    'JOIN',
    'MEET',
    'lattice_op',
    'enumerate_clopen',
    'brute_force_join',
    'brute_force_meet',
    'cover_relation',
    'rank_profile',
    'verify_lattice_ops',
    'to_dot',
]
