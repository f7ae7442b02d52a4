"""
Exact piecewise-linear interval quantale
"""

from .plfun import (
    Piece,
    PLFun,
    PLFunUpper,
    parse_rational,
    format_rational,
    one_step,
    upper_step,
    lower_envelope,
    upper_envelope,
    eval,
    join,
    meet,
    compare,
)
from .quantale import (
    IntervalQuantale,
    INTERVAL,
    meetof,
    joinof,
    radj,
    ladj,
    star,
    star_via_meetof,
    tensor,
    oplus,
    oplus_via_star,
    oplus_checked,
    is_join_prime_candidate,
)
from .sampling import random_plfun, random_step_plfun

__all__ = [
    'Piece',
    'PLFun',
    'PLFunUpper',
    'parse_rational',
    'format_rational',
    'one_step',
    'upper_step',
    'lower_envelope',
    'upper_envelope',
    'eval',
    'join',
    'meet',
    'compare',
    'IntervalQuantale',
    'INTERVAL',
    'meetof',
    'joinof',
    'radj',
    'ladj',
    'star',
    'star_via_meetof',
    'tensor',
    'oplus',
    'oplus_via_star',
    'oplus_checked',
    'is_join_prime_candidate',
    'random_plfun',
    'random_step_plfun',
]
