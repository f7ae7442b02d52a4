"""
Paths in I^d, their clopen tuples, ji(p) generators and SVG output
"""

from .path import (
    PathD,
    PathReport,
    Violation,
    validate_path,
    ensure_valid_path,
    path_to_tuple,
    tuple_to_path,
    membership_holds,
    roundtrip_check,
    path_leq,
)
from .generators import make_ji, generation_join, random_staircase, random_path
from .svg import render_svg

__all__ = [
    'PathD',
    'PathReport',
    'Violation',
    'validate_path',
    'ensure_valid_path',
    'path_to_tuple',
    'tuple_to_path',
    'membership_holds',
    'roundtrip_check',
    'path_leq',
    'make_ji',
    'generation_join',
    'random_staircase',
    'random_path',
    'render_svg',
]
