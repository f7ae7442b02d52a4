"""
Multinomial lattices L(v) and their embedding into L^d(I)
"""

from .words import (
    ALPHABET,
    Word,
    words,
    multinomial_size,
    bottom_word,
    top_word,
    word_leq,
    word_leq_fast,
    inversions,
    word_order_discrepancies,
)
from .embedding import LEFT, RIGHT, word_path, iota_v, identity_tuple, adjoint_approx, christoffel

__all__ = [
    'ALPHABET',
    'Word',
    'words',
    'multinomial_size',
    'bottom_word',
    'top_word',
    'word_leq',
    'word_leq_fast',
    'inversions',
    'word_order_discrepancies',
    'LEFT',
    'RIGHT',
    'word_path',
    'iota_v',
    'identity_tuple',
    'adjoint_approx',
    'christoffel',
]
