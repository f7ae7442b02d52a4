"""
Seeded random PLFun generation
"""

from fractions import Fraction

from config import DEFAULT_DENOMINATOR, DEFAULT_MAX_BREAKS

from .plfun import PLFun, Piece


def _grid_breaks(rng, max_breaks, denominator):
    k = rng.randint(0, min(max_breaks, denominator - 1))
    inner = sorted(rng.sample(range(1, denominator), k))
    return [Fraction(0)] + [Fraction(i, denominator) for i in inner] + [Fraction(1)]


def random_plfun(rng, max_breaks=DEFAULT_MAX_BREAKS, denominator=DEFAULT_DENOMINATOR, step_only=False):
    """
    Random PLFun with at most max_breaks interior breakpoints on the
    1/denominator grid. Each piece starts and ends at grid values drawn as
    one sorted sequence, so the result is monotone with upward jumps only.
    """
    cuts = _grid_breaks(rng, max_breaks, denominator)
    count = len(cuts) - 1
    values = sorted(Fraction(rng.randint(0, denominator), denominator) for _ in range(2 * count))
    pieces = []
    for i, (lo, hi) in enumerate(zip(cuts, cuts[1:])):
        start, end = values[2 * i], values[2 * i + 1]
        if step_only or rng.random() < 0.3:
            end = start
        b = (end - start) / (hi - lo)
        pieces.append(Piece(lo, hi, start - b * lo, b))
    return PLFun(pieces)


def random_step_plfun(rng, max_breaks=DEFAULT_MAX_BREAKS, denominator=DEFAULT_DENOMINATOR):
    return random_plfun(rng, max_breaks=max_breaks, denominator=denominator, step_only=True)
