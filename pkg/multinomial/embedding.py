"""
The embedding of L(v) into L^d(I), its adjoints and Christoffel words
"""

import logging
from fractions import Fraction

from clopen.tuples import TupleD, is_clopen
from config import DEFAULT_WORD_BUDGET
from errors import DomainError, InvariantViolation, NotClopenError, WordMismatchError
from geometry.path import PathD, path_to_tuple
from interval.plfun import PLFun
from interval.quantale import INTERVAL, IntervalQuantale

from .words import Word, words

logger = logging.getLogger(__name__)

LEFT = "left"
RIGHT = "right"


def word_path(w):
    """Staircase where the t-th letter k moves axis k by 1/v_k"""
    point = [Fraction(0)] * w.d
    vertices = [tuple(point)]
    for k in w.letters:
        point[k - 1] += Fraction(1, w.v[k - 1])
        vertices.append(tuple(point))
    return PathD.build(w.d, vertices)


def iota_v(w):
    return path_to_tuple(word_path(w))


def identity_tuple(d):
    return TupleD(INTERVAL, d, [PLFun.identity()] * (d * (d - 1) // 2))


def adjoint_approx(direction, v, f, budget=DEFAULT_WORD_BUDGET):
    """
    left: the least word w with f <= iota(w); right: the greatest w with
    iota(w) <= f. Found by scanning L(v); the extremal word is checked
    against every candidate.
    """
    v = tuple(v)
    if not isinstance(f.quantale, IntervalQuantale):
        raise DomainError(f"adjoints are defined on interval tuples, not {f.quantale.name}")
    if f.d != len(v):
        raise WordMismatchError(f"tuple has d={f.d} but v has {len(v)} letters")
    if not is_clopen(f):
        raise NotClopenError(f"tuple is not clopen: {f!r}")

    images = {w: iota_v(w) for w in words(v, budget)}
    if direction == LEFT:
        candidates = [w for w, g in images.items() if f.leq(g)]
        below = lambda a, b: images[a].leq(images[b])
    elif direction == RIGHT:
        candidates = [w for w, g in images.items() if g.leq(f)]
        below = lambda a, b: images[b].leq(images[a])
    else:
        raise ValueError(f"direction must be {LEFT!r} or {RIGHT!r}, got {direction!r}")

    for w in candidates:
        if all(below(w, other) for other in candidates):
            logger.debug("%s adjoint over v=%s: %s among %d candidates", direction, list(v), w, len(candidates))
            return w
    raise InvariantViolation(f"no {direction} adjoint among {len(candidates)} candidates for {f!r}")


def christoffel(n, m, budget=DEFAULT_WORD_BUDGET):
    """(lower, upper) Christoffel words of slope m/n: the right and left adjoint images of the diagonal"""
    if n <= 0 or m <= 0:
        raise DomainError(f"Christoffel words need positive n and m, got {n}, {m}")
    diagonal = identity_tuple(2)
    lower = adjoint_approx(RIGHT, (n, m), diagonal, budget)
    upper = adjoint_approx(LEFT, (n, m), diagonal, budget)
    return lower, upper
