"""
The quantale of join-continuous self-maps of [0,1], restricted to PLFun

Adjoints and continuizations all come from the graph polyline C_f: meetof and
joinof read its upper and lower fiber envelopes, radj and ladj read the
envelopes of its transpose.
"""

import logging
from functools import lru_cache

from config import INTERVAL_CACHE_SIZE
from errors import InvariantViolation
from quantale.core import Quantale

from .chains import transpose
from .plfun import PLFun, lower_envelope, upper_envelope
from .sampling import random_plfun

logger = logging.getLogger(__name__)


@lru_cache(maxsize=INTERVAL_CACHE_SIZE)
def meetof(f):
    """Least meet-continuous map above f"""
    return upper_envelope(f.graph())


@lru_cache(maxsize=INTERVAL_CACHE_SIZE)
def joinof(g):
    """Greatest join-continuous map below g"""
    return lower_envelope(g.graph())


@lru_cache(maxsize=INTERVAL_CACHE_SIZE)
def radj(f):
    """radj(f)(y) = max{x | f(x) <= y}"""
    return upper_envelope(transpose(f.graph()))


@lru_cache(maxsize=INTERVAL_CACHE_SIZE)
def ladj(g):
    """ladj(g)(x) = min{y | x <= g(y)}"""
    return lower_envelope(transpose(g.graph()))


@lru_cache(maxsize=INTERVAL_CACHE_SIZE)
def star(f):
    return joinof(radj(f))


def star_via_meetof(f):
    return ladj(meetof(f))


@lru_cache(maxsize=INTERVAL_CACHE_SIZE)
def tensor(f, g):
    """f (x) g = g o f"""
    return g.after(f)


@lru_cache(maxsize=INTERVAL_CACHE_SIZE)
def oplus(f, g):
    """f (+) g = joinof(meetof g o meetof f)"""
    return joinof(meetof(g).after(meetof(f)))


def oplus_via_star(f, g):
    return star(tensor(star(g), star(f)))


def oplus_checked(f, g):
    """Both routes; raises InvariantViolation if they disagree"""
    direct = oplus(f, g)
    dual = oplus_via_star(f, g)
    if direct != dual:
        logger.debug("oplus routes disagree on %r, %r", f, g)
        raise InvariantViolation(f"oplus routes disagree: {direct!r} vs {dual!r}")
    return direct


def is_join_prime_candidate(f):
    """f is a one-step ji(x, y) with x < 1 and y > 0"""
    if not f.is_step() or f == PLFun.bottom():
        return False
    if len(f.pieces) == 1:
        return True
    return len(f.pieces) == 2 and f.pieces[0].a == 0


class IntervalQuantale(Quantale):
    name = "interval"

    def leq(self, a, b):
        return a.leq(b)

    def join2(self, a, b):
        return a.join(b)

    def meet2(self, a, b):
        return a.meet(b)

    @property
    def bottom(self):
        return PLFun.bottom()

    @property
    def top(self):
        return PLFun.top()

    def tensor(self, a, b):
        return tensor(a, b)

    @property
    def unit(self):
        return PLFun.identity()

    def star(self, a):
        return star(a)

    def oplus(self, a, b):
        return oplus(a, b)

    def sample(self, rng):
        return random_plfun(rng)

    def format_element(self, a):
        return a.to_dict()

    def parse_element(self, raw):
        return PLFun.from_dict(raw)

    def __eq__(self, other):
        return isinstance(other, IntervalQuantale)

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return "IntervalQuantale()"


INTERVAL = IntervalQuantale()

