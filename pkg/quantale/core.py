"""
Contract for a mix star-autonomous quantale plus the derived operations
"""

from abc import ABC, abstractmethod
from functools import reduce


class Quantale(ABC):
    """
    A complete lattice with a monoid (tensor, unit) distributing over joins,
    an order-reversing involution star and the dual monoid (oplus, dualizing).

    Only finite joins and meets are exposed. Finite carriers are complete
    trivially; infinite carriers restrict to a subclass closed under the
    finitary operations.
    """

    name = "quantale"
    is_finite = False
    has_declared_oplus = False

    @abstractmethod
    def leq(self, a, b):
        ...

    @abstractmethod
    def join2(self, a, b):
        ...

    @abstractmethod
    def meet2(self, a, b):
        ...

    @property
    @abstractmethod
    def bottom(self):
        ...

    @property
    @abstractmethod
    def top(self):
        ...

    @abstractmethod
    def tensor(self, a, b):
        ...

    @property
    @abstractmethod
    def unit(self):
        ...

    @abstractmethod
    def star(self, a):
        ...

    def declared_oplus(self, a, b):
        """Entry of a supplied oplus table, None when the carrier has none"""
        return None

    # Derived structure

    @property
    def dualizing(self):
        return self.star(self.unit)

    def join(self, items):
        return reduce(self.join2, items, self.bottom)

    def meet(self, items):
        return reduce(self.meet2, items, self.top)

    def equal(self, a, b):
        return a == b

    def oplus(self, a, b):
        return self.star(self.tensor(self.star(b), self.star(a)))

    def lres(self, a, b):
        """a -o b"""
        return self.oplus(self.star(a), b)

    def rres(self, b, a):
        """b o- a"""
        return self.oplus(b, self.star(a))

    def elements(self):
        """All carrier elements in carrier order, or None for infinite carriers"""
        return None

    def sample(self, rng):
        """Random carrier element drawn from rng"""
        elements = self.elements()
        if elements is None:
            raise NotImplementedError(f"{self.name} does not support sampling")
        return rng.choice(elements)

    # JSON hooks, overridden by carriers whose elements are not plain strings

    def format_element(self, a):
        return a

    def parse_element(self, raw):
        return raw


def oplus(q, a, b):
    """a (+) b computed as star(star(b) (x) star(a))"""
    return q.oplus(a, b)


def residuals(q, a, b):
    """Returns (a -o b, b o- a)"""
    return q.lres(a, b), q.rres(b, a)


def check_mix(q):
    """The mix rule x (x) y <= x (+) y holds iff dualizing <= unit"""
    return q.leq(q.dualizing, q.unit)


def find_mix_violation(q):
    """Exhaustive search for a pair violating the mix rule (finite carriers only)"""
    elements = q.elements()
    if elements is None:
        raise NotImplementedError(f"{q.name} is not finite")
    for a in elements:
        for b in elements:
            if not q.leq(q.tensor(a, b), q.oplus(a, b)):
                return a, b
    return None
