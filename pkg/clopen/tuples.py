"""
Tuples indexed by couples (i, j), 1 <= i < j <= d, over one quantale
"""

import logging
from typing import NamedTuple

from errors import DomainError, InvariantViolation, MixedCarrierError
from quantale.core import check_mix

logger = logging.getLogger(__name__)


def couples(d):
    """Couples of [d] in row-major order (1,2), (1,3), ..., (d-1,d)"""
    return [(i, j) for i in range(1, d + 1) for j in range(i + 1, d + 1)]


class TupleD:
    """
    An element of Q^P(d). Only the couples i < j are stored; entry(j, i) is
    star(entry(i, j)) and entry(i, i) is the unit.
    """

    __slots__ = ("quantale", "d", "values", "_index")

    def __init__(self, quantale, d, values):
        if d < 2:
            raise DomainError(f"d must be at least 2, got {d}")
        values = tuple(values)
        expected = d * (d - 1) // 2
        if len(values) != expected:
            raise DomainError(f"a tuple of dimension {d} has {expected} entries, got {len(values)}")
        object.__setattr__(self, "quantale", quantale)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "_index", {c: n for n, c in enumerate(couples(d))})

    def __setattr__(self, name, value):
        raise AttributeError("TupleD is immutable")

    def __reduce__(self):
        return (type(self), (self.quantale, self.d, self.values))

    @classmethod
    def from_mapping(cls, quantale, d, mapping):
        missing = [c for c in couples(d) if c not in mapping]
        if missing:
            raise DomainError(f"missing entries for couples {missing}")
        extra = [c for c in mapping if c not in set(couples(d))]
        if extra:
            raise DomainError(f"unexpected couples {extra}")
        return cls(quantale, d, [mapping[c] for c in couples(d)])

    def entry(self, i, j):
        if not (1 <= i <= self.d and 1 <= j <= self.d):
            raise DomainError(f"index ({i},{j}) outside [{self.d}]")
        if i < j:
            return self.values[self._index[(i, j)]]
        if i == j:
            return self.quantale.unit
        return self.quantale.star(self.values[self._index[(j, i)]])

    def items(self):
        return list(zip(couples(self.d), self.values))

    def _compatible_with(self, other):
        if self.d != other.d:
            raise MixedCarrierError(f"dimension mismatch: {self.d} vs {other.d}")
        if self.quantale != other.quantale:
            raise MixedCarrierError(f"carrier mismatch: {self.quantale.name} vs {other.quantale.name}")

    def leq(self, other):
        self._compatible_with(other)
        q = self.quantale
        return all(q.leq(a, b) for a, b in zip(self.values, other.values))

    def pointwise_join(self, other):
        self._compatible_with(other)
        q = self.quantale
        return TupleD(q, self.d, [q.join2(a, b) for a, b in zip(self.values, other.values)])

    def pointwise_meet(self, other):
        self._compatible_with(other)
        q = self.quantale
        return TupleD(q, self.d, [q.meet2(a, b) for a, b in zip(self.values, other.values)])

    def __eq__(self, other):
        if not isinstance(other, TupleD):
            return NotImplemented
        if self.d != other.d or self.quantale != other.quantale:
            return False
        return all(self.quantale.equal(a, b) for a, b in zip(self.values, other.values))

    def __hash__(self):
        return hash((self.d, self.values))

    def __repr__(self):
        body = ", ".join(f"{i}{j}: {v!r}" for (i, j), v in self.items())
        return f"TupleD(d={self.d}, {body})"


def bottom_tuple(q, d):
    return TupleD(q, d, [q.bottom] * (d * (d - 1) // 2))


def top_tuple(q, d):
    return TupleD(q, d, [q.top] * (d * (d - 1) // 2))


def triples(d):
    return [(i, j, k) for i in range(1, d + 1) for j in range(i + 1, d + 1) for k in range(j + 1, d + 1)]


def is_closed(f):
    q = f.quantale
    return all(q.leq(q.tensor(f.entry(i, j), f.entry(j, k)), f.entry(i, k)) for i, j, k in triples(f.d))


def is_open(f):
    q = f.quantale
    return all(q.leq(f.entry(i, k), q.oplus(f.entry(i, j), f.entry(j, k))) for i, j, k in triples(f.d))


def is_compatible(f):
    """f_{i,j} (x) f_{j,k} <= f_{i,k} for every triple of [d], derived entries included"""
    q = f.quantale
    index = range(1, f.d + 1)
    return all(
        q.leq(q.tensor(f.entry(i, j), f.entry(j, k)), f.entry(i, k))
        for i in index
        for j in index
        for k in index
    )


def is_clopen(f):
    return is_closed(f) and is_open(f)


class Classification(NamedTuple):
    closed: bool
    open: bool
    compatible: bool

    @property
    def clopen(self):
        return self.closed and self.open

    def to_dict(self):
        return {"closed": self.closed, "open": self.open, "compatible": self.compatible, "clopen": self.clopen}


def classify(f):
    """Closed, open and compatible flags; on a mix carrier compatible must equal clopen"""
    result = Classification(is_closed(f), is_open(f), is_compatible(f))
    if check_mix(f.quantale) and result.compatible != result.clopen:
        raise InvariantViolation(f"compatible={result.compatible} but clopen={result.clopen} for {f!r}")
    return result


def triple_is_open_by_mix(f, i, j, k):
    """
    When f_{i,k} equals f_{i,j} (x) f_{j,k}, the mix rule alone makes the
    triple open. Returns whether that shortcut applies.
    """
    q = f.quantale
    if not check_mix(q):
        return False
    return q.equal(f.entry(i, k), q.tensor(f.entry(i, j), f.entry(j, k)))


def dual(f):
    """dual(f)_{i,j} = star(f_{s(j), s(i)}) with s(i) = d - i + 1"""
    d = f.d
    q = f.quantale
    return TupleD(q, d, [q.star(f.entry(d - j + 1, d - i + 1)) for i, j in couples(d)])
