"""
Exact rational piecewise-linear self-maps of [0,1]

PLFun holds a left-continuous (join-continuous) map with pieces on (lo, hi]
and f(0) = 0. PLFunUpper holds a right-continuous (meet-continuous) map with
pieces on [lo, hi) and g(1) = 1. Both are canonical on construction.
"""

from bisect import bisect_left, bisect_right
from fractions import Fraction
from typing import NamedTuple

from errors import DocumentError, OutOfRangeError

from .chains import canonical_chain

ZERO = Fraction(0)
ONE = Fraction(1)


def parse_rational(raw):
    """Parse "p/q" (or an integer) into a Fraction"""
    if isinstance(raw, bool) or not isinstance(raw, (str, int)):
        raise DocumentError(f"rational must be a 'p/q' string, got {raw!r}")
    try:
        return Fraction(raw)
    except (ValueError, ZeroDivisionError) as e:
        raise DocumentError(f"bad rational {raw!r}: {e}") from e


def format_rational(x):
    return str(Fraction(x))


def check_unit(t, what="argument"):
    t = Fraction(t)
    if not ZERO <= t <= ONE:
        raise OutOfRangeError(f"{what} {t} outside [0,1]")
    return t


class Piece(NamedTuple):
    """Affine law a + b*t on the open interval (lo, hi)"""

    lo: Fraction
    hi: Fraction
    a: Fraction
    b: Fraction

    def at(self, t):
        return self.a + self.b * t

    def law(self):
        return (self.a, self.b)


def _canonical_pieces(pieces):
    out = []
    for p in pieces:
        if not all(type(x) is Fraction for x in p):
            p = Piece(*(Fraction(x) for x in p))
        elif type(p) is not Piece:
            p = Piece(*p)
        if p.lo == p.hi:
            continue
        if out and out[-1].law() == p.law() and out[-1].hi == p.lo:
            out[-1] = Piece(out[-1].lo, p.hi, p.a, p.b)
        else:
            out.append(p)
    return tuple(out)


class _Piecewise:
    kind = None

    __slots__ = ("pieces", "_los", "_his", "_hash")

    def __init__(self, pieces):
        pieces = _canonical_pieces(pieces)
        self._validate(pieces)
        object.__setattr__(self, "pieces", pieces)
        object.__setattr__(self, "_los", [p.lo for p in pieces])
        object.__setattr__(self, "_his", [p.hi for p in pieces])
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __reduce__(self):
        return (type(self), (self.pieces,))

    @classmethod
    def _validate(cls, pieces):
        if not pieces:
            raise OutOfRangeError("a piecewise function needs at least one piece")
        if pieces[0].lo != ZERO or pieces[-1].hi != ONE:
            raise OutOfRangeError("pieces must cover [0,1]")
        for p, q in zip(pieces, pieces[1:]):
            if p.hi != q.lo:
                raise OutOfRangeError(f"pieces leave a gap or overlap at {p.hi}")
        for p in pieces:
            if p.lo > p.hi:
                raise OutOfRangeError(f"piece bounds reversed: {p.lo} > {p.hi}")
            if p.b < 0:
                raise OutOfRangeError(f"negative slope {p.b} on ({p.lo}, {p.hi})")
            for v in (p.at(p.lo), p.at(p.hi)):
                if not ZERO <= v <= ONE:
                    raise OutOfRangeError(f"value {v} outside [0,1] on ({p.lo}, {p.hi})")
        for p, q in zip(pieces, pieces[1:]):
            if p.at(p.hi) > q.at(q.lo):
                raise OutOfRangeError(f"downward jump at {p.hi}")

    # Laws around a point

    def law_left(self, t):
        """Piece whose interval (lo, hi] contains t, t > 0"""
        return self.pieces[bisect_left(self._his, t)]

    def law_right(self, t):
        """Piece whose interval [lo, hi) contains t, t < 1"""
        return self.pieces[bisect_right(self._los, t) - 1]

    def limit_left(self, t):
        return self.law_left(t).at(t)

    def limit_right(self, t):
        return self.law_right(t).at(t)

    # Queries

    def __call__(self, t):
        return self.eval(t)

    def breakpoints(self):
        """Interior breakpoints in increasing order"""
        return [p.hi for p in self.pieces[:-1]]

    def is_step(self):
        return all(p.b == 0 for p in self.pieces)

    def graph(self):
        """The monotone polyline from (0,0) to (1,1), vertical at jumps"""
        points = [(ZERO, ZERO)]
        for p in self.pieces:
            points.append((p.lo, p.at(p.lo)))
            points.append((p.hi, p.at(p.hi)))
        points.append((ONE, ONE))
        return canonical_chain(points)

    def _same_kind(self, other):
        if type(self) is not type(other):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")

    def _refined(self, other):
        cuts = sorted(set(self._los) | set(other._los) | {ONE})
        for lo, hi in zip(cuts, cuts[1:]):
            mid = (lo + hi) / 2
            yield lo, hi, self.law_right(mid), other.law_right(mid)

    def _combine(self, other, pick):
        self._same_kind(other)
        pieces = []
        for lo, hi, p, q in self._refined(other):
            cuts = [lo, hi]
            if p.b != q.b:
                t = (q.a - p.a) / (p.b - q.b)
                if lo < t < hi:
                    cuts = [lo, t, hi]
            for l, h in zip(cuts, cuts[1:]):
                mid = (l + h) / 2
                law = pick(p, q, mid)
                pieces.append(Piece(l, h, law.a, law.b))
        return type(self)(pieces)

    def join(self, other):
        return self._combine(other, lambda p, q, t: p if p.at(t) >= q.at(t) else q)

    def meet(self, other):
        return self._combine(other, lambda p, q, t: p if p.at(t) <= q.at(t) else q)

    def leq(self, other):
        self._same_kind(other)
        for lo, hi, p, q in self._refined(other):
            if p.at(lo) > q.at(lo) or p.at(hi) > q.at(hi):
                return False
        return True

    def compare(self, other):
        if self == other:
            return "eq"
        if self.leq(other):
            return "lt"
        if other.leq(self):
            return "gt"
        return "incomparable"

    def after(self, inner):
        """Exact composition self(inner(t))"""
        self._same_kind(inner)
        pieces = []
        for p in inner.pieces:
            if p.b == 0:
                c = self.eval(p.a)
                pieces.append(Piece(p.lo, p.hi, c, ZERO))
                continue
            v_lo, v_hi = p.at(p.lo), p.at(p.hi)
            cuts = [p.lo]
            for beta in self.breakpoints():
                if v_lo < beta < v_hi:
                    cuts.append((beta - p.a) / p.b)
            cuts.append(p.hi)
            for l, h in zip(cuts, cuts[1:]):
                outer = self._outer_law(p.at(l), p.at(h))
                pieces.append(Piece(l, h, outer.a + outer.b * p.a, outer.b * p.b))
        return type(self)(pieces)

    # Equality and JSON

    def __eq__(self, other):
        if type(self) is not type(other):
            return NotImplemented
        return self.pieces == other.pieces

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.kind, self.pieces)))
        return self._hash

    def __repr__(self):
        body = ", ".join(f"({p.lo},{p.hi}]: {p.a}+{p.b}t" for p in self.pieces)
        return f"{type(self).__name__}({body})"

    def to_dict(self):
        return {
            "type": self.kind,
            "segments": [
                {"x0": format_rational(p.lo), "x1": format_rational(p.hi), "a": format_rational(p.a), "b": format_rational(p.b)}
                for p in self.pieces
            ],
        }

    @classmethod
    def from_dict(cls, data):
        if not isinstance(data, dict) or data.get("type") != cls.kind:
            raise DocumentError(f'expected an object with "type": "{cls.kind}"')
        segments = data.get("segments")
        if not isinstance(segments, list) or not segments:
            raise DocumentError('"segments" must be a non-empty list')
        pieces = []
        for seg in segments:
            if not isinstance(seg, dict):
                raise DocumentError("each segment must be an object")
            try:
                pieces.append(Piece(*(parse_rational(seg[k]) for k in ("x0", "x1", "a", "b"))))
            except KeyError as e:
                raise DocumentError(f"segment is missing {e}") from None
        try:
            return cls(pieces)
        except OutOfRangeError as e:
            raise DocumentError(str(e)) from e


class PLFun(_Piecewise):
    """Join-continuous element of the interval quantale"""

    kind = "plfun"
    __slots__ = ()

    def eval(self, t):
        t = check_unit(t)
        if t == ZERO:
            return ZERO
        return self.limit_left(t)

    def _outer_law(self, u_lo, u_hi):
        return self.law_left(u_hi)

    @classmethod
    def identity(cls):
        return cls([Piece(ZERO, ONE, ZERO, ONE)])

    @classmethod
    def bottom(cls):
        return cls([Piece(ZERO, ONE, ZERO, ZERO)])

    @classmethod
    def top(cls):
        return cls([Piece(ZERO, ONE, ONE, ZERO)])

    @classmethod
    def constant(cls, c):
        """c on (0,1], 0 at 0"""
        return cls([Piece(ZERO, ONE, check_unit(c, "constant"), ZERO)])


class PLFunUpper(_Piecewise):
    """Meet-continuous counterpart, pieces on [lo, hi)"""

    kind = "plfun_upper"
    __slots__ = ()

    def eval(self, t):
        t = check_unit(t)
        if t == ONE:
            return ONE
        return self.limit_right(t)

    def _outer_law(self, u_lo, u_hi):
        return self.law_right(u_lo)

    @classmethod
    def identity(cls):
        return cls([Piece(ZERO, ONE, ZERO, ONE)])

    @classmethod
    def bottom(cls):
        return cls([Piece(ZERO, ONE, ZERO, ZERO)])

    @classmethod
    def top(cls):
        return cls([Piece(ZERO, ONE, ONE, ZERO)])


def one_step(x, y):
    """ji(x, y): 0 on [0, x], y on (x, 1]"""
    x, y = check_unit(x, "x"), check_unit(y, "y")
    if x == ONE or y == ZERO:
        return PLFun.bottom()
    if x == ZERO:
        return PLFun.constant(y)
    return PLFun([Piece(ZERO, x, ZERO, ZERO), Piece(x, ONE, y, ZERO)])


def upper_step(x, y):
    """JI(x, y): 0 on [0, x), y on [x, 1), 1 at 1"""
    x, y = check_unit(x, "x"), check_unit(y, "y")
    return PLFunUpper([Piece(ZERO, x, ZERO, ZERO), Piece(x, ONE, y, ZERO)])


def _segments(points):
    for (x0, y0), (x1, y1) in zip(points, points[1:]):
        if x1 == x0:
            continue
        b = (y1 - y0) / (x1 - x0)
        yield Piece(x0, x1, y0 - b * x0, b)


def lower_envelope(points):
    """Fiber minima of a monotone planar chain from (0,0) to (1,1), as a PLFun"""
    return PLFun(list(_segments(canonical_chain(points))))


def upper_envelope(points):
    """Fiber maxima of a monotone planar chain from (0,0) to (1,1), as a PLFunUpper"""
    return PLFunUpper(list(_segments(canonical_chain(points))))


def eval(f, t):
    return f.eval(t)


def join(f, g):
    return f.join(g)


def meet(f, g):
    return f.meet(g)


def compare(f, g):
    return f.compare(g)
