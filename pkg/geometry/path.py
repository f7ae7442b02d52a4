"""
Monotone rational polylines in I^d and their correspondence with clopen tuples
"""

import logging
from fractions import Fraction
from typing import NamedTuple

from clopen.tuples import TupleD, classify, couples, is_clopen
from errors import DomainError, InvalidPathError, InvariantViolation, NotClopenError
from interval.chains import as_point, canonical_chain, collinear, fiber, point_leq, project
from interval.plfun import lower_envelope
from interval.quantale import INTERVAL, IntervalQuantale, meetof

logger = logging.getLogger(__name__)

ZERO = Fraction(0)
ONE = Fraction(1)


class PathD:
    """A polyline from the all-0 to the all-1 vertex; vertices kept as given"""

    __slots__ = ("d", "vertices")

    def __init__(self, d, vertices):
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "vertices", tuple(as_point(v) for v in vertices))

    def __setattr__(self, name, value):
        raise AttributeError("PathD is immutable")

    def __reduce__(self):
        return (type(self), (self.d, self.vertices))

    @classmethod
    def build(cls, d, vertices):
        """Canonical path: repeated vertices dropped, collinear interior vertices merged"""
        return cls(d, canonical_chain(vertices))

    @classmethod
    def diagonal(cls, d):
        return cls(d, [(ZERO,) * d, (ONE,) * d])

    def canonical(self):
        return PathD.build(self.d, self.vertices)

    def project(self, i, j):
        """Planar (i, j) projection as a 2-d path"""
        if not (1 <= i <= self.d and 1 <= j <= self.d) or i == j:
            raise DomainError(f"bad projection ({i},{j}) for d={self.d}")
        return PathD(2, project(self.vertices, i, j))

    def fiber(self, i, x):
        return fiber(list(self.vertices), i, x)

    def contains_point(self, x):
        x = as_point(x)
        if len(x) != self.d:
            return False
        for p, q in zip(self.vertices, self.vertices[1:]):
            if point_leq(p, x) and point_leq(x, q) and collinear(p, x, q):
                return True
        return x in self.vertices

    def __eq__(self, other):
        if not isinstance(other, PathD):
            return NotImplemented
        return self.d == other.d and self.vertices == other.vertices

    def __hash__(self):
        return hash((self.d, self.vertices))

    def __repr__(self):
        body = ", ".join("(" + ",".join(str(c) for c in v) + ")" for v in self.vertices)
        return f"PathD(d={self.d}, [{body}])"


class Violation(NamedTuple):
    index: int
    kind: str
    message: str

    def to_dict(self):
        return {"index": self.index, "kind": self.kind, "message": self.message}


class PathReport(NamedTuple):
    valid: bool
    violations: list

    def to_dict(self):
        return {"valid": self.valid, "violations": [v.to_dict() for v in self.violations]}

    def kinds(self):
        return {v.kind for v in self.violations}


def validate_path(p):
    """Check dimension, range, endpoints, monotonicity and canonical form"""
    violations = []
    vs = p.vertices
    if p.d < 2:
        violations.append(Violation(0, "dimension", f"d must be at least 2, got {p.d}"))
    for n, v in enumerate(vs):
        if len(v) != p.d:
            violations.append(Violation(n, "dimension", f"vertex has {len(v)} coordinates, expected {p.d}"))
        elif not all(ZERO <= c <= ONE for c in v):
            violations.append(Violation(n, "range", "coordinate outside [0,1]"))
    if violations:
        return PathReport(False, violations)

    if not vs or vs[0] != (ZERO,) * p.d:
        violations.append(Violation(0, "endpoint", "path must start at the all-0 vertex"))
    if not vs or vs[-1] != (ONE,) * p.d:
        violations.append(Violation(max(len(vs) - 1, 0), "endpoint", "path must end at the all-1 vertex"))
    for n in range(1, len(vs)):
        if not point_leq(vs[n - 1], vs[n]):
            violations.append(Violation(n, "monotone", f"vertex {n} is not above vertex {n - 1}"))
        elif vs[n - 1] == vs[n]:
            violations.append(Violation(n, "canonical", f"vertex {n} repeats vertex {n - 1}"))
    for n in range(1, len(vs) - 1):
        if vs[n - 1] != vs[n] != vs[n + 1] and collinear(vs[n - 1], vs[n], vs[n + 1]):
            violations.append(Violation(n, "canonical", f"vertex {n} is collinear with its neighbours"))
    return PathReport(not violations, violations)


def ensure_valid_path(path):
    """Raise InvalidPathError unless the only violations are canonical-form ones"""
    report = validate_path(path)
    fatal = [v for v in report.violations if v.kind != "canonical"]
    if fatal:
        first = fatal[0]
        raise InvalidPathError(f"{first.kind} violation at vertex {first.index}: {first.message}")
    return report


def path_to_tuple(path):
    """Entry (i, j) is the lower envelope of the (i, j) projection"""
    ensure_valid_path(path)
    points = canonical_chain(path.vertices)
    f = TupleD(INTERVAL, path.d, [lower_envelope(project(points, i, j)) for i, j in couples(path.d)])
    if not classify(f).clopen:
        raise InvariantViolation(f"tuple of a valid path is not clopen: {f!r}")
    return f


def _require_interval(f):
    if not isinstance(f.quantale, IntervalQuantale):
        raise DomainError(f"paths correspond to tuples over the interval quantale, not {f.quantale.name}")


def tuple_to_path(f):
    """
    The polyline C_f of a clopen interval tuple. Every vertex of C_f is an
    extreme point of its fiber over some axis k, taken at 0, 1 or a breakpoint
    of the entries f_{k,.}; those extremes, in chain order, are the path.
    """
    _require_interval(f)
    if not is_clopen(f):
        raise NotClopenError(f"tuple is not clopen: {f!r}")
    d = f.d
    points = set()
    for k in range(1, d + 1):
        entries = [f.entry(k, j) for j in range(1, d + 1)]
        uppers = [meetof(g) for g in entries]
        ts = {ZERO, ONE}
        for g in entries:
            ts.update(g.breakpoints())
        for t in ts:
            points.add(tuple(g.eval(t) for g in entries))
            points.add(tuple(g.eval(t) for g in uppers))
    # points of a chain sort lexicographically in chain order
    return PathD.build(d, sorted(points))


def membership_holds(f, x):
    """f_{i,j}(x_i) <= x_j for all i, j in [d]"""
    x = as_point(x)
    index = range(1, f.d + 1)
    return all(f.entry(i, j).eval(x[i - 1]) <= x[j - 1] for i in index for j in index)


def roundtrip_check(x):
    if isinstance(x, PathD):
        return tuple_to_path(path_to_tuple(x)) == x.canonical()
    if isinstance(x, TupleD):
        return path_to_tuple(tuple_to_path(x)) == x
    raise TypeError(f"expected PathD or TupleD, got {type(x).__name__}")


def path_leq(c, other):
    """c lies below other in every projection"""
    return path_to_tuple(c).leq(path_to_tuple(other))

