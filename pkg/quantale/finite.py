"""
Table-defined finite quantales
Element names are opaque strings; the order lives in the leq matrix
"""

import json
import logging
import os
from functools import lru_cache

import numpy as np

from config import DATA_DIR
from errors import DocumentError, DomainError, QuantaleLoadError, UnknownBuiltinError
from .core import Quantale
from .laws import verify_laws

logger = logging.getLogger(__name__)

BOOL2_DOCUMENT = {
    "elements": ["0", "1"],
    "leq": [[True, True], [False, True]],
    "tensor": [["0", "0"], ["0", "1"]],
    "unit": "1",
    "dualizing": "0",
}

SUGIHARA3_DOCUMENT = {
    "elements": ["-1", "0", "1"],
    "leq": [[True, True, True], [False, True, True], [False, False, True]],
    "tensor": [["-1", "-1", "-1"], ["-1", "0", "1"], ["-1", "1", "1"]],
    "unit": "0",
    "dualizing": "0",
    "oplus": [["-1", "-1", "1"], ["-1", "0", "1"], ["1", "1", "1"]],
}

BUILTIN_DOCUMENTS = {"bool2": BOOL2_DOCUMENT, "sugihara3": SUGIHARA3_DOCUMENT}
BUILTIN_NAMES = tuple(BUILTIN_DOCUMENTS)


def _least(leq, mask):
    """Index of the least element of the masked set, or None"""
    idx = np.flatnonzero(mask)
    for z in idx:
        if leq[z, idx].all():
            return int(z)
    return None


def _greatest(leq, mask):
    idx = np.flatnonzero(mask)
    for z in idx:
        if leq[idx, z].all():
            return int(z)
    return None


class FiniteQuantale(Quantale):
    """
    A finite quantale given by its order matrix, tensor table, unit and
    dualizing element. Joins, meets, residuals and star are derived from
    the tables once, at construction.
    """

    is_finite = True

    def __init__(self, names, leq, tensor, unit, dualizing, name="inline", declared_oplus=None):
        self.name = name
        self.names = tuple(names)
        self._index = {n: i for i, n in enumerate(self.names)}
        self._leq = np.asarray(leq, dtype=bool)
        self._tensor = np.asarray(tensor, dtype=int)
        self._unit = int(unit)
        self._dualizing = int(dualizing)
        self._declared_oplus = None if declared_oplus is None else np.asarray(declared_oplus, dtype=int)

        n = len(self.names)
        self._join = np.full((n, n), -1, dtype=int)
        self._meet = np.full((n, n), -1, dtype=int)
        for a in range(n):
            for b in range(n):
                j = _least(self._leq, self._leq[a] & self._leq[b])
                m = _greatest(self._leq, self._leq[:, a] & self._leq[:, b])
                self._join[a, b] = -1 if j is None else j
                self._meet[a, b] = -1 if m is None else m

        everything = np.ones(n, dtype=bool)
        self._bottom = _least(self._leq, everything)
        self._top = _greatest(self._leq, everything)

        self._lres = np.zeros((n, n), dtype=int)
        self._rres = np.zeros((n, n), dtype=int)
        if self.is_lattice():
            for a in range(n):
                for b in range(n):
                    # a -o b is the join of {z | a (x) z <= b}, b o- a of {z | z (x) a <= b}
                    self._lres[a, b] = self._join_mask(self._leq[self._tensor[a, :], b])
                    self._rres[b, a] = self._join_mask(self._leq[self._tensor[:, a], b])
        self._star = self._lres[:, self._dualizing].copy()

    def _join_mask(self, mask):
        acc = self._bottom
        for z in np.flatnonzero(mask):
            acc = self._join[acc, z]
        return int(acc)

    def is_lattice(self):
        return (
            self._bottom is not None
            and self._top is not None
            and (self._join >= 0).all()
            and (self._meet >= 0).all()
        )

    def index(self, a):
        try:
            return self._index[a]
        except (KeyError, TypeError):
            raise DomainError(f"{a!r} is not an element of {self.name}") from None

    def _name(self, i):
        return self.names[int(i)]

    # Contract

    def leq(self, a, b):
        return bool(self._leq[self.index(a), self.index(b)])

    def join2(self, a, b):
        return self._name(self._join[self.index(a), self.index(b)])

    def meet2(self, a, b):
        return self._name(self._meet[self.index(a), self.index(b)])

    @property
    def bottom(self):
        return self._name(self._bottom)

    @property
    def top(self):
        return self._name(self._top)

    def tensor(self, a, b):
        return self._name(self._tensor[self.index(a), self.index(b)])

    @property
    def unit(self):
        return self._name(self._unit)

    @property
    def dualizing(self):
        return self._name(self._dualizing)

    def star(self, a):
        return self._name(self._star[self.index(a)])

    def lres(self, a, b):
        return self._name(self._lres[self.index(a), self.index(b)])

    def rres(self, b, a):
        return self._name(self._rres[self.index(b), self.index(a)])

    @property
    def has_declared_oplus(self):
        return self._declared_oplus is not None

    def declared_oplus(self, a, b):
        if self._declared_oplus is None:
            return None
        return self._name(self._declared_oplus[self.index(a), self.index(b)])

    def elements(self):
        return list(self.names)

    def parse_element(self, raw):
        if raw not in self._index:
            raise DocumentError(f"{raw!r} is not an element of {self.name}")
        return raw

    # Tables

    def oplus_table(self):
        n = len(self.names)
        return [[self.oplus(self._name(a), self._name(b)) for b in range(n)] for a in range(n)]

    def to_document(self):
        doc = {
            "elements": list(self.names),
            "leq": [[bool(x) for x in row] for row in self._leq],
            "tensor": [[self._name(x) for x in row] for row in self._tensor],
            "unit": self.unit,
            "dualizing": self.dualizing,
        }
        if self._declared_oplus is not None:
            doc["oplus"] = [[self._name(x) for x in row] for row in self._declared_oplus]
        return doc

    def __eq__(self, other):
        if not isinstance(other, FiniteQuantale):
            return NotImplemented
        return (
            self.names == other.names
            and np.array_equal(self._leq, other._leq)
            and np.array_equal(self._tensor, other._tensor)
            and self._unit == other._unit
            and self._dualizing == other._dualizing
        )

    def __hash__(self):
        return hash((self.names, self._tensor.tobytes(), self._unit, self._dualizing))

    def __repr__(self):
        return f"FiniteQuantale({self.name}, {list(self.names)})"


def _parse_square(doc, key, n, lookup):
    rows = doc.get(key)
    if not isinstance(rows, list) or len(rows) != n:
        raise DocumentError(f'"{key}" must be a {n}x{n} matrix')
    out = []
    for row in rows:
        if not isinstance(row, list) or len(row) != n:
            raise DocumentError(f'"{key}" must be a {n}x{n} matrix')
        out.append([lookup(x) for x in row])
    return out


def _parse_document(doc):
    if not isinstance(doc, dict):
        raise DocumentError("quantale document must be a JSON object")
    names = doc.get("elements")
    if not isinstance(names, list) or not names or not all(isinstance(x, str) for x in names):
        raise DocumentError('"elements" must be a non-empty list of strings')
    if len(set(names)) != len(names):
        raise DocumentError('"elements" must be distinct')
    index = {x: i for i, x in enumerate(names)}
    n = len(names)

    def element(x):
        if not isinstance(x, str) or x not in index:
            raise DocumentError(f"unknown element {x!r}")
        return index[x]

    def boolean(x):
        if not isinstance(x, bool):
            raise DocumentError(f'"leq" entries must be booleans, got {x!r}')
        return x

    leq = _parse_square(doc, "leq", n, boolean)
    tensor = _parse_square(doc, "tensor", n, element)
    unit = element(doc.get("unit"))
    dualizing = element(doc.get("dualizing"))
    oplus = _parse_square(doc, "oplus", n, element) if "oplus" in doc else None
    return names, leq, tensor, unit, dualizing, oplus


def _check_order(names, leq):
    leq = np.asarray(leq, dtype=bool)
    n = len(names)
    for a in range(n):
        if not leq[a, a]:
            raise QuantaleLoadError("order", (names[a],), "order not reflexive")
    both = leq & leq.T
    np.fill_diagonal(both, False)
    pairs = np.argwhere(both)
    if len(pairs):
        a, b = pairs[0]
        raise QuantaleLoadError("order", (names[a], names[b]), "order not antisymmetric")
    li = leq.astype(int)
    missing = ((li @ li) > 0) & ~leq
    pairs = np.argwhere(missing)
    if len(pairs):
        a, c = pairs[0]
        b = int(np.flatnonzero(leq[a] & leq[:, c])[0])
        raise QuantaleLoadError("order", (names[a], names[b], names[c]), "order not transitive")


def _check_lattice(q):
    n = len(q.names)
    for a in range(n):
        for b in range(n):
            if q._join[a, b] < 0:
                raise QuantaleLoadError("lattice", (q.names[a], q.names[b]), "no join")
            if q._meet[a, b] < 0:
                raise QuantaleLoadError("lattice", (q.names[a], q.names[b]), "no meet")
    if q._bottom is None or q._top is None:
        raise QuantaleLoadError("lattice", (), "no bottom or top")


def load_finite_quantale(doc, name="inline", validate=True):
    """
    Build a FiniteQuantale from a quantale-table document.
    Raises DocumentError on schema problems and QuantaleLoadError naming the
    first violated law (with its witness) when validate is set.
    """
    names, leq, tensor, unit, dualizing, oplus = _parse_document(doc)
    if validate:
        _check_order(names, leq)
    q = FiniteQuantale(names, leq, tensor, unit, dualizing, name=name, declared_oplus=oplus)
    if not validate:
        return q

    _check_lattice(q)
    report = verify_laws(q)
    if not report.passed:
        failed = report.failures[0]
        message = f"law {failed.name} fails"
        if failed.name == "oplus_table":
            a, b = failed.counterexample
            message = f"declared oplus {q.declared_oplus(a, b)} differs from derived {q.oplus(a, b)}"
        raise QuantaleLoadError(failed.name, failed.counterexample, message)
    logger.debug("loaded %s with %d elements", name, len(names))
    return q


def load_finite_quantale_file(path, name=None, validate=True):
    """Read a quantale-table document from disk"""
    try:
        with open(path, "r") as f:
            doc = json.load(f)
    except json.JSONDecodeError as e:
        raise DocumentError(f"{path}: invalid JSON: {e}") from e
    if name is None:
        name = os.path.splitext(os.path.basename(path))[0]
    return load_finite_quantale(doc, name=name, validate=validate)


@lru_cache(maxsize=None)
def builtin(name):
    """Hard-coded instance, equal to loading the shipped document"""
    if name not in BUILTIN_DOCUMENTS:
        raise UnknownBuiltinError(f"unknown builtin quantale {name!r}, expected one of {', '.join(BUILTIN_NAMES)}")
    return load_finite_quantale(BUILTIN_DOCUMENTS[name], name=name)


def builtin_path(name):
    """Location of the shipped document for a builtin"""
    if name not in BUILTIN_DOCUMENTS:
        raise UnknownBuiltinError(f"unknown builtin quantale {name!r}")
    return os.path.join(DATA_DIR, f"{name}.json")
