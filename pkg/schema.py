"""
JSON documents: parsing, validation and deterministic output
"""

import json
import os

from clopen.tuples import TupleD, couples
from errors import DocumentError, QuantaleError, UnknownBuiltinError
from geometry.path import PathD
from interval.plfun import format_rational, parse_rational
from interval.quantale import INTERVAL, IntervalQuantale
from multinomial.words import Word
from quantale.finite import (
    BUILTIN_DOCUMENTS,
    BUILTIN_NAMES,
    FiniteQuantale,
    builtin,
    load_finite_quantale,
    load_finite_quantale_file,
)


def dumps(data):
    """Compact JSON with insertion-ordered keys"""
    return json.dumps(data, separators=(",", ":"), ensure_ascii=False)


def loads(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"invalid JSON: {e}") from e


def read_document(path):
    with open(path, "r") as f:
        return loads(f.read())


# Quantale references

def quantale_ref(q):
    if isinstance(q, IntervalQuantale):
        return "interval"
    if isinstance(q, FiniteQuantale) and q.name in BUILTIN_NAMES and q == builtin(q.name):
        return q.name
    return q.to_document()


def resolve_quantale(ref, validate=True):
    """A builtin name, "interval", a table file path or an inline table document"""
    if isinstance(ref, dict):
        return load_finite_quantale(ref, validate=validate)
    if not isinstance(ref, str):
        raise DocumentError(f"quantale must be a name or a table document, got {ref!r}")
    if ref == "interval":
        return INTERVAL
    if ref in BUILTIN_NAMES:
        if validate:
            return builtin(ref)
        return load_finite_quantale(BUILTIN_DOCUMENTS[ref], name=ref, validate=False)
    if os.path.isfile(ref):
        return load_finite_quantale_file(ref, validate=validate)
    stem = os.path.splitext(os.path.basename(ref))[0]
    if ref.endswith(".json") and stem in BUILTIN_NAMES:
        return resolve_quantale(stem, validate)
    raise UnknownBuiltinError(f"unknown quantale {ref!r}: not a builtin ({', '.join(BUILTIN_NAMES)}), 'interval' or a file")


# Tuples

def tuple_to_dict(f):
    q = f.quantale
    return {
        "d": f.d,
        "quantale": quantale_ref(q),
        "entries": {f"{i},{j}": q.format_element(v) for (i, j), v in f.items()},
    }


def tuple_from_dict(data):
    if not isinstance(data, dict):
        raise DocumentError("tuple document must be a JSON object")
    d = data.get("d")
    if isinstance(d, bool) or not isinstance(d, int) or d < 2:
        raise DocumentError(f'"d" must be an integer >= 2, got {d!r}')
    if "quantale" not in data:
        raise DocumentError('tuple document needs a "quantale"')
    q = resolve_quantale(data["quantale"])
    entries = data.get("entries")
    if not isinstance(entries, dict):
        raise DocumentError('"entries" must be an object keyed by "i,j"')
    expected = {f"{i},{j}" for i, j in couples(d)}
    if set(entries) != expected:
        missing = sorted(expected - set(entries))
        extra = sorted(set(entries) - expected)
        raise DocumentError(f"entries do not match the couples of [{d}] (missing {missing}, unexpected {extra})")
    return TupleD(q, d, [q.parse_element(entries[f"{i},{j}"]) for i, j in couples(d)])


# Paths

def path_to_dict(p):
    return {"d": p.d, "vertices": [[format_rational(c) for c in v] for v in p.vertices]}


def path_from_dict(data):
    if not isinstance(data, dict):
        raise DocumentError("path document must be a JSON object")
    d = data.get("d")
    if isinstance(d, bool) or not isinstance(d, int) or d < 2:
        raise DocumentError(f'"d" must be an integer >= 2, got {d!r}')
    vertices = data.get("vertices")
    if not isinstance(vertices, list):
        raise DocumentError('"vertices" must be a list')
    points = []
    for n, v in enumerate(vertices):
        if not isinstance(v, list):
            raise DocumentError("each vertex must be a list of rationals")
        if len(v) != d:
            raise DocumentError(f"vertex {n} has {len(v)} coordinates, expected {d}")
        points.append(tuple(parse_rational(c) for c in v))
    return PathD(d, points)


# Words

def word_from_dict(data):
    if not isinstance(data, dict) or not isinstance(data.get("word"), str):
        raise DocumentError('word document needs a "word" string')
    v = data.get("v")
    if v is not None and (not isinstance(v, list) or not all(isinstance(n, int) and not isinstance(n, bool) for n in v)):
        raise DocumentError('"v" must be a list of integers')
    return Word.parse(data["word"], v)


def parse_v(text):
    """Multiplicities written as "2,1" """
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise DocumentError(f"bad multiplicity vector {text!r}, expected e.g. 2,1") from None


class DocumentParser:
    """
    Reads documents for the command line. Each method returns (value, error)
    where error is the QuantaleError that stopped the parse, or None.
    """

    def parse_tuple_file(self, path):
        return self._guard(lambda: tuple_from_dict(read_document(path)))

    def parse_path_file(self, path):
        return self._guard(lambda: path_from_dict(read_document(path)))

    def parse_word(self, text, v=None):
        return self._guard(lambda: Word.parse(text, parse_v(v) if v else None))

    def parse_word_file(self, path):
        return self._guard(lambda: word_from_dict(read_document(path)))

    def parse_quantale(self, ref, validate=True):
        return self._guard(lambda: resolve_quantale(ref, validate=validate))

    def _guard(self, build):
        try:
            return build(), None
        except QuantaleError as e:
            return None, e
