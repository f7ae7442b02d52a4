"""
The lattice L^d(Q) of clopen tuples and its enumeration over finite carriers
"""

import hashlib
import itertools
import json
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import networkx as nx

from config import DEFAULT_MAX_CANDIDATES
from errors import BudgetExceededError, DomainError, MixedCarrierError, NotClopenError, NotMixError
from quantale.core import check_mix

from .closure import closure, interior
from .tuples import TupleD, bottom_tuple, is_clopen, top_tuple

logger = logging.getLogger(__name__)

JOIN = "join"
MEET = "meet"


class ClopenLattice:
    """
    L^d(Q): clopen tuples of dimension d over a mix carrier.
    join is the closure of the pointwise join, meet the interior of the
    pointwise meet.
    """

    def __init__(self, quantale, d):
        if not check_mix(quantale):
            raise NotMixError(f"{quantale.name} does not satisfy the mix rule (dualizing is not below unit)")
        if d < 2:
            raise DomainError(f"d must be at least 2, got {d}")
        self.quantale = quantale
        self.d = d

    def contains(self, f):
        return f.quantale == self.quantale and f.d == self.d and is_clopen(f)

    def _require(self, f):
        if f.quantale != self.quantale or f.d != self.d:
            raise MixedCarrierError(f"tuple over {f.quantale.name}, d={f.d} does not belong to L^{self.d}({self.quantale.name})")
        if not is_clopen(f):
            raise NotClopenError(f"tuple is not clopen: {f!r}")

    def bottom(self):
        return bottom_tuple(self.quantale, self.d)

    def top(self):
        return top_tuple(self.quantale, self.d)

    def join(self, f, g):
        self._require(f)
        self._require(g)
        return closure(f.pointwise_join(g))

    def meet(self, f, g):
        self._require(f)
        self._require(g)
        return interior(f.pointwise_meet(g))

    def join_all(self, fs):
        return self._fold(self.join, fs, self.bottom())

    def meet_all(self, fs):
        return self._fold(self.meet, fs, self.top())

    def _fold(self, op, fs, empty):
        acc = empty
        for f in fs:
            acc = op(acc, f)
        return acc

    def lattice_op(self, kind, f, g):
        if kind == JOIN:
            return self.join(f, g)
        if kind == MEET:
            return self.meet(f, g)
        raise ValueError(f"unknown lattice operation {kind!r}")


def lattice_op(kind, f, g):
    """Join or meet of two clopen tuples"""
    return ClopenLattice(f.quantale, f.d).lattice_op(kind, f, g)


@dataclass
class Enumeration:
    quantale: object
    d: int
    elements: list
    covers: list = field(default_factory=list)
    ranks: list = field(default_factory=list)
    verification: dict = None

    @property
    def count(self):
        return len(self.elements)


def _scan_chunk(args):
    q, d, start, stop = args
    m = d * (d - 1) // 2
    found = []
    candidates = itertools.islice(itertools.product(q.elements(), repeat=m), start, stop)
    for index, values in enumerate(candidates, start):
        f = TupleD(q, d, values)
        if is_clopen(f):
            found.append((index, values))
    return found


def _chunks(total, workers):
    size = -(-total // (workers * 4))
    return [(lo, min(lo + size, total)) for lo in range(0, total, size)]


def brute_force_join(elements, f, g):
    """Least upper bound of f and g among elements, or None"""
    upper = [h for h in elements if f.leq(h) and g.leq(h)]
    for h in upper:
        if all(h.leq(k) for k in upper):
            return h
    return None


def brute_force_meet(elements, f, g):
    lower = [h for h in elements if h.leq(f) and h.leq(g)]
    for h in lower:
        if all(k.leq(h) for k in lower):
            return h
    return None


def cover_relation(elements):
    """Cover relation (index pairs, lower first) and rank of each element"""
    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(elements)))
    for a, f in enumerate(elements):
        for b, g in enumerate(elements):
            if a != b and f.leq(g):
                graph.add_edge(a, b)
    reduced = nx.transitive_reduction(graph)
    covers = sorted(reduced.edges())
    ranks = [0] * len(elements)
    for v in nx.topological_sort(reduced):
        for u in reduced.predecessors(v):
            ranks[v] = max(ranks[v], ranks[u] + 1)
    return covers, ranks


def rank_profile(enumeration):
    counts = Counter(enumeration.ranks)
    return [counts[r] for r in range(max(counts) + 1)] if counts else []


def verify_lattice_ops(lattice, elements):
    """Compare join/meet with the brute-force bounds over every ordered pair"""
    report = {"pairs": 0, "join_mismatches": 0, "meet_mismatches": 0}
    for f in elements:
        for g in elements:
            report["pairs"] += 1
            if lattice.join(f, g) != brute_force_join(elements, f, g):
                report["join_mismatches"] += 1
                logger.debug("join mismatch on %r, %r", f, g)
            if lattice.meet(f, g) != brute_force_meet(elements, f, g):
                report["meet_mismatches"] += 1
                logger.debug("meet mismatch on %r, %r", f, g)
    return report


def enumerate_clopen(q, d, max_candidates=DEFAULT_MAX_CANDIDATES, workers=1, hasse=True, verify_ops=False):
    """
    All clopen tuples of dimension d over a finite carrier, in lexicographic
    order over row-major couples with the carrier's element order.
    """
    elements = q.elements()
    if elements is None:
        raise DomainError(f"{q.name} is not finite and cannot be enumerated")
    if d < 2:
        raise DomainError(f"d must be at least 2, got {d}")
    m = d * (d - 1) // 2
    total = len(elements) ** m
    if total > max_candidates:
        raise BudgetExceededError(f"{total} candidate tuples exceed the budget of {max_candidates}")

    if workers > 1 and total > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_scan_chunk, [(q, d, lo, hi) for lo, hi in _chunks(total, workers)])
            found = sorted(itertools.chain.from_iterable(parts))
    else:
        found = _scan_chunk((q, d, 0, total))
    tuples = [TupleD(q, d, values) for _, values in found]
    logger.debug("%s d=%d: %d clopen tuples out of %d candidates", q.name, d, len(tuples), total)

    result = Enumeration(quantale=q, d=d, elements=tuples)
    if hasse:
        result.covers, result.ranks = cover_relation(tuples)
    if verify_ops:
        result.verification = verify_lattice_ops(ClopenLattice(q, d), tuples)
    return result


def tuple_label(index, f):
    q = f.quantale
    key = json.dumps([q.format_element(v) for v in f.values], separators=(",", ":"))
    return f"{index}:{hashlib.sha1(key.encode()).hexdigest()[:8]}"


def to_dot(enumeration, name="clopen"):
    """DOT digraph of the Hasse diagram, edges from lower to upper cover"""
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    append = lines.append
    for index, f in enumerate(enumeration.elements):
        append(f'  n{index} [label="{tuple_label(index, f)}"];')
    for lower, upper in enumeration.covers:
        append(f"  n{lower} -> n{upper};")
    append("}")
    return "\n".join(lines) + "\n"
