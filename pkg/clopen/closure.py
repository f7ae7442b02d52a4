"""
Closure and interior of tuples

The dynamic programs fill couples by increasing gap j - i. The oracles
aggregate over every subdivision of (i, j) and exist to test the programs.
"""

import itertools
from functools import reduce

from config import ORACLE_MAX_D
from errors import BudgetExceededError

from .tuples import TupleD


def _fill(f, combine, aggregate):
    q = f.quantale
    d = f.d
    bar = {}
    for gap in range(1, d):
        for i in range(1, d - gap + 1):
            j = i + gap
            acc = f.entry(i, j)
            for k in range(i + 1, j):
                acc = aggregate(acc, combine(bar[(i, k)], bar[(k, j)]))
            bar[(i, j)] = acc
    return TupleD.from_mapping(q, d, bar)


def closure(f):
    """Least closed tuple above f"""
    q = f.quantale
    return _fill(f, q.tensor, q.join2)


def interior(f):
    """Greatest open tuple below f"""
    q = f.quantale
    return _fill(f, q.oplus, q.meet2)


def subdivisions(i, j):
    """All chains i = l0 < l1 < ... < lk = j"""
    inner = range(i + 1, j)
    for size in range(len(inner) + 1):
        for points in itertools.combinations(inner, size):
            yield (i,) + points + (j,)


def _oracle(f, combine, aggregate, empty, max_d):
    if f.d > max_d:
        raise BudgetExceededError(f"subdivision oracle is limited to d <= {max_d}, got {f.d}")
    values = {}
    for i in range(1, f.d + 1):
        for j in range(i + 1, f.d + 1):
            chains = (
                reduce(combine, (f.entry(a, b) for a, b in zip(s, s[1:])))
                for s in subdivisions(i, j)
            )
            values[(i, j)] = reduce(aggregate, chains, empty)
    return TupleD.from_mapping(f.quantale, f.d, values)


def closure_oracle(f, max_d=ORACLE_MAX_D):
    q = f.quantale
    return _oracle(f, q.tensor, q.join2, q.bottom, max_d)


def interior_oracle(f, max_d=ORACLE_MAX_D):
    q = f.quantale
    return _oracle(f, q.oplus, q.meet2, q.top, max_d)
