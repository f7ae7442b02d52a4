"""
Join-irreducible tuples ji(p), generation of step tuples, random paths
"""

from fractions import Fraction

from clopen.lattice import ClopenLattice
from clopen.tuples import TupleD, couples, is_clopen
from errors import DomainError, NotClopenError, NotStepFunctionError
from interval.plfun import check_unit, one_step
from interval.quantale import INTERVAL, IntervalQuantale

from .path import PathD, tuple_to_path


def make_ji(p):
    """ji(p)_{i,j} = ji(p_i, p_j)"""
    p = [check_unit(c, "coordinate") for c in p]
    d = len(p)
    if d < 2:
        raise DomainError(f"a point needs at least 2 coordinates, got {d}")
    return TupleD(INTERVAL, d, [one_step(p[i - 1], p[j - 1]) for i, j in couples(d)])


def generation_join(f):
    """Lattice join of the ji(p) below f, p ranging over the vertices of C_f"""
    if not isinstance(f.quantale, IntervalQuantale):
        raise DomainError(f"generation works over the interval quantale, not {f.quantale.name}")
    for (i, j), g in f.items():
        if not g.is_step():
            raise NotStepFunctionError(f"entry ({i},{j}) has a positive slope and is not a finite join of one-steps")
    if not is_clopen(f):
        raise NotClopenError(f"tuple is not clopen: {f!r}")
    generators = []
    for p in tuple_to_path(f).vertices:
        g = make_ji(p)
        if g.leq(f):
            generators.append(g)
    return ClopenLattice(INTERVAL, f.d).join_all(generators)


def random_staircase(rng, d, max_steps=6, denominator=8):
    """
    Staircase path from 0 to 1 with axis-parallel moves only, at most
    max(max_steps, d) moves, turning points on the 1/denominator grid.
    """
    steps = rng.randint(d, max(d, max_steps))
    targets = {k: [] for k in range(d)}
    for _ in range(steps - d):
        targets[rng.randrange(d)].append(Fraction(rng.randint(1, denominator - 1), denominator))
    for k in targets:
        targets[k] = sorted(set(targets[k])) + [Fraction(1)]

    point = [Fraction(0)] * d
    vertices = [tuple(point)]
    while any(targets.values()):
        k = rng.choice([k for k in sorted(targets) if targets[k]])
        point[k] = targets[k].pop(0)
        vertices.append(tuple(point))
    return PathD.build(d, vertices)


def random_path(rng, d, segments=4, denominator=8):
    """Monotone polyline with segments-1 random interior vertices on the grid"""
    columns = [sorted(Fraction(rng.randint(0, denominator), denominator) for _ in range(segments - 1)) for _ in range(d)]
    inner = list(zip(*columns)) if segments > 1 else []
    return PathD.build(d, [(Fraction(0),) * d] + inner + [(Fraction(1),) * d])
