"""
Monotone polylines in the unit cube
Points are tuples of Fractions; a chain is a list of points in order
"""

from fractions import Fraction


def as_point(coords):
    return tuple(c if type(c) is Fraction else Fraction(c) for c in coords)


def point_leq(p, q):
    return all(a <= b for a, b in zip(p, q))


def collinear(p, q, r):
    """q lies on the line through p and r"""
    v = [b - a for a, b in zip(p, q)]
    w = [c - a for a, c in zip(p, r)]
    for i in range(len(v)):
        for j in range(i + 1, len(v)):
            if v[i] * w[j] != v[j] * w[i]:
                return False
    return True


def canonical_chain(points):
    """Drop repeated vertices and merge collinear interior vertices"""
    out = []
    for p in points:
        p = as_point(p)
        if out and out[-1] == p:
            continue
        # monotone chains never double back, so collinear means q is between p and r
        while len(out) >= 2 and collinear(out[-2], out[-1], p):
            out.pop()
        out.append(p)
    return out


def transpose(points):
    return [(p[1], p[0]) for p in points]


def project(points, i, j):
    """Planar projection onto 1-based axes (i, j), canonicalised"""
    return canonical_chain([(p[i - 1], p[j - 1]) for p in points])


def fiber(points, i, x):
    """
    (min, max) corners of the fiber {y in C | y_i = x} of a monotone chain.
    The fiber of a monotone polyline is a segment between two points of C.
    """
    x = Fraction(x)
    k = i - 1
    low = high = None
    for p, q in zip(points, points[1:]):
        if not (p[k] <= x <= q[k]):
            continue
        if p[k] == q[k]:
            hits = [p, q]
        else:
            lam = (x - p[k]) / (q[k] - p[k])
            hits = [tuple(a + lam * (b - a) for a, b in zip(p, q))]
        for h in hits:
            if low is None or point_leq(h, low):
                low = h
            if high is None or point_leq(high, h):
                high = h
    if len(points) == 1 and points[0][k] == x:
        low = high = points[0]
    return low, high
