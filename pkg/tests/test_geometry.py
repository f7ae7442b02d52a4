import itertools
import random
from fractions import Fraction as F

import pytest
from hypothesis import given

from clopen.closure import closure
from clopen.tuples import TupleD, bottom_tuple, classify
from errors import InvalidPathError, NotClopenError, NotStepFunctionError, OutOfRangeError
from geometry.generators import generation_join, make_ji, random_path, random_staircase
from geometry.path import (
    PathD,
    ensure_valid_path,
    membership_holds,
    path_leq,
    path_to_tuple,
    roundtrip_check,
    tuple_to_path,
    validate_path,
)
from geometry.svg import render_svg
from interval.plfun import PLFun, one_step
from interval.quantale import INTERVAL, meetof
from interval.sampling import random_plfun
from multinomial.embedding import identity_tuple, word_path
from multinomial.words import Word

from .strategies import plfuns, points

EIGHTHS = [F(n, 8) for n in range(9)]


def staircases(d, count, seed=0):
    rng = random.Random(seed)
    return [random_staircase(rng, d) for _ in range(count)]


class TestValidatePath:
    def test_diagonal(self):
        assert validate_path(PathD.diagonal(2)).valid

    def test_staircase(self):
        assert validate_path(PathD(2, [(0, 0), (1, 0), (1, 1)])).valid

    def test_non_monotone(self):
        report = validate_path(PathD(2, [(0, 0), (F(1, 2), F(1, 4)), (F(1, 4), F(1, 2)), (1, 1)]))
        assert not report.valid
        assert [(v.index, v.kind) for v in report.violations] == [(2, "monotone")]

    def test_endpoints(self):
        report = validate_path(PathD(2, [(0, F(1, 2)), (1, 1)]))
        assert report.kinds() == {"endpoint"}
        assert report.violations[0].index == 0

    def test_range_and_dimension(self):
        assert validate_path(PathD(2, [(0, 0), (F(3, 2), 1), (1, 1)])).kinds() == {"range"}
        assert validate_path(PathD(3, [(0, 0), (1, 1)])).kinds() == {"dimension"}

    def test_ensure_valid_path(self):
        collinear = PathD(2, [(0, 0), (F(1, 2), F(1, 2)), (1, 1)])
        assert ensure_valid_path(collinear).kinds() == {"canonical"}
        with pytest.raises(InvalidPathError, match="monotone"):
            ensure_valid_path(PathD(2, [(0, 0), (F(1, 2), F(1, 4)), (F(1, 4), F(1, 2)), (1, 1)]))
        with pytest.raises(InvalidPathError, match="dimension"):
            ensure_valid_path(PathD(3, [(0, 0), (1, 1)]))

    def test_collinear_vertex(self):
        p = PathD(2, [(0, 0), (F(1, 2), F(1, 2)), (1, 1)])
        report = validate_path(p)
        assert report.kinds() == {"canonical"}
        assert report.to_dict()["violations"][0]["index"] == 1
        assert p.canonical() == PathD.diagonal(2)
        assert path_to_tuple(p) == identity_tuple(2)

    def test_repeated_vertex(self):
        report = validate_path(PathD(2, [(0, 0), (0, 0), (1, 1)]))
        assert report.kinds() == {"canonical"}


class TestPathToTuple:
    def test_bottom_staircase(self):
        f = path_to_tuple(PathD(2, [(0, 0), (1, 0), (1, 1)]))
        assert f.entry(1, 2) == PLFun.bottom()

    def test_top_staircase(self):
        f = path_to_tuple(PathD(2, [(0, 0), (0, 1), (1, 1)]))
        assert f.entry(1, 2) == one_step(0, 1) == PLFun.top()

    def test_diagonal(self):
        assert path_to_tuple(PathD.diagonal(3)) == identity_tuple(3)

    def test_rejects_invalid_path(self):
        with pytest.raises(InvalidPathError):
            path_to_tuple(PathD(2, [(0, 0), (F(1, 2), F(1, 4)), (F(1, 4), F(1, 2)), (1, 1)]))

    def test_staircases_classify_clopen(self):
        for p in staircases(4, 30):
            c = classify(path_to_tuple(p))
            assert c.clopen and c.compatible


class TestTupleToPath:
    def test_bottom_tuple(self):
        path = tuple_to_path(bottom_tuple(INTERVAL, 3))
        assert path.vertices == ((0, 0, 0), (1, 0, 0), (1, 1, 0), (1, 1, 1))

    def test_identity(self):
        assert tuple_to_path(identity_tuple(4)) == PathD.diagonal(4)

    def test_closed_example(self):
        f = closure(TupleD(INTERVAL, 3, [one_step(F(1, 4), F(3, 4)), PLFun.bottom(), one_step(F(1, 2), F(2, 3))]))
        path = tuple_to_path(f)
        assert path.vertices == (
            (0, 0, 0),
            (F(1, 4), 0, 0),
            (F(1, 4), F(1, 2), 0),
            (F(1, 4), F(1, 2), F(2, 3)),
            (F(1, 4), F(3, 4), F(2, 3)),
            (1, F(3, 4), F(2, 3)),
            (1, 1, F(2, 3)),
            (1, 1, 1),
        )
        assert path.contains_point((F(1, 4), F(3, 4), F(2, 3)))
        for v in path.vertices:
            assert membership_holds(f, v)
        for x in itertools.product(EIGHTHS, repeat=3):
            assert membership_holds(f, x) == path.contains_point(x), x

    def test_rejects_non_clopen(self):
        f = TupleD(INTERVAL, 3, [PLFun.top(), PLFun.bottom(), PLFun.top()])
        with pytest.raises(NotClopenError):
            tuple_to_path(f)

    def test_planar_band(self):
        rng = random.Random(0)
        for _ in range(20):
            g = random_plfun(rng)
            path = tuple_to_path(TupleD(INTERVAL, 2, [g]))
            upper = meetof(g)
            for n in range(33):
                x = F(n, 32)
                low, high = path.fiber(1, x)
                assert low == (x, g.eval(x))
                assert high == (x, upper.eval(x))

    @given(plfuns())
    def test_membership_of_vertices(self, g):
        f = TupleD(INTERVAL, 2, [g])
        for v in tuple_to_path(f).vertices:
            assert membership_holds(f, v)


class TestRoundTrip:
    def test_diagonal(self):
        assert roundtrip_check(PathD.diagonal(4))

    @pytest.mark.parametrize("d, count", [(3, 100), (4, 50)])
    def test_staircases(self, d, count):
        for p in staircases(d, count):
            f = path_to_tuple(p)
            assert classify(f).compatible
            assert tuple_to_path(f) == p.canonical()
            assert path_to_tuple(tuple_to_path(f)) == f

    def test_sloped_paths(self):
        rng = random.Random(0)
        for _ in range(30):
            p = random_path(rng, 3)
            assert roundtrip_check(p)
            assert roundtrip_check(path_to_tuple(p))

    def test_one_step_tuples(self):
        rng = random.Random(0)
        for _ in range(50):
            f = make_ji([rng.choice(EIGHTHS) for _ in range(3)])
            assert roundtrip_check(f)

    def test_rejects_other_types(self):
        with pytest.raises(TypeError):
            roundtrip_check("diagonal")

    def test_order_compatible(self):
        paths = staircases(3, 15, seed=1)
        for c, other in itertools.product(paths, repeat=2):
            assert path_leq(c, other) == path_to_tuple(c).leq(path_to_tuple(other))
        low = PathD(2, [(0, 0), (1, 0), (1, 1)])
        assert path_leq(low, PathD.diagonal(2))
        assert not path_leq(PathD.diagonal(2), low)


class TestJoinIrreducibles:
    def test_entries(self):
        f = make_ji((F(1, 2), F(1, 3), F(3, 4)))
        assert f.entry(1, 2) == one_step(F(1, 2), F(1, 3))
        assert f.entry(1, 3) == one_step(F(1, 2), F(3, 4))
        assert f.entry(2, 3) == one_step(F(1, 3), F(3, 4))
        assert classify(f).clopen

    @pytest.mark.parametrize("p", [(1, 0, 0), (0, 0, 0), (1, 1, 0)])
    def test_degenerate_points(self, p):
        assert make_ji(p) == bottom_tuple(INTERVAL, 3)

    def test_out_of_range(self):
        with pytest.raises(OutOfRangeError):
            make_ji((F(1, 2), F(3, 2)))

    @given(points(3))
    def test_always_clopen(self, p):
        assert classify(make_ji(p)).clopen


class TestGeneration:
    def test_self_generation(self):
        f = make_ji((F(1, 2), F(1, 3), F(3, 4)))
        assert generation_join(f) == f

    def test_bottom(self):
        f = path_to_tuple(word_path(Word.parse("xyz")))
        assert f == bottom_tuple(INTERVAL, 3)
        assert generation_join(f) == f

    def test_seeded_staircases(self):
        for p in staircases(3, 50):
            f = path_to_tuple(p)
            assert generation_join(f) == f

    def test_rejects_slopes(self):
        with pytest.raises(NotStepFunctionError):
            generation_join(identity_tuple(3))


class TestSvg:
    def test_diagonal(self):
        svg = render_svg(PathD.diagonal(2))
        assert svg.startswith("<svg")
        assert 'width="512" height="512"' in svg
        assert "<polyline" in svg
        assert svg.count("<circle") == 2
        assert 'r="2"' in svg
        assert svg.count('class="tick"') == 4

    def test_projection(self):
        path = tuple_to_path(bottom_tuple(INTERVAL, 3))
        svg = render_svg(path, 2, 3)
        assert ">x2<" in svg and ">x3<" in svg
        # (2,3) projection: (0,0) -> (1,0) -> (1,1)
        assert svg.count("<circle") == 3
