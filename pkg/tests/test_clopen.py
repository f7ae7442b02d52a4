import itertools
import random
from fractions import Fraction as F

import networkx as nx
import pytest
from hypothesis import given

from clopen.closure import closure, closure_oracle, interior, interior_oracle, subdivisions
from clopen.lattice import (
    JOIN,
    MEET,
    ClopenLattice,
    cover_relation,
    enumerate_clopen,
    lattice_op,
    rank_profile,
    to_dot,
    tuple_label,
)
from clopen.tuples import (
    TupleD,
    bottom_tuple,
    classify,
    couples,
    dual,
    is_clopen,
    is_closed,
    is_open,
    top_tuple,
    triple_is_open_by_mix,
)
from errors import BudgetExceededError, DomainError, MixedCarrierError, NotClopenError, NotMixError
from interval.plfun import PLFun, one_step
from interval.quantale import INTERVAL
from interval.sampling import random_plfun
from quantale.finite import builtin, load_finite_quantale

from .strategies import finite_tuples, interval_tuples
from .test_quantale import NON_MIX_DOCUMENT

BOOL2 = builtin("bool2")
SUGIHARA3 = builtin("sugihara3")


def b2(*values):
    return TupleD(BOOL2, _dimension(len(values)), [str(v) for v in values])


def _dimension(m):
    d = 2
    while d * (d - 1) // 2 < m:
        d += 1
    return d


def all_tuples(q, d):
    m = d * (d - 1) // 2
    return [TupleD(q, d, values) for values in itertools.product(q.elements(), repeat=m)]


def seeded_finite(q, d, count=100, seed=0):
    rng = random.Random(seed)
    m = d * (d - 1) // 2
    return [TupleD(q, d, [rng.choice(q.elements()) for _ in range(m)]) for _ in range(count)]


def seeded_interval(d=3, count=100, seed=0):
    rng = random.Random(seed)
    m = d * (d - 1) // 2
    return [TupleD(INTERVAL, d, [random_plfun(rng, max_breaks=4) for _ in range(m)]) for _ in range(count)]


def permutation_count(d):
    return sum(1 for _ in itertools.permutations(range(d)))


def ordered_partition_count(d):
    """Surjections of [d] onto an initial segment {0..k-1}"""
    count = 0
    for blocks in itertools.product(range(d), repeat=d):
        if set(blocks) == set(range(max(blocks) + 1)):
            count += 1
    return count


def weak_order(n):
    """Right weak order on permutations of 1..n by adjacent transpositions"""
    graph = nx.DiGraph()
    for p in itertools.permutations(range(1, n + 1)):
        graph.add_node(p)
        for i in range(n - 1):
            if p[i] < p[i + 1]:
                graph.add_edge(p, p[:i] + (p[i + 1], p[i]) + p[i + 2:])
    return graph


class TestTupleD:
    def test_couples_are_row_major(self):
        assert couples(3) == [(1, 2), (1, 3), (2, 3)]
        assert len(couples(5)) == 10

    def test_derived_entries(self):
        f = b2(1, 0, 1)
        assert f.entry(1, 2) == "1"
        assert f.entry(2, 1) == "0"
        assert f.entry(3, 1) == "1"
        assert f.entry(2, 2) == "1"

    def test_wrong_length(self):
        with pytest.raises(DomainError):
            TupleD(BOOL2, 3, ["0", "1"])

    def test_index_out_of_range(self):
        with pytest.raises(DomainError):
            b2(1, 0, 1).entry(1, 4)

    def test_mixed_carriers(self):
        with pytest.raises(MixedCarrierError):
            b2(1, 0, 1).leq(TupleD(SUGIHARA3, 3, ["0", "0", "0"]))
        with pytest.raises(MixedCarrierError):
            b2(1, 0, 1).pointwise_join(bottom_tuple(BOOL2, 4))

    def test_from_mapping(self):
        f = TupleD.from_mapping(BOOL2, 3, {(1, 2): "1", (1, 3): "1", (2, 3): "0"})
        assert f == b2(1, 1, 0)
        with pytest.raises(DomainError):
            TupleD.from_mapping(BOOL2, 3, {(1, 2): "1"})


class TestClassify:
    def test_not_closed(self):
        c = classify(b2(1, 0, 1))
        assert not c.closed
        assert not c.compatible
        assert not c.clopen

    def test_clopen(self):
        c = classify(b2(1, 1, 0))
        assert c.closed and c.open and c.compatible
        assert c.to_dict() == {"closed": True, "open": True, "compatible": True, "clopen": True}

    @pytest.mark.parametrize("q, d", [(BOOL2, 4), (SUGIHARA3, 3)])
    def test_compatible_iff_clopen(self, q, d):
        for f in all_tuples(q, d):
            c = classify(f)
            assert c.compatible == (c.closed and c.open)

    def test_compatible_iff_clopen_on_interval_tuples(self):
        for f in seeded_interval(count=40):
            c = classify(closure(f))
            assert c.compatible == c.clopen

    def test_mix_shortcut(self):
        q = SUGIHARA3
        for a, b in itertools.product(q.elements(), repeat=2):
            f = TupleD(q, 3, [a, q.tensor(a, b), b])
            assert triple_is_open_by_mix(f, 1, 2, 3)
            assert is_open(f)

    def test_mix_shortcut_needs_mix(self):
        q = load_finite_quantale(NON_MIX_DOCUMENT, name="chain4")
        f = TupleD(q, 3, ["e", "e", "e"])
        assert not triple_is_open_by_mix(f, 1, 2, 3)


class TestClosure:
    def test_boolean_transitive_closure(self):
        assert closure(b2(1, 0, 1)) == b2(1, 1, 1)

    def test_interval_example(self):
        f = TupleD(INTERVAL, 3, [one_step(F(1, 4), F(3, 4)), PLFun.bottom(), one_step(F(1, 2), F(2, 3))])
        g = closure(f)
        assert g.entry(1, 3) == one_step(F(1, 4), F(2, 3))
        assert g.entry(1, 2) == f.entry(1, 2)
        assert g.entry(2, 3) == f.entry(2, 3)

    def test_single_couple(self):
        f = b2(1)
        assert closure_oracle(f) == f == closure(f)

    def test_matches_oracle_bool2_d4(self):
        for f in all_tuples(BOOL2, 4):
            assert closure(f) == closure_oracle(f)
            assert interior(f) == interior_oracle(f)

    def test_matches_oracle_sugihara3_d3(self):
        for f in all_tuples(SUGIHARA3, 3):
            assert closure(f) == closure_oracle(f)
            assert interior(f) == interior_oracle(f)

    def test_matches_oracle_interval_d3(self):
        for f in seeded_interval():
            assert closure(f) == closure_oracle(f)

    def test_idempotent(self):
        for f in seeded_finite(SUGIHARA3, 4):
            g = closure(f)
            assert closure(g) == g
            assert interior(interior(f)) == interior(f)

    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_extensive_and_monotone(self, d):
        tuples = all_tuples(BOOL2, d)
        for f in tuples:
            assert f.leq(closure(f)) and is_closed(closure(f))
            assert interior(f).leq(f) and is_open(interior(f))
        for f, g in itertools.product(tuples, repeat=2):
            if f.leq(g):
                assert closure(f).leq(closure(g))
                assert interior(f).leq(interior(g))

    def test_boolean_interior(self):
        assert interior(b2(0, 1, 0)) == b2(0, 0, 0)

    @pytest.mark.parametrize("q", [BOOL2, SUGIHARA3, INTERVAL])
    def test_interior_of_top(self, q):
        top = top_tuple(q, 3)
        assert interior(top) == top

    def test_interior_is_dual_closure(self):
        for f in seeded_finite(SUGIHARA3, 4):
            assert interior(f) == dual(closure(dual(f)))

    def test_oracle_guard(self):
        with pytest.raises(BudgetExceededError):
            closure_oracle(bottom_tuple(BOOL2, 8))

    def test_subdivisions(self):
        assert list(subdivisions(1, 2)) == [(1, 2)]
        assert sorted(subdivisions(1, 4)) == [(1, 2, 3, 4), (1, 2, 4), (1, 3, 4), (1, 4)]

    @given(finite_tuples("sugihara3", 4), finite_tuples("sugihara3", 4))
    def test_closure_is_least(self, f, k):
        above = closure(f.pointwise_join(k))
        assert is_closed(above) and f.leq(above)
        assert closure(f).leq(above)


class TestMixTheorem:
    @pytest.mark.parametrize("q, d", [(BOOL2, 2), (BOOL2, 3), (BOOL2, 4), (SUGIHARA3, 2), (SUGIHARA3, 3), (SUGIHARA3, 4)])
    def test_interior_keeps_closed(self, q, d):
        for f in all_tuples(q, d):
            if is_closed(f):
                assert is_closed(interior(f))
            if is_open(f):
                assert is_open(closure(f))

    def test_interior_keeps_closed_interval(self):
        for f in seeded_interval():
            g = closure(f)
            assert is_clopen(interior(g))

    @given(interval_tuples())
    def test_closure_of_open_stays_open(self, f):
        g = interior(f)
        assert is_clopen(closure(g))


class TestDual:
    def test_boolean_complement(self):
        assert dual(b2(1, 1, 1)) == b2(0, 0, 0)

    def test_involution(self):
        for f in seeded_finite(SUGIHARA3, 4):
            assert dual(dual(f)) == f

    def test_exchanges_closed_and_open(self):
        for f in all_tuples(BOOL2, 4):
            assert classify(dual(f)).open == classify(f).closed
            assert classify(dual(f)).closed == classify(f).open

    def test_order_reversing(self):
        tuples = seeded_finite(SUGIHARA3, 3, count=30)
        for f, g in itertools.product(tuples, repeat=2):
            if f.leq(g):
                assert dual(g).leq(dual(f))


class TestClopenLattice:
    def test_boolean_join_and_meet(self):
        assert lattice_op(JOIN, b2(1, 1, 0), b2(0, 0, 1)) == b2(1, 1, 1)
        assert lattice_op(MEET, b2(1, 1, 0), b2(0, 0, 1)) == b2(0, 0, 0)

    def test_bottom_is_join_unit(self):
        lattice = ClopenLattice(SUGIHARA3, 3)
        for f in enumerate_clopen(SUGIHARA3, 3, hasse=False).elements:
            assert lattice.join(f, lattice.bottom()) == f
            assert lattice.meet(f, lattice.top()) == f

    @pytest.mark.parametrize("q", [BOOL2, SUGIHARA3, INTERVAL])
    def test_bounds_are_clopen(self, q):
        lattice = ClopenLattice(q, 4)
        assert lattice.contains(lattice.bottom())
        assert lattice.contains(lattice.top())

    def test_rejects_non_clopen(self):
        with pytest.raises(NotClopenError):
            lattice_op(JOIN, b2(1, 0, 1), b2(0, 0, 0))

    def test_rejects_non_mix(self):
        q = load_finite_quantale(NON_MIX_DOCUMENT, name="chain4")
        with pytest.raises(NotMixError):
            ClopenLattice(q, 3)

    def test_rejects_other_dimension(self):
        lattice = ClopenLattice(BOOL2, 3)
        with pytest.raises(MixedCarrierError):
            lattice.join(b2(1, 1, 0), bottom_tuple(BOOL2, 4))

    def test_unknown_operation(self):
        with pytest.raises(ValueError):
            lattice_op("sum", b2(1, 1, 0), b2(0, 0, 1))

    def test_join_all(self):
        lattice = ClopenLattice(BOOL2, 3)
        assert lattice.join_all([]) == lattice.bottom()
        assert lattice.join_all([b2(1, 1, 0), b2(0, 0, 1)]) == b2(1, 1, 1)
        assert lattice.meet_all([]) == lattice.top()


class TestEnumeration:
    @pytest.mark.parametrize("d, count", [(2, 2), (3, 6), (4, 24)])
    def test_bool2_counts(self, d, count):
        result = enumerate_clopen(BOOL2, d, hasse=False)
        assert result.count == count == permutation_count(d)

    @pytest.mark.parametrize("d, count", [(2, 3), (3, 13)])
    def test_sugihara3_counts(self, d, count):
        result = enumerate_clopen(SUGIHARA3, d, hasse=False)
        assert result.count == count == ordered_partition_count(d)

    def test_brute_force_filter_agrees(self):
        brute = [f for f in all_tuples(SUGIHARA3, 3) if is_clopen(f)]
        assert enumerate_clopen(SUGIHARA3, 3, hasse=False).elements == brute

    def test_order_is_lexicographic(self):
        result = enumerate_clopen(SUGIHARA3, 3, hasse=False)
        keys = [[SUGIHARA3.index(v) for v in f.values] for f in result.elements]
        assert keys == sorted(keys)

    def test_workers_do_not_change_output(self):
        serial = enumerate_clopen(BOOL2, 4, hasse=False)
        parallel = enumerate_clopen(BOOL2, 4, hasse=False, workers=2)
        assert parallel.elements == serial.elements

    def test_weak_order_shape(self):
        result = enumerate_clopen(BOOL2, 3)
        assert result.count == 6
        assert len(result.covers) == 6
        assert rank_profile(result) == [1, 2, 2, 1]
        hasse = nx.DiGraph(result.covers)
        assert nx.is_isomorphic(hasse, weak_order(3))

    def test_permutohedron_d4(self):
        result = enumerate_clopen(BOOL2, 4)
        assert rank_profile(result) == [1, 3, 5, 6, 5, 3, 1]
        assert nx.is_isomorphic(nx.DiGraph(result.covers), weak_order(4))

    @pytest.mark.parametrize("q, d", [(BOOL2, 2), (BOOL2, 3), (BOOL2, 4), (SUGIHARA3, 3)])
    def test_lattice_operations_match_brute_force(self, q, d):
        result = enumerate_clopen(q, d, hasse=False, verify_ops=True)
        n = result.count
        assert result.verification == {"pairs": n * n, "join_mismatches": 0, "meet_mismatches": 0}

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            enumerate_clopen(SUGIHARA3, 4, max_candidates=100)

    def test_interval_cannot_be_enumerated(self):
        with pytest.raises(DomainError):
            enumerate_clopen(INTERVAL, 2)

    def test_cover_relation_of_chain(self):
        chain = [b2(0), b2(1)]
        assert cover_relation(chain) == ([(0, 1)], [0, 1])

    def test_dot_output(self):
        result = enumerate_clopen(BOOL2, 3)
        dot = to_dot(result)
        assert dot.startswith("digraph clopen {")
        assert "rankdir=BT;" in dot
        assert dot.count("->") == 6
        assert tuple_label(0, result.elements[0]) in dot
        assert dot == to_dot(enumerate_clopen(BOOL2, 3))
