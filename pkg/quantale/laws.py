"""
Law verification for quantale carriers
Exhaustive on finite carriers, seeded sampling on infinite ones
"""

import itertools
import logging
import random
from dataclasses import dataclass, field

from config import DEFAULT_SAMPLES, DEFAULT_SEED
from .core import check_mix

logger = logging.getLogger(__name__)

EXHAUSTIVE = "exhaustive"
SAMPLED = "sampled"

LAWS = (
    "order",
    "lattice",
    "tensor_associative",
    "tensor_unit",
    "oplus_unit",
    "tensor_distributes_join",
    "tensor_distributes_empty",
    "star_involutive",
    "star_antitone",
    "de_morgan",
    "cyclicity",
    "residuation",
    "adjunction",
    "distr",
    "mix",
)


@dataclass
class LawResult:
    name: str
    passed: bool = True
    cases: int = 0
    counterexample: tuple = None
    case: tuple = None
    witness: tuple = None
    error: str = None

    def to_dict(self, q):
        data = {"name": self.name, "passed": self.passed, "cases": self.cases}
        if self.counterexample is not None:
            data["counterexample"] = [q.format_element(x) for x in self.counterexample]
        if self.witness is not None:
            data["witness"] = [q.format_element(x) for x in self.witness]
        if self.error:
            data["error"] = self.error
        return data


@dataclass
class LawReport:
    carrier: str
    mode: str
    seed: int = None
    samples: int = None
    results: list = field(default_factory=list)

    @property
    def passed(self):
        return all(r.passed for r in self.results)

    @property
    def failures(self):
        return [r for r in self.results if not r.passed]

    def law(self, name):
        for result in self.results:
            if result.name == name:
                return result
        raise KeyError(name)

    def to_dict(self, q):
        return {
            "carrier": self.carrier,
            "mode": self.mode,
            "seed": self.seed,
            "samples": self.samples,
            "passed": self.passed,
            "laws": [r.to_dict(q) for r in self.results],
        }


class LawChecker:
    """
    Runs every law (or the selected ones, in LAWS order) against a carrier and
    records one LawResult per law. A failing law never stops the suite;
    exceptions raised by the carrier are recorded as failures of the law
    being checked.

    Sampled runs draw one pool of `samples` elements and build every law's
    cases from it, so derived values cached on the carrier are reused.
    """

    def __init__(self, q, mode=EXHAUSTIVE, seed=DEFAULT_SEED, samples=DEFAULT_SAMPLES, laws=None):
        if mode == EXHAUSTIVE and q.elements() is None:
            raise ValueError(f"exhaustive mode needs a finite carrier, {q.name} is not")
        self.q = q
        self.mode = mode
        self.seed = seed
        self.samples = samples
        self.rng = random.Random(seed)
        self.results = []
        unknown = set(laws or ()) - set(LAWS) - {"oplus_table"}
        if unknown:
            raise ValueError(f"unknown laws: {', '.join(sorted(unknown))}")
        self.laws = None if laws is None else set(laws)
        self._fixed_cases = None
        self._pool = None

    def run_all_checks(self):
        """Run all law checks"""
        self.results = []
        self.rng = random.Random(self.seed)
        self._pool = None

        for name in LAWS:
            if self._selected(name):
                getattr(self, f"_check_{name}")()
        if self.q.has_declared_oplus and self._selected("oplus_table"):
            self._check_oplus_table()

        sampled = self.mode == SAMPLED
        return LawReport(
            carrier=self.q.name,
            mode=self.mode,
            seed=self.seed if sampled else None,
            samples=self.samples if sampled else None,
            results=self.results,
        )

    def _selected(self, name):
        return self.laws is None or name in self.laws

    def _cases(self, arity):
        if self._fixed_cases is not None:
            return self._fixed_cases
        if self.mode == EXHAUSTIVE:
            return itertools.product(self.q.elements(), repeat=arity)
        if self._pool is None:
            self._pool = [self.q.sample(self.rng) for _ in range(self.samples)]
        if arity == 1:
            return [(a,) for a in self._pool]
        return [tuple(self.rng.choice(self._pool) for _ in range(arity)) for _ in range(self.samples)]

    def _check(self, name, arity, test):
        """test(*case) returns None when the law holds, else the witness tuple"""
        result = LawResult(name)
        for case in self._cases(arity):
            result.cases += 1
            try:
                witness = test(*case)
            except Exception as e:
                witness = case
                if result.error is None:
                    result.error = f"{type(e).__name__}: {e}"
            if witness is not None and result.passed:
                result.passed = False
                result.counterexample = tuple(witness)
                result.case = tuple(case)
                logger.debug("law %s fails on %s at %r", name, self.q.name, witness)
        self.results.append(result)
        return result

    def _check_order(self):
        q = self.q

        def test(a, b, c):
            if not q.leq(a, a):
                return (a,)
            if q.leq(a, b) and q.leq(b, a) and not q.equal(a, b):
                return (a, b)
            if q.leq(a, b) and q.leq(b, c) and not q.leq(a, c):
                return (a, b, c)
            return None

        self._check("order", 3, test)

    def _check_lattice(self):
        q = self.q

        def test(a, b, c):
            j = q.join2(a, b)
            m = q.meet2(a, b)
            if not (q.leq(a, j) and q.leq(b, j) and q.leq(m, a) and q.leq(m, b)):
                return (a, b)
            if q.leq(a, c) and q.leq(b, c) and not q.leq(j, c):
                return (a, b, c)
            if q.leq(c, a) and q.leq(c, b) and not q.leq(c, m):
                return (a, b, c)
            if not q.equal(j, q.join2(b, a)) or not q.equal(m, q.meet2(b, a)):
                return (a, b)
            if not q.equal(q.join2(a, m), a) or not q.equal(q.meet2(a, j), a):
                return (a, b)
            if not (q.leq(q.bottom, a) and q.leq(a, q.top)):
                return (a,)
            return None

        self._check("lattice", 3, test)

    def _check_tensor_associative(self):
        q = self.q

        def test(a, b, c):
            left = q.tensor(q.tensor(a, b), c)
            right = q.tensor(a, q.tensor(b, c))
            return None if q.equal(left, right) else (a, b, c)

        self._check("tensor_associative", 3, test)

    def _check_tensor_unit(self):
        q = self.q
        u = q.unit

        def test(a):
            if not q.equal(q.tensor(u, a), a):
                return (u, a)
            if not q.equal(q.tensor(a, u), a):
                return (a, u)
            return None

        self._check("tensor_unit", 1, test)

    def _check_oplus_unit(self):
        q = self.q
        zero = q.dualizing

        def test(a):
            if not q.equal(q.oplus(zero, a), a):
                return (zero, a)
            if not q.equal(q.oplus(a, zero), a):
                return (a, zero)
            return None

        self._check("oplus_unit", 1, test)

    def _check_tensor_distributes_join(self):
        q = self.q

        def test(a, b, c):
            bc = q.join2(b, c)
            if not q.equal(q.tensor(a, bc), q.join2(q.tensor(a, b), q.tensor(a, c))):
                return (a, b, c)
            if not q.equal(q.tensor(bc, a), q.join2(q.tensor(b, a), q.tensor(c, a))):
                return (b, c, a)
            return None

        self._check("tensor_distributes_join", 3, test)

    def _check_tensor_distributes_empty(self):
        q = self.q
        bot = q.bottom

        def test(a):
            if not q.equal(q.tensor(a, bot), bot):
                return (a, bot)
            if not q.equal(q.tensor(bot, a), bot):
                return (bot, a)
            return None

        self._check("tensor_distributes_empty", 1, test)

    def _check_star_involutive(self):
        q = self.q
        self._check("star_involutive", 1, lambda a: None if q.equal(q.star(q.star(a)), a) else (a,))

    def _check_star_antitone(self):
        q = self.q

        def test(a, b):
            if q.leq(a, b) and not q.leq(q.star(b), q.star(a)):
                return (a, b)
            return None

        self._check("star_antitone", 2, test)

    def _check_de_morgan(self):
        q = self.q

        def test(a, b):
            if not q.equal(q.star(q.join2(a, b)), q.meet2(q.star(a), q.star(b))):
                return (a, b)
            if not q.equal(q.star(q.bottom), q.top):
                return (q.bottom,)
            return None

        self._check("de_morgan", 2, test)

    def _check_cyclicity(self):
        q = self.q
        zero = q.dualizing

        def test(a):
            left = q.lres(a, zero)
            if not q.equal(left, q.rres(zero, a)) or not q.equal(left, q.star(a)):
                return (a,)
            return None

        self._check("cyclicity", 1, test)

    def _check_residuation(self):
        q = self.q

        def test(a, b, x):
            if q.leq(x, q.lres(a, b)) != q.leq(q.tensor(a, x), b):
                return (a, b, x)
            if q.leq(x, q.rres(b, a)) != q.leq(q.tensor(x, a), b):
                return (a, b, x)
            return None

        self._check("residuation", 3, test)

    def _check_adjunction(self):
        q = self.q

        def test(f, g, h):
            first = q.leq(q.tensor(f, g), h)
            second = q.leq(f, q.oplus(h, q.star(g)))
            third = q.leq(g, q.oplus(q.star(f), h))
            return None if first == second == third else (f, g, h)

        self._check("adjunction", 3, test)

    def _check_distr(self):
        q = self.q

        def test(a, b, c, d):
            left = q.tensor(q.oplus(a, b), q.oplus(c, d))
            right = q.oplus(q.oplus(a, q.tensor(b, c)), d)
            return None if q.leq(left, right) else (a, b, c, d)

        self._check("distr", 4, test)

    def _check_mix(self):
        q = self.q
        expected = check_mix(q)
        violations = []

        def test(a, b):
            if not q.leq(q.tensor(a, b), q.oplus(a, b)):
                violations.append((a, b))
                if expected:
                    return (a, b)
            return None

        result = self._check("mix", 2, test)
        if not expected:
            # 0 <= 1 fails, so a violating pair must exist; on a sampled run it may be missed
            if violations:
                result.witness = violations[0]
            elif self.mode == EXHAUSTIVE:
                result.passed = False
                result.counterexample = (q.dualizing, q.unit)

    def _check_oplus_table(self):
        q = self.q

        def test(a, b):
            return None if q.equal(q.declared_oplus(a, b), q.oplus(a, b)) else (a, b)

        self._check("oplus_table", 2, test)


def verify_laws(q, mode=EXHAUSTIVE, seed=DEFAULT_SEED, samples=DEFAULT_SAMPLES, laws=None):
    """Check the laws of a mix star-autonomous quantale (all of them unless laws is given) and report per law"""
    return LawChecker(q, mode=mode, seed=seed, samples=samples, laws=laws).run_all_checks()


def replay_counterexample(q, law, case):
    """
    Re-evaluate one law on a recorded case (LawResult.case).
    Returns the LawResult of that single case.
    """
    checker = LawChecker(q, mode=SAMPLED, samples=1)
    checker._fixed_cases = [tuple(case)]
    getattr(checker, f"_check_{law}")()
    return checker.results[0]
