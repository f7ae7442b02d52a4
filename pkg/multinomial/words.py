"""
Words with fixed letter multiplicities and the multinomial order
"""

import logging
from collections import Counter, deque
from math import factorial, prod

from more_itertools import distinct_permutations

from config import DEFAULT_WORD_BUDGET
from errors import BudgetExceededError, DocumentError, WordMismatchError

logger = logging.getLogger(__name__)

ALPHABET = "xyzwabcdefghijklmnopqrstuv"


class Word:
    """A word over axes 1..d; v[k-1] is the number of occurrences of letter k"""

    __slots__ = ("letters", "v")

    def __init__(self, letters, v):
        letters = tuple(int(a) for a in letters)
        v = tuple(int(n) for n in v)
        if any(n <= 0 for n in v):
            raise WordMismatchError(f"multiplicities must be positive, got {v}")
        counts = Counter(letters)
        if any(a < 1 or a > len(v) for a in counts) or tuple(counts[k] for k in range(1, len(v) + 1)) != v:
            raise WordMismatchError(f"letters of {_spell(letters)} do not match multiplicities {list(v)}")
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "v", v)

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    def __reduce__(self):
        return (type(self), (self.letters, self.v))

    @classmethod
    def parse(cls, text, v=None):
        letters = []
        for ch in text:
            if ch not in ALPHABET:
                raise DocumentError(f"unknown letter {ch!r}, expected letters from {ALPHABET[:4]}...")
            letters.append(ALPHABET.index(ch) + 1)
        if v is None:
            d = max(letters) if letters else 0
            counts = Counter(letters)
            v = [counts[k] for k in range(1, d + 1)]
        return cls(letters, v)

    @property
    def d(self):
        return len(self.v)

    def swaps(self):
        """Words one step above: an adjacent ab becomes ba for a < b"""
        for k in range(len(self.letters) - 1):
            a, b = self.letters[k], self.letters[k + 1]
            if a < b:
                yield Word(self.letters[:k] + (b, a) + self.letters[k + 2:], self.v)

    def __str__(self):
        return _spell(self.letters)

    def __repr__(self):
        return f"Word({str(self)!r}, v={list(self.v)})"

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.letters == other.letters and self.v == other.v

    def __lt__(self, other):
        return self.letters < other.letters

    def __hash__(self):
        return hash((self.letters, self.v))

    def to_dict(self):
        return {"v": list(self.v), "word": str(self)}


def _spell(letters):
    return "".join(ALPHABET[a - 1] for a in letters)


def multinomial_size(v):
    return factorial(sum(v)) // prod(factorial(n) for n in v)


def words(v, budget=DEFAULT_WORD_BUDGET):
    """All words of L(v) in lexicographic order"""
    size = multinomial_size(v)
    if size > budget:
        raise BudgetExceededError(f"L({','.join(map(str, v))}) has {size} words, budget is {budget}")
    base = [k for k, n in enumerate(v, 1) for _ in range(n)]
    return sorted(Word(p, v) for p in distinct_permutations(base))


def bottom_word(v):
    return Word([k for k, n in enumerate(v, 1) for _ in range(n)], v)


def top_word(v):
    return Word([k for k, n in reversed(list(enumerate(v, 1))) for _ in range(n)], v)


def _same_lattice(u, w):
    if u.v != w.v:
        raise WordMismatchError(f"{u} and {w} have different multiplicities {list(u.v)} and {list(w.v)}")


def word_leq(u, w, budget=DEFAULT_WORD_BUDGET):
    """w is reachable from u by rewriting ab into ba with a < b"""
    _same_lattice(u, w)
    if u == w:
        return True
    seen = {u}
    queue = deque([u])
    while queue:
        current = queue.popleft()
        for nxt in current.swaps():
            if nxt == w:
                return True
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > budget:
                    raise BudgetExceededError(f"rewriting search visited more than {budget} words")
                queue.append(nxt)
    return False


def inversions(w):
    """
    Pairs ((a, p), (b, q)) with a < b where the q-th b precedes the p-th a.
    Occurrences are numbered from 1.
    """
    seen = Counter()
    positions = []
    for letter in w.letters:
        seen[letter] += 1
        positions.append((letter, seen[letter]))
    result = set()
    for k, (b, q) in enumerate(positions):
        for a, p in positions[k + 1:]:
            if a < b:
                result.add(((a, p), (b, q)))
    return frozenset(result)


def word_leq_fast(u, w):
    _same_lattice(u, w)
    return inversions(u) <= inversions(w)


def word_order_discrepancies(v, budget=DEFAULT_WORD_BUDGET):
    """Pairs on which the rewriting search and the inversion test disagree"""
    found = []
    all_words = words(v, budget)
    for u in all_words:
        for w in all_words:
            slow = word_leq(u, w, budget)
            if slow != word_leq_fast(u, w):
                logger.warning("word order disagreement on %s <= %s: search says %s", u, w, slow)
                found.append((u, w))
    return found
