"""Letters, graded alphabets, words, compositions and Lyndon words.

A word is a plain tuple of :class:`Letter`; the empty tuple is the unit 1.
Letters sort by degree first and then by an alphabet-specific key, so the
built-in tuple ordering of words is exactly the lexicographic order with
``u < uv``.  A bracket that vanishes is represented by ``None`` (Zero).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Optional

from .errors import CompositionMismatchError, DomainError, UnknownLetterError
from .scalars import TruncSeries, divisors, mobius, series_c_sequence

Word = tuple
Composition = tuple
Zero = None


class Letter(NamedTuple):
    degree: int
    key: tuple
    name: str
    alphabet: str

    def __repr__(self):
        return self.name


class Alphabet:
    """A locally finite graded alphabet with a partial bracket.

    Subclasses provide ``_letters(n)``, ``bracket(a, b)`` and ``letter(name)``.
    ``max_degree`` is None for alphabets with letters in infinitely many
    degrees.  Two alphabets are equal iff their names are equal.
    """

    name: str = "abstract"
    max_degree: Optional[int] = None

    def letters_of_degree(self, n: int) -> tuple:
        if n < 1 or (self.max_degree is not None and n > self.max_degree):
            return ()
        return self._letters(n)

    def _letters(self, n):
        raise NotImplementedError

    def bracket(self, a: Letter, b: Letter) -> Optional[Letter]:
        raise NotImplementedError

    def letter(self, name: str) -> Letter:
        raise NotImplementedError

    def lookup(self, name: str) -> Letter:
        """Like :meth:`letter` but raises UnknownLetterError with a hint."""
        try:
            return self.letter(name)
        except (KeyError, ValueError):
            raise UnknownLetterError(name, self.suggest(name)) from None

    def suggest(self, name):
        import difflib
        pool = [a.name for n in range(1, 7) for a in self.letters_of_degree(n)]
        hits = difflib.get_close_matches(name, pool, n=1, cutoff=0.5)
        return hits[0] if hits else None

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.name == other.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return f"<Alphabet {self.name}>"


def word_degree(w) -> int:
    return sum(a.degree for a in w)


def word_str(w) -> str:
    return ".".join(a.name for a in w) if w else "1"


def reverse(w):
    return tuple(reversed(w))


@lru_cache(maxsize=None)
def words_of_degree(alphabet: Alphabet, n: int) -> tuple:
    """All words of degree n, in lexicographic order."""
    if n == 0:
        return ((),)
    out = []
    for d in range(1, n + 1):
        for a in alphabet.letters_of_degree(d):
            out.extend((a,) + rest for rest in words_of_degree(alphabet, n - d))
    return tuple(sorted(out))


def words_up_to_degree(alphabet, n):
    return [w for d in range(n + 1) for w in words_of_degree(alphabet, d)]


# -- bracket ------------------------------------------------------------------

def bracket_sequence(alphabet: Alphabet, seq) -> Optional[Letter]:
    """[a] = a, [a, S] = [a, [S]]; None if the bracket vanishes."""
    if not seq:
        raise ValueError("bracket of an empty sequence")
    acc = seq[-1]
    for a in reversed(seq[:-1]):
        acc = alphabet.bracket(a, acc)
        if acc is None:
            return None
    return acc


@dataclass
class Violation:
    axiom: str
    witness: tuple
    detail: str

    def __str__(self):
        return f"{self.axiom}: {self.detail} (witness {self.witness!r})"


@dataclass
class ValidationReport:
    degree_bound: int
    violations: list = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.valid


def validate_alphabet(alphabet: Alphabet, degree_bound: int = 10) -> ValidationReport:
    """Check S1-S3 (S0 holds by construction) for letters up to a degree bound."""
    if degree_bound < 1:
        raise ValueError("degree_bound must be >= 1")
    report = ValidationReport(degree_bound)
    letters = [a for n in range(1, degree_bound + 1) for a in alphabet.letters_of_degree(n)]
    by_name = {}
    for a in letters:
        if a.degree < 1:
            report.violations.append(Violation("grading", (a,), "letter of degree < 1"))
        if by_name.setdefault((a.name, a.degree), a) is not a:
            report.violations.append(Violation("identity", (a,), "duplicate letter"))

    def br(a, b):
        if a is None or b is None:
            return None
        return alphabet.bracket(a, b)

    for a in letters:
        for b in letters:
            if a.degree + b.degree > degree_bound:
                continue
            ab, ba = br(a, b), br(b, a)
            if ab != ba:
                report.violations.append(Violation("S1", (a, b), f"[a,b]={ab!r} but [b,a]={ba!r}"))
            if ab is not None:
                if ab.degree != a.degree + b.degree:
                    report.violations.append(
                        Violation("S3", (a, b), f"|[a,b]|={ab.degree} != {a.degree + b.degree}"))
                elif ab not in alphabet.letters_of_degree(ab.degree):
                    report.violations.append(
                        Violation("S3", (a, b), f"[a,b]={ab!r} is not a letter of the alphabet"))
    for a, b, c in itertools.product(letters, repeat=3):
        if a.degree + b.degree + c.degree > degree_bound:
            continue
        left, right = br(br(a, b), c), br(a, br(b, c))
        if left != right:
            report.violations.append(
                Violation("S2", (a, b, c), f"[[a,b],c]={left!r} but [a,[b,c]]={right!r}"))
    return report


# -- compositions -------------------------------------------------------------

@lru_cache(maxsize=None)
def _compositions(n, k):
    if n == 0:
        return ((),) if k in (None, 0) else ()
    if k == 0:
        return ()
    out = []
    for first in range(1, n + 1):
        for rest in _compositions(n - first, None if k is None else k - 1):
            out.append((first,) + rest)
    return tuple(out)


def compositions(n: int, k: Optional[int] = None) -> list:
    """Compositions of n (of length k if given) in lexicographic order.

    >>> compositions(4, 2)
    [(1, 3), (2, 2), (3, 1)]

    n = 0 yields the single empty composition.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_compositions(n, k))


def compose_compositions(j, i) -> tuple:
    """J o I: sum consecutive blocks of I, block sizes given by J."""
    if sum(j) != len(i):
        raise CompositionMismatchError(f"|J|={sum(j)} but l(I)={len(i)}")
    out, pos = [], 0
    for part in j:
        out.append(sum(i[pos:pos + part]))
        pos += part
    return tuple(out)


def partial_sums(i) -> set:
    return set(itertools.accumulate(i[:-1])) if i else set()


def refines(i, k) -> bool:
    """True iff I is a refinement of K (I finer than or equal to K)."""
    return sum(i) == sum(k) and partial_sums(k) <= partial_sums(i)


def composition_from_set(n, subset):
    cuts = sorted(subset)
    bounds = [0] + cuts + [n]
    return tuple(b - a for a, b in zip(bounds, bounds[1:]))


def act(alphabet: Alphabet, i, w):
    """I[w]: bracket consecutive blocks of w; None if any block vanishes."""
    if sum(i) != len(w):
        raise CompositionMismatchError(f"|I|={sum(i)} but l(w)={len(w)}")
    out, pos = [], 0
    for part in i:
        b = bracket_sequence(alphabet, w[pos:pos + part])
        if b is None:
            return None
        out.append(b)
        pos += part
    return tuple(out)


# -- Lyndon words -------------------------------------------------------------

def is_lyndon(w) -> bool:
    if not w:
        raise DomainError("the empty word is not Lyndon")
    return all(w < w[k:] for k in range(1, len(w)))


def lyndon_words(alphabet: Alphabet, n: int) -> list:
    return [w for w in words_of_degree(alphabet, n) if is_lyndon(w)]


def poincare_series(alphabet: Alphabet, n_max: int) -> TruncSeries:
    """dim of the degree-n piece through n_max, as 1/(1 - sum card(A_m) x^m)."""
    denom = [1] + [-len(alphabet.letters_of_degree(m)) for m in range(1, n_max + 1)]
    return TruncSeries(denom, n_max).inverse()


def lyndon_count(alphabet: Alphabet, n: int) -> int:
    """Number of Lyndon words of degree n via the Moebius formula."""
    c = series_c_sequence(poincare_series(alphabet, n))
    total = sum(mobius(n // d) * c[d - 1] for d in divisors(n))
    value = Fraction(total) / n
    assert value.denominator == 1
    return int(value)


def lyndon_factorization(w) -> list:
    """Chen-Fox-Lyndon factorization (Duval's algorithm)."""
    if not w:
        raise DomainError("cannot factor the empty word")
    factors = []
    n, i = len(w), 0
    while i < n:
        j, k = i + 1, i
        while j < n and w[k] <= w[j]:
            k = i if w[k] < w[j] else k + 1
            j += 1
        while i <= k:
            factors.append(tuple(w[i:i + j - k]))
            i += j - k
    return factors
