"""Linear combinations of words and the (quasi-)shuffle products.

Everything is exact over the rationals.  Products on words are memoized
per (alphabet, u, v, q) since every higher-level routine ends up calling
them on the same small words over and over.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache, reduce

from .errors import AlphabetMismatchError, LyndonBasisError, SingularMatrixError
from .scalars import TruncSeries, mat_solve
from .words import (act, compositions, lyndon_words, word_degree,
                    word_str, words_of_degree)


class Element:
    """A finite rational linear combination of words over one alphabet."""

    __slots__ = ("alphabet", "terms")
    kind = "element"

    def __init__(self, alphabet, terms=()):
        acc = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for w, c in items:
            acc[w] = acc.get(w, 0) + Fraction(c)
        self.alphabet = alphabet
        self.terms = {w: c for w, c in acc.items() if c != 0}

    @classmethod
    def word(cls, alphabet, w, coeff=1):
        return cls(alphabet, [(tuple(w), coeff)])

    @classmethod
    def one(cls, alphabet):
        return cls(alphabet, [((), 1)])

    @classmethod
    def zero(cls, alphabet):
        return cls(alphabet)

    def _new(self, terms):
        return type(self)(self.alphabet, terms)

    def _compatible(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {self.kind} with {getattr(other, 'kind', type(other))}")
        if other.alphabet != self.alphabet:
            raise AlphabetMismatchError(f"{self.alphabet.name} vs {other.alphabet.name}")

    def __add__(self, other):
        self._compatible(other)
        return self._new(list(self.terms.items()) + list(other.terms.items()))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return self._new({w: -c for w, c in self.terms.items()})

    def __mul__(self, scalar):
        if isinstance(scalar, Element):
            return NotImplemented
        s = Fraction(scalar)
        return self._new({w: s * c for w, c in self.terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return self * (1 / Fraction(scalar))

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if type(other) is not type(self):
            return NotImplemented
        return self.alphabet == other.alphabet and self.terms == other.terms

    def __hash__(self):
        return hash((self.kind, self.alphabet, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def items(self):
        return self.terms.items()

    def coefficient(self, w) -> Fraction:
        return self.terms.get(tuple(w), Fraction(0))

    def degrees(self) -> set:
        return {word_degree(w) for w in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def homogeneous_part(self, n):
        return self._new({w: c for w, c in self.terms.items() if word_degree(w) == n})

    def max_length(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def map_words(self, fn):
        """Linear extension of ``fn: word -> Element`` (or iterable of pairs)."""
        acc = []
        for w, c in self.terms.items():
            img = fn(w)
            pairs = img.terms.items() if isinstance(img, Element) else img
            acc.extend((v, c * d) for v, d in pairs)
        return self._new(acc)

    def __str__(self):
        from .expr import format_element
        return format_element(self)

    def __repr__(self):
        return f"{type(self).__name__}({self.alphabet.name}: {self})"


# -- products -----------------------------------------------------------------

@lru_cache(maxsize=None)
def _word_product(alphabet, u, v, q, merge):
    """Shuffle (merge=False), quasi-shuffle (q=None) or q-shuffle of two words.

    Recursion on first letters:
    au * bv = a(u * bv) + q^{|au||b|} b(au * v) + q^{|u||b|} [a,b](u * v).
    """
    if not u:
        return ((v, Fraction(1)),)
    if not v:
        return ((u, Fraction(1)),)
    a, u1 = u[0], u[1:]
    b, v1 = v[0], v[1:]
    acc = {}
    for w, c in _word_product(alphabet, u1, v, q, merge):
        w = (a,) + w
        acc[w] = acc.get(w, 0) + c
    scale = 1 if q is None else q ** (word_degree(u) * b.degree)
    if scale:
        for w, c in _word_product(alphabet, u, v1, q, merge):
            w = (b,) + w
            acc[w] = acc.get(w, 0) + scale * c
    if merge:
        ab = alphabet.bracket(a, b)
        scale = 1 if q is None else q ** (word_degree(u1) * b.degree)
        if ab is not None and scale:
            for w, c in _word_product(alphabet, u1, v1, q, merge):
                w = (ab,) + w
                acc[w] = acc.get(w, 0) + scale * c
    return tuple((w, c) for w, c in acc.items() if c)


def _bilinear(x, y, q, merge):
    x._compatible(y)
    acc = []
    alphabet = x.alphabet
    for u, c in x.terms.items():
        for v, d in y.terms.items():
            cd = c * d
            acc.extend((w, cd * e) for w, e in _word_product(alphabet, u, v, q, merge))
    return x._new(acc)


def shuffle(x: Element, y: Element) -> Element:
    return _bilinear(x, y, None, False)


def quasi_shuffle(x: Element, y: Element) -> Element:
    """The quasi-shuffle product; e.g. over qsym z1 * z2 = z1.z2 + z2.z1 + z3."""
    return _bilinear(x, y, None, True)


def product_of(factors, product=quasi_shuffle, alphabet=None):
    if not factors:
        return Element.one(alphabet)
    return reduce(product, factors)


# -- Psi_f, exp, log ----------------------------------------------------------

class FCoeffs:
    """Coefficients a_1, a_2, ... of a power series f(t) with f(0) = 0.

    Coefficients are produced on demand and cached.  ``inverse`` gives the
    compositional inverse, ``compose`` the series of ``self(inner(t))``.
    """

    def __init__(self, func, name=None):
        self._func = func
        self._cache = {}
        self.name = name or "f"

    @classmethod
    def from_sequence(cls, seq, name=None):
        seq = [Fraction(s) for s in seq]
        return cls(lambda i: seq[i - 1] if i <= len(seq) else Fraction(0), name)

    def __getitem__(self, i: int) -> Fraction:
        if i < 1:
            raise IndexError("FCoeffs are indexed from 1")
        if i not in self._cache:
            self._cache[i] = Fraction(self._func(i))
        return self._cache[i]

    def series(self, n) -> TruncSeries:
        return TruncSeries([0] + [self[i] for i in range(1, n + 1)], n)

    def compose(self, inner: "FCoeffs") -> "FCoeffs":
        outer = self

        def coeff(n):
            g = inner.series(n)
            power = TruncSeries([1], n)
            total = Fraction(0)
            for k in range(1, n + 1):
                power = power * g
                total += outer[k] * power[n]
            return total
        return FCoeffs(coeff, f"{self.name}o{inner.name}")

    def inverse(self) -> "FCoeffs":
        if self[1] == 0:
            raise ValueError("a_1 must be nonzero for the inverse to exist")
        f = self
        known = [Fraction(0)]

        def coeff(n):
            while len(known) <= n:
                m = len(known)
                if m == 1:
                    known.append(1 / f[1])
                    continue
                g = TruncSeries(known + [Fraction(0)], m)
                power = TruncSeries([1], m)
                total = Fraction(0)
                for k in range(1, m + 1):
                    power = power * g
                    total += f[k] * power[m]
                known.append(-total / f[1])
            return known[n]
        return FCoeffs(coeff, f"{self.name}^-1")


EXP_COEFFS = FCoeffs(lambda i: Fraction(1, math.factorial(i)), "exp-1")
LOG_COEFFS = FCoeffs(lambda i: Fraction((-1) ** (i - 1), i), "log1p")


def _psi_word(alphabet, f, w):
    out = []
    for comp in compositions(len(w)):
        img = act(alphabet, comp, w)
        if img is None:
            continue
        c = Fraction(1)
        for part in comp:
            c *= f[part]
            if not c:
                break
        if c:
            out.append((img, c))
    return out


def psi(f: FCoeffs, x: Element) -> Element:
    """Psi_f(w) = sum over compositions I of l(w) of a_{i_1}...a_{i_l} I[w]."""
    return x.map_words(lambda w: _psi_word(x.alphabet, f, w))


def exp_map(x: Element) -> Element:
    return psi(EXP_COEFFS, x)


def log_map(x: Element) -> Element:
    return psi(LOG_COEFFS, x)


# -- Lyndon basis -------------------------------------------------------------

def lyndon_monomials(alphabet, n):
    """Multisets of Lyndon words of total degree n, as sorted tuples.

    Ordered by (number of factors, factors lexicographically).
    """
    gens = [w for d in range(1, n + 1) for w in lyndon_words(alphabet, d)]
    gens.sort()
    out = []

    def rec(start, remaining, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for idx in range(start, len(gens)):
            g = gens[idx]
            d = word_degree(g)
            if d <= remaining:
                rec(idx, remaining - d, acc + [g])
    rec(0, n, [])
    out.sort(key=lambda m: (len(m), m))
    return out


@lru_cache(maxsize=None)
def _lyndon_system(alphabet, n):
    rows = words_of_degree(alphabet, n)
    cols = lyndon_monomials(alphabet, n)
    if len(rows) != len(cols):
        raise LyndonBasisError(f"degree {n}: {len(rows)} words but {len(cols)} Lyndon monomials")
    index = {w: i for i, w in enumerate(rows)}
    matrix = [[Fraction(0)] * len(cols) for _ in rows]
    for j, mono in enumerate(cols):
        prod = product_of([Element.word(alphabet, g) for g in mono], alphabet=alphabet)
        for w, c in prod.items():
            matrix[index[w]][j] = c
    return rows, cols, matrix


class LyndonExpression:
    """sum of coeff * (L_1 * L_2 * ...) with each L_i a Lyndon word."""

    def __init__(self, alphabet, terms):
        self.alphabet = alphabet
        self.terms = [(Fraction(c), tuple(m)) for c, m in terms if c]

    def evaluate(self, product=quasi_shuffle) -> Element:
        total = Element.zero(self.alphabet)
        for c, mono in self.terms:
            factors = [Element.word(self.alphabet, g) for g in mono]
            total = total + c * product_of(factors, product, self.alphabet)
        return total

    def __str__(self):
        from .expr import format_coefficient_terms
        return format_coefficient_terms(
            [(c, " * ".join(word_str(g) for g in mono) if mono else None)
             for c, mono in self.terms])

    def __repr__(self):
        return f"LyndonExpression({self})"


def lyndon_express(x: Element) -> LyndonExpression:
    """Write x as a polynomial in Lyndon words under the quasi-shuffle product."""
    terms = []
    for n in sorted(x.degrees()):
        part = x.homogeneous_part(n)
        if n == 0:
            terms.append((part.coefficient(()), ()))
            continue
        rows, cols, matrix = _lyndon_system(x.alphabet, n)
        rhs = [part.coefficient(w) for w in rows]
        try:
            sol = mat_solve(matrix, rhs)
        except SingularMatrixError as exc:
            raise LyndonBasisError(f"degree {n}: Lyndon product system is singular") from exc
        terms.extend(zip(sol, cols))
    return LyndonExpression(x.alphabet, terms)

