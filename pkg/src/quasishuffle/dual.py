"""The graded dual: concatenation algebra with the transposed coproducts."""
from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache

from .algebra import Element, _word_product
from .errors import DomainError
from .hopf import TensorElement
from .words import bracket_sequence, reverse, word_degree, words_of_degree


class DualElement(Element):
    """A linear combination of dual basis elements w*."""

    __slots__ = ()
    kind = "dual"


def dual_word(alphabet, w, coeff=1) -> DualElement:
    return DualElement.word(alphabet, w, coeff)


def pairing(x: Element, y: DualElement) -> Fraction:
    """(u, v*) = 1 if u == v else 0, extended bilinearly."""
    if x.kind != "element" or y.kind != "dual":
        raise TypeError("pairing takes an Element and a DualElement")
    if x.alphabet != y.alphabet:
        raise DomainError("pairing across alphabets")
    small, big = (x, y) if len(x) <= len(y) else (y, x)
    return sum((c * big.coefficient(w) for w, c in small.items()), Fraction(0))


def pair_tensor(t: TensorElement, u, v) -> Fraction:
    """Pair the dual tensor t against u (x) v."""
    return t.coefficient(u, v)


def concat_product(x: DualElement, y: DualElement) -> DualElement:
    x._compatible(y)
    return x._new([(u + v, c * d) for u, c in x.items() for v, d in y.items()])


def lie_bracket(x: DualElement, y: DualElement) -> DualElement:
    return concat_product(x, y) - concat_product(y, x)


@lru_cache(maxsize=None)
def _dual_coproduct_word(alphabet, w, merge):
    n, length = word_degree(w), len(w)
    acc = []
    for d in range(n + 1):
        for u in words_of_degree(alphabet, d):
            if len(u) > length:
                continue
            for v in words_of_degree(alphabet, n - d):
                if len(u) + len(v) < length or len(v) > length:
                    continue
                if not merge and len(u) + len(v) != length:
                    continue
                for z, c in _word_product(alphabet, u, v, None, merge):
                    if z == w:
                        acc.append(((u, v), c))
    return tuple(acc)


def dual_coproduct(x, kind: str = "quasishuffle", alphabet=None) -> TensorElement:
    """delta (kind='shuffle') or delta' (kind='quasishuffle') on the dual.

    The coefficient of u* (x) v* in the image of w* is the coefficient of w
    in the product of u and v; candidates are enumerated by degree.
    ``x`` is a DualElement or a bare word (then ``alphabet`` is required).
    """
    if kind not in ("shuffle", "quasishuffle"):
        raise ValueError(f"unknown dual coproduct kind {kind!r}")
    if isinstance(x, tuple):
        x = dual_word(alphabet, x)
    merge = kind == "quasishuffle"
    acc = []
    for w, c in x.items():
        acc.extend((uv, c * e) for uv, e in _dual_coproduct_word(x.alphabet, w, merge))
    return TensorElement(x.alphabet, acc, dual=True)


@lru_cache(maxsize=None)
def letter_preimages(alphabet, a) -> tuple:
    """All words v (length >= 1) with [v] == a."""
    return tuple(v for v in words_of_degree(alphabet, a.degree)
                 if bracket_sequence(alphabet, v) == a)


def preimage_set(alphabet, w) -> list:
    """P(w): all v with I[v] = w for some composition I of l(v)."""
    choices = [letter_preimages(alphabet, a) for a in w]
    return sorted(tuple(itertools.chain.from_iterable(parts))
                  for parts in itertools.product(*choices))


def _letterwise(x: DualElement, weight) -> DualElement:
    alphabet = x.alphabet

    def on_word(w):
        acc = [((), Fraction(1))]
        for a in w:
            images = [(v, weight(len(v))) for v in letter_preimages(alphabet, a)]
            acc = [(u + v, c * d) for u, c in acc for v, d in images if d]
        return acc
    return x.map_words(on_word)


def exp_star(x: DualElement) -> DualElement:
    """Transpose of exp: a* -> sum_{[v]=a} v*/l(v)!, extended multiplicatively."""
    return _letterwise(x, lambda n: Fraction(1, math.factorial(n)))


def log_star(x: DualElement) -> DualElement:
    return _letterwise(x, lambda n: Fraction((-1) ** (n - 1), n))


def antipode_star(x) -> DualElement:
    """S*(w*) = sum over v in P(reverse w) of (-1)^l(v) v*."""
    return x.map_words(lambda w: [(v, (-1) ** len(v))
                                  for v in preimage_set(x.alphabet, reverse(w))])


def is_primitive(x: DualElement, kind: str = "quasishuffle") -> bool:
    if not x.is_homogeneous():
        raise DomainError("primitivity check needs a homogeneous element")
    one = DualElement.one(x.alphabet)
    expected = TensorElement.from_elements(x, one) + TensorElement.from_elements(one, x)
    return dual_coproduct(x, kind) == expected
