"""Coproduct, counit, antipode and the Hopf-axiom checks."""
from __future__ import annotations

import itertools
from fractions import Fraction

from .algebra import Element, exp_map, product_of, quasi_shuffle
from .errors import AlphabetMismatchError
from .words import act, compositions, reverse


class TensorElement:
    """Finite linear combination of pairs of words, u (x) v.

    ``dual`` marks tensors of dual basis elements (outputs of the dual
    coproducts) so they are never mixed with tensors of words.
    """

    __slots__ = ("alphabet", "terms", "dual")

    def __init__(self, alphabet, terms=(), dual=False):
        acc = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for uv, c in items:
            acc[uv] = acc.get(uv, 0) + Fraction(c)
        self.alphabet = alphabet
        self.dual = dual
        self.terms = {uv: c for uv, c in acc.items() if c != 0}

    def _new(self, terms):
        return TensorElement(self.alphabet, terms, self.dual)

    def _compatible(self, other):
        if not isinstance(other, TensorElement) or other.dual != self.dual:
            raise TypeError("incompatible tensor operands")
        if other.alphabet != self.alphabet:
            raise AlphabetMismatchError(f"{self.alphabet.name} vs {other.alphabet.name}")

    def __add__(self, other):
        self._compatible(other)
        return self._new(list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self):
        return self._new({uv: -c for uv, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        s = Fraction(scalar)
        return self._new({uv: s * c for uv, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (self.alphabet == other.alphabet and self.dual == other.dual
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.alphabet, self.dual, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def items(self):
        return self.terms.items()

    def coefficient(self, u, v):
        return self.terms.get((tuple(u), tuple(v)), Fraction(0))

    def map(self, left, right):
        """(left (x) right) applied termwise; both maps send Elements to Elements."""
        cls = _element_class(self.dual)
        acc = []
        for (u, v), c in self.terms.items():
            lu = left(cls.word(self.alphabet, u))
            rv = right(cls.word(self.alphabet, v))
            for a, ca in lu.items():
                for b, cb in rv.items():
                    acc.append(((a, b), c * ca * cb))
        return self._new(acc)

    def multiply(self, other, product=quasi_shuffle):
        """(a (x) b)(c (x) d) = (a . c) (x) (b . d) for the given product."""
        self._compatible(other)
        cls = _element_class(self.dual)
        acc = []
        for (a, b), c1 in self.terms.items():
            for (c, d), c2 in other.terms.items():
                left = product(cls.word(self.alphabet, a), cls.word(self.alphabet, c))
                right = product(cls.word(self.alphabet, b), cls.word(self.alphabet, d))
                for x, cx in left.items():
                    for y, cy in right.items():
                        acc.append(((x, y), c1 * c2 * cx * cy))
        return self._new(acc)

    def contract(self, product=quasi_shuffle):
        """m(u (x) v) = product(u, v), extended linearly."""
        cls = _element_class(self.dual)
        total = cls.zero(self.alphabet)
        for (u, v), c in self.terms.items():
            total = total + c * product(cls.word(self.alphabet, u), cls.word(self.alphabet, v))
        return total

    @classmethod
    def from_elements(cls, x, y):
        acc = [((u, v), c * d) for u, c in x.items() for v, d in y.items()]
        return cls(x.alphabet, acc, dual=(x.kind == "dual"))

    def __str__(self):
        from .expr import format_tensor
        return format_tensor(self)

    def __repr__(self):
        return f"TensorElement({self.alphabet.name}: {self})"


def _element_class(dual):
    if dual:
        from .dual import DualElement
        return DualElement
    return Element


def coproduct(x: Element) -> TensorElement:
    """Deconcatenation: w -> sum over uv = w of u (x) v."""
    acc = []
    for w, c in x.items():
        acc.extend(((w[:k], w[k:]), c) for k in range(len(w) + 1))
    return TensorElement(x.alphabet, acc)


def deshuffle(x: Element) -> TensorElement:
    """The coproduct making letters primitive for concatenation.

    w -> sum over position subsets S of w|S (x) w|S^c.
    """
    acc = []
    for w, c in x.items():
        n = len(w)
        for mask in itertools.product((0, 1), repeat=n):
            left = tuple(a for a, m in zip(w, mask) if m)
            right = tuple(a for a, m in zip(w, mask) if not m)
            acc.append(((left, right), c))
    return TensorElement(x.alphabet, acc)


def counit(x: Element) -> Fraction:
    return x.coefficient(())


# -- antipode -----------------------------------------------------------------

def _antipode_recursive(alphabet, w, memo, product):
    if w in memo:
        return memo[w]
    if not w:
        result = Element.one(alphabet)
    else:
        result = Element.zero(alphabet)
        for k in range(len(w)):
            prefix = _antipode_recursive(alphabet, w[:k], memo, product)
            result = result - product(prefix, Element.word(alphabet, w[k:]))
    memo[w] = result
    return result


def _antipode_coarsening(alphabet, w, product):
    total = Element.zero(alphabet)
    n = len(w)
    for comp in compositions(n):
        blocks, pos = [], 0
        for part in comp:
            blocks.append(Element.word(alphabet, w[pos:pos + part]))
            pos += part
        total = total + (-1) ** len(comp) * product_of(blocks, product, alphabet)
    return total


def _antipode_bracket_reversal(alphabet, w):
    n = len(w)
    rw = reverse(w)
    acc = []
    for comp in compositions(n):
        img = act(alphabet, comp, rw)
        if img is not None:
            acc.append((img, (-1) ** n))
    return Element(alphabet, acc)


ANTIPODE_STRATEGIES = ("recursive", "coarsening", "bracket_reversal")


def antipode(x: Element, strategy: str = "bracket_reversal") -> Element:
    """The antipode of the quasi-shuffle Hopf algebra.

    ``recursive`` runs S(w) = -sum_{k<n} S(a_1..a_k) * a_{k+1}..a_n;
    ``coarsening`` is the signed sum of *-products of consecutive blocks;
    ``bracket_reversal`` is (-1)^n sum_I I[a_n ... a_1].
    """
    strategy = strategy.replace("-", "_")
    alphabet = x.alphabet
    if strategy == "recursive":
        memo = {}
        return x.map_words(lambda w: _antipode_recursive(alphabet, w, memo, quasi_shuffle))
    if strategy == "coarsening":
        return x.map_words(lambda w: _antipode_coarsening(alphabet, w, quasi_shuffle))
    if strategy == "bracket_reversal":
        return x.map_words(lambda w: _antipode_bracket_reversal(alphabet, w))
    raise ValueError(f"unknown antipode strategy {strategy!r}")


def hopf_check(x: Element, product=quasi_shuffle, antipode_fn=antipode) -> bool:
    """m(S (x) id)D(x) = m(id (x) S)D(x) = e(x) 1."""
    target = counit(x) * Element.one(x.alphabet)
    d = coproduct(x)
    ident = lambda y: y  # noqa: E731
    left = d.map(antipode_fn, ident).contract(product)
    right = d.map(ident, antipode_fn).contract(product)
    return left == target and right == target


def coproduct_exp_compat(x: Element) -> bool:
    """D(exp x) == (exp (x) exp)(D x); x is usually a single word."""
    return coproduct(exp_map(x)) == coproduct(x).map(exp_map, exp_map)

