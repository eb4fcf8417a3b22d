"""Quasi-symmetric functions: the M, P and F bases and their closed formulas.

M_(i1,...,ik) is identified with the word z_i1 ... z_ik over the qsym
alphabet, so every structure map is computed on words and converted back.
The ``*_formula`` functions evaluate the closed combinatorial formulas
directly on compositions; tests compare the two routes.
"""
from __future__ import annotations

import itertools
import math
from collections import Counter
from fractions import Fraction
from functools import lru_cache

from .algebra import Element, exp_map, log_map, quasi_shuffle
from .alphabets import QSYM
from .errors import CompositionMismatchError, DomainError
from .hopf import antipode, coproduct
from .words import compositions, is_lyndon, partial_sums

BASES = ("M", "P", "F")


def _check_basis(b):
    b = b.upper()
    if b not in BASES:
        raise ValueError(f"unknown basis {b!r}; expected one of M, P, F")
    return b


def comp_str(basis, i):
    return f"{basis}({','.join(map(str, i))})" if i else "1"


def comp_sort_key(i):
    return (sum(i), -len(i), i)


class QSymElement:
    """A rational combination of basis elements M_I, P_I or F_I."""

    def __init__(self, basis, terms=None):
        self.basis = _check_basis(basis)
        acc = {}
        for i, c in (terms or {}).items():
            acc[tuple(i)] = acc.get(tuple(i), 0) + Fraction(c)
        self.terms = {i: c for i, c in acc.items() if c}

    def _same(self, other):
        if not isinstance(other, QSymElement):
            raise TypeError("expected a QSymElement")
        return other if other.basis == self.basis else other.convert(self.basis)

    def __add__(self, other):
        other = self._same(other)
        terms = dict(self.terms)
        for i, c in other.terms.items():
            terms[i] = terms.get(i, 0) + c
        return QSymElement(self.basis, terms)

    def __neg__(self):
        return QSymElement(self.basis, {i: -c for i, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        s = Fraction(scalar)
        return QSymElement(self.basis, {i: s * c for i, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, QSymElement):
            return NotImplemented
        if other.basis != self.basis:
            return self.to_words() == other.to_words()
        return self.terms == other.terms

    def __hash__(self):
        return hash(self.to_words())

    def coefficient(self, i):
        return self.terms.get(tuple(i), Fraction(0))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda ic: comp_sort_key(ic[0]))

    def to_words(self) -> Element:
        """Expand in the M basis and return the corresponding word element."""
        acc = []
        for i, c in self.terms.items():
            acc.extend((w, c * d) for w, d in _to_words(self.basis, i).items())
        return Element(QSYM, acc)

    @classmethod
    def from_words(cls, x: Element, basis="M") -> "QSymElement":
        basis = _check_basis(basis)
        if x.alphabet != QSYM:
            raise DomainError("QSym elements live over the qsym alphabet")
        if basis == "M":
            return cls("M", {_word_comp(w): c for w, c in x.items()})
        if basis == "P":
            return cls("P", {_word_comp(w): c for w, c in log_map(x).items()})
        acc = Counter()
        for w, c in x.items():
            j = _word_comp(w)
            for k in refinements(j):
                acc[k] += c * (-1) ** (len(k) - len(j))
        return cls("F", acc)

    def convert(self, target) -> "QSymElement":
        target = _check_basis(target)
        if target == self.basis:
            return self
        return QSymElement.from_words(self.to_words(), target)

    def __str__(self):
        from .expr import format_coefficient_terms
        return format_coefficient_terms(
            [(c, comp_str(self.basis, i) if i else None) for i, c in self.sorted_terms()])

    def __repr__(self):
        return f"QSymElement({self})"


class QSymTensor:
    """Combination of B_I (x) B_J for one basis B."""

    def __init__(self, basis, terms=None):
        self.basis = _check_basis(basis)
        acc = Counter()
        for ij, c in (terms or {}).items():
            acc[ij] += Fraction(c)
        self.terms = {ij: c for ij, c in acc.items() if c}

    def __eq__(self, other):
        if not isinstance(other, QSymTensor):
            return NotImplemented
        return self.basis == other.basis and self.terms == other.terms

    def __hash__(self):
        return hash((self.basis, frozenset(self.terms.items())))

    def sorted_terms(self):
        def key(kv):
            i, j = kv[0]
            return (sum(i) + sum(j), -(len(i) + len(j)), -sum(i), -len(i), i, j)
        return sorted(self.terms.items(), key=key)

    def __str__(self):
        from .expr import format_coefficient_terms
        return format_coefficient_terms(
            [(c, f"{comp_str(self.basis, i)} (x) {comp_str(self.basis, j)}")
             for (i, j), c in self.sorted_terms()])

    def __repr__(self):
        return f"QSymTensor({self})"


def _word_comp(w):
    return tuple(a.degree for a in w)


def comp_word(i):
    return tuple(QSYM.letter(f"z{p}") for p in i)


def basis_element(basis, i) -> QSymElement:
    return QSymElement(basis, {tuple(i): 1})


@lru_cache(maxsize=None)
def refinements(i) -> tuple:
    """All compositions J with J refining I (J >= I), in lexicographic order."""
    return tuple(sorted(tuple(itertools.chain.from_iterable(parts))
                        for parts in itertools.product(*(compositions(p) for p in i))))


@lru_cache(maxsize=None)
def _to_words(basis, i):
    if basis == "M":
        return Element.word(QSYM, comp_word(i))
    if basis == "P":
        return exp_map(Element.word(QSYM, comp_word(i)))
    return Element(QSYM, [(comp_word(j), 1) for j in refinements(i)])


def basis_convert(x: QSymElement, target) -> QSymElement:
    return x.convert(target)


def _tensor_from_words(t, basis) -> QSymTensor:
    """Rewrite a word tensor (M (x) M) in the given basis."""
    acc = Counter()
    for (u, v), c in t.items():
        left = QSymElement("M", {_word_comp(u): 1}).convert(basis)
        right = QSymElement("M", {_word_comp(v): 1}).convert(basis)
        for i, a in left.terms.items():
            for j, b in right.terms.items():
                acc[(i, j)] += c * a * b
    return QSymTensor(basis, acc)


def qsym_product(x: QSymElement, y: QSymElement) -> QSymElement:
    return QSymElement.from_words(quasi_shuffle(x.to_words(), y.to_words()), x.basis)


def qsym_coproduct(x: QSymElement) -> QSymTensor:
    return _tensor_from_words(coproduct(x.to_words()), x.basis)


def qsym_antipode(x: QSymElement) -> QSymElement:
    return QSymElement.from_words(antipode(x.to_words()), x.basis)


# -- composition combinatorics ------------------------------------------------

def composition_shuffle(i, j) -> Counter:
    """The multiset I sh J of all interleavings of the parts of I and J."""
    i, j = tuple(i), tuple(j)
    if not i or not j:
        return Counter({i + j: 1})
    out = Counter()
    for k, c in composition_shuffle(i[1:], j).items():
        out[(i[0],) + k] += c
    for k, c in composition_shuffle(i, j[1:]).items():
        out[(j[0],) + k] += c
    return out


def vee(i, j) -> tuple:
    """I v J = (i_1, ..., i_{k-1}, i_k + j_1, j_2, ..., j_l)."""
    if not i or not j:
        raise DomainError("I v J needs two nonempty compositions")
    return tuple(i[:-1]) + (i[-1] + j[0],) + tuple(j[1:])


def conjugate_composition(i) -> tuple:
    """Complement of the reversed descent set of I, as a composition."""
    n = sum(i)
    if n == 0:
        return ()
    reversed_descents = {n - d for d in partial_sums(tuple(i))}
    cuts = sorted(set(range(1, n)) - reversed_descents)
    bounds = [0] + cuts + [n]
    return tuple(b - a for a, b in zip(bounds, bounds[1:]))


def decompose(i, j) -> list:
    """Cut I at the cumulative weights of J; block s is a composition of j_s."""
    if sum(i) != sum(j):
        raise CompositionMismatchError(f"|I|={sum(i)} but |J|={sum(j)}")
    blocks = []
    parts = list(i)
    for target in j:
        block, need = [], target
        while need:
            p = parts.pop(0)
            if p <= need:
                block.append(p)
                need -= p
            else:
                block.append(need)
                parts.insert(0, p - need)
                need = 0
        blocks.append(tuple(block))
    return blocks


def phr_coefficient(i, j) -> Fraction:
    c = Fraction(1)
    for block in decompose(i, j):
        length, weight = len(block), sum(block)
        c *= Fraction((-1) ** (length - 1), math.comb(weight - 1, length - 1))
    return c


def f_from_p(i) -> QSymElement:
    """F_I as sum over |J| = |I| of phr(I, J) P_J / (product of the parts of J)."""
    return QSymElement("P", {j: phr_coefficient(i, j) / math.prod(j)
                             for j in compositions(sum(i))})


def modified_lyndon(i) -> tuple:
    """d-fold concatenation of I/d, d = gcd of the parts (I must be Lyndon)."""
    i = tuple(i)
    if not i or not is_lyndon(i):
        raise DomainError(f"{i} is not a Lyndon composition")
    d = math.gcd(*i)
    return tuple(p // d for p in i) * d


# -- closed formulas (independent of the word-level computation) ---------------

def p_product_formula(i, j) -> QSymElement:
    return QSymElement("P", composition_shuffle(i, j))


def p_coproduct_formula(k) -> QSymTensor:
    """sum over I concatenated with J equal to K of P_I (x) P_J."""
    k = tuple(k)
    return QSymTensor("P", {(k[:s], k[s:]): 1 for s in range(len(k) + 1)})


def f_coproduct_formula(k) -> QSymTensor:
    k = tuple(k)
    acc = Counter({(k[:s], k[s:]): 1 for s in range(len(k) + 1)})
    for s, part in enumerate(k):
        for a in range(1, part):
            acc[(k[:s] + (a,), (part - a,) + k[s + 1:])] += 1
    return QSymTensor("F", acc)


def m_antipode_formula(i) -> QSymElement:
    """(-1)^l(I) sum over J coarsening the reverse of I of M_J."""
    rev = tuple(reversed(i))
    coarser = [j for j in compositions(sum(i)) if partial_sums(j) <= partial_sums(rev)]
    return QSymElement("M", {j: (-1) ** len(i) for j in coarser})


def f_antipode_formula(i) -> QSymElement:
    return QSymElement("F", {conjugate_composition(i): (-1) ** sum(i)})


def p_antipode_formula(i) -> QSymElement:
    return QSymElement("P", {tuple(reversed(i)): (-1) ** len(i)})
