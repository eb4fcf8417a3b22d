"""Realization of E_r in polynomials with cyclotomic coefficients, and Euler sums.

phi_n sends z_{i1,j1} ... z_{ik,jk} to the sum over n >= n_1 > ... > n_k >= 1
of w^(j_1 n_1 + ... + j_k n_k) t_{n_1}^i_1 ... t_{n_k}^i_k, with w a primitive
r-th root of unity.  Words over qsym are treated as words over E_1.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .algebra import Element
from .alphabets import QSYM, EulerAlphabet
from .errors import DivergentSeriesError, DomainError
from .scalars import CycloNum, cyclotomic_polynomial, mat_rank
from .words import words_up_to_degree


def letter_data(alphabet, a) -> tuple:
    """(degree, residue) of a letter of E_r or qsym."""
    if isinstance(alphabet, EulerAlphabet):
        return a.degree, a.key[1]
    if alphabet == QSYM:
        return a.degree, 0
    raise DomainError(f"no realization for alphabet {alphabet.name}")


def alphabet_order(alphabet) -> int:
    if isinstance(alphabet, EulerAlphabet):
        return alphabet.r
    if alphabet == QSYM:
        return 1
    raise DomainError(f"no realization for alphabet {alphabet.name}")


@dataclass(frozen=True)
class MultiPoly:
    """Polynomial in t_1..t_n with coefficients in Q(w_r)."""

    num_vars: int
    order: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for e, c in self.terms.items():
            if not isinstance(c, CycloNum):
                c = CycloNum.from_rational(self.order, c)
            if len(e) != self.num_vars:
                raise ValueError("exponent vector has the wrong length")
            if not c.is_zero():
                clean[tuple(e)] = c
        object.__setattr__(self, "terms", clean)

    @classmethod
    def zero(cls, n, r):
        return cls(n, r, {})

    @classmethod
    def one(cls, n, r):
        return cls(n, r, {(0,) * n: CycloNum.one(r)})

    def _check(self, other):
        if (self.num_vars, self.order) != (other.num_vars, other.order):
            raise DomainError("polynomials over different rings")

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms[e] + c if e in terms else c
        return MultiPoly(self.num_vars, self.order, terms)

    def __neg__(self):
        return MultiPoly(self.num_vars, self.order, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            s = CycloNum.from_rational(self.order, Fraction(other)) \
                if not isinstance(other, CycloNum) else other
            return MultiPoly(self.num_vars, self.order,
                             {e: c * s for e, c in self.terms.items()})
        self._check(other)
        terms = {}
        for e, c in self.terms.items():
            for f, d in other.terms.items():
                g = tuple(a + b for a, b in zip(e, f))
                terms[g] = terms[g] + c * d if g in terms else c * d
        return MultiPoly(self.num_vars, self.order, terms)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return (self.num_vars, self.order, self.terms) == \
            (other.num_vars, other.order, other.terms)

    def __hash__(self):
        return hash((self.num_vars, self.order, frozenset(self.terms.items())))

    def as_rational(self) -> "MultiPoly":
        """The same polynomial over Q (order 1); all coefficients must be rational."""
        if not all(c.is_rational() for c in self.terms.values()):
            raise DomainError("polynomial has irrational coefficients")
        return MultiPoly(self.num_vars, 1, {e: c.coeffs[0] for e, c in self.terms.items()})

    def degrees(self) -> set:
        return {sum(e) for e in self.terms}

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda ec: (sum(ec[0]), tuple(-x for x in ec[0])))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(f"t{k + 1}" + (f"^{x}" if x > 1 else "")
                            for k, x in enumerate(e) if x)
            coeff = str(c)
            if not mono:
                parts.append(f"({coeff})" if _nterms(c) > 1 else coeff)
            elif coeff == "1":
                parts.append(mono)
            elif coeff == "-1":
                parts.append("-" + mono)
            elif _nterms(c) > 1:
                parts.append(f"({coeff})*{mono}")
            else:
                parts.append(f"{coeff}*{mono}")
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    def __repr__(self):
        return f"MultiPoly({self})"


def _nterms(c: CycloNum) -> int:
    return sum(1 for x in c.coeffs if x)


def _word_data(alphabet, w):
    return [letter_data(alphabet, a) for a in w]


@lru_cache(maxsize=None)
def _phi_word(alphabet, w, n):
    r = alphabet_order(alphabet)
    data = _word_data(alphabet, w)
    terms = {}
    for idx in itertools.combinations(range(n, 0, -1), len(w)):
        e = [0] * n
        power = 0
        for (i, j), m in zip(data, idx):
            e[m - 1] += i
            power += j * m
        c = CycloNum.omega_power(r, power)
        key = tuple(e)
        terms[key] = terms[key] + c if key in terms else c
    return MultiPoly(n, r, terms)


def phi_n(x: Element, n: int) -> MultiPoly:
    """The realization phi_n, evaluated exactly over Q(w_r)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    r = alphabet_order(x.alphabet)
    total = MultiPoly.zero(n, r)
    for w, c in x.items():
        total = total + _phi_word(x.alphabet, w, n) * c
    return total


@lru_cache(maxsize=None)
def _phi_rec_word(alphabet, w, n, num_vars):
    """phi_n(z_{p,i} w') = sum over n >= m >= 1 of w^(i m) t_m^p phi_{m-1}(w')."""
    r = alphabet_order(alphabet)
    if not w:
        return MultiPoly.one(num_vars, r)
    if n < len(w):
        return MultiPoly.zero(num_vars, r)
    p, i = letter_data(alphabet, w[0])
    total = MultiPoly.zero(num_vars, r)
    for m in range(1, n + 1):
        e = [0] * num_vars
        e[m - 1] = p
        mono = MultiPoly(num_vars, r, {tuple(e): CycloNum.omega_power(r, i * m)})
        total = total + mono * _phi_rec_word(alphabet, w[1:], m - 1, num_vars)
    return total


def phi_n_recursive(x: Element, n: int) -> MultiPoly:
    """phi_n computed by peeling off the first letter."""
    r = alphabet_order(x.alphabet)
    total = MultiPoly.zero(n, r)
    for w, c in x.items():
        total = total + _phi_rec_word(x.alphabet, w, n, n) * c
    return total


def psi_r_subst(p: MultiPoly, r: int) -> MultiPoly:
    """t_i -> 0 unless r divides i, t_{rj} -> t_j; result has floor(n/r) variables."""
    if r < 1:
        raise ValueError("r must be positive")
    m = p.num_vars // r
    terms = {}
    for e, c in p.terms.items():
        if any(x for k, x in enumerate(e) if (k + 1) % r):
            continue
        f = tuple(e[r * j - 1] for j in range(1, m + 1))
        terms[f] = terms[f] + c if f in terms else c
    return MultiPoly(m, p.order, terms)


def flatten(polys) -> list:
    """Rows of rational coordinates for a list of polynomials (common monomial basis)."""
    monomials = sorted({e for p in polys for e in p.terms})
    if not polys:
        return []
    width = len(cyclotomic_polynomial(polys[0].order)) - 1
    rows = []
    for p in polys:
        row = []
        for e in monomials:
            c = p.terms.get(e)
            row.extend(c.coeffs if c is not None else [Fraction(0)] * width)
        rows.append(row)
    return rows


def injectivity_rank(r: int, n: int, d: int) -> tuple:
    """(rank of phi_{nr} on all E_r words of degree <= d, number of those words)."""
    if d > n:
        raise DomainError("injectivity is only claimed through degree n")
    alphabet = QSYM if r == 1 else EulerAlphabet(r)
    words = words_up_to_degree(alphabet, d)
    polys = [_phi_word(alphabet, w, n * r) for w in words]
    return mat_rank(flatten(polys)), len(words)


# -- numerics -----------------------------------------------------------------

def euler_sum_numeric(x, n_terms: int, alphabet=None):
    """Partial Euler sum over n_terms >= n_1 > ... > n_k >= 1 in double precision.

    ``x`` is a word (tuple of letters; pass ``alphabet``) or an Element.  The
    tail error is O(1/n_terms).  Real alphabets (r <= 2) give a float,
    otherwise a complex number.
    """
    if isinstance(x, Element):
        alphabet = x.alphabet
        total = 0
        for w, c in x.items():
            total = total + float(c) * _euler_word_sum(alphabet, w, n_terms)
        return total
    return _euler_word_sum(alphabet, tuple(x), n_terms)


def _euler_word_sum(alphabet, w, n_terms):
    r = alphabet_order(alphabet)
    data = _word_data(alphabet, w)
    if data and data[0][0] == 1 and data[0][1] % r == 0:
        raise DivergentSeriesError("leading letter of degree 1 with trivial residue diverges")
    if not data:
        return 1.0
    n = np.arange(1, n_terms + 1, dtype=np.float64)
    real = r <= 2
    inner = np.ones(n_terms)   # sum over the deeper indices, shifted by one
    for s, (i, j) in enumerate(reversed(data)):
        if real:
            # w = -1 when r = 2, so the character is (-1)^(j n)
            sign = np.where(np.arange(1, n_terms + 1) % 2 == 1, -1.0, 1.0) if j % r else 1.0
            term = sign / n ** i
        else:
            term = np.exp(2j * np.pi * j * np.arange(1, n_terms + 1) / r) / n ** i
        values = term * inner
        if s == len(data) - 1:
            total = values.sum()
            return float(total) if real else complex(total)
        cumulative = np.cumsum(values)
        inner = np.concatenate(([0.0], cumulative[:-1]))
