"""The q-shuffle product, Phi_q and its inverse, and the coproduct Delta_q.

q is always a concrete rational.  The permutation-indexed matrices used for
the determinant identity and for inverting Phi_q are built on the formal
basis {a_tau(1) ... a_tau(n)} indexed by permutations tau (in
``itertools.permutations`` order), so repeated letters still give n! x n!
matrices.
"""
from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache, reduce

from .algebra import Element, _bilinear
from .errors import NonGenericQError, SingularMatrixError
from .hopf import TensorElement, deshuffle
from .scalars import RatMatrix, mat_solve
from .words import act, composition_from_set, compositions, refines


def _q(q):
    return Fraction(q)


def q_shuffle(x: Element, y: Element, q) -> Element:
    """aw1 *q bw2 = a(w1 *q bw2) + q^{|aw1||b|} b(aw1 *q w2) + q^{|w1||b|} [a,b](w1 *q w2)."""
    return _bilinear(x, y, _q(q), True)


def q_product(q):
    """The binary function x, y -> x *q y (for use as a 'product in force')."""
    q = _q(q)
    return lambda x, y: q_shuffle(x, y, q)


def inversions(perm) -> set:
    """Inversions of a permutation in one-line notation on 1..n."""
    n = len(perm)
    return {(i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j]}


def descent_composition(perm) -> tuple:
    n = len(perm)
    descents = {i + 1 for i in range(n - 1) if perm[i] > perm[i + 1]}
    return composition_from_set(n, descents) if n else ()


def _inv_weight(degrees, perm):
    """sum of |a_i||a_j| over the letter pairs that perm puts out of order.

    perm is 0-based one-line notation; an inversion at positions k < l
    (perm[k] > perm[l]) contributes degrees[perm[k]] * degrees[perm[l]].
    """
    n = len(perm)
    return sum(degrees[perm[k]] * degrees[perm[l]]
               for k in range(n) for l in range(k + 1, n) if perm[k] > perm[l])


def _phi_iterated(alphabet, w, q):
    letters = [Element.word(alphabet, (a,)) for a in w]
    if not letters:
        return Element.one(alphabet)
    return reduce(lambda x, y: q_shuffle(x, y, q), letters)


def _phi_closed(alphabet, w, q):
    n = len(w)
    if n == 0:
        return Element.one(alphabet)
    degrees = [a.degree for a in w]
    acc = []
    comps = compositions(n)
    for perm in itertools.permutations(range(n)):
        weight = q ** _inv_weight(degrees, perm)
        if not weight:
            continue
        permuted = tuple(w[i] for i in perm)
        desc = descent_composition(perm)
        for comp in comps:
            if refines(comp, desc):
                img = act(alphabet, comp, permuted)
                if img is not None:
                    acc.append((img, weight))
    return Element(alphabet, acc)


def phi_q(x: Element, q, mode: str = "iterated") -> Element:
    """Phi_q(a_1...a_n) = a_1 *q a_2 *q ... *q a_n, extended linearly.

    ``closed`` evaluates the permutation/descent double sum instead of
    folding the product.
    """
    q = _q(q)
    if mode == "iterated":
        return x.map_words(lambda w: _phi_iterated_cached(x.alphabet, w, q))
    if mode == "closed":
        return x.map_words(lambda w: _phi_closed(x.alphabet, w, q))
    raise ValueError(f"unknown phi_q mode {mode!r}")


@lru_cache(maxsize=None)
def _phi_iterated_cached(alphabet, w, q):
    return _phi_iterated(alphabet, w, q)


def phi0_inverse(x: Element) -> Element:
    """Inverse of Phi_0: sum over I in C(l(w)) of (-1)^{l(w)-l(I)} I[w]."""
    def on_word(w):
        n = len(w)
        out = []
        for comp in compositions(n):
            img = act(x.alphabet, comp, w)
            if img is not None:
                out.append((img, (-1) ** (n - len(comp))))
        return out
    return x.map_words(on_word)


@lru_cache(maxsize=None)
def _permutations(n):
    return tuple(itertools.permutations(range(n)))


def phi_matrix(w, q) -> RatMatrix:
    """Matrix of the length-preserving part of Phi_q on the orbit of w.

    Column tau is the image of the formal word a_tau(1)...a_tau(n); entry
    (tau o sigma, tau) is q to the inversion weight of sigma with respect to
    the letter degrees of that word.
    """
    q = _q(q)
    n = len(w)
    if n == 0:
        raise ValueError("phi_matrix needs a nonempty word")
    perms = _permutations(n)
    index = {p: i for i, p in enumerate(perms)}
    size = len(perms)
    rows = [[Fraction(0)] * size for _ in range(size)]
    for col, tau in enumerate(perms):
        degrees = [w[tau[k]].degree for k in range(n)]
        for sigma in perms:
            target = tuple(tau[sigma[k]] for k in range(n))
            rows[index[target]][col] += q ** _inv_weight(degrees, sigma)
    return RatMatrix(rows)


def varchenko_det(w, q) -> Fraction:
    """Closed product formula for det(phi_matrix(w, q)).

    prod over k = 2..n and k-subsets S of (1 - q^(2 sum_{i<j in S} |a_i||a_j|))
    raised to (n-k+1)!(k-2)!.
    """
    q = _q(q)
    n = len(w)
    degrees = [a.degree for a in w]
    det = Fraction(1)
    for k in range(2, n + 1):
        mult = math.factorial(n - k + 1) * math.factorial(k - 2)
        for subset in itertools.combinations(range(n), k):
            e = sum(degrees[i] * degrees[j] for i, j in itertools.combinations(subset, 2))
            det *= (1 - q ** (2 * e)) ** mult
    return det


@lru_cache(maxsize=None)
def _leading_preimage(alphabet, w, q):
    """u with Phi_q(u) = w + (terms of length < l(w))."""
    n = len(w)
    perms = _permutations(n)
    m = phi_matrix(w, q)
    rhs = [Fraction(0)] * len(perms)
    rhs[0] = Fraction(1)  # perms[0] is the identity
    try:
        sol = mat_solve(m, rhs)
    except SingularMatrixError as exc:
        raise NonGenericQError(
            f"q={q} is not generic for the degree pattern of {'.'.join(a.name for a in w)}"
        ) from exc
    return Element(alphabet, [(tuple(w[i] for i in tau), c) for tau, c in zip(perms, sol)])


def phi_q_inverse(x: Element, q) -> Element:
    """Invert Phi_q by peeling off the longest word at each step."""
    q = _q(q)
    alphabet = x.alphabet
    result = Element.zero(alphabet)
    rest = x
    while rest:
        w = max(rest.terms, key=lambda v: (len(v), v))
        c = rest.terms[w]
        if not w:
            u = Element.one(alphabet)
        else:
            u = _leading_preimage(alphabet, w, q)
        result = result + c * u
        rest = rest - c * phi_q(u, q)
        assert w not in rest.terms
    return result


def delta_q(x: Element, q) -> TensorElement:
    """Delta_q = (Phi_q (x) Phi_q) o deshuffle o Phi_q^{-1}."""
    q = _q(q)
    pre = phi_q_inverse(x, q)
    image = lambda y: phi_q(y, q)  # noqa: E731
    return deshuffle(pre).map(image, image)


def delta_q_two_letter_formula(alphabet, a, b, q) -> TensorElement:
    """ab (x) 1 + 1 (x) ab + (a (x) b + b (x) a) / (1 + q^{|a||b|})."""
    q = _q(q)
    c = 1 / (1 + q ** (a.degree * b.degree))
    ab = (a, b)
    return TensorElement(alphabet, [((ab, ()), 1), (((), ab), 1),
                                    (((a,), (b,)), c), (((b,), (a,)), c)])

