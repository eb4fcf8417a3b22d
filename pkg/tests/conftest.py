import itertools
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from quasishuffle import QSYM, Element, EulerAlphabet, make_alphabet
from quasishuffle.words import words_of_degree, words_up_to_degree

E2 = EulerAlphabet(2)


@pytest.fixture
def qsym():
    return QSYM


@pytest.fixture
def e2():
    return E2


def z(*parts, alphabet=QSYM):
    """Word z_{p1} z_{p2} ... over qsym (or the given alphabet by name)."""
    return tuple(alphabet.letter(p if isinstance(p, str) else f"z{p}") for p in parts)


def el(alphabet, *pairs):
    """Element from (coefficient, word) pairs."""
    return Element(alphabet, [(w, c) for c, w in pairs])


def word_el(alphabet, w):
    return Element.word(alphabet, w)


def brute_quasi_shuffle(alphabet, u, v, merge=True):
    """Sum over pairs of increasing maps into [k] whose images cover [k].

    Positions hit by both words carry the bracket of the two letters.
    Independent of the first-letter recursion used by the library.
    """
    acc = {}
    m, n = len(u), len(v)
    for k in range(max(m, n), m + n + 1):
        if not merge and k != m + n:
            continue
        for f in itertools.combinations(range(k), m):
            for g in itertools.combinations(range(k), n):
                if set(f) | set(g) != set(range(k)):
                    continue
                out = [None] * k
                ok = True
                for pos, a in zip(f, u):
                    out[pos] = a
                for pos, b in zip(g, v):
                    if out[pos] is None:
                        out[pos] = b
                    else:
                        out[pos] = alphabet.bracket(out[pos], b)
                        if out[pos] is None:
                            ok = False
                if ok:
                    w = tuple(out)
                    acc[w] = acc.get(w, 0) + 1
    return Element(alphabet, acc)


def pairs_up_to(alphabet, total):
    ws = words_up_to_degree(alphabet, total)
    deg = lambda w: sum(a.degree for a in w)  # noqa: E731
    return [(u, v) for u in ws for v in ws if deg(u) + deg(v) <= total]


def triples_up_to(alphabet, total):
    ws = words_up_to_degree(alphabet, total)
    deg = lambda w: sum(a.degree for a in w)  # noqa: E731
    return [(u, v, x) for u in ws for v in ws for x in ws
            if deg(u) + deg(v) + deg(x) <= total]


def words_st(alphabet, max_degree):
    pool = words_up_to_degree(alphabet, max_degree)
    return st.sampled_from(pool)


def elements_st(alphabet, max_degree, max_terms=3):
    coeff = st.fractions(min_value=-3, max_value=3, max_denominator=4)
    return st.lists(st.tuples(words_st(alphabet, max_degree), coeff),
                    max_size=max_terms).map(lambda ts: Element(alphabet, ts))


__all__ = ["E2", "z", "el", "word_el", "brute_quasi_shuffle", "pairs_up_to", "triples_up_to",
           "words_st", "elements_st", "make_alphabet", "words_of_degree", "Fraction"]
