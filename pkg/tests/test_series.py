import cmath
import math
import time

import pytest
from hypothesis import given, settings

from conftest import E2, elements_st, pairs_up_to, z
from quasishuffle.algebra import Element, quasi_shuffle
from quasishuffle.alphabets import QSYM, EulerAlphabet
from quasishuffle.errors import DivergentSeriesError, DomainError
from quasishuffle.euler import pi_r
from quasishuffle.scalars import CycloNum
from quasishuffle.series import (MultiPoly, euler_sum_numeric, injectivity_rank, phi_n,
                                 phi_n_recursive, psi_r_subst)
from quasishuffle.words import words_up_to_degree


def W(*parts):
    return Element.word(QSYM, z(*parts))


def t(n, *exps, order=1):
    """Monomial with exponent vector exps (padded to n variables)."""
    e = tuple(exps) + (0,) * (n - len(exps))
    return MultiPoly(n, order, {e: 1})


def test_phi_examples():
    assert phi_n(W(1), 2) == t(2, 1) + t(2, 0, 1)
    assert phi_n(W(1, 1), 2) == t(2, 1, 1)
    assert phi_n(Element.word(E2, (E2.z(1, 1),)), 1) == MultiPoly(1, 2, {(1,): -1})
    assert phi_n(W(1, 1, 1), 2) == MultiPoly.zero(2, 1)
    assert phi_n(Element.one(QSYM), 3) == MultiPoly.one(3, 1)


def test_phi_two_letter_word_by_hand():
    # phi_3(z2 z1) = sum over 3 >= a > b >= 1 of t_a^2 t_b
    got = phi_n(W(2, 1), 3)
    want = t(3, 1, 2) + t(3, 1, 0, 2) + t(3, 0, 1, 2)
    assert got == want


def test_phi_roots_of_unity():
    e3 = EulerAlphabet(3)
    got = phi_n(Element.word(e3, (e3.z(1, 1),)), 3)
    w = CycloNum.omega_power(3, 1)
    assert got == MultiPoly(3, 3, {(1, 0, 0): w, (0, 1, 0): w * w, (0, 0, 1): CycloNum.one(3)})


def test_psi_examples():
    assert psi_r_subst(t(2, 1) + t(2, 0, 1), 2) == t(1, 1)
    assert psi_r_subst(t(4, 0, 1, 0, 1), 2) == t(2, 1, 1)
    assert psi_r_subst(t(5, 0, 0, 1), 2) == MultiPoly.zero(2, 1)
    with pytest.raises(ValueError):
        psi_r_subst(t(2, 1), 0)


@pytest.mark.parametrize("alphabet", [QSYM, E2], ids=["qsym", "euler2"])
@pytest.mark.parametrize("n", [1, 3, 6])
def test_phi_is_algebra_map(alphabet, n):
    for u, v in pairs_up_to(alphabet, 3):
        x, y = Element.word(alphabet, u), Element.word(alphabet, v)
        assert phi_n(quasi_shuffle(x, y), n) == phi_n(x, n) * phi_n(y, n)


@settings(max_examples=30, deadline=None)
@given(elements_st(E2, 2), elements_st(E2, 2))
def test_phi_is_algebra_map_on_combinations(x, y):
    assert phi_n(quasi_shuffle(x, y), 4) == phi_n(x, 4) * phi_n(y, 4)


@pytest.mark.parametrize("alphabet", [QSYM, E2, EulerAlphabet(3)], ids=["qsym", "euler2", "euler3"])
def test_recursion_matches_direct_sum(alphabet):
    for n in range(6):
        for w in words_up_to_degree(alphabet, 3):
            x = Element.word(alphabet, w)
            assert phi_n_recursive(x, n) == phi_n(x, n)


def _literal_recursion(w, n):
    # peel off the first letter, summing only over n >= m > 1
    if not w:
        return MultiPoly.one(n, 1)
    total = MultiPoly.zero(n, 1)
    for m in range(2, n + 1):
        rest = phi_n(Element.word(QSYM, w[1:]), m - 1)
        rest = MultiPoly(n, 1, {e + (0,) * (n - len(e)): c for e, c in rest.terms.items()})
        total = total + t(n, *([0] * (m - 1) + [w[0].degree])) * rest
    return total


def test_recursion_needs_the_m_equals_one_term():
    # with m > 1 the single-letter word loses its t_1 term
    assert _literal_recursion(z(1), 1) == MultiPoly.zero(1, 1)
    assert phi_n(W(1), 1) == t(1, 1)
    assert _literal_recursion(z(2), 3) != phi_n(W(2), 3)


@pytest.mark.parametrize("r", [2, 3])
@pytest.mark.parametrize("n", [1, 2])
def test_realization_square(r, n):
    # psi_r o phi_{nr} = phi_n o pi_r on E_r
    alphabet = EulerAlphabet(r)
    for w in words_up_to_degree(alphabet, 3):
        x = Element.word(alphabet, w)
        lhs = psi_r_subst(phi_n(x, n * r), r).as_rational()
        assert lhs == phi_n(pi_r(x), n)


@pytest.mark.parametrize("r,n,d,expected", [(1, 3, 3, (8, 8)), (2, 2, 2, (9, 9)),
                                            (1, 4, 0, (1, 1)), (3, 2, 2, (16, 16))])
def test_injectivity_rank(r, n, d, expected):
    assert injectivity_rank(r, n, d) == expected


def test_injectivity_fails_beyond_degree_n():
    # phi_1 kills z1 z1, so degree 2 is out of reach with one variable
    assert phi_n(W(1, 1), 1) == MultiPoly.zero(1, 1)
    with pytest.raises(DomainError):
        injectivity_rank(1, 1, 2)


def test_multipoly_formatting():
    assert str(t(2, 1) + t(2, 0, 1)) == "t1 + t2"
    assert str(MultiPoly.zero(2, 1)) == "0"


def test_zeta_two():
    got = euler_sum_numeric(z(2), 10 ** 5, QSYM)
    assert abs(got - math.pi ** 2 / 6) < 2e-5


def test_alternating_harmonic():
    got = euler_sum_numeric((E2.z(1, 1),), 10 ** 5, E2)
    assert abs(got + math.log(2)) < 1e-4


def test_divergent_leading_letter():
    with pytest.raises(DivergentSeriesError):
        euler_sum_numeric(z(1, 2), 100, QSYM)
    with pytest.raises(DivergentSeriesError):
        euler_sum_numeric((E2.z(1, 0),), 100, E2)
    assert euler_sum_numeric(z(2, 1), 10, QSYM) > 0


def test_complex_sums_for_r_three():
    e3 = EulerAlphabet(3)
    got = euler_sum_numeric((e3.z(1, 1),), 1000, e3)
    assert isinstance(got, complex)
    # sum of w^n / n = -log(1 - w)
    w = complex(math.cos(2 * math.pi / 3), math.sin(2 * math.pi / 3))
    assert abs(got + cmath.log(1 - w)) < 1e-2


def test_numeric_stuffle_relation():
    start = time.perf_counter()
    n = 10 ** 5
    lhs = euler_sum_numeric(z(2), n, QSYM) ** 2
    rhs = euler_sum_numeric(quasi_shuffle(W(2), W(2)), n)
    assert abs(lhs - rhs) < 1e-4
    assert time.perf_counter() - start < 5
