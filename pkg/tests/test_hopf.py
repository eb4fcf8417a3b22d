from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import E2, elements_st, pairs_up_to, z
from quasishuffle.algebra import Element, exp_map, quasi_shuffle
from quasishuffle.alphabets import QSYM, shuffle_alphabet
from quasishuffle.hopf import (ANTIPODE_STRATEGIES, TensorElement, antipode, coproduct,
                               coproduct_exp_compat, counit, hopf_check)
from quasishuffle.words import reverse, words_up_to_degree

F = Fraction


def W(*parts):
    return Element.word(QSYM, z(*parts))


def T(*terms):
    return TensorElement(QSYM, [((u, v), c) for c, u, v in terms])


def test_coproduct_examples():
    assert coproduct(W(1, 2)) == T((1, z(1, 2), ()), (1, z(1), z(2)), (1, (), z(1, 2)))
    assert coproduct(Element.one(QSYM)) == T((1, (), ()))
    assert coproduct(W(5)) == T((1, z(5), ()), (1, (), z(5)))


def test_counit_examples():
    assert counit(Element.one(QSYM)) == 1
    assert counit(W(1, 2)) == 0
    assert counit(3 * Element.one(QSYM) + W(1)) == 3


def test_antipode_examples():
    assert antipode(W(1, 2)) == W(2, 1) + W(3)
    assert antipode(Element.one(QSYM)) == Element.one(QSYM)
    assert antipode(W(3)) == -W(3)


def test_shuffle_antipode_is_signed_reversal():
    sh = shuffle_alphabet("abc")
    for w in words_up_to_degree(sh, 4):
        x = Element.word(sh, w)
        expected = Element.word(sh, reverse(w), (-1) ** len(w))
        for s in ANTIPODE_STRATEGIES:
            assert antipode(x, s) == expected


@pytest.mark.parametrize("alphabet,bound", [(QSYM, 5), (E2, 3)], ids=["qsym", "euler2"])
def test_antipode_strategies_agree(alphabet, bound):
    for w in words_up_to_degree(alphabet, bound):
        x = Element.word(alphabet, w)
        results = [antipode(x, s) for s in ANTIPODE_STRATEGIES]
        assert results[0] == results[1] == results[2]


@pytest.mark.parametrize("alphabet,bound", [(QSYM, 5), (E2, 3)], ids=["qsym", "euler2"])
def test_hopf_axiom(alphabet, bound):
    for w in words_up_to_degree(alphabet, bound):
        assert hopf_check(Element.word(alphabet, w))


@pytest.mark.parametrize("alphabet,bound", [(QSYM, 5), (E2, 3)], ids=["qsym", "euler2"])
def test_coproduct_exp_compat(alphabet, bound):
    for w in words_up_to_degree(alphabet, bound):
        assert coproduct_exp_compat(Element.word(alphabet, w))


def test_coproduct_is_multiplicative():
    for u, v in pairs_up_to(QSYM, 5):
        x, y = Element.word(QSYM, u), Element.word(QSYM, v)
        assert coproduct(quasi_shuffle(x, y)) == coproduct(x).multiply(coproduct(y))


def _triple_coproduct(x, left_first):
    acc = {}
    for (u, v), c in coproduct(x).items():
        if left_first:
            for (a, b), d in coproduct(Element.word(QSYM, u)).items():
                acc[(a, b, v)] = acc.get((a, b, v), 0) + c * d
        else:
            for (a, b), d in coproduct(Element.word(QSYM, v)).items():
                acc[(u, a, b)] = acc.get((u, a, b), 0) + c * d
    return {k: c for k, c in acc.items() if c}


def test_coassociativity():
    for w in words_up_to_degree(QSYM, 5):
        x = Element.word(QSYM, w)
        assert _triple_coproduct(x, True) == _triple_coproduct(x, False)


def test_antipode_is_multiplicative():
    for u, v in pairs_up_to(QSYM, 4):
        x, y = Element.word(QSYM, u), Element.word(QSYM, v)
        assert antipode(quasi_shuffle(x, y)) == quasi_shuffle(antipode(x), antipode(y))


def test_antipode_is_involution():
    # commutative Hopf algebra: S o S = id
    for w in words_up_to_degree(E2, 3):
        x = Element.word(E2, w)
        assert antipode(antipode(x)) == x


@settings(max_examples=40, deadline=None)
@given(elements_st(E2, 3))
def test_hopf_axiom_on_combinations(x):
    assert hopf_check(x)
    assert coproduct(exp_map(x)) == coproduct(x).map(exp_map, exp_map)


def test_unknown_strategy():
    with pytest.raises(ValueError):
        antipode(W(1), "magic")
    assert antipode(W(1, 2), "bracket-reversal") == antipode(W(1, 2), "recursive")


def test_tensor_arithmetic():
    t = T((1, z(1), z(2)))
    assert (t + t) == 2 * t
    assert (t - t) == TensorElement(QSYM)
    assert t.coefficient(z(1), z(2)) == 1
    assert t.contract() == W(1, 2) + W(2, 1) + W(3)
    assert str(T((F(1, 2), z(1), ()), (1, (), z(1)))) == "1/2 z1 (x) 1 + 1 (x) z1"
