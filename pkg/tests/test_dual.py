import itertools
from fractions import Fraction

import pytest

from conftest import E2, z
from quasishuffle.algebra import Element, exp_map, log_map, quasi_shuffle, shuffle
from quasishuffle.alphabets import QSYM, shuffle_alphabet
from quasishuffle.dual import (DualElement, antipode_star, concat_product, dual_coproduct, exp_star,
                               is_primitive, lie_bracket, log_star, pairing, preimage_set)
from quasishuffle.errors import DomainError
from quasishuffle.hopf import TensorElement, antipode
from quasishuffle.words import word_degree, words_of_degree, words_up_to_degree

F = Fraction


def W(*parts):
    return Element.word(QSYM, z(*parts))


def D(*parts, coeff=1):
    return DualElement.word(QSYM, z(*parts), coeff)


def DT(*terms):
    return TensorElement(QSYM, [((u, v), c) for c, u, v in terms], dual=True)


def test_pairing_examples():
    assert pairing(W(1, 2), D(1, 2)) == 1
    assert pairing(W(1, 2), D(2, 1)) == 0
    assert pairing(quasi_shuffle(W(1), W(2)), D(3)) == 1
    with pytest.raises(TypeError):
        pairing(D(1), W(1))


def test_concat_examples():
    assert concat_product(D(1), D(2)) == D(1, 2)
    x = D(1) + 2 * D(2, 1)
    assert concat_product(x, DualElement.one(QSYM)) == x
    assert concat_product(D(1) + D(2), D(1)) == D(1, 1) + D(2, 1)


def test_dual_coproduct_examples():
    assert dual_coproduct(D(3), "quasishuffle") == \
        DT((1, z(3), ()), (1, (), z(3)), (1, z(1), z(2)), (1, z(2), z(1)))
    assert dual_coproduct(D(3), "shuffle") == DT((1, z(3), ()), (1, (), z(3)))
    one = DualElement.one(QSYM)
    assert dual_coproduct(one) == DT((1, (), ()))
    assert dual_coproduct(z(3), "shuffle", alphabet=QSYM) == dual_coproduct(D(3), "shuffle")


@pytest.mark.parametrize("kind,product", [("quasishuffle", quasi_shuffle), ("shuffle", shuffle)])
def test_dual_coproduct_is_transpose(kind, product):
    # (u * v, w*) = (u (x) v, delta'(w*)) for all words of total degree <= 5
    words = words_up_to_degree(QSYM, 5)
    for w in words:
        d = dual_coproduct(D(*[a.degree for a in w]) if w else DualElement.one(QSYM), kind)
        for k in range(word_degree(w) + 1):
            for u in words_of_degree(QSYM, k):
                for v in words_of_degree(QSYM, word_degree(w) - k):
                    lhs = product(Element.word(QSYM, u), Element.word(QSYM, v)).coefficient(w)
                    assert lhs == d.coefficient(u, v)


def test_preimage_set():
    assert preimage_set(QSYM, z(2)) == [z(1, 1), z(2)]
    assert preimage_set(QSYM, z(1)) == [z(1)]
    sh = shuffle_alphabet("ab")
    w = (sh.letter("a"), sh.letter("b"), sh.letter("a"))
    assert preimage_set(sh, w) == [w]


def test_exp_log_star_examples():
    assert exp_star(D(2)) == D(2) + F(1, 2) * D(1, 1)
    assert exp_star(D(1)) == D(1)
    assert log_star(D(2)) == D(2) - F(1, 2) * D(1, 1)
    assert log_star(D(1)) == D(1)
    sh = shuffle_alphabet("ab")
    y = DualElement.word(sh, (sh.letter("a"), sh.letter("b")))
    assert exp_star(y) == y


@pytest.mark.parametrize("alphabet,bound", [(QSYM, 4), (E2, 3)], ids=["qsym", "euler2"])
def test_exp_star_is_transpose_and_log_star_inverse(alphabet, bound):
    for n in range(bound + 1):
        ws = words_of_degree(alphabet, n)
        for v in ws:
            ystar = DualElement.word(alphabet, v)
            e = exp_star(ystar)
            l = log_star(ystar)
            assert log_star(e) == ystar
            for u in ws:
                x = Element.word(alphabet, u)
                assert pairing(exp_map(x), ystar) == pairing(x, e)
                assert pairing(log_map(x), ystar) == pairing(x, l)


@pytest.mark.parametrize("alphabet,bound", [(QSYM, 4), (E2, 3)], ids=["qsym", "euler2"])
def test_antipode_star_is_transpose(alphabet, bound):
    for n in range(bound + 1):
        ws = words_of_degree(alphabet, n)
        for v in ws:
            s_star = antipode_star(DualElement.word(alphabet, v))
            for u in ws:
                x = Element.word(alphabet, u)
                assert pairing(antipode(x), DualElement.word(alphabet, v)) == pairing(x, s_star)


def test_antipode_star_examples():
    assert antipode_star(D(2)) == -D(2) + D(1, 1)
    one = DualElement.one(QSYM)
    assert antipode_star(one) == one
    sh = shuffle_alphabet("ab")
    a, b = sh.letter("a"), sh.letter("b")
    assert antipode_star(DualElement.word(sh, (a, a, b))) == -DualElement.word(sh, (b, a, a))


def test_lie_bracket_examples():
    assert lie_bracket(D(1), D(2)) == D(1, 2) - D(2, 1)
    x = D(1) + D(2, 1)
    assert lie_bracket(x, x) == 0
    assert lie_bracket(D(1), lie_bracket(D(1), D(2))) == D(1, 1, 2) - 2 * D(1, 2, 1) + D(2, 1, 1)


def test_primitivity_examples():
    assert is_primitive(log_star(lie_bracket(D(1), D(2))), "quasishuffle")
    assert is_primitive(D(1))
    assert not is_primitive(D(1, 1))
    with pytest.raises(DomainError):
        is_primitive(D(1) + D(2))


def _lie_monomials(gens, depth):
    """Left-normed brackets of generators, up to the given number of letters."""
    out = list(gens)
    layer = list(gens)
    for _ in range(depth - 1):
        layer = [lie_bracket(g, x) for g in gens for x in layer]
        out.extend(layer)
    return out


@pytest.mark.parametrize("alphabet", [QSYM, E2], ids=["qsym", "euler2"])
def test_lie_polynomials_primitive_and_log_star(alphabet):
    gens = [DualElement.word(alphabet, (a,)) for n in (1, 2) for a in alphabet.letters_of_degree(n)]
    for p in _lie_monomials(gens, 3):
        if not p or max(p.degrees()) > 4:
            continue
        assert is_primitive(p, "shuffle")
        assert is_primitive(log_star(p), "quasishuffle")


def test_non_lie_element_not_primitive_after_log_star():
    for a, b in itertools.product([1, 2], repeat=2):
        assert not is_primitive(log_star(D(a, b)), "quasishuffle")
