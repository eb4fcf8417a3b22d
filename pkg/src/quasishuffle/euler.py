"""Maps between the Euler algebras E_r and quasi-symmetric functions."""
from __future__ import annotations

from .algebra import Element
from .alphabets import QSYM, EulerAlphabet
from .dual import DualElement, preimage_set
from .errors import DomainError


def _euler(alphabet) -> EulerAlphabet:
    if not isinstance(alphabet, EulerAlphabet):
        raise DomainError(f"expected an Euler alphabet, got {alphabet.name}")
    return alphabet


def pi_r(x: Element) -> Element:
    """z_{i,j} -> z_i letterwise, into the qsym alphabet."""
    _euler(x.alphabet)
    return Element(QSYM, [(tuple(QSYM.letters_of_degree(a.degree)[0] for a in w), c)
                          for w, c in x.items()])


def pi_r_star(y: DualElement, r: int, residues=None) -> DualElement:
    """Concatenation homomorphism z_i* -> sum over residues j of z_{i,j}*.

    The default residue range 0..r-1 makes this the transpose of pi_r;
    ``residues`` overrides it (used to test other ranges).
    """
    if y.alphabet != QSYM:
        raise DomainError("pi_r* takes dual elements over qsym")
    target = EulerAlphabet(r)
    js = range(r) if residues is None else residues

    def on_word(w):
        acc = [((), 1)]
        for a in w:
            acc = [(u + (target.z(a.degree, j),), c) for u, c in acc for j in js]
        return acc
    acc = [(v, c * d) for w, c in y.items() for v, d in on_word(w)]
    return DualElement(target, acc)


def hat_word(alphabet, w) -> Element:
    """Sum of all words v with I[v] = w for some composition I."""
    return Element(alphabet, [(v, 1) for v in preimage_set(alphabet, tuple(w))])
