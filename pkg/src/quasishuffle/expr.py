"""Expression language, canonical printing and JSON encoding.

Grammar (whitespace is free between tokens)::

    element  := ['+'|'-'] term (('+'|'-') term)*
    term     := rational [product] | product
    product  := unit (prodop unit)*          (left associative)
    unit     := word | '(' element ')' | basis
    word     := letter ('.' letter)*
    basis    := ('M'|'P'|'F') '(' [int (',' int)*] ')'   (qsym only)
    prodop   := '*' | 'sh' | '*q'
    rational := int ['/' int]

A bare rational is that multiple of the empty word 1.  Canonical output
orders terms by degree, then longer words first, then lexicographically;
coefficients are reduced fractions and a coefficient of 1 is omitted.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .algebra import Element, quasi_shuffle, shuffle
from .errors import DomainError, ParseError, UnknownLetterError
from .words import word_degree, word_str

# -- printing -----------------------------------------------------------------


def element_sort_key(w):
    return (word_degree(w), -len(w), w)


def format_coefficient_terms(terms) -> str:
    """Join (coefficient, body) pairs; body None means a bare scalar."""
    if not terms:
        return "0"
    out = []
    for i, (c, body, *_) in enumerate(terms):
        c = Fraction(c)
        mag = abs(c)
        if body is None or body is False:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag} {body}"
        if i == 0:
            out.append(("-" if c < 0 else "") + text)
        else:
            out.append(f"{'-' if c < 0 else '+'} {text}")
    return " ".join(out)


def format_element(x: Element) -> str:
    terms = sorted(x.items(), key=lambda wc: element_sort_key(wc[0]))
    return format_coefficient_terms([(c, word_str(w) if w else None) for w, c in terms])


def tensor_sort_key(uv):
    u, v = uv
    return (word_degree(u) + word_degree(v), -(len(u) + len(v)), -word_degree(u), -len(u), u, v)


def format_tensor(t) -> str:
    terms = sorted(t.items(), key=lambda kv: tensor_sort_key(kv[0]))
    return format_coefficient_terms(
        [(c, f"{word_str(u)} (x) {word_str(v)}") for (u, v), c in terms])


# -- tokenizer ----------------------------------------------------------------

_TOKEN_RE = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>\d+(?:\s*/\s*\d+)?)
  | (?P<qop>\*q(?![A-Za-z0-9_]))
  | (?P<op>[*+\-().,])
  | (?P<ident>[A-Za-z][A-Za-z0-9_]*)
""", re.VERBOSE)


@dataclass
class Token:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> list:
    text = text.replace("−", "-").replace("·", ".")
    pos, out = 0, []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind != "ws":
            tok = m.group()
            if kind == "ident" and tok == "sh":
                kind = "shop"
            out.append(Token(kind, tok, pos))
        pos = m.end()
    out.append(Token("end", "", pos))
    return out


# -- AST ----------------------------------------------------------------------

@dataclass
class Num:
    value: Fraction


@dataclass
class WordNode:
    names: list
    positions: list


@dataclass
class BasisNode:
    basis: str
    composition: tuple


@dataclass
class Scaled:
    coeff: Fraction
    node: object


@dataclass
class Sum:
    terms: list   # list of (sign, node)


@dataclass
class Product:
    op: str
    left: object
    right: object


class _Parser:
    def __init__(self, text, basis_atoms):
        self.toks = tokenize(text)
        self.i = 0
        self.basis_atoms = basis_atoms

    @property
    def tok(self):
        return self.toks[self.i]

    def take(self, kind=None, text=None):
        t = self.tok
        if (kind and t.kind != kind) or (text and t.text != text):
            want = text or kind
            got = t.text or "end of input"
            raise ParseError(f"expected {want}, got {got!r}", t.pos)
        self.i += 1
        return t

    def at(self, kind, text=None):
        t = self.tok
        return t.kind == kind and (text is None or t.text == text)

    def parse(self):
        node = self.element()
        if not self.at("end"):
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return node

    def element(self):
        terms = []
        sign = 1
        if self.at("op", "+") or self.at("op", "-"):
            sign = -1 if self.take().text == "-" else 1
        terms.append((sign, self.term()))
        while self.at("op", "+") or self.at("op", "-"):
            sign = -1 if self.take().text == "-" else 1
            terms.append((sign, self.term()))
        return Sum(terms)

    def term(self):
        if self.at("num") and self.toks[self.i + 1].kind == "ident" \
                or self.at("num") and self.toks[self.i + 1].text == "(":
            value = Fraction(self.take().text.replace(" ", ""))
            return Scaled(value, self.product())
        return self.product()

    def product(self):
        node = self.unit()
        while self.at("op", "*") or self.at("qop") or self.at("shop"):
            t = self.take()
            op = {"*": "*", "*q": "*q", "sh": "sh"}[t.text]
            node = Product(op, node, self.unit())
        return node

    def unit(self):
        if self.at("num"):
            # a bare scalar is a multiple of the empty word, so 2 * x = 2 x
            return Num(Fraction(self.take().text.replace(" ", "")))
        if self.at("op", "("):
            self.take()
            node = self.element()
            self.take("op", ")")
            return node
        if self.at("ident"):
            t = self.tok
            nxt = self.toks[self.i + 1]
            if self.basis_atoms and t.text in ("M", "P", "F") and nxt.text == "(":
                return self.basis()
            names, positions = [self.take().text], [t.pos]
            while self.at("op", "."):
                self.take()
                t = self.take("ident")
                names.append(t.text)
                positions.append(t.pos)
            return WordNode(names, positions)
        t = self.tok
        raise ParseError(f"expected a word or '(' but got {t.text or 'end of input'!r}", t.pos)

    def basis(self):
        b = self.take("ident").text
        self.take("op", "(")
        parts = []
        if not self.at("op", ")"):
            parts.append(self._part())
            while self.at("op", ","):
                self.take()
                parts.append(self._part())
        self.take("op", ")")
        return BasisNode(b, tuple(parts))

    def _part(self):
        t = self.take("num")
        if "/" in t.text or int(t.text) < 1:
            raise ParseError("composition parts must be positive integers", t.pos)
        return int(t.text)


def parse_expression(text: str, alphabet, basis_atoms=None):
    """Parse text into an AST, resolving every letter against the alphabet."""
    if basis_atoms is None:
        basis_atoms = alphabet.name == "qsym"
    node = _Parser(text, basis_atoms).parse()
    _resolve(node, alphabet)
    return node


def _resolve(node, alphabet):
    if isinstance(node, WordNode):
        letters = []
        for name, pos in zip(node.names, node.positions):
            try:
                letters.append(alphabet.lookup(name))
            except UnknownLetterError as exc:
                raise UnknownLetterError(name, exc.suggestion, pos) from None
        node.letters = tuple(letters)
    elif isinstance(node, Sum):
        for _, t in node.terms:
            _resolve(t, alphabet)
    elif isinstance(node, Scaled):
        _resolve(node.node, alphabet)
    elif isinstance(node, Product):
        _resolve(node.left, alphabet)
        _resolve(node.right, alphabet)


def evaluate(node, alphabet, q=None, dual=False):
    """Evaluate an AST to an Element (DualElement when ``dual``)."""
    if dual:
        from .dual import DualElement
        cls = DualElement
    else:
        cls = Element
    if isinstance(node, Num):
        return cls(alphabet, [((), node.value)])
    if isinstance(node, WordNode):
        return cls.word(alphabet, node.letters)
    if isinstance(node, BasisNode):
        if dual:
            raise DomainError("basis elements are not available on the dual side")
        from .qsym import QSymElement
        return QSymElement(node.basis, {node.composition: 1}).to_words()
    if isinstance(node, Scaled):
        return node.coeff * evaluate(node.node, alphabet, q, dual)
    if isinstance(node, Sum):
        total = cls.zero(alphabet)
        for sign, t in node.terms:
            total = total + sign * evaluate(t, alphabet, q, dual)
        return total
    if isinstance(node, Product):
        left = evaluate(node.left, alphabet, q, dual)
        right = evaluate(node.right, alphabet, q, dual)
        if dual:
            if node.op != "*":
                raise DomainError(f"operator {node.op!r} is not defined on the dual side")
            from .dual import concat_product
            return concat_product(left, right)
        if node.op == "*":
            return quasi_shuffle(left, right)
        if node.op == "sh":
            return shuffle(left, right)
        if q is None:
            raise DomainError("the *q operator needs a value of q")
        from .qdeform import q_shuffle
        return q_shuffle(left, right, q)
    raise TypeError(f"unknown node {node!r}")


def parse_element(text, alphabet, q=None, dual=False):
    return evaluate(parse_expression(text, alphabet), alphabet, q, dual)


def parse_word(text, alphabet):
    """Parse a single word such as ``z1.z2`` (or ``1``) into a tuple of letters."""
    text = text.strip()
    if text == "1":
        return ()
    node = parse_expression(text, alphabet, basis_atoms=False)
    if isinstance(node, Sum) and len(node.terms) == 1 and node.terms[0][0] == 1 \
            and isinstance(node.terms[0][1], WordNode):
        return node.terms[0][1].letters
    raise ParseError(f"{text!r} is not a single word")


# -- JSON ---------------------------------------------------------------------

def _fr(c):
    return str(Fraction(c))


def _names(w):
    return [a.name for a in w]


def to_json(obj) -> dict:
    from .hopf import TensorElement
    from .qsym import QSymElement, QSymTensor
    if isinstance(obj, Element):
        terms = sorted(obj.items(), key=lambda wc: element_sort_key(wc[0]))
        return {"alphabet": obj.alphabet.name, "kind": obj.kind,
                "terms": [{"coefficient": _fr(c), "word": _names(w)} for w, c in terms]}
    if isinstance(obj, TensorElement):
        terms = sorted(obj.items(), key=lambda kv: tensor_sort_key(kv[0]))
        return {"alphabet": obj.alphabet.name, "kind": "tensor", "dual": obj.dual,
                "terms": [{"coefficient": _fr(c), "left": _names(u), "right": _names(v)}
                          for (u, v), c in terms]}
    if isinstance(obj, QSymElement):
        return {"alphabet": "qsym", "kind": "qsym", "basis": obj.basis,
                "terms": [{"coefficient": _fr(c), "composition": list(i)}
                          for i, c in obj.sorted_terms()]}
    if isinstance(obj, QSymTensor):
        return {"alphabet": "qsym", "kind": "qsym-tensor", "basis": obj.basis,
                "terms": [{"coefficient": _fr(c), "left": list(i), "right": list(j)}
                          for (i, j), c in obj.sorted_terms()]}
    if isinstance(obj, (int, Fraction)):
        return {"kind": "scalar", "value": _fr(obj)}
    raise TypeError(f"cannot encode {type(obj).__name__}")


def from_json(data: dict, alphabet):
    """Inverse of :func:`to_json`."""
    from .dual import DualElement
    from .hopf import TensorElement
    from .qsym import QSymElement, QSymTensor

    def word(names):
        return tuple(alphabet.lookup(n) for n in names)

    kind = data["kind"]
    if kind in ("element", "dual"):
        cls = DualElement if kind == "dual" else Element
        return cls(alphabet, [(word(t["word"]), Fraction(t["coefficient"]))
                              for t in data["terms"]])
    if kind == "tensor":
        return TensorElement(alphabet, [((word(t["left"]), word(t["right"])),
                                         Fraction(t["coefficient"])) for t in data["terms"]],
                             dual=data.get("dual", False))
    if kind == "qsym":
        return QSymElement(data["basis"], {tuple(t["composition"]): Fraction(t["coefficient"])
                                           for t in data["terms"]})
    if kind == "qsym-tensor":
        return QSymTensor(data["basis"], {(tuple(t["left"]), tuple(t["right"])):
                                          Fraction(t["coefficient"]) for t in data["terms"]})
    if kind == "scalar":
        return Fraction(data["value"])
    raise ValueError(f"unknown JSON kind {kind!r}")
