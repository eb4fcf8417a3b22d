"""Built-in alphabets and the plain-text alphabet config format.

Built-ins are selected by name: ``qsym``, ``euler:<r>``, ``trunc:<m>``,
``partition``.  Letter names:

* qsym / trunc:   ``z3``
* euler:r         ``z3_1`` for z_{3,1}
* partition       ``p2_1_1`` for z_{(2,1,1)}

Config files have one declaration per line::

    letter a degree 1
    letter b degree 1
    letter c degree 2
    bracket a b = c      # unspecified pairs bracket to 0
    bracket b a = c
"""
from __future__ import annotations

import re
from functools import lru_cache

from .errors import InvalidAlphabetError
from .words import Alphabet, Letter


class QSymAlphabet(Alphabet):
    """One letter z_n per degree, [z_i, z_j] = z_{i+j}."""

    name = "qsym"

    def _letters(self, n):
        return (_z(self.name, n),)

    def bracket(self, a, b):
        return _z(self.name, a.degree + b.degree)

    def letter(self, name):
        m = re.fullmatch(r"z([1-9]\d*)", name)
        if not m:
            raise KeyError(name)
        return _z(self.name, int(m.group(1)))


class TruncAlphabet(Alphabet):
    """Letters z_1..z_m; brackets that would exceed degree m vanish."""

    def __init__(self, m: int):
        if m < 1:
            raise InvalidAlphabetError("trunc:m needs m >= 1")
        self.m = m
        self.max_degree = m
        self.name = f"trunc:{m}"

    def _letters(self, n):
        return (_z(self.name, n),)

    def bracket(self, a, b):
        s = a.degree + b.degree
        return _z(self.name, s) if s <= self.m else None

    def letter(self, name):
        m = re.fullmatch(r"z([1-9]\d*)", name)
        if not m or int(m.group(1)) > self.m:
            raise KeyError(name)
        return _z(self.name, int(m.group(1)))


@lru_cache(maxsize=None)
def _z(alpha, n):
    return Letter(n, (n,), f"z{n}", alpha)


class EulerAlphabet(Alphabet):
    """Letters z_{n,i}, 0 <= i < r, with [z_{n,i}, z_{m,j}] = z_{n+m, i+j mod r}."""

    def __init__(self, r: int):
        if r < 1:
            raise InvalidAlphabetError("euler:r needs r >= 1")
        self.r = r
        self.name = f"euler:{r}"

    def z(self, n, i):
        return _euler_letter(self.name, n, i % self.r)

    def _letters(self, n):
        return tuple(self.z(n, i) for i in range(self.r))

    def bracket(self, a, b):
        return self.z(a.degree + b.degree, a.key[1] + b.key[1])

    def letter(self, name):
        m = re.fullmatch(r"z([1-9]\d*)_(\d+)", name)
        if not m or int(m.group(2)) >= self.r:
            raise KeyError(name)
        return self.z(int(m.group(1)), int(m.group(2)))


@lru_cache(maxsize=None)
def _euler_letter(alpha, n, i):
    return Letter(n, (n, i), f"z{n}_{i}", alpha)


def partitions(n, largest=None):
    """Partitions of n as nonincreasing tuples, reverse-lexicographic order."""
    if largest is None:
        largest = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, largest), 0, -1):
        out.extend((first,) + rest for rest in partitions(n - first, first))
    return out


class PartitionAlphabet(Alphabet):
    """Letters z_lambda for partitions lambda; bracket is multiset union."""

    name = "partition"

    def _letters(self, n):
        return tuple(self.z(p) for p in partitions(n))

    @staticmethod
    def z(parts):
        parts = tuple(sorted(parts, reverse=True))
        return _partition_letter(parts)

    def bracket(self, a, b):
        return self.z(_parts(a) + _parts(b))

    def letter(self, name):
        m = re.fullmatch(r"p([1-9]\d*(?:_[1-9]\d*)*)", name)
        if not m:
            raise KeyError(name)
        parts = tuple(int(x) for x in m.group(1).split("_"))
        if list(parts) != sorted(parts, reverse=True):
            raise KeyError(name)
        return self.z(parts)


def _parts(a):
    return tuple(-x for x in a.key)


@lru_cache(maxsize=None)
def _partition_letter(parts):
    # key (-2,) < (-1,-1): within a degree, larger partitions first
    return Letter(sum(parts), tuple(-x for x in parts),
                  "p" + "_".join(map(str, parts)), "partition")


class ConfigAlphabet(Alphabet):
    """A finite alphabet given by explicit letter and bracket declarations."""

    def __init__(self, letters, brackets, name="config"):
        self.name = name
        self._by_name = {}
        self._by_degree = {}
        for idx, (lname, deg) in enumerate(letters):
            if lname in self._by_name:
                raise InvalidAlphabetError(f"letter {lname!r} declared twice")
            if deg < 1:
                raise InvalidAlphabetError(f"letter {lname!r} must have degree >= 1")
            a = Letter(deg, (idx,), lname, name)
            self._by_name[lname] = a
            self._by_degree.setdefault(deg, []).append(a)
        self.max_degree = max(self._by_degree, default=0)
        self._table = {}
        for x, y, z in brackets:
            try:
                key = (self._by_name[x], self._by_name[y])
                self._table[key] = None if z in ("0", None) else self._by_name[z]
            except KeyError as exc:
                raise InvalidAlphabetError(f"bracket mentions undeclared letter {exc.args[0]!r}")

    def _letters(self, n):
        return tuple(sorted(self._by_degree.get(n, ())))

    def bracket(self, a, b):
        return self._table.get((a, b))

    def letter(self, name):
        return self._by_name[name]


_LETTER_RE = re.compile(r"letter\s+(\S+)\s+degree\s+(\d+)")
_BRACKET_RE = re.compile(r"bracket\s+(\S+)\s+(\S+)\s*=\s*(\S+)")


def parse_alphabet_config(text: str, name: str = "config") -> ConfigAlphabet:
    letters, brackets = [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if m := _LETTER_RE.fullmatch(line):
            lname = m.group(1)
            if not re.fullmatch(r"[A-Za-z][A-Za-z0-9_]*", lname) or lname == "sh":
                raise InvalidAlphabetError(f"line {lineno}: bad letter name {lname!r}")
            letters.append((lname, int(m.group(2))))
        elif m := _BRACKET_RE.fullmatch(line):
            brackets.append(m.groups())
        else:
            raise InvalidAlphabetError(f"line {lineno}: cannot parse {raw!r}")
    return ConfigAlphabet(letters, brackets, name=name)


def shuffle_alphabet(names="abc", degree=1) -> ConfigAlphabet:
    """Letters of one degree with identically zero bracket."""
    return ConfigAlphabet([(n, degree) for n in names], [], name=f"shuffle:{''.join(names)}")


QSYM = QSymAlphabet()


def make_alphabet(kind: str) -> Alphabet:
    """Build a built-in alphabet from its name (``qsym``, ``euler:2``, ...)."""
    kind = kind.strip()
    if kind == "qsym":
        return QSYM
    if kind == "partition":
        return PartitionAlphabet()
    if m := re.fullmatch(r"euler:(\d+)", kind):
        return EulerAlphabet(int(m.group(1)))
    if m := re.fullmatch(r"trunc:(\d+)", kind):
        return TruncAlphabet(int(m.group(1)))
    raise InvalidAlphabetError(f"unknown alphabet {kind!r}")
