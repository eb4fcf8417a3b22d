"""Exact scalar arithmetic.

Rationals are :class:`fractions.Fraction`.  On top of that this module has
the cyclotomic field Q(w_r), a small dense rational matrix type with exact
Gaussian elimination, truncated rational power series, and the Moebius
function.  Nothing here ever rounds.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, SingularMatrixError

Rational = Fraction


# -- polynomials as low-to-high coefficient tuples ---------------------------

def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(p, q):
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _poly_divmod(p, d):
    """Long division by a monic-or-not nonzero divisor ``d``."""
    p = [Fraction(c) for c in _trim(p)]
    d = _trim(d)
    if not d:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(p) - len(d) + 1, 0)
    lead = Fraction(d[-1])
    while len(p) >= len(d) and p:
        shift = len(p) - len(d)
        c = p[-1] / lead
        quot[shift] = c
        for i, b in enumerate(d):
            p[shift + i] -= c * b
        p = _trim(p)
    return quot, p


@lru_cache(maxsize=None)
def cyclotomic_polynomial(r: int) -> tuple[Fraction, ...]:
    """Coefficients (constant term first) of the r-th cyclotomic polynomial.

    >>> [int(c) for c in cyclotomic_polynomial(6)]
    [1, -1, 1]
    """
    if r < 1:
        raise ValueError("cyclotomic_polynomial needs r >= 1")
    num = [Fraction(-1)] + [Fraction(0)] * (r - 1) + [Fraction(1)]
    for d in range(1, r):
        if r % d == 0:
            num, rem = _poly_divmod(num, cyclotomic_polynomial(d))
            assert not rem
    return tuple(num)


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius needs n >= 1")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


# -- cyclotomic numbers ------------------------------------------------------

@dataclass(frozen=True)
class CycloNum:
    """An element of Q(w), w = exp(2 pi i / order), reduced modulo Phi_order.

    ``coeffs[k]`` is the coefficient of w**k; the tuple always has length
    deg(Phi_order) so equality of dataclasses is field equality.
    """
    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        deg = len(cyclotomic_polynomial(self.order)) - 1
        if len(self.coeffs) != deg:
            raise ValueError(f"CycloNum of order {self.order} needs {deg} coefficients")

    @classmethod
    def _reduce(cls, order, poly):
        _, rem = _poly_divmod(poly, cyclotomic_polynomial(order))
        deg = len(cyclotomic_polynomial(order)) - 1
        rem = list(rem) + [Fraction(0)] * (deg - len(rem))
        return cls(order, tuple(rem))

    @classmethod
    def from_rational(cls, order: int, value) -> "CycloNum":
        return cls._reduce(order, [Fraction(value)])

    @classmethod
    def zero(cls, order: int) -> "CycloNum":
        return cls.from_rational(order, 0)

    @classmethod
    def one(cls, order: int) -> "CycloNum":
        return cls.from_rational(order, 1)

    @classmethod
    def omega_power(cls, order: int, k: int) -> "CycloNum":
        return _omega_power(order, k % order)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def _check(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloNum.from_rational(self.order, other)
        if not isinstance(other, CycloNum):
            return NotImplemented
        if other.order != self.order:
            raise DomainError(f"cyclotomic order mismatch: {self.order} vs {other.order}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return CycloNum(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return CycloNum._reduce(self.order, _poly_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        out = CycloNum.one(self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycloNum.from_rational(self.order, other)
        if not isinstance(other, CycloNum):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def to_complex(self) -> complex:
        w = cmath.exp(2j * math.pi / self.order)
        return sum(float(c) * w ** k for k, c in enumerate(self.coeffs))

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("w" if k == 1 else f"w^{k}")
            if mono and abs(c) == 1:
                text = mono
            else:
                text = str(abs(c)) + (f"*{mono}" if mono else "")
            parts.append(("-" if c < 0 else "+", text))
        if not parts:
            return "0"
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out


@lru_cache(maxsize=None)
def _omega_power(order, k):
    return CycloNum._reduce(order, [Fraction(0)] * k + [Fraction(1)])


def cyclo_arith(a: CycloNum, b: CycloNum, op: str):
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "eq":
        if a.order != b.order:
            raise DomainError(f"cyclotomic order mismatch: {a.order} vs {b.order}")
        return a == b
    raise ValueError(f"unknown op {op!r}")


# -- dense rational matrices -------------------------------------------------

class RatMatrix:
    """Dense matrix of Fractions.  Immutable by convention."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = [[Fraction(x) for x in row] for row in rows]
        if not rows or any(len(r) != len(rows[0]) for r in rows) or not rows[0]:
            raise ValueError("RatMatrix must be a nonempty rectangular grid")
        self.rows = rows

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def shape(self):
        return len(self.rows), len(self.rows[0])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, RatMatrix) and self.rows == other.rows

    def __matmul__(self, other):
        n, m = self.shape
        m2, p = other.shape
        if m != m2:
            raise ValueError("shape mismatch")
        cols = list(zip(*other.rows))
        return RatMatrix([[sum((a * b for a, b in zip(row, col)), Fraction(0))
                           for col in cols] for row in self.rows])

    def transpose(self):
        return RatMatrix([list(c) for c in zip(*self.rows)])

    def det(self):
        return mat_det(self)

    def rank(self):
        return mat_rank(self)

    def solve(self, rhs):
        return mat_solve(self, rhs)

    def __repr__(self):
        return f"RatMatrix({[[str(x) for x in r] for r in self.rows]})"


def _as_rows(m):
    if isinstance(m, RatMatrix):
        return [row[:] for row in m.rows]
    return [[Fraction(x) for x in row] for row in m]


def _eliminate(a, ncols):
    """Full-pivot forward elimination in place.

    Returns (rank, sign, pivots, column permutation).  ``a`` ends up upper
    triangular in the permuted column order.
    """
    nrows = len(a)
    perm = list(range(ncols))
    sign = 1
    rank = 0
    for k in range(min(nrows, ncols)):
        pivot = None
        for i in range(k, nrows):
            row = a[i]
            for j in range(k, ncols):
                if row[perm[j]] != 0:
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        i, j = pivot
        if i != k:
            a[k], a[i] = a[i], a[k]
            sign = -sign
        if j != k:
            perm[k], perm[j] = perm[j], perm[k]
            sign = -sign
        pc = perm[k]
        piv = a[k][pc]
        for i in range(k + 1, nrows):
            f = a[i][pc]
            if f:
                f = f / piv
                ri, rk = a[i], a[k]
                for jj in range(k, ncols):
                    c = perm[jj]
                    if rk[c]:
                        ri[c] -= f * rk[c]
        rank += 1
    return rank, sign, perm


def mat_det(m) -> Fraction:
    a = _as_rows(m)
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("determinant of a non-square matrix")
    rank, sign, perm = _eliminate(a, n)
    if rank < n:
        return Fraction(0)
    d = Fraction(sign)
    for k in range(n):
        d *= a[k][perm[k]]
    return d


def mat_rank(m) -> int:
    a = _as_rows(m)
    if not a:
        return 0
    return _eliminate(a, len(a[0]))[0]


def mat_solve(m, rhs) -> list[Fraction]:
    """Solve ``m x = rhs`` exactly; raises SingularMatrixError if singular."""
    a = _as_rows(m)
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("mat_solve needs a square matrix")
    if len(rhs) != n:
        raise ValueError("right-hand side has the wrong length")
    aug = [row + [Fraction(b)] for row, b in zip(a, rhs)]
    # keep the rhs column out of the pivot search
    rank, _, perm = _eliminate_aug(aug, n)
    if rank < n:
        raise SingularMatrixError(f"singular {n}x{n} system (rank {rank})")
    x = [Fraction(0)] * n
    for k in reversed(range(n)):
        c = perm[k]
        s = aug[k][n]
        for jj in range(k + 1, n):
            s -= aug[k][perm[jj]] * x[perm[jj]]
        x[c] = s / aug[k][c]
    return x


def _eliminate_aug(aug, n):
    perm = list(range(n))
    for k in range(n):
        pivot = None
        for i in range(k, n):
            for j in range(k, n):
                if aug[i][perm[j]] != 0:
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            return k, 1, perm
        i, j = pivot
        aug[k], aug[i] = aug[i], aug[k]
        perm[k], perm[j] = perm[j], perm[k]
        pc = perm[k]
        piv = aug[k][pc]
        for i in range(k + 1, n):
            f = aug[i][pc]
            if f:
                f = f / piv
                ri, rk = aug[i], aug[k]
                for jj in range(k, n):
                    c = perm[jj]
                    if rk[c]:
                        ri[c] -= f * rk[c]
                ri[n] -= f * rk[n]
    return n, 1, perm


# -- truncated power series --------------------------------------------------

@dataclass(frozen=True)
class TruncSeries:
    """Rational power series known exactly through x**N (N = truncation)."""
    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs, truncation=None):
        coeffs = [Fraction(c) for c in coeffs]
        if truncation is None:
            truncation = len(coeffs) - 1
        coeffs = (coeffs + [Fraction(0)] * (truncation + 1))[: truncation + 1]
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @property
    def truncation(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n):
        return self.coeffs[n]

    def __add__(self, other):
        n = min(self.truncation, other.truncation)
        return TruncSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], n)

    def __sub__(self, other):
        n = min(self.truncation, other.truncation)
        return TruncSeries([a - b for a, b in zip(self.coeffs, other.coeffs)], n)

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return TruncSeries([c * other for c in self.coeffs])
        n = min(self.truncation, other.truncation)
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            a = self.coeffs[i]
            if a:
                for j in range(n + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return TruncSeries(out, n)

    __rmul__ = __mul__

    def inverse(self) -> "TruncSeries":
        if self.coeffs[0] == 0:
            raise DomainError("series inversion needs a nonzero constant term")
        n = self.truncation
        inv = [Fraction(0)] * (n + 1)
        inv[0] = 1 / self.coeffs[0]
        for k in range(1, n + 1):
            s = sum((self.coeffs[i] * inv[k - i] for i in range(1, k + 1)), Fraction(0))
            inv[k] = -s * inv[0]
        return TruncSeries(inv, n)

    def derivative_times_x(self) -> "TruncSeries":
        return TruncSeries([k * c for k, c in enumerate(self.coeffs)], self.truncation)

    @classmethod
    def from_c_sequence(cls, c, constant=1) -> "TruncSeries":
        """Rebuild A with A(0) = constant from x A'/A = sum c_n x**n (n >= 1)."""
        c = [Fraction(0)] + [Fraction(v) for v in c]
        n = len(c) - 1
        a = [Fraction(constant)] + [Fraction(0)] * n
        for m in range(1, n + 1):
            a[m] = sum((c[k] * a[m - k] for k in range(1, m + 1)), Fraction(0)) / m
        return cls(a, n)


def series_c_sequence(a: TruncSeries) -> list[Fraction]:
    """c_1..c_N with x A'(x)/A(x) = sum c_n x**n."""
    if a.coeffs[0] != 1:
        raise DomainError("series_c_sequence needs constant term 1")
    logder = a.derivative_times_x() * a.inverse()
    return list(logder.coeffs[1:])
