"""Exact arithmetic helpers: quadratic surds and overflow-safe integer matrices.

Every sign decision in this package is made here, on rationals or on numbers
of the form ``a + b*sqrt(r)`` with rational ``a, b`` and a squarefree positive
integer ``r``.  Floats are only produced on request.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

import numpy as np

Rational = Union[int, Fraction]

_INT64_SAFE = 2**62


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def frac_str(x: Rational) -> str:
    """Render a rational as ``"p/q"`` (or ``"p"`` when integral)."""
    x = as_fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def squarefree_split(m: int) -> tuple[int, int]:
    """Return ``(s, r)`` with ``m = s*s*r`` and ``r`` squarefree (``m >= 1``)."""
    if m < 1:
        raise ValueError("squarefree_split needs a positive integer")
    s, r = 1, 1
    f = 2
    while f * f <= m:
        e = 0
        while m % f == 0:
            m //= f
            e += 1
        s *= f ** (e // 2)
        if e % 2:
            r *= f
        f += 1
    return s, r * m


class QuadraticSurd:
    """The real number ``a + b*sqrt(r)``.

    ``r`` is a squarefree integer >= 1; ``r == 1`` only when ``b == 0`` (the
    value is rational).  Arithmetic between surds requires a common radicand.
    """

    __slots__ = ("a", "b", "r")

    def __init__(self, a: Rational = 0, b: Rational = 0, r: int = 1):
        a, b = as_fraction(a), as_fraction(b)
        if r < 0:
            raise ValueError("negative radicand")
        if r == 0 or b == 0:
            b, r = Fraction(0), 1
        else:
            s, r = squarefree_split(r)
            b *= s
            if r == 1:
                a, b = a + b, Fraction(0)
        self.a, self.b, self.r = a, b, r

    @classmethod
    def sqrt(cls, x: Rational) -> "QuadraticSurd":
        """Exact square root of a non-negative rational."""
        x = as_fraction(x)
        if x < 0:
            raise ValueError("square root of a negative number")
        # sqrt(p/q) = sqrt(p*q)/q
        if x == 0:
            return cls(0)
        return cls(0, Fraction(1, x.denominator), x.numerator * x.denominator)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def _coerce(self, other) -> "QuadraticSurd":
        if isinstance(other, QuadraticSurd):
            if not (other.r == self.r or other.b == 0 or self.b == 0):
                raise ValueError(f"mixed radicands sqrt({self.r}) and sqrt({other.r})")
            return other
        return QuadraticSurd(as_fraction(other))

    @staticmethod
    def _radicand(x: "QuadraticSurd", y: "QuadraticSurd") -> int:
        return x.r if x.b else y.r

    def __add__(self, other):
        o = self._coerce(other)
        return QuadraticSurd(self.a + o.a, self.b + o.b, self._radicand(self, o))

    __radd__ = __add__

    def __neg__(self):
        return QuadraticSurd(-self.a, -self.b, self.r)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        r = self._radicand(self, o)
        return QuadraticSurd(self.a * o.a + self.b * o.b * r, self.a * o.b + self.b * o.a, r)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not supported")
        out = QuadraticSurd(1)
        for _ in range(e):
            out = out * self
        return out

    def sign(self) -> int:
        a, b = self.a, self.b
        sa = (a > 0) - (a < 0)
        sb = (b > 0) - (b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: compare a^2 with b^2 r
        d = a * a - b * b * self.r
        sd = (d > 0) - (d < 0)
        return sa * sd

    def __eq__(self, other):
        try:
            return (self - other).sign() == 0
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.r))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.r)

    def to_json(self) -> dict:
        return {"a": frac_str(self.a), "b": frac_str(self.b), "rad": self.r}

    def __repr__(self):
        if self.b == 0:
            return f"QuadraticSurd({frac_str(self.a)})"
        return f"QuadraticSurd({frac_str(self.a)} + {frac_str(self.b)}*sqrt({self.r}))"

    def __str__(self):
        if self.b == 0:
            return frac_str(self.a)
        root = f"sqrt({self.r})"
        bs = "" if abs(self.b) == 1 else f"{frac_str(abs(self.b))}*"
        if self.a == 0:
            return f"{'-' if self.b < 0 else ''}{bs}{root}"
        return f"{frac_str(self.a)} {'-' if self.b < 0 else '+'} {bs}{root}"


def exact_sign(x) -> int:
    if isinstance(x, QuadraticSurd):
        return x.sign()
    x = as_fraction(x)
    return (x > 0) - (x < 0)


# ---------------------------------------------------------------------------
# integer matrices
# ---------------------------------------------------------------------------

def _max_abs(m: np.ndarray) -> int:
    if m.size == 0:
        return 0
    return int(max(abs(int(x)) for x in (m.max(), m.min())))


def _max_row_l1(m: np.ndarray) -> int:
    if m.size == 0:
        return 0
    return int(max(sum(abs(int(x)) for x in row) for row in m))


def exact_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact product of integer matrices.

    Uses int64 when every entry is provably below 2**62, otherwise falls back to
    Python integers (object dtype).
    """
    if a.dtype != object and b.dtype != object:
        if _max_row_l1(a) * _max_abs(b) < _INT64_SAFE:
            return a.astype(np.int64) @ b.astype(np.int64)
    return np.dot(a.astype(object), b.astype(object))


def exact_matpow(a: np.ndarray, e: int) -> np.ndarray:
    if e < 0:
        raise ValueError("negative exponent")
    result = np.eye(a.shape[0], dtype=np.int64)
    base = a
    while e:
        if e & 1:
            result = exact_matmul(result, base)
        e >>= 1
        if e:
            base = exact_matmul(base, base)
    return result
