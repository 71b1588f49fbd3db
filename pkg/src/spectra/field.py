"""Finite fields GF(p^e) as GF(p)[x] modulo an explicit irreducible polynomial.

Polynomials are little-endian coefficient tuples over GF(p).  Field elements
are also encoded as integers ``c_0 + c_1 p + ... + c_{e-1} p^(e-1)``; that
integer order is the element order used for points of PG(2, q).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .errors import DivisionByZero, NotPrime, NotPrimePower


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, e)`` with ``q = p^e``; raise NotPrimePower otherwise."""
    if q >= 2:
        p = next(f for f in range(2, q + 1) if q % f == 0)
        e, m = 0, q
        while m % p == 0:
            m //= p
            e += 1
        if m == 1:
            return p, e
    raise NotPrimePower(f"{q} is not a prime power")


# --- polynomials over GF(p), little-endian ---------------------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_divmod(a, b, p: int) -> tuple[list[int], list[int]]:
    a = _trim(list(a))
    b = _trim(list(b))
    if not b:
        raise DivisionByZero("polynomial division by zero")
    inv_lead = pow(b[-1], -1, p)
    quot = [0] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b):
        shift = len(a) - len(b)
        f = a[-1] * inv_lead % p
        quot[shift] = f
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - f * c) % p
        _trim(a)
    return quot, a


def poly_mul(a, b, p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def poly_sub(a, b, p: int) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] = x
    for i, y in enumerate(b):
        out[i] = (out[i] - y) % p
    return _trim(out)


def is_irreducible(f, p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg(f)//2."""
    f = _trim(list(f))
    deg = len(f) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for low in product(range(p), repeat=d):
            if not poly_divmod(f, list(low) + [1], p)[1]:
                return False
    return True


def smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Monic irreducible of degree ``e`` minimising ``(c_{e-1}, ..., c_0)`` as a base-p integer."""
    if e == 1:
        return (0, 1)
    for code in range(p**e):
        low = [(code // p**i) % p for i in range(e)]
        cand = low + [1]
        if is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")  # impossible for prime p


@dataclass(frozen=True)
class FieldSpec:
    p: int
    e: int
    modulus: tuple[int, ...]  # little-endian, monic, length e+1

    @property
    def q(self) -> int:
        return self.p**self.e

    def element(self, code: int) -> "GFElement":
        if not 0 <= code < self.q:
            raise ValueError(f"element code {code} outside 0..{self.q - 1}")
        return GFElement(self, tuple((code // self.p**i) % self.p for i in range(self.e)))

    def elements(self) -> list["GFElement"]:
        return [self.element(c) for c in range(self.q)]

    @property
    def zero(self) -> "GFElement":
        return self.element(0)

    @property
    def one(self) -> "GFElement":
        return self.element(1)

    @cached_property
    def tables(self) -> tuple[list[list[int]], list[list[int]]]:
        """Addition and multiplication tables on integer codes."""
        els = self.elements()
        add = [[(x + y).code for y in els] for x in els]
        mul = [[(x * y).code for y in els] for x in els]
        return add, mul


def field_make(p: int, e: int = 1) -> FieldSpec:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if e < 1:
        raise ValueError("extension degree must be >= 1")
    return FieldSpec(p, e, smallest_irreducible(p, e))


def field_of_order(q: int) -> FieldSpec:
    return field_make(*prime_power(q))


@dataclass(frozen=True)
class GFElement:
    field: FieldSpec
    coeffs: tuple[int, ...]  # little-endian, length e

    @property
    def code(self) -> int:
        p = self.field.p
        return sum(c * p**i for i, c in enumerate(self.coeffs))

    def _wrap(self, poly) -> "GFElement":
        poly = list(poly) + [0] * (self.field.e - len(poly))
        return GFElement(self.field, tuple(poly[: self.field.e]))

    def _same(self, other: "GFElement"):
        if not isinstance(other, GFElement) or other.field != self.field:
            raise TypeError("elements of different fields")

    def __add__(self, other):
        self._same(other)
        p = self.field.p
        return GFElement(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._same(other)
        p = self.field.p
        return GFElement(self.field, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        p = self.field.p
        return GFElement(self.field, tuple(-a % p for a in self.coeffs))

    def __mul__(self, other):
        self._same(other)
        p = self.field.p
        prod = poly_mul(_trim(list(self.coeffs)), _trim(list(other.coeffs)), p)
        return self._wrap(poly_divmod(prod, self.field.modulus, p)[1])

    def __bool__(self):
        return any(self.coeffs)

    def inv(self) -> "GFElement":
        """Inverse by the extended Euclidean algorithm in GF(p)[x]."""
        if not self:
            raise DivisionByZero("zero has no inverse")
        p = self.field.p
        r0, r1 = list(self.field.modulus), _trim(list(self.coeffs))
        s0, s1 = [], [1]
        while r1:
            quo, rem = poly_divmod(r0, r1, p)
            r0, r1 = r1, rem
            s0, s1 = s1, poly_sub(s0, poly_mul(quo, s1, p), p)
        # r0 is a nonzero constant
        c = pow(r0[0], -1, p)
        return self._wrap([x * c % p for x in s0])

    def __truediv__(self, other):
        return self * other.inv()

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        out, base = self.field.one, self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __repr__(self):
        return f"GF({self.field.q})[{self.code}]"
