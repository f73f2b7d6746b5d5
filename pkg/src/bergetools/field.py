"""Arithmetic in GF(p^k) for odd primes p, and the field norm map.

Elements are encoded as integers ``c_0 + c_1 p + ... + c_{k-1} p^{k-1}``
where ``c_i`` are the coefficients in the polynomial basis ``1, x, ...,
x^{k-1}``. Fields precompute addition, exponential and logarithm tables, so
arithmetic on codes is a table lookup. ``FieldElement`` wraps a code for the
operator-based API.
"""

from __future__ import annotations

import functools
from itertools import product
from typing import Iterable, Optional, Sequence

import numpy as np


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, a)`` with ``q == p**a``; raise ``ValueError`` otherwise."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = next(f for f in range(2, q + 1) if q % f == 0)
    a, rest = 0, q
    while rest % p == 0:
        rest //= p
        a += 1
    if rest != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, a


# polynomial helpers: coefficient lists, low degree first, entries mod p

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and a:
        shift = len(a) - 1 - dm
        factor = a[-1] * inv_lead % p
        for i, c in enumerate(m):
            a[i + shift] = (a[i + shift] - factor * c) % p
        _trim(a)
    return a


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    k = len(modulus) - 1
    for d in range(1, k // 2 + 1):
        for low in product(range(p), repeat=d):
            divisor = list(low) + [1]
            if not _poly_mod(modulus, divisor, p):
                return False
    return True


def least_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree ``k`` over GF(p).

    Polynomials ``x^k + c_{k-1} x^{k-1} + ... + c_0`` are ordered by the
    tuple ``(c_{k-1}, ..., c_0)``. The result lists coefficients low first.
    """
    for high_first in product(range(p), repeat=k):
        modulus = tuple(reversed(high_first)) + (1,)
        if is_irreducible(modulus, p):
            return modulus
    raise AssertionError("every degree has an irreducible polynomial")


class FiniteField:
    """GF(p^k) in a polynomial basis modulo a monic irreducible polynomial."""

    def __init__(self, p: int, k: int = 1, modulus: Optional[Sequence[int]] = None):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if p == 2:
            raise ValueError("characteristic 2 is not supported")
        if k < 1:
            raise ValueError("extension degree must be at least 1")
        if modulus is None:
            modulus = least_irreducible(p, k)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {k}")
        if not is_irreducible(modulus, p):
            raise ValueError(f"modulus {modulus} is reducible over GF({p})")
        self.p = p
        self.k = k
        self.modulus = modulus
        self.order = q = p ** k

        powers = p ** np.arange(k)
        self._digits = (np.arange(q)[:, None] // powers) % p
        summed = (self._digits[:, None, :] + self._digits[None, :, :]) % p
        self._add = (summed @ powers).astype(np.int64)
        self._neg = ((-self._digits) % p) @ powers
        self._build_log_tables()

    def _mul_slow(self, a: int, b: int) -> int:
        prod = _poly_mul(self.coefficients(a), self.coefficients(b), self.p)
        return self.encode(_poly_mod(prod, self.modulus, self.p))

    def _build_log_tables(self):
        q = self.order
        for g in range(2, q) if q > 2 else [1]:
            powers = [1]
            x = g
            while x != 1:
                powers.append(x)
                x = self._mul_slow(x, g)
            if len(powers) == q - 1:
                break
        else:
            raise AssertionError("no primitive element found")
        self.generator = g
        self._exp = powers + powers
        self._log = [-1] * q
        for i, x in enumerate(powers):
            self._log[x] = i

    # codes

    def coefficients(self, code: int) -> list[int]:
        return [int(c) for c in self._digits[code]]

    def encode(self, coeffs: Iterable[int]) -> int:
        code, scale = 0, 1
        coeffs = list(coeffs)
        if len(coeffs) > self.k:
            coeffs = _poly_mod(coeffs, self.modulus, self.p)
        for c in coeffs:
            code += (c % self.p) * scale
            scale *= self.p
        return code

    def add(self, a: int, b: int) -> int:
        return int(self._add[a, b])

    def neg(self, a: int) -> int:
        return int(self._neg[a])

    def sub(self, a: int, b: int) -> int:
        return int(self._add[a, self._neg[b]])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self._exp[(-self._log[a]) % (self.order - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("zero has no inverse")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.order - 1)]

    def log(self, a: int) -> int:
        if a == 0:
            raise ValueError("log of zero")
        return self._log[a]

    @property
    def add_table(self) -> np.ndarray:
        return self._add

    # element API

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, int):
            if self.k == 1:
                return FieldElement(self, value % self.p)
            if not 0 <= value < self.order:
                raise ValueError(f"code {value} outside 0..{self.order - 1}")
            return FieldElement(self, value)
        return FieldElement(self, self.encode(value))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self) -> list["FieldElement"]:
        return [FieldElement(self, c) for c in range(self.order)]

    def nonzero(self) -> list["FieldElement"]:
        return [FieldElement(self, c) for c in range(1, self.order)]

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteField) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.modulus))

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"


@functools.lru_cache(maxsize=None)
def GF(p: int, k: int = 1) -> FiniteField:
    """Shared field instance with the default (lexicographically least) modulus."""
    return FiniteField(p, k)


def field_of_order(q: int) -> FiniteField:
    p, a = prime_power(q)
    return GF(p, a)


class FieldElement:
    """An element of a ``FiniteField``; immutable."""

    __slots__ = ("field", "code")

    def __init__(self, field: FiniteField, code: int):
        self.field = field
        self.code = code

    @property
    def coefficients(self) -> list[int]:
        return self.field.coefficients(self.code)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other.code
        if isinstance(other, int):
            return self.field(other).code
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else FieldElement(self.field, self.field.add(self.code, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else FieldElement(self.field, self.field.sub(self.code, b))

    def __rsub__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else FieldElement(self.field, self.field.sub(b, self.code))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.code))

    def __mul__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else FieldElement(self.field, self.field.mul(self.code, b))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.code == 0:
            raise ValueError("zero has no multiplicative inverse")
        return FieldElement(self.field, self.field.inv(self.code))

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        if b == 0:
            raise ValueError("division by zero")
        return FieldElement(self.field, self.field.mul(self.code, self.field.inv(b)))

    def __pow__(self, e: int):
        if self.code == 0 and e < 0:
            raise ValueError("zero has no multiplicative inverse")
        return FieldElement(self.field, self.field.pow(self.code, e))

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.code == other.code
        if isinstance(other, int):
            return self.code == self.field(other).code
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.code))

    def __bool__(self) -> bool:
        return self.code != 0

    def __int__(self) -> int:
        return self.code

    def __repr__(self) -> str:
        return f"{self.field!r}{tuple(self.coefficients)}"


def subfield_embedding(small: FiniteField, big: FiniteField) -> tuple[int, ...]:
    """Codes of ``big`` that ``small``'s elements map to, indexed by small code.

    The image is the fixed field of the ``|small|``-power Frobenius. The map
    sends the basis root of ``small``'s modulus to a root of the same
    polynomial in ``big`` and is checked to be an injective ring map.
    """
    if small.p != big.p or big.k % small.k:
        raise ValueError(f"{small!r} is not a subfield of {big!r}")
    if small == big:
        return tuple(range(small.order))

    def evaluate(coeffs: Sequence[int], x: int) -> int:
        acc = 0
        for c in reversed(coeffs):
            acc = big.add(big.mul(acc, x), c % big.p)
        return acc

    beta = next(x for x in range(big.order) if evaluate(small.modulus, x) == 0)
    image = tuple(evaluate(small.coefficients(c), beta) for c in range(small.order))

    qs = small.order
    if len(set(image)) != qs or image[1] != 1:
        raise RuntimeError("subfield embedding is not injective")
    if any(big.pow(x, qs) != x for x in image):
        raise RuntimeError("subfield embedding leaves the Frobenius fixed field")
    g = small.generator
    if any(image[small.mul(g, c)] != big.mul(image[g], image[c]) for c in range(qs)):
        raise RuntimeError("subfield embedding is not multiplicative")
    return image


class NormMap:
    """The norm ``N(X) = X^(1 + q + ... + q^(s-2))`` from GF(q^(s-1)) to GF(q)."""

    def __init__(self, s: int, q: int):
        if s < 2:
            raise ValueError("norm needs s >= 2")
        p, a = prime_power(q)
        if p == 2:
            raise ValueError("q must be a power of an odd prime")
        self.s = s
        self.q = q
        self.base = GF(p, a)
        self.extension = GF(p, a * (s - 1))
        self.exponent = (q ** (s - 1) - 1) // (q - 1)
        self.embedding = subfield_embedding(self.base, self.extension)
        back = {big: small for small, big in enumerate(self.embedding)}
        table = []
        for x in range(self.extension.order):
            value = self.extension.pow(x, self.exponent)
            if value not in back:
                raise RuntimeError(f"norm of code {x} left the base field")
            table.append(back[value])
        self.table = tuple(table)

    def __call__(self, X) -> FieldElement:
        if isinstance(X, FieldElement):
            if X.field != self.extension:
                raise ValueError(f"norm expects an element of {self.extension!r}")
            X = X.code
        return FieldElement(self.base, self.table[X])


@functools.lru_cache(maxsize=None)
def norm_map(s: int, q: int) -> NormMap:
    return NormMap(s, q)


def norm(s: int, q: int, X) -> FieldElement:
    """Norm of ``X`` (an element or code of GF(q^(s-1))) as an element of GF(q)."""
    return norm_map(s, q)(X)
