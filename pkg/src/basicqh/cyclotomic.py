"""Exact arithmetic in the cyclotomic field Q(zeta_n).

Elements are stored as the residue modulo the n-th cyclotomic polynomial in
the power basis 1, z, ..., z^(phi(n)-1), with an integer numerator vector and
a positive common denominator.  Values are interned, so two equal elements of
the same order are the same object; this keeps hashing and the product cache
cheap during large tensor computations.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

__all__ = [
    "CyclotomicNumber",
    "cyclotomic_polynomial",
    "root_of_unity",
    "multiplicative_order",
    "lift",
    "zero",
    "one",
    "from_json",
]


def _divisors(n: int) -> list[int]:
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # both low-degree first, den monic up to sign
    num = list(num)
    lead = den[-1]
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        if c % lead:
            raise ArithmeticError("inexact polynomial division")
        c //= lead
        out[k] = c
        if c:
            for i, di in enumerate(den):
                num[k + i] -= c * di
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def _cyclo(n: int) -> tuple[int, ...]:
    if n < 1:
        raise ValueError("order must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        poly = _poly_divexact(poly, list(_cyclo(d)))
    return tuple(poly)


def cyclotomic_polynomial(n: int) -> list[int]:
    """Coefficients of Phi_n, constant term first."""
    return list(_cyclo(n))


class _Field:
    __slots__ = ("n", "deg", "phi", "zero_num")

    def __init__(self, n: int):
        self.n = n
        self.phi = _cyclo(n)
        self.deg = len(self.phi) - 1
        self.zero_num = (0,) * self.deg

    def reduce(self, c: list[int]) -> tuple[int, ...]:
        n, deg, phi = self.n, self.deg, self.phi
        if len(c) > n:
            folded = c[:n]
            for k in range(n, len(c)):
                if c[k]:
                    folded[k % n] += c[k]
            c = folded
        for k in range(len(c) - 1, deg - 1, -1):
            t = c[k]
            if t:
                base = k - deg
                for i in range(deg):
                    p = phi[i]
                    if p:
                        c[base + i] -= t * p
        if len(c) < deg:
            c = c + [0] * (deg - len(c))
        return tuple(c[:deg])


@lru_cache(maxsize=None)
def _field(n: int) -> _Field:
    return _Field(n)


_INTERN: dict = {}
_MUL: dict = {}
_INV: dict = {}
_CACHE_LIMIT = 2_000_000


def _make(order: int, num: tuple, den: int) -> "CyclotomicNumber":
    # num, den must already be normalized
    key = (order, num, den)
    x = _INTERN.get(key)
    if x is None:
        x = object.__new__(CyclotomicNumber)
        x.order = order
        x.num = num
        x.den = den
        x._h = hash(key)
        _INTERN[key] = x
    return x


def _normalize(order: int, num, den: int) -> "CyclotomicNumber":
    if den < 0:
        num = [-a for a in num]
        den = -den
    if den != 1:
        g = gcd(den, *num)
        if g != 1:
            num = [a // g for a in num]
            den //= g
    if not any(num):
        den = 1
    return _make(order, tuple(num), den)


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


class CyclotomicNumber:
    """An element of Q(zeta_order); construct through the module helpers."""

    __slots__ = ("order", "num", "den", "_h", "__weakref__")

    def __new__(cls, order: int, coeffs=None):
        F = _field(order)
        if coeffs is None:
            coeffs = []
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for f in fr:
            den = _lcm(den, f.denominator)
        ints = [int(f * den) for f in fr]
        if len(ints) != F.deg:
            ints = list(F.reduce(ints + [0] * max(0, F.deg - len(ints))))
        return _normalize(order, ints, den)

    # -- basic protocol -------------------------------------------------
    def __hash__(self) -> int:
        return self._h

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if isinstance(other, CyclotomicNumber):
            if other.order == self.order:
                return False
            N = _lcm(self.order, other.order)
            return lift(self, N) is lift(other, N)
        if isinstance(other, (int, Fraction)):
            return self is _from_rational(self.order, Fraction(other))
        return NotImplemented

    def __ne__(self, other) -> bool:
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __reduce__(self):
        return (_rebuild, (self.order, self.num, self.den))

    def __bool__(self) -> bool:
        return any(self.num)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(a, self.den) for a in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_one(self) -> bool:
        return self is one(self.order)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def __repr__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*z^{k}")
        body = " + ".join(terms) if terms else "0"
        return f"Cyc{self.order}({body})"

    # -- coercion -------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            if other.order == self.order:
                return self, other
            N = _lcm(self.order, other.order)
            return lift(self, N), lift(other, N)
        if isinstance(other, (int, Fraction)):
            return self, _from_rational(self.order, Fraction(other))
        return None, None

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        if not any(b.num):
            return a
        if not any(a.num):
            return b
        if a.den == b.den:
            return _normalize(a.order, [x + y for x, y in zip(a.num, b.num)], a.den)
        da, db = a.den, b.den
        return _normalize(a.order, [x * db + y * da for x, y in zip(a.num, b.num)], da * db)

    __radd__ = __add__

    def __neg__(self):
        return _make(self.order, tuple(-x for x in self.num), self.den)

    def __sub__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return b + (-a)

    def __mul__(self, other):
        if other.__class__ is CyclotomicNumber and other.order == self.order:
            key = (id(self), id(other))
            r = _MUL.get(key)
            if r is None:
                r = _mul(self, other)
                if len(_MUL) > _CACHE_LIMIT:
                    _MUL.clear()
                _MUL[key] = r
            return r
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return a * b

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        r = _INV.get(id(self))
        if r is None:
            r = _invert(self)
            _INV[id(self)] = r
        return r

    def __truediv__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return b * a.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def conjugate(self, k: int = -1) -> "CyclotomicNumber":
        """Galois action zeta -> zeta^k (k coprime to the order)."""
        n = self.order
        if gcd(k, n) != 1:
            raise ValueError("Galois exponent must be a unit")
        F = _field(n)
        c = [0] * n
        for i, a in enumerate(self.num):
            if a:
                c[(i * k) % n] += a
        return _normalize(n, list(F.reduce(c)), self.den)

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [[a // gcd(a, self.den), self.den // gcd(a, self.den)] for a in self.num]}


def _rebuild(order, num, den):
    return _make(order, tuple(num), den)


def _mul(a: CyclotomicNumber, b: CyclotomicNumber) -> CyclotomicNumber:
    F = _field(a.order)
    an = [(i, x) for i, x in enumerate(a.num) if x]
    if not an:
        return a
    bn = [(j, y) for j, y in enumerate(b.num) if y]
    if not bn:
        return b
    c = [0] * (2 * F.deg)
    for i, x in an:
        for j, y in bn:
            c[i + j] += x * y
    return _normalize(a.order, list(F.reduce(c)), a.den * b.den)


def _poly_trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list, b: list) -> tuple[list, list]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] / lead
        q[k] = c
        if c:
            for i, bi in enumerate(b):
                a[k + i] -= c * bi
    return q, _poly_trim(a[: len(b) - 1])


def _poly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return _poly_trim([x - y for x, y in zip(a, b)])


def _invert(x: CyclotomicNumber) -> CyclotomicNumber:
    if not any(x.num):
        raise ZeroDivisionError("inverse of zero in a cyclotomic field")
    n = x.order
    F = _field(n)
    # extended Euclid: find u with u*a = 1 mod phi
    r0, r1 = [Fraction(c) for c in F.phi], _poly_trim([Fraction(c, x.den) for c in x.num])
    s0, s1 = [], [Fraction(1)]
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    # r0 is a nonzero constant since phi is irreducible
    if len(r0) != 1:
        raise ArithmeticError("cyclotomic polynomial not coprime to input")
    inv = [c / r0[0] for c in s0]
    return CyclotomicNumber(n, inv + [Fraction(0)] * (F.deg - len(inv)))


@lru_cache(maxsize=None)
def zero(n: int) -> CyclotomicNumber:
    return _make(n, _field(n).zero_num, 1)


@lru_cache(maxsize=None)
def one(n: int) -> CyclotomicNumber:
    return root_of_unity(n, 0)


def _from_rational(n: int, r: Fraction) -> CyclotomicNumber:
    F = _field(n)
    num = [0] * F.deg
    num[0] = r.numerator
    return _make(n, tuple(num), r.denominator if r.numerator else 1)


@lru_cache(maxsize=None)
def _root(n: int, k: int) -> CyclotomicNumber:
    F = _field(n)
    c = [0] * (k + 1)
    c[k] = 1
    return _normalize(n, list(F.reduce(c)), 1)


def root_of_unity(n: int, k: int = 1) -> CyclotomicNumber:
    """zeta_n^k in canonical form."""
    if n < 1:
        raise ValueError("order must be positive")
    return _root(n, k % n)


def lift(x: CyclotomicNumber, N: int) -> CyclotomicNumber:
    """Embed x from Q(zeta_n) into Q(zeta_N), n | N."""
    n = x.order
    if n == N:
        return x
    if N % n:
        raise ValueError(f"cannot lift order {n} into order {N}")
    F = _field(N)
    step = N // n
    c = [0] * N
    for i, a in enumerate(x.num):
        if a:
            c[i * step] += a
    return _normalize(N, list(F.reduce(c)), x.den)


def rational(n: int, r) -> CyclotomicNumber:
    return _from_rational(n, Fraction(r))


def multiplicative_order(x: CyclotomicNumber) -> int | None:
    """Least k >= 1 with x^k = 1, or None when x is not a root of unity.

    Roots of unity in Q(zeta_n) have order dividing lcm(2, n), so only those
    divisors need to be tried.
    """
    if x.is_zero():
        raise ValueError("zero has no multiplicative order")
    n = x.order
    L = n if n % 2 == 0 else 2 * n
    unit = one(n)
    for k in _divisors(L):
        if x ** k is unit:
            return k
    return None


def from_json(obj: dict) -> CyclotomicNumber:
    n = int(obj["order"])
    return CyclotomicNumber(n, [Fraction(int(p), int(q)) for p, q in obj["coeffs"]])
