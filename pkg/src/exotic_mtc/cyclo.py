"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored in the power basis 1, z, ..., z^(phi(N)-1) of
Q[z]/Phi_N(z) with integer numerators over one positive common
denominator, so equality is plain coefficient comparison.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd, lcm
from typing import Iterable, Sequence, Union

import mpmath

Rational = Union[int, Fraction]
Conductor = int


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def mobius(n: int) -> int:
    f = _factorize(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def totient(n: int) -> int:
    out = n
    for p in _factorize(n):
        out = out // p * (p - 1)
    return out


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divexact(a: list[int], b: list[int]) -> list[int]:
    # b monic up to sign, division exact
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    lead = b[-1]
    for k in range(len(q) - 1, -1, -1):
        c = a[k + len(b) - 1] // lead
        q[k] = c
        if c:
            for j, y in enumerate(b):
                a[k + j] -= c * y
    assert not any(a), "inexact polynomial division"
    return q


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, constant term first (Moebius product)."""
    num, den = [1], [1]
    for d in range(1, n + 1):
        if n % d:
            continue
        mu = mobius(n // d)
        if mu == 0:
            continue
        factor = [-1] + [0] * (d - 1) + [1]
        if mu == 1:
            num = _poly_mul(num, factor)
        else:
            den = _poly_mul(den, factor)
    return tuple(_poly_divexact(num, den))


class _Field:
    """Per-conductor tables, built once."""

    def __init__(self, n: int):
        self.n = n
        self.phi = totient(n)
        self.poly = cyclotomic_poly(n)
        # powers[k] = z^k reduced, for 0 <= k < max(n, 2 phi - 1)
        top = max(n, 2 * self.phi - 1)
        powers: list[tuple[int, ...]] = []
        cur = [0] * self.phi
        cur[0] = 1
        for _ in range(top):
            powers.append(tuple(cur))
            carry = cur[-1]
            cur = [0] + cur[:-1]
            if carry:
                for j in range(self.phi):
                    cur[j] -= carry * self.poly[j]
        self.powers = powers
        self.high = [(k, powers[k]) for k in range(self.phi, 2 * self.phi - 1)]
        # normalized trace of z^k: Ramanujan sum c_n(k) / phi(n)
        self.traces = tuple(
            Fraction(self._ramanujan(k), self.phi) for k in range(self.phi)
        )

    def _ramanujan(self, k: int) -> int:
        g = gcd(self.n, k) if k else self.n
        return sum(mobius(self.n // d) * d for d in range(1, g + 1) if g % d == 0 and self.n % d == 0)

    def reduce(self, coeffs: list[int]) -> list[int]:
        phi = self.phi
        out = list(coeffs[:phi]) + [0] * max(0, phi - len(coeffs))
        for k in range(phi, len(coeffs)):
            c = coeffs[k]
            if c:
                row = self.powers[k] if k < len(self.powers) else self.power(k)
                for j in range(phi):
                    if row[j]:
                        out[j] += c * row[j]
        return out

    def power(self, k: int) -> tuple[int, ...]:
        return self.powers[k % self.n]


@lru_cache(maxsize=None)
def field(n: int) -> _Field:
    if n < 1:
        raise ValueError("conductor must be positive")
    return _Field(n)


def _as_fraction(x: Rational) -> Fraction:
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    raise TypeError(f"not a rational: {x!r}")


class CycloNumber:
    """Immutable element of Q(zeta_N)."""

    __slots__ = ("_n", "_num", "_den", "_hash")

    def __init__(self, conductor: int, coeffs: Sequence[Rational] = ()):
        F = field(conductor)
        fr = [_as_fraction(c) for c in coeffs]
        den = reduce(lcm, (c.denominator for c in fr), 1)
        num = [int(c * den) for c in fr]
        self._set(conductor, F.reduce(num) if len(num) > F.phi else num + [0] * (F.phi - len(num)), den)

    def _set(self, n: int, num: list[int], den: int) -> None:
        g = reduce(gcd, num, den)
        if g != 1:
            num = [c // g for c in num]
            den //= g
        self._n = n
        self._num = tuple(num)
        self._den = den
        self._hash = None

    @classmethod
    def _raw(cls, n: int, num: list[int], den: int) -> CycloNumber:
        obj = cls.__new__(cls)
        obj._set(n, num, den)
        return obj

    # construction -------------------------------------------------------

    @classmethod
    def from_rational(cls, x: Rational, conductor: int = 1) -> CycloNumber:
        x = _as_fraction(x)
        phi = field(conductor).phi
        return cls._raw(conductor, [x.numerator] + [0] * (phi - 1), x.denominator)

    @classmethod
    def from_terms(cls, conductor: int, terms: Iterable[Sequence[int]]) -> CycloNumber:
        """Sum of (p/q) * zeta_N^k over terms (k, p, q)."""
        F = field(conductor)
        acc = [Fraction(0)] * F.phi
        for term in terms:
            if len(term) != 3 or not all(isinstance(t, int) and not isinstance(t, bool) for t in term):
                raise ValueError(f"bad cyclotomic term {term!r}")
            k, p, q = term
            if q == 0:
                raise ValueError("zero denominator in cyclotomic term")
            c = Fraction(p, q)
            for j, v in enumerate(F.power(k % conductor)):
                if v:
                    acc[j] += c * v
        return cls(conductor, acc)

    # accessors ----------------------------------------------------------

    @property
    def conductor(self) -> int:
        return self._n

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    def terms(self) -> list[list[int]]:
        """Canonical literal: nonzero power-basis terms [k, p, q]."""
        out = []
        for k, c in enumerate(self.coeffs):
            if c:
                out.append([k, c.numerator, c.denominator])
        return out

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self._num[0], self._den)

    # embedding ------------------------------------------------------------

    def embed(self, m: int) -> CycloNumber:
        if m == self._n:
            return self
        if m % self._n:
            raise ValueError(f"cannot embed conductor {self._n} into {m}")
        step = m // self._n
        F = field(m)
        acc = [0] * F.phi
        for k, c in enumerate(self._num):
            if c:
                for j, v in enumerate(F.power(k * step)):
                    if v:
                        acc[j] += c * v
        return CycloNumber._raw(m, acc, self._den)

    def _align(self, other: object) -> tuple[CycloNumber, CycloNumber]:
        if isinstance(other, CycloNumber):
            if other._n == self._n:
                return self, other
            m = lcm(self._n, other._n)
            return self.embed(m), other.embed(m)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self, CycloNumber.from_rational(other, self._n)
        raise TypeError

    # arithmetic -----------------------------------------------------------

    def __add__(self, other: object) -> CycloNumber:
        try:
            a, b = self._align(other)
        except TypeError:
            return NotImplemented
        den = lcm(a._den, b._den)
        fa, fb = den // a._den, den // b._den
        return CycloNumber._raw(a._n, [x * fa + y * fb for x, y in zip(a._num, b._num)], den)

    __radd__ = __add__

    def __neg__(self) -> CycloNumber:
        return CycloNumber._raw(self._n, [-x for x in self._num], self._den)

    def __sub__(self, other: object) -> CycloNumber:
        try:
            a, b = self._align(other)
        except TypeError:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other: object) -> CycloNumber:
        return (-self) + other

    def __mul__(self, other: object) -> CycloNumber:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            f = Fraction(other)
            return CycloNumber._raw(self._n, [x * f.numerator for x in self._num], self._den * f.denominator)
        try:
            a, b = self._align(other)
        except TypeError:
            return NotImplemented
        F = field(a._n)
        return CycloNumber._raw(a._n, F.reduce(_poly_mul(list(a._num), list(b._num))), a._den * b._den)

    __rmul__ = __mul__

    def inverse(self) -> CycloNumber:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        F = field(self._n)
        # extended Euclid in Q[x]: s*a + t*Phi = 1
        a = _trim([Fraction(c) for c in self._num])
        b = [Fraction(c) for c in F.poly]
        s0, s1 = [Fraction(1)], [Fraction(0)]
        r0, r1 = a, b
        while len(r1) > 1 or r1[0] != 0:
            q, r = _pdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _psub(s0, _pmul(q, s1))
        # r0 is a nonzero constant
        c = r0[0]
        coeffs = [x / c * self._den for x in s0]
        return CycloNumber(self._n, coeffs)

    def __truediv__(self, other: object) -> CycloNumber:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        if isinstance(other, CycloNumber):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other: object) -> CycloNumber:
        return self.inverse() * other

    def __pow__(self, e: int) -> CycloNumber:
        if e < 0:
            return self.inverse() ** (-e)
        out = CycloNumber.from_rational(1, self._n)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # comparison -------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        try:
            a, b = self._align(other)
        except TypeError:
            return NotImplemented
        return a._den == b._den and a._num == b._num

    def __hash__(self) -> int:
        # normalized traces of x and x^2 do not depend on the conductor
        if self._hash is None:
            self._hash = hash((self._trace(), (self * self)._trace()))
        return self._hash

    def _trace(self) -> Fraction:
        F = field(self._n)
        return sum((c * t for c, t in zip(self._num, F.traces)), Fraction(0)) / self._den

    def __bool__(self) -> bool:
        return not self.is_zero()

    # Galois action ------------------------------------------------------

    def galois(self, a: int) -> CycloNumber:
        """The automorphism zeta -> zeta^a (gcd(a, N) = 1)."""
        if gcd(a, self._n) != 1:
            raise ValueError("exponent must be a unit mod the conductor")
        F = field(self._n)
        acc = [0] * F.phi
        for k, c in enumerate(self._num):
            if c:
                for j, v in enumerate(F.power(k * a)):
                    if v:
                        acc[j] += c * v
        return CycloNumber._raw(self._n, acc, self._den)

    def conj(self) -> CycloNumber:
        return self.galois(-1)

    # numerics -----------------------------------------------------------

    def approx(self, digits: int = 15) -> mpmath.mpc:
        if digits > 50:
            raise ValueError("at most 50 digits supported")
        with mpmath.workdps(digits + 10):
            w = mpmath.expjpi(mpmath.mpf(2) / self._n)
            total = mpmath.mpc(0)
            for k, c in enumerate(self._num):
                if c:
                    total += c * w ** k
            return +(total / self._den)

    def __complex__(self) -> complex:
        return complex(self.approx(15))

    def as_root_of_unity(self) -> Fraction | None:
        """r in [0, 1) with self = exp(2 pi i r), or None."""
        if self.is_zero():
            return None
        z = complex(self)
        if abs(abs(z) - 1) > 1e-9:
            return None
        # roots of unity here are +-zeta_N^k, so the order divides 2N
        order = 2 * self._n
        k = round(mpmath.arg(z) / (2 * mpmath.pi) * order) % order
        if self != root_of_unity(order, k):
            return None
        return Fraction(k, order)

    def __repr__(self) -> str:
        return f"CycloNumber({self._n}, {self.terms()})"

    def __str__(self) -> str:
        if self.is_rational():
            return str(self.rational())
        z = complex(self)
        return f"({z.real:.6g}{z.imag:+.6g}j)"


def _trim(p: list[Fraction]) -> list[Fraction]:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _pmul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _psub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def _pdivmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    if len(a) < len(b):
        return [Fraction(0)], _trim(a)
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    for k in range(len(q) - 1, -1, -1):
        c = a[k + len(b) - 1] / b[-1]
        q[k] = c
        if c:
            for j, y in enumerate(b):
                a[k + j] -= c * y
    return _trim(q), _trim(a[: len(b) - 1] or [Fraction(0)])


# convenience constructors -------------------------------------------------


def root_of_unity(n: int, k: int = 1) -> CycloNumber:
    if n < 1:
        raise ValueError("N must be positive")
    F = field(n)
    return CycloNumber._raw(n, list(F.power(k % n)), 1)


def rational(x: Rational, conductor: int = 1) -> CycloNumber:
    return CycloNumber.from_rational(x, conductor)


def _legendre(a: int, p: int) -> int:
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def _sqrt_prime_signed(p: int) -> CycloNumber:
    """sqrt(p*) with p* = (-1)^((p-1)/2) p, by a quadratic Gauss sum."""
    terms = [[k, _legendre(k, p), 1] for k in range(1, p)]
    return CycloNumber.from_terms(p, terms)


def sqrt_int(n: int) -> CycloNumber:
    """Exact square root of an integer; the positive (or +i) branch."""
    if n == 0:
        return rational(0)
    sign = -1 if n < 0 else 1
    square, free = 1, 1
    for p, e in _factorize(abs(n)).items():
        square *= p ** (e // 2)
        if e % 2:
            free *= p
    out = rational(square)
    target = sign
    for p in _factorize(free):
        if p == 2:
            out = out * (root_of_unity(8) + root_of_unity(8, -1))
        else:
            out = out * _sqrt_prime_signed(p)
            if p % 4 == 3:
                target = -target
    if target == -1:
        out = out * root_of_unity(4)
    # fix the branch: positive real, or positive imaginary for n < 0
    z = complex(out)
    if (n > 0 and z.real < 0) or (n < 0 and z.imag < 0):
        out = -out
    return out


def cos2pi(r: Fraction) -> CycloNumber:
    """cos(2 pi r) for rational r."""
    n = r.denominator
    k = r.numerator
    return (root_of_unity(n, k) + root_of_unity(n, -k)) * Fraction(1, 2)


def parse_literal(value: object, conductor: int) -> CycloNumber:
    if isinstance(value, int) and not isinstance(value, bool):
        return rational(value, conductor)
    if not isinstance(value, list):
        raise ValueError(f"bad cyclotomic literal {value!r}")
    return CycloNumber.from_terms(conductor, value)


def to_literal(x: CycloNumber, conductor: int | None = None) -> list[list[int]]:
    if conductor is not None:
        x = x.embed(conductor)
    return x.terms()


def common_conductor(values: Iterable[CycloNumber]) -> int:
    return reduce(lcm, (v.conductor for v in values), 1)
