"""Dense matrices over Q(zeta_N) backed by integer numpy arrays.

A matrix is an integer array of shape (rows, cols, phi(N)) holding
power-basis numerators, plus one positive common denominator.  This is
the fast path used by group closure and Verlinde computations; entries
convert to and from CycloNumber exactly.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd, lcm
from typing import Sequence

import numpy as np

from .cyclo import CycloNumber, field, rational

_LIMIT = 1 << 62
_EXACT_FLOAT = 1 << 52


@lru_cache(maxsize=None)
def _fold_table(n: int) -> tuple[np.ndarray, int]:
    """Rows zeta^k mod Phi_n for k < 2 phi - 1, and the largest row-sum bound."""
    F = field(n)
    P = np.array([F.powers[k] for k in range(2 * F.phi - 1)], dtype=np.int64)
    return P, int(np.abs(P).sum(axis=0).max()) if P.size else 1


@lru_cache(maxsize=None)
def _mult_tensor(n: int) -> tuple[np.ndarray, int]:
    F = field(n)
    phi = F.phi
    R = np.zeros((phi, phi, phi), dtype=np.int64)
    for p in range(phi):
        for q in range(phi):
            R[p, q] = F.powers[p + q]
    colsum = int(np.abs(R).sum(axis=(0, 1)).max())
    return R.reshape(phi * phi, phi), colsum


def _normalize(num: np.ndarray, den: int) -> tuple[np.ndarray, int]:
    if num.dtype == object:
        flat = [int(v) for v in num.ravel()]
        g = reduce(gcd, flat, den)
        if g > 1:
            num = num // g
            den //= g
        if max((abs(v) for v in flat), default=0) // max(g, 1) < _LIMIT and den < _LIMIT:
            num = num.astype(np.int64)
        return num, den
    g = int(np.gcd.reduce(num.ravel())) if num.size else 0
    g = gcd(g, den)
    if g > 1:
        num = num // g
        den //= g
    return num, den


def _absmax(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    if a.dtype == object:
        return max(abs(int(v)) for v in a.ravel())
    return int(np.abs(a).max())


class CycloMatrix:
    __slots__ = ("n", "num", "den")

    def __init__(self, n: int, num: np.ndarray, den: int = 1):
        num, den = _normalize(num, int(den))
        self.n = n
        self.num = num
        self.den = den

    # construction -----------------------------------------------------------

    @classmethod
    def from_entries(cls, rows: Sequence[Sequence[CycloNumber | int | Fraction]], n: int | None = None) -> CycloMatrix:
        cells = [[x if isinstance(x, CycloNumber) else rational(x) for x in row] for row in rows]
        if n is None:
            n = reduce(lcm, (x.conductor for row in cells for x in row), 1)
        phi = field(n).phi
        r = len(cells)
        c = len(cells[0]) if r else 0
        if any(len(row) != c for row in cells):
            raise ValueError("ragged matrix")
        embedded = [[x.embed(n) for x in row] for row in cells]
        den = reduce(lcm, (x._den for row in embedded for x in row), 1)
        big = max((abs(v) * (den // x._den) for row in embedded for x in row for v in x._num), default=0) >= _LIMIT
        num = np.zeros((r, c, phi), dtype=object if big else np.int64)
        for i, row in enumerate(embedded):
            for j, x in enumerate(row):
                f = den // x._den
                num[i, j] = [v * f for v in x._num]
        return cls(n, num, den)

    @classmethod
    def identity(cls, size: int, n: int) -> CycloMatrix:
        num = np.zeros((size, size, field(n).phi), dtype=np.int64)
        for i in range(size):
            num[i, i, 0] = 1
        return cls(n, num, 1)

    @classmethod
    def diagonal(cls, values: Sequence[CycloNumber], n: int | None = None) -> CycloMatrix:
        k = len(values)
        zero = rational(0)
        return cls.from_entries([[values[i] if i == j else zero for j in range(k)] for i in range(k)], n)

    # access -------------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.num.shape[0], self.num.shape[1]

    def __getitem__(self, ij: tuple[int, int]) -> CycloNumber:
        i, j = ij
        return CycloNumber._raw(self.n, [int(v) for v in self.num[i, j]], self.den)

    def entries(self) -> list[list[CycloNumber]]:
        r, c = self.shape
        return [[self[i, j] for j in range(c)] for i in range(r)]

    def key(self) -> tuple:
        """Canonical for a fixed conductor; embed first when mixing fields."""
        num = self.num
        if num.dtype == object:
            return (self.n, self.den, num.shape, tuple(int(v) for v in num.ravel()))
        return (self.n, self.den, num.shape, num.tobytes())

    def __hash__(self) -> int:
        # equal matrices may live at different conductors, so only the shape is safe
        return hash(self.shape)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CycloMatrix):
            return NotImplemented
        if other.n != self.n:
            m = lcm(self.n, other.n)
            return self.embed(m) == other.embed(m)
        return self.den == other.den and self.num.shape == other.num.shape and bool(np.array_equal(self.num, other.num))

    def embed(self, m: int) -> CycloMatrix:
        if m == self.n:
            return self
        return CycloMatrix.from_entries(self.entries(), m)

    def _aligned(self, other: CycloMatrix) -> tuple[CycloMatrix, CycloMatrix]:
        if other.n == self.n:
            return self, other
        m = lcm(self.n, other.n)
        return self.embed(m), other.embed(m)

    # arithmetic -------------------------------------------------------------------

    def __matmul__(self, other: CycloMatrix) -> CycloMatrix:
        a, b = self._aligned(other)
        r, m, phi = a.num.shape
        m2, c, _ = b.num.shape
        if m != m2:
            raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
        P, psum = _fold_table(a.n)
        conv = _absmax(a.num) * _absmax(b.num) * max(m, 1) * phi
        if conv * psum < _EXACT_FLOAT:
            # every partial sum is an integer below 2^53, so BLAS is exact
            dtype = np.float64
        elif conv * psum < _LIMIT:
            dtype = np.int64
        else:
            dtype = object
        A, B = a.num.astype(dtype), b.num.astype(dtype)
        X = A.transpose(0, 2, 1).reshape(r * phi, m) @ B.reshape(m, c * phi)
        X = X.reshape(r, phi, c, phi).transpose(0, 2, 1, 3).reshape(r * c, phi, phi)
        # polynomial product: fold anti-diagonals, then reduce mod Phi_n
        Y = np.zeros((r * c, 2 * phi - 1), dtype=dtype)
        for p in range(phi):
            Y[:, p:p + phi] += X[:, p, :]
        out = (Y @ P.astype(dtype)).reshape(r, c, phi)
        if dtype is np.float64:
            out = np.rint(out).astype(np.int64)
        return CycloMatrix(a.n, out, a.den * b.den)

    def _combine(self, other: CycloMatrix, sign: int) -> CycloMatrix:
        a, b = self._aligned(other)
        if a.shape != b.shape:
            raise ValueError("shape mismatch")
        den = lcm(a.den, b.den)
        fa, fb = den // a.den, den // b.den
        big = (_absmax(a.num) * fa + _absmax(b.num) * fb) >= _LIMIT
        A = a.num.astype(object) if big else a.num
        B = b.num.astype(object) if big else b.num
        return CycloMatrix(a.n, A * fa + sign * (B * fb), den)

    def __add__(self, other: CycloMatrix) -> CycloMatrix:
        return self._combine(other, 1)

    def __sub__(self, other: CycloMatrix) -> CycloMatrix:
        return self._combine(other, -1)

    def __neg__(self) -> CycloMatrix:
        return CycloMatrix(self.n, -self.num, self.den)

    def scale(self, s: CycloNumber | int | Fraction) -> CycloMatrix:
        if not isinstance(s, CycloNumber):
            s = rational(s)
        return self.scale_rows([s] * self.shape[0])

    def scale_rows(self, values: Sequence[CycloNumber]) -> CycloMatrix:
        """diag(values) @ self, without a full product."""
        m = reduce(lcm, (v.conductor for v in values), self.n)
        a = self.embed(m)
        vals = [v.embed(m) for v in values]
        phi = field(m).phi
        R, colsum = _mult_tensor(m)
        R3 = R.reshape(phi, phi, phi)
        den = reduce(lcm, (v._den for v in vals), 1)
        big = _absmax(a.num) * max(max(abs(x) for x in v._num) * (den // v._den) for v in vals) * phi * colsum >= _LIMIT
        dtype = object if big else np.int64
        out = np.empty(a.num.shape, dtype=dtype)
        for i, v in enumerate(vals):
            svec = np.array([x * (den // v._den) for x in v._num], dtype=dtype)
            # coefficient-space matrix of multiplication by v
            M = np.tensordot(svec, R3.astype(dtype), axes=(0, 0))
            out[i] = a.num[i].astype(dtype) @ M
        return CycloMatrix(m, out, a.den * den)

    def transpose(self) -> CycloMatrix:
        return CycloMatrix(self.n, self.num.transpose(1, 0, 2).copy(), self.den)

    @property
    def T(self) -> CycloMatrix:
        return self.transpose()

    def conj(self) -> CycloMatrix:
        F = field(self.n)
        phi = F.phi
        G = np.zeros((phi, phi), dtype=np.int64)
        for k in range(phi):
            G[k] = F.power(-k)
        num = self.num @ G if self.num.dtype != object else self.num @ G.astype(object)
        return CycloMatrix(self.n, num, self.den)

    def dagger(self) -> CycloMatrix:
        return self.conj().transpose()

    def __pow__(self, e: int) -> CycloMatrix:
        if e < 0:
            return self.inverse() ** (-e)
        out = CycloMatrix.identity(self.shape[0], self.n)
        base = self
        while e:
            if e & 1:
                out = out @ base
            e >>= 1
            if e:
                base = base @ base
        return out

    def inverse(self) -> CycloMatrix:
        from .linalg import inverse

        return CycloMatrix.from_entries(inverse(self.entries()), self.n)

    # predicates ---------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num.any()

    def is_identity(self) -> bool:
        r, c = self.shape
        return r == c and self == CycloMatrix.identity(r, self.n)

    def is_diagonal(self) -> bool:
        r, c = self.shape
        off = self.num.copy()
        for i in range(min(r, c)):
            off[i, i] = 0
        return not off.any()

    def diag(self) -> list[CycloNumber]:
        return [self[i, i] for i in range(min(self.shape))]

    def __repr__(self) -> str:
        return f"CycloMatrix(n={self.n}, shape={self.shape})"
