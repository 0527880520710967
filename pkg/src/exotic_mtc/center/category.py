"""Skeletal evaluator for a small multiplicity-ful fusion category.

Objects are simple indices, formal direct sums (``Sum``) or binary tensor
products written as 2-tuples ``(L, R)``.  For each object A and simple t the
fusion-tree basis of Hom(A, t) is enumerated once; a morphism A -> B is stored
as one matrix per simple t whose entry [j][i] is the coefficient of
split_j o fuse_i.  Composition is then blockwise matrix product, tensor
product is a Kronecker-like reindexing, and associators come from the
F-matrices of the category.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Iterator, Sequence, Union

import numpy as np

from ..linalg import inverse as _inverse
from .scalars import Scalar, is_zero

Obj = Union[int, "Sum", tuple]


@dataclass(frozen=True)
class Sum:
    comps: tuple[int, ...]

    def __repr__(self) -> str:
        return "Sum" + repr(self.comps)


def _zeros(r: int, c: int) -> np.ndarray:
    out = np.empty((r, c), dtype=object)
    out.fill(0)
    return out


def _eye(n: int) -> np.ndarray:
    out = _zeros(n, n)
    for i in range(n):
        out[i, i] = 1
    return out


class Morphism:
    __slots__ = ("cat", "src", "tgt", "blocks")

    def __init__(self, cat: SkeletalFusionCategory, src: Obj, tgt: Obj, blocks: Sequence[np.ndarray]):
        self.cat = cat
        self.src = src
        self.tgt = tgt
        self.blocks = tuple(blocks)

    def __matmul__(self, other: Morphism) -> Morphism:
        if self.src != other.tgt:
            raise ValueError(f"cannot compose: {self.src!r} != {other.tgt!r}")
        return Morphism(self.cat, other.src, self.tgt, [a.dot(b) if a.size and b.size else _zeros(a.shape[0], b.shape[1]) for a, b in zip(self.blocks, other.blocks)])

    def _check_parallel(self, other: Morphism) -> None:
        if self.src != other.src or self.tgt != other.tgt:
            raise ValueError("morphisms are not parallel")

    def __add__(self, other: Morphism) -> Morphism:
        self._check_parallel(other)
        return Morphism(self.cat, self.src, self.tgt, [a + b for a, b in zip(self.blocks, other.blocks)])

    def __sub__(self, other: Morphism) -> Morphism:
        self._check_parallel(other)
        return Morphism(self.cat, self.src, self.tgt, [a - b for a, b in zip(self.blocks, other.blocks)])

    def __rmul__(self, c: Scalar) -> Morphism:
        return Morphism(self.cat, self.src, self.tgt, [b * c if b.size else b for b in self.blocks])

    def __neg__(self) -> Morphism:
        return (-1) * self

    def is_zero(self) -> bool:
        return all(is_zero(v) for b in self.blocks for v in b.flat)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Morphism):
            return NotImplemented
        return self.src == other.src and self.tgt == other.tgt and (self - other).is_zero()

    __hash__ = None  # type: ignore[assignment]

    def first_difference(self, other: Morphism) -> tuple[int, int, int, Any] | None:
        for t, (a, b) in enumerate(zip(self.blocks, other.blocks)):
            for (j, i), v in np.ndenumerate(a - b):
                if not is_zero(v):
                    return t, j, i, v
        return None

    def trace(self) -> Scalar:
        if self.src != self.tgt:
            raise ValueError("trace of a non-endomorphism")
        total: Scalar = 0
        for t, b in enumerate(self.blocks):
            s: Scalar = 0
            for i in range(b.shape[0]):
                s = s + b[i, i]
            if not is_zero(s):
                total = total + self.cat.dims[t] * s
        return total

    def inverse(self) -> Morphism:
        blocks = []
        for b in self.blocks:
            if b.shape[0] != b.shape[1]:
                raise ZeroDivisionError("non-square block")
            blocks.append(np.array(_inverse(b.tolist()), dtype=object).reshape(b.shape) if b.size else b.copy())
        return Morphism(self.cat, self.tgt, self.src, blocks)

    def vector(self) -> list[Scalar]:
        return [v for b in self.blocks for v in b.flat]

    def __repr__(self) -> str:
        return f"Morphism({self.src!r} -> {self.tgt!r})"


class SkeletalFusionCategory:
    """Simples 0..n-1 (0 is the unit), fusion N[a][b][c], F-matrices and dims."""

    def __init__(
        self,
        names: Sequence[str],
        fusion: np.ndarray,
        associators: dict[tuple[int, int, int, int], np.ndarray],
        dims: Sequence[Scalar],
        rigidity: dict[int, tuple[Scalar, Scalar]] | None = None,
    ):
        self.names = list(names)
        self.n = len(names)
        self.N = np.asarray(fusion, dtype=int)
        self.dims = list(dims)
        self.rigidity = dict(rigidity or {})
        self._F = {}
        for a, b, c, t in itertools.product(range(self.n), repeat=4):
            k = len(self.left_keys(a, b, c, t))
            if k != len(self.right_keys(a, b, c, t)):
                raise ValueError("fusion rules are not associative")
            if not k:
                continue
            if (a, b, c, t) in associators:
                M = np.asarray(associators[(a, b, c, t)], dtype=object)
                if M.shape != (k, k):
                    raise ValueError(f"associator {(a, b, c, t)} has shape {M.shape}, expected {(k, k)}")
            elif 0 in (a, b, c):
                M = _eye(k)
            else:
                raise ValueError(f"missing associator for {(a, b, c, t)}")
            self._F[(a, b, c, t)] = M
        self._basis_cache: dict[tuple[Obj, int], list] = {}
        self._index_cache: dict[tuple[Obj, int], dict] = {}
        self._alpha_cache: dict[tuple[Obj, Obj, Obj], Morphism] = {}

    def index(self, name: str) -> int:
        return self.names.index(name)

    # fusion-tree bases -------------------------------------------------

    def left_keys(self, a: int, b: int, c: int, t: int) -> list[tuple[int, int, int]]:
        """Basis of Hom((ab)c, t): (e, mu in V^e_ab, nu in V^t_ec)."""
        N = self.N
        return [(e, m, v) for e in range(self.n) for m in range(N[a, b, e]) for v in range(N[e, c, t])]

    def right_keys(self, a: int, b: int, c: int, t: int) -> list[tuple[int, int, int]]:
        """Basis of Hom(a(bc), t): (f, kappa in V^f_bc, lambda in V^t_af)."""
        N = self.N
        return [(f, k, l) for f in range(self.n) for k in range(N[b, c, f]) for l in range(N[a, f, t])]

    def F(self, a: int, b: int, c: int, t: int) -> np.ndarray:
        return self._F[(a, b, c, t)]

    def basis(self, obj: Obj, t: int) -> list:
        key = (obj, t)
        hit = self._basis_cache.get(key)
        if hit is not None:
            return hit
        if isinstance(obj, int):
            out = [None] if obj == t else []
        elif isinstance(obj, Sum):
            out = [(k, sub) for k, c in enumerate(obj.comps) for sub in self.basis(c, t)]
        else:
            L, R = obj
            out = []
            for l in range(self.n):
                bl = self.basis(L, l)
                if not bl:
                    continue
                for r in range(self.n):
                    m = self.N[l, r, t]
                    if not m:
                        continue
                    br = self.basis(R, r)
                    for il in bl:
                        for ir in br:
                            for mu in range(m):
                                out.append((l, r, il, ir, mu))
        self._basis_cache[key] = out
        return out

    def position(self, obj: Obj, t: int) -> dict:
        key = (obj, t)
        hit = self._index_cache.get(key)
        if hit is None:
            hit = {k: i for i, k in enumerate(self.basis(obj, t))}
            self._index_cache[key] = hit
        return hit

    def hom_dim(self, a: Obj, b: Obj) -> int:
        return sum(len(self.basis(a, t)) * len(self.basis(b, t)) for t in range(self.n))

    def dim(self, obj: Obj) -> Scalar:
        if isinstance(obj, int):
            return self.dims[obj]
        if isinstance(obj, Sum):
            total: Scalar = 0
            for c in obj.comps:
                total = total + self.dims[c]
            return total
        return self.dim(obj[0]) * self.dim(obj[1])

    def global_dim(self) -> Scalar:
        total: Scalar = 0
        for d in self.dims:
            total = total + d * d
        return total

    # morphism constructors ---------------------------------------------------

    def zero(self, src: Obj, tgt: Obj) -> Morphism:
        return Morphism(self, src, tgt, [_zeros(len(self.basis(tgt, t)), len(self.basis(src, t))) for t in range(self.n)])

    def identity(self, obj: Obj) -> Morphism:
        return Morphism(self, obj, obj, [_eye(len(self.basis(obj, t))) for t in range(self.n)])

    def relabel(self, src: Obj, tgt: Obj) -> Morphism:
        """Identity-blocked map between objects with equal-order bases (unitors)."""
        blocks = []
        for t in range(self.n):
            ns, nt = len(self.basis(src, t)), len(self.basis(tgt, t))
            if ns != nt:
                raise ValueError("objects are not canonically isomorphic")
            blocks.append(_eye(ns))
        return Morphism(self, src, tgt, blocks)

    def vertex(self, a: int, b: int, c: int, mu: int = 0, split: bool = False) -> Morphism:
        """fuse vertex v^c_ab (ab -> c) or its dual split vertex v^ab_c."""
        src = (a, b)
        blocks = [_zeros(1 if t == c else 0, len(self.basis(src, t))) for t in range(self.n)]
        blocks[c][0, self.position(src, c)[(a, b, None, None, mu)]] = 1
        f = Morphism(self, src, c, blocks)
        if split:
            return Morphism(self, c, src, [b.T.copy() for b in f.blocks])
        return f

    def inclusion(self, s: Sum, k: int) -> Morphism:
        comp = s.comps[k]
        blocks = []
        for t in range(self.n):
            M = _zeros(len(self.basis(s, t)), len(self.basis(comp, t)))
            pos = self.position(s, t)
            for i, key in enumerate(self.basis(comp, t)):
                M[pos[(k, key)], i] = 1
            blocks.append(M)
        return Morphism(self, comp, s, blocks)

    def projection(self, s: Sum, k: int) -> Morphism:
        inc = self.inclusion(s, k)
        return Morphism(self, s, inc.src, [b.T.copy() for b in inc.blocks])

    def from_vector(self, src: Obj, tgt: Obj, vec: Sequence[Scalar]) -> Morphism:
        blocks, pos = [], 0
        for t in range(self.n):
            r, c = len(self.basis(tgt, t)), len(self.basis(src, t))
            M = _zeros(r, c)
            for j in range(r):
                for i in range(c):
                    M[j, i] = vec[pos]
                    pos += 1
            blocks.append(M)
        return Morphism(self, src, tgt, blocks)

    # monoidal structure ----------------------------------------------------

    def tensor(self, f: Morphism, g: Morphism) -> Morphism:
        src, tgt = (f.src, g.src), (f.tgt, g.tgt)
        blocks = []
        for t in range(self.n):
            bs = self.basis(src, t)
            pos = self.position(tgt, t)
            M = _zeros(len(self.basis(tgt, t)), len(bs))
            for col, (l, r, il, ir, mu) in enumerate(bs):
                fa = self.position(f.src, l)[il]
                gb = self.position(g.src, r)[ir]
                fcol = f.blocks[l][:, fa]
                gcol = g.blocks[r][:, gb]
                ft, gt = self.basis(f.tgt, l), self.basis(g.tgt, r)
                for p, kl in enumerate(ft):
                    x = fcol[p]
                    if is_zero(x):
                        continue
                    for q, kr in enumerate(gt):
                        y = gcol[q]
                        if is_zero(y):
                            continue
                        M[pos[(l, r, kl, kr, mu)], col] += x * y
            blocks.append(M)
        return Morphism(self, src, tgt, blocks)

    def alpha(self, A: Obj, B: Obj, C: Obj) -> Morphism:
        """Associator ((AB)C) -> (A(BC))."""
        key = (A, B, C)
        hit = self._alpha_cache.get(key)
        if hit is not None:
            return hit
        src, tgt = ((A, B), C), (A, (B, C))
        blocks = []
        for t in range(self.n):
            bs = self.basis(src, t)
            pos = self.position(tgt, t)
            M = _zeros(len(self.basis(tgt, t)), len(bs))
            for col, (e, c, (a, b, iA, iB, mu), iC, nu) in enumerate(bs):
                G = self._F[(a, b, c, t)]
                li = self._left_pos(a, b, c, t)[(e, mu, nu)]
                for row, (f, ka, la) in enumerate(self.right_keys(a, b, c, t)):
                    v = G[row, li]
                    if not is_zero(v):
                        M[pos[(a, f, iA, (b, c, iB, iC, ka), la)], col] += v
            blocks.append(M)
        out = Morphism(self, src, tgt, blocks)
        self._alpha_cache[key] = out
        return out

    @lru_cache(maxsize=None)
    def _left_pos(self, a: int, b: int, c: int, t: int) -> dict:
        return {k: i for i, k in enumerate(self.left_keys(a, b, c, t))}

    def alpha_inv(self, A: Obj, B: Obj, C: Obj) -> Morphism:
        key = ("inv", A, B, C)
        hit = self._alpha_cache.get(key)
        if hit is None:
            hit = self.alpha(A, B, C).inverse()
            self._alpha_cache[key] = hit
        return hit

    # rigidity -------------------------------------------------------------

    def ev(self, a: int) -> Morphism:
        """d_a : a a -> 1."""
        scale, _ = self.rigidity[a]
        return scale * self.vertex(a, a, 0)

    def coev(self, a: int) -> Morphism:
        """b_a : 1 -> a a."""
        _, scale = self.rigidity[a]
        return scale * self.vertex(a, a, 0, split=True)

    def snakes(self, a: int) -> tuple[Morphism, Morphism]:
        """Both zig-zag composites; each should be id_a."""
        I = self.identity(a)
        first = (
            self.relabel((0, a), a)
            @ self.tensor(self.ev(a), I)
            @ self.alpha_inv(a, a, a)
            @ self.tensor(I, self.coev(a))
            @ self.relabel(a, (a, 0))
        )
        second = (
            self.relabel((a, 0), a)
            @ self.tensor(I, self.ev(a))
            @ self.alpha(a, a, a)
            @ self.tensor(self.coev(a), I)
            @ self.relabel(a, (0, a))
        )
        return first, second

    def pentagon_sides(self, a: Obj, b: Obj, c: Obj, d: Obj) -> tuple[Morphism, Morphism]:
        I_a, I_d = self.identity(a), self.identity(d)
        p1 = self.alpha(a, b, (c, d)) @ self.alpha((a, b), c, d)
        p2 = self.tensor(I_a, self.alpha(b, c, d)) @ self.alpha(a, (b, c), d) @ self.tensor(self.alpha(a, b, c), I_d)
        return p1, p2

    def simple_quadruples(self) -> Iterator[tuple[int, int, int, int]]:
        return itertools.product(range(self.n), repeat=4)
