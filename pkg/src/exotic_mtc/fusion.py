"""Fusion rings: Verlinde formula, subcategories, centralizers, primality, gradings."""
from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass
from importlib import resources
from typing import Iterable, Sequence

import numpy as np

from .cyclo import CycloNumber, rational
from .cyclomat import CycloMatrix
from .linalg import det
from .moddata import ModularData, ModularDataError, global_dimension, quantum_dims
from .report import Report


class FusionError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class FusionRing:
    labels: tuple[str, ...]
    N: np.ndarray  # N[i, j, k] = mult of k in i (x) j
    dual: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def matrix(self, i: int) -> np.ndarray:
        """[j][k] = N_{ij}^k."""
        return self.N[i]

    def product(self, i: int, j: int) -> dict[int, int]:
        return {k: int(m) for k, m in enumerate(self.N[i, j]) if m}

    def format(self, vec: Iterable[int] | dict[int, int]) -> str:
        items = vec.items() if isinstance(vec, dict) else enumerate(vec)
        parts = [(f"{m}{self.labels[k]}" if m > 1 else self.labels[k]) for k, m in items if m]
        return "+".join(parts) if parts else "0"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FusionRing):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(self.N, other.N)

    __hash__ = None  # type: ignore[assignment]

    def to_dict(self) -> dict:
        return {"labels": list(self.labels), "dual": list(self.dual), "N": self.N.tolist()}


def ring_from_tensor(labels: Sequence[str], N: np.ndarray) -> FusionRing:
    N = np.asarray(N, dtype=np.int64)
    dual = []
    for i in range(len(labels)):
        hits = [j for j in range(len(labels)) if N[i, j, 0]]
        if len(hits) != 1 or N[i, hits[0], 0] != 1:
            raise FusionError(f"{labels[i]} has no unique dual")
        dual.append(hits[0])
    return FusionRing(tuple(labels), N, tuple(dual))


def validate_ring(fr: FusionRing, report: Report | None = None) -> Report:
    report = report if report is not None else Report()
    N, n = fr.N, fr.rank
    eye = np.eye(n, dtype=np.int64)
    report.add("RING", "nonnegative", bool((N >= 0).all()))
    report.add("RING", "unit", bool(np.array_equal(N[0], eye) and np.array_equal(N[:, 0, :], eye)))
    # (i j) k = i (j k)
    left = np.einsum("ijm,mkl->ijkl", N, N)
    right = np.einsum("jkm,iml->ijkl", N, N)
    report.add("RING", "associative", bool(np.array_equal(left, right)))
    d = list(fr.dual)
    inv = all(d[d[i]] == i for i in range(n)) and d[0] == 0
    frob = all(
        N[i, j, k] == N[d[i], k, j] == N[k, d[j], i] for i in range(n) for j in range(n) for k in range(n)
    )
    report.add("RING", "duality", inv and frob)
    return report


# Verlinde ------------------------------------------------------------------------


def verlinde(md: ModularData) -> FusionRing:
    """N_ij^k = D^-2 sum_t s_it s_jt conj(s_kt) / s_0t, checked to be in Z>=0."""
    n = md.rank
    S = md.S
    Sd = S.dagger()
    inv_d = [x.inverse() for x in quantum_dims(md)]
    inv_D2 = global_dimension(md).inverse()
    N = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        ratios = [md.s(i, t) * inv_d[t] for t in range(n)]
        Mi = (S @ Sd.scale_rows(ratios)).scale(inv_D2)
        for j in range(n):
            for k in range(n):
                v = Mi[j, k]
                if not v.is_rational() or v.rational().denominator != 1 or v.rational() < 0:
                    raise ModularDataError(f"Verlinde gives non-integral N[{md.labels[i]}][{md.labels[j]}][{md.labels[k]}] = {v}")
                N[i, j, k] = int(v.rational())
    return ring_from_tensor(md.labels, N)


# subcategories -----------------------------------------------------------------


def closure(fr: FusionRing, gens: Iterable[int]) -> frozenset[int]:
    have = {0, *gens}
    frontier = list(have)
    while frontier:
        new = set()
        for a in frontier:
            new.add(fr.dual[a])
            for b in list(have):
                new.update(np.nonzero(fr.N[a, b])[0].tolist())
                new.update(np.nonzero(fr.N[b, a])[0].tolist())
        frontier = [x for x in new if x not in have]
        have.update(frontier)
    return frozenset(have)


def is_fusion_closed(fr: FusionRing, subset: Iterable[int]) -> bool:
    s = set(subset)
    return 0 in s and closure(fr, s) == s


def tensor_subcategories(fr: FusionRing) -> list[frozenset[int]]:
    """All fusion-closed label sets, by closing every subset of non-unit simples."""
    found: set[frozenset[int]] = set()
    others = range(1, fr.rank)
    for r in range(fr.rank):
        for gens in itertools.combinations(others, r):
            found.add(closure(fr, gens))
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def subset_dim(md: ModularData, subset: Iterable[int]) -> CycloNumber:
    total = rational(0)
    for i in subset:
        total = total + md.s(0, i) * md.s(0, i)
    return total


def centralizer(md: ModularData, subset: Iterable[int]) -> frozenset[int]:
    sub = list(subset)
    return frozenset(x for x in range(md.rank) if all(md.s(x, y) == md.s(0, x) * md.s(0, y) for y in sub))


def dim_product_check(md: ModularData, subset: Iterable[int]) -> bool:
    sub = list(subset)
    return subset_dim(md, sub) * subset_dim(md, centralizer(md, sub)) == global_dimension(md)


def is_modular_subset(md: ModularData, subset: Sequence[int]) -> bool:
    sub = sorted(subset)
    block = [[md.s(i, j) for j in sub] for i in sub]
    return not det(block).is_zero()


@dataclass(frozen=True)
class Primality:
    prime: bool
    modular_subcategories: tuple[frozenset[int], ...]


def is_prime(md: ModularData, fr: FusionRing | None = None) -> Primality:
    fr = fr or verlinde(md)
    full = frozenset(range(md.rank))
    mods = tuple(s for s in tensor_subcategories(fr) if 1 < len(s) and s != full and is_modular_subset(md, sorted(s)))
    return Primality(not mods, mods)


@dataclass(frozen=True)
class Factorization:
    left: tuple[int, ...]
    right: tuple[int, ...]
    pairing: dict  # (a, b) -> label of a (x) b


def product_factorization(md: ModularData, fr: FusionRing | None = None) -> Factorization | None:
    fr = fr or verlinde(md)
    D2 = global_dimension(md)
    mods = [sorted(s) for s in is_prime(md, fr).modular_subcategories]
    for A, B in itertools.combinations(mods, 2):
        if set(A) & set(B) != {0} or len(A) * len(B) != md.rank:
            continue
        if subset_dim(md, A) * subset_dim(md, B) != D2:
            continue
        pairing = {}
        for a in A:
            for b in B:
                prod = fr.product(a, b)
                if len(prod) != 1 or next(iter(prod.values())) != 1:
                    break
                pairing[(a, b)] = next(iter(prod))
            else:
                continue
            break
        if len(pairing) != md.rank or len(set(pairing.values())) != md.rank:
            continue
        if all(
            md.s(pairing[(a, b)], pairing[(a2, b2)]) == md.s(a, a2) * md.s(b, b2)
            for (a, b), (a2, b2) in itertools.product(pairing, repeat=2)
        ):
            return Factorization(tuple(A), tuple(B), pairing)
    return None


def kronecker(m1: ModularData, m2: ModularData) -> ModularData:
    """Deligne product of two modular data, labels 'a.b'."""
    from .moddata import from_matrices

    pairs = [(i, j) for i in range(m1.rank) for j in range(m2.rank)]
    labels = [f"{m1.labels[i]}.{m2.labels[j]}" for i, j in pairs]
    s = [[m1.s(i, k) * m2.s(j, l) for k, l in pairs] for i, j in pairs]
    t = [m1.t_diag[i] * m2.t_diag[j] for i, j in pairs]
    D = m1.d_total * m2.d_total if m1.d_total is not None and m2.d_total is not None else None
    return from_matrices(labels, s, t, D)


# grading -----------------------------------------------------------------------


@dataclass(frozen=True)
class Grading:
    parts: tuple[frozenset[int], ...]  # parts[0] is the adjoint subcategory
    table: tuple[tuple[int, ...], ...]  # part index of parts[g] (x) parts[h]

    @property
    def order(self) -> int:
        return len(self.parts)

    def structure(self) -> str:
        n = self.order
        if n == 1:
            return "trivial"

        def order_of(g: int) -> int:
            k, x = 1, g
            while x != 0:
                x = self.table[x][g]
                k += 1
            return k

        orders = sorted(order_of(g) for g in range(n))
        if orders[-1] == n:
            return f"Z{n}"
        return "abelian of order {} (element orders {})".format(n, orders)


def universal_grading(fr: FusionRing) -> Grading:
    adj = closure(fr, [k for i in range(fr.rank) for k in fr.product(i, fr.dual[i])])
    assigned: dict[int, int] = {}
    parts: list[set[int]] = []
    for x in range(fr.rank):
        if x in assigned:
            continue
        part = {k for a in adj for k in fr.product(x, a)}
        for k in part:
            if k in assigned:
                raise FusionError("inconsistent grading")
            assigned[k] = len(parts)
        parts.append(part)
    table = []
    for p in parts:
        row = []
        for q in parts:
            targets = {assigned[k] for a in p for b in q for k in fr.product(a, b)}
            if len(targets) != 1:
                raise FusionError("inconsistent grading")
            row.append(targets.pop())
        table.append(tuple(row))
    order = sorted(range(len(parts)), key=lambda g: (g != assigned[0], g))
    remap = {g: i for i, g in enumerate(order)}
    return Grading(
        tuple(frozenset(parts[g]) for g in order),
        tuple(tuple(remap[table[g][h]] for h in order) for g in order),
    )


# dimension arithmetic ------------------------------------------------------------


def dimension_filter(md: ModularData, target: CycloNumber | int) -> list[list[CycloNumber]]:
    """Sub-multisets of the simple dimensions, containing 1, with sum d^2 = target."""
    target = target if isinstance(target, CycloNumber) else rational(target)
    groups: dict[CycloNumber, int] = {}
    for d in quantum_dims(md):
        groups[d] = groups.get(d, 0) + 1
    distinct = sorted(groups, key=lambda d: float(d.approx().real))
    sq = [d * d for d in distinct]
    goal = float(target.approx().real)
    out = []
    for counts in itertools.product(*(range(groups[d] + 1) for d in distinct)):
        if counts[distinct.index(rational(1))] == 0:
            continue
        approx = sum(c * float(s.approx().real) for c, s in zip(counts, sq))
        if abs(approx - goal) > 1e-6:  # cheap prefilter before the exact test
            continue
        total = rational(0)
        for c, s in zip(counts, sq):
            if c:
                total = total + s * c
        if total == target:
            out.append([d for d, c in zip(distinct, counts) for _ in range(c)])
    return out


def tensor_power_tower(fr: FusionRing, x: int, n: int) -> list[list[int]]:
    """Level l: multiplicities of each simple in x^(l)."""
    if n > 12:
        raise ValueError("tower depth is limited to 12")
    v = np.zeros(fr.rank, dtype=object)
    v[0] = 1
    out = [v.tolist()]
    M = fr.matrix(x).astype(object)
    for _ in range(n):
        v = v @ M
        out.append(v.tolist())
    return out


def word_vector(fr: FusionRing, word: Sequence[int]) -> np.ndarray:
    v = np.zeros(fr.rank, dtype=object)
    v[0] = 1
    for x in word:
        # v . N_x  gives the decomposition of (previous) (x) x
        v = np.array([sum(v[k] * fr.N[k, x, m] for k in range(fr.rank)) for m in range(fr.rank)], dtype=object)
    return v


def hom_dimension(fr: FusionRing, target: int, word: Sequence[int]) -> int:
    if len(word) > 6:
        raise ValueError("words are limited to length 6")
    return int(word_vector(fr, word)[target])


# printed tables --------------------------------------------------------------------


def printed_fusion() -> dict:
    return json.loads(resources.files("exotic_mtc").joinpath("data/printed_fusion.json").read_text())


_TERM = re.compile(r"^(\d*)([A-Za-z0-9_.]+)$")


def parse_sum(fr: FusionRing, text: str) -> list[int]:
    vec = [0] * fr.rank
    for term in text.split("+"):
        m = _TERM.match(term.strip())
        if not m:
            raise FusionError(f"cannot parse term {term!r}")
        vec[fr.index(m.group(2))] += int(m.group(1) or 1)
    return vec


def compare_tables(fr: FusionRing, tables: dict, report: Report | None = None, suite: str = "TABLE") -> Report:
    """Entry-by-entry comparison of printed tensor tables with the ring."""
    report = report if report is not None else Report()
    for name, tab in tables.items():
        bad = []
        for r, row in zip(tab["rows"], tab["entries"]):
            for c, entry in zip(tab["cols"], row):
                want = parse_sum(fr, entry)
                got = fr.N[fr.index(r), fr.index(c)].tolist()
                if want != got:
                    bad.append(f"{r}*{c}:printed={entry},computed={fr.format(got)}")
        report.add(suite, name, not bad, ";".join(bad))
    return report


def generator_tables(data: dict) -> dict:
    """Column tables `_ (x) g` as row/col tables."""
    rows = data["rows"]
    return {
        f"x{g}": {"rows": rows, "cols": [g], "entries": [[e] for e in data[g]]}
        for g in data
        if g != "rows"
    }


@dataclass(frozen=True)
class MatrixMatch:
    kind: str  # "exact", "name" or "rows"
    mapping: dict[str, str]

    def describe(self) -> str:
        if self.kind == "exact":
            return "exact"
        pairs = ",".join(f"{a}->{b}" for a, b in self.mapping.items())
        if self.kind == "name":
            return f"printed matrix is the computed one for {pairs}"
        return f"rows/cols relabeled by {pairs}"


def match_matrix(fr: FusionRing, label: str, printed: Sequence[Sequence[int]], movable: Sequence[str]) -> MatrixMatch | None:
    """Compare a printed fusion matrix [j][k] with N[label][j][k].

    Tried in order: exact; the same matrix for another label in `movable`;
    rows and columns permuted within `movable`.
    """
    P = np.asarray(printed, dtype=np.int64)
    i = fr.index(label)
    if np.array_equal(fr.N[i], P):
        return MatrixMatch("exact", {})
    for other in movable:
        if np.array_equal(fr.N[fr.index(other)], P):
            return MatrixMatch("name", {label: other})
    idx = [fr.index(m) for m in movable]
    for perm in itertools.permutations(idx):
        sigma = list(range(fr.rank))
        for a, b in zip(idx, perm):
            sigma[a] = b
        if np.array_equal(fr.N[i][np.ix_(sigma, sigma)], P):
            return MatrixMatch("rows", {fr.labels[a]: fr.labels[sigma[a]] for a in idx if sigma[a] != a})
    return None
