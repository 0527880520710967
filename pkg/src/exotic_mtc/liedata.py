"""Simple Lie algebra data and the arithmetic of quantum group categories.

Roots are written in the simple-root basis, weights in the fundamental-weight
basis (Bourbaki numbering).  The invariant form is normalized so long roots
have squared length 2.  For the category C(g, q, l) with q = e^{pi i/l} the
exponents that actually appear (q-dimensions, twists) use the form scaled by
the lacing number m, i.e. short roots of length 2.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import comb, isqrt
from typing import Iterable, Iterator, Sequence

import mpmath

from .cyclo import CycloNumber, rational, root_of_unity
from .fusion import FusionRing, ring_from_tensor

FAMILIES = "ABCDEFG"
Weight = tuple[int, ...]


def _valid(family: str, rank: int) -> bool:
    return {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 4,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }.get(family, False)


@dataclass(frozen=True)
class SimpleLieType:
    family: str
    rank: int

    def __post_init__(self) -> None:
        if not _valid(self.family, self.rank):
            raise ValueError(f"no simple Lie algebra {self.family}{self.rank}")

    @classmethod
    def parse(cls, text: str) -> SimpleLieType:
        text = text.strip().upper()
        return cls(text[0], int(text[1:]))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    # root system --------------------------------------------------------------

    @cached_property
    def cartan(self) -> tuple[tuple[int, ...], ...]:
        """a_ij = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)."""
        r, f = self.rank, self.family
        A = [[2 if i == j else 0 for j in range(r)] for i in range(r)]

        def link(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
            A[i][j], A[j][i] = aij, aji

        if f in "ABC":
            for i in range(r - 1):
                link(i, i + 1)
            if f == "B":
                link(r - 2, r - 1, -2, -1)
            elif f == "C":
                link(r - 2, r - 1, -1, -2)
        elif f == "D":
            for i in range(r - 2):
                link(i, i + 1)
            link(r - 3, r - 1)
        elif f == "E":
            link(0, 2)
            link(1, 3)
            for i in range(2, r - 1):
                link(i, i + 1)
        elif f == "F":
            link(0, 1)
            link(1, 2, -2, -1)
            link(2, 3)
        elif f == "G":
            link(0, 1, -1, -3)
        return tuple(tuple(row) for row in A)

    @cached_property
    def root_norms(self) -> tuple[Fraction, ...]:
        """(alpha_i, alpha_i), long roots 2."""
        r, f = self.rank, self.family
        if f == "B":
            return tuple(Fraction(2) if i < r - 1 else Fraction(1) for i in range(r))
        if f == "C":
            return tuple(Fraction(1) if i < r - 1 else Fraction(2) for i in range(r))
        if f == "F":
            return (Fraction(2), Fraction(2), Fraction(1), Fraction(1))
        if f == "G":
            return (Fraction(2, 3), Fraction(2))
        return tuple(Fraction(2) for _ in range(r))

    @property
    def lacing(self) -> int:
        """m: 1 for ADE, 2 for B, C, F4, 3 for G2."""
        return {"B": 2, "C": 2, "F": 2, "G": 3}.get(self.family, 1)

    @property
    def positive_roots(self) -> tuple[tuple[int, ...], ...]:
        """Positive roots in simple-root coordinates, by root strings."""
        return _positive_roots(self.cartan)

    def root_norm(self, beta: Sequence[int]) -> Fraction:
        r = self.rank
        return sum((beta[i] * beta[j] * self.root_form(i, j) for i in range(r) for j in range(r)), Fraction(0))

    def root_form(self, i: int, j: int) -> Fraction:
        """(alpha_i, alpha_j)."""
        return self.cartan[i][j] * self.root_norms[j] / 2

    @cached_property
    def highest_root(self) -> tuple[int, ...]:
        return max(self.positive_roots, key=sum)

    @cached_property
    def highest_short_root(self) -> tuple[int, ...]:
        short = [b for b in self.positive_roots if self.root_norm(b) < 2]
        return max(short, key=sum) if short else self.highest_root

    @cached_property
    def comarks(self) -> tuple[Fraction, ...]:
        """a_i^vee with theta^vee = sum a_i^vee alpha_i^vee."""
        return tuple(Fraction(a) * self.root_norms[i] / 2 for i, a in enumerate(self.highest_root))

    @property
    def dual_coxeter(self) -> int:
        return int(1 + sum(self.comarks))

    @property
    def dim(self) -> int:
        return self.rank + 2 * len(self.positive_roots)

    @cached_property
    def weight_lattice_index(self) -> int:
        """M = |P/Q| = det of the Cartan matrix."""
        from .linalg import det

        return int(det([[Fraction(x) for x in row] for row in self.cartan]))

    @cached_property
    def weight_gram(self) -> tuple[tuple[Fraction, ...], ...]:
        """(omega_i, omega_j) = (A^-1)_ji (alpha_i, alpha_i) / 2."""
        from .linalg import inverse

        Ainv = inverse([[Fraction(x) for x in row] for row in self.cartan])
        r = self.rank
        return tuple(tuple(Ainv[j][i] * self.root_norms[i] / 2 for j in range(r)) for i in range(r))

    @cached_property
    def minus_w0(self) -> tuple[int, ...]:
        """The permutation of fundamental weights induced by -w_0."""
        r, f = self.rank, self.family
        perm = list(range(r))
        if f == "A":
            perm = [r - 1 - i for i in range(r)]
        elif f == "D" and r % 2:
            perm[r - 2], perm[r - 1] = r - 1, r - 2
        elif f == "E" and r == 6:
            perm = [5, 1, 4, 3, 2, 0]
        return tuple(perm)

    # classical closed forms, used to cross-check the root system
    def formula_dim(self) -> int:
        r, f = self.rank, self.family
        if f == "A":
            return r * r + 2 * r
        if f in "BC":
            return r * (2 * r + 1)
        if f == "D":
            return r * (2 * r - 1)
        return {"E6": 78, "E7": 133, "E8": 248, "F4": 52, "G2": 14}[f"{f}{r}"]

    def formula_dual_coxeter(self) -> int:
        r, f = self.rank, self.family
        if f in "AC":
            return r + 1
        if f == "B":
            return 2 * r - 1
        if f == "D":
            return 2 * r - 2
        return {"E6": 12, "E7": 18, "E8": 30, "F4": 9, "G2": 4}[f"{f}{r}"]

    def formula_index(self) -> int:
        r, f = self.rank, self.family
        if f == "A":
            return r + 1
        return {"B": 2, "C": 2, "D": 4, "F": 1, "G": 1}.get(f) or {6: 3, 7: 2, 8: 1}[r]

    # weights ------------------------------------------------------------------------

    def fundamental(self, i: int) -> Weight:
        """omega_i, 1-based."""
        return tuple(int(j == i - 1) for j in range(self.rank))

    @property
    def zero(self) -> Weight:
        return (0,) * self.rank

    def form(self, lam: Sequence[Fraction | int], mu: Sequence[Fraction | int]) -> Fraction:
        G = self.weight_gram
        r = self.rank
        return sum((Fraction(lam[i]) * mu[j] * G[i][j] for i in range(r) for j in range(r) if lam[i] and mu[j]), Fraction(0))

    def pair_root(self, lam: Sequence[Fraction | int], beta: Sequence[int]) -> Fraction:
        """(lambda, beta) for beta in root coordinates."""
        return sum((Fraction(lam[i]) * beta[i] * self.root_norms[i] / 2 for i in range(self.rank)), Fraction(0))

    def rho(self) -> Weight:
        return (1,) * self.rank

    def weyl_dim(self, lam: Sequence[int]) -> int:
        num = den = Fraction(1)
        lr = [x + 1 for x in lam]
        rho = self.rho()
        for beta in self.positive_roots:
            num *= self.pair_root(lr, beta)
            den *= self.pair_root(rho, beta)
        out = num / den
        assert out.denominator == 1
        return int(out)

    def dual_weight(self, lam: Sequence[int]) -> Weight:
        perm = self.minus_w0
        out = [0] * self.rank
        for i, x in enumerate(lam):
            out[perm[i]] = x
        return tuple(out)


@lru_cache(maxsize=None)
def _positive_roots(A: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    r = len(A)
    # root -> its pairings <beta, alpha_i^vee>, carried along so no sums are redone
    found: dict[tuple[int, ...], list[int]] = {}
    for i in range(r):
        found[tuple(int(i == j) for j in range(r))] = list(A[i])
    layer = list(found)
    while layer:
        nxt = []
        for beta in layer:
            pairing = found[beta]
            for i in range(r):
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in found:
                        p += 1
                    else:
                        break
                if p - pairing[i] > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found[up] = [x + y for x, y in zip(pairing, A[i])]
                        nxt.append(up)
        layer = nxt
    return tuple(sorted(found, key=lambda b: (sum(b), b)))


# WZW / level data -------------------------------------------------------------------


def level_from_ell(g: SimpleLieType, ell: int) -> int | None:
    m = g.lacing
    if ell % m:
        return None
    return ell // m - g.dual_coxeter


def ell_from_level(g: SimpleLieType, k: int) -> int:
    return g.lacing * (k + g.dual_coxeter)


def wzw_central_charge(g: SimpleLieType, k: int) -> Fraction:
    if k < 1:
        raise ValueError("level must be positive")
    return Fraction(k * g.dim, k + g.dual_coxeter)


def _types_up_to(rmax: int) -> Iterator[SimpleLieType]:
    for f in FAMILIES:
        for r in range(1, rmax + 1):
            if _valid(f, r):
                yield SimpleLieType(f, r)


def solve_central_charge(c: Fraction | int, rmax: int = 100, kmax: int = 10**6) -> list[tuple[SimpleLieType, int]]:
    """All (g, k) with k dim g / (k + h) = c.

    Solving for k gives k = c h / (dim g - c), so every type needs one test.
    Types are built from closed forms here; the root system is not needed.
    """
    c = Fraction(c)
    out = []
    for f in FAMILIES:
        for r in range(1, rmax + 1):
            if not _valid(f, r):
                continue
            g = _LightType(f, r)
            if g.dim <= c:
                continue
            k = c * g.h / (g.dim - c)
            if k.denominator == 1 and 1 <= k <= kmax:
                out.append((SimpleLieType(f, r), int(k)))
    return out


@dataclass(frozen=True)
class _LightType:
    family: str
    rank: int

    @property
    def dim(self) -> int:
        return SimpleLieType.formula_dim(self)  # type: ignore[arg-type]

    @property
    def h(self) -> int:
        return SimpleLieType.formula_dual_coxeter(self)  # type: ignore[arg-type]


def solve_c24(rmax: int = 100, kmax: int = 10**6) -> list[tuple[SimpleLieType, int]]:
    return solve_central_charge(24, rmax, kmax)


# alcoves and ranks ------------------------------------------------------------------


def _bounded(weights: Sequence[Fraction], bound: Fraction) -> Iterator[Weight]:
    """Nonnegative integer vectors with sum w_i x_i <= bound (w_i > 0)."""
    r = len(weights)

    def rec(i: int, left: Fraction, acc: list[int]) -> Iterator[Weight]:
        if i == r:
            yield tuple(acc)
            return
        x = 0
        while x * weights[i] <= left:
            acc.append(x)
            yield from rec(i + 1, left - x * weights[i], acc)
            acc.pop()
            x += 1

    yield from rec(0, bound, [])


def alcove(g: SimpleLieType, ell: int) -> list[Weight]:
    """Labels C_l of C(g, q, l), q = e^{pi i / l}.

    If m | l these are the level k = l/m - h weights (comark sum <= k);
    otherwise the weights with (lambda + rho, theta_s) < l, the form scaled so
    short roots have length 2 and theta_s the highest short root.
    """
    k = level_from_ell(g, ell)
    if k is not None:
        if k < 0:
            raise ValueError(f"l={ell} is below m*h for {g}")
        return list(_bounded(g.comarks, Fraction(k)))
    m = g.lacing
    ts = g.highest_short_root
    coeff = [m * ts[i] * g.root_norms[i] / 2 for i in range(g.rank)]
    bound = ell - sum(coeff) - Fraction(1, 10**9)
    if bound < 0:
        raise ValueError(f"l={ell} is too small for {g}")
    # strict inequality: (lambda, theta_s) < l - (rho, theta_s)
    return [w for w in _bounded(coeff, bound) if sum(c * x for c, x in zip(coeff, w)) < ell - sum(coeff)]


def alcove_count(g: SimpleLieType, k: int) -> int:
    """|C_l| at level k by counting solutions of sum a_i^vee lambda_i <= k."""
    weights = [int(a) for a in g.comarks]
    ways = [0] * (k + 1)
    ways[0] = 1
    for w in weights:
        for s in range(w, k + 1):
            ways[s] += ways[s - w]
    return sum(ways)


def _series(factors: Iterable[tuple[int, int]], k: int) -> int:
    """Coefficient of x^k in prod 1/(1 - x^a)^e."""
    coeffs = [1] + [0] * k
    for a, e in factors:
        for _ in range(e):
            for s in range(a, k + 1):
                coeffs[s] += coeffs[s - a]
    return coeffs[k]


def generating_function_rank(g: SimpleLieType, k: int) -> int | None:
    """The closed generating functions available for A_r, D_r and E_6."""
    r = g.rank
    if g.family == "A":
        return comb(r + k, k)
    if g.family == "D":
        return _series([(1, 4), (2, r - 3)], k)
    if g.family == "E" and r == 6:
        return _series([(1, 3), (2, 3), (3, 1)], k)
    return None


def rank_count(g: SimpleLieType, ell: int) -> int:
    k = level_from_ell(g, ell)
    if k is None:
        return len(alcove(g, ell))
    if k < 0:
        raise ValueError(f"l={ell} is below m*h for {g}")
    return alcove_count(g, k)


def a_type_rank_solutions(target: int) -> list[tuple[int, int]]:
    """(r, k) with binom(r + k, k) = target, r, k >= 1."""
    out = []
    for r in range(1, target + 1):
        for k in range(1, target + 1):
            v = comb(r + k, k)
            if v == target:
                out.append((r, k))
            if v > target:
                break
    return out


@dataclass(frozen=True)
class DualityProfile:
    self_dual: int
    pairs: int

    @property
    def all_self_dual(self) -> bool:
        return self.pairs == 0


def self_dual_profile(g: SimpleLieType, k: int) -> DualityProfile:
    labels = alcove(g, ell_from_level(g, k))
    fixed = sum(1 for w in labels if g.dual_weight(w) == w)
    return DualityProfile(fixed, (len(labels) - fixed) // 2)


def categories_of_rank(target: int, rmax: int = 40) -> list[tuple[SimpleLieType, int]]:
    """All (g, k), k >= 1, with exactly `target` simple objects (m | l)."""
    out = []
    for g in _types_up_to(rmax):
        k = 1
        while True:
            n = alcove_count(g, k)
            if n == target:
                out.append((g, k))
            if n >= target:
                break
            k += 1
    return out


def self_dual_of_rank(target: int, rmax: int = 40) -> list[tuple[SimpleLieType, int]]:
    return [(g, k) for g, k in categories_of_rank(target, rmax) if self_dual_profile(g, k).all_self_dual]


# q-arithmetic -------------------------------------------------------------------------


def qnumber(n: int | Fraction, ell: int) -> CycloNumber:
    """[n] = (q^n - q^-n)/(q - q^-1), q = e^{pi i / ell}."""
    n = Fraction(n)
    if n.denominator != 1:
        raise ValueError("q-numbers need integer arguments here")
    return _qnumber(int(n), ell)


@lru_cache(maxsize=4096)
def _qnumber(n: int, ell: int) -> CycloNumber:
    q = root_of_unity(2 * ell, 1)
    return (q**n - q ** (-n)) / (q - q**-1)


def qnumber_dim(g: SimpleLieType, ell: int, lam: Sequence[int]) -> CycloNumber:
    """Quantum Weyl dimension prod_{alpha > 0} [m(lambda+rho, alpha)] / [m(rho, alpha)]."""
    # m (alpha_i, alpha_i) / 2 is an integer, so every pairing below is too
    w = [int(g.lacing * n / 2) for n in g.root_norms]
    lr = [(x + 1) * wi for x, wi in zip(lam, w)]
    num: Counter[int] = Counter()
    den: Counter[int] = Counter()
    for beta in g.positive_roots:
        num[sum(c * x for c, x in zip(beta, lr) if c)] += 1
        den[sum(c * x for c, x in zip(beta, w) if c)] += 1
    top, bottom = num - den, den - num
    out = rational(1)
    for a, e in top.items():
        out = out * qnumber(a, ell) ** e
    div = rational(1)
    for b, e in bottom.items():
        div = div * qnumber(b, ell) ** e
    if div.is_zero():
        raise ZeroDivisionError(f"a denominator q-number vanishes at l={ell}")
    return out / div


def casimir_pairing(g: SimpleLieType, lam: Sequence[int]) -> Fraction:
    """(lambda, lambda + 2 rho) with long roots of length 2."""
    two_rho = [2] * g.rank
    return g.form(lam, [x + y for x, y in zip(lam, two_rho)])


def twist_exponent(g: SimpleLieType, ell: int, lam: Sequence[int]) -> Fraction:
    """r with theta_lambda = q^{m (lambda, lambda + 2 rho)} = exp(2 pi i r)."""
    return (g.lacing * casimir_pairing(g, lam) / (2 * ell)) % 1


def twist(g: SimpleLieType, ell: int, lam: Sequence[int]) -> CycloNumber:
    r = twist_exponent(g, ell, lam)
    return root_of_unity(r.denominator, r.numerator)


def twist_orders(g: SimpleLieType, ell: int) -> list[int]:
    return [twist_exponent(g, ell, w).denominator for w in alcove(g, ell)]


# embeddings, cosets, orbifolds -----------------------------------------------------------


def dynkin_ratio(g: SimpleLieType, lam: Sequence[int]) -> Fraction:
    """chi_lambda = dim(lambda) (lambda, lambda + 2 rho) / (2 dim g)."""
    return Fraction(g.weyl_dim(lam)) * casimir_pairing(g, lam) / (2 * g.dim)


def dynkin_index(g: SimpleLieType, lam: Sequence[int], p: SimpleLieType, branching: Sequence[Sequence[int]]) -> Fraction:
    """Embedding index from one branching rule lambda -> sum of mu."""
    return sum((dynkin_ratio(p, mu) for mu in branching), Fraction(0)) / dynkin_ratio(g, lam)


def coset_central_charge(g: SimpleLieType, k: int, p: SimpleLieType, chi: int | Fraction) -> Fraction:
    kp = Fraction(chi) * k
    return wzw_central_charge(g, k) - kp * p.dim / (kp + p.dual_coxeter)


def coset_twist_ratio(g: SimpleLieType, ell_g: int, lam: Sequence[int], p: SimpleLieType, ell_p: int, mu: Sequence[int]) -> Fraction:
    """Exponent r of theta_lambda / theta_mu = exp(2 pi i r)."""
    return (twist_exponent(g, ell_g, lam) - twist_exponent(p, ell_p, mu)) % 1


def excluded_by_twist_order(r: Fraction, orders: Iterable[int] = (12, 39)) -> bool:
    """True if exp(2 pi i r) is not an n-th root of unity for any listed n."""
    return all(n % Fraction(r).denominator for n in orders)


@dataclass(frozen=True)
class OrbifoldBound:
    lower: float
    targets: dict
    exceeds_all: bool


def orbifold_bound(D_original: float | CycloNumber, group_order: int, targets: dict[str, float] | None = None) -> OrbifoldBound:
    """An orbifold by a group of order n has total quantum order >= n D."""
    if group_order < 1:
        raise ValueError("group order must be positive")
    D = float(D_original.approx().real) if isinstance(D_original, CycloNumber) else float(D_original)
    lower = group_order * D
    targets = targets if targets is not None else default_targets()
    return OrbifoldBound(lower, dict(targets), all(lower > t for t in targets.values()))


def default_targets() -> dict[str, float]:
    s3, s13 = mpmath.sqrt(3), mpmath.sqrt(13)
    return {"z_e6": float(6 + 2 * s3), "z_haagerup": float((39 + 9 * s13) / 2)}


def min_total_order_from_rank(rank: int) -> float:
    """Every d_i >= 1, so D >= sqrt(rank)."""
    return float(mpmath.sqrt(rank))


def global_dim_squared(g: SimpleLieType, k: int) -> CycloNumber:
    """Sum of squared q-dimensions of C(g, q, l) at level k, exactly."""
    ell = ell_from_level(g, k)
    total = rational(0)
    for w in alcove(g, ell):
        d = qnumber_dim(g, ell, w)
        total = total + d * d
    return total


def multiple_excluded(candidate_d2: CycloNumber, target_d2: CycloNumber) -> bool:
    """True if no integer N >= 1 has N^2 * candidate = target."""
    ratio = target_d2 / candidate_d2
    if not ratio.is_rational():
        return True
    r = ratio.rational()
    if r.denominator != 1 or r < 1:
        return True
    return isqrt_exact(int(r)) is None


@dataclass(frozen=True)
class OrbifoldScreen:
    g: SimpleLieType
    k: int
    rank: int
    method: str  # "exact" or "bound"
    excluded: bool
    detail: str


def orbifold_screen(g: SimpleLieType, k: int, targets: dict[str, CycloNumber], exact_rank_limit: int = 40) -> OrbifoldScreen:
    """Can C(g, k) have an orbifold with one of the target global dimensions?"""
    n = alcove_count(g, k)
    if n <= exact_rank_limit:
        d2 = global_dim_squared(g, k)
        ok = all(multiple_excluded(d2, t) for t in targets.values())
        return OrbifoldScreen(g, k, n, "exact", ok, f"D^2={d2}")
    b = orbifold_bound(min_total_order_from_rank(n), 2, {name: float(mpmath.sqrt(t.approx().real)) for name, t in targets.items()})
    return OrbifoldScreen(g, k, n, "bound", b.exceeds_all, f"D>={b.lower:.1f}")


def pointed_global_dim(g: SimpleLieType) -> int | None:
    """D^2 at level 1 when all simples are invertible (ranks equal to M)."""
    n = alcove_count(g, 1)
    return n if n == g.weight_lattice_index else None


# A1 fusion --------------------------------------------------------------------------


def a1_fusion_ring(k: int) -> FusionRing:
    """Truncated Clebsch-Gordan rules on labels 0..k."""
    if k < 1:
        raise ValueError("level must be positive")
    import numpy as np

    n = k + 1
    N = np.zeros((n, n, n), dtype=np.int64)
    for a, b, c in itertools.product(range(n), repeat=3):
        if abs(a - b) <= c <= min(a + b, 2 * k - a - b) and (a + b + c) % 2 == 0:
            N[a, b, c] = 1
    return ring_from_tensor([str(i) for i in range(n)], N)


def isqrt_exact(n: int) -> int | None:
    s = isqrt(n)
    return s if s * s == n else None
