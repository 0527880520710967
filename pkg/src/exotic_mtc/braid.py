"""Braid group diagnostics computed from twists and fusion rules.

Eigenvalues are stored as exponents r in Q/Z standing for exp(2 pi i r).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .cyclo import CycloNumber, root_of_unity
from .fusion import FusionRing, hom_dimension
from .moddata import ModularData

INFINITE = "infinite image (LRW criterion)"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class EigenvalueMultiset:
    exponents: tuple[Fraction, ...]

    @classmethod
    def of(cls, values: Iterable[Fraction | int]) -> EigenvalueMultiset:
        return cls(tuple(sorted(Fraction(v) % 1 for v in values)))

    @classmethod
    def from_numbers(cls, values: Iterable[CycloNumber]) -> EigenvalueMultiset:
        out = []
        for v in values:
            r = v.as_root_of_unity()
            if r is None:
                raise ValueError(f"{v} is not a root of unity")
            out.append(r)
        return cls.of(out)

    def __len__(self) -> int:
        return len(self.exponents)

    def counts(self) -> Counter:
        return Counter(self.exponents)

    def distinct(self) -> bool:
        return len(set(self.exponents)) == len(self.exponents)

    def conj(self) -> EigenvalueMultiset:
        return EigenvalueMultiset.of(-r for r in self.exponents)

    def scaled(self, r: Fraction) -> EigenvalueMultiset:
        return EigenvalueMultiset.of(e + r for e in self.exponents)

    def squared(self) -> EigenvalueMultiset:
        return EigenvalueMultiset.of(2 * e for e in self.exponents)

    def numbers(self) -> list[CycloNumber]:
        return [root_of_unity(r.denominator, r.numerator) for r in self.exponents]

    def __str__(self) -> str:
        return "{" + ", ".join(f"e(2pi i {r})" for r in self.exponents) + "}"


def _twist_exponent(md: ModularData, i: int) -> Fraction:
    r = md.t_diag[i].as_root_of_unity()
    if r is None:
        raise ValueError(f"twist of {md.labels[i]} is not a root of unity")
    return r


def squared_braid_eigs(md: ModularData, fr: FusionRing, X: int, target: int) -> EigenvalueMultiset:
    """Eigenvalues of c_{X,X}^2 on Hom(target, X^3), as theta_Z / theta_X^2."""
    tX = _twist_exponent(md, X)
    out = []
    for Z in range(fr.rank):
        mult = int(fr.N[X, X, Z]) * hom_dimension(fr, target, [Z, X])
        out += [_twist_exponent(md, Z) - 2 * tX] * mult
    return EigenvalueMultiset.of(out)


def projective_order(e: EigenvalueMultiset) -> int:
    """Least m >= 1 with all e_i^m equal."""
    if not e.exponents:
        raise ValueError("empty multiset")
    base = e.exponents[0]
    return lcm(1, *((r - base).denominator for r in e.exponents))


def tw_irreducibility(md: ModularData, fr: FusionRing, X: int, eigenvalues: EigenvalueMultiset | None = None) -> bool | None:
    """Sufficient criterion for B_3 to act irreducibly on Hom(X, X^3).

    Needs X self-dual, X (x) X multiplicity free with d >= 2 summands, and d
    distinct eigenvalues of c_{X,X}.  Without explicit eigenvalues they are
    known only up to sign: distinct squares still decide the question,
    repeated squares leave it undetermined (None).
    """
    if fr.dual[X] != X:
        raise ValueError("criterion needs a self-dual object")
    summands = fr.product(X, X)
    if len(summands) < 2:
        return False
    if any(m != 1 for m in summands.values()):
        return False
    if eigenvalues is not None:
        return len(eigenvalues) == len(summands) and eigenvalues.distinct()
    tX = _twist_exponent(md, X)
    squares = EigenvalueMultiset.of(_twist_exponent(md, Z) - 2 * tX for Z in summands)
    return True if squares.distinct() else None


def density_advisory(dimension: int, proj_order: int, irreducible: bool | None) -> str:
    """Advisory only: the density theorem's hypotheses are not all checked here."""
    if irreducible is True and dimension >= 2 and proj_order not in (1, 2, 3, 4, 6):
        return INFINITE
    return INCONCLUSIVE


def multiset_match(computed: EigenvalueMultiset, printed: EigenvalueMultiset) -> str | None:
    """'direct', 'conjugate' or None."""
    if computed == printed:
        return "direct"
    if computed.conj() == printed:
        return "conjugate"
    return None


def gamma_list(scale: int, gamma_powers: Sequence[int], third_powers: Sequence[int] = ()) -> EigenvalueMultiset:
    """gamma^scale * {gamma^k ...} u {gamma^scale * e^{2 pi i j/3} ...} with gamma = e^{2 pi i/13}."""
    base = Fraction(scale, 13)
    vals = [base + Fraction(k, 13) for k in gamma_powers] + [base + Fraction(j, 3) for j in third_powers]
    return EigenvalueMultiset.of(vals)
