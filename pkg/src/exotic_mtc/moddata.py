"""Modular data (S, T) with exact axiom checks.

Everything is phrased in terms of the unnormalized matrix s~ (first row the
quantum dimensions), so the global dimension D never has to be adjoined:
unitarity reads s~ s~^dagger = D^2 I, and the modular relation reads
(s~ T)^3 = D_+ s~^2 with D_+ = sum_i theta_i d_i^2.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any, Sequence

from .cyclo import CycloNumber, parse_literal, rational, root_of_unity, to_literal
from .cyclomat import CycloMatrix
from .report import Report

BUNDLED = {"z_e6": "data/z_e6.json", "z_haagerup": "data/z_haagerup.json"}


class ModularDataError(ValueError):
    """Malformed or unusable modular data input."""


@dataclass(frozen=True, eq=False)
class ModularData:
    labels: tuple[str, ...]
    conductor: int
    s_unnormalized: tuple[tuple[CycloNumber, ...], ...]
    t_diag: tuple[CycloNumber, ...]
    d_total: CycloNumber | None = None
    aux: dict = field(default_factory=dict)

    @property
    def rank(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown label {label!r}") from None

    def s(self, i: int, j: int) -> CycloNumber:
        return self.s_unnormalized[i][j]

    @property
    def S(self) -> CycloMatrix:
        m = self.__dict__.get("_S")
        if m is None:
            m = CycloMatrix.from_entries(self.s_unnormalized, self.conductor)
            object.__setattr__(self, "_S", m)
        return m

    @property
    def T(self) -> CycloMatrix:
        m = self.__dict__.get("_T")
        if m is None:
            m = CycloMatrix.diagonal(self.t_diag, self.conductor)
            object.__setattr__(self, "_T", m)
        return m

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ModularData):
            return NotImplemented
        return (
            self.labels == other.labels
            and self.s_unnormalized == other.s_unnormalized
            and self.t_diag == other.t_diag
            and self.d_total == other.d_total
        )

    __hash__ = None  # type: ignore[assignment]


# serialization -----------------------------------------------------------


def from_dict(raw: Any) -> ModularData:
    if not isinstance(raw, dict):
        raise ModularDataError("top-level JSON value must be an object")
    try:
        N = int(raw["conductor"])
        labels = tuple(str(x) for x in raw["labels"])
        rows = raw["s_unnormalized"]
        tvals = raw["t_diag"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ModularDataError(f"missing or invalid field: {exc}") from exc
    if N < 1:
        raise ModularDataError("conductor must be positive")
    n = len(labels)
    if n == 0 or len(set(labels)) != n:
        raise ModularDataError("labels must be non-empty and unique")
    if not isinstance(rows, list) or len(rows) != n or any(not isinstance(r, list) or len(r) != n for r in rows):
        raise ModularDataError(f"s_unnormalized must be a {n}x{n} matrix")
    if not isinstance(tvals, list) or len(tvals) != n:
        raise ModularDataError(f"t_diag must have {n} entries")
    try:
        S = tuple(tuple(_lit(v, N) for v in row) for row in rows)
        T = tuple(_lit(v, N) for v in tvals)
        D = _lit(raw["d_total"], N) if raw.get("d_total") is not None else None
    except (TypeError, ValueError, IndexError, ZeroDivisionError) as exc:
        raise ModularDataError(f"bad cyclotomic literal: {exc}") from exc
    for j in range(n):
        d = S[0][j]
        if d != d.conj() or float(d.approx().real) <= 0:
            raise ModularDataError(f"s_unnormalized[0][{j}] is not real positive")
    return ModularData(labels, N, S, T, D, dict(raw.get("aux", {})))


def _lit(value: Any, N: int) -> CycloNumber:
    x = parse_literal(value, N)
    if N % x.conductor:
        raise ValueError(f"literal {value!r} does not live in Q(zeta_{N})")
    return x


def to_dict(md: ModularData) -> dict:
    N = md.conductor
    out: dict[str, Any] = {
        "conductor": N,
        "labels": list(md.labels),
        "s_unnormalized": [[to_literal(x, N) for x in row] for row in md.s_unnormalized],
        "t_diag": [to_literal(x, N) for x in md.t_diag],
    }
    if md.d_total is not None:
        out["d_total"] = to_literal(md.d_total, N)
    if md.aux:
        out["aux"] = md.aux
    return out


def loads(text: str) -> ModularData:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModularDataError(f"invalid JSON: {exc}") from exc
    return from_dict(raw)


def load(path: str | Path) -> ModularData:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ModularDataError(str(exc)) from exc
    return loads(text)


def bundled(name: str) -> ModularData:
    """``z_e6`` or ``z_haagerup``."""
    return loads(resources.files("exotic_mtc").joinpath(BUNDLED[name]).read_text())


def save(md: ModularData, path: str | Path) -> None:
    Path(path).write_text(json.dumps(to_dict(md), indent=1) + "\n")


def trivial() -> ModularData:
    one = rational(1)
    return ModularData(("1",), 1, ((one,),), (one,), one)


def from_matrices(labels: Sequence[str], s: Sequence[Sequence[CycloNumber]], t: Sequence[CycloNumber], d_total: CycloNumber | None = None) -> ModularData:
    cells = [x for row in s for x in row] + list(t) + ([d_total] if d_total is not None else [])
    N = 1
    for x in cells:
        N = N * x.conductor // _gcd(N, x.conductor)
    S = tuple(tuple(x.embed(N) for x in row) for row in s)
    return ModularData(tuple(labels), N, S, tuple(x.embed(N) for x in t), None if d_total is None else d_total.embed(N))


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


# derived quantities ----------------------------------------------------------


def quantum_dims(md: ModularData) -> list[CycloNumber]:
    return list(md.s_unnormalized[0])


def global_dimension(md: ModularData) -> CycloNumber:
    """D^2 = sum of d_i^2."""
    total = rational(0)
    for d in quantum_dims(md):
        total = total + d * d
    return total


def gauss_sum(md: ModularData) -> CycloNumber:
    """D_+ = sum theta_i d_i^2."""
    total = rational(0)
    for th, d in zip(md.t_diag, quantum_dims(md)):
        total = total + th * d * d
    return total


def total_quantum_order(md: ModularData) -> CycloNumber | None:
    """The positive square root D of D^2, or None if no cyclotomic one exists.

    D_+ has absolute value D and D_+/D = exp(pi i c/4), so D = D_+ * zeta^-k
    for a root of unity zeta.  The ambient field is tried first, keeping the
    conductor minimal; the 8th roots needed for odd c come after.
    """
    D2 = global_dimension(md)
    if md.d_total is not None and md.d_total * md.d_total == D2 and md.d_total.approx().real > 0:
        return md.d_total
    Dp = gauss_sum(md)
    if Dp.is_zero():
        return None
    n = Dp.conductor
    for m in dict.fromkeys((n, n * 8 // _gcd(n, 8), n * 16 // _gcd(n, 16))):
        # the roots of unity of Q(zeta_m) are +-zeta_m^k
        for k in range(m):
            for sign in (1, -1):
                cand = Dp * root_of_unity(m, -k) * sign
                if cand == cand.conj() and cand * cand == D2 and cand.approx().real > 0:
                    return cand
    return None


def central_charge(md: ModularData) -> Fraction:
    """c mod 8 with D_+/D = exp(pi i c / 4)."""
    Dp = gauss_sum(md)
    D = total_quantum_order(md)
    if D is not None:
        r = (Dp / D).as_root_of_unity()
        if r is None:
            raise ModularDataError("D_+/D is not a root of unity")
        return (8 * r) % 8
    # D outside the field: fix the square class exactly, the sign numerically
    r2 = (Dp * Dp / global_dimension(md)).as_root_of_unity()
    if r2 is None:
        raise ModularDataError("D_+^2/D^2 is not a root of unity")
    import mpmath

    phase = Dp.approx() / mpmath.sqrt(global_dimension(md).approx().real)
    best = min((r2 / 2, r2 / 2 + Fraction(1, 2)), key=lambda r: abs(phase - mpmath.expjpi(2 * mpmath.mpf(r.numerator) / r.denominator)))
    return (8 * best) % 8


@dataclass(frozen=True)
class Duality:
    perm: tuple[int, ...]
    self_dual: int
    pairs: tuple[tuple[int, int], ...]


def charge_conjugation(md: ModularData) -> Duality:
    """C = S^2 = s~^2 / D^2 as a permutation."""
    D2 = global_dimension(md)
    sq = md.S @ md.S
    n = md.rank
    perm = []
    for i in range(n):
        hits = [j for j in range(n) if not sq[i, j].is_zero()]
        if len(hits) != 1 or sq[i, hits[0]] != D2:
            raise ModularDataError(f"S^2 is not a permutation matrix (row {md.labels[i]})")
        perm.append(hits[0])
    pairs = tuple((i, j) for i, j in enumerate(perm) if i < j)
    return Duality(tuple(perm), sum(1 for i, j in enumerate(perm) if i == j), pairs)


def twist_orders(md: ModularData) -> list[int | None]:
    out = []
    for th in md.t_diag:
        r = th.as_root_of_unity()
        out.append(None if r is None else r.denominator)
    return out


# axioms ------------------------------------------------------------------------


def validate(md: ModularData, report: Report | None = None) -> Report:
    report = report if report is not None else Report()
    n = md.rank
    S, T = md.S, md.T
    L = md.labels
    D2 = global_dimension(md)

    asym = next(((i, j) for i in range(n) for j in range(i + 1, n) if md.s(i, j) != md.s(j, i)), None)
    report.add("AXIOM", "s-symmetric", asym is None, "" if asym is None else f"{L[asym[0]]},{L[asym[1]]}")

    dims = quantum_dims(md)
    report.add("AXIOM", "unit-row-positive", all(d == d.conj() and d.approx().real > 0 for d in dims) and dims[0] == 1)

    bad_t = [L[i] for i, o in enumerate(twist_orders(md)) if o is None]
    report.add("AXIOM", "twists-roots-of-unity", not bad_t and md.t_diag[0] == 1, ",".join(bad_t))

    U = S @ S.dagger()
    target = CycloMatrix.identity(n, md.conductor).scale(D2)
    report.add("AXIOM", "s-unitary", U == target, _witness(U, target, L))

    try:
        dual = charge_conjugation(md)
        perm = dual.perm
        ok = perm[0] == 0 and all(perm[perm[i]] == i for i in range(n))
        report.add("AXIOM", "s-squared-charge-conjugation", ok, "" if ok else f"perm={perm}")
    except ModularDataError as exc:
        report.add("AXIOM", "s-squared-charge-conjugation", False, str(exc))

    Dp = gauss_sum(md)
    ST = S @ T
    lhs = ST @ ST @ ST
    rhs = (S @ S).scale(Dp)
    report.add("AXIOM", "modular-relation", lhs == rhs, _witness(lhs, rhs, L))

    D = total_quantum_order(md)
    if md.d_total is not None:
        ok = md.d_total * md.d_total == D2 and md.d_total.approx().real > 0
        report.add("AXIOM", "total-quantum-order", ok, f"D~{float(md.d_total.approx().real):.6f}")
    else:
        report.add("AXIOM", "total-quantum-order", D is not None or None, "D not in the field" if D is None else "")

    if "x_polynomial" in md.aux:
        _check_x_values(md, report)
    return report


def _witness(A: CycloMatrix, B: CycloMatrix, labels: Sequence[str]) -> str:
    if A == B:
        return ""
    r, c = A.shape
    for i in range(r):
        for j in range(c):
            if A[i, j] != B[i, j]:
                return f"entry ({labels[i]},{labels[j]})"
    return ""


def _check_x_values(md: ModularData, report: Report) -> None:
    coeffs = md.aux["x_polynomial"]
    xs = [parse_literal(v, md.conductor) for v in md.aux["x"]]
    roots_ok = True
    for x in xs:
        acc = rational(0)
        for c in reversed(coeffs):
            acc = acc * x + c
        roots_ok = roots_ok and acc.is_zero()
    report.add("AXIOM", "x-values-polynomial-roots", roots_ok)
    printed = md.aux.get("x_printed")
    if printed:
        err = max(abs(float(x.approx().real) - float(p)) for x, p in zip(xs, printed))
        report.add("AXIOM", "x-values-match-printed", err < 1e-6, f"maxerr={err:.2e}")
