"""The SL(2,Z) image generated by the normalized S and T.

Finiteness is certified two ways: by exact relations (including a PSL(2,Z/N)
presentation) and by enumerating the matrix group itself.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import lcm
from typing import Sequence

from .cyclomat import CycloMatrix
from .moddata import ModularData, ModularDataError, total_quantum_order
from .report import Report

Word = Sequence[tuple[str, int]]


@dataclass(frozen=True)
class MatrixRep:
    S: CycloMatrix
    T: CycloMatrix

    @property
    def dimension(self) -> int:
        return self.S.shape[0]

    @property
    def conductor(self) -> int:
        return self.S.n

    def identity(self) -> CycloMatrix:
        return CycloMatrix.identity(self.dimension, self.S.n)

    def inverse(self, g: CycloMatrix) -> CycloMatrix:
        # S and T are unitary, so is everything they generate
        return g.dagger()


def from_moddata(md: ModularData) -> MatrixRep:
    D = total_quantum_order(md)
    if D is None:
        raise ModularDataError("normalized S needs D inside the field")
    n = lcm(md.conductor, D.conductor)
    return MatrixRep(md.S.scale(D.inverse()).embed(n), md.T.embed(n))


def power(rep: MatrixRep, g: CycloMatrix, e: int) -> CycloMatrix:
    if e < 0:
        g, e = rep.inverse(g), -e
    out = rep.identity()
    base = g
    while e:
        if e & 1:
            out = out @ base
        e >>= 1
        if e:
            base = base @ base
    return out


def eval_word(rep: MatrixRep, word: Word) -> CycloMatrix:
    out = rep.identity()
    gens = {"S": rep.S, "T": rep.T}
    for name, e in word:
        if e == 0:
            raise ValueError("word exponents must be nonzero")
        out = out @ power(rep, gens[name], e)
    return out


def parse_word(text: str) -> list[tuple[str, int]]:
    """'S T^-1 S^2' -> [('S', 1), ('T', -1), ('S', 2)]."""
    out = []
    for tok in text.split():
        name, _, exp = tok.partition("^")
        if name not in ("S", "T"):
            raise ValueError(f"unknown generator {name!r}")
        out.append((name, int(exp) if exp else 1))
    return out


def conj(rep: MatrixRep, g: CycloMatrix, h: CycloMatrix) -> CycloMatrix:
    """g^h = h g h^-1."""
    return h @ g @ rep.inverse(h)


def verify_e6_relation_suite(rep: MatrixRep, report: Report | None = None) -> Report:
    report = report if report is not None else Report()
    S, T = rep.S, rep.T
    I = rep.identity()
    suite = "SL2Z"
    report.add(suite, "S^4=I", power(rep, S, 4) == I)
    report.add(suite, "T^12=I", power(rep, T, 12) == I)
    ST = S @ T
    report.add(suite, "(ST)^3=S^2", ST @ ST @ ST == S @ S)
    X = power(rep, T, 4) @ S @ power(rep, T, 6) @ S
    report.add(suite, "(T^4ST^6S)^6=I", power(rep, X, 6) == I)
    A = X @ X
    report.add(suite, "A-diagonal", A.is_diagonal())
    report.add(suite, "A-order-3", A != I and power(rep, A, 3) == I)
    B = conj(rep, A, S)
    C = conj(rep, B, T)
    D = conj(rep, C, S)
    named = {"A": A, "B": B, "C": C, "D": D}
    action = [("A", "T", "A"), ("A", "S", "B"), ("B", "T", "C"), ("B", "S", "A"),
              ("C", "T", "D"), ("C", "S", "D"), ("D", "T", "B"), ("D", "S", "C")]
    gens = {"S": S, "T": T, **named}
    for g, h, want in action:
        report.add(suite, f"{g}^{h}={want}", conj(rep, named[g], gens[h]) == named[want])
    report.add(suite, "A^3=I", power(rep, A, 3) == I)
    for g, h, want in [("B", "A", "D"), ("C", "A", "B"), ("D", "A", "C"), ("D", "B", "A")]:
        report.add(suite, f"{g}^{h}={want}", conj(rep, named[g], named[h]) == named[want])
    return report


def psl2_presentation_check(rep: MatrixRep, N: int, report: Report | None = None) -> Report:
    """Relations (AB)^3 = A^2 = B^N = (B^4 A B^((N+1)/2) A)^2 = I with A=S, B=T."""
    if N % 2 == 0:
        raise ValueError("N must be odd")
    report = report if report is not None else Report()
    A, B = rep.S, rep.T
    I = rep.identity()
    AB = A @ B
    report.add("PSL2", "(AB)^3=I", AB @ AB @ AB == I)
    report.add("PSL2", "A^2=I", A @ A == I)
    report.add("PSL2", f"B^{N}=I", power(rep, B, N) == I)
    W = power(rep, B, 4) @ A @ power(rep, B, (N + 1) // 2) @ A
    report.add("PSL2", f"(B^4AB^{(N + 1) // 2}A)^2=I", W @ W == I)
    return report


class CapExceeded(RuntimeError):
    pass


def closure_order(rep: MatrixRep, cap: int = 40000, strategy: str = "bfs") -> int:
    """|<S, T>| by exhaustive enumeration with exact canonical keys.

    ``bfs`` grows words by right multiplication from a queue; ``dfs`` uses a
    stack and left multiplication.  Both must give the same order.
    """
    gens = [rep.S, rep.T]
    start = rep.identity()
    seen = {start.key()}
    todo: deque[CycloMatrix] = deque([start])
    while todo:
        g = todo.popleft() if strategy == "bfs" else todo.pop()
        for s in gens:
            h = g @ s if strategy == "bfs" else s @ g
            k = h.key()
            if k not in seen:
                seen.add(k)
                if len(seen) > cap:
                    raise CapExceeded(f"more than {cap} elements")
                todo.append(h)
    return len(seen)
