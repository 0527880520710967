"""Gauss-Jordan elimination over an exact field.

Works for any scalar type with field arithmetic and ``is_zero`` (CycloNumber,
the radical extension used by the center module).  Matrices are lists of rows.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Any, Sequence

Matrix = list[list[Any]]


def _iszero(x: Any) -> bool:
    return x.is_zero() if hasattr(x, "is_zero") else x == 0


def _recip(x: Any) -> Any:
    # keep plain integers exact
    return Fraction(1, x) if isinstance(x, int) else 1 / x


def rref(rows: Sequence[Sequence[Any]], ncols: int | None = None) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    M = [list(r) for r in rows if any(not _iszero(v) for v in r)]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(M)) if not _iszero(M[i][c])), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = _recip(M[r][c])
        M[r] = [v * inv if not _iszero(v) else v for v in M[r]]
        pr = M[r]
        nz = [j for j in range(c, len(pr)) if not _iszero(pr[j])]
        for i in range(len(M)):
            if i != r and not _iszero(M[i][c]):
                f = M[i][c]
                row = M[i]
                for j in nz:
                    row[j] = row[j] - f * pr[j]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(rows: Sequence[Sequence[Any]], ncols: int | None = None) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows: Sequence[Sequence[Any]], ncols: int, zero: Any, one: Any) -> Matrix:
    """Basis of {v : rows @ v = 0}, one vector per free column."""
    R, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for i, p in enumerate(pivots):
            v[p] = -R[i][f]
        basis.append(v)
    return basis


def inverse(rows: Sequence[Sequence[Any]]) -> Matrix:
    n = len(rows)
    sample = rows[0][0]
    zero, one = sample * 0, sample * 0 + 1
    aug = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(rows)]
    R, pivots = rref(aug, n)
    if pivots != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in R]


def det(rows: Sequence[Sequence[Any]]) -> Any:
    M = [list(r) for r in rows]
    n = len(M)
    sample = M[0][0]
    out = sample * 0 + 1
    for c in range(n):
        p = next((i for i in range(c, n) if not _iszero(M[i][c])), None)
        if p is None:
            return sample * 0
        if p != c:
            M[c], M[p] = M[p], M[c]
            out = -out
        out = out * M[c][c]
        inv = _recip(M[c][c])
        for i in range(c + 1, n):
            if not _iszero(M[i][c]):
                f = M[i][c] * inv
                M[i] = [a - f * b for a, b in zip(M[i], M[c])]
    return out


def matmul(A: Sequence[Sequence[Any]], B: Sequence[Sequence[Any]]) -> Matrix:
    n, m = len(A), len(B)
    p = len(B[0]) if m else 0
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            acc = None
            for k in range(m):
                a = A[i][k]
                if _iszero(a):
                    continue
                t = a * B[k][j]
                acc = t if acc is None else acc + t
            row.append(acc if acc is not None else A[i][0] * 0 if m else 0)
        out.append(row)
    return out
