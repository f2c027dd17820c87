"""Exact rational linear algebra on lists of lists.

Everything works over ``fractions.Fraction``; integers are accepted as input
and promoted.  Matrices are row-major ``list[list[Fraction]]``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list[Fraction]]


def to_matrix(rows: Sequence[Sequence[int | Fraction]]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def zeros(m: int, n: int) -> Matrix:
    return [[Fraction(0)] * n for _ in range(m)]


def identity(n: int) -> Matrix:
    out = zeros(n, n)
    for i in range(n):
        out[i][i] = Fraction(1)
    return out


def matmul(a: Matrix, b: Matrix, inner: int | None = None) -> Matrix:
    """Product ``a @ b``.  ``inner`` is needed when ``a`` has no rows."""
    m = len(a)
    k = len(a[0]) if m else (inner if inner is not None else len(b))
    n = len(b[0]) if b else 0
    out = zeros(m, n)
    for i in range(m):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            x = ai[t]
            if x:
                bt = b[t]
                for j in range(n):
                    y = bt[j]
                    if y:
                        oi[j] += x * y
    return out


def transpose(a: Matrix, ncols: int | None = None) -> Matrix:
    if not a:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*a)]


def rref(rows: Matrix, ncols: int) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns).

    Input rows are copied, never mutated.
    """
    mat = [list(r) for r in rows if any(r)]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(mat):
            break
        piv = None
        for i in range(r, len(mat)):
            if mat[i][c]:
                piv = i
                break
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        prow = mat[r]
        inv = 1 / prow[c]
        if inv != 1:
            for j in range(c, ncols):
                if prow[j]:
                    prow[j] *= inv
        nz = [j for j in range(c, ncols) if prow[j]]
        for i in range(len(mat)):
            if i != r:
                row = mat[i]
                f = row[c]
                if f:
                    for j in nz:
                        row[j] -= f * prow[j]
        pivots.append(c)
        r += 1
    return mat[:r], pivots


def rank(rows: Matrix, ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows: Matrix, ncols: int) -> Matrix:
    """Basis of ``{x : rows @ x = 0}`` as a list of vectors."""
    red, pivots = rref(rows, ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row, p in zip(red, pivots):
            if row[free]:
                v[p] = -row[free]
        basis.append(v)
    return basis


def solve(a: Matrix, b: list[Fraction]) -> list[Fraction] | None:
    """One solution of ``a x = b`` or ``None`` when inconsistent."""
    n = len(a[0]) if a else 0
    aug = [list(row) + [Fraction(v)] for row, v in zip(a, b)]
    red, pivots = rref(aug, n + 1)
    if pivots and pivots[-1] == n:
        return None
    x = [Fraction(0)] * n
    for row, p in zip(red, pivots):
        x[p] = row[n]
    return x


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    aug = [list(row) + e for row, e in zip(a, identity(n))]
    red, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red[:n]]


def column_space(cols: list[list[Fraction]], dim: int) -> list[list[Fraction]]:
    """Reduced basis (as vectors) of the span of ``cols`` inside ``Q^dim``."""
    red, _ = rref(cols, dim)
    return red


def express(basis: list[list[Fraction]], v: list[Fraction]) -> list[Fraction]:
    """Coordinates of ``v`` in ``basis`` (vectors); raises if not in the span."""
    dim = len(v)
    a = [[basis[k][i] for k in range(len(basis))] for i in range(dim)]
    if not basis:
        if any(v):
            raise ValueError("vector not in span")
        return []
    x = solve(a, v)
    if x is None:
        raise ValueError("vector not in span")
    return x
