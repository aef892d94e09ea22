"""Exact integer matrix routines: fraction-free rank/determinant and Hermite normal form.

Matrices are lists of lists of Python ints, so intermediates never overflow.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list[int]]


def bareiss_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination."""
    a = [list(r) for r in rows]
    if not a:
        return 0
    m, n = len(a), len(a[0])
    r = 0
    prev = 1
    for col in range(n):
        piv = next((i for i in range(r, m) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][col]
        for i in range(r + 1, m):
            aic = a[i][col]
            row_i = a[i]
            row_r = a[r]
            for j in range(col + 1, n):
                row_i[j] = (p * row_i[j] - aic * row_r[j]) // prev
            row_i[col] = 0
        prev = p
        r += 1
        if r == m:
            break
    return r


def det(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix (Bareiss)."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def hermite_normal_form(rows: Sequence[Sequence[int]], ncols: int | None = None) -> tuple[Matrix, Matrix]:
    """Row-style HNF.

    Returns ``(H, U)`` with ``U`` unimodular and ``U @ A == H``.  Nonzero rows
    of ``H`` come first, each with a positive pivot strictly right of the
    previous one, and entries above a pivot reduced into ``[0, pivot)``.
    """
    a = [list(r) for r in rows]
    m = len(a)
    n = ncols if ncols is not None else (len(a[0]) if a else 0)
    u = [[int(i == j) for j in range(m)] for i in range(m)]

    def sub(i, k, q):
        # row_i -= q * row_k
        if q:
            a[i] = [x - q * y for x, y in zip(a[i], a[k])]
            u[i] = [x - q * y for x, y in zip(u[i], u[k])]

    def swap(i, k):
        a[i], a[k] = a[k], a[i]
        u[i], u[k] = u[k], u[i]

    r = 0
    for col in range(n):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if a[i][col] != 0]
            if not nz:
                break
            best = min(nz, key=lambda i: abs(a[i][col]))
            swap(r, best)
            done = True
            for i in range(r + 1, m):
                if a[i][col]:
                    sub(i, r, a[i][col] // a[r][col])
                    if a[i][col]:
                        done = False
            if done:
                break
        if r < m and a[r][col] != 0:
            if a[r][col] < 0:
                a[r] = [-x for x in a[r]]
                u[r] = [-x for x in u[r]]
            p = a[r][col]
            for i in range(r):
                sub(i, r, a[i][col] // p)
            r += 1
    return a, u


def solve_upper_echelon(basis: Sequence[Sequence[int]], pivots: Sequence[int],
                        target: Sequence[int]) -> list[Fraction] | None:
    """Solve ``x @ basis == target`` for an echelon basis; None if inconsistent."""
    x = []
    resid = [Fraction(t) for t in target]
    for row, col in zip(basis, pivots):
        c = resid[col] / row[col]
        x.append(c)
        if c:
            resid = [ri - c * bi for ri, bi in zip(resid, row)]
    if any(resid):
        return None
    return x
