# linalg.py
"""Exact linear algebra over ``Fraction``: determinants, row reduction, kernels.

Integer matrices go through fraction-free Bareiss elimination; everything else
through Gauss-Jordan on Fractions. Nothing here ever touches a float.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import List, Optional, Sequence, Tuple

from .errors import InputError

Matrix = List[List[Fraction]]


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    return tuple(a - b for a, b in zip(u, v))


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> List[List[int]]:
    """Scale each row by the lcm of its denominators; row signs are unchanged."""
    out = []
    for row in rows:
        scale = 1
        for x in row:
            scale = lcm(scale, Fraction(x).denominator)
        out.append([int(Fraction(x) * scale) for x in row])
    return out


def _bareiss_det(m: List[List[int]]) -> int:
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def determinant_sign(rows: Sequence[Sequence[Fraction]]) -> int:
    """Sign of det(rows) for a square matrix; positive row scaling keeps the sign."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise InputError(f"Determinant needs a square matrix, got {n} rows of lengths {[len(r) for r in rows]}")
    d = _bareiss_det(_integer_rows(rows))
    return (d > 0) - (d < 0)


def determinant(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise InputError("Determinant needs a square matrix")
    scales = Fraction(1)
    int_rows = []
    for row in rows:
        s = 1
        for x in row:
            s = lcm(s, Fraction(x).denominator)
        scales *= s
        int_rows.append([int(Fraction(x) * s) for x in row])
    return Fraction(_bareiss_det(int_rows)) / scales


def rref(rows: Sequence[Sequence[Fraction]], ncols: Optional[int] = None) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = [[Fraction(x) for x in r] for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        if r >= len(m):
            break
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        if p != 1:
            m[r] = [x / p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    if not rows:
        return 0
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> List[Tuple[Fraction, ...]]:
    """Basis of {x : rows . x = 0}, one vector per free column (free entry = 1)."""
    if not rows:
        return [tuple(Fraction(int(i == j)) for i in range(ncols)) for j in range(ncols)]
    m, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row_idx, pc in enumerate(pivots):
            v[pc] = -m[row_idx][f]
        basis.append(tuple(v))
    return basis


def solve(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction], ncols: int) -> Optional[Tuple[Fraction, ...]]:
    """One solution of rows . x = rhs (free variables set to 0), or None if inconsistent."""
    aug = [list(r) + [Fraction(b)] for r, b in zip(rows, rhs)]
    m, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row_idx, pc in enumerate(pivots):
        x[pc] = m[row_idx][ncols]
    return tuple(x)
