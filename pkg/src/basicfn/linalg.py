"""Small exact linear algebra over the rationals.

Everything here works on lists/tuples of ``fractions.Fraction`` (plain ints
are accepted and promoted).  Matrices are sequences of rows.  Sizes never
exceed a handful of rows at desk scale, so plain Gaussian elimination with
exact pivots is entirely adequate.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

Vec = tuple[Fraction, ...]


def _frac_rows(m: Sequence[Sequence]) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in m]


def mat_vec(m: Sequence[Sequence], v: Sequence) -> list[Fraction]:
    return [sum((Fraction(a) * Fraction(b) for a, b in zip(row, v)), Fraction(0)) for row in m]


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list[Fraction]]:
    cols = list(zip(*b))
    return [[sum((Fraction(x) * Fraction(y) for x, y in zip(row, col)), Fraction(0)) for col in cols] for row in a]


def transpose(m: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*m)]


def identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def det(m: Sequence[Sequence]) -> Fraction:
    """Determinant by fraction-free-ish Gaussian elimination."""
    a = _frac_rows(m)
    n = len(a)
    sign = 1
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            sign = -sign
        p = a[col][col]
        result *= p
        for r in range(col + 1, n):
            f = a[r][col] / p
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return sign * result


def solve(m: Sequence[Sequence], rhs: Sequence) -> Optional[list[Fraction]]:
    """Solve ``m x = rhs`` exactly.

    Returns the unique solution, or None when the system is inconsistent.
    Raises ValueError when the solution is not unique (rank-deficient
    consistent systems), since callers here always expect uniqueness.
    """
    a = _frac_rows(m)
    b = [Fraction(x) for x in rhs]
    nrows, ncols = len(a), len(a[0]) if a else 0
    pivots: list[tuple[int, int]] = []
    row = 0
    for col in range(ncols):
        pivot = next((r for r in range(row, nrows) if a[r][col] != 0), None)
        if pivot is None:
            continue
        a[row], a[pivot] = a[pivot], a[row]
        b[row], b[pivot] = b[pivot], b[row]
        p = a[row][col]
        a[row] = [x / p for x in a[row]]
        b[row] = b[row] / p
        for r in range(nrows):
            if r != row and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[row])]
                b[r] = b[r] - f * b[row]
        pivots.append((row, col))
        row += 1
    for r in range(row, nrows):
        if b[r] != 0:
            return None
    if len(pivots) < ncols:
        raise ValueError("system is underdetermined")
    x = [Fraction(0)] * ncols
    for r, c in pivots:
        x[c] = b[r]
    return x


def inverse(m: Sequence[Sequence]) -> list[list[Fraction]]:
    """Exact inverse of a square matrix."""
    n = len(m)
    a = _frac_rows(m)
    inv = identity(n)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        a[col], a[pivot] = a[pivot], a[col]
        inv[col], inv[pivot] = inv[pivot], inv[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        inv[col] = [x / p for x in inv[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    return inv


def nullspace(m: Sequence[Sequence]) -> list[list[Fraction]]:
    """Basis of the right kernel of ``m``."""
    a = _frac_rows(m)
    nrows, ncols = len(a), len(a[0]) if a else 0
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        pivot = next((r for r in range(row, nrows) if a[r][col] != 0), None)
        if pivot is None:
            continue
        a[row], a[pivot] = a[pivot], a[row]
        p = a[row][col]
        a[row] = [x / p for x in a[row]]
        for r in range(nrows):
            if r != row and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[row])]
        pivots.append(col)
        row += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -a[r][fc]
        basis.append(v)
    return basis


def rank(m: Sequence[Sequence]) -> int:
    if not m:
        return 0
    return len(m[0]) - len(nullspace(m))


def primitive_integer_vector(v: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a nonzero rational vector to a primitive integer vector.

    The orientation (overall sign) is preserved.
    """
    from math import gcd, lcm

    denom = lcm(*(Fraction(x).denominator for x in v)) if v else 1
    ints = [int(Fraction(x) * denom) for x in v]
    g = gcd(*ints) if any(ints) else 1
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(x // g for x in ints)
