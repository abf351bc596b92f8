"""Exact linear algebra over Z, Q and F_p on lists of rows."""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

Vector = Sequence[Fraction | int]


def hnf_rows(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Row-style Hermite normal form of an integer matrix.

    Returns the nonzero rows: echelon form with positive pivots, entries above a
    pivot reduced into ``[0, pivot)``.
    """
    a = [list(map(int, r)) for r in rows if any(r)]
    if not a:
        return []
    ncols = len(a[0])
    out: list[list[int]] = []
    pivots: list[int] = []
    for col in range(ncols):
        live = [r for r in a if r[col] != 0]
        if not live:
            continue
        rest = [r for r in a if r[col] == 0]
        # gcd-reduce the column with repeated Euclid steps
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            piv = live[0]
            nxt = [piv]
            for r in live[1:]:
                q = r[col] // piv[col]
                r = [x - q * y for x, y in zip(r, piv)]
                if r[col] != 0:
                    nxt.append(r)
                elif any(r):
                    rest.append(r)
            live = nxt
        piv = live[0]
        if piv[col] < 0:
            piv = [-x for x in piv]
        out.append(piv)
        pivots.append(col)
        a = rest
    for i in range(len(out)):
        col = pivots[i]
        for k in range(i):
            q = out[k][col] // out[i][col]
            if q:
                out[k] = [x - q * y for x, y in zip(out[k], out[i])]
    return out


def common_denominator(rows: Sequence[Vector]) -> int:
    d = 1
    for r in rows:
        for x in r:
            d = lcm(d, Fraction(x).denominator)
    return d


def rational_hnf(rows: Sequence[Vector]) -> list[tuple[Fraction, ...]]:
    """HNF basis of the Z-module spanned by rational row vectors."""
    d = common_denominator(rows)
    ints = [[int(Fraction(x) * d) for x in r] for r in rows]
    return [tuple(Fraction(x, d) for x in r) for r in hnf_rows(ints)]


def echelon_coordinates(basis: Sequence[Vector], v: Vector) -> list[Fraction] | None:
    """Coordinates of ``v`` in an echelon basis (rows), or None if outside its Q-span."""
    v = [Fraction(x) for x in v]
    coords = []
    for row in basis:
        col = next(j for j, x in enumerate(row) if x != 0)
        c = v[col] / row[col]
        coords.append(c)
        if c:
            v = [x - c * y for x, y in zip(v, row)]
    if any(v):
        return None
    return coords


def mat_mul(a: Sequence[Vector], b: Sequence[Vector]) -> list[list]:
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(r, c)) for c in cols] for r in a]


def transpose(a: Sequence[Vector]) -> list[list]:
    return [list(c) for c in zip(*a)]


def _rref(a: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    m = [row[:] for row in a]
    pivots = []
    r = 0
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        p = next((i for i in range(r, nrows) if m[i][col] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return m, pivots


def solve(a: Sequence[Vector], b: Vector) -> list[Fraction]:
    """Unique solution of the square system ``a x = b``."""
    n = len(a)
    aug = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(a, b)]
    m, pivots = _rref(aug)
    if pivots != list(range(n)):
        raise ValueError("singular system")
    return [m[i][n] for i in range(n)]


def inverse(a: Sequence[Vector]) -> list[list[Fraction]]:
    n = len(a)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    m, pivots = _rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("singular matrix")
    return [row[n:] for row in m]


def det(a: Sequence[Vector]) -> Fraction:
    m = [[Fraction(x) for x in row] for row in a]
    n = len(m)
    out = Fraction(1)
    for col in range(n):
        p = next((i for i in range(col, n) if m[i][col] != 0), None)
        if p is None:
            return Fraction(0)
        if p != col:
            m[col], m[p] = m[p], m[col]
            out = -out
        out *= m[col][col]
        inv = 1 / m[col][col]
        for i in range(col + 1, n):
            f = m[i][col] * inv
            if f:
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    return out


def left_kernel_mod_p(rows: Sequence[Sequence[int]], p: int) -> list[list[int]]:
    """Basis of ``{c in F_p^m : c . rows == 0}`` for an m x n integer matrix."""
    m = len(rows)
    n = len(rows[0]) if rows else 0
    # row-reduce [rows | I] keeping track of combinations
    aug = [[x % p for x in r] + [int(i == j) for j in range(m)] for i, r in enumerate(rows)]
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, m) if aug[i][col]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = pow(aug[r][col], -1, p)
        aug[r] = [x * inv % p for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][col]:
                f = aug[i][col]
                aug[i] = [(x - f * y) % p for x, y in zip(aug[i], aug[r])]
        r += 1
    return [row[n:] for row in aug[r:]]


def integer_left_kernel(rows: Sequence[Vector]) -> list[list[int]]:
    """Z-basis of ``{c in Z^m : c . rows == 0}`` for a rational m x n matrix."""
    m = len(rows)
    if m == 0:
        return []
    n = len(rows[0])
    d = common_denominator(rows)
    aug = [[int(Fraction(x) * d) for x in r] + [int(i == j) for j in range(m)] for i, r in enumerate(rows)]
    h = hnf_rows(aug)
    return [row[n:] for row in h if not any(row[:n])]
