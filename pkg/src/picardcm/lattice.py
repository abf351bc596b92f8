"""Trace-form lattices, Fincke-Pohst enumeration, and the Minkowski search for mu."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, isqrt
from typing import Sequence

import mpmath

from .exact.linalg import det
from .fields import (
    FieldElement,
    FieldError,
    OrderBasis,
    SexticField,
    elem_minpoly,
    imaginary_sublattice,
    z_plus_2O,
)

GramMatrix = list[list[Fraction]]


@dataclass(frozen=True)
class MuCandidate:
    mu: FieldElement
    t2: int
    t1: int
    a1: int
    N: int
    lattice_coords: tuple[int, ...]

    @property
    def minpoly_coeffs(self) -> tuple[int, int, int]:
        return (self.t1, self.a1, self.N)


def is_positive_definite(g: GramMatrix) -> bool:
    return all(det([row[:k] for row in g[:k]]) > 0 for k in range(1, len(g) + 1))


def gram_of(basis: OrderBasis) -> GramMatrix:
    """G_ij = Tr(b_i b_j) for a rank-3 lattice in a totally real cubic field."""
    if basis.rank != 3:
        raise FieldError("trace form needs a rank-3 lattice of K+")
    g = [list(r) for r in basis.gram]
    if not is_positive_definite(g):
        raise FieldError("trace form is not positive definite")
    return g


def _cholesky_q(g: GramMatrix) -> list[list[Fraction]]:
    """q with Q(x) = sum_i q[i][i] * (x_i + sum_{j>i} q[i][j] x_j)^2."""
    n = len(g)
    q = [[Fraction(x) for x in row] for row in g]
    for i in range(n):
        if q[i][i] <= 0:
            raise ValueError("form is not positive definite")
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] -= q[k][i] * q[i][l]
    return q


def _floor_sqrt(r: Fraction) -> int:
    """floor(sqrt(r)) for a rational r >= 0."""
    return isqrt(r.numerator * r.denominator) // r.denominator


def enumerate_short_vectors(g: GramMatrix, bound: Fraction | int) -> list[tuple[int, ...]]:
    """Nonzero integer v with v^T G v <= bound, one of each pair +-v.

    The kept representative has its first nonzero coordinate positive.
    """
    bound = Fraction(bound)
    n = len(g)
    if bound < 0:
        return []
    q = _cholesky_q(g)
    out: list[tuple[int, ...]] = []
    x = [0] * n

    def recurse(i: int, remaining: Fraction) -> None:
        center = -sum((q[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
        r = remaining / q[i][i]
        s = _floor_sqrt(r)
        lo = floor(center) - s - 1
        hi = ceil(center) + s + 1
        for xi in range(lo, hi + 1):
            d = xi - center
            if d * d > r:
                continue
            x[i] = xi
            rest = remaining - q[i][i] * d * d
            if i == 0:
                if any(x):
                    out.append(tuple(x))
            else:
                recurse(i - 1, rest)
        x[i] = 0

    recurse(n - 1, bound)
    reps = [v for v in out if next(c for c in v if c) > 0]
    return sorted(reps)


def quadratic_value(g: GramMatrix, v: Sequence[int]) -> Fraction:
    n = len(g)
    return sum((g[i][j] * v[i] * v[j] for i in range(n) for j in range(n)), Fraction(0))


# --------------------------------------------------------------------------
# certified Minkowski bounds
# --------------------------------------------------------------------------
def _pi_bounds(digits: int) -> tuple[Fraction, Fraction]:
    with mpmath.workdps(digits + 10):
        approx = Fraction(mpmath.nstr(mpmath.pi, digits + 5, strip_zeros=False))
    eps = Fraction(1, 10 ** (digits - 2))
    return approx - eps, approx + eps


def _floor_16_sqrt_over_pi(d: int) -> int:
    """floor(16 sqrt(d) / pi), decided with rational enclosures of pi."""
    digits = 30
    while True:
        lo_pi, hi_pi = _pi_bounds(digits)
        # k <= 16 sqrt(d)/pi  <=>  k^2 pi^2 <= 256 d  (k >= 0)
        k_lo = isqrt(256 * d * hi_pi.denominator**2 // hi_pi.numerator**2)
        # k_lo is a floor candidate computed against the upper pi bound
        while (k_lo + 1) ** 2 * hi_pi**2 <= 256 * d:
            k_lo += 1
        while k_lo > 0 and k_lo**2 * hi_pi**2 > 256 * d:
            k_lo -= 1
        # certain if k_lo + 1 fails even for the lower pi bound
        if (k_lo + 1) ** 2 * lo_pi**2 > 256 * d:
            return k_lo
        digits *= 2


def _ceil_196_d32(d: int) -> int:
    """ceil(196 * d^(3/2))."""
    n = 196 * 196 * d**3
    s = isqrt(n)
    return s if s * s == n else s + 1


@dataclass(frozen=True)
class MinkowskiBounds:
    t2_bound: int
    p_bound: int
    crude_bound: int


def minkowski_bounds(disc: int) -> MinkowskiBounds:
    """floor(1 + 16/pi sqrt|disc|), its cube, and ceil(196 |disc|^(3/2))."""
    d = abs(int(disc))
    if d == 0:
        raise ValueError("discriminant must be nonzero")
    t2 = 1 + _floor_16_sqrt_over_pi(d)
    return MinkowskiBounds(t2, t2**3, _ceil_196_d32(d))


# --------------------------------------------------------------------------
# search for mu
# --------------------------------------------------------------------------
def find_mu(order_plus: OrderBasis, t2_cap: int | None = None) -> list[MuCandidate]:
    """All non-rational mu in Z + 2O+ with Tr(mu^2) <= cap, up to sign, sorted by t2."""
    if order_plus.rank != 3:
        raise FieldError("find_mu needs the real cubic order O+")
    cap = minkowski_bounds(order_plus.disc).t2_bound if t2_cap is None else int(t2_cap)
    lat = z_plus_2O(order_plus)
    g = gram_of(lat)
    field = order_plus.algebra
    out = []
    for v in enumerate_short_vectors(g, cap):
        coords = tuple(sum((c * r[k] for c, r in zip(v, lat.rows)), Fraction(0)) for k in range(3))
        mu = field.element(coords)
        if mu.is_rational():
            continue
        c0, c1, c2, _ = elem_minpoly(mu)
        t1, a1, n = int(-c2), int(c1), int(-c0)
        t2 = int(quadratic_value(g, v))
        assert t2 == t1 * t1 - 2 * a1
        out.append(MuCandidate(mu, t2, t1, a1, n, v))
    out.sort(key=lambda c: (c.t2, c.mu.coords))
    return out


def imaginary_trace_form(order: OrderBasis) -> tuple[list[tuple[Fraction, ...]], GramMatrix]:
    """Basis of the purely imaginary sublattice and its form Tr_{K+/Q}(x conj(y))."""
    if not isinstance(order.algebra, SexticField):
        raise FieldError("need a sextic order")
    alg = order.algebra
    basis = imaginary_sublattice(order)
    if len(basis) != 3:
        raise FieldError(f"imaginary sublattice has rank {len(basis)}, expected 3")
    g = []
    for x in basis:
        row = []
        for y in basis:
            prod = alg.mul_coords(x, alg.conj_coords(y))
            if any(prod[3:]):
                raise FieldError("x * conj(y) is not real")
            row.append(alg.base.trace_coords(prod[:3]))
        g.append(row)
    return basis, g


def compute_B(order: OrderBasis, primitive: bool = True) -> tuple[int, tuple[Fraction, ...]]:
    """min Tr_{K+/Q}(x conj(x)) over nonzero purely imaginary x in O, with a minimizer.

    Every purely imaginary x is u*(1 + 2 zeta) with u in K+.  With ``primitive``
    (the default) x must generate K, i.e. u is not rational; otherwise
    1 + 2 zeta alone gives the value 9 in every order containing zeta.
    """
    basis, g = imaginary_trace_form(order)

    def admissible(coords: tuple[Fraction, ...]) -> bool:
        return not primitive or any(coords[1:3])

    bound = Fraction(1)
    while True:
        found = []
        for v in enumerate_short_vectors(g, bound):
            coords = tuple(sum((c * r[k] for c, r in zip(v, basis)), Fraction(0)) for k in range(6))
            if admissible(coords):
                found.append((quadratic_value(g, v), v, coords))
        if found:
            val, _, coords = min(found)
            return int(val), coords
        bound *= 2
