"""Totally real cubic fields K+, the sextic field K = K+(zeta_3), and their orders.

Elements are coordinate vectors in a power basis: ``(1, a, a^2)`` for K+ and
``(1, a, a^2, z, a z, a^2 z)`` for K, where ``a`` is the root of the defining
cubic and ``z`` a primitive cube root of unity.  Orders are full-rank lattices
stored in Hermite normal form over Q.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .exact.integers import factor_int
from .exact.linalg import (
    det,
    echelon_coordinates,
    integer_left_kernel,
    left_kernel_mod_p,
    rational_hnf,
    solve,
)

Coords = tuple[Fraction, ...]


class FieldError(ValueError):
    """Invalid field or order input."""


def _vec(xs: Iterable) -> Coords:
    return tuple(Fraction(x) for x in xs)


# --------------------------------------------------------------------------
# polynomials over F_p (ascending coefficient lists)
# --------------------------------------------------------------------------
def _trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _pmod(f: Sequence[int], p: int) -> list[int]:
    return _trim([c % p for c in f])


def _pmul(f: Sequence[int], g: Sequence[int], p: int) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = (out[i + j] + a * b) % p
    return _trim(out)


def _pdivmod(f: Sequence[int], g: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    f = list(f)
    q = [0] * max(len(f) - len(g) + 1, 0)
    inv = pow(g[-1], -1, p)
    while len(f) >= len(g) and f:
        c = f[-1] * inv % p
        k = len(f) - len(g)
        q[k] = c
        for i, b in enumerate(g):
            f[i + k] = (f[i + k] - c * b) % p
        _trim(f)
    return _trim(q), f


def _pgcd(f: Sequence[int], g: Sequence[int], p: int) -> list[int]:
    f, g = _pmod(f, p), _pmod(g, p)
    while g:
        f, g = g, _pdivmod(f, g, p)[1]
    if not f:
        return []
    inv = pow(f[-1], -1, p)
    return [c * inv % p for c in f]


def _pderiv(f: Sequence[int], p: int) -> list[int]:
    return _trim([i * c % p for i, c in enumerate(f)][1:])


def _pradical(f: Sequence[int], p: int) -> list[int]:
    """Product of the distinct monic irreducible factors of ``f`` over F_p."""
    f = _pmod(f, p)
    if len(f) <= 1:
        return [1]
    df = _pderiv(f, p)
    if not df:
        # f(x) = g(x^p) = g(x)^p over F_p
        return _pradical(f[::p], p)
    g = _pgcd(f, df, p)
    sep = _pdivmod(f, g, p)[0]
    rg = _pradical(g, p)
    common = _pgcd(sep, rg, p)
    out = _pdivmod(_pmul(sep, rg, p), common, p)[0]
    inv = pow(out[-1], -1, p)
    return [c * inv % p for c in out]


# --------------------------------------------------------------------------
# fields
# --------------------------------------------------------------------------
def cubic_discriminant(c0: int, c1: int, c2: int) -> int:
    """Discriminant of x^3 + c2 x^2 + c1 x + c0."""
    return c2 * c2 * c1 * c1 - 4 * c1**3 - 4 * c2**3 * c0 - 27 * c0 * c0 + 18 * c2 * c1 * c0


def _has_integer_root(c0: int, c1: int, c2: int) -> bool:
    if c0 == 0:
        return True
    divisors = [1]
    for p, e in factor_int(c0).items():
        divisors = [d * p**k for d in divisors for k in range(e + 1)]
    return any(r**3 + c2 * r * r + c1 * r + c0 == 0 for d in divisors for r in (d, -d))


@dataclass(frozen=True)
class CubicField:
    """K+ = Q[x]/(x^3 + c2 x^2 + c1 x + c0), totally real."""

    c0: int
    c1: int
    c2: int

    degree = 3

    @property
    def min_poly(self) -> tuple[int, int, int, int]:
        return (self.c0, self.c1, self.c2, 1)

    @cached_property
    def poly_disc(self) -> int:
        return cubic_discriminant(self.c0, self.c1, self.c2)

    @cached_property
    def _power_traces(self) -> tuple[int, ...]:
        # Newton sums Tr(a^k), k = 0..4
        e1, e2, e3 = -self.c2, self.c1, -self.c0
        s = [3, e1, e1 * e1 - 2 * e2]
        s.append(e1 * s[2] - e2 * s[1] + 3 * e3)
        s.append(e1 * s[3] - e2 * s[2] + e3 * s[1])
        return tuple(s)

    # arithmetic on coordinate triples
    def mul_coords(self, x: Sequence, y: Sequence) -> Coords:
        prod = [Fraction(0)] * 5
        for i in range(3):
            if x[i]:
                for j in range(3):
                    prod[i + j] += x[i] * y[j]
        for k in (4, 3):
            t = prod[k]
            if t:
                prod[k - 1] -= self.c2 * t
                prod[k - 2] -= self.c1 * t
                prod[k - 3] -= self.c0 * t
        return tuple(prod[:3])

    def one_coords(self) -> Coords:
        return _vec((1, 0, 0))

    def trace_coords(self, x: Sequence) -> Fraction:
        s = self._power_traces
        return sum((Fraction(x[i]) * s[i] for i in range(3)), Fraction(0))

    def element(self, coords: Sequence) -> FieldElement:
        return FieldElement(self, _vec(coords))

    @property
    def gen(self) -> FieldElement:
        return self.element((0, 1, 0))

    def __str__(self) -> str:
        terms = ["x^3"]
        for c, mono in ((self.c2, "x^2"), (self.c1, "x"), (self.c0, "")):
            if c:
                mag = "" if abs(c) == 1 and mono else str(abs(c))
                terms.append(f"{'+' if c > 0 else '-'} {mag}{mono}")
        return " ".join(terms)


def make_cubic_field(c0: int, c1: int, c2: int) -> CubicField:
    """Validate and build the field of x^3 + c2 x^2 + c1 x + c0."""
    for c in (c0, c1, c2):
        if Fraction(c).denominator != 1:
            raise FieldError("defining polynomial must have integer coefficients")
    c0, c1, c2 = int(c0), int(c1), int(c2)
    if _has_integer_root(c0, c1, c2):
        raise FieldError(f"x^3 + {c2}x^2 + {c1}x + {c0} is reducible over Q")
    d = cubic_discriminant(c0, c1, c2)
    if d <= 0:
        raise FieldError(f"polynomial discriminant {d} <= 0: field is not totally real")
    return CubicField(c0, c1, c2)


@dataclass(frozen=True)
class FieldElement:
    field: CubicField
    coords: Coords

    def _wrap(self, other) -> FieldElement:
        if isinstance(other, FieldElement):
            return other
        return self.field.element((other, 0, 0))

    def __add__(self, other) -> FieldElement:
        o = self._wrap(other)
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self) -> FieldElement:
        return FieldElement(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other) -> FieldElement:
        return self + (-self._wrap(other))

    def __rsub__(self, other) -> FieldElement:
        return self._wrap(other) - self

    def __mul__(self, other) -> FieldElement:
        o = self._wrap(other)
        return FieldElement(self.field, self.field.mul_coords(self.coords, o.coords))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> FieldElement:
        out = self.field.element((1, 0, 0))
        for _ in range(k):
            out = out * self
        return out

    def is_rational(self) -> bool:
        return self.coords[1] == 0 and self.coords[2] == 0

    def mult_matrix(self) -> list[list[Fraction]]:
        """Matrix of y -> self*y acting on coordinate rows (row i = self * a^i)."""
        basis = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
        return [list(self.field.mul_coords(self.coords, b)) for b in basis]


def elem_trace(x: FieldElement) -> Fraction:
    return x.field.trace_coords(x.coords)


def elem_norm(x: FieldElement) -> Fraction:
    return det(x.mult_matrix())


def elem_charpoly(x: FieldElement) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Characteristic polynomial X^3 - t X^2 + s X - n, ascending coefficients."""
    m = x.mult_matrix()
    t = m[0][0] + m[1][1] + m[2][2]
    s = (
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
        + m[0][0] * m[2][2] - m[0][2] * m[2][0]
        + m[1][1] * m[2][2] - m[1][2] * m[2][1]
    )
    return (-det(m), s, -t, Fraction(1))


def elem_minpoly(x: FieldElement) -> tuple[Fraction, ...]:
    """Minimal polynomial over Q (monic, ascending): degree 1 or 3."""
    if x.is_rational():
        return (-x.coords[0], Fraction(1))
    return elem_charpoly(x)


@dataclass(frozen=True)
class SexticElement:
    """u + v*zeta_3 with u, v in K+."""

    u: FieldElement
    v: FieldElement

    @classmethod
    def from_coords(cls, field: CubicField, coords: Sequence) -> SexticElement:
        return cls(field.element(coords[:3]), field.element(coords[3:]))

    @property
    def coords(self) -> Coords:
        return self.u.coords + self.v.coords

    def __add__(self, other: SexticElement) -> SexticElement:
        return SexticElement(self.u + other.u, self.v + other.v)

    def __sub__(self, other: SexticElement) -> SexticElement:
        return SexticElement(self.u - other.u, self.v - other.v)

    def __mul__(self, other: SexticElement) -> SexticElement:
        vv = self.v * other.v
        return SexticElement(self.u * other.u - vv, self.u * other.v + self.v * other.u - vv)


def conjugate(w: SexticElement) -> SexticElement:
    """Complex conjugation: fixes K+, zeta_3 -> zeta_3^2 = -1 - zeta_3."""
    return SexticElement(w.u - w.v, -w.v)


@dataclass(frozen=True)
class SexticField:
    """K = K+(zeta_3) as a 6-dimensional Q-algebra."""

    base: CubicField

    degree = 6

    def mul_coords(self, x: Sequence, y: Sequence) -> Coords:
        return (SexticElement.from_coords(self.base, x) * SexticElement.from_coords(self.base, y)).coords

    def one_coords(self) -> Coords:
        return _vec((1, 0, 0, 0, 0, 0))

    def trace_coords(self, x: Sequence) -> Fraction:
        # Tr_{Q(zeta)/Q}(zeta) = -1
        tr = self.base.trace_coords
        return 2 * tr(x[:3]) - tr(x[3:])

    def conj_coords(self, x: Sequence) -> Coords:
        return conjugate(SexticElement.from_coords(self.base, x)).coords

    def element(self, coords: Sequence) -> SexticElement:
        return SexticElement.from_coords(self.base, _vec(coords))


Algebra = CubicField | SexticField


# --------------------------------------------------------------------------
# orders
# --------------------------------------------------------------------------
@dataclass(frozen=True)
class OrderBasis:
    """A full-rank Z-lattice in a power basis, kept in Hermite normal form."""

    algebra: Algebra
    rows: tuple[Coords, ...]

    @classmethod
    def from_generators(cls, algebra: Algebra, gens: Iterable[Sequence]) -> OrderBasis:
        rows = tuple(rational_hnf([_vec(g) for g in gens]))
        if len(rows) != algebra.degree:
            raise FieldError(f"generators span rank {len(rows)}, need {algebra.degree}")
        return cls(algebra, rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def coords(self, v: Sequence) -> list[Fraction] | None:
        """Coordinates of ``v`` with respect to the basis rows."""
        return echelon_coordinates(self.rows, v)

    def contains(self, v: Sequence) -> bool:
        c = self.coords(v)
        return c is not None and all(x.denominator == 1 for x in c)

    def covolume(self) -> Fraction:
        """|det| of the basis matrix (index of Z^n in the lattice, inverted)."""
        return abs(det(self.rows))

    def index_in(self, other: OrderBasis) -> Fraction:
        """[other : self]."""
        return self.covolume() / other.covolume()

    @cached_property
    def gram(self) -> list[list[Fraction]]:
        alg = self.algebra
        return [[alg.trace_coords(alg.mul_coords(x, y)) for y in self.rows] for x in self.rows]

    @cached_property
    def disc(self) -> int:
        d = det(self.gram)
        if d.denominator != 1:
            raise FieldError("non-integral discriminant: lattice is not an order")
        return int(d)

    @cached_property
    def structure_constants(self) -> list[list[list[Fraction]]]:
        alg = self.algebra
        out = []
        for x in self.rows:
            row = []
            for y in self.rows:
                c = self.coords(alg.mul_coords(x, y))
                if c is None:
                    raise FieldError("basis does not span the algebra")
                row.append(c)
            out.append(row)
        return out

    def is_ring(self) -> bool:
        if not self.contains(self.algebra.one_coords()):
            return False
        return all(x.denominator == 1 for r in self.structure_constants for c in r for x in c)

    def element(self, i: int) -> SexticElement | FieldElement:
        return self.algebra.element(self.rows[i])


def _power_basis_order(field: CubicField) -> OrderBasis:
    return OrderBasis.from_generators(field, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])


def _order_mul_mod_p(table: list[list[list[int]]], x: list[int], y: list[int], p: int) -> list[int]:
    n = len(x)
    out = [0] * n
    for i, xi in enumerate(x):
        if xi:
            for j, yj in enumerate(y):
                if yj:
                    c = xi * yj
                    for k, t in enumerate(table[i][j]):
                        out[k] += c * t
    return [v % p for v in out]


def _int_table(order: OrderBasis) -> list[list[list[int]]]:
    if not order.is_ring():
        raise FieldError("lattice is not a ring")
    return [[[int(x) for x in c] for c in r] for r in order.structure_constants]


def p_radical(order: OrderBasis, p: int) -> OrderBasis:
    """The ideal {x in O : x^q in pO} (q = p^k >= rank), as a lattice."""
    n = order.rank
    table = _int_table(order)
    q = p
    while q < n:
        q *= p
    one = order.coords(order.algebra.one_coords())
    frob = []
    for i in range(n):
        base = [int(i == j) for j in range(n)]
        acc = [int(c) % p for c in one]
        e = q
        while e:
            if e & 1:
                acc = _order_mul_mod_p(table, acc, base, p)
            base = _order_mul_mod_p(table, base, base, p)
            e >>= 1
        frob.append(acc)
    kernel = left_kernel_mod_p(frob, p)
    gens = [tuple(sum(c * r[k] for c, r in zip(vec, order.rows)) for k in range(n)) for vec in kernel]
    gens += [tuple(p * x for x in r) for r in order.rows]
    return OrderBasis(order.algebra, tuple(rational_hnf(gens)))


def ring_of_multipliers_step(order: OrderBasis, p: int) -> OrderBasis:
    """One round-2 step: the multiplier ring of the p-radical (contains ``order``)."""
    alg = order.algebra
    n = order.rank
    rad = p_radical(order, p)
    rows = []
    for x in order.rows:
        row = []
        for y in rad.rows:
            c = rad.coords(alg.mul_coords(x, y))
            if c is None or any(v.denominator != 1 for v in c):
                raise FieldError("radical is not an ideal")
            row.extend(int(v) % p for v in c)
        rows.append(row)
    kernel = left_kernel_mod_p(rows, p)
    gens = [tuple(Fraction(sum(c * r[k] for c, r in zip(vec, order.rows)), p) for k in range(n)) for vec in kernel]
    gens += list(order.rows)
    return OrderBasis(alg, tuple(rational_hnf(gens)))


def p_maximize(order: OrderBasis, p: int) -> OrderBasis:
    """Round-2 enlargement until the order is p-maximal."""
    while True:
        bigger = ring_of_multipliers_step(order, p)
        if bigger.rows == order.rows:
            return order
        order = bigger


def is_p_maximal(order: OrderBasis, p: int) -> bool:
    """Round-2 certificate: the multiplier ring of the p-radical is the order itself."""
    return ring_of_multipliers_step(order, p).rows == order.rows


def dedekind_is_p_maximal(field: CubicField, p: int) -> bool:
    """Dedekind criterion for Z[a] at p."""
    f = list(field.min_poly)
    g = _pradical(f, p)
    h = _pdivmod(_pmod(f, p), g, p)[0]
    gh = [0] * (len(g) + len(h) - 1)
    for i, a in enumerate(g):
        for j, b in enumerate(h):
            gh[i + j] += a * b
    diff = [a - (gh[i] if i < len(gh) else 0) for i, a in enumerate(f)]
    assert all(c % p == 0 for c in diff)
    big_f = _pmod([c // p for c in diff], p)
    d = _pgcd(_pgcd(big_f, g, p), h, p) if big_f else _pgcd(g, h, p)
    return len(d) == 1


def maximal_order(field: CubicField) -> OrderBasis:
    """Ring of integers of K+: Z[a] enlarged by round 2 where Dedekind fails."""
    order = _power_basis_order(field)
    for p, e in factor_int(field.poly_disc).items():
        if e >= 2 and not dedekind_is_p_maximal(field, p):
            order = p_maximize(order, p)
    return order


def sextic_order_from_cubic(order_plus: OrderBasis, saturate: bool = True) -> OrderBasis:
    """O+[zeta_3], then 3-maximized (the only prime where it can fail to be maximal)."""
    if not isinstance(order_plus.algebra, CubicField) or order_plus.rank != 3:
        raise FieldError("need a rank-3 order of a cubic field")
    if not order_plus.is_ring():
        raise FieldError("input lattice is not a ring")
    zero = (Fraction(0),) * 3
    gens = [tuple(r) + zero for r in order_plus.rows] + [zero + tuple(r) for r in order_plus.rows]
    order = OrderBasis.from_generators(SexticField(order_plus.algebra), gens)
    return p_maximize(order, 3) if saturate else order


def maximal_sextic_order(field: CubicField) -> OrderBasis:
    return sextic_order_from_cubic(maximal_order(field))


def z_plus_2O(order: OrderBasis) -> OrderBasis:
    """The suborder Z + 2*O."""
    gens = [order.algebra.one_coords()] + [tuple(2 * x for x in r) for r in order.rows]
    return OrderBasis.from_generators(order.algebra, gens)


def real_suborder(order: OrderBasis) -> OrderBasis:
    """O+ = O intersected with K+, for a sextic order O."""
    if not isinstance(order.algebra, SexticField):
        raise FieldError("need a sextic order")
    # kernel of the projection onto the zeta-part
    combos = integer_left_kernel([r[3:] for r in order.rows])
    gens = [tuple(sum(c * r[k] for c, r in zip(vec, order.rows)) for k in range(3)) for vec in combos]
    return OrderBasis.from_generators(order.algebra.base, gens)


def imaginary_sublattice(order: OrderBasis) -> list[Coords]:
    """Z-basis of {x in O : conj(x) = -x} (rank 3 for a sextic order)."""
    alg = order.algebra
    images = [tuple(a + b for a, b in zip(r, alg.conj_coords(r))) for r in order.rows]
    combos = integer_left_kernel(images)
    return [tuple(sum(c * r[k] for c, r in zip(vec, order.rows)) for k in range(6)) for vec in combos]


def order_from_json_basis(field: CubicField, rows: Sequence[Sequence]) -> OrderBasis:
    """User-supplied rank-6 order basis (coordinates in 1, a, a^2, z, az, a^2z)."""
    if len(rows) != 6 or any(len(r) != 6 for r in rows):
        raise FieldError("order basis must be 6 rows of 6 coordinates")
    order = OrderBasis.from_generators(SexticField(field), rows)
    if not order.is_ring():
        raise FieldError("order basis is not closed under multiplication or lacks 1")
    if not order.contains(SexticField(field).element((0, 0, 0, 1, 0, 0)).coords):
        raise FieldError("order does not contain zeta_3")
    return order


def mu_power_matrix(mu: FieldElement) -> list[list[Fraction]]:
    """Columns are the coordinates of 1, mu, mu^2."""
    if mu.is_rational():
        raise FieldError("mu is rational and generates no cubic field")
    pw = [mu.field.element((1, 0, 0)), mu, mu * mu]
    return [[pw[i].coords[k] for i in range(3)] for k in range(3)]


def express_in_power_basis(w: SexticElement, mu: FieldElement) -> list[list[Fraction]]:
    """Rationals ``c[i][j]`` with ``w = sum c[i][j] mu^i zeta^j``."""
    p = mu_power_matrix(mu)
    cu = solve(p, w.u.coords)
    cv = solve(p, w.v.coords)
    return [[cu[i], cv[i]] for i in range(3)]


def embed_real(x: FieldElement) -> Coords:
    return x.coords + (Fraction(0),) * 3


def factor_index(order: OrderBasis) -> int:
    """[O : Z[a]] (or [O : Z[a][zeta]] for sextic orders) as an integer."""
    idx = 1 / order.covolume()
    if idx.denominator != 1:
        raise FieldError("order does not contain the power-basis order")
    return int(idx)


__all__ = [
    "CubicField",
    "FieldElement",
    "FieldError",
    "OrderBasis",
    "SexticElement",
    "SexticField",
    "conjugate",
    "cubic_discriminant",
    "dedekind_is_p_maximal",
    "elem_charpoly",
    "elem_minpoly",
    "elem_norm",
    "elem_trace",
    "embed_real",
    "express_in_power_basis",
    "factor_index",
    "imaginary_sublattice",
    "is_p_maximal",
    "make_cubic_field",
    "maximal_order",
    "maximal_sextic_order",
    "order_from_json_basis",
    "p_maximize",
    "p_radical",
    "real_suborder",
    "sextic_order_from_cubic",
    "z_plus_2O",
]
