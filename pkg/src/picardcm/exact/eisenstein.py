"""Elements of Q(zeta_3) in the basis {1, zeta_3} and 3x3 matrices over them."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rational = int | Fraction


@dataclass(frozen=True)
class Eisenstein:
    """``c + d*zeta`` with ``zeta**2 = -1 - zeta``."""

    c: Fraction = Fraction(0)
    d: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "c", Fraction(self.c))
        object.__setattr__(self, "d", Fraction(self.d))

    @classmethod
    def coerce(cls, x: Eisenstein | Rational) -> Eisenstein:
        return x if isinstance(x, Eisenstein) else cls(Fraction(x))

    def __add__(self, other: Eisenstein | Rational) -> Eisenstein:
        o = Eisenstein.coerce(other)
        return Eisenstein(self.c + o.c, self.d + o.d)

    __radd__ = __add__

    def __neg__(self) -> Eisenstein:
        return Eisenstein(-self.c, -self.d)

    def __sub__(self, other: Eisenstein | Rational) -> Eisenstein:
        return self + (-Eisenstein.coerce(other))

    def __rsub__(self, other: Rational) -> Eisenstein:
        return Eisenstein.coerce(other) - self

    def __mul__(self, other: Eisenstein | Rational) -> Eisenstein:
        o = Eisenstein.coerce(other)
        dd = self.d * o.d
        return Eisenstein(self.c * o.c - dd, self.c * o.d + self.d * o.c - dd)

    __rmul__ = __mul__

    def conj(self) -> Eisenstein:
        # zeta -> zeta^2 = -1 - zeta
        return Eisenstein(self.c - self.d, -self.d)

    def norm(self) -> Fraction:
        return self.c * self.c - self.c * self.d + self.d * self.d

    def __truediv__(self, other: Eisenstein | Rational) -> Eisenstein:
        o = Eisenstein.coerce(other)
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(zeta_3)")
        num = self * o.conj()
        return Eisenstein(num.c / n, num.d / n)

    def is_integral(self) -> bool:
        return self.c.denominator == 1 and self.d.denominator == 1

    def denominator(self) -> int:
        """Least positive ``n`` with ``n*self`` in Z[zeta_3]."""
        from math import lcm

        return lcm(self.c.denominator, self.d.denominator)

    def __bool__(self) -> bool:
        return bool(self.c) or bool(self.d)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.d == 0 and self.c == other
        if isinstance(other, Eisenstein):
            return self.c == other.c and self.d == other.d
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.c, self.d))

    def __str__(self) -> str:
        if self.d == 0:
            return str(self.c)
        return f"{self.c}{'+' if self.d >= 0 else '-'}{abs(self.d)}*zeta3"


ZETA3 = Eisenstein(0, 1)
SQRT_MINUS_3 = Eisenstein(1, 2)  # 1 + 2*zeta3


def eisenstein_mul(x: Eisenstein, y: Eisenstein) -> Eisenstein:
    return x * y


class Matrix3:
    """Immutable 3x3 matrix over Q(zeta_3)."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[Eisenstein | Rational]]) -> None:
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise ValueError("Matrix3 needs 3 rows of 3 entries")
        self.rows: tuple[tuple[Eisenstein, ...], ...] = tuple(
            tuple(Eisenstein.coerce(x) for x in r) for r in rows
        )

    @classmethod
    def identity(cls) -> Matrix3:
        return cls.scalar(1)

    @classmethod
    def scalar(cls, q: Eisenstein | Rational) -> Matrix3:
        q = Eisenstein.coerce(q)
        z = Eisenstein()
        return cls([[q if i == j else z for j in range(3)] for i in range(3)])

    @classmethod
    def zero(cls) -> Matrix3:
        return cls.scalar(0)

    def __getitem__(self, ij: tuple[int, int]) -> Eisenstein:
        i, j = ij
        return self.rows[i][j]

    def entries(self) -> Iterable[tuple[int, int, Eisenstein]]:
        for i, row in enumerate(self.rows):
            for j, x in enumerate(row):
                yield i, j, x

    def __add__(self, other: Matrix3) -> Matrix3:
        return Matrix3([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: Matrix3) -> Matrix3:
        return Matrix3([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> Matrix3:
        return Matrix3([[-a for a in r] for r in self.rows])

    def scale(self, q: Eisenstein | Rational) -> Matrix3:
        q = Eisenstein.coerce(q)
        return Matrix3([[q * a for a in r] for r in self.rows])

    def __matmul__(self, other: Matrix3) -> Matrix3:
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for col in cols:
                acc = Eisenstein()
                for a, b in zip(r, col):
                    acc = acc + a * b
                row.append(acc)
            out.append(row)
        return Matrix3(out)

    def __mul__(self, other: Matrix3 | Eisenstein | Rational) -> Matrix3:
        if isinstance(other, Matrix3):
            return self @ other
        return self.scale(other)

    __rmul__ = scale

    def trace(self) -> Eisenstein:
        return self.rows[0][0] + self.rows[1][1] + self.rows[2][2]

    def is_zero(self) -> bool:
        return not any(x for _, _, x in self.entries())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix3):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix3([{body}])"


def matrix3_power(m: Matrix3, k: int) -> Matrix3:
    if k < 0:
        raise ValueError("negative exponent")
    out = Matrix3.identity()
    base = m
    while k:
        if k & 1:
            out = out @ base
        base = base @ base
        k >>= 1
    return out
