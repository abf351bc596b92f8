"""Signed products of prime powers with rational exponents."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .integers import factor_int, is_prime

_SUPERSCRIPT = str.maketrans("0123456789-/", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻ᐟ")


def _clean(factors: Mapping[int, Fraction | int]) -> dict[int, Fraction]:
    return {int(p): Fraction(e) for p, e in sorted(factors.items()) if e != 0}


@dataclass(frozen=True)
class FactoredNumber:
    """``sign * prod(p**e)``; exponents may be fractions (e.g. ``(2**3*7**2)**(1/2)``)."""

    factors: dict[int, Fraction] = field(default_factory=dict)
    sign: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", _clean(self.factors))
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        for p in self.factors:
            if p < 2 or not is_prime(p):
                raise ValueError(f"{p} is not prime")

    @classmethod
    def from_int(cls, n: int) -> FactoredNumber:
        if n == 0:
            raise ValueError("0 has no factorization")
        return cls(factor_int(n), 1 if n > 0 else -1)

    @classmethod
    def from_rational(cls, q: Fraction | int) -> FactoredNumber:
        q = Fraction(q)
        num = cls.from_int(q.numerator)
        den = factor_int(q.denominator)
        return num * cls({p: -e for p, e in den.items()})

    @classmethod
    def parse(cls, text: str) -> FactoredNumber:
        """Read strings such as ``-(3^3*5)^2/(2^15*71^2)`` or ``(2^3*7^2)^(1/2)``."""
        return _Parser(text).run()

    @classmethod
    def one(cls) -> FactoredNumber:
        return cls({})

    # --- queries -----------------------------------------------------------
    def primes(self, positive_only: bool = True) -> list[int]:
        return [p for p, e in self.factors.items() if e > 0 or not positive_only]

    def exponent(self, p: int) -> Fraction:
        return self.factors.get(p, Fraction(0))

    def is_integer(self) -> bool:
        return all(e.denominator == 1 and e > 0 for e in self.factors.values())

    def to_int(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self} is not an integer")
        out = self.sign
        for p, e in self.factors.items():
            out *= p ** int(e)
        return out

    def to_fraction(self) -> Fraction:
        if any(e.denominator != 1 for e in self.factors.values()):
            raise ValueError(f"{self} is not rational")
        out = Fraction(self.sign)
        for p, e in self.factors.items():
            out *= Fraction(p) ** int(e)
        return out

    def approx(self) -> float:
        out = float(self.sign)
        for p, e in self.factors.items():
            out *= float(p) ** float(e)
        return out

    def divides(self, other: FactoredNumber) -> bool:
        return all(e <= other.exponent(p) for p, e in self.factors.items())

    # --- arithmetic --------------------------------------------------------
    def __mul__(self, other: FactoredNumber) -> FactoredNumber:
        merged = dict(self.factors)
        for p, e in other.factors.items():
            merged[p] = merged.get(p, 0) + e
        return FactoredNumber(merged, self.sign * other.sign)

    def __pow__(self, k: int | Fraction) -> FactoredNumber:
        k = Fraction(k)
        if self.sign < 0 and k.denominator != 1:
            raise ValueError("fractional power of a negative number")
        sign = self.sign if k.denominator == 1 and k.numerator % 2 else 1
        return FactoredNumber({p: e * k for p, e in self.factors.items()}, sign)

    def __truediv__(self, other: FactoredNumber) -> FactoredNumber:
        return self * FactoredNumber({p: -e for p, e in other.factors.items()}, other.sign)

    def __neg__(self) -> FactoredNumber:
        return FactoredNumber(self.factors, -self.sign)

    def __abs__(self) -> FactoredNumber:
        return FactoredNumber(self.factors, 1)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return other != 0 and self == FactoredNumber.from_int(other)
        if not isinstance(other, FactoredNumber):
            return NotImplemented
        return self.sign == other.sign and self.factors == other.factors

    def __hash__(self) -> int:
        return hash((self.sign, tuple(self.factors.items())))

    # --- formatting --------------------------------------------------------
    def __str__(self) -> str:
        if not self.factors:
            return "-1" if self.sign < 0 else "1"
        parts = []
        for p, e in self.factors.items():
            parts.append(str(p) if e == 1 else f"{p}^{e}")
        body = "*".join(parts)
        return f"-{body}" if self.sign < 0 else body

    def pretty(self) -> str:
        """Unicode rendering, e.g. ``2³·5·47``."""
        if not self.factors:
            return "-1" if self.sign < 0 else "1"
        parts = [str(p) if e == 1 else f"{p}{str(e).translate(_SUPERSCRIPT)}" for p, e in self.factors.items()]
        body = "·".join(parts)
        return f"-{body}" if self.sign < 0 else body

    def to_json(self) -> dict:
        return {"sign": self.sign, "factors": {str(p): str(e) for p, e in self.factors.items()}}

    @classmethod
    def from_json(cls, data: Mapping) -> FactoredNumber:
        return cls({int(p): Fraction(e) for p, e in data["factors"].items()}, int(data.get("sign", 1)))


def factored_mul(x: FactoredNumber, y: FactoredNumber) -> FactoredNumber:
    return x * y


def factored_pointwise_max(x: FactoredNumber, y: FactoredNumber) -> FactoredNumber:
    """Exponent-wise maximum of ``|x|`` and ``|y|`` (missing primes count as exponent 0)."""
    keys = set(x.factors) | set(y.factors)
    return FactoredNumber({p: max(x.exponent(p), y.exponent(p)) for p in keys})


def factored_lcm(*xs: FactoredNumber) -> FactoredNumber:
    """Least common multiple of absolute values; negative exponents are ignored."""
    out = FactoredNumber.one()
    for x in xs:
        out = factored_pointwise_max(out, FactoredNumber({p: e for p, e in x.factors.items() if e > 0}))
    return out


def factored_product(xs: Iterable[FactoredNumber]) -> FactoredNumber:
    out = FactoredNumber.one()
    for x in xs:
        out = out * x
    return out


_TOKEN = re.compile(r"\s*(\d+|[-*/^()])")


class _Parser:
    """Recursive descent over ``expr := [-] power (('*'|'/') power)*``."""

    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens: list[str] = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m:
                raise ValueError(f"cannot parse {self.text!r} at offset {pos}")
            self.tokens.append(m.group(1))
            pos = m.end()
        self.i = 0

    def _peek(self) -> str | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def _take(self, expected: str | None = None) -> str:
        tok = self._peek()
        if tok is None or (expected is not None and tok != expected):
            raise ValueError(f"cannot parse {self.text!r}: expected {expected or 'token'}, got {tok!r}")
        self.i += 1
        return tok

    def run(self) -> FactoredNumber:
        out = self._expr()
        if self._peek() is not None:
            raise ValueError(f"cannot parse {self.text!r}: trailing {self._peek()!r}")
        return out

    def _expr(self) -> FactoredNumber:
        neg = self._peek() == "-"
        if neg:
            self._take()
        out = self._power()
        while self._peek() in ("*", "/"):
            op = self._take()
            rhs = self._power()
            out = out * rhs if op == "*" else out / rhs
        return -out if neg else out

    def _power(self) -> FactoredNumber:
        base = self._atom()
        if self._peek() == "^":
            self._take()
            return base ** self._exponent()
        return base

    def _atom(self) -> FactoredNumber:
        if self._peek() == "(":
            self._take()
            inner = self._expr()
            self._take(")")
            return inner
        return FactoredNumber.from_int(int(self._take()))

    def _exponent(self) -> Fraction:
        if self._peek() != "(":
            return Fraction(int(self._take()))
        self._take()
        sign = -1 if self._peek() == "-" else 1
        if sign < 0:
            self._take()
        num = int(self._take())
        den = 1
        if self._peek() == "/":
            self._take()
            den = int(self._take())
        self._take(")")
        return Fraction(sign * num, den)
