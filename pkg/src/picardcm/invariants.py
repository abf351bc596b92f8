"""Picard curve invariants, absolute denominators, reduction types, class polynomials.

A Picard curve over Q is ``y^3 = x^4 + a x^2 + b x + c``.  Scaling
``(a, b, c) -> (l^6 a, l^9 b, l^12 c)`` gives isomorphic curves, so all
invariants here are weight-zero quotients.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .bounds import BoundCertificate
from .exact import FactoredNumber, factor_int, factored_lcm, factorize, is_prime, padic_valuation


class InvariantError(ValueError):
    """Invalid curve or invariant input."""


def _q(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def _disc(a: Fraction, b: Fraction, c: Fraction) -> Fraction:
    return (
        -4 * a**3 * b**2
        + 16 * a**4 * c
        - 27 * b**4
        + 144 * a * b**2 * c
        - 128 * a**2 * c**2
        + 256 * c**3
    )


@dataclass(frozen=True)
class PicardCurve:
    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self) -> None:
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, _q(getattr(self, name)))
        if _disc(self.a, self.b, self.c) == 0:
            raise InvariantError("singular model: discriminant is zero")

    @classmethod
    def from_json(cls, data: dict) -> PicardCurve:
        try:
            return cls(Fraction(str(data["a"])), Fraction(str(data["b"])), Fraction(str(data["c"])))
        except (KeyError, ValueError, ZeroDivisionError) as exc:
            if isinstance(exc, InvariantError):
                raise
            raise InvariantError(f"bad curve record: {exc}") from exc

    def to_json(self) -> dict:
        return {"a": str(self.a), "b": str(self.b), "c": str(self.c)}

    def scale(self, lam) -> PicardCurve:
        lam = _q(lam)
        return PicardCurve(lam**6 * self.a, lam**9 * self.b, lam**12 * self.c)


def discriminant(curve: PicardCurve) -> Fraction:
    return _disc(curve.a, curve.b, curve.c)


@dataclass(frozen=True)
class InvariantVector:
    """All invariant families; a family is ``None`` where its denominator vanishes."""

    delta: Fraction
    j1: Fraction | None = None
    j2: Fraction | None = None
    j3: Fraction | None = None
    kw1: Fraction | None = None
    kw2: Fraction | None = None
    i1: Fraction | None = None
    i2: Fraction | None = None
    i3: Fraction | None = None
    i4: Fraction | None = None
    i5: Fraction | None = None

    @property
    def absent(self) -> list[str]:
        out = []
        if self.j1 is None:
            out.append("j (b = 0)")
        if self.kw1 is None:
            out.append("koike-weng (a = 0)")
        return out

    def to_json(self) -> dict:
        names = ("delta", "j1", "j2", "j3", "kw1", "kw2", "i1", "i2", "i3", "i4", "i5")
        out = {k: (None if getattr(self, k) is None else str(getattr(self, k))) for k in names}
        out["absent"] = self.absent
        return out


def invariants(curve: PicardCurve) -> InvariantVector:
    a, b, c = curve.a, curve.b, curve.c
    d = discriminant(curve)
    vals: dict[str, Fraction] = {}
    if b:
        vals.update(j1=a**3 / b**2, j2=a * c / b**2, j3=c**3 / b**4)
    if a:
        vals.update(kw1=b**2 / a**3, kw2=c / a**2)
    vals.update(i1=a**6 / d, i2=a**3 * b**2 / d, i3=a**4 * c / d, i4=b**4 / d, i5=c**3 / d)
    return InvariantVector(delta=d, **vals)


# --------------------------------------------------------------------------
# denominators
# --------------------------------------------------------------------------
@dataclass(frozen=True)
class AbsoluteDenominators:
    den_abs: FactoredNumber | None
    den_KW_abs: FactoredNumber | None
    den_Delta_abs: FactoredNumber

    def to_json(self) -> dict:
        def enc(x):
            return None if x is None else x.to_json()

        return {
            "den_abs": enc(self.den_abs),
            "den_KW_abs": enc(self.den_KW_abs),
            "den_Delta_abs": self.den_Delta_abs.to_json(),
        }


def _den_factors(q: Fraction) -> dict[int, int]:
    return factor_int(q.denominator) if q.denominator > 1 else {}


def _weighted_den(pairs: Sequence[tuple[Fraction, Fraction | int]]) -> FactoredNumber:
    """prod p^max(v_p(den(q)) / w) over the given (q, w)."""
    exps: dict[int, Fraction] = {}
    for q, w in pairs:
        for p, e in _den_factors(q).items():
            exps[p] = max(exps.get(p, Fraction(0)), Fraction(e) / w)
    return FactoredNumber(exps)


def den_abs_closed_form(curve: PicardCurve) -> FactoredNumber:
    """prod p^(v_p(b) - min(6 v_p(a), 4 v_p(b), 3 v_p(c)) / 4)."""
    a, b, c = curve.a, curve.b, curve.c
    if not b:
        raise InvariantError("den_abs needs b != 0")
    primes: set[int] = set()
    for q in (a, b, c):
        if q:
            primes.update(factor_int(q.numerator))
            primes.update(factor_int(q.denominator))
    exps = {}
    for p in primes:
        vals = [4 * padic_valuation(b, p)]
        if a:
            vals.append(6 * padic_valuation(a, p))
        if c:
            vals.append(3 * padic_valuation(c, p))
        exps[p] = padic_valuation(b, p) - Fraction(min(vals), 4)
    return FactoredNumber(exps)


# den(b^2/a^3) and den(c/a^2) are powers of a; dividing by 2 and 4/3 puts both
# on the weight-9 scale of b, the scale of den_abs.
KW_WEIGHTS = (Fraction(2), Fraction(4, 3))
KW_WEIGHTS_A_SCALE = (Fraction(3), Fraction(2))


def absolute_denominators(curve: PicardCurve, kw_weights=KW_WEIGHTS) -> AbsoluteDenominators:
    inv = invariants(curve)
    den_abs = None if inv.j1 is None else _weighted_den([(inv.j1, 2), (inv.j3, 4)])
    w1, w2 = kw_weights
    den_kw = None if inv.kw1 is None else _weighted_den([(inv.kw1, w1), (inv.kw2, w2)])
    den_delta = factored_lcm(*(FactoredNumber(_den_factors(q)) for q in (inv.i1, inv.i4, inv.i5)))
    return AbsoluteDenominators(den_abs, den_kw, den_delta)


def den_delta_all(curve: PicardCurve) -> FactoredNumber:
    """lcm of the denominators of all five i-invariants."""
    inv = invariants(curve)
    return factored_lcm(
        *(FactoredNumber(_den_factors(q)) for q in (inv.i1, inv.i2, inv.i3, inv.i4, inv.i5))
    )


# --------------------------------------------------------------------------
# reduction type
# --------------------------------------------------------------------------
@dataclass(frozen=True)
class ReductionVerdict:
    p: int
    case: int | None
    valuations: tuple[int | None, int | None, int | None]
    a_bar_squared: int | None = None
    reason: str = ""

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "case": self.case if self.case is not None else "none",
            "valuations": {"a": self.valuations[0], "b": self.valuations[1], "c": self.valuations[2]},
            "a_bar_squared_mod_p": self.a_bar_squared,
            "reason": self.reason,
        }


def classify_reduction(curve: PicardCurve, p: int) -> ReductionVerdict:
    """Reduction type at a prime p >= 5 of a curve whose invariants may have p in the denominator.

    The minimum m0 = min(v(a)/2, v(b)/3, v(c)/4) decides: attained at v(b)/3 means
    p is not a denominator prime; attained at v(c)/4 gives case 1 or 3 after
    scaling to c = 1 (then a_bar^2 = a^2/c mod p); otherwise case 2.
    """
    if p in (2, 3):
        raise InvariantError("primes dividing 6 are excluded")
    if p < 2 or not is_prime(p):
        raise InvariantError(f"{p} is not prime")
    a, b, c = curve.a, curve.b, curve.c
    if not b:
        raise InvariantError("b = 0 is excluded")
    va = padic_valuation(a, p) if a else None
    vb = padic_valuation(b, p)
    vc = padic_valuation(c, p) if c else None
    weights = {"a": None if va is None else Fraction(va, 2), "b": Fraction(vb, 3), "c": None if vc is None else Fraction(vc, 4)}
    m0 = min(w for w in weights.values() if w is not None)
    vals = (va, vb, vc)
    if weights["b"] == m0:
        return ReductionVerdict(p, None, vals, reason="min attained by v(b)/3")
    if weights["c"] == m0:
        a2c = a * a / c
        residue = (a2c.numerator * pow(a2c.denominator, -1, p)) % p
        gap = a * a - 4 * c
        if a and (gap == 0 or padic_valuation(gap, p) > vc):
            return ReductionVerdict(p, 1, vals, residue, "min attained by v(c)/4 and a_bar = +-2")
        return ReductionVerdict(p, 3, vals, residue, "min attained by v(c)/4 and a_bar != +-2")
    return ReductionVerdict(p, 2, vals, reason="min attained only by v(a)/2")


# --------------------------------------------------------------------------
# reconstruction and isomorphism
# --------------------------------------------------------------------------
def reconstruct(j1, j2) -> PicardCurve:
    """The model y^3 = x^4 + j1 x^2 + j1 x + j1 j2."""
    j1, j2 = _q(j1), _q(j2)
    if j1 == 0:
        raise InvariantError("reconstruction needs j1 != 0")
    try:
        return PicardCurve(j1, j1, j1 * j2)
    except InvariantError as exc:
        raise InvariantError(f"reconstructed model is singular for (j1, j2) = ({j1}, {j2})") from exc


def geometric_isomorphism(c1: PicardCurve, c2: PicardCurve) -> bool:
    if not c1.b or not c2.b:
        raise InvariantError("b = 0 is excluded")
    if (c1.a == 0) != (c2.a == 0):
        return False
    i1, i2 = invariants(c1), invariants(c2)
    if c1.a:
        return (i1.j1, i1.j2) == (i2.j1, i2.j2)
    return (c1.c == 0) == (c2.c == 0) and i1.j3 == i2.j3


# --------------------------------------------------------------------------
# class polynomials
# --------------------------------------------------------------------------
Poly = list[Fraction]  # ascending coefficients


def poly_mul(f: Poly, g: Poly) -> Poly:
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, x in enumerate(f):
        for j, y in enumerate(g):
            out[i + j] += x * y
    return out


def poly_eval(f: Poly, x) -> Fraction:
    acc = Fraction(0)
    for coeff in reversed(f):
        acc = acc * x + coeff
    return acc


def poly_deriv(f: Poly) -> Poly:
    return [i * c for i, c in enumerate(f)][1:] or [Fraction(0)]


def _trim(f: Poly) -> Poly:
    while len(f) > 1 and f[-1] == 0:
        f = f[:-1]
    return f


def _den(f: Poly) -> int:
    return lcm(*(c.denominator for c in f)) if f else 1


@dataclass(frozen=True)
class ClassPolyPair:
    H1: tuple[Fraction, ...]
    H2hat: tuple[Fraction, ...]

    @property
    def den_H1(self) -> int:
        return _den(list(self.H1))

    @property
    def den_H2hat(self) -> int:
        return _den(list(self.H2hat))

    def recover_j2(self, j1) -> Fraction:
        return poly_eval(list(self.H2hat), j1) / poly_eval(poly_deriv(list(self.H1)), j1)

    def to_json(self) -> dict:
        return {
            "H1": [str(c) for c in self.H1],
            "H2hat": [str(c) for c in self.H2hat],
            "den_H1": factorize(self.den_H1).to_json(),
            "den_H2hat": factorize(self.den_H2hat).to_json(),
        }


def class_polynomials(points: Iterable[tuple]) -> ClassPolyPair:
    pts = [(_q(j1), _q(j2)) for j1, j2 in points]
    if not pts:
        raise InvariantError("no points")
    if len({j1 for j1, _ in pts}) != len(pts):
        raise InvariantError("repeated j1 values")
    h1: Poly = [Fraction(1)]
    for j1, _ in pts:
        h1 = poly_mul(h1, [-j1, Fraction(1)])
    h2: Poly = [Fraction(0)] * len(pts)
    for k, (_, j2) in enumerate(pts):
        term: Poly = [j2]
        for i, (other, _) in enumerate(pts):
            if i != k:
                term = poly_mul(term, [-other, Fraction(1)])
        for i, coeff in enumerate(term):
            h2[i] += coeff
    return ClassPolyPair(tuple(h1), tuple(_trim(h2)))


# --------------------------------------------------------------------------
# comparison with a certificate
# --------------------------------------------------------------------------
@dataclass
class VerificationReport:
    prime_checks: dict[int, bool] = field(default_factory=dict)
    ratios: dict[int, tuple[Fraction, Fraction]] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.prime_checks.values())

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "primes": {str(p): ok for p, ok in self.prime_checks.items()},
            "valuation_ratios": {
                str(p): {"v_den": str(v), "third_v_N_mu": str(t)} for p, (v, t) in self.ratios.items()
            },
        }


def verify_against_certificate(dens: Sequence[FactoredNumber], cert: BoundCertificate) -> VerificationReport:
    """Every denominator prime must divide 6 N_mu; exponent ratios are reported only."""
    report = VerificationReport()
    allowed = set(cert.prime_set)
    worst: dict[int, Fraction] = {}
    for d in dens:
        for p in d.primes():
            worst[p] = max(worst.get(p, Fraction(0)), d.exponent(p))
    for p in sorted(worst):
        report.prime_checks[p] = p in allowed
        report.ratios[p] = (worst[p], cert.N_mu.exponent(p) / 3)
    return report
