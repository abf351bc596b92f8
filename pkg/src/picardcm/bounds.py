"""Candidate enumeration for N_mu and the certified prime set 6*N_mu.

For a totally real ``mu`` in Z + 2O generating K+, every pair ``(x, a)`` with
``|x| <= sqrt(t2)`` and ``0 < a <= (t2 - x^2)/2`` and every ``m in {1, 2}``
gives the integer matrix

    iota(mu) = [[x, a, b], [1, 0, e], [0, 1, f]]

and a polarization determinant ``n``.  Pairs whose matrices violate
positivity or the Z[zeta_3]-integrality condition on a basis of Z + 2O are
discarded; the surviving ``n`` values multiply to N_mu.
"""
from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import isqrt, lcm
from typing import Iterable, Sequence

from .exact import Eisenstein, FactoredNumber, Matrix3, factored_product, factorize
from .fields import (
    CubicField,
    FieldElement,
    FieldError,
    OrderBasis,
    SexticElement,
    elem_minpoly,
    embed_real,
    express_in_power_basis,
    maximal_sextic_order,
    z_plus_2O,
)


class BoundError(ValueError):
    """Invalid input to the N_mu computation."""


@dataclass(frozen=True)
class MuData:
    """Coefficients of mu^3 - t1 mu^2 + a1 mu - N = 0."""

    t1: int
    a1: int
    N: int

    @property
    def t2(self) -> int:
        return self.t1 * self.t1 - 2 * self.a1

    @classmethod
    def from_element(cls, mu: FieldElement) -> MuData:
        poly = elem_minpoly(mu)
        if len(poly) != 4:
            raise BoundError("mu generates no cubic field")
        c0, c1, c2, _ = poly
        if any(c.denominator != 1 for c in (c0, c1, c2)):
            raise BoundError("mu is not an algebraic integer")
        return cls(t1=int(-c2), a1=int(c1), N=int(-c0))

    def minpoly(self) -> tuple[int, int, int, int]:
        """Ascending coefficients of X^3 - t1 X^2 + a1 X - N."""
        return (-self.N, self.a1, -self.t1, 1)

    def validate(self) -> None:
        c0, c1, c2, _ = self.minpoly()
        disc = c2 * c2 * c1 * c1 - 4 * c1**3 - 4 * c2**3 * c0 - 27 * c0 * c0 + 18 * c2 * c1 * c0
        if disc <= 0:
            raise BoundError("minimal polynomial of mu is not totally real and separable")
        if self.t2 < 2:
            raise BoundError("t2 < 2 is impossible for a totally real cubic integer")


@dataclass(frozen=True)
class CandidateTuple:
    m: int
    x: int
    a: int
    b: int
    e: int
    f: int
    alpha: int
    beta: int
    gamma: int
    n: int
    survived: bool = True
    reason: str | None = None
    counted: bool = False

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "x": self.x,
            "a": self.a,
            "n": str(self.n),
            "survived": self.survived,
            "reason": self.reason,
            "counted": self.counted,
        }


@dataclass
class BoundCertificate:
    mu: MuData
    tuples: list[CandidateTuple]
    N_mu: FactoredNumber
    six_N_mu: FactoredNumber
    prime_set: list[int]
    theorem_bound: int
    mu_coords: tuple[Fraction, ...] | None = None
    extra: dict = field(default_factory=dict)

    @property
    def survivors(self) -> list[CandidateTuple]:
        return [t for t in self.tuples if t.survived]

    def to_json(self) -> dict:
        return {
            "mu_minpoly": [str(c) for c in self.mu.minpoly()],
            "t2": str(self.mu.t2),
            "tuples": [t.to_json() for t in self.tuples],
            "N_mu": self.N_mu.to_json(),
            "six_N_mu": self.six_N_mu.to_json(),
            "prime_set": self.prime_set,
            "t2_cubed": str(self.theorem_bound),
        }


def derive_efb(mu: MuData, x: int, a: int) -> tuple[int, int, int]:
    """(e, f, b) forced by the Cayley-Hamilton identity for iota(mu)."""
    t1, a1, N = mu.t1, mu.a1, mu.N
    f = t1 - x
    e = -(a1 + x * x + a - t1 * x)
    b = N - (x**3 - t1 * x * x + 2 * x * a + a1 * x - t1 * a)
    return e, f, b


def iota_mu(x: int, a: int, b: int, e: int, f: int) -> Matrix3:
    return Matrix3([[x, a, b], [1, 0, e], [0, 1, f]])


def make_candidate(mu: MuData, m: int, x: int, a: int) -> CandidateTuple:
    t2 = mu.t2
    if m not in (1, 2):
        raise BoundError(f"m must be 1 or 2, got {m}")
    if x * x > t2 or a <= 0 or 2 * a > t2 - x * x:
        raise BoundError(f"(x, a) = ({x}, {a}) outside the box for t2 = {t2}")
    e, f, b = derive_efb(mu, x, a)
    alpha, beta = m * a, m * b
    gamma = alpha * e + beta * f
    n = alpha * gamma - beta * beta
    ok = gamma > 0 and n > 0
    return CandidateTuple(m, x, a, b, e, f, alpha, beta, gamma, n, ok, None if ok else "nonpositive")


def theorem_bounds_for_mu(mu: MuData) -> int:
    return mu.t2**3


# --------------------------------------------------------------------------
# integrality
# --------------------------------------------------------------------------
@dataclass(frozen=True)
class _IntegralityData:
    """Basis of Z+2O written in the mu-power basis with a common denominator.

    Each basis element ``w`` becomes ``(c0, c1, c2, d0, d1, d2)`` integers with
    ``w = (sum c_i mu^i + zeta * sum d_i mu^i) / den``.
    """

    den: int
    rows: tuple[tuple[int, ...], ...]


def _integrality_data(basis: Sequence[SexticElement], mu: FieldElement) -> _IntegralityData:
    rat = []
    for w in basis:
        c = express_in_power_basis(w, mu)
        rat.append([c[i][0] for i in range(3)] + [c[i][1] for i in range(3)])
    den = 1
    for r in rat:
        for q in r:
            den = lcm(den, q.denominator)
    rows = tuple(tuple(int(q * den) for q in r) for r in rat)
    return _IntegralityData(den, rows)


def _int_matmul(p: list[list[int]], q: list[list[int]]) -> list[list[int]]:
    return [[sum(p[i][k] * q[k][j] for k in range(3)) for j in range(3)] for i in range(3)]


def _check_integrality(data: _IntegralityData, m1: list[list[int]], m2: list[list[int]], n: int) -> str | None:
    """None if every basis image lies in (1/n)Z[zeta] with integral top row."""
    den = data.den
    if den == 1:
        return None
    for k, r in enumerate(data.rows):
        for half, (c0, c1, c2) in enumerate((r[:3], r[3:])):
            for i in range(3):
                for j in range(3):
                    v = c0 * (i == j) + c1 * m1[i][j] + c2 * m2[i][j]
                    # entry = v / den must lie in (1/n)Z, and in Z on the top row
                    if (n * v) % den or (i == 0 and v % den):
                        part = "zeta" if half else "rational"
                        return f"integrality: basis element {k}, entry ({i},{j}), {part} part {Fraction(v, den)}"
    return None


def iota_of(w: SexticElement, mu: FieldElement, m: Matrix3) -> Matrix3:
    """iota(w) for w in K, given iota(mu) = m and iota(zeta) = zeta * I."""
    c = express_in_power_basis(w, mu)
    out = Matrix3.zero()
    powers = [Matrix3.identity(), m, m @ m]
    for j, zj in enumerate((Eisenstein(1), Eisenstein(0, 1))):
        part = Matrix3.zero()
        for i in range(3):
            if c[i][j]:
                part = part + powers[i].scale(c[i][j])
        out = out + part.scale(zj)
    return out


def integrality_filter(
    cand: CandidateTuple, basis: Sequence[SexticElement], mu: FieldElement
) -> tuple[bool, str | None]:
    """Check iota(w) for every basis element w; returns (accepted, witness)."""
    data = _integrality_data(basis, mu)
    m1 = [[cand.x, cand.a, cand.b], [1, 0, cand.e], [0, 1, cand.f]]
    witness = _check_integrality(data, m1, _int_matmul(m1, m1), cand.n)
    return witness is None, witness


# --------------------------------------------------------------------------
# enumeration
# --------------------------------------------------------------------------
def candidate_box(t2: int) -> list[tuple[int, int]]:
    """All (x, a) with |x| <= sqrt(t2) and 0 < a <= (t2 - x^2)/2; x outer, a inner."""
    r = isqrt(t2)
    return [(x, a) for x in range(-r, r + 1) for a in range(1, (t2 - x * x) // 2 + 1)]


def _evaluate_pair(mu: MuData, data: _IntegralityData, x: int, a: int) -> list[CandidateTuple]:
    out = []
    m1 = None
    for m in (1, 2):
        cand = make_candidate(mu, m, x, a)
        if cand.survived:
            if m1 is None:
                m1 = [[x, a, cand.b], [1, 0, cand.e], [0, 1, cand.f]]
                m2 = _int_matmul(m1, m1)
            witness = _check_integrality(data, m1, m2, cand.n)
            if witness is not None:
                cand = replace(cand, survived=False, reason=witness)
        out.append(cand)
    return out


def _evaluate_chunk(args) -> list[CandidateTuple]:
    mu, data, pairs = args
    out = []
    for x, a in pairs:
        out.extend(_evaluate_pair(mu, data, x, a))
    return out


def _mark_counted(tuples: list[CandidateTuple]) -> list[CandidateTuple]:
    """Each (x, a) contributes the n of its largest surviving m."""
    best: dict[tuple[int, int], int] = {}
    for i, t in enumerate(tuples):
        if t.survived:
            j = best.get((t.x, t.a))
            if j is None or tuples[j].m < t.m:
                best[(t.x, t.a)] = i
    chosen = set(best.values())
    return [
        replace(t, counted=True) if i in chosen else t for i, t in enumerate(tuples)
    ]


def evaluate_candidates(
    mu: MuData,
    basis: Sequence[SexticElement],
    mu_elem: FieldElement,
    parallel: int = 1,
    shuffle_seed: int | None = None,
) -> list[CandidateTuple]:
    """Evaluate every (m, x, a) in the box; result is sorted (x, a, m) regardless of schedule."""
    data = _integrality_data(basis, mu_elem)
    pairs = candidate_box(mu.t2)
    if shuffle_seed is not None:
        random.Random(shuffle_seed).shuffle(pairs)
    if parallel > 1 and len(pairs) > 1:
        size = max(1, len(pairs) // (4 * parallel))
        chunks = [(mu, data, pairs[i : i + size]) for i in range(0, len(pairs), size)]
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            results = [t for chunk in pool.map(_evaluate_chunk, chunks) for t in chunk]
    else:
        results = _evaluate_chunk((mu, data, pairs))
    results.sort(key=lambda t: (t.x, t.a, t.m))
    return _mark_counted(results)


def certificate_from_tuples(mu: MuData, tuples: list[CandidateTuple]) -> BoundCertificate:
    n_mu = factored_product(factorize(t.n) for t in tuples if t.counted)
    six = n_mu * factorize(6)
    return BoundCertificate(
        mu=mu,
        tuples=tuples,
        N_mu=n_mu,
        six_N_mu=six,
        prime_set=six.primes(),
        theorem_bound=theorem_bounds_for_mu(mu),
    )


def _default_order(field_: CubicField) -> OrderBasis:
    return maximal_sextic_order(field_)


def z2o_basis(order: OrderBasis) -> list[SexticElement]:
    zo = z_plus_2O(order)
    return [zo.element(i) for i in range(zo.rank)]


def check_mu(mu: FieldElement, order: OrderBasis) -> MuData:
    """Validate mu against the order: integral, non-rational, in Z + 2O."""
    if mu.is_rational():
        raise BoundError("mu generates no cubic field")
    if order.algebra.base != mu.field:
        raise BoundError("mu and the order live in different fields")
    if not z_plus_2O(order).contains(embed_real(mu)):
        raise BoundError("mu is not in Z + 2O")
    data = MuData.from_element(mu)
    data.validate()
    return data


def compute_N_mu(
    mu: FieldElement,
    order: OrderBasis | None = None,
    parallel: int = 1,
    basis: Sequence[SexticElement] | None = None,
    shuffle_seed: int | None = None,
) -> BoundCertificate:
    """Certified N_mu for ``mu`` and the sextic order (default: the maximal order)."""
    try:
        order = order if order is not None else _default_order(mu.field)
    except FieldError as exc:
        raise BoundError(str(exc)) from exc
    data = check_mu(mu, order)
    basis = list(basis) if basis is not None else z2o_basis(order)
    tuples = evaluate_candidates(data, basis, mu, parallel=parallel, shuffle_seed=shuffle_seed)
    cert = certificate_from_tuples(data, tuples)
    cert.mu_coords = mu.coords
    return cert


def naive_survivors(mu: FieldElement, order: OrderBasis) -> set[tuple[int, int, int, int]]:
    """Reference enumeration by the plain double loop using Matrix3 arithmetic.

    Independent of the integer fast path: builds iota(w) as Eisenstein matrices
    and tests entries directly.
    """
    data = MuData.from_element(mu)
    basis = z2o_basis(order)
    t2 = data.t2
    out = set()
    x = -t2
    while x <= t2:
        if x * x <= t2:
            a = 1
            while 2 * a <= t2 - x * x:
                e, f, b = derive_efb(data, x, a)
                mat = iota_mu(x, a, b, e, f)
                for m in (1, 2):
                    alpha, beta = m * a, m * b
                    gamma = alpha * e + beta * f
                    n = alpha * gamma - beta * beta
                    if gamma <= 0 or n <= 0:
                        continue
                    good = True
                    for w in basis:
                        img = iota_of(w, mu, mat)
                        for i, j, entry in img.entries():
                            if not (entry * n).is_integral() or (i == 0 and not entry.is_integral()):
                                good = False
                    if good:
                        out.add((m, x, a, n))
                a += 1
        x += 1
    return out


def iter_primes_with_bound(cert: BoundCertificate) -> Iterable[tuple[int, bool]]:
    limit = max(3, cert.theorem_bound)
    for p in cert.prime_set:
        yield p, p <= limit
