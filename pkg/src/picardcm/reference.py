"""Shipped reference examples and the harness that recomputes them."""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from .bounds import BoundCertificate, compute_N_mu
from .exact import FactoredNumber
from .fields import make_cubic_field, maximal_order, maximal_sextic_order
from .invariants import (
    PicardCurve,
    absolute_denominators,
    invariants,
    reconstruct,
    verify_against_certificate,
)
from .lattice import compute_B, find_mu, minkowski_bounds

_RATIONAL_KEYS = ("j1", "j2", "j3", "kw1", "kw2", "i1", "i2", "i3")
_FACTORED_KEYS = ("N_mu", "den_abs", "den_KW_abs", "den_Delta_abs", "den_H1", "den_H2hat")


@dataclass(frozen=True)
class ExampleRecord:
    example_id: int
    field_poly: tuple[int, int, int]
    mu: tuple[Fraction, Fraction, Fraction]
    factored: dict[str, FactoredNumber]
    rationals: dict[str, Fraction]
    sources: dict[str, str]
    curve: PicardCurve | None = None
    b10_over_8: str | None = None


def _record(raw: dict) -> ExampleRecord:
    factored, rationals, sources = {}, {}, {}
    for key in _FACTORED_KEYS:
        if key in raw:
            factored[key] = FactoredNumber.parse(raw[key]["value"])
            sources[key] = raw[key]["source"]
    for key in _RATIONAL_KEYS:
        if key in raw:
            rationals[key] = FactoredNumber.parse(raw[key]["value"]).to_fraction()
            sources[key] = raw[key]["source"]
    curve = None
    if "curve" in raw:
        cr = raw["curve"]
        curve = PicardCurve(*(FactoredNumber.parse(cr[k]).to_fraction() for k in "abc"))
        sources["curve"] = cr["source"]
    b10 = raw.get("B10_over_8", {}).get("value")
    return ExampleRecord(
        example_id=int(raw["id"]),
        field_poly=tuple(int(c) for c in raw["field_poly"]),
        mu=tuple(Fraction(c) for c in raw["mu"]),
        factored=factored,
        rationals=rationals,
        sources=sources,
        curve=curve,
        b10_over_8=b10,
    )


def load_examples() -> dict[int, ExampleRecord]:
    text = resources.files("picardcm").joinpath("data/examples.json").read_text()
    return {r.example_id: r for r in map(_record, json.loads(text)["examples"])}


def matches_printed(value: Fraction, printed: str) -> bool:
    """True iff ``value`` rounds to the printed decimal, e.g. ``7.2e10`` or ``1.e18``."""
    mant, exp = printed.lower().split("e")
    digits = mant.replace(".", "")
    frac_digits = len(mant.split(".")[1]) if "." in mant else 0
    unit = Fraction(10) ** (int(exp) - frac_digits)
    target = int(digits) * unit
    return abs(Fraction(value) - target) * 2 <= unit


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class ExampleReport:
    example_id: int
    checks: list[Check] = field(default_factory=list)
    seconds: float = 0.0
    certificate: BoundCertificate | None = None

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(ok), detail))

    def to_json(self) -> dict:
        return {
            "id": self.example_id,
            "passed": self.passed,
            "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in self.checks],
        }


def _compare(report: ExampleReport, name: str, got, want) -> None:
    report.add(name, got == want, "" if got == want else f"got {got}, expected {want}")


def _check_curve(report: ExampleReport, rec: ExampleRecord, curve: PicardCurve, label: str) -> list[FactoredNumber]:
    inv = invariants(curve)
    for key, want in rec.rationals.items():
        _compare(report, f"{label}:{key}", getattr(inv, key), want)
    dens = absolute_denominators(curve)
    for key in ("den_abs", "den_KW_abs", "den_Delta_abs"):
        if key in rec.factored:
            _compare(report, f"{label}:{key}", getattr(dens, key), rec.factored[key])
    return [dens.den_abs] if dens.den_abs is not None else []


def verify_example(rec: ExampleRecord, parallel: int = 1, with_B: bool = True) -> ExampleReport:
    start = time.perf_counter()
    report = ExampleReport(rec.example_id)
    field_ = make_cubic_field(*rec.field_poly)
    order = maximal_sextic_order(field_)
    mu = field_.element(rec.mu)
    cert = compute_N_mu(mu, order, parallel=parallel)
    report.certificate = cert
    _compare(report, "N_mu", cert.N_mu, rec.factored["N_mu"])

    dens: list[FactoredNumber] = []
    if "j1" in rec.rationals:
        dens += _check_curve(report, rec, reconstruct(rec.rationals["j1"], rec.rationals["j2"]), "reconstructed")
    if rec.curve is not None:
        dens += _check_curve(report, rec, rec.curve, "model")
    dens += [rec.factored[k] for k in ("den_abs", "den_H1", "den_H2hat") if k in rec.factored]
    divis = verify_against_certificate(dens, cert)
    bad = [p for p, ok in divis.prime_checks.items() if not ok]
    report.add("divisibility", divis.passed, f"primes outside 6*N_mu: {bad}" if bad else "")

    limit = max(3, cert.theorem_bound)
    top = max(cert.prime_set)
    report.add("prime_bound", top <= limit, f"max prime {top}, t2^3 = {cert.theorem_bound}")
    order_plus = maximal_order(field_)
    cap = minkowski_bounds(order_plus.disc).t2_bound
    cands = find_mu(order_plus)
    report.add(
        "minkowski",
        bool(cands) and cands[0].t2 <= cap,
        f"minimal t2 {cands[0].t2 if cands else None}, cap {cap}",
    )
    if with_B and rec.b10_over_8 is not None:
        B, _ = compute_B(order)
        value = Fraction(B**10, 8)
        report.add("B", matches_printed(value, rec.b10_over_8), f"B = {B}, B^10/8 = {float(value):.3g}, printed {rec.b10_over_8}")
    report.seconds = time.perf_counter() - start
    return report
