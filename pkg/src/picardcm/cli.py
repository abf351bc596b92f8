"""Command line entry point ``picardcm``.

Exit codes: 0 success, 1 verification mismatch, 2 validation error.
Rationals cross the boundary as strings ``p/q``.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .bounds import BoundError, compute_N_mu
from .exact import factorize
from .fields import (
    FieldError,
    make_cubic_field,
    maximal_order,
    maximal_sextic_order,
    order_from_json_basis,
)
from .invariants import (
    InvariantError,
    PicardCurve,
    absolute_denominators,
    class_polynomials,
    classify_reduction,
    invariants,
)
from .lattice import compute_B, find_mu, minkowski_bounds
from .reference import load_examples, verify_example

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID = 0, 1, 2


class ValidationError(ValueError):
    pass


# --------------------------------------------------------------------------
# parsing helpers
# --------------------------------------------------------------------------
def _rationals(text: str, count: int, what: str) -> list[Fraction]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != count:
        raise ValidationError(f"{what} needs {count} comma-separated values, got {len(parts)}")
    try:
        return [Fraction(p) for p in parts]
    except (ValueError, ZeroDivisionError) as exc:
        raise ValidationError(f"{what}: {exc}") from exc


def _field(text: str):
    coeffs = _rationals(text, 3, "--field-poly")
    if any(c.denominator != 1 for c in coeffs):
        raise ValidationError("--field-poly coefficients must be integers")
    return make_cubic_field(*(int(c) for c in coeffs))


def _read_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path} is not valid JSON: {exc.msg}") from exc


def _order(field_, path: str | None):
    if path is None:
        return maximal_sextic_order(field_)
    data = _read_json(path)
    if not isinstance(data, dict) or "order_basis" not in data:
        raise ValidationError('order file needs an "order_basis" key')
    try:
        rows = [[Fraction(str(x)) for x in row] for row in data["order_basis"]]
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ValidationError(f"bad order basis entry: {exc}") from exc
    return order_from_json_basis(field_, rows)


def _curve(path: str) -> PicardCurve:
    data = _read_json(path)
    if not isinstance(data, dict):
        raise ValidationError("curve file must hold a JSON object")
    return PicardCurve.from_json(data)


def _ids(text: str | None, known: Sequence[int]) -> list[int]:
    if text is None:
        return sorted(known)
    try:
        ids = [int(t) for t in text.split(",")]
    except ValueError as exc:
        raise ValidationError(f"--ids: {exc}") from exc
    unknown = [i for i in ids if i not in known]
    if unknown:
        raise ValidationError(f"unknown example ids {unknown}")
    return ids


def _elem_str(coords: Sequence[Fraction]) -> str:
    out = ""
    for c, mono in zip(coords, ("", "a", "a^2")):
        if not c:
            continue
        mag = abs(c)
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
        if out:
            out += f" {'-' if c < 0 else '+'} {body}"
        else:
            out = f"-{body}" if c < 0 else body
    return out or "0"


def _emit(payload, as_json: bool, table: str) -> None:
    if as_json:
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(table.rstrip("\n") + "\n")


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------
def cmd_bound(args) -> int:
    if args.alt_isogeny:
        raise ValidationError("--alt-isogeny: not implemented; the variant isogeny formulas are not available")
    if args.parallel < 1:
        raise ValidationError("--parallel must be at least 1")
    field_ = _field(args.field_poly)
    mu = field_.element(_rationals(args.mu, 3, "--mu"))
    order = _order(field_, args.order_basis)
    cert = compute_N_mu(mu, order, parallel=args.parallel)
    if args.t2 is not None and args.t2 != cert.mu.t2:
        raise ValidationError(f"--t2 {args.t2} disagrees with Tr(mu^2) = {cert.mu.t2}")
    survivors = [t for t in cert.tuples if t.counted]
    lines = [
        f"field      {field_}",
        f"mu         {_elem_str(mu.coords)}",
        f"minpoly    X^3 - ({cert.mu.t1})X^2 + ({cert.mu.a1})X - ({cert.mu.N})",
        f"t2         {cert.mu.t2}   (t2^3 = {cert.theorem_bound})",
        f"tuples     {len(cert.tuples)} evaluated, {len(survivors)} counted",
        f"N_mu       {cert.N_mu}",
        f"6*N_mu     {cert.six_N_mu}",
        f"primes     {' '.join(map(str, cert.prime_set))}",
    ]
    _emit(cert.to_json(), args.json, "\n".join(lines))
    return EXIT_OK


def cmd_find_mu(args) -> int:
    field_ = _field(args.field_poly)
    order_plus = maximal_order(field_)
    cands = find_mu(order_plus, t2_cap=args.cap)
    cap = args.cap if args.cap is not None else minkowski_bounds(order_plus.disc).t2_bound
    payload = {
        "disc": str(order_plus.disc),
        "t2_cap": str(cap),
        "candidates": [
            {
                "mu": [str(c) for c in m.mu.coords],
                "t2": str(m.t2),
                "minpoly": [str(m.t1), str(m.a1), str(m.N)],
            }
            for m in cands[: args.limit]
        ],
        "count": len(cands),
    }
    lines = [f"disc(O+) = {order_plus.disc}, cap t2 <= {cap}, {len(cands)} candidates", "t2    t1    a1    N    mu"]
    for m in cands[: args.limit]:
        lines.append(f"{m.t2:<5} {m.t1:<5} {m.a1:<5} {m.N:<5} {_elem_str(m.mu.coords)}")
    _emit(payload, args.json, "\n".join(lines))
    return EXIT_OK


def cmd_invariants(args) -> int:
    curve = _curve(args.curve)
    inv = invariants(curve)
    dens = absolute_denominators(curve)
    payload = {"curve": curve.to_json(), "invariants": inv.to_json(), "denominators": dens.to_json()}
    lines = [f"{k:<6} {v}" for k, v in inv.to_json().items() if k != "absent"]
    if inv.absent:
        lines.append(f"absent {', '.join(inv.absent)}")
    for k in ("den_abs", "den_KW_abs", "den_Delta_abs"):
        lines.append(f"{k:<14} {getattr(dens, k)}")
    _emit(payload, args.json, "\n".join(lines))
    return EXIT_OK


def cmd_classify(args) -> int:
    verdict = classify_reduction(_curve(args.curve), args.prime)
    label = "none" if verdict.case is None else f"case {verdict.case}"
    extra = f", a_bar^2 = {verdict.a_bar_squared} mod {verdict.p}" if verdict.case in (1, 3) else ""
    _emit(verdict.to_json(), args.json, f"p = {verdict.p}: {label} ({verdict.reason}{extra})")
    return EXIT_OK


def cmd_classpoly(args) -> int:
    data = _read_json(args.points)
    if not isinstance(data, list):
        raise ValidationError("points file must hold a JSON list")
    try:
        points = [(Fraction(str(p["j1"])), Fraction(str(p["j2"]))) for p in data]
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise ValidationError(f"bad point record: {exc}") from exc
    pair = class_polynomials(points)
    lines = [
        "H1     " + ", ".join(map(str, pair.H1)),
        "H2hat  " + ", ".join(map(str, pair.H2hat)),
        f"den(H1)    {factorize(pair.den_H1)}",
        f"den(H2hat) {factorize(pair.den_H2hat)}",
    ]
    _emit(pair.to_json(), args.json, "\n".join(lines))
    return EXIT_OK


def cmd_constant_b(args) -> int:
    field_ = _field(args.field_poly)
    order = _order(field_, args.order_basis)
    B, x = compute_B(order, primitive=not args.include_sqrt_minus_3)
    payload = {"B": str(B), "minimizer": [str(c) for c in x], "B10_over_8": str(Fraction(B**10, 8))}
    _emit(payload, args.json, f"B = {B}   B^10/8 ~ {B**10 / 8:.2g}")
    return EXIT_OK


def cmd_verify_examples(args) -> int:
    records = load_examples()
    ids = _ids(args.ids, list(records))
    reports = [verify_example(records[i], parallel=args.parallel) for i in ids]
    payload = {"passed": all(r.passed for r in reports), "examples": [r.to_json() for r in reports]}
    lines = []
    for r in reports:
        lines.append(f"example {r.example_id}: {'PASS' if r.passed else 'FAIL'}  ({r.seconds:.2f}s)")
        for c in r.checks:
            if not c.ok:
                lines.append(f"    {c.name}: {c.detail}")
    _emit(payload, args.json, "\n".join(lines))
    return EXIT_OK if payload["passed"] else EXIT_MISMATCH


# --------------------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="picardcm", description="Certified denominator primes for CM Picard curves.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    p = add("bound", cmd_bound, "compute N_mu and the prime set 6*N_mu")
    p.add_argument("--field-poly", required=True, help="c0,c1,c2 for x^3 + c2 x^2 + c1 x + c0")
    p.add_argument("--mu", required=True, help="q0,q1,q2 for q0 + q1 a + q2 a^2")
    p.add_argument("--order-basis", help="JSON file with a 6x6 order basis")
    p.add_argument("--t2", type=int, help="expected Tr(mu^2), checked against mu")
    p.add_argument("--parallel", type=int, default=1, help="worker processes")
    p.add_argument("--alt-isogeny", action="store_true", help="reserved")

    p = add("find-mu", cmd_find_mu, "list mu in Z + 2O+ of small trace")
    p.add_argument("--field-poly", required=True)
    p.add_argument("--cap", type=int, help="bound on Tr(mu^2); default is the Minkowski cap")
    p.add_argument("--limit", type=int, default=20, help="rows to show")

    p = add("invariants", cmd_invariants, "invariants and absolute denominators of a curve")
    p.add_argument("--curve", required=True, help='JSON file {"a": ..., "b": ..., "c": ...}')

    p = add("classify", cmd_classify, "reduction type at a prime p >= 5")
    p.add_argument("--curve", required=True)
    p.add_argument("--prime", type=int, required=True)

    p = add("classpoly", cmd_classpoly, "class polynomials from (j1, j2) points")
    p.add_argument("--points", required=True, help='JSON list of {"j1": ..., "j2": ...}')

    p = add("constant-B", cmd_constant_b, "minimal trace form on imaginary elements")
    p.add_argument("--field-poly", required=True)
    p.add_argument("--order-basis")
    p.add_argument(
        "--include-sqrt-minus-3",
        action="store_true",
        help="also allow rational multiples of 2*zeta+1 (gives 9 whenever zeta is in O)",
    )

    p = add("verify-examples", cmd_verify_examples, "recompute the shipped reference examples")
    p.add_argument("--ids", help="comma-separated ids, default all")
    p.add_argument("--parallel", type=int, default=1)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValidationError, FieldError, BoundError, InvariantError) as exc:
        sys.stderr.write(json.dumps({"error": str(exc), "command": args.command}) + "\n")
        return EXIT_INVALID


if __name__ == "__main__":
    raise SystemExit(main())
