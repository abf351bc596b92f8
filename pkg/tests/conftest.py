from fractions import Fraction

import pytest

from picardcm.fields import make_cubic_field, maximal_order, maximal_sextic_order

# (c0, c1, c2) for x^3 + c2 x^2 + c1 x + c0, and mu in power-basis coordinates
EXAMPLE_FIELDS = {
    1: ((1, -2, -1), (3, 0, -2)),
    2: ((-1, -4, -1), (5, 2, -2)),
    3: ((-8, -10, 1), (7, 1, -1)),
    4: ((-8, -14, -1), (1, -2, 0)),
    5: ((-28, -21, 0), (0, 2, 0)),
    6: ((-35, -21, 0), (28, 4, -2)),
    7: ((-26, -39, 0), (13, Fraction(3, 2), Fraction(-1, 2))),
    8: ((-183, -61, 0), (163, 18, -4)),
    9: ((-5, -22, -1), (Fraction(29, 3), 0, Fraction(-2, 3))),
}

_cache: dict = {}


def example_orders(i):
    if i not in _cache:
        poly, mu = EXAMPLE_FIELDS[i]
        f = make_cubic_field(*poly)
        _cache[i] = (f, maximal_order(f), maximal_sextic_order(f), f.element(mu))
    return _cache[i]


@pytest.fixture(params=sorted(EXAMPLE_FIELDS))
def example(request):
    return (request.param, *example_orders(request.param))


ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def record_criterion(number: int, ok: bool, detail: str = "") -> None:
    ACCEPTANCE[number] = (bool(ok), detail)
    print(f"criterion {number}: {'PASS' if ok else 'FAIL'} {detail}")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
