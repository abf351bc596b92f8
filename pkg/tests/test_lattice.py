import itertools
import math
import random
from fractions import Fraction

import mpmath
import pytest

from conftest import example_orders
from picardcm.exact.linalg import inverse
from picardcm.fields import FieldError, OrderBasis, SexticField, conjugate, make_cubic_field, maximal_order, z_plus_2O
from picardcm.lattice import (
    compute_B,
    enumerate_short_vectors,
    find_mu,
    gram_of,
    imaginary_trace_form,
    is_positive_definite,
    minkowski_bounds,
    quadratic_value,
)


def naive_short_vectors(g, bound):
    """Box search: |v_i| <= sqrt(bound * (G^-1)_ii), one representative per +-v."""
    inv = inverse(g)
    n = len(g)
    r = [math.isqrt(int(bound * inv[i][i]) + 1) + 1 for i in range(n)]
    out = []
    for v in itertools.product(*[range(-k, k + 1) for k in r]):
        if any(v) and next(c for c in v if c) > 0 and quadratic_value(g, v) <= bound:
            out.append(v)
    return sorted(out)


def random_pd(rng):
    while True:
        a = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
        d = [Fraction(rng.randint(1, 6), rng.randint(1, 3)) for _ in range(3)]
        g = [[sum(a[k][i] * d[k] * a[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
        if is_positive_definite(g):
            return g


def test_gram_of_power_basis():
    f = make_cubic_field(-1, -4, -1)
    pb = OrderBasis.from_generators(f, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    g = gram_of(pb)
    assert g[0][0] == 3 and g[0][1] == -f.c2 and g[1][1] == f.c2**2 - 2 * f.c1 == 9
    g2 = gram_of(z_plus_2O(pb))
    assert g2[0][0] == 3 and g2[0][1] == 2 * g[0][1] and g2[1][2] == 4 * g[1][2]


def test_gram_rejects_sextic():
    _, _, o, _ = example_orders(1)
    with pytest.raises(FieldError):
        gram_of(o)


def test_enumerate_identity():
    eye = [[Fraction(int(i == j)) for j in range(3)] for i in range(3)]
    assert enumerate_short_vectors(eye, 1) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    assert enumerate_short_vectors(eye, Fraction(1, 2)) == []
    assert len(enumerate_short_vectors(eye, 2)) == 9


def test_fincke_pohst_matches_naive_on_50_forms():
    rng = random.Random(20240601)
    for _ in range(50):
        g = random_pd(rng)
        bound = Fraction(rng.randint(0, 50))
        assert enumerate_short_vectors(g, bound) == naive_short_vectors(g, bound)


def test_minkowski_bounds_examples():
    m = minkowski_bounds(169)
    assert (m.t2_bound, m.p_bound) == (67, 300763)
    m = minkowski_bounds(49)
    assert (m.t2_bound, m.p_bound) == (36, 46656)
    m = minkowski_bounds(2)
    assert m.crude_bound >= m.p_bound
    assert m.crude_bound == math.ceil(196 * 2**1.5)


def test_minkowski_floor_against_high_precision():
    with mpmath.workdps(60):
        for d in list(range(1, 400)) + [961, 1849, 3969, 13689, 3721, 4489, 10**9 + 7]:
            expect = int(mpmath.floor(1 + 16 * mpmath.sqrt(d) / mpmath.pi))
            assert minkowski_bounds(d).t2_bound == expect


def check_candidates(order_plus, cands, cap):
    lat = z_plus_2O(order_plus)
    for c in cands:
        assert not c.mu.is_rational()
        assert lat.contains(c.mu.coords)
        assert c.t2 == c.t1 * c.t1 - 2 * c.a1
        assert 2 <= c.t2 <= cap
    assert [c.t2 for c in cands] == sorted(c.t2 for c in cands)


def test_find_mu_example2():
    o = maximal_order(make_cubic_field(-1, -4, -1))
    cands = find_mu(o)
    assert cands and all(c.t2 <= 67 for c in cands)
    check_candidates(o, cands, 67)
    assert find_mu(o, t2_cap=1) == []


def test_find_mu_contains_example1_choice():
    f, o_plus, _, mu = example_orders(1)
    cands = find_mu(o_plus)
    coords = {c.mu.coords for c in cands}
    assert mu.coords in coords or tuple(-x for x in mu.coords) in coords


def test_find_mu_nonempty_everywhere(example):
    i, f, o_plus, o, mu = example
    cap = minkowski_bounds(o_plus.disc).t2_bound
    cands = find_mu(o_plus)
    assert cands
    check_candidates(o_plus, cands, cap)


def test_compute_B_minimizer_and_oracle(example):
    i, f, o_plus, o, mu = example
    k = SexticField(f)
    B, x = compute_B(o)
    w = k.element(x)
    assert conjugate(w).coords == tuple(-c for c in x)
    assert o.contains(x)
    prod = k.mul_coords(x, k.conj_coords(x))
    assert f.trace_coords(prod[:3]) == B and not any(prod[3:])
    basis, g = imaginary_trace_form(o)
    # oracle: naive box over the imaginary lattice, excluding rational multiples of 2 zeta + 1
    best = None
    for v in naive_short_vectors(g, B):
        c = [sum(a * r[k] for a, r in zip(v, basis)) for k in range(6)]
        if any(c[1:3]):
            val = quadratic_value(g, v)
            best = val if best is None else min(best, val)
    assert best == B


def test_compute_B_literal_minimum_is_at_most_9(example):
    i, f, o_plus, o, mu = example
    B, x = compute_B(o, primitive=False)
    k = SexticField(f)
    r = (1, 0, 0, 2, 0, 0)
    prod = k.mul_coords(r, k.conj_coords(r))
    assert f.trace_coords(prod[:3]) == 9
    assert B <= 9
