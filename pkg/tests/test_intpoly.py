import math

import pytest

from affschur.intpoly import (
    IntPoly,
    binom,
    multinom,
    newton_fit,
    stirling1_row,
    stirling2_row,
    weight_binom,
    weight_power,
)


def test_binom_matches_math_comb_for_nonneg():
    for m in range(0, 12):
        for t in range(0, 12):
            assert binom(m, t) == math.comb(m, t)


def test_binom_negative_top_reflection():
    # C(m, t) = (-1)^t C(t - m - 1, t) for m < 0
    for m in range(-8, 0):
        for t in range(0, 8):
            assert binom(m, t) == (-1) ** t * math.comb(t - m - 1, t)
    assert binom(-1, 2) == 1


def test_binom_rejects_negative_bottom():
    with pytest.raises(ValueError):
        binom(3, -1)


def test_weight_binom():
    assert weight_binom((2, 0), (1, 0)) == 2
    assert weight_binom((2, 3), (1, 2)) == 6
    assert weight_binom((1, 1), (2, 0)) == 0
    assert weight_binom((-1, 1), (2, 1)) == 1


def test_multinom_consistency():
    # agrees with the factorial formula when the top is the sum of the parts
    for parts in [(1, 1, 1), (2, 0, 1), (3, 2), (0, 0), (4,)]:
        m = sum(parts)
        want = math.factorial(m)
        for k in parts:
            want //= math.factorial(k)
        assert multinom(m, parts) == want
    # polynomial extension via iterated generalized binomials
    assert multinom(-1, (2,)) == binom(-1, 2)
    assert multinom(-2, (1, 1)) == binom(-2, 1) * binom(-3, 1)


def test_poly_ring_axioms_by_evaluation():
    p = IntPoly({0: 3, 2: 1})
    q = IntPoly({1: 2, 3: -1})
    r = IntPoly({0: 1, 1: 1})
    for a in range(-10, 11):
        assert (p + q).eval_at(a) == p.eval_at(a) + q.eval_at(a)
        assert (p * q).eval_at(a) == p.eval_at(a) * q.eval_at(a)
        assert ((p * q) * r).eval_at(a) == (p * (q * r)).eval_at(a)


def test_square_of_degree_one():
    x = IntPoly.binom_basis(1)
    assert x * x == IntPoly({1: 1, 2: 2})


def test_binom_shifted():
    assert IntPoly.binom_shifted(1, 1) == IntPoly({0: 1, 1: 1})
    assert IntPoly.binom_shifted(-2, 3).eval_at(5) == 1
    for a in range(-10, 11):
        for b in range(-10, 11):
            for t in range(0, 7):
                assert IntPoly.binom_shifted(a, t).eval_at(b) == binom(a + b, t)


def test_specialization_at_zero():
    assert IntPoly({0: 5, 1: 2}).at_zero() == 5
    assert IntPoly({2: 7}).at_zero() == 0
    assert IntPoly().at_zero() == 0


def test_newton_fit_recovers_polynomials():
    for poly in [IntPoly({0: 4}), IntPoly({1: 1}), IntPoly({3: 1, 1: 2}), IntPoly({2: -3, 0: 1})]:
        for a0 in (-3, 0, 2):
            values = [poly.eval_at(a) for a in range(a0, a0 + 6)]
            assert newton_fit(a0, values) == poly


def test_stirling_rows():
    # falling factorial x(x-1)(x-2) = x^3 - 3x^2 + 2x
    assert stirling1_row(3) == (0, 2, -3, 1)
    # x^3 = x + 3 x(x-1) + x(x-1)(x-2)
    assert stirling2_row(3) == (0, 1, 3, 1)
    # inverse triangles: sum_k S(m,k) s(k, l) = delta_{m,l}
    for m in range(6):
        for l in range(6):
            total = 0
            for k in range(max(m, l) + 1):
                s2 = stirling2_row(m)[k] if k <= m else 0
                s1 = stirling1_row(k)[l] if l <= k else 0
                total += s2 * s1
            assert total == (1 if m == l else 0)


def test_weight_power():
    assert weight_power((2, 3), (1, 2)) == 18
    assert weight_power((0, 5), (0, 0)) == 1
    assert weight_power((0, 5), (2, 1)) == 0
