"""Coefficient tables against independent oracles.

The production code builds b_n through an integer-polynomial recurrence
and u_n/v_n through integer convolutions; the oracles here recompute
both from their defining formulas with plain Fractions and compare
exactly, then pin a few decimal values computed separately (mpmath,
dps=45).
"""

import math
from fractions import Fraction

import pytest

from ellipmono.coefficients import (
    CoefficientTable,
    b_coeff,
    c_coeff,
    c_exact,
    ratio,
    ratio_gap,
    shared_coefficients,
    threshold,
    u_coeff,
    v_coeff,
    wallis,
)
from ellipmono.pi_expr import PiExpression

F = Fraction

# mpmath oracle pins (dps=45, truncated to 30 digits)
B1 = F("1.889070050037577230183290742441")
RATIO1 = F("3.778140100075154460366581484883")
RATIO2 = F("3.822719840275458469067997196209")
C1_OF_4 = F("-0.110929949962422769816709257558")
V1 = F("0.176990816987241548078304229099")
EXP_HALF_PI = F("4.810477380965351655473035666703")
TOL = F(1, 10 ** 28)


def wallis_by_comb(n):
    return F(math.comb(2 * n, n), 4 ** n)


def wallis_by_double_factorial(n):
    num = den = 1
    for k in range(1, n + 1):
        num *= 2 * k - 1
        den *= 2 * k
    return F(num, den)


@pytest.mark.parametrize("n", range(0, 40))
def test_wallis_three_forms_agree(n):
    w = wallis(n)
    assert w == wallis_by_comb(n) == wallis_by_double_factorial(n)


def test_b_closed_forms_exact():
    assert b_coeff(0) == PiExpression((F(1),), exp_scale=True)
    assert b_coeff(1) == PiExpression((F(0), F(1, 8)), exp_scale=True)
    assert b_coeff(2) == PiExpression((F(0), F(9, 128), F(1, 128)),
                                      exp_scale=True)
    assert b_coeff(3) == PiExpression(
        (F(0), F(150, 3072), F(27, 3072), F(1, 3072)), exp_scale=True)


def direct_b_recurrence(n_max):
    """b-recurrence on PiExpressions straight from its analytic form."""
    bs = [PiExpression((F(1),), exp_scale=True)]
    for n in range(n_max):
        conv = PiExpression.zero()
        for k in range(n + 1):
            w = wallis(k)
            conv = conv + bs[n - k] * (w * w / (k + 1))
        nxt = bs[n] * F(n, n + 1) + conv.mul_pi() / (8 * (n + 1))
        bs.append(nxt)
    return bs


def test_b_matches_direct_recurrence():
    bs = direct_b_recurrence(12)
    for n in range(13):
        assert b_coeff(n) == bs[n], n


def test_b1_decimal_pin():
    assert abs(b_coeff(1).evaluate(128).mid() - B1) < TOL


def direct_u(n):
    """u_n from its defining formula, independent of the integer form."""
    s = F(0)
    for k in range(n + 1):
        wk, wl = wallis(k), wallis(n - k)
        s += wk * wk * wl * wl / ((k + 1) * (n - k + 1))
    wn = wallis(n)
    rational = F(6 * (2 * n + 1), (n + 2) * (n + 1)) * wn * wn
    return PiExpression((-rational, s))


@pytest.mark.parametrize("n", range(0, 26))
def test_u_matches_definition(n):
    assert u_coeff(n) == direct_u(n)


def test_u_closed_forms():
    assert u_coeff(0) == PiExpression((F(-3), F(1)))          # pi - 3
    assert u_coeff(1) == PiExpression((F(-3, 4), F(1, 4)))    # (pi - 3)/4


def test_v_is_partial_sum_and_difference_identity():
    acc = PiExpression.zero()
    for n in range(30):
        acc = acc + u_coeff(n)
        assert v_coeff(n) == acc
        if n:
            assert v_coeff(n) - v_coeff(n - 1) == u_coeff(n)


def test_v1_value():
    assert v_coeff(1) == PiExpression((F(-15, 4), F(5, 4)))   # 5(pi-3)/4
    assert abs(v_coeff(1).evaluate(128).mid() - V1) < TOL


@pytest.mark.parametrize("n", range(1, 7))
def test_gap_identity_exact(n):
    # (n+1) b_{n+1} - (n+1/2) b_n = (pi/(64 n)) sum_j b_j v_{n-1-j}
    table = shared_coefficients()
    conv = PiExpression.zero()
    for j in range(n):
        conv = conv + b_coeff(j) * v_coeff(n - 1 - j)
    rhs = conv.mul_pi() / (64 * n)
    assert table.gap_exact(n) == rhs


def test_ratio_pins():
    assert abs(ratio(1, 128).mid() - RATIO1) < TOL
    assert abs(ratio(2, 128).mid() - RATIO2) < TOL
    assert abs(ratio(0, 128).mid() - EXP_HALF_PI) < TOL


def test_ratio_gap_positive_small():
    for n in range(1, 30):
        assert ratio_gap(n, 128).lo_fraction() > 0


def test_threshold_exact():
    assert threshold(0) == PiExpression((F(1),), exp_scale=True)
    assert threshold(1) == PiExpression((F(0), F(1, 4)), exp_scale=True)
    assert threshold(2) == PiExpression((F(0), F(9, 48), F(1, 48)),
                                        exp_scale=True)


def test_c_exact_boundary_zeros():
    table = shared_coefficients()
    assert c_exact(1, threshold(1)).is_zero
    assert c_exact(0, threshold(0)).is_zero
    assert not c_exact(2, threshold(1)).is_zero
    assert table.c_is_exactly_zero(1, threshold(1))
    assert not table.c_is_exactly_zero(2, threshold(1))
    assert not table.c_is_exactly_zero(1, F(4))  # rational p never cancels


def test_c_exact_requires_matching_scale():
    with pytest.raises(ValueError):
        c_exact(1, PiExpression((F(4),)))  # plain rational as expression
    with pytest.raises(TypeError):
        c_exact(1, F(4))


def test_c_coeff_values():
    assert abs(c_coeff(1, F(4), 128).mid() - C1_OF_4) < TOL
    # c_0(4) = e^{pi/2} - 4
    assert abs(c_coeff(0, F(4), 128).mid() - (EXP_HALF_PI - 4)) < TOL
    # exact-parameter path agrees with the rational path at p = 4
    exactish = c_coeff(2, PiExpression((F(4),)), 128)
    assert exactish.overlaps(c_coeff(2, F(4), 128))


def test_value_table_consistent_with_exact():
    table = CoefficientTable()
    for n in range(0, 121, 10):
        enc = table.b_enclosure(n, 160)
        exa = table.b_coeff(n).evaluate(160)
        assert enc.overlaps(exa), n
        assert enc.width() < F(1, 1 << 100), n


def test_value_table_growth_is_idempotent():
    table = CoefficientTable()
    a = table.btilde_enclosure(50, 96)
    table.ensure_values(200, 96)
    b = table.btilde_enclosure(50, 96)
    assert a == b


def test_exact_limit_tracks_growth():
    table = CoefficientTable()
    assert table.exact_limit == 0
    table.ensure_exact(7)
    assert table.exact_limit == 7


def test_negative_index_rejected():
    with pytest.raises(ValueError):
        b_coeff(-1)
