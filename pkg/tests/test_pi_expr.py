"""Exact pi-polynomial values: ring laws, canonical form, evaluation."""

from fractions import Fraction

import pytest
from mpmath import mp, mpf

from ellipmono.pi_expr import PiExpression
from ellipmono.intervals import Interval

F = Fraction


def test_canonical_trailing_zeros_trimmed():
    e = PiExpression((F(1), F(2), F(0), F(0)))
    assert e.coeffs == (F(1), F(2))
    assert e.degree == 1


def test_zero_normalizes_scale():
    z = PiExpression((F(0),), exp_scale=True)
    assert z.is_zero and not z.exp_scale
    assert z == PiExpression.zero()


def test_from_rational_and_equality():
    assert PiExpression.from_rational(F(3, 4)) == PiExpression((F(3, 4),))
    assert PiExpression((0, 1)) == PiExpression((F(0), F(1)))


def test_addition_same_scale():
    a = PiExpression((F(1), F(2)))
    b = PiExpression((F(3), F(0), F(1)))
    assert (a + b).coeffs == (F(4), F(2), F(1))


def test_addition_mixed_scale_raises():
    plain = PiExpression((F(1),))
    scaled = PiExpression((F(1),), exp_scale=True)
    with pytest.raises(ValueError):
        plain + scaled
    # adding zero is always allowed
    assert (scaled + PiExpression.zero()) == scaled


def test_scalar_ops():
    a = PiExpression((F(1), F(2)), exp_scale=True)
    assert (a * F(1, 2)).coeffs == (F(1, 2), F(1))
    assert (2 * a).coeffs == (F(2), F(4))
    assert (a / 2).coeffs == (F(1, 2), F(1))
    assert (-a).coeffs == (F(-1), F(-2))
    assert (a - a).is_zero


def test_product_of_expressions():
    # (1 + pi)(2 + pi) = 2 + 3 pi + pi^2
    a = PiExpression((F(1), F(1)))
    b = PiExpression((F(2), F(1)))
    assert (a * b).coeffs == (F(2), F(3), F(1))


def test_product_scale_rules():
    plain = PiExpression((F(0), F(1)))
    scaled = PiExpression((F(1),), exp_scale=True)
    assert (plain * scaled).exp_scale
    with pytest.raises(ValueError):
        scaled * scaled
    assert (scaled * PiExpression.zero()).is_zero


def test_mul_pi_shifts():
    a = PiExpression((F(2), F(3)))
    assert a.mul_pi().coeffs == (F(0), F(2), F(3))
    assert a.mul_pi(2).coeffs == (F(0), F(0), F(2), F(3))


def test_render():
    e = PiExpression((F(0), F(150, 3072), F(27, 3072), F(1, 3072)),
                     exp_scale=True)
    assert e.render() == "(pi^3 + 27*pi^2 + 150*pi)/3072 * exp(pi/2)"
    assert PiExpression((F(1),), exp_scale=True).render() == "1 * exp(pi/2)"
    assert PiExpression((F(-3), F(1))).render() == "pi - 3"
    assert PiExpression.zero().render() == "0"
    assert str(PiExpression((F(1, 4),))) == "1/4"


def test_evaluate_plain_rational_is_point():
    iv = PiExpression((F(5, 8),)).evaluate(64)
    assert iv.is_point() and iv.mid() == F(5, 8)


def test_evaluate_contains_oracle():
    mp.prec = 300
    # pi^2/6 = 1.644934066848226436472415...
    e = PiExpression((F(0), F(0), F(1, 6)))
    iv = e.evaluate(160)
    lo = mpf(iv.lo) / mpf(2) ** iv.prec
    hi = mpf(iv.hi) / mpf(2) ** iv.prec
    assert lo <= mp.pi ** 2 / 6 <= hi
    # (pi/8) e^{pi/2} = 1.889070050037577230183290742...
    e = PiExpression((F(0), F(1, 8)), exp_scale=True)
    assert abs(e.evaluate(160).mid()
               - F("1.889070050037577230183290742441")) < F(1, 10 ** 29)


def test_evaluate_zero_is_exact():
    iv = PiExpression.zero().evaluate(96)
    assert iv.is_point() and iv.mid() == 0


def test_structural_equality_is_semantic():
    # {pi^j} and {pi^j e^{pi/2}} are independent over Q, so equal values
    # must have identical coefficient tuples
    a = PiExpression((F(1, 3), F(2)))
    b = PiExpression((F(2, 6), F(2)))
    assert a == b and hash(a) == hash(b)
    assert a != PiExpression((F(1, 3), F(2)), exp_scale=True)
