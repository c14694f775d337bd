from fractions import Fraction

import pytest

from semiwalk.ratfunc import RatF

T = RatF.variable()
ONE = RatF.const(1)


def test_basic_arithmetic():
    f = (ONE - T) * (ONE + T)
    g = ONE - T * T
    assert f == g
    assert (f / g) == ONE


def test_gcd_normalization():
    f = (T * T - RatF.const(1)) / (T - RatF.const(1))
    assert f == T + ONE


def test_limit_at_zero():
    x = RatF.const(Fraction(2, 5))
    scaled = x * (ONE - T)
    assert scaled.limit_at_zero() == Fraction(2, 5)
    # t/(2t - t^2) -> 1/2
    f = T / (RatF.const(2) * T - T * T)
    assert f.limit_at_zero() == Fraction(1, 2)
    assert (T * T / T).limit_at_zero() == 0


def test_pole_detected():
    with pytest.raises(ZeroDivisionError):
        (ONE / T).limit_at_zero()


def test_star_style_expression():
    # 1/(1 - (1-t)) = 1/t has a pole; 1/(1 - (1-t)/2) is finite
    with pytest.raises(ZeroDivisionError):
        (ONE / (ONE - (ONE - T))).limit_at_zero()
    g = ONE / (ONE - (ONE - T) * RatF.const(Fraction(1, 2)))
    assert g.limit_at_zero() == 2


def test_equality_and_coercion():
    assert T + 1 == ONE + T
    assert (T * 0).is_zero()
    assert RatF.const(Fraction(3, 4)) == Fraction(3, 4)
