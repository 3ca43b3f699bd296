from fractions import Fraction as F

import pytest

from polyheight import SqrtValue, quadratic_field, rationals


def test_rational_roundtrip():
    v = SqrtValue.of_rational(F(3, 2))
    assert v.as_rational() == F(3, 2)
    assert v.compare(F(3, 2)) == 0
    assert SqrtValue.of_rational(-5).as_rational() == 5  # absolute value


def test_sqrt_of_rational():
    r2 = SqrtValue.sqrt_of_rational(2)
    assert r2.as_rational() is None
    assert r2 * r2 == 2
    assert (r2 ** 4).as_rational() == 4
    assert abs(float(r2) - 2 ** 0.5) < 1e-12


def test_comparisons_exact():
    r2 = SqrtValue.sqrt_of_rational(2)
    assert r2 > F(7, 5) and r2 < F(3, 2)
    assert SqrtValue.sqrt_of_rational(F(1, 3)) < 1
    # sqrt(2)*sqrt(8) == 4 exactly
    assert SqrtValue.sqrt_of_rational(2) * SqrtValue.sqrt_of_rational(8) == 4


def test_abs_sigma1():
    qi = quadratic_field(-1)
    v = SqrtValue.abs_sigma1(qi.element(1, 1))
    assert v * v == 2   # |1+i|^2
    q5 = quadratic_field(5)
    gold = q5.element(F(1, 2), F(1, 2))
    g = SqrtValue.abs_sigma1(gold)
    assert abs(float(g) - 1.618033988749895) < 1e-12
    conj = SqrtValue.abs_sigma1(gold.conj())
    assert g * conj == 1   # |N| = 1
    assert SqrtValue.abs_sigma1(rationals().element(F(-7, 3))).as_rational() == F(7, 3)


def test_division_and_pow():
    q5 = quadratic_field(5)
    g = SqrtValue.abs_sigma1(q5.element(F(1, 2), F(1, 2)))
    assert (g ** 2 / g).compare(g) == 0
    assert (g / g).is_one()
    assert g ** 0 == 1
    with pytest.raises(ZeroDivisionError):
        g / SqrtValue.of_rational(0)


def test_interval_view():
    g = SqrtValue(F(3, 2), F(1, 2), 5)   # golden ratio
    iv = g.to_interval(128)
    assert iv.width < 1e-30
    assert abs(iv.mid - 1.618033988749895) < 1e-12


def test_negative_square_rejected():
    with pytest.raises(ValueError):
        SqrtValue(F(-1))
    with pytest.raises(ValueError):
        SqrtValue(F(1), F(-1), 5)   # 1 - sqrt5 < 0


def test_incompatible_fields():
    a = SqrtValue(F(1), F(1), 5)
    b = SqrtValue(F(1), F(1), 2)
    with pytest.raises(ValueError):
        a * b
