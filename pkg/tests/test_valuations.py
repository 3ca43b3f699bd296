import math
from fractions import Fraction as F

import pytest

from polyheight import (PolyOverK, int_to_poly, nonarch_gauss_product,
                        product_formula_check, quadratic_field, rationals,
                        split_prime, valuation)
from polyheight.valuations import INFINITE, abs_at, element_support, primes_above

from conftest import ALL_FIELDS, random_element


def test_split_prime_examples():
    qi = quadratic_field(-1)
    ps = split_prime(5, qi)
    assert [p.kind for p in ps] == ["split", "split"]
    assert all(p.residue_norm == 5 for p in ps)
    (p3,) = split_prime(3, qi)
    assert p3.kind == "inert" and p3.residue_norm == 9
    (p2,) = split_prime(2, quadratic_field(-2))
    assert p2.kind == "ramified" and p2.residue_norm == 2
    (pq,) = split_prime(7, rationals())
    assert pq.kind == "rational" and pq.residue_norm == 7
    with pytest.raises(ValueError):
        split_prime(6, qi)


def test_split_prime_2_half_basis():
    q17 = quadratic_field(17)
    ps = split_prime(2, q17)
    assert [p.kind for p in ps] == ["split", "split"]
    # the two Hensel branches square to 17 2-adically
    for p in ps:
        r = p.lifted_root(10)
        assert (r * r - 17) % 2 ** 10 == 0
    q5 = quadratic_field(5)
    (p2,) = split_prime(2, q5)
    assert p2.kind == "inert"


def test_valuation_examples():
    qi = quadratic_field(-1)
    (p2,) = split_prime(2, qi)
    assert valuation(qi.element(2), p2) == 2        # (2) = (1+i)^2 times a unit
    b0, b1 = split_prime(5, qi)
    x = qi.element(2, 1)
    vals = sorted((valuation(x, b0), valuation(x, b1)))
    assert vals == [0, 1]
    assert valuation(x.conj(), b0) == valuation(x, b1)
    assert valuation(x.conj(), b1) == valuation(x, b0)
    (p3,) = split_prime(3, qi)
    third = qi.element(F(1, 3))
    assert valuation(third, p3) == -1
    assert abs_at(third, p3) == 9


def test_valuation_zero_is_infinite():
    qi = quadratic_field(-1)
    (p2,) = split_prime(2, qi)
    assert valuation(qi.element(0), p2) == INFINITE
    assert valuation(qi.element(0), p2) == math.inf
    assert abs_at(qi.element(0), p2) == 0


def test_valuation_additive(rng):
    for field in ALL_FIELDS.values():
        for _ in range(40):
            x = random_element(rng, field)
            y = random_element(rng, field)
            support = element_support(x) | element_support(y)
            for pr in primes_above(support, field):
                assert valuation(x * y, pr) == valuation(x, pr) + valuation(y, pr)


def test_valuation_norm_identity(rng):
    # prod over primes of residue_norm^ord(x) equals |N(x)| exactly
    for field in ALL_FIELDS.values():
        for _ in range(60):
            x = random_element(rng, field)
            prod = F(1)
            for pr in primes_above(element_support(x), field):
                prod *= F(pr.residue_norm) ** valuation(x, pr)
            assert prod == x.abs_norm()


def test_half_integer_units_have_zero_valuation():
    q5 = quadratic_field(5)
    gold = q5.element(F(1, 2), F(1, 2))
    for pr in primes_above({2, 3, 5}, q5):
        assert valuation(gold, pr) == 0
    q3 = quadratic_field(-3)
    zeta = q3.element(F(1, 2), F(1, 2))
    for pr in primes_above({2, 3, 5, 7}, q3):
        assert valuation(zeta, pr) == 0


def test_nonarch_gauss_examples():
    q = rationals()
    assert nonarch_gauss_product(int_to_poly([6, 2]), q) == F(1, 2)
    qi = quadratic_field(-1)
    g = PolyOverK([qi.element(2), qi.element(1, 1)], qi)
    assert nonarch_gauss_product(g, qi) == F(1, 2)
    q2 = quadratic_field(-2)
    octic = int_to_poly([4, 0, -4, 0, -3, 0, 2, 0, 1], q2)
    assert nonarch_gauss_product(octic, q2) == 1
    # any primitive integer polynomial has discrete product 1
    assert nonarch_gauss_product(int_to_poly([3, 5, 7]), q) == 1
    with pytest.raises(ValueError):
        nonarch_gauss_product([q.element(0)], q)


def test_gauss_multiplicativity(rng):
    for field in ALL_FIELDS.values():
        for _ in range(50):
            f = PolyOverK([random_element(rng, field, nonzero=False) for _ in range(3)]
                          + [random_element(rng, field)], field)
            g = PolyOverK([random_element(rng, field, nonzero=False) for _ in range(2)]
                          + [random_element(rng, field)], field)
            assert (nonarch_gauss_product(f * g, field)
                    == nonarch_gauss_product(f, field) * nonarch_gauss_product(g, field))


def test_product_formula_examples():
    q = rationals()
    r = product_formula_check(q.element(7), q)
    assert r.holds and r.nonarch == F(1, 7)
    qi = quadratic_field(-1)
    r = product_formula_check(qi.element(1, 1), qi)
    assert r.holds and r.nonarch == F(1, 2)
    q5 = quadratic_field(5)
    r = product_formula_check(q5.element(F(3, 2)), q5)
    assert r.holds
    with pytest.raises(ValueError):
        product_formula_check(q.element(0), q)


def test_product_formula_random(rng):
    for field in ALL_FIELDS.values():
        for _ in range(100):
            x = random_element(rng, field)
            r = product_formula_check(x, field)
            assert r.holds
            assert r.product.width < 1e-20
