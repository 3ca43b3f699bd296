import math
from fractions import Fraction as F

import pytest

from polyheight import (PolyOverK, SplitPoly, char_poly, count_unity_roots,
                        height, int_to_poly, mk_alpha, mk_alpha_exact,
                        mk_alpha_via_charpoly, quadratic_field, rationals,
                        roots_of_unity)
from polyheight.polynomials import intpoly_pow

from conftest import ALL_FIELDS, random_element, random_split_poly


def test_height_examples():
    q = rationals()
    assert height(int_to_poly([1, 0, -2, 0, 1])).exact == 2     # (x^2-1)^2
    q2 = quadratic_field(-2)
    octic = int_to_poly([4, 0, -4, 0, -3, 0, 2, 0, 1], q2)
    rep = height(octic)
    assert rep.exact == 4 and rep.nonarch == 1
    assert height(int_to_poly([-1, 2])).exact == 2              # 2x - 1
    assert height(int_to_poly([-1, 1])).exact == 1
    assert rep.height.lo >= 1


def test_height_primitive_integer_is_max_coeff(rng):
    for field in ALL_FIELDS.values():
        for _ in range(40):
            coeffs = [rng.randint(-50, 50) for _ in range(rng.randint(1, 10))]
            coeffs.append(rng.randint(1, 50))
            g = math.gcd(*coeffs)
            coeffs = [c // g for c in coeffs]
            rep = height(int_to_poly(coeffs, field))
            expect = max(abs(c) for c in coeffs)
            assert rep.exact == expect
            assert F(expect) in rep.height
            assert rep.height.width < 1e-20


def test_height_scale_invariance(rng):
    for field in ALL_FIELDS.values():
        for _ in range(20):
            s = random_split_poly(rng, field, max_distinct=3, max_mult=2, max_degree=6)
            f = s.expand()
            c = random_element(rng, field)
            rep1, rep2 = height(f), height(f.scale(c))
            assert rep1.height_power_exact() == rep2.height_power_exact()
            assert rep1.height.overlaps(rep2.height)


def test_height_split_fast_path_matches_generic(rng):
    for field in ALL_FIELDS.values():
        for _ in range(15):
            s = random_split_poly(rng, field, max_distinct=3, max_mult=2, max_degree=6)
            rep_split = height(s)
            rep_generic = height(s.expand())
            assert rep_split.nonarch == rep_generic.nonarch
            assert rep_split.height_power_exact() == rep_generic.height_power_exact()


def test_height_lower_bound_one(rng):
    for field in ALL_FIELDS.values():
        for _ in range(20):
            s = random_split_poly(rng, field, max_distinct=4, max_mult=2, max_degree=8)
            assert height(s).height.lo >= 1


def test_char_poly_examples():
    qi = quadratic_field(-1)
    cp = char_poly(qi.element(2))
    assert cp.coeffs == (-2, 1) and cp.power == 2 and cp.inner_degree == 1
    cp = char_poly(qi.element(1, 1))
    assert cp.coeffs == (2, -2, 1) and cp.power == 1 and cp.inner_degree == 2
    cp = char_poly(rationals().element(F(1, 2)))
    assert cp.coeffs == (-1, 2) and cp.power == 1
    cp = char_poly(qi.element(0))
    assert cp.coeffs == (0, 1) and cp.power == 2
    q5 = quadratic_field(5)
    cp = char_poly(q5.element(F(1, 2), F(1, 2)))
    assert cp.coeffs == (-1, -1, 1) and cp.power == 1


def test_char_poly_inner_degree_times_power_is_d(rng):
    for field in ALL_FIELDS.values():
        for _ in range(30):
            x = random_element(rng, field, nonzero=False)
            cp = char_poly(x, field)
            assert cp.inner_degree * cp.power == field.degree
            assert math.gcd(*cp.coeffs) == 1 and cp.coeffs[-1] > 0


def test_mk_alpha_examples():
    qi = quadratic_field(-1)
    for field in ALL_FIELDS.values():
        for zeta in roots_of_unity(field):
            assert mk_alpha_exact(zeta, field).is_one()
    assert mk_alpha_exact(qi.element(1, 1)) == 2
    assert mk_alpha_exact(qi.element(2)) == 4
    assert float(mk_alpha(qi.element(1, 1)).lo) == 2.0
    assert mk_alpha_exact(qi.element(0)).is_one()


def test_mk_alpha_unit_iff_torsion(rng):
    for field in ALL_FIELDS.values():
        torsion = {(z.a, z.b) for z in roots_of_unity(field)}
        for _ in range(60):
            x = random_element(rng, field)
            is_one = mk_alpha_exact(x, field).is_one()
            assert is_one == ((x.a, x.b) in torsion)


def test_mk_alpha_inversion_invariance(rng):
    for field in ALL_FIELDS.values():
        for _ in range(40):
            x = random_element(rng, field)
            assert mk_alpha_exact(x, field) == mk_alpha_exact(x.inverse(), field)


def test_mk_alpha_route_agreement(rng):
    for field in ALL_FIELDS.values():
        for _ in range(1000):
            x = random_element(rng, field, nonzero=False)
            direct = mk_alpha(x, field)
            via_cp = mk_alpha_via_charpoly(x, field)
            assert direct.enclosure.overlaps(via_cp.enclosure)


def test_count_unity_roots_examples():
    q2 = quadratic_field(-2)
    quartet = [q2.element(1), q2.element(-1), q2.element(0, 1), q2.element(0, -1)]
    assert count_unity_roots(SplitPoly(q2.one(), quartet, q2)) == 2
    qi = quadratic_field(-1)
    s = SplitPoly(qi.one(), roots_of_unity(qi), qi)
    assert count_unity_roots(s) == 4
    q = rationals()
    s2 = SplitPoly(q.one(), [q.element(2), q.element(F(1, 2))], q)
    assert count_unity_roots(s2) == 0


def test_central_binomial_height_family():
    q = rationals()
    for m in (4, 9, 20):
        coeffs = intpoly_pow([-1, 0, 1], m)
        rep = height(int_to_poly(coeffs, q))
        assert rep.exact == math.comb(m, m // 2)
