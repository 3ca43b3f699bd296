"""Exercise the height lower bounds on random split polynomials.

Every inequality is decided by exact arithmetic (rational discrete part,
quadratic-surd archimedean part), so each verdict is a proof, not a
floating-point comparison.
"""
import random
from fractions import Fraction

from polyheight import (SplitPoly, check_alphabound1, check_alphabound2,
                        check_bound1, check_bound2, check_complexmahler,
                        height, mk_search, product_formula_check,
                        quadratic_field, rationals)

rng = random.Random(7)


def random_element(field, nonzero=True):
    while True:
        a = Fraction(rng.randint(-2, 2), rng.randint(1, 2))
        b = Fraction(rng.randint(-2, 2), rng.randint(1, 2)) if field.degree == 2 else 0
        x = field.element(a, b)
        if not (nonzero and x.is_zero()):
            return x


def random_split(field, max_degree=10):
    roots = []
    while not roots:
        for _ in range(rng.randint(1, 4)):
            roots.extend([random_element(field)] * rng.randint(1, 2))
    return SplitPoly(random_element(field), roots[:max_degree], field)


for field in (rationals(), quadratic_field(-1), quadratic_field(5)):
    mk = mk_search(field, 3).lower_fraction
    print(f"\n=== {field} (mk lower bound {float(mk):.4f}) ===")
    for trial in range(3):
        s = random_split(field)
        rep = height(s)
        print(f" degree {s.degree:>2}, height enclosure "
              f"[{float(rep.height.lo):.6f}, {float(rep.height.hi):.6f}]")
        for check in (check_alphabound1(s), check_bound1(s, mk),
                      check_alphabound2(s), check_bound2(s),
                      check_complexmahler(s)):
            print(f"   {check.name:<14} {check.verdict:<6} margin {check.margin:+.4f}")

print("\nproduct formula spot checks (exact):")
field = quadratic_field(-1)
for _ in range(5):
    x = random_element(field)
    r = product_formula_check(x, field)
    print(f"  x = {str(x):<18} discrete {str(r.nonarch):<10} "
          f"product contains 1: {r.holds}")
