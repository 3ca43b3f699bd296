"""Minimal nontrivial local Mahler measures, field by field.

The exhaustive coefficient-bounded search returns every witness attaining
the minimum; together with the unity-order floor this pins the certified
interval for each field's growth constant.
"""
import math

from polyheight import (ck_interval, mahler_floor, mk_search, quadratic_field,
                        rationals, t2_constant)

FIELDS = [rationals(), quadratic_field(-1), quadratic_field(-3),
          quadratic_field(-2), quadratic_field(5)]

print(f"{'field':<14} {'minimum':<20} witnesses")
for field in FIELDS:
    res = mk_search(field, 3.5)
    wits = ", ".join(f"{list(w.coeffs)}^{w.power}" for w in res.witnesses[:3])
    more = "" if len(res.witnesses) <= 3 else f" (+{len(res.witnesses) - 3} more)"
    print(f"{str(field):<14} {float(res.value.lo):<20.12f} {wits}{more}")

print("\ncertified intervals for the growth constants:")
for field in FIELDS:
    res = mk_search(field, 3.5)
    ck = ck_interval(field, float(res.value.lo))
    tag = "exact" if ck.exact else "open above"
    print(f"  {str(field):<14} [{ck.lower:.4f}, {ck.upper:.4f}]  ({tag})")

print("\ngeneral floors for minimal-polynomial measures by degree:")
for degree in (2, 3, 5, 10, 25):
    f = mahler_floor(degree)
    note = " (vacuous)" if f.vacuous else ""
    print(f"  degree {degree:>2}: {f.value:.6f}  [{f.source}]{note}")

print("\nbounded-root-degree constants:")
for k, cap in ((1, 2.0), (2, 1.3)):
    t = t2_constant(k, cap)
    print(f"  k={k}: exponent w={t.w}, measure floor {t.M_floor}, constant C={t.C:.4f}")
