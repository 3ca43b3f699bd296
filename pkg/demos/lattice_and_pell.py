"""Why the unity-order floor is tight for Q(i) and Q(sqrt(-3)) but cannot
be proved the same way for the other imaginary quadratic fields.

For w = 4 and w = 6 an exhaustive lattice scan shows |N(beta^w + gamma^w)|
stays at least 4 over coprime nonzero pairs.  For w = 2 the fundamental
Pell solution collapses the corresponding local product to exactly 1, so
no pointwise bound above 1 exists.
"""
from polyheight import (lattice_case_check, pell_counterexample,
                        quadratic_field, real_case_samples, rationals)

for D in (-1, -3):
    field = quadratic_field(D)
    rep = lattice_case_check(field, 10)
    pairs = ", ".join(f"({b},{g})" for b, g in rep.attaining_pairs[:4])
    print(f"{field}: exponent {rep.exponent}, min |N(beta^w+gamma^w)| = {rep.min_norm}")
    print(f"  attained at coordinate pairs {pairs}")
    print(f"  pairs hitting the excluded unit set: {rep.unit_or_zero_hits}")

print("\ntotally real sampling (the AM-GM route): value >= 2^d exactly")
for field in (rationals(), quadratic_field(5)):
    checks = real_case_samples(field, 200, seed=11)
    worst = min(float(c.value) for c in checks)
    print(f"  {field}: 200 samples, all hold: {all(c.holds for c in checks)}, "
          f"smallest value {worst:.4f} (threshold {checks[0].threshold})")

print("\nPell obstruction for w = 2 imaginary fields:")
print(f"  {'d':>3} {'(b, c)':<12} local product")
for d in (2, 5, 6, 7, 10, 11, 13):
    w = pell_counterexample(d)
    print(f"  {d:>3} {str((w.b, w.c)):<12} {w.product}")
print("\nthe product equals 1 exactly every time: the pointwise strategy dies here.")
