"""Walk through the Q(sqrt(-2)) counterexample family.

The octic x^8 + 2x^6 - 3x^4 - 4x^2 + 4 splits over Q(sqrt(-2)) and its
height is exactly 4, so the power family of its square root base pushes
the growth constant above the w/log 2 floor that holds for the cyclotomic
family.  Higher powers of the base keep improving the certificate.
"""
import math

from polyheight import (ck_interval, ck_lower_certify, height, int_to_poly,
                        mk_search, quadratic_field, recognize_split)

field = quadratic_field(-2)
print(f"field: {field}   (degree {field.degree}, {field.unity_order} roots of unity)")

octic = int_to_poly([4, 0, -4, 0, -3, 0, 2, 0, 1], field)
split = recognize_split(octic, field)
print(f"\noctic {octic}")
print("splits with roots:", ", ".join(str(r) for r in split.roots))

rep = height(octic)
print(f"height: exactly {rep.exact} (discrete part {rep.nonarch})")

base = [-2, 0, 1, 0, 1]
print("\ncertificates from powers of x^4 + x^2 - 2:")
print("  j  degree  sum|coeffs|          lower bound for the constant")
for cert in ck_lower_certify(base, field, 8):
    print(f"  {cert.j}  {cert.degree:>6}  {cert.sum_abs:>11}  {cert.cert_value:.6f}")

floor = field.unity_order / math.log(2)
print(f"\ncyclotomic floor w/log 2 = {floor:.6f}")
print("already j = 2 beats it:", ck_lower_certify(base, field, 2)[1].cert_value > floor)

mk = mk_search(field, 3)
ck = ck_interval(field, float(mk.value.lo))
print(f"\nminimal nontrivial measure for this field: {float(mk.value.lo)}")
print(f"certified interval for the constant: [{ck.lower:.4f}, {ck.upper:.4f}]"
      f"  (pinned exactly: {ck.exact})")
