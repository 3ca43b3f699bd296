"""Mahler measures and archimedean Gauss-norm products.

The Mahler measure |a| * prod max(1, |root|) is evaluated from certified
root enclosures; a circle-integral cross-check is provided for tests.
Archimedean Gauss norms over the supported fields are exact quadratic
surds (see exactreal), with interval views at any precision.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactreal import SqrtValue
from .intervals import (DEFAULT_PREC, MAX_PREC, RealInterval, escalating, ri,
                        working_precision)
from .polynomials import PolyOverK, SplitPoly
from .rootfind import complex_roots
from .verdicts import (BoundCheck, INCONCLUSIVE, interval_verdict,
                       margin_of, sign_verdict)


@dataclass(frozen=True)
class MahlerValue:
    """Certified enclosure of a Mahler measure."""

    enclosure: RealInterval
    degree: int

    @property
    def lo(self):
        return self.enclosure.lo

    @property
    def hi(self):
        return self.enclosure.hi

    @property
    def width(self) -> float:
        return self.enclosure.width


def _lead_abs_exact(poly: PolyOverK) -> SqrtValue:
    return SqrtValue.abs_sigma1(poly.lead)


def mahler_measure(f, prec: int = DEFAULT_PREC, max_prec: int = MAX_PREC,
                   tol: float | None = None) -> MahlerValue:
    """|lead| * prod max(1, |root|) with multiplicities, certified.

    Accepts exact coefficient sequences or a PolyOverK; for quadratic
    fields the first complex embedding is measured.
    """
    if isinstance(f, SplitPoly):
        sv = mahler_sigma1_exact_split(f)
        return MahlerValue(sv.to_interval(prec), f.degree)
    poly = f if isinstance(f, PolyOverK) else None
    if poly is None:
        from .polynomials import int_to_poly
        poly = int_to_poly([Fraction(c) for c in f])
    lead_abs = _lead_abs_exact(poly)
    goal = tol if tol is not None else float(2.0 ** (-(prec // 3)))
    last = None
    for p in escalating(prec, max_prec):
        roots = complex_roots(poly, prec=p, max_prec=max_prec)
        with working_precision(p):
            acc = lead_abs.to_interval(p)
            for rb in roots:
                acc = acc * abs(rb.box).maximum(1) ** rb.multiplicity
            acc = acc.clamp_below(lead_abs.to_interval(p).lo)
            last = acc
        if last.width <= goal:
            break
    return MahlerValue(last, poly.degree)


def mahler_sigma1_exact_split(s: SplitPoly) -> SqrtValue:
    """Exact Mahler measure of the first embedding of a split polynomial."""
    acc = SqrtValue.abs_sigma1(s.lead)
    one = SqrtValue.one()
    for r in s.roots:
        m = SqrtValue.abs_sigma1(r)
        acc = acc * (m if m.compare(one) > 0 else one)
    return acc


def mahler_via_integral(coeffs: Sequence[int | float | Fraction], npoints: int = 4096) -> float:
    """Low-precision circle-integral evaluation, for cross-checks only:
    exp of the mean of log|f| over the unit circle.
    """
    cs = [float(c) for c in coeffs]
    total = 0.0
    for k in range(npoints):
        z = cmath.exp(2j * math.pi * (k + 0.5) / npoints)
        acc = 0j
        for c in reversed(cs):
            acc = acc * z + c
        total += math.log(abs(acc))
    return math.exp(total / npoints)


def arch_gauss_exact(f: PolyOverK) -> SqrtValue:
    """prod_sigma max_i |sigma(a_i)| as an exact quadratic surd."""
    field = f.field
    if field.is_rational:
        return SqrtValue.of_rational(max(abs(c.a) for c in f.coeffs))
    if field.is_imaginary:
        return SqrtValue.of_rational(max(c.norm() for c in f.coeffs))
    best1 = max(SqrtValue.abs_sigma1(c) for c in f.coeffs)
    best2 = max(SqrtValue.abs_sigma1(c.conj()) for c in f.coeffs)
    return best1 * best2


def arch_gauss_product(f: PolyOverK, field=None, prec: int = DEFAULT_PREC) -> RealInterval:
    """Certified enclosure of prod_sigma max_i |sigma(a_i)|."""
    if field is not None and field != f.field:
        raise ValueError("field mismatch")
    return arch_gauss_exact(f).to_interval(prec)


def _gauss_norm_sigma1_exact(f: PolyOverK) -> SqrtValue:
    """max_i |sigma_1(a_i)| as an exact surd (one embedding only)."""
    return max(SqrtValue.abs_sigma1(c) for c in f.coeffs)


def check_complexmahler(f, prec: int = DEFAULT_PREC,
                        max_prec: int = MAX_PREC) -> BoundCheck:
    """Check |f|_C >= M(f) * (n+1)^(-1/2) for the (first-embedding)
    complex polynomial.  Split input is decided exactly; otherwise the
    comparison escalates precision until conclusive or capped.
    """
    if isinstance(f, SplitPoly):
        n = f.degree
        lhs_sv = _gauss_norm_sigma1_exact(f.expand())
        rhs_sv = mahler_sigma1_exact_split(f) * SqrtValue.sqrt_of_rational(Fraction(1, n + 1))
        lhs_iv, rhs_iv = lhs_sv.to_interval(prec), rhs_sv.to_interval(prec)
        return BoundCheck("complexmahler", lhs_iv, rhs_iv,
                          sign_verdict(lhs_sv.compare(rhs_sv)),
                          margin_of(lhs_iv, rhs_iv), exact=True)
    poly = f if isinstance(f, PolyOverK) else None
    if poly is None:
        from .polynomials import int_to_poly
        poly = int_to_poly([Fraction(c) for c in f])
    n = poly.degree
    lhs_sv = _gauss_norm_sigma1_exact(poly)
    last = None
    for p in escalating(prec, max_prec):
        m = mahler_measure(poly, prec=p, max_prec=max_prec)
        with working_precision(p):
            lhs = lhs_sv.to_interval(p)
            rhs = m.enclosure * ri(Fraction(1, n + 1)).sqrt()
        verdict = interval_verdict(lhs, rhs)
        last = BoundCheck("complexmahler", lhs, rhs, verdict, margin_of(lhs, rhs))
        if verdict != INCONCLUSIVE:
            return last
    return last
