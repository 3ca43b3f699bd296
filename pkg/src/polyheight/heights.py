"""Global polynomial heights, characteristic polynomials, and the local
Mahler-type quantity attached to a single field element.

H(f)^d is the product of the discrete Gauss norms (exact rational) with
the archimedean ones (exact quadratic surd), so heights compare exactly;
enclosures are reported at any precision and the d-th root is recognized
as an exact rational whenever it is one.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .analytic import MahlerValue, arch_gauss_exact, mahler_measure
from .exactreal import SqrtValue
from .fields import Field, FieldElement, is_root_of_unity
from .intervals import DEFAULT_PREC, MAX_PREC, RealInterval, working_precision
from .numutil import rational_sqrt
from .polynomials import PolyOverK, SplitPoly, int_to_poly
from .valuations import local_max_product, nonarch_gauss_product


@dataclass(frozen=True)
class HeightReport:
    """H(f) with its exact non-archimedean part and certified enclosures."""

    nonarch: Fraction              # exact prod_p |f|_p
    arch: RealInterval             # enclosure of prod_sigma |f|_sigma
    height: RealInterval           # enclosure of (nonarch * arch)^(1/d)
    log_height: RealInterval
    degree: int
    field: Field
    exact: Fraction | None         # exact value of H(f) when rational
    arch_exact: SqrtValue          # exact archimedean product

    def height_power_exact(self, k: int = 1) -> SqrtValue:
        """H(f)^(d*k) as an exact surd."""
        return (SqrtValue.of_rational(self.nonarch) * self.arch_exact) ** k


def _nonarch_of_split(s: SplitPoly) -> Fraction:
    # Gauss's lemma: |f|_p = |lead|_p * prod max(1, |root|_p), and the
    # full product of |lead|_p over p is 1/|N(lead)| by the product formula.
    out = Fraction(1, 1) / s.lead.abs_norm()
    for r in s.roots:
        out *= local_max_product(r, s.field)
    return out


def height(f: PolyOverK | SplitPoly, prec: int = DEFAULT_PREC) -> HeightReport:
    """The height H(f), scale-invariant, with H(f) >= 1 always.

    For split input the discrete part is computed from the roots via
    Gauss's lemma; otherwise prime-by-prime from the coefficients.
    """
    if isinstance(f, SplitPoly):
        split, poly = f, f.expand()
        nonarch = _nonarch_of_split(split)
    else:
        poly = f
        nonarch = nonarch_gauss_product(poly, poly.field)
    d = poly.field.degree
    arch_sv = arch_gauss_exact(poly)
    hd_sv = SqrtValue.of_rational(nonarch) * arch_sv
    with working_precision(prec):
        hd_iv = hd_sv.to_interval(prec)
        h_iv = hd_iv if d == 1 else hd_iv.sqrt()
        h_iv = h_iv.clamp_below(1)  # H(f)^d >= prod_v |lead|_v = 1
        log_iv = hd_iv.log() / d
    hd_rat = hd_sv.as_rational()
    exact = None
    if hd_rat is not None:
        exact = hd_rat if d == 1 else rational_sqrt(hd_rat)
    return HeightReport(nonarch, arch_sv.to_interval(prec), h_iv, log_iv,
                        poly.degree, poly.field, exact, arch_sv)


@dataclass(frozen=True)
class CharPoly:
    """Primitive integer minimal polynomial with its power in the
    characteristic polynomial for the field extension."""

    coeffs: tuple[int, ...]       # degree-indexed, primitive, positive lead
    inner_degree: int
    power: int

    def expanded(self) -> list[int]:
        from .polynomials import intpoly_pow
        return intpoly_pow(list(self.coeffs), self.power)

    def __str__(self) -> str:
        return f"CharPoly({list(self.coeffs)}^{self.power})"


def _primitive_int_coeffs(fracs: list[Fraction]) -> tuple[int, ...]:
    den = math.lcm(*(c.denominator for c in fracs))
    ints = [int(c * den) for c in fracs]
    g = math.gcd(*ints)
    if g:
        ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return tuple(ints)


def char_poly(alpha: FieldElement, field: Field | None = None) -> CharPoly:
    """Minimal polynomial over Z and the power [K : Q(alpha)]."""
    fld = field or alpha.field
    d = fld.degree
    if alpha.is_zero():
        return CharPoly((0, 1), 1, d)
    if alpha.is_rational():
        return CharPoly(_primitive_int_coeffs([-alpha.a, Fraction(1)]), 1, d)
    return CharPoly(_primitive_int_coeffs([alpha.norm(), -alpha.trace(), Fraction(1)]), 2, 1)


def mk_alpha_exact(alpha: FieldElement, field: Field | None = None) -> SqrtValue:
    """prod_p max(1,|alpha|_p) * prod_sigma max(1,|alpha|_sigma), exact."""
    fld = field or alpha.field
    if alpha.is_zero():
        return SqrtValue.one()
    nonarch = local_max_product(alpha, fld)
    if fld.is_rational:
        arch = SqrtValue.of_rational(max(Fraction(1), abs(alpha.a)))
    elif fld.is_imaginary:
        arch = SqrtValue.of_rational(max(Fraction(1), alpha.norm()))
    else:
        one = SqrtValue.one()
        p1 = max(SqrtValue.abs_sigma1(alpha), one)
        p2 = max(SqrtValue.abs_sigma1(alpha.conj()), one)
        arch = p1 * p2
    return SqrtValue.of_rational(nonarch) * arch


def mk_alpha(alpha: FieldElement, field: Field | None = None,
             prec: int = DEFAULT_PREC) -> MahlerValue:
    """The local-maxima product for alpha; equals 1 exactly iff alpha is
    zero or a root of unity."""
    fld = field or alpha.field
    sv = mk_alpha_exact(alpha, fld)
    return MahlerValue(sv.to_interval(prec), fld.degree)


def mk_alpha_via_charpoly(alpha: FieldElement, field: Field | None = None,
                          prec: int = DEFAULT_PREC,
                          max_prec: int = MAX_PREC) -> MahlerValue:
    """Independent evaluation route: Mahler measure of the characteristic
    polynomial (minimal polynomial raised to its power)."""
    fld = field or alpha.field
    cp = char_poly(alpha, fld)
    m = mahler_measure(int_to_poly(cp.coeffs), prec=prec, max_prec=max_prec)
    return MahlerValue(m.enclosure ** cp.power, fld.degree)


def count_unity_roots(s: SplitPoly) -> int:
    """Number of roots (with multiplicity) that are roots of unity."""
    return sum(1 for r in s.roots if is_root_of_unity(r, s.field))
