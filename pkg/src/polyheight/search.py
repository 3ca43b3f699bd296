"""Constructive searches: minimal local Mahler measures, power-family
certificates for the growth constant, lattice case scans, real-case
sampling, the Pell obstruction, and recognition of split polynomials.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .analytic import MahlerValue
from .exactreal import SqrtValue
from .fields import Field, FieldElement, quadratic_field
from .gauss_lattice import EisensteinInt, GaussInt, is_coprime
from .heights import CharPoly, mk_alpha_exact
from .intervals import DEFAULT_PREC, MAX_PREC
from .numutil import is_perfect_square, is_squarefree
from .pell import pell_fundamental
from .polynomials import (PolyOverK, SplitPoly, int_to_poly, intpoly_max_abs,
                          intpoly_mul, intpoly_sum_abs, is_primitive_int)
from .rootfind import complex_roots
from .valuations import local_max_product

MK_SEARCH_MAX_CAP = 4.0


@dataclass(frozen=True)
class MKResult:
    """Minimal local Mahler measure above 1 found under the cap.

    exhaustive means the coefficient-bounded enumeration provably covers
    every element of the field whose measure is at most the cap.
    """

    value: MahlerValue
    witnesses: tuple[CharPoly, ...]
    cap: float
    exhaustive: bool
    value_exact: SqrtValue

    @property
    def lower_fraction(self) -> Fraction:
        """An exact rational lower bound for the minimum (floor of the
        enclosure endpoint)."""
        q = self.value_exact.as_rational()
        if q is not None:
            return q
        from .intervals import mpf_to_fraction
        return mpf_to_fraction(self.value.enclosure.lo)


def mk_search(field: Field, cap: float, prec: int = DEFAULT_PREC) -> MKResult:
    """Exhaustively enumerate characteristic polynomials of field
    elements with measure in (1, cap] and return the minimum with every
    witness attaining it (exact ties)."""
    if cap <= 1:
        raise ValueError("cap must exceed 1")
    if cap > MK_SEARCH_MAX_CAP:
        raise ValueError(f"cap beyond the configured maximum {MK_SEARCH_MAX_CAP}")
    cap_frac = Fraction(cap)
    d = field.degree
    best: SqrtValue | None = None
    witnesses: list[CharPoly] = []

    def offer(value: SqrtValue, cp: CharPoly):
        nonlocal best
        if not (value.compare(1) > 0 and value.compare(cap_frac) <= 0):
            return
        if best is None or value.compare(best) < 0:
            best = value
            witnesses.clear()
            witnesses.append(cp)
        elif value.compare(best) == 0:
            witnesses.append(cp)

    # rational elements: minimal polynomial c1 x + c0, measure max(|c1|,|c0|)^d
    b = int(cap_frac)
    for c1 in range(1, b + 1):
        for c0 in range(-b, b + 1):
            if math.gcd(c1, c0) != 1:
                continue
            m1 = Fraction(max(c1, abs(c0)))
            offer(SqrtValue.of_rational(m1 ** d), CharPoly((c0, c1), 1, d))

    if field.degree == 2:
        D = field.D
        b2, b1, b0 = int(cap_frac), int(2 * cap_frac), int(cap_frac)
        for c2 in range(1, b2 + 1):
            for c1 in range(-b1, b1 + 1):
                for c0 in range(-b0, b0 + 1):
                    if math.gcd(c2, math.gcd(c1, c0)) != 1:
                        continue
                    disc = c1 * c1 - 4 * c2 * c0
                    if disc == 0 or (disc > 0 and is_perfect_square(disc)):
                        continue  # reducible over Q
                    if disc % D != 0:
                        continue
                    s2 = disc // D
                    if s2 <= 0:
                        continue
                    s = math.isqrt(s2)
                    if s * s != s2:
                        continue
                    alpha = field.element(Fraction(-c1, 2 * c2), Fraction(s, 2 * c2))
                    offer(mk_alpha_exact(alpha, field), CharPoly((c0, c1, c2), 2, 1))

    if best is None:
        raise ValueError(f"no measure in (1, {cap}] over {field}; raise the cap")
    return MKResult(MahlerValue(best.to_interval(prec), d),
                    tuple(witnesses), float(cap), True, best)


def mk_direct_enumeration(field: Field, cap: float, num_bound: int = 6,
                          den_bound: int = 3) -> list[tuple[FieldElement, SqrtValue]]:
    """Independent oracle route: scan field elements a + b sqrt(D) with
    bounded numerators/denominators and list those with measure in
    (1, cap]."""
    cap_frac = Fraction(cap)
    fracs = sorted({Fraction(p, q) for q in range(1, den_bound + 1)
                    for p in range(-num_bound, num_bound + 1)})
    out = []
    bs = fracs if field.degree == 2 else [Fraction(0)]
    for a in fracs:
        for bb in bs:
            x = field.element(a, bb)
            if x.is_zero():
                continue
            v = mk_alpha_exact(x, field)
            if v.compare(1) > 0 and v.compare(cap_frac) <= 0:
                out.append((x, v))
    return out


@dataclass(frozen=True)
class Certificate:
    """A rigorous lower bound for the growth constant from one power of a
    primitive split base polynomial:
    cert_value = degree / log(sum of |coefficients|) of base^j."""

    field: Field
    base: tuple[int, ...]
    j: int
    degree: int
    sum_abs: int
    cert_value: float
    height_trend: float    # degree / log H(base^j); the family's trend


def ck_lower_certify(base: Sequence[int], field: Field, j_max: int,
                     check_split: bool = True) -> list[Certificate]:
    """Certificates from base^j for j = 1..j_max, by exact convolution.

    The base must be primitive with all roots in the multiplicative
    group of the field.
    """
    base = [int(c) for c in base]
    if not is_primitive_int(base):
        raise ValueError("base polynomial must be primitive")
    if check_split and recognize_split(int_to_poly(base, field), field) is None:
        raise ValueError(f"base does not split over {field}")
    n = len(base) - 1
    out: list[Certificate] = []
    g = base
    for j in range(1, j_max + 1):
        s = intpoly_sum_abs(g)
        h = intpoly_max_abs(g)
        cert = (n * j) / math.log(s)
        trend = (n * j) / math.log(h) if h > 1 else math.inf
        out.append(Certificate(field, tuple(base), j, n * j, s, cert, trend))
        if j < j_max:
            g = intpoly_mul(g, base)
    return out


@dataclass(frozen=True)
class LatticeReport:
    field: Field
    box_radius: int
    exponent: int
    min_norm: int
    attaining_pairs: tuple[tuple[tuple[int, int], tuple[int, int]], ...]
    unit_or_zero_hits: int   # pairs with beta^w + gamma^w in the excluded set


def _gauss_canonical_box(radius: int) -> list[GaussInt]:
    return [GaussInt(a, b) for a in range(1, radius + 1) for b in range(0, radius + 1)]


def _eisenstein_half_box(radius: int) -> list[EisensteinInt]:
    out = []
    for x in range(-radius, radius + 1):
        for y in range(-radius, radius + 1):
            if x > 0 or (x == 0 and y > 0):
                out.append(EisensteinInt(x, y))
    return out


def lattice_case_check(field: Field, box_radius: int) -> LatticeReport:
    """Exhaustive scan of coprime nonzero pairs (beta, gamma) in a
    coordinate box, minimizing |N(beta^w + gamma^w)|.

    Supported fields: D = -1 (w = 4, Gaussian integers, scanned up to
    unit association) and D = -3 (w = 6, Eisenstein integers, scanned up
    to sign).  Also counts pairs landing in the excluded set
    ({0, 1} resp. {-1, 0, 1}); the scans should find none.
    """
    if box_radius < 1:
        raise ValueError("box radius must be positive")
    if field.D == -1:
        w = 4
        elems = _gauss_canonical_box(box_radius)
        excluded = {(0, 0), (1, 0)}
        unit_normal = lambda z: z.canonical_associate()
    elif field.D == -3:
        w = 6
        elems = _eisenstein_half_box(box_radius)
        excluded = {(0, 0), (1, 0), (-1, 0)}
        unit_normal = None
    else:
        raise ValueError("lattice scan supports Q(sqrt(-1)) and Q(sqrt(-3)) only")
    powers = [(z, z ** w) for z in elems]
    min_norm: int | None = None
    attaining: list[tuple[tuple[int, int], tuple[int, int]]] = []
    hits = 0
    for i, (beta, bw) in enumerate(powers):
        for gamma, gw in powers[i:]:  # symmetric in (beta, gamma)
            if not is_coprime(beta, gamma):
                continue
            v = bw + gw
            if (v.a, v.b) in excluded:
                hits += 1
                continue
            nv = v.norm()
            if min_norm is None or nv < min_norm:
                min_norm = nv
                attaining = [((beta.a, beta.b), (gamma.a, gamma.b))]
            elif nv == min_norm:
                attaining.append(((beta.a, beta.b), (gamma.a, gamma.b)))
    assert min_norm is not None
    return LatticeReport(field, box_radius, w, min_norm,
                         tuple(sorted(attaining)), hits)


@dataclass(frozen=True)
class SampleCheck:
    alpha: FieldElement
    value: Fraction          # exact local product, exponent 2
    threshold: int           # 2^d
    holds: bool


def _case1_product(alpha: FieldElement, field: Field) -> Fraction:
    return (local_max_product(alpha, field, exponent=2)
            * (field.one() + alpha * alpha).abs_norm())


def real_case_samples(field: Field, samples: int, prec: int = DEFAULT_PREC,
                      seed: int = 0) -> list[SampleCheck]:
    """For random nonzero alpha in a totally real field, check exactly
    that prod_p max(1,|alpha|^2_p) * prod_sigma |1+alpha^2|_sigma >= 2^d."""
    if not field.is_totally_real:
        raise ValueError("field must be totally real")
    rng = random.Random(seed)
    threshold = 2 ** field.degree
    out: list[SampleCheck] = []
    while len(out) < samples:
        a = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        b = Fraction(rng.randint(-9, 9), rng.randint(1, 4)) if field.degree == 2 else Fraction(0)
        alpha = field.element(a, b)
        if alpha.is_zero():
            continue
        value = _case1_product(alpha, field)
        out.append(SampleCheck(alpha, value, threshold, value >= threshold))
    return out


@dataclass(frozen=True)
class PellWitness:
    d: int
    b: int
    c: int
    alpha: FieldElement      # b / (c sqrt(-d))
    product: Fraction        # full local product at exponent 2


def pell_counterexample(d: int) -> PellWitness:
    """The Pell-equation obstruction over Q(sqrt(-d)): with b^2 - d c^2 = 1
    and alpha = b/(c sqrt(-d)), the exponent-2 local product collapses to
    |N(b^2 - d c^2)| = 1 exactly, so no uniform lower bound above 1 can
    come from this quantity."""
    if d < 2:
        raise ValueError("d must be at least 2")
    if is_perfect_square(d):
        raise ValueError(f"{d} is a perfect square")
    if not is_squarefree(d):
        raise ValueError(f"{d} is not squarefree")
    b, c = pell_fundamental(d)
    field = quadratic_field(-d)
    gamma = field.element(0, c)
    alpha = field.element(b) / gamma
    product = _case1_product(alpha, field)
    assert product <= 1
    return PellWitness(d, b, c, alpha, product)


# ---------------------------------------------------------------------------
# split recognition
# ---------------------------------------------------------------------------

def _round_fraction(x: float, q: int) -> Fraction:
    return Fraction(round(x * q), q)


def _verify_candidates(f_scaled: PolyOverK, candidates: set[FieldElement],
                       original_lead: FieldElement, field: Field) -> SplitPoly | None:
    current = f_scaled
    roots: list[FieldElement] = []
    for alpha in candidates:
        if alpha.is_zero():
            continue
        while True:
            divided = current.divide_root(alpha)
            if divided is None:
                break
            current = divided
            roots.append(alpha)
            if current.degree == 0:
                break
        if current.degree == 0:
            break
    if current.degree == 0 and len(roots) == f_scaled.degree:
        return SplitPoly(original_lead, roots, field)
    return None


def _fast_candidates(f: PolyOverK, q: int) -> set[FieldElement] | None:
    field = f.field
    try:
        mids = [complex(b.mid()) for b in f.embedded_coeffs(64, 0)]
        arr = np.array(mids, dtype=complex)
        if not np.all(np.isfinite(arr)):
            return None
        roots1 = np.roots(arr[::-1])
    except (OverflowError, ValueError, np.linalg.LinAlgError):
        return None
    cands: set[FieldElement] = set()
    if field.is_rational:
        for z in roots1:
            cands.add(field.element(_round_fraction(z.real, q)))
    elif field.is_imaginary:
        rd = math.sqrt(-field.D)
        for z in roots1:
            cands.add(field.element(_round_fraction(z.real, q),
                                    _round_fraction(z.imag / rd, q)))
    else:
        try:
            mids2 = [complex(b.mid()) for b in f.conj().embedded_coeffs(64, 0)]
            roots2 = np.roots(np.array(mids2, dtype=complex)[::-1])
        except (OverflowError, ValueError, np.linalg.LinAlgError):
            return None
        rd = math.sqrt(field.D)
        for z1 in roots1:
            for z2 in roots2:
                a = _round_fraction((z1.real + z2.real) / 2, q)
                b = _round_fraction((z1.real - z2.real) / (2 * rd), q)
                cands.add(field.element(a, b))
    return cands


def _certified_candidates(f: PolyOverK, q: int, prec: int,
                          max_prec: int) -> set[FieldElement]:
    field = f.field
    target = 1 / (8 * q)
    boxes1 = complex_roots(f, target_width=target, prec=prec, max_prec=max_prec)
    cands: set[FieldElement] = set()
    if field.is_rational:
        for rb in boxes1:
            cands.add(field.element(_round_fraction(rb.box.re.mid, q)))
    elif field.is_imaginary:
        rd = math.sqrt(-field.D)
        for rb in boxes1:
            cands.add(field.element(_round_fraction(rb.box.re.mid, q),
                                    _round_fraction(rb.box.im.mid / rd, q)))
    else:
        boxes2 = complex_roots(f.conj(), target_width=target, prec=prec,
                               max_prec=max_prec)
        rd = math.sqrt(field.D)
        for r1 in boxes1:
            for r2 in boxes2:
                z1, z2 = r1.box.re.mid, r2.box.re.mid
                a = _round_fraction((z1 + z2) / 2, q)
                b = _round_fraction((z1 - z2) / (2 * rd), q)
                cands.add(field.element(a, b))
    return cands


def recognize_split(f, field: Field, prec: int = DEFAULT_PREC,
                    max_prec: int = MAX_PREC) -> SplitPoly | None:
    """Exact split form of f over the field, or None when some root lies
    outside the multiplicative group of the field.

    Candidate roots are reconstructed from numeric root enclosures (the
    coordinates of a root have denominator dividing 2|N(lead)| once the
    coefficients are scaled to integral coordinates) and verified by
    exact synthetic division, so a returned SplitPoly is exact.  A
    CertificationError (isolation failure) is distinct from a not-split
    result.
    """
    if isinstance(f, PolyOverK):
        poly = f
        if poly.field != field:
            raise ValueError("field mismatch")
    else:
        poly = int_to_poly(f, field)
    if poly.degree == 0:
        return SplitPoly(poly.lead, [], field)
    if poly.coeffs[0].is_zero():
        return None  # zero root
    den = math.lcm(*(c.a.denominator for c in poly.coeffs),
                   *(c.b.denominator for c in poly.coeffs))
    scaled = poly.scale(field.element(den))
    lead_norm = scaled.lead.abs_norm()
    q = 2 * int(lead_norm)
    cands = _fast_candidates(scaled, q)
    if cands is not None:
        result = _verify_candidates(scaled, cands, poly.lead, field)
        if result is not None:
            return result
    cands = _certified_candidates(scaled, q, prec, max_prec)
    return _verify_candidates(scaled, cands, poly.lead, field)
