"""Prime splitting, p-adic valuations and discrete Gauss-norm products.

Valuations at split primes embed K into Q_p via a Hensel-lifted square
root of D; inert and ramified valuations reduce to the p-adic valuation
of the field norm.  Everything here is exact rational arithmetic.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .fields import Field, FieldElement
from .intervals import DEFAULT_PREC, RealInterval, working_precision
from .numutil import disc_symbol, factorize, is_prime, sqrt_mod_prime, vp

INFINITE = math.inf  # valuation of zero, signaled distinctly


@dataclass(frozen=True)
class PrimeOfK:
    """A prime of the field above the rational prime p.

    kind is "split", "inert" or "ramified" for quadratic fields and
    "rational" over Q.  Split primes carry a branch in {0, 1}; the two
    branches are exchanged by conjugation.
    """

    p: int
    kind: str
    residue_norm: int
    branch: int | None = None
    D: int | None = None

    @property
    def hensel_root(self) -> int | None:
        """Square root of D mod p identifying the branch (split only)."""
        if self.kind != "split":
            return None
        return _hensel_root(self.D, self.p, self.branch, 1)

    def lifted_root(self, level: int) -> int:
        if self.kind != "split":
            raise ValueError("only split primes carry Hensel data")
        return _hensel_root(self.D, self.p, self.branch, level)

    def conjugate(self) -> "PrimeOfK":
        if self.kind != "split":
            return self
        return PrimeOfK(self.p, "split", self.residue_norm, 1 - self.branch, self.D)

    def __str__(self) -> str:
        tag = f", branch {self.branch}" if self.branch is not None else ""
        return f"<{self.kind} prime above {self.p}{tag}>"


@lru_cache(maxsize=None)
def _hensel_root(D: int, p: int, branch: int, level: int) -> int:
    """r with r^2 = D mod p^level, branch-consistent under lifting.

    Branch 0 is the root in (0, p/2) for odd p, the root = 1 mod 4 for
    p = 2; branch 1 is its negative.
    """
    if p == 2:
        # D = 1 mod 8; four roots mod 2^k for k >= 3, two 2-adic branches
        r = 1 if branch == 0 else 3
        k = 3
        mod = 8
        while k < level:
            nxt = mod * 2
            if (r * r - D) % nxt != 0:
                r += mod // 2
            mod = nxt
            k += 1
        return r % (2 ** max(level, 3))
    r0 = sqrt_mod_prime(D % p, p)
    r0 = min(r0, p - r0) if branch == 0 else max(r0, p - r0)
    r, k, mod = r0, 1, p
    while k < level:
        # quadratic Newton lifting
        new_k = min(2 * k, level)
        new_mod = p ** new_k
        inv = pow(2 * r, -1, new_mod)
        r = (r - (r * r - D) * inv) % new_mod
        k, mod = new_k, new_mod
    return r % p ** level


def split_prime(p: int, field: Field) -> list[PrimeOfK]:
    """The primes of the field above the rational prime p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if field.is_rational:
        return [PrimeOfK(p, "rational", p)]
    sym = disc_symbol(field.disc, p)
    if sym == 0:
        return [PrimeOfK(p, "ramified", p, None, field.D)]
    if sym == -1:
        return [PrimeOfK(p, "inert", p * p, None, field.D)]
    return [PrimeOfK(p, "split", p, 0, field.D),
            PrimeOfK(p, "split", p, 1, field.D)]


def _rational_mod(q: Fraction, mod: int) -> int:
    """q mod 'mod' for a rational with denominator coprime to mod."""
    return q.numerator * pow(q.denominator, -1, mod) % mod


def valuation(x: FieldElement, prime: PrimeOfK):
    """ord_p(x); math.inf for x = 0."""
    if x.is_zero():
        return INFINITE
    p = prime.p
    if prime.kind == "rational":
        return vp(x.a, p)
    if prime.kind == "ramified":
        return vp(x.norm(), p)
    if prime.kind == "inert":
        v = vp(x.norm(), p)
        assert v % 2 == 0, "inert norm valuation must be even"
        return v // 2
    # split: embed via sqrt(D) -> Hensel root in Z_p
    va = vp(x.a, p) if x.a != 0 else None
    vb = vp(x.b, p) if x.b != 0 else None
    m = min(v for v in (va, vb) if v is not None)
    scale = Fraction(1, p) ** m
    a, b = x.a * scale, x.b * scale
    norm = a * a - prime.D * b * b
    level = vp(norm, p) + 1
    mod = p ** max(level, 3 if p == 2 else 1)
    r = prime.lifted_root(max(level, 3 if p == 2 else 1))
    t = (_rational_mod(a, mod) + _rational_mod(b, mod) * r) % mod
    assert t != 0, "Hensel level was provably sufficient"
    return m + vp(t, p)


def abs_at(x: FieldElement, prime: PrimeOfK) -> Fraction:
    """|x|_p = residue_norm^(-ord); 0 for x = 0."""
    v = valuation(x, prime)
    if v is INFINITE:
        return Fraction(0)
    return Fraction(prime.residue_norm) ** (-v)


def _coeff_list(f) -> Sequence[FieldElement]:
    return f.coeffs if hasattr(f, "coeffs") else f


def element_support(x: FieldElement, include_numerator: bool = True) -> set[int]:
    """Rational primes where x can have a nonzero valuation.

    Negative valuations force p | den(a) or p | den(b); positive ones
    force p | num(N(x)).
    """
    primes = set(factorize(x.a.denominator)) | set(factorize(x.b.denominator))
    if include_numerator:
        n = x.norm()
        if n.numerator != 0:
            primes |= set(factorize(n.numerator))
    return primes


def primes_above(ps: Iterable[int], field: Field) -> list[PrimeOfK]:
    out: list[PrimeOfK] = []
    for p in sorted(set(ps)):
        out.extend(split_prime(p, field))
    return out


def nonarch_gauss_product(f, field: Field) -> Fraction:
    """prod_p |f|_p = prod_p max_i |a_i|_p over all primes of the field.

    Exact; equals 1 for primitive integer-coefficient polynomials and
    1/N(content ideal) in general.
    """
    coeffs = [c for c in _coeff_list(f) if not c.is_zero()]
    if not coeffs:
        raise ValueError("zero polynomial has no Gauss norm")
    support: set[int] = set()
    for c in coeffs:
        support |= element_support(c)
    out = Fraction(1)
    for pr in primes_above(support, field):
        m = min(valuation(c, pr) for c in coeffs)
        if m:
            out *= Fraction(pr.residue_norm) ** (-m)
    return out


def local_max_product(x: FieldElement, field: Field, exponent: int = 1) -> Fraction:
    """prod_p max(1, |x|_p^exponent), exact.

    Only primes with negative valuation contribute, and those divide the
    coordinate denominators.
    """
    if x.is_zero():
        return Fraction(1)
    out = Fraction(1)
    for pr in primes_above(element_support(x, include_numerator=False), field):
        v = valuation(x, pr)
        if v < 0:
            out *= Fraction(pr.residue_norm) ** (-v * exponent)
    return out


@dataclass(frozen=True)
class ProductFormulaReport:
    element: FieldElement
    nonarch: Fraction          # exact prod_p |x|_p
    arch: RealInterval         # enclosure of prod_sigma |x|_sigma
    product: RealInterval      # nonarch * arch
    holds: bool


def product_formula_check(x: FieldElement, field: Field,
                          prec: int = DEFAULT_PREC) -> ProductFormulaReport:
    """Verify prod_p |x|_p * prod_sigma |x|_sigma = 1 for x != 0."""
    if x.is_zero():
        raise ValueError("product formula applies to nonzero elements")
    nonarch = Fraction(1)
    for pr in primes_above(element_support(x), field):
        v = valuation(x, pr)
        if v:
            nonarch *= Fraction(pr.residue_norm) ** (-v)
    with working_precision(prec):
        arch = RealInterval.from_fraction(1)
        for box in x.embeddings(prec):
            arch = arch * abs(box)
        product = arch * RealInterval.from_fraction(nonarch)
        holds = Fraction(1) in product
    # exact cross-check: the archimedean product is |N(x)| exactly
    assert nonarch * x.abs_norm() == 1, "product formula violated exactly"
    return ProductFormulaReport(x, nonarch, arch, product, holds)
