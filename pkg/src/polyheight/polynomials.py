"""Polynomials over the supported fields, split polynomials, and
integer-polynomial helpers (exact convolution powering, content).
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .fields import Field, FieldElement, rationals
from .intervals import ComplexBox, DEFAULT_PREC
from .numutil import totient


class PolyOverK:
    """A nonzero polynomial with coefficients in a field.

    Coefficients are degree-indexed (a_0 ... a_n) with a_n != 0.
    """

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs: Sequence[FieldElement], field: Field):
        cs = list(coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        if not cs:
            raise ValueError("zero polynomial")
        self.coeffs = tuple(cs)
        self.field = field

    @classmethod
    def from_rationals(cls, coeffs: Iterable[Fraction | int], field: Field) -> "PolyOverK":
        return cls([field.element(c) for c in coeffs], field)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> FieldElement:
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        return (isinstance(other, PolyOverK) and self.field == other.field
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.coeffs, self.field.D))

    def __call__(self, x: FieldElement) -> FieldElement:
        acc = self.field.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __mul__(self, other: "PolyOverK") -> "PolyOverK":
        out = [self.field.zero()] * (self.degree + other.degree + 1)
        for i, ci in enumerate(self.coeffs):
            if ci.is_zero():
                continue
            for j, cj in enumerate(other.coeffs):
                out[i + j] = out[i + j] + ci * cj
        return PolyOverK(out, self.field)

    def __pow__(self, k: int) -> "PolyOverK":
        out = PolyOverK([self.field.one()], self.field)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c: FieldElement) -> "PolyOverK":
        return PolyOverK([ci * c for ci in self.coeffs], self.field)

    def derivative(self) -> "PolyOverK":
        if self.degree == 0:
            raise ValueError("derivative of a constant is the zero polynomial")
        return PolyOverK([self.coeffs[i] * i for i in range(1, len(self.coeffs))],
                         self.field)

    def monic(self) -> "PolyOverK":
        inv = self.lead.inverse()
        return self.scale(inv)

    def divmod(self, other: "PolyOverK") -> tuple["PolyOverK | None", "PolyOverK | None"]:
        """Euclidean division; quotient/remainder are None when zero."""
        zero = self.field.zero()
        rem = list(self.coeffs)
        q = [zero] * max(0, self.degree - other.degree + 1)
        inv = other.lead.inverse()
        for i in range(len(rem) - 1, other.degree - 1, -1):
            if rem[i].is_zero():
                continue
            f = rem[i] * inv
            q[i - other.degree] = f
            for j, oc in enumerate(other.coeffs):
                rem[i - other.degree + j] = rem[i - other.degree + j] - f * oc
        while rem and rem[-1].is_zero():
            rem.pop()
        quo = PolyOverK(q, self.field) if any(not c.is_zero() for c in q) else None
        r = PolyOverK(rem, self.field) if rem else None
        return quo, r

    def divide_root(self, alpha: FieldElement) -> "PolyOverK | None":
        """Exact synthetic division by (x - alpha); None if not a root."""
        acc = self.field.zero()
        out = [self.field.zero()] * self.degree
        for i in range(self.degree, 0, -1):
            acc = acc * alpha + self.coeffs[i]
            out[i - 1] = acc
        if (acc * alpha + self.coeffs[0]).is_zero():
            return PolyOverK(out, self.field)
        return None

    def conj(self) -> "PolyOverK":
        return PolyOverK([c.conj() for c in self.coeffs], self.field)

    def is_rational_poly(self) -> bool:
        return all(c.is_rational() for c in self.coeffs)

    def rational_coeffs(self) -> list[Fraction]:
        if not self.is_rational_poly():
            raise ValueError("polynomial has irrational coefficients")
        return [c.a for c in self.coeffs]

    def embedded_coeffs(self, prec: int = DEFAULT_PREC, embedding: int = 0) -> list[ComplexBox]:
        return [c.embeddings(prec)[embedding] for c in self.coeffs]

    @staticmethod
    def gcd(f: "PolyOverK", g: "PolyOverK") -> "PolyOverK":
        """Monic gcd via the Euclidean algorithm."""
        a, b = f, g
        while b is not None:
            _, r = a.divmod(b)
            a, b = b, r
        return a.monic()

    def squarefree_decomposition(self) -> list[tuple["PolyOverK", int]]:
        """Yun decomposition: list of (squarefree factor, multiplicity).

        The product of factor^multiplicity equals the monic part of self.
        """
        f = self.monic()
        if f.degree == 0:
            return []
        df = f.derivative()
        a = PolyOverK.gcd(f, df)
        if a.degree == 0:
            return [(f, 1)]
        b, _ = f.divmod(a)
        c, _ = df.divmod(a)
        out: list[tuple[PolyOverK, int]] = []
        i = 1
        while True:
            db = b.derivative() if b.degree > 0 else None
            if db is None:
                d = c
            else:
                maxlen = max(len(c.coeffs), len(db.coeffs))
                cs = list(c.coeffs) + [self.field.zero()] * (maxlen - len(c.coeffs))
                ds = list(db.coeffs) + [self.field.zero()] * (maxlen - len(db.coeffs))
                diff = [x - y for x, y in zip(cs, ds)]
                if all(t.is_zero() for t in diff):
                    d = None
                else:
                    d = PolyOverK(diff, self.field)
            if d is None:
                if b.degree > 0:
                    out.append((b, i))
                break
            g = PolyOverK.gcd(b, d)
            if g.degree > 0:
                out.append((g, i))
            b, _ = b.divmod(g)
            c, _ = d.divmod(g)
            i += 1
            if b.degree == 0:
                break
        return out

    def __repr__(self) -> str:
        return f"PolyOverK(deg {self.degree} over {self.field})"

    def __str__(self) -> str:
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            term = f"({c})" if not c.is_rational() or c.a < 0 else str(c)
            if i == 0:
                parts.append(term)
            elif i == 1:
                parts.append(f"{term}*x" if term != "1" else "x")
            else:
                parts.append(f"{term}*x^{i}" if term != "1" else f"x^{i}")
        return " + ".join(parts)


class SplitPoly:
    """lead * prod (x - root_i) with every root a nonzero field element."""

    __slots__ = ("lead", "roots", "field")

    def __init__(self, lead: FieldElement, roots: Iterable[FieldElement], field: Field):
        if lead.is_zero():
            raise ValueError("leading coefficient must be nonzero")
        rs = tuple(sorted(roots, key=lambda r: (r.a, r.b)))
        if any(r.is_zero() for r in rs):
            raise ValueError("roots must lie in the multiplicative group")
        self.lead = lead
        self.roots = rs
        self.field = field

    @property
    def degree(self) -> int:
        return len(self.roots)

    def expand(self) -> PolyOverK:
        coeffs = [self.field.one()]
        for r in self.roots:
            nxt = [self.field.zero()] * (len(coeffs) + 1)
            for i, c in enumerate(coeffs):
                nxt[i + 1] = nxt[i + 1] + c
                nxt[i] = nxt[i] - c * r
            coeffs = nxt
        return PolyOverK([c * self.lead for c in coeffs], self.field)

    def __eq__(self, other) -> bool:
        return (isinstance(other, SplitPoly) and self.lead == other.lead
                and self.roots == other.roots and self.field == other.field)

    def __repr__(self) -> str:
        return f"SplitPoly(lead={self.lead}, roots={[str(r) for r in self.roots]})"


def expand(s: SplitPoly) -> PolyOverK:
    return s.expand()


# ---------------------------------------------------------------------------
# integer polynomial helpers (plain int lists, degree-indexed)
# ---------------------------------------------------------------------------

def intpoly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def intpoly_pow(a: Sequence[int], k: int) -> list[int]:
    out = [1]
    base = list(a)
    while k:
        if k & 1:
            out = intpoly_mul(out, base)
        base = intpoly_mul(base, base)
        k >>= 1
    return out


def intpoly_content(a: Sequence[int]) -> int:
    return math.gcd(*a) if len(a) > 1 else abs(a[0])


def intpoly_sum_abs(a: Sequence[int]) -> int:
    return sum(abs(x) for x in a)


def intpoly_max_abs(a: Sequence[int]) -> int:
    return max(abs(x) for x in a)


def is_primitive_int(a: Sequence[int]) -> bool:
    return intpoly_content(a) == 1


def _rational_gcd_poly(f: list[Fraction], g: list[Fraction]) -> list[Fraction]:
    a, b = f[:], g[:]
    while any(b):
        # monic remainder
        while b and b[-1] == 0:
            b.pop()
        if not b:
            break
        r = a[:]
        for i in range(len(r) - 1, len(b) - 2, -1):
            if i >= len(r) or r[i] == 0:
                continue
            fac = r[i] / b[-1]
            for j in range(len(b)):
                r[i - len(b) + 1 + j] -= fac * b[j]
        while r and r[-1] == 0:
            r.pop()
        a, b = b, r
    if not a:
        return [Fraction(1)]
    inv = 1 / a[-1]
    return [c * inv for c in a]


def has_unit_mahler(coeffs: Sequence[int]) -> bool:
    """Kronecker test: the Mahler measure of an integer polynomial is 1
    iff it is +-x^a times a product of cyclotomic polynomials.
    """
    cs = [int(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    if not cs:
        raise ValueError("zero polynomial")
    if abs(cs[-1]) != 1:
        return False
    # strip x^a
    a0 = 0
    while cs[a0] == 0:
        a0 += 1
    cs = cs[a0:]
    n = len(cs) - 1
    if n == 0:
        return True
    # roots of unity of degree <= n have order ell with phi(ell) <= n
    orders = [ell for ell in range(1, 2 * n * n + 3) if totient(ell) <= n]
    big_n = math.lcm(*orders)
    f = [Fraction(c) for c in cs]
    cyc = [Fraction(-1)] + [Fraction(0)] * (big_n - 1) + [Fraction(1)]  # x^N - 1
    while len(f) > 1:
        g = _rational_gcd_poly(f, cyc)
        if len(g) == 1:
            return False
        # exact division f / g
        q: list[Fraction] = [Fraction(0)] * (len(f) - len(g) + 1)
        r = f[:]
        for i in range(len(r) - 1, len(g) - 2, -1):
            if r[i] == 0:
                continue
            fac = r[i] / g[-1]
            q[i - len(g) + 1] = fac
            for j in range(len(g)):
                r[i - len(g) + 1 + j] -= fac * g[j]
        if any(r):
            return False
        f = q
        while len(f) > 1 and f[-1] == 0:
            f.pop()
    return True


def int_to_poly(coeffs: Sequence[int | Fraction], field: Field | None = None) -> PolyOverK:
    fld = field or rationals()
    return PolyOverK.from_rationals([Fraction(c) for c in coeffs], fld)
