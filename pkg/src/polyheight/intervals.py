"""Directed-rounded real intervals and complex boxes.

Thin wrappers over ``mpmath.iv`` so that every enclosure in the library
carries its own endpoints and shrinks under precision escalation.  The
working precision is the ambient ``mpmath.iv`` precision; use
:func:`working_precision` to scope it.
"""
from __future__ import annotations

import math
from contextlib import contextmanager
from fractions import Fraction

import mpmath
from mpmath import iv

DEFAULT_PREC = 256
MAX_PREC = 4096


def mpf_to_fraction(x) -> Fraction:
    """Exact rational value of a finite mpf."""
    p, q = mpmath.libmp.to_rational(mpmath.mpf(x)._mpf_)
    return Fraction(int(p), int(q))


@contextmanager
def working_precision(bits: int):
    """Temporarily set the interval working precision (in bits)."""
    old_iv, old_mp = iv.prec, mpmath.mp.prec
    iv.prec = bits
    mpmath.mp.prec = bits
    try:
        yield
    finally:
        iv.prec = old_iv
        mpmath.mp.prec = old_mp


def escalating(start: int = DEFAULT_PREC, cap: int = MAX_PREC):
    """Yield working precisions start, 2*start, ... up to cap."""
    p = start
    while p <= cap:
        yield p
        p *= 2


class RealInterval:
    """A closed interval [lo, hi] with directed-rounded endpoints."""

    __slots__ = ("_v",)

    def __init__(self, v):
        if not isinstance(v, iv.mpf):
            v = iv.mpf(v)
        self._v = v

    # -- constructors -------------------------------------------------

    @classmethod
    def from_fraction(cls, q: Fraction | int) -> "RealInterval":
        if isinstance(q, int):
            return cls(iv.mpf(q))
        return cls(iv.mpf(q.numerator) / iv.mpf(q.denominator))

    @classmethod
    def hull(cls, lo, hi) -> "RealInterval":
        return cls(iv.mpf([lo, hi]))

    # -- accessors ----------------------------------------------------

    @property
    def lo(self) -> mpmath.mpf:
        return mpmath.mpf(self._v.a)

    @property
    def hi(self) -> mpmath.mpf:
        return mpmath.mpf(self._v.b)

    @property
    def width(self) -> float:
        return float(mpmath.mpf(self._v.delta))

    @property
    def mid(self) -> float:
        return float(mpmath.mpf(self._v.mid))

    def __contains__(self, x) -> bool:
        if isinstance(x, Fraction):
            return self._contains_exact(x)
        return x in self._v

    def _contains_exact(self, q: Fraction) -> bool:
        # endpoint-exact containment test for rationals
        return mpf_to_fraction(self.lo) <= q <= mpf_to_fraction(self.hi)

    def overlaps(self, other: "RealInterval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def certainly_ge(self, other: "RealInterval") -> bool:
        return self.lo >= other.hi

    def certainly_lt(self, other: "RealInterval") -> bool:
        return self.hi < other.lo

    # -- arithmetic ---------------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, RealInterval):
            return x._v
        if isinstance(x, Fraction):
            return iv.mpf(x.numerator) / iv.mpf(x.denominator)
        return iv.mpf(x)

    def __add__(self, other):
        return RealInterval(self._v + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return RealInterval(self._v - self._coerce(other))

    def __rsub__(self, other):
        return RealInterval(self._coerce(other) - self._v)

    def __mul__(self, other):
        return RealInterval(self._v * self._coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return RealInterval(self._v / self._coerce(other))

    def __rtruediv__(self, other):
        return RealInterval(self._coerce(other) / self._v)

    def __neg__(self):
        return RealInterval(-self._v)

    def __pow__(self, k: int):
        return RealInterval(self._v ** k)

    def __abs__(self):
        return RealInterval(abs(self._v))

    def sqrt(self) -> "RealInterval":
        return RealInterval(iv.sqrt(self._v))

    def log(self) -> "RealInterval":
        return RealInterval(iv.log(self._v))

    def exp(self) -> "RealInterval":
        return RealInterval(iv.exp(self._v))

    def maximum(self, other) -> "RealInterval":
        o = other if isinstance(other, RealInterval) else RealInterval(self._coerce(other))
        return RealInterval.hull(max(self.lo, o.lo), max(self.hi, o.hi))

    def intersect(self, other: "RealInterval") -> "RealInterval":
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        if lo > hi:
            raise ValueError("empty intersection")
        return RealInterval.hull(lo, hi)

    def clamp_below(self, bound) -> "RealInterval":
        """Intersect with [bound, inf); bound must be a proven lower bound."""
        b = self._coerce(bound)
        blo = mpmath.mpf(b.a)
        if self.hi < blo:
            raise ValueError("enclosure entirely below proven bound")
        return RealInterval.hull(max(self.lo, blo), self.hi)

    def __repr__(self) -> str:
        return f"RealInterval({mpmath.nstr(self.lo, 20)}, {mpmath.nstr(self.hi, 20)})"

    def __str__(self) -> str:
        return str(self._v)


ONE = None  # set below


def ri(x) -> RealInterval:
    """Shorthand constructor."""
    if isinstance(x, RealInterval):
        return x
    if isinstance(x, Fraction):
        return RealInterval.from_fraction(x)
    return RealInterval(iv.mpf(x))


class ComplexBox:
    """Axis-aligned rectangle in the complex plane (re x im intervals)."""

    __slots__ = ("re", "im")

    def __init__(self, re, im):
        self.re = ri(re)
        self.im = ri(im)

    @classmethod
    def point(cls, z) -> "ComplexBox":
        return cls(iv.mpf(z.real), iv.mpf(z.imag))

    @property
    def width(self) -> float:
        return max(self.re.width, self.im.width)

    def mid(self) -> complex:
        return complex(self.re.mid, self.im.mid)

    def mid_mpc(self) -> mpmath.mpc:
        return mpmath.mpc(mpmath.mpf(self.re._v.mid), mpmath.mpf(self.im._v.mid))

    def __add__(self, other: "ComplexBox") -> "ComplexBox":
        return ComplexBox(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "ComplexBox") -> "ComplexBox":
        return ComplexBox(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "ComplexBox") -> "ComplexBox":
        return ComplexBox(self.re * other.re - self.im * other.im,
                          self.re * other.im + self.im * other.re)

    def __truediv__(self, other: "ComplexBox") -> "ComplexBox":
        den = other.re ** 2 + other.im ** 2
        if den.lo <= 0:
            raise ZeroDivisionError("divisor box touches zero")
        return ComplexBox((self.re * other.re + self.im * other.im) / den,
                          (self.im * other.re - self.re * other.im) / den)

    def __neg__(self) -> "ComplexBox":
        return ComplexBox(-self.re, -self.im)

    def __abs__(self) -> RealInterval:
        return (self.re ** 2 + self.im ** 2).sqrt()

    def conjugate(self) -> "ComplexBox":
        return ComplexBox(self.re, -self.im)

    def contains(self, other: "ComplexBox") -> bool:
        return (self.re.lo <= other.re.lo and other.re.hi <= self.re.hi
                and self.im.lo <= other.im.lo and other.im.hi <= self.im.hi)

    def contains_interior(self, other: "ComplexBox") -> bool:
        return (self.re.lo < other.re.lo and other.re.hi < self.re.hi
                and self.im.lo < other.im.lo and other.im.hi < self.im.hi)

    def disjoint(self, other: "ComplexBox") -> bool:
        return (self.re.hi < other.re.lo or other.re.hi < self.re.lo
                or self.im.hi < other.im.lo or other.im.hi < self.im.lo)

    def intersect(self, other: "ComplexBox") -> "ComplexBox":
        return ComplexBox(self.re.intersect(other.re), self.im.intersect(other.im))

    def inflate(self, r) -> "ComplexBox":
        pad = ri([-r, r]) if not isinstance(r, RealInterval) else r
        return ComplexBox(self.re + pad, self.im + pad)

    def __repr__(self) -> str:
        return f"ComplexBox({self.re!r}, {self.im!r})"


def log2_interval() -> RealInterval:
    return RealInterval(iv.log(iv.mpf(2)))


def float_log(x: int | Fraction) -> float:
    """log of a positive rational that may exceed float range."""
    if isinstance(x, Fraction):
        return float_log(x.numerator) - float_log(x.denominator)
    if x <= 0:
        raise ValueError("log of nonpositive value")
    return math.log(x)
