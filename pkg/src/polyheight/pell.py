"""Fundamental solutions of x^2 - d y^2 = 1 by continued fractions."""
from __future__ import annotations

import math


def pell_fundamental(d: int) -> tuple[int, int]:
    """Smallest positive (x, y) with x^2 - d y^2 = 1, via the continued
    fraction expansion of sqrt(d).  d must be a positive non-square."""
    if d < 2:
        raise ValueError("d must be at least 2")
    a0 = math.isqrt(d)
    if a0 * a0 == d:
        raise ValueError(f"{d} is a perfect square")
    m, den, a = 0, 1, a0
    h_prev, h = 1, a0
    k_prev, k = 0, 1
    while h * h - d * k * k != 1:
        m = den * a - m
        den = (d - m * m) // den
        a = (a0 + m) // den
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
    return h, k
