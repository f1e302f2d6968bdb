"""Factorials, double factorials, binomials, and rising factorials.

These are the combinatorial atoms of every closed-form matrix entry and of
the t=1 product chain.  ``factorial`` and ``binomial`` delegate to the
standard library.  ``reciprocal_factorial`` extends 1/n! to all integers by
returning exactly 0 for n < 0 (the reciprocal Gamma function vanishes at the
nonpositive integers); that single convention is what zeroes the
strictly-upper entries of the lower factor and the strictly-lower entries of
the upper factor, turning triangularity into a checkable theorem instead of
an indexing restriction.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import DomainError


def factorial(n: int) -> int:
    """Exact n! for n >= 0."""
    if n < 0:
        raise DomainError(f"factorial of negative {n}")
    return math.factorial(n)


def reciprocal_factorial(n: int) -> Fraction:
    """1/n! for n >= 0; exactly 0 for n < 0."""
    if n < 0:
        return Fraction(0)
    return Fraction(1, math.factorial(n))


def double_factorial(n: int) -> int:
    """n!! = n(n-2)...3*1 for odd n >= -1; (-1)!! is the empty product 1."""
    if n < -1 or n % 2 == 0:
        raise DomainError(f"double factorial needs odd n >= -1, got {n}")
    return math.prod(range(1, n + 1, 2))


def binomial(n: int, k: int) -> int:
    """n choose k for n >= 0; 0 whenever k lies outside 0..n."""
    if n < 0:
        raise DomainError(f"binomial with negative n = {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def rising_factorial(a, n: int):
    """The product a(a+1)...(a+n-1) over a's field; the empty product is 1.

    Works for any exact field element (Fraction or RationalFunction); this is
    how every Gamma-function ratio with integer offset is computed here --
    as a finite product, never through floating point.
    """
    if n < 0:
        raise DomainError(f"rising factorial needs n >= 0, got {n}")
    result = a ** 0
    for m in range(n):
        result = result * (a + m)
    return result
