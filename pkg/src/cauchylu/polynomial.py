"""Dense univariate polynomials in t over the exact rationals.

A polynomial is stored as a tuple of ``Fraction`` coefficients where index k
holds the coefficient of t^k.  The form is canonical: trailing zeros are
stripped, so every nonzero polynomial ends in its (nonzero) leading
coefficient and the zero polynomial is the empty tuple.  The degree of the
zero polynomial is the marker ``NEG_INFINITY``, which compares below every
integer, so ``deg(remainder) < deg(divisor)`` holds uniformly.

Instances are immutable and hashable.  Arithmetic coerces ``int`` and
``Fraction`` scalars to constant polynomials; floats are refused everywhere.

``T`` is the indeterminate itself, the building block for all symbolic work:

    >>> str((T + 2) * (T - 2))
    't^2 - 4'
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd as _int_gcd, lcm as _int_lcm
from typing import Iterable, Union

from .errors import DivisionByZero, DomainError

NEG_INFINITY = float("-inf")

Scalar = Union[int, Fraction]


def _to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise DomainError(f"not an exact coefficient: {value!r}")


class Polynomial:
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_to_fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def constant(cls, value: Scalar) -> Polynomial:
        return cls((value,))

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self):
        """Degree of the polynomial; NEG_INFINITY for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else NEG_INFINITY

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def leading(self) -> Fraction:
        if not self._coeffs:
            raise DomainError("the zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    def coefficient(self, k: int) -> Fraction:
        """Coefficient of t^k; zero beyond the stored degree."""
        if k < 0:
            raise DomainError(f"negative power {k}")
        return self._coeffs[k] if k < len(self._coeffs) else Fraction(0)

    # -- ring arithmetic ---------------------------------------------------

    @staticmethod
    def _coerce(other) -> Polynomial | None:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial((other,))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(tuple(-c for c in self._coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Polynomial:
        if not isinstance(n, int) or n < 0:
            raise DomainError(f"polynomial power must be a nonnegative int, got {n!r}")
        result = Polynomial((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise DivisionByZero("polynomial division by the zero polynomial")
        if self.degree < other.degree:
            return Polynomial(), self
        rem = list(self._coeffs)
        div = other._coeffs
        d = len(div) - 1
        lead = div[-1]
        quot = [Fraction(0)] * (len(rem) - d)
        for k in range(len(quot) - 1, -1, -1):
            c = rem[k + d] / lead
            if c:
                quot[k] = c
                for m, oc in enumerate(div):
                    rem[k + m] -= c * oc
        return Polynomial(quot), Polynomial(rem[:d])

    def __floordiv__(self, other):
        q, _ = divmod(self, other)
        return q

    def __mod__(self, other):
        _, r = divmod(self, other)
        return r

    def __call__(self, t0: Scalar) -> Fraction:
        """Evaluate at t0 by Horner's rule."""
        t0 = _to_fraction(t0)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * t0 + c
        return acc

    # -- normal forms ------------------------------------------------------

    def content(self) -> Fraction:
        """Positive rational c with self/c integer and coprime; 0 for zero."""
        if not self._coeffs:
            return Fraction(0)
        num = 0
        den = 1
        for c in self._coeffs:
            num = _int_gcd(num, c.numerator)
            den = _int_lcm(den, c.denominator)
        return Fraction(num, den)

    def primitive(self) -> Polynomial:
        """self divided by its content (integer coefficients, content 1)."""
        if not self._coeffs:
            return self
        c = self.content()
        return Polynomial(tuple(x / c for x in self._coeffs))

    def monic(self) -> Polynomial:
        if not self._coeffs:
            return self
        lead = self._coeffs[-1]
        return Polynomial(tuple(x / lead for x in self._coeffs))

    def gcd(self, other) -> Polynomial:
        """Monic greatest common divisor by Euclidean remainders.

        Each remainder is rescaled to its primitive part, which keeps
        coefficient growth tame without changing the gcd.
        """
        b = self._coerce(other)
        if b is None:
            raise DomainError(f"cannot take gcd with {other!r}")
        a = self
        if a.is_zero and b.is_zero:
            return Polynomial()
        a = a.primitive() if not a.is_zero else a
        b = b.primitive() if not b.is_zero else b
        while not b.is_zero:
            _, r = divmod(a, b)
            a, b = b, (r.primitive() if not r.is_zero else r)
        return a.monic()

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    def __repr__(self):
        return f"Polynomial.parse({str(self)!r})"

    def __str__(self):
        """Sparse descending form, e.g. '9*t^2 - 4' or '3/2*t^3 + t - 1/2'."""
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for k in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[k]
            if not c:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "t" if k == 1 else f"t^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    @staticmethod
    def parse(text: str) -> Polynomial:
        return parse_polynomial(text)


T = Polynomial((0, 1))

_TERM_RE = re.compile(
    r"(?P<sign>[+-]?)"
    r"(?:(?P<coeff>\d+(?:/\d+)?)\*?)?"
    r"(?:(?P<var>t)(?:\^(?P<power>\d+))?)?"
)


def parse_polynomial(text: str) -> Polynomial:
    """Inverse of ``str(Polynomial)``; accepts any order of sparse terms."""
    compact = re.sub(r"\s+", "", text)
    if not compact:
        raise DomainError("empty polynomial text")
    coeffs: dict[int, Fraction] = {}
    pos = 0
    while pos < len(compact):
        m = _TERM_RE.match(compact, pos)
        if not m or m.end() == pos or (m.group("coeff") is None and m.group("var") is None):
            raise DomainError(f"unparseable polynomial text: {text!r}")
        sign = -1 if m.group("sign") == "-" else 1
        coeff = Fraction(m.group("coeff")) if m.group("coeff") else Fraction(1)
        if m.group("var"):
            power = int(m.group("power")) if m.group("power") else 1
        else:
            power = 0
        coeffs[power] = coeffs.get(power, Fraction(0)) + sign * coeff
        pos = m.end()
    size = max(coeffs) + 1
    out = [Fraction(0)] * size
    for power, value in coeffs.items():
        out[power] = value
    return Polynomial(out)
