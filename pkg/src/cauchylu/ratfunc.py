"""Rational functions in t: normalized quotients of :class:`Polynomial`.

Every instance is held in one canonical form, fixed at construction time:

* numerator and denominator share no nonconstant factor;
* the denominator has integer coefficients with content 1 and positive
  leading coefficient (the numerator absorbs the matching scale);
* zero is exactly 0/1.

Canonical form makes equality a plain structural comparison and printing
deterministic.  Arithmetic coerces ``int``, ``Fraction``, and ``Polynomial``
operands.  ``SYMBOLIC_T`` is the indeterminate as a field element -- passing
it as the scalar t switches the matrix and formula code into symbolic mode.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import DivisionByZero, DomainError, PoleAtPoint
from .polynomial import Polynomial, T, parse_polynomial

_QUOTIENT_RE = re.compile(r"\(([^()]*)\)\s*/\s*\(([^()]*)\)")


def _as_polynomial(value) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return Polynomial((value,))
    raise DomainError(f"cannot build a rational function from {value!r}")


class RationalFunction:
    __slots__ = ("_num", "_den")

    def __init__(self, num=0, den=1):
        num = _as_polynomial(num)
        den = _as_polynomial(den)
        if den.is_zero:
            raise DivisionByZero("zero denominator polynomial")
        g = num.gcd(den)
        if g.degree > 0:
            num //= g
            den //= g
        self._num, self._den = _scale_canonical(num, den)

    @classmethod
    def _from_coprime(cls, num: Polynomial, den: Polynomial) -> RationalFunction:
        """Fast path when num and den are already known to be coprime."""
        self = object.__new__(cls)
        self._num, self._den = _scale_canonical(num, den)
        return self

    @property
    def num(self) -> Polynomial:
        return self._num

    @property
    def den(self) -> Polynomial:
        return self._den

    @property
    def is_zero(self) -> bool:
        return self._num.is_zero

    # -- field arithmetic ----------------------------------------------------

    @staticmethod
    def _coerce(other) -> RationalFunction | None:
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction, Polynomial)):
            return RationalFunction(_as_polynomial(other))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        an, ad = self._num, self._den
        bn, bd = other._num, other._den
        # Henrici's scheme: gcd work stays on the small common parts.
        d1 = ad.gcd(bd)
        if d1.degree <= 0:
            return RationalFunction._from_coprime(an * bd + bn * ad, ad * bd)
        adr = ad // d1
        bdr = bd // d1
        num = an * bdr + bn * adr
        d2 = num.gcd(d1)
        if d2.degree > 0:
            num //= d2
            d1 //= d2
        return RationalFunction._from_coprime(num, adr * bdr * d1)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._from_coprime(-self._num, self._den)

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
        an, ad = self._num, self._den
        bn, bd = other._num, other._den
        g1 = an.gcd(bd)
        if g1.degree > 0:
            an = an // g1
            bd = bd // g1
        g2 = bn.gcd(ad)
        if g2.degree > 0:
            bn = bn // g2
            ad = ad // g2
        return RationalFunction._from_coprime(an * bn, ad * bd)

    __rmul__ = __mul__

    def invert(self) -> RationalFunction:
        if self._num.is_zero:
            raise DivisionByZero("inverse of the zero rational function")
        return RationalFunction._from_coprime(self._den, self._num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.invert()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.invert()

    def __pow__(self, n: int) -> RationalFunction:
        if not isinstance(n, int):
            raise DomainError(f"rational-function power must be int, got {n!r}")
        if n < 0:
            return self.invert() ** (-n)
        return RationalFunction._from_coprime(self._num ** n, self._den ** n)

    def __call__(self, t0) -> Fraction:
        """Exact value at t0; raises PoleAtPoint where the denominator vanishes."""
        if isinstance(t0, int):
            t0 = Fraction(t0)
        if not isinstance(t0, Fraction):
            raise DomainError(f"evaluation point must be exact, got {t0!r}")
        d = self._den(t0)
        if d == 0:
            raise PoleAtPoint(t0)
        return self._num(t0) / d

    # -- value semantics -------------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self):
        return hash((self._num, self._den))

    def __bool__(self):
        return not self._num.is_zero

    def __repr__(self):
        return f"RationalFunction.parse({str(self)!r})"

    def __str__(self):
        """'(num)/(den)' in canonical form; bare polynomial when den is 1."""
        if self._den == 1:
            return str(self._num)
        return f"({self._num})/({self._den})"

    @staticmethod
    def parse(text: str) -> RationalFunction:
        return parse_ratfunc(text)


def _scale_canonical(num: Polynomial, den: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Scale a reduced pair so den is integer, content 1, positive leading."""
    if num.is_zero:
        return Polynomial(), Polynomial((1,))
    scale = 1 / den.content()
    if den.leading < 0:
        scale = -scale
    return num * scale, den * scale


def coerce_scalar(t):
    """Coerce int to Fraction; pass Fraction and RationalFunction through.

    This is the single gate deciding numeric versus symbolic mode: matrix
    and closed-form code runs in whichever field the scalar t lives in.
    """
    if isinstance(t, int):
        return Fraction(t)
    if isinstance(t, (Fraction, RationalFunction)):
        return t
    raise DomainError(f"t must be an exact scalar, got {t!r}")


def parse_ratfunc(text: str) -> RationalFunction:
    """Inverse of ``str(RationalFunction)``."""
    s = text.strip()
    if s.startswith("("):
        m = _QUOTIENT_RE.fullmatch(s)
        if not m:
            raise DomainError(f"unparseable rational function text: {text!r}")
        return RationalFunction(parse_polynomial(m.group(1)), parse_polynomial(m.group(2)))
    return RationalFunction(parse_polynomial(s))


SYMBOLIC_T = RationalFunction(T)
