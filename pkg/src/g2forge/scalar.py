"""Exact arithmetic in the quadratic field Q(sqrt 2)."""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

__all__ = ["Scalar", "SQRT2", "as_scalar"]

_TERM = re.compile(
    r"""
    (?P<sign>[+-]?)
    (?:
        (?P<coef>\d+(?:/\d+)?)?\s*\*?\s*sqrt\(?2\)?(?:\s*/\s*(?P<div>\d+))?
      | (?P<rat>\d+(?:/\d+)?)
    )
    """,
    re.VERBOSE,
)


class Scalar:
    """An element ``rat + sqrt2 * sqrt(2)`` of Q(sqrt 2) with exact rational parts.

    Instances are immutable and hashable.  Mixed arithmetic with ``int`` and
    ``Fraction`` is supported on both sides.
    """

    __slots__ = ("_rat", "_sqrt2")

    def __init__(self, rat: int | Fraction | str = 0, sqrt2: int | Fraction | str = 0):
        object.__setattr__(self, "_rat", Fraction(rat))
        object.__setattr__(self, "_sqrt2", Fraction(sqrt2))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @property
    def rat(self) -> Fraction:
        return self._rat

    @property
    def sqrt2(self) -> Fraction:
        return self._sqrt2

    # -- construction -----------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> "Scalar":
        """Parse ``"p/q"``, ``"p/q+r/s*sqrt2"`` and looser variants such as
        ``"-sqrt2/2"`` or ``"1 - 3*sqrt(2)"``."""
        if not isinstance(text, str):
            raise TypeError(f"expected a string, got {type(text).__name__}")
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty scalar string")
        try:
            return cls._parse_terms(s, text)
        except ZeroDivisionError:
            raise ValueError(f"zero denominator in scalar {text!r}") from None

    @classmethod
    def _parse_terms(cls, s: str, text: str) -> "Scalar":
        rat = Fraction(0)
        irr = Fraction(0)
        pos = 0
        while pos < len(s):
            m = _TERM.match(s, pos)
            if m is None or m.end() == pos or (pos > 0 and not m.group("sign")):
                raise ValueError(f"cannot parse scalar {text!r}")
            sign = -1 if m.group("sign") == "-" else 1
            if m.group("rat") is not None:
                rat += sign * Fraction(m.group("rat"))
            else:
                coef = Fraction(m.group("coef") or 1)
                if m.group("div"):
                    coef /= int(m.group("div"))
                irr += sign * coef
            pos = m.end()
        return cls(rat, irr)

    # -- predicates -------------------------------------------------------

    def is_rational(self) -> bool:
        return self._sqrt2 == 0

    def __bool__(self) -> bool:
        return bool(self._rat) or bool(self._sqrt2)

    def sign(self) -> int:
        """Exact sign of the real number represented."""
        a, b = self._rat, self._sqrt2
        sa = (a > 0) - (a < 0)
        sb = (b > 0) - (b < 0)
        if sa == sb or sb == 0:
            return sa
        if sa == 0:
            return sb
        # opposite signs: compare a^2 with 2 b^2
        d = a * a - 2 * b * b
        return sa if d > 0 else sb

    # -- arithmetic -------------------------------------------------------

    def conjugate(self) -> "Scalar":
        return Scalar(self._rat, -self._sqrt2)

    def field_norm(self) -> Fraction:
        """``(a + b sqrt2)(a - b sqrt2) = a^2 - 2 b^2``."""
        return self._rat * self._rat - 2 * self._sqrt2 * self._sqrt2

    def inverse(self) -> "Scalar":
        n = self.field_norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(sqrt2)")
        return Scalar(self._rat / n, -self._sqrt2 / n)

    def __add__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return Scalar(self._rat + o._rat, self._sqrt2 + o._sqrt2)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return Scalar(self._rat - o._rat, self._sqrt2 - o._sqrt2)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        a, b, c, d = self._rat, self._sqrt2, o._rat, o._sqrt2
        return Scalar(a * c + 2 * b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, exponent: int) -> "Scalar":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result, base = Scalar(1), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __neg__(self) -> "Scalar":
        return Scalar(-self._rat, -self._sqrt2)

    def __pos__(self) -> "Scalar":
        return self

    def __abs__(self) -> "Scalar":
        return -self if self.sign() < 0 else self

    # -- comparison -------------------------------------------------------

    def __eq__(self, other) -> bool:
        o = _coerce(other)
        if o is NotImplemented:
            if isinstance(other, float):
                return float(self) == other
            return NotImplemented
        return self._rat == o._rat and self._sqrt2 == o._sqrt2

    def __hash__(self) -> int:
        if self._sqrt2 == 0:
            return hash(self._rat)
        return hash((self._rat, self._sqrt2))

    def __lt__(self, other) -> bool:
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return (self - o).sign() < 0

    def __le__(self, other) -> bool:
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return (self - o).sign() <= 0

    def __gt__(self, other) -> bool:
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return (self - o).sign() > 0

    def __ge__(self, other) -> bool:
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return (self - o).sign() >= 0

    # -- conversion -------------------------------------------------------

    def __float__(self) -> float:
        return float(self._rat) + float(self._sqrt2) * 2.0**0.5

    def __str__(self) -> str:
        if self._sqrt2 == 0:
            return _fmt(self._rat)
        if self._sqrt2 in (1, -1):
            irr = "sqrt2" if self._sqrt2 == 1 else "-sqrt2"
        else:
            irr = _fmt(self._sqrt2) + "*sqrt2"
        if self._rat == 0:
            return irr
        if self._sqrt2 > 0:
            irr = "+" + irr
        return _fmt(self._rat) + irr

    def __repr__(self) -> str:
        return f"Scalar('{self}')"


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _coerce(value):
    if isinstance(value, Scalar):
        return value
    if isinstance(value, (int, Rational)):
        return Scalar(value)
    return NotImplemented


def as_scalar(value) -> Scalar:
    """Convert ints, Fractions and scalar strings to :class:`Scalar`."""
    if isinstance(value, Scalar):
        return value
    if isinstance(value, str):
        return Scalar.parse(value)
    if isinstance(value, bool) or not isinstance(value, (int, Rational)):
        raise TypeError(f"cannot convert {value!r} to an exact scalar")
    return Scalar(value)


SQRT2 = Scalar(0, 1)
