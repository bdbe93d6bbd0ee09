"""Exact arithmetic in the real quadratic field Q(sqrt 2).

Every coefficient in this package is a ``Scalar``, i.e. a + b*sqrt(2) with
rational a, b.  sqrt(2) is the only irrationality the algebras force (it
enters through the normalization of the odd geometric basis); everything
else stays rational.  No floating point anywhere.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

Rat = Union[int, Fraction]


class Scalar:
    """Element a + b*sqrt(2) of Q(sqrt 2), with exact field operations.

    Components are `fractions.Fraction`, so they are always in lowest terms
    with positive denominator.  Instances are immutable and hashable.
    """

    __slots__ = ("a", "b")

    def __init__(self, a: Rat = 0, b: Rat = 0):
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    # -- ring / field structure ------------------------------------------

    def __add__(self, other: "Scalar") -> "Scalar":
        other = _coerce(other)
        return Scalar(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar(-self.a, -self.b)

    def __sub__(self, other: "Scalar") -> "Scalar":
        other = _coerce(other)
        return Scalar(self.a - other.a, self.b - other.b)

    def __rsub__(self, other) -> "Scalar":
        return _coerce(other) - self

    def __mul__(self, other: "Scalar") -> "Scalar":
        other = _coerce(other)
        # (a + b r)(c + d r) = (ac + 2bd) + (ad + bc) r,  r^2 = 2
        return Scalar(self.a * other.a + 2 * self.b * other.b,
                      self.a * other.b + self.b * other.a)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        """Multiplicative inverse; the norm a^2 - 2b^2 never vanishes
        for a nonzero element (2 is not a rational square)."""
        n = self.a * self.a - 2 * self.b * self.b
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt 2)")
        return Scalar(self.a / n, -self.b / n)

    def __truediv__(self, other: "Scalar") -> "Scalar":
        return self * _coerce(other).inverse()

    def __rtruediv__(self, other) -> "Scalar":
        return _coerce(other) * self.inverse()

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_rational(self) -> bool:
        return self.b == 0

    def rational_part(self) -> Fraction:
        if self.b != 0:
            raise ValueError(f"{self} is not rational")
        return self.a

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    # -- formatting -------------------------------------------------------

    def __str__(self) -> str:
        if self.b == 0:
            return _fmt_rat(self.a)
        s = f"{_fmt_rat(self.b)}*r2"
        if self.a == 0:
            return s
        sign = "+" if self.b > 0 else ""
        return f"{_fmt_rat(self.a)}{sign}{s}"

    def __repr__(self) -> str:
        return f"Scalar({self})"


def _coerce(x) -> Scalar:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar(x)
    raise TypeError(f"cannot coerce {x!r} to Scalar")


def _fmt_rat(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


ZERO = Scalar(0)
ONE = Scalar(1)
TWO = Scalar(2)
HALF = Scalar(Fraction(1, 2))
SQRT2 = Scalar(0, 1)

_RAT = r"[+-]?\d+(?:/\d+)?"
_SCALAR_RE = re.compile(
    rf"^(?:(?P<a>{_RAT})(?=$|[+-]))?(?:(?P<b>{_RAT})\*?r2)?$"
)


def parse_scalar(text: str) -> Scalar:
    """Parse the serialization produced by ``str(Scalar)``.

    Accepted forms: ``"a/b"``, ``"c/d*r2"``, ``"a/b+c/d*r2"`` (signs allowed
    on both parts, integer parts may omit the denominator).  Round-trips
    bit-exactly with ``str``.
    """
    s = text.strip().replace(" ", "")
    m = _SCALAR_RE.match(s)
    if not m or (m.group("a") is None and m.group("b") is None and s != "0"):
        raise ValueError(f"cannot parse scalar {text!r}")
    a = Fraction(m.group("a")) if m.group("a") else Fraction(0)
    b = Fraction(m.group("b")) if m.group("b") else Fraction(0)
    return Scalar(a, b)


def scalar_arith(x: Scalar, y: Scalar, op: str) -> Scalar:
    """Dispatch one exact field operation; ``op`` is one of ``+ - * /``."""
    if op == "+":
        return x + y
    if op == "-":
        return x - y
    if op == "*":
        return x * y
    if op == "/":
        return x / y
    raise ValueError(f"unknown operation {op!r}")
