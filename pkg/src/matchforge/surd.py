"""Exact arithmetic in Q(sqrt 5)."""

from __future__ import annotations

from decimal import Decimal, localcontext
from fractions import Fraction
from numbers import Rational


class SurdNumber:
    """The number ``a + b*sqrt(5)`` with rational ``a`` and ``b``."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    @classmethod
    def _wrap(cls, value) -> SurdNumber | None:
        if isinstance(value, SurdNumber):
            return value
        if isinstance(value, (int, Fraction, Rational)):
            return cls(value, 0)
        return None

    def __add__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return SurdNumber(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return SurdNumber(-self.a, -self.b)

    def __sub__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return SurdNumber(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return SurdNumber(self.a * o.a + 5 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        norm = o.norm()
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt 5)")
        return self * o.conjugate() * SurdNumber(Fraction(1) / norm)

    def __pow__(self, k: int):
        if k < 0:
            return SurdNumber(1) / (self ** -k)
        result = SurdNumber(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def conjugate(self) -> SurdNumber:
        return SurdNumber(self.a, -self.b)

    def norm(self) -> Fraction:
        """``self * conjugate``, always rational."""
        return self.a * self.a - 5 * self.b * self.b

    def is_rational(self) -> bool:
        return self.b == 0

    def to_int(self) -> int:
        """Exact integer value; raises ``ValueError`` if not a rational integer."""
        if self.b != 0 or self.a.denominator != 1:
            raise ValueError(f"{self!r} is not an integer")
        return int(self.a)

    def to_decimal(self, prec: int = 50) -> Decimal:
        with localcontext() as ctx:
            ctx.prec = prec + 10
            value = Decimal(self.a.numerator) / Decimal(self.a.denominator)
            value += Decimal(self.b.numerator) / Decimal(self.b.denominator) * Decimal(5).sqrt()
        with localcontext() as ctx:
            ctx.prec = prec
            return +value

    def __eq__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return f"SurdNumber({self.a}, {self.b})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        sign = "-" if self.b < 0 else "+"
        return f"{self.a} {sign} {abs(self.b)}*sqrt(5)"


SQRT5 = SurdNumber(0, 1)
