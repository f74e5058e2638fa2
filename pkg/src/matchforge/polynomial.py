"""Dense single-variable polynomials with exact integer coefficients."""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence


class IntPolynomial:
    """Polynomial in ``x`` stored densely by exponent.

    ``IntPolynomial([0, 2, 4])`` is ``4x^2 + 2x``. Trailing zeros are stripped,
    so the zero polynomial has an empty coefficient tuple. Instances are
    immutable and hashable.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c: tuple[int, ...] = tuple(c)

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> IntPolynomial:
        if exponent < 0:
            raise ValueError("negative exponent")
        return cls([0] * exponent + [coeff])

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, int]]) -> IntPolynomial:
        acc: dict[int, int] = {}
        for e, a in terms:
            acc[int(e)] = acc.get(int(e), 0) + int(a)
        if not acc:
            return cls()
        c = [0] * (max(acc) + 1)
        for e, a in acc.items():
            if e < 0:
                raise ValueError("negative exponent")
            c[e] = a
        return cls(c)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._c

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._c) - 1

    @property
    def low_degree(self) -> int:
        """Smallest exponent with a nonzero coefficient; -1 for zero."""
        for e, a in enumerate(self._c):
            if a:
                return e
        return -1

    def coeff(self, exponent: int) -> int:
        if 0 <= exponent < len(self._c):
            return self._c[exponent]
        return 0

    def terms(self) -> Iterator[tuple[int, int]]:
        """Nonzero ``(exponent, coefficient)`` pairs by increasing exponent."""
        for e, a in enumerate(self._c):
            if a:
                yield e, a

    def support(self) -> list[int]:
        return [e for e, _ in self.terms()]

    def is_zero(self) -> bool:
        return not self._c

    # arithmetic -------------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-a for a in self._c)

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPolynomial:
        if k < 0:
            raise ValueError("negative power")
        result = IntPolynomial([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, k: int) -> IntPolynomial:
        """Multiply by ``x**k``."""
        if not self._c:
            return self
        return IntPolynomial([0] * k + list(self._c))

    def derivative(self) -> IntPolynomial:
        return IntPolynomial(e * a for e, a in enumerate(self._c) if e)

    def __call__(self, x):
        acc = 0
        for a in reversed(self._c):
            acc = acc * x + a
        return acc

    # comparison / display -------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(self._c)

    def __repr__(self):
        return f"IntPolynomial({list(self._c)!r})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e in range(len(self._c) - 1, -1, -1):
            a = self._c[e]
            if not a:
                continue
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            if e == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("x" if e == 1 else f"x^{e}")
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    # serialization ----------------------------------------------------------

    def to_json(self) -> dict:
        return {"var": "x", "terms": [[e, str(a)] for e, a in self.terms()]}

    @classmethod
    def from_json(cls, obj: dict) -> IntPolynomial:
        if obj.get("var", "x") != "x":
            raise ValueError(f"unsupported variable {obj.get('var')!r}")
        return cls.from_terms((int(e), int(a)) for e, a in obj["terms"])

    def to_csv_rows(self) -> list[tuple[int, int]]:
        return list(self.terms())


def _coerce(value) -> IntPolynomial | None:
    if isinstance(value, IntPolynomial):
        return value
    if isinstance(value, int):
        return IntPolynomial([value])
    return None


def poly(*coeffs: int) -> IntPolynomial:
    """Shorthand constructor, lowest degree first."""
    return IntPolynomial(coeffs)


def sum_polys(polys: Sequence[IntPolynomial] | Iterable[IntPolynomial]) -> IntPolynomial:
    total = IntPolynomial()
    for p in polys:
        total = total + p
    return total
