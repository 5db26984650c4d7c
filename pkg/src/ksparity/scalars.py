"""Exact scalars in the field Q(i, sqrt 2).

An element is stored as ``x + y*sqrt2`` with ``x`` and ``y`` Gaussian
rationals, each held as a pair of :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Union

Number = Union[int, Fraction, complex, "ExactScalar"]


def _gauss(z) -> tuple[Fraction, Fraction]:
    if isinstance(z, complex):
        re, im = z.real, z.imag
        if re != int(re) or im != int(im):
            raise ValueError(f"complex value {z!r} is not a Gaussian integer")
        return Fraction(int(re)), Fraction(int(im))
    if isinstance(z, (int, Rational)):
        return Fraction(z), Fraction(0)
    raise TypeError(f"cannot convert {type(z).__name__} to ExactScalar")


@dataclass(frozen=True)
class ExactScalar:
    """``(ar + ai*i) + (br + bi*i) * sqrt2`` with rational coefficients."""

    ar: Fraction = Fraction(0)
    ai: Fraction = Fraction(0)
    br: Fraction = Fraction(0)
    bi: Fraction = Fraction(0)

    @classmethod
    def of(cls, value: Number) -> "ExactScalar":
        if isinstance(value, ExactScalar):
            return value
        re, im = _gauss(value)
        return cls(re, im)

    @classmethod
    def sqrt2(cls) -> "ExactScalar":
        return cls(br=Fraction(1))

    @classmethod
    def i(cls) -> "ExactScalar":
        return cls(ai=Fraction(1))

    # Gaussian-rational helpers: (re, im) pairs
    @staticmethod
    def _gmul(a, b):
        return a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0]

    def __add__(self, other: Number) -> "ExactScalar":
        o = ExactScalar.of(other)
        return ExactScalar(self.ar + o.ar, self.ai + o.ai, self.br + o.br, self.bi + o.bi)

    __radd__ = __add__

    def __neg__(self) -> "ExactScalar":
        return ExactScalar(-self.ar, -self.ai, -self.br, -self.bi)

    def __sub__(self, other: Number) -> "ExactScalar":
        return self + (-ExactScalar.of(other))

    def __rsub__(self, other: Number) -> "ExactScalar":
        return ExactScalar.of(other) - self

    def __mul__(self, other: Number) -> "ExactScalar":
        o = ExactScalar.of(other)
        a, b = (self.ar, self.ai), (self.br, self.bi)
        c, d = (o.ar, o.ai), (o.br, o.bi)
        ac = self._gmul(a, c)
        bd = self._gmul(b, d)
        ad = self._gmul(a, d)
        bc = self._gmul(b, c)
        # (a + b r)(c + d r) = ac + 2bd + (ad + bc) r, r = sqrt2
        return ExactScalar(
            ac[0] + 2 * bd[0], ac[1] + 2 * bd[1], ad[0] + bc[0], ad[1] + bc[1]
        )

    __rmul__ = __mul__

    def conjugate(self) -> "ExactScalar":
        return ExactScalar(self.ar, -self.ai, self.br, -self.bi)

    def _sqrt2_conjugate(self) -> "ExactScalar":
        return ExactScalar(self.ar, self.ai, -self.br, -self.bi)

    def inverse(self) -> "ExactScalar":
        if self.is_zero():
            raise ZeroDivisionError("ExactScalar division by zero")
        # multiply through by the sqrt2-conjugate, then by the complex conjugate
        # of the resulting Gaussian rational
        s = self._sqrt2_conjugate()
        g = self * s  # lies in Q(i)
        assert g.br == 0 and g.bi == 0
        n = g.ar * g.ar + g.ai * g.ai
        ginv = ExactScalar(g.ar / n, -g.ai / n)
        return s * ginv

    def __truediv__(self, other: Number) -> "ExactScalar":
        return self * ExactScalar.of(other).inverse()

    def __rtruediv__(self, other: Number) -> "ExactScalar":
        return ExactScalar.of(other) * self.inverse()

    def __eq__(self, other) -> bool:
        try:
            o = ExactScalar.of(other)
        except (TypeError, ValueError):
            return NotImplemented
        return (self.ar, self.ai, self.br, self.bi) == (o.ar, o.ai, o.br, o.bi)

    def __hash__(self) -> int:
        return hash((self.ar, self.ai, self.br, self.bi))

    def is_zero(self) -> bool:
        return not (self.ar or self.ai or self.br or self.bi)

    def abs2(self) -> "ExactScalar":
        """Squared modulus ``z * conj(z)``; real, possibly involving sqrt2."""
        return self * self.conjugate()

    def is_gaussian_integer(self) -> bool:
        return (
            self.br == 0
            and self.bi == 0
            and self.ar.denominator == 1
            and self.ai.denominator == 1
        )

    def to_complex(self) -> complex:
        r2 = 2 ** 0.5
        return complex(float(self.ar) + float(self.br) * r2, float(self.ai) + float(self.bi) * r2)

    def __repr__(self) -> str:
        def g(re, im):
            return f"({re}{im:+}i)"

        if self.br == 0 and self.bi == 0:
            return f"ExactScalar{g(self.ar, self.ai)}"
        return f"ExactScalar{g(self.ar, self.ai)}+{g(self.br, self.bi)}*sqrt2"


ZERO = ExactScalar()
ONE = ExactScalar(Fraction(1))
