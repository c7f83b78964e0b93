"""Exact scalars: rationals, Gaussian rationals, and tagged exponents.

Rationals are :class:`fractions.Fraction`, which already keeps the canonical
reduced form with a positive denominator. Gaussian rationals (complex numbers
with rational parts) are provided by :class:`GaussianRational`.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

__all__ = [
    "Rational",
    "GaussianRational",
    "Scalar",
    "Exponent",
    "ExactnessError",
    "rat_normalize",
    "scalar_arith",
    "as_scalar",
    "lift",
    "is_complex",
    "parse_scalar",
    "render_scalar",
]

Rational = Fraction


class ExactnessError(TypeError):
    """An inexact (float) value reached an operation that needs exact input."""

    def __init__(self, message: str = "exact evaluation requires exact scalar"):
        super().__init__(message)


def rat_normalize(p: int, q: int) -> Fraction:
    """Return ``p/q`` in lowest terms with a positive denominator."""
    if q == 0:
        raise ZeroDivisionError("division by zero")
    return Fraction(p, q)


class GaussianRational:
    """A complex number ``re + im*i`` with exact rational parts.

    Instances are immutable. Mixed arithmetic with ``int`` and ``Fraction``
    lifts the rational operand, and the result is always a GaussianRational
    (even when the imaginary part cancels). Comparison with a rational holds
    iff the imaginary part is zero.
    """

    __slots__ = ("_re", "_im")

    def __init__(self, re: Union[int, Fraction] = 0, im: Union[int, Fraction] = 0):
        if isinstance(re, GaussianRational):
            if im != 0:
                raise TypeError("real part must be rational when an imaginary part is given")
            re, im = re._re, re._im
        object.__setattr__(self, "_re", _exact_rational(re))
        object.__setattr__(self, "_im", _exact_rational(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @property
    def re(self) -> Fraction:
        return self._re

    @property
    def im(self) -> Fraction:
        return self._im

    real = re
    imag = im

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self._re, -self._im)

    def norm(self) -> Fraction:
        """Squared modulus ``re**2 + im**2``."""
        return self._re * self._re + self._im * self._im

    def is_real(self) -> bool:
        return self._im == 0

    # arithmetic

    def __add__(self, other):
        other = _coerce_gr(other)
        if other is NotImplemented:
            return other
        return GaussianRational(self._re + other._re, self._im + other._im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_gr(other)
        if other is NotImplemented:
            return other
        return GaussianRational(self._re - other._re, self._im - other._im)

    def __rsub__(self, other):
        other = _coerce_gr(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self._re * other, self._im * other)
        other = _coerce_gr(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self._re, self._im, other._re, other._im
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return GaussianRational(self._re / other, self._im / other)
        other = _coerce_gr(other)
        if other is NotImplemented:
            return other
        den = other.norm()
        if den == 0:
            raise ZeroDivisionError("division by zero")
        num = self * other.conjugate()
        return GaussianRational(num._re / den, num._im / den)

    def __rtruediv__(self, other):
        other = _coerce_gr(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return GaussianRational(1) / self ** (-exponent)
        result = GaussianRational(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __neg__(self) -> GaussianRational:
        return GaussianRational(-self._re, -self._im)

    def __pos__(self) -> GaussianRational:
        return self

    def __bool__(self) -> bool:
        return bool(self._re) or bool(self._im)

    def __complex__(self) -> complex:
        return complex(float(self._re), float(self._im))

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self._re == other._re and self._im == other._im
        if isinstance(other, (int, Fraction)):
            return self._im == 0 and self._re == other
        return NotImplemented

    def __hash__(self):
        if self._im == 0:
            return hash(self._re)
        return hash((self._re, self._im))

    def __repr__(self) -> str:
        return f"GaussianRational({self._re!s}, {self._im!s})"

    def __str__(self) -> str:
        return render_scalar(self)


def _exact_rational(value) -> Fraction:
    if type(value) is Fraction:
        return value
    if isinstance(value, bool):
        return Fraction(int(value))
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, float):
        raise ExactnessError()
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def _coerce_gr(value):
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(value)
    return NotImplemented


Scalar = Union[Fraction, GaussianRational]


def as_scalar(value) -> Scalar:
    """Coerce ``value`` to an exact scalar; ints become Fractions."""
    if isinstance(value, Exponent):
        value = value.exact()
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, complex):
        raise ExactnessError()
    return _exact_rational(value)


def is_complex(value) -> bool:
    return isinstance(value, GaussianRational)


def lift(value) -> GaussianRational:
    """Lift an exact scalar to a GaussianRational."""
    return value if isinstance(value, GaussianRational) else GaussianRational(as_scalar(value))


_OPS = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "div": lambda a, b: a / b,
}


def scalar_arith(a, b, op: str) -> Scalar:
    """Apply a field operation (``add``, ``sub``, ``mul``, ``div``) exactly.

    Mixed rational/Gaussian inputs are lifted to GaussianRational.
    """
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    a, b = as_scalar(a), as_scalar(b)
    if is_complex(a) or is_complex(b):
        a, b = lift(a), lift(b)
    if op == "div" and b == 0:
        raise ZeroDivisionError("division by zero")
    return fn(a, b)


# text form

_RAT_RE = r"\d+(?:/\d+)?"
_RATIONAL = re.compile(rf"([+-]?)({_RAT_RE})")
_PURE_IMAG = re.compile(rf"([+-]?)({_RAT_RE})?i")
_FULL_COMPLEX = re.compile(rf"([+-]?{_RAT_RE})([+-])({_RAT_RE})?i")


def _parse_unsigned(text: str) -> Fraction:
    if "/" in text:
        p, q = text.split("/")
        return rat_normalize(int(p), int(q))
    return Fraction(int(text))


def _parse_signed(text: str) -> Fraction:
    sign = -1 if text.startswith("-") else 1
    return sign * _parse_unsigned(text.lstrip("+-"))


def parse_scalar(text: str) -> Scalar:
    """Parse ``"3"``, ``"-2/3"``, ``"i"``, ``"1/2i"`` or ``"1/2-1/3i"``.

    Returns a Fraction for real literals and a GaussianRational when an
    imaginary part is written (even ``"1+0i"``).
    """
    s = "".join(text.split())
    if m := _RATIONAL.fullmatch(s):
        return _parse_signed(m.group(1) + m.group(2))
    if m := _PURE_IMAG.fullmatch(s):
        mag = _parse_unsigned(m.group(2)) if m.group(2) else Fraction(1)
        return GaussianRational(0, -mag if m.group(1) == "-" else mag)
    if m := _FULL_COMPLEX.fullmatch(s):
        mag = _parse_unsigned(m.group(3)) if m.group(3) else Fraction(1)
        return GaussianRational(_parse_signed(m.group(1)), -mag if m.group(2) == "-" else mag)
    raise ValueError(f"cannot parse exact scalar from {text!r}")


def _render_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _imag_magnitude(q: Fraction) -> str:
    return "" if q == 1 else _render_rational(q)


def render_scalar(value) -> str:
    """Render an exact scalar as ``p/q`` or ``a+bi``.

    Zero parts of a Gaussian rational are dropped, so ``1+0i`` renders as
    ``1`` and ``0+1i`` as ``i``. The output re-parses to an equal value.
    """
    if isinstance(value, GaussianRational):
        re_, im = value.re, value.im
        if im == 0:
            return _render_rational(re_)
        sign = "-" if im < 0 else ""
        imag = f"{_imag_magnitude(abs(im))}i"
        if re_ == 0:
            return sign + imag
        return f"{_render_rational(re_)}{sign or '+'}{imag}"
    return _render_rational(as_scalar(value))


@dataclass(frozen=True)
class Exponent:
    """The exponent ``n`` of ``(1+x)**n`` with its narrowest kind tag.

    ``value`` is a Fraction for ``integer``/``rational``, a GaussianRational
    with nonzero imaginary part for ``complex``, and a float for ``float``.
    """

    tag: str
    value: object

    TAGS = ("integer", "rational", "complex", "float")

    def __post_init__(self):
        if self.tag not in self.TAGS:
            raise ValueError(f"unknown exponent tag {self.tag!r}")

    @classmethod
    def of(cls, value) -> Exponent:
        if isinstance(value, Exponent):
            return value
        if isinstance(value, float):
            if not math.isfinite(value):
                raise ValueError("exponent must be finite")
            return cls("float", value)
        if isinstance(value, complex):
            raise ExactnessError("complex exponents must be given as exact Gaussian rationals")
        v = as_scalar(value)
        if isinstance(v, GaussianRational):
            if v.im != 0:
                return cls("complex", v)
            v = v.re
        return cls("integer" if v.denominator == 1 else "rational", v)

    @classmethod
    def parse(cls, text: str, allow_float: bool = False) -> Exponent:
        """Parse exact exponent syntax; decimal literals only if ``allow_float``."""
        try:
            return cls.of(parse_scalar(text))
        except ValueError:
            if not allow_float:
                raise
        try:
            return cls.of(float(text))
        except ValueError:
            raise ValueError(f"cannot parse exponent from {text!r}") from None

    @property
    def is_exact(self) -> bool:
        return self.tag != "float"

    def exact(self) -> Scalar:
        if self.tag == "float":
            raise ExactnessError()
        return self.value

    def __str__(self) -> str:
        if self.tag == "float":
            return repr(self.value)
        return render_scalar(self.value)
