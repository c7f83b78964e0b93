"""Truncated power series over exact scalars.

A :class:`TruncatedSeries` knows its coefficients only up to its order ``K``;
products are refused past the order both factors support. A plain list or
tuple handed to :func:`series_multiply` is read as an exact polynomial, whose
coefficients beyond its length are zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .binomial_derivation import CheckResult, VerificationReport
from .exact_arith import Exponent, GaussianRational, Scalar, as_scalar, lift, render_scalar

__all__ = [
    "TruncationError",
    "TruncatedSeries",
    "binomial_series",
    "series_multiply",
    "integer_power_expand",
    "shift_multiply_check",
    "render_series",
]


class TruncationError(ValueError):
    def __init__(self, message: str = "truncation underflow"):
        super().__init__(message)


def _homogenize(values: Sequence) -> tuple[Scalar, ...]:
    vals = [as_scalar(v) for v in values]
    if any(isinstance(v, GaussianRational) for v in vals):
        vals = [lift(v) for v in vals]
    return tuple(vals)


@dataclass(frozen=True)
class TruncatedSeries:
    """Dense coefficients ``c_0 .. c_K``; trailing zeros are kept."""

    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) == 0:
            raise ValueError("a truncated series needs at least c_0")
        object.__setattr__(self, "coeffs", _homogenize(self.coeffs))

    @classmethod
    def from_polynomial(cls, coeffs: Sequence, order: int) -> TruncatedSeries:
        """Zero-pad (or cut) an exact polynomial to truncation order ``order``."""
        if order < 0:
            raise ValueError("order must be nonnegative")
        coeffs = list(coeffs)[: order + 1]
        return cls(tuple(coeffs) + (0,) * (order + 1 - len(coeffs)))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    truncation_order = order

    @property
    def is_complex(self) -> bool:
        return isinstance(self.coeffs[0], GaussianRational)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise TruncationError()
        return TruncatedSeries(self.coeffs[: order + 1])

    def __mul__(self, other) -> TruncatedSeries:
        if not isinstance(other, (TruncatedSeries, list, tuple)):
            return NotImplemented
        k = self.order if not isinstance(other, TruncatedSeries) else min(self.order, other.order)
        return series_multiply(self, other, k)

    def to_strings(self) -> list[str]:
        return [render_scalar(c) for c in self.coeffs]

    def __str__(self) -> str:
        return render_series(self, "text")


def binomial_series(n, K: int) -> TruncatedSeries:
    """``(1+x)**n`` to order ``K`` via ``c_k = c_{k-1} (n-k+1)/k``."""
    if K < 0:
        raise ValueError("K must be nonnegative")
    n = Exponent.of(n).exact()
    c = n * 0 + 1
    coeffs = [c]
    for k in range(1, K + 1):
        c = c * (n - (k - 1)) / k
        coeffs.append(c)
    return TruncatedSeries(tuple(coeffs))


SeriesLike = Union[TruncatedSeries, Sequence]


def _known_coeffs(s: SeriesLike, K: int) -> tuple:
    if isinstance(s, TruncatedSeries):
        if s.order < K:
            raise TruncationError()
        return s.coeffs[: K + 1]
    vals = _homogenize(s)[: K + 1]
    zero = vals[0] * 0 if vals else Fraction(0)
    return vals + (zero,) * (K + 1 - len(vals))


def series_multiply(a: SeriesLike, b: SeriesLike, K: int) -> TruncatedSeries:
    """Cauchy product ``c_k = sum_{j<=k} a_j b_{k-j}`` for ``k <= K``.

    Raises TruncationError when a TruncatedSeries factor has order below ``K``.
    """
    if K < 0:
        raise ValueError("K must be nonnegative")
    ac = _known_coeffs(a, K)
    bc = _known_coeffs(b, K)
    if any(isinstance(v, GaussianRational) for v in ac + bc):
        ac = tuple(lift(v) for v in ac)
        bc = tuple(lift(v) for v in bc)
    out = []
    for k in range(K + 1):
        acc = ac[0] * bc[k]
        for j in range(1, k + 1):
            if ac[j] and bc[k - j]:
                acc = acc + ac[j] * bc[k - j]
        out.append(acc)
    return TruncatedSeries(tuple(out))


def integer_power_expand(m: int, K: int) -> TruncatedSeries:
    """``(1+x)**m`` by multiplying ``1+x`` by itself ``m - 1`` times."""
    if m < 0:
        raise ValueError("m must be a nonnegative integer")
    if K < 0:
        raise ValueError("K must be nonnegative")
    if m == 0:
        return TruncatedSeries.from_polynomial([1], K)
    base = TruncatedSeries.from_polynomial([1, 1], K)
    result = base
    for _ in range(m - 1):
        result = series_multiply(result, base, K)
    return result


def shift_multiply_check(n, K: int) -> VerificationReport:
    """Check ``(1+x)**(n+1) = (1+x)(1+x)**n`` degree by degree up to ``K``.

    The source series is expanded to order ``K+1`` and compared as
    ``S_k + S_{k-1} = T_k`` with ``S_{-1} = 0``.
    """
    n = Exponent.of(n).exact()
    S = binomial_series(n, K + 1)
    T = binomial_series(n + 1, K)
    checks = []
    for k in range(K + 1):
        lhs = S[k] + (S[k - 1] if k else 0)
        ok = lhs == T[k]
        detail = "" if ok else f"{render_scalar(lhs)} != {render_scalar(T[k])}"
        checks.append(CheckResult(f"n = {render_scalar(n)}, k = {k}", ok, detail))
    return VerificationReport("shift-multiply", tuple(checks))


# rendering

def _split_sign(c) -> tuple[bool, Scalar]:
    """``(negative, magnitude)`` for real or purely imaginary ``c``; mixed values keep their sign."""
    if isinstance(c, GaussianRational):
        if c.im == 0:
            c = c.re
        elif c.re == 0:
            return c.im < 0, (-c if c.im < 0 else c)
        else:
            return False, c
    return c < 0, abs(c)


def _text_term(c, k: int) -> tuple[str, str]:
    neg, mag = _split_sign(c)
    coef = render_scalar(mag)
    if isinstance(mag, GaussianRational) and mag.re != 0:
        coef = f"({coef})"
    sign = "-" if neg else "+"
    if k == 0:
        return sign, coef
    power = "x" if k == 1 else f"x^{k}"
    return sign, power if coef == "1" else f"{coef}*{power}"


def _latex_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return rf"\frac{{{q.numerator}}}{{{q.denominator}}}"


def _latex_term(c, k: int) -> tuple[str, str]:
    neg, mag = _split_sign(c)
    power = "" if k == 0 else ("x" if k == 1 else f"x^{{{k}}}")
    if isinstance(mag, GaussianRational):
        im = abs(mag.im)
        im_s = ("" if im == 1 else _latex_rational(im)) + "i"
        if mag.re == 0:
            coef = im_s
        else:
            op = "-" if mag.im < 0 else "+"
            coef = rf"\left({_latex_rational(mag.re)} {op} {im_s}\right)"
    else:
        coef = _latex_rational(mag)
        if coef == "1" and k > 0:
            coef = ""
    return ("-" if neg else "+"), coef + power


def render_series(s: TruncatedSeries, fmt: str = "text") -> str:
    """Render as ``1 + 1/2*x - 1/8*x^2`` (text) or with ``\\frac`` (latex).

    Zero terms are omitted; a series with no nonzero term renders as ``0``.
    """
    if fmt not in ("text", "latex"):
        raise ValueError(f"unknown series format {fmt!r}")
    term = _text_term if fmt == "text" else _latex_term
    parts = [term(c, k) for k, c in enumerate(s.coeffs) if c != 0]
    if not parts:
        return "0"
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out
