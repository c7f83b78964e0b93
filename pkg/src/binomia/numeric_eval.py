"""Floating-point evaluation of truncated binomial series.

Exact coefficients are converted to float one term at a time. Complex
exponents are compared against the principal branch ``exp(n log(1+x))``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from itertools import accumulate
from typing import Sequence, Union

from .exact_arith import Exponent, GaussianRational
from .power_series import TruncatedSeries, binomial_series

__all__ = [
    "DomainError",
    "DIVERGENCE_WARNING",
    "float_coefficients",
    "series_terms",
    "eval_partial_sums",
    "reference_power",
    "ConvergenceRow",
    "ConvergenceReport",
    "convergence_report",
]

Number = Union[float, complex]

DIVERGENCE_WARNING = "outside |x|<1: divergent or conditionally convergent; results not validated"


class DomainError(ValueError):
    def __init__(self, message: str = "outside principal real domain"):
        super().__init__(message)


def _to_float(c) -> Number:
    if isinstance(c, GaussianRational):
        return complex(float(c.re), float(c.im))
    return float(c) if not isinstance(c, complex) else c


def float_coefficients(n: float, K: int) -> list[float]:
    """Binomial coefficients for a float exponent, by the product recurrence in float."""
    c = 1.0
    out = [c]
    for k in range(1, K + 1):
        c = c * (n - (k - 1)) / k
        out.append(c)
    return out


def series_terms(s: Union[TruncatedSeries, Sequence], x: float) -> list[Number]:
    """Float terms ``c_k * x**k``."""
    coeffs = s.coeffs if isinstance(s, TruncatedSeries) else s
    return [_to_float(c) * _power(x, k) for k, c in enumerate(coeffs)]


def _power(x: float, k: int) -> float:
    try:
        return x**k
    except OverflowError:
        return math.copysign(math.inf, x if k % 2 else 1.0)


def eval_partial_sums(s: Union[TruncatedSeries, Sequence], x: float) -> list[Number]:
    """Partial sums ``P_0 .. P_K`` with ``P_j = sum_{k<=j} c_k x**k`` in float."""
    return list(accumulate(series_terms(s, x)))


def reference_power(n, x: float) -> Number:
    """``(1+x)**n`` in machine precision; complex ``n`` uses the principal branch."""
    base = 1.0 + x
    if not base > 0:
        raise DomainError()
    e = Exponent.of(n)
    if e.tag == "integer":
        return base ** int(e.value)
    if e.tag == "complex":
        return cmath.exp(complex(e.value) * math.log(base))
    return base ** float(e.value)


def _terminates(e: Exponent) -> bool:
    if e.tag == "integer":
        return e.value >= 0
    if e.tag == "float":
        return e.value >= 0 and float(e.value).is_integer()
    return False


@dataclass(frozen=True)
class ConvergenceRow:
    k: int
    partial_sum: Number
    abs_error: float


@dataclass(frozen=True)
class ConvergenceReport:
    exponent: Exponent
    x: float
    order: int
    reference: Number
    rows: tuple[ConvergenceRow, ...] = field(default_factory=tuple)
    warning: str | None = None

    @property
    def final_error(self) -> float:
        return self.rows[-1].abs_error

    @property
    def final_sum(self) -> Number:
        return self.rows[-1].partial_sum

    @property
    def monotone_tail_from(self) -> int:
        """Smallest ``j`` such that the error never increases from ``k = j`` on."""
        j = len(self.rows) - 1
        while j > 0 and self.rows[j - 1].abs_error >= self.rows[j].abs_error:
            j -= 1
        return j

    def records(self) -> list[dict]:
        return [
            {"k": r.k, "partial_sum": _json_number(r.partial_sum), "abs_error": r.abs_error}
            for r in self.rows
        ]

    def to_text(self) -> str:
        lines = [
            f"(1+x)^n with n = {self.exponent}, x = {self.x!r}, order {self.order}",
            f"reference: {self.reference!r}",
            f"{'k':>5}  {'partial_sum':<44}  abs_error",
        ]
        for r in self.rows:
            lines.append(f"{r.k:>5}  {r.partial_sum!r:<44}  {r.abs_error:.6e}")
        lines.append(f"final abs error: {self.final_error:.6e}")
        lines.append(f"error non-increasing from k = {self.monotone_tail_from}")
        if self.warning:
            lines.append(f"warning: {self.warning}")
        return "\n".join(lines)


def _json_number(v: Number):
    if isinstance(v, complex):
        return {"re": v.real, "im": v.imag}
    return v


def convergence_report(n, x: float, K: int) -> ConvergenceReport:
    """Partial sums of the order-``K`` expansion against :func:`reference_power`.

    Non-terminating exponents with ``|x| >= 1`` are evaluated anyway and the
    report carries a warning.
    """
    if K < 0:
        raise ValueError("K must be nonnegative")
    if not math.isfinite(x):
        raise ValueError("x must be finite")
    e = Exponent.of(n)
    ref = reference_power(e, x)
    if e.is_exact:
        coeffs = binomial_series(e, K)
    else:
        coeffs = float_coefficients(e.value, K)
    sums = eval_partial_sums(coeffs, x)
    rows = tuple(ConvergenceRow(k, p, abs(p - ref)) for k, p in enumerate(sums))
    warning = None
    if abs(x) >= 1 and not _terminates(e):
        warning = DIVERGENCE_WARNING
    return ConvergenceReport(e, x, K, ref, rows, warning)
