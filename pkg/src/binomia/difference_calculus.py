"""Polynomials in the falling-factorial basis and the forward difference.

A polynomial in ``n`` is stored as a sparse map ``k -> c_k`` over the basis
``ff_k(n) = n(n-1)...(n-k+1)``. In this basis the forward difference acts
termwise, ``Δ ff_k = k ff_{k-1}``, and so does its inverse.
"""

from __future__ import annotations

import re
import threading
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping, Sequence

from .exact_arith import ExactnessError, Scalar, as_scalar, render_scalar

__all__ = [
    "FFPoly",
    "ff_eval",
    "forward_difference",
    "antidifference",
    "monomial_to_ff",
    "ff_to_monomial",
    "stirling1_row",
    "stirling2_row",
    "parse_ffpoly",
]


class FFPoly:
    """Immutable sparse polynomial ``sum_k c_k * ff_k(n)`` with rational ``c_k``.

    Zero coefficients are never stored, so equality is structural.
    """

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Mapping[int, object] | None = None):
        clean: dict[int, Fraction] = {}
        for k, c in (coeffs or {}).items():
            if not isinstance(k, int) or k < 0:
                raise ValueError(f"basis index must be a nonnegative int, got {k!r}")
            c = as_scalar(c)
            if not isinstance(c, Fraction):
                raise TypeError("FFPoly coefficients must be rational")
            if c:
                clean[k] = c
        object.__setattr__(self, "_coeffs", dict(sorted(clean.items())))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("FFPoly is immutable")

    @classmethod
    def term(cls, k: int, c=1) -> FFPoly:
        """The single term ``c * ff_k``."""
        return cls({k: c})

    @classmethod
    def zero(cls) -> FFPoly:
        return cls()

    @property
    def coeffs(self) -> Mapping[int, Fraction]:
        return MappingProxyType(self._coeffs)

    @property
    def degree(self) -> int:
        """Highest stored basis index; ``-1`` for the zero polynomial."""
        return max(self._coeffs, default=-1)

    def __getitem__(self, k: int) -> Fraction:
        return self._coeffs.get(k, Fraction(0))

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, FFPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(tuple(self._coeffs.items())))
        return self._hash

    def __add__(self, other: FFPoly) -> FFPoly:
        if not isinstance(other, FFPoly):
            return NotImplemented
        out = dict(self._coeffs)
        for k, c in other._coeffs.items():
            out[k] = out.get(k, 0) + c
        return FFPoly(out)

    def __neg__(self) -> FFPoly:
        return FFPoly({k: -c for k, c in self._coeffs.items()})

    def __sub__(self, other: FFPoly) -> FFPoly:
        if not isinstance(other, FFPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar) -> FFPoly:
        if isinstance(scalar, FFPoly):
            return NotImplemented
        s = as_scalar(scalar)
        return FFPoly({k: c * s for k, c in self._coeffs.items()})

    __rmul__ = __mul__

    def __call__(self, n) -> Scalar:
        return ff_eval(self, n)

    def __repr__(self) -> str:
        return f"FFPoly({dict(self._coeffs)!r})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for k in sorted(self._coeffs, reverse=True):
            c = self._coeffs[k]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = "" if mag == 1 else render_scalar(mag) + "*"
            parts.append((sign, f"{body}ff({k})"))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def ff_eval(p: FFPoly, n) -> Scalar:
    """Evaluate ``p`` exactly at a rational or Gaussian-rational point ``n``.

    The falling factorials are built incrementally, so the cost is linear in
    the degree.
    """
    if isinstance(n, (float, complex)):
        raise ExactnessError()
    n = as_scalar(n)
    total = n * 0
    ff = n * 0 + 1
    k = 0
    for idx, c in p.coeffs.items():
        while k < idx:
            ff = ff * (n - k)
            k += 1
        total = total + c * ff
    return total


def forward_difference(p: FFPoly) -> FFPoly:
    """``(Δp)(n) = p(n+1) - p(n)`` computed termwise as ``Δ ff_k = k ff_{k-1}``."""
    return FFPoly({k - 1: k * c for k, c in p.coeffs.items() if k > 0})


def antidifference(m: FFPoly) -> FFPoly:
    """The unique ``N`` with ``ΔN = m`` and ``N(0) = 0``.

    Termwise ``a ff_k -> a/(k+1) ff_{k+1}``. Every ``ff_j`` with ``j >= 1``
    vanishes at zero, so the result never carries a constant term.
    """
    return FFPoly({k + 1: c / (k + 1) for k, c in m.coeffs.items()})


# Stirling tables, grown on demand and shared across threads.
_stirling_lock = threading.Lock()
_S1: list[tuple[int, ...]] = [(1,)]
_S2: list[tuple[int, ...]] = [(1,)]


def stirling1_row(n: int) -> tuple[int, ...]:
    """Signed Stirling numbers ``s(n, 0..n)``, so ``ff_n(x) = sum_k s(n,k) x**k``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    with _stirling_lock:
        while len(_S1) <= n:
            m = len(_S1) - 1
            prev = _S1[m]
            # s(m+1, k) = s(m, k-1) - m s(m, k)
            row = [0] * (m + 2)
            for k in range(m + 2):
                left = prev[k - 1] if k >= 1 else 0
                here = prev[k] if k <= m else 0
                row[k] = left - m * here
            _S1.append(tuple(row))
        return _S1[n]


def stirling2_row(n: int) -> tuple[int, ...]:
    """Stirling numbers of the second kind ``S(n, 0..n)``, so ``x**n = sum_k S(n,k) ff_k(x)``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    with _stirling_lock:
        while len(_S2) <= n:
            m = len(_S2) - 1
            prev = _S2[m]
            # S(m+1, k) = k S(m, k) + S(m, k-1)
            row = [0] * (m + 2)
            for k in range(m + 2):
                left = prev[k - 1] if k >= 1 else 0
                here = prev[k] if k <= m else 0
                row[k] = k * here + left
            _S2.append(tuple(row))
        return _S2[n]


def monomial_to_ff(mono_coeffs: Sequence) -> FFPoly:
    """Convert ``sum_j a_j n**j`` (``a_j = mono_coeffs[j]``) to the falling-factorial basis."""
    out: dict[int, Fraction] = {}
    for j, a in enumerate(mono_coeffs):
        a = as_scalar(a)
        if not a:
            continue
        for k, s in enumerate(stirling2_row(j)):
            if s:
                out[k] = out.get(k, 0) + a * s
    return FFPoly(out)


def ff_to_monomial(p: FFPoly) -> list[Fraction]:
    """Monomial coefficients ``[a_0, ..., a_d]`` of ``p``; ``[]`` for zero."""
    out = [Fraction(0)] * (p.degree + 1)
    for k, c in p.coeffs.items():
        for j, s in enumerate(stirling1_row(k)):
            if s:
                out[j] += c * s
    return out


# text form

_TERM = re.compile(
    r"""(?P<sign>[+-]?)\s*
        (?:(?P<coef>\d+(?:/\d+)?)\s*\*?\s*)?
        (?:ff\(\s*(?P<ff>\d+)\s*\)|(?P<n>n)(?:\s*\^\s*(?P<pow>\d+))?)?
    """,
    re.VERBOSE,
)


def parse_ffpoly(text: str) -> FFPoly:
    """Parse terms like ``1/2*ff(2) - ff(1)`` or monomials like ``3*n^2 + n``.

    Both syntaxes may be mixed; monomial terms go through :func:`monomial_to_ff`.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial")
    result = FFPoly()
    pos = 0
    first = True
    while pos < len(s):
        while pos < len(s) and s[pos].isspace():
            pos += 1
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or not (m.group("coef") or m.group("ff") or m.group("n")):
            raise ValueError(f"cannot parse polynomial term at {s[pos:]!r}")
        if not first and not m.group("sign"):
            raise ValueError(f"missing operator before {s[pos:]!r}")
        first = False
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("sign") == "-":
            coef = -coef
        if m.group("ff") is not None:
            result = result + FFPoly.term(int(m.group("ff")), coef)
        elif m.group("n"):
            power = int(m.group("pow") or 1)
            result = result + monomial_to_ff([0] * power + [coef])
        else:
            result = result + FFPoly.term(0, coef)
        pos = m.end()
    return result

