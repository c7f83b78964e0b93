"""Derive the binomial coefficient polynomials by repeated antidifference.

Writing ``(1+x)**n = 1 + c_1 x + c_2 x**2 + ...`` and comparing with
``(1+x)**(n+1) = (1+x)(1+x)**n`` gives ``c_k(n+1) - c_k(n) = c_{k-1}(n)``.
Each ``c_k`` vanishes at ``n = 0``, so ``c_k`` is the pinned antidifference
of ``c_{k-1}`` starting from ``c_0 = 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from .difference_calculus import FFPoly, antidifference, ff_eval, forward_difference
from .exact_arith import Exponent, Scalar, as_scalar

__all__ = [
    "CheckResult",
    "VerificationReport",
    "CoefficientTable",
    "derive_coefficient_polynomials",
    "newton_coefficient",
    "coefficient_value",
    "verify_recurrence",
    "closed_form_entry",
    "equivalence_report",
]


@dataclass(frozen=True)
class CheckResult:
    label: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a named batch of exact checks."""

    name: str
    checks: tuple[CheckResult, ...] = ()

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            tail = f"  ({c.detail})" if c.detail else ""
            out.append(f"[{status}] {self.name}: {c.label}{tail}")
        return out

    def summary(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "total": len(self.checks),
            "failed": len(self.failures),
        }

    def to_dict(self) -> dict:
        return {
            **self.summary(),
            "checks": [{"label": c.label, "passed": c.passed, "detail": c.detail} for c in self.checks],
        }


@dataclass(frozen=True)
class CoefficientTable:
    """Symbolic coefficients ``entries[k]`` of ``x**k`` as polynomials in ``n``.

    The constructor does not enforce the derivation invariants, so a damaged
    table can be built and handed to :func:`verify_recurrence`.
    """

    entries: tuple[FFPoly, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if not all(isinstance(e, FFPoly) for e in self.entries):
            raise TypeError("table entries must be FFPoly")

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, k: int) -> FFPoly:
        return self.entries[k]

    def __iter__(self) -> Iterator[FFPoly]:
        return iter(self.entries)

    @property
    def order(self) -> int:
        return len(self.entries) - 1

    def replace(self, k: int, poly: FFPoly) -> CoefficientTable:
        entries = list(self.entries)
        entries[k] = poly
        return CoefficientTable(entries)


def derive_coefficient_polynomials(K: int) -> CoefficientTable:
    """Coefficient polynomials ``c_0 .. c_K`` from ``c_0 = 1`` and ``c_k = Σ^{-1} c_{k-1}``."""
    if K < 0:
        raise ValueError("K must be nonnegative")
    entries = [FFPoly.term(0, 1)]
    for _ in range(K):
        entries.append(antidifference(entries[-1]))
    return CoefficientTable(entries)


def _exact_exponent(n) -> Scalar:
    return Exponent.of(n).exact()


def newton_coefficient(n, k: int) -> Scalar:
    """Product formula ``prod_{i=1..k} (n - i + 1) / i``; equals 1 for ``k = 0``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = _exact_exponent(n)
    c = n * 0 + 1
    for i in range(1, k + 1):
        c = c * (n - (i - 1)) / i
    return c


def coefficient_value(table: CoefficientTable, k: int, n) -> Scalar:
    """Evaluate the symbolic coefficient ``table[k]`` at the exponent ``n``."""
    if not 0 <= k < len(table):
        raise IndexError(f"coefficient index {k} outside table of length {len(table)}")
    return ff_eval(table[k], _exact_exponent(n))


def verify_recurrence(table: CoefficientTable) -> VerificationReport:
    """Check ``Δ table[k] = table[k-1]`` symbolically for every ``k >= 1``."""
    checks = []
    for k in range(1, len(table)):
        diff = forward_difference(table[k])
        ok = diff == table[k - 1]
        detail = "" if ok else f"difference of c_{k} is {diff}, expected {table[k - 1]}"
        checks.append(CheckResult(f"c_{k}(n+1) - c_{k}(n) = c_{k - 1}(n)", ok, detail))
    return VerificationReport("recurrence", tuple(checks))


def closed_form_entry(k: int) -> FFPoly:
    """``ff_k / k!``, the closed form every derived entry should match."""
    return FFPoly.term(k, Fraction(1, math.factorial(k)))


def equivalence_report(table: CoefficientTable, exponents: Sequence) -> VerificationReport:
    """Compare derived coefficients with the product formula at each exponent.

    One check per exponent covering every ``k`` in the table.
    """
    checks = []
    for n in exponents:
        n = as_scalar(Exponent.of(n))
        bad = [k for k in range(len(table)) if coefficient_value(table, k, n) != newton_coefficient(n, k)]
        detail = "" if not bad else f"mismatch at k = {bad[:5]}"
        checks.append(CheckResult(f"n = {Exponent.of(n)}, k <= {table.order}", not bad, detail))
    return VerificationReport("equivalence", tuple(checks))
