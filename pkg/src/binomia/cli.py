"""Command-line interface: ``binomia expand | verify | eval``.

Exit codes: 0 success (warnings included), 1 failed verification,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys
from fractions import Fraction

from .binomial_derivation import (
    CheckResult,
    VerificationReport,
    closed_form_entry,
    derive_coefficient_polynomials,
    equivalence_report,
    verify_recurrence,
)
from .exact_arith import Exponent, GaussianRational, parse_scalar, render_scalar
from .numeric_eval import DomainError, convergence_report
from .power_series import binomial_series, render_series, shift_multiply_check

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _envelope(command: str, inputs: dict, results, warning: str | None = None) -> str:
    doc = {"command": command, "inputs": inputs, "results": results}
    if warning:
        doc["warning"] = warning
    return json.dumps(doc, indent=2, ensure_ascii=False)


def parse_exact_exponent(text: str) -> Exponent:
    try:
        return Exponent.parse(text)
    except ZeroDivisionError:
        raise UsageError(f"invalid exponent {text.strip()!r}: division by zero") from None
    except ValueError:
        pass
    try:
        hint = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(
            f"cannot parse exponent {text.strip()!r}; expected an integer, p/q, or a+bi"
        ) from None
    raise UsageError(
        f"float exponent {text.strip()!r} not accepted here; use exact rational {render_scalar(hint)}"
    )


def cmd_expand(exponent: str, order: int, fmt: str = "text") -> str:
    n = parse_exact_exponent(exponent)
    series = binomial_series(n, order)
    if fmt == "json":
        return _envelope(
            "expand",
            {"exponent": str(n), "order": order, "format": fmt},
            {"exponent_kind": n.tag, "coefficients": series.to_strings()},
        )
    return render_series(series, fmt)


def sample_exponents(samples: int, seed: int) -> tuple[list[Fraction], list[GaussianRational]]:
    """Seeded rational and Gaussian-rational exponents (one Gaussian per five rationals, at least one)."""
    rng = random.Random(seed)

    def rat() -> Fraction:
        return Fraction(rng.randint(-60, 60), rng.randint(1, 12))

    rationals = [rat() for _ in range(samples)]
    gaussians = []
    for _ in range(max(1, math.ceil(samples / 5))):
        im = rat()
        while im == 0:
            im = rat()
        gaussians.append(GaussianRational(rat(), im))
    return rationals, gaussians


def run_verification(max_order: int, samples: int, seed: int) -> list[VerificationReport]:
    table = derive_coefficient_polynomials(max_order)
    closed = VerificationReport(
        "closed-form",
        tuple(
            CheckResult(f"c_{k} = ff({k})/{k}!", table[k] == closed_form_entry(k))
            for k in range(len(table))
        ),
    )
    rationals, gaussians = sample_exponents(samples, seed)
    exponents = [*rationals, *gaussians]
    shift_checks = []
    for n in exponents:
        rep = shift_multiply_check(n, max_order)
        detail = "" if rep.passed else "; ".join(f"{c.label}: {c.detail}" for c in rep.failures[:3])
        shift_checks.append(CheckResult(f"n = {render_scalar(n)}, k <= {max_order}", rep.passed, detail))
    return [
        verify_recurrence(table),
        closed,
        equivalence_report(table, exponents),
        VerificationReport("shift-multiply", tuple(shift_checks)),
    ]


def cmd_verify(max_order: int, samples: int, seed: int, fmt: str = "text") -> tuple[str, bool]:
    reports = run_verification(max_order, samples, seed)
    ok = all(r.passed for r in reports)
    total = sum(len(r.checks) for r in reports)
    failed = sum(len(r.failures) for r in reports)
    if fmt == "json":
        out = _envelope(
            "verify",
            {"max_order": max_order, "samples": samples, "seed": seed},
            {
                "passed": ok,
                "total": total,
                "failed": failed,
                "reports": [r.to_dict() for r in reports],
            },
        )
        return out, ok
    lines = []
    for r in reports:
        lines.extend(r.lines())
    for r in reports:
        s = r.summary()
        lines.append(f"{s['name']}: {s['total'] - s['failed']}/{s['total']} passed")
    lines.append(f"total: {total} checks, {failed} failed")
    lines.append("RESULT: " + ("PASS" if ok else "FAIL"))
    return "\n".join(lines), ok


def cmd_eval(exponent: str, x: float, order: int, fmt: str = "text") -> str:
    try:
        n = Exponent.parse(exponent, allow_float=True)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse exponent {exponent.strip()!r}: {exc}") from None
    if not math.isfinite(x):
        raise UsageError("x must be finite")
    try:
        report = convergence_report(n, x, order)
    except DomainError as exc:
        raise UsageError(f"{exc} (1 + x = {1.0 + x!r})") from None
    if fmt == "json":
        return _envelope(
            "eval",
            {"exponent": str(n), "x": x, "order": order},
            {
                "exponent_kind": n.tag,
                "reference": _json_number(report.reference),
                "records": report.records(),
                "final_abs_error": report.final_error,
                "monotone_tail_from": report.monotone_tail_from,
            },
            report.warning,
        )
    return report.to_text()


def _json_number(v):
    if isinstance(v, complex):
        return {"re": v.real, "im": v.imag}
    return v


def _nonneg_int(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be a nonnegative integer")
    return v


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="binomia",
        description="Exact generalized binomial series: expansion, verification, numeric evaluation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="expand (1+x)^n exactly")
    p.add_argument("exponent", help='exact exponent: "3", "-2/3", "i", "1/2+1/3i"')
    p.add_argument("--order", type=_nonneg_int, required=True)
    p.add_argument("--format", choices=("text", "latex", "json"), default="text")

    p = sub.add_parser("verify", help="check the derivation against the product formula")
    p.add_argument("--max-order", type=_positive_int, required=True)
    p.add_argument("--samples", type=_positive_int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("eval", help="partial sums of the series at a float x")
    p.add_argument("exponent", help="exact exponent or a float literal")
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--order", type=_nonneg_int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def _looks_numeric(token: str) -> bool:
    try:
        parse_scalar(token)
        return True
    except (ValueError, ZeroDivisionError):
        pass
    try:
        float(token)
        return True
    except ValueError:
        return False


def _shield_negative_literals(argv: list[str]) -> list[str]:
    # argparse takes "-1/2" or "-i" for an option flag; a leading space hides the dash.
    return [" " + a if a.startswith("-") and _looks_numeric(a) else a for a in argv]


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_shield_negative_literals(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "expand":
            print(cmd_expand(args.exponent, args.order, args.format))
        elif args.command == "verify":
            out, ok = cmd_verify(args.max_order, args.samples, args.seed, args.format)
            print(out)
            return EXIT_OK if ok else EXIT_FAILED
        else:
            print(cmd_eval(args.exponent, args.x, args.order, args.format))
    except UsageError as exc:
        print(f"binomia: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
