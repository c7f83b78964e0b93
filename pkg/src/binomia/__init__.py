"""Exact generalized binomial series via the falling-factorial difference calculus."""

from .binomial_derivation import (
    CoefficientTable,
    VerificationReport,
    coefficient_value,
    derive_coefficient_polynomials,
    newton_coefficient,
    verify_recurrence,
)
from .difference_calculus import (
    FFPoly,
    antidifference,
    ff_eval,
    ff_to_monomial,
    forward_difference,
    monomial_to_ff,
)
from .exact_arith import (
    Exponent,
    GaussianRational,
    Rational,
    parse_scalar,
    rat_normalize,
    render_scalar,
    scalar_arith,
)
from .numeric_eval import convergence_report, eval_partial_sums, reference_power
from .power_series import (
    TruncatedSeries,
    binomial_series,
    integer_power_expand,
    series_multiply,
    shift_multiply_check,
)

__version__ = "0.1.0"
