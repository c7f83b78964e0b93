import math
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from binomia.binomial_derivation import (
    CoefficientTable,
    closed_form_entry,
    coefficient_value,
    derive_coefficient_polynomials,
    equivalence_report,
    newton_coefficient,
    verify_recurrence,
)
from binomia.difference_calculus import FFPoly, ff_eval, forward_difference
from binomia.exact_arith import ExactnessError, Exponent, GaussianRational
from binomia.power_series import integer_power_expand
from strategies import exponents

I = GaussianRational(0, 1)
SEED = 20261016


class TestDerivation:
    def test_A_is_n(self):
        assert derive_coefficient_polynomials(1)[1] == FFPoly.term(1)

    @pytest.mark.parametrize("k, c", [(2, Fraction(1, 2)), (3, Fraction(1, 6)), (4, Fraction(1, 24)), (5, Fraction(1, 120))])
    def test_entries(self, k, c):
        assert derive_coefficient_polynomials(k)[k] == FFPoly.term(k, c)

    def test_K_zero(self):
        t = derive_coefficient_polynomials(0)
        assert len(t) == 1 and t[0] == FFPoly.term(0)

    def test_negative_K(self):
        with pytest.raises(ValueError):
            derive_coefficient_polynomials(-1)

    def test_table_invariants(self):
        t = derive_coefficient_polynomials(40)
        assert t[0] == FFPoly.term(0, 1)
        for k in range(1, len(t)):
            assert ff_eval(t[k], 0) == 0
            assert forward_difference(t[k]) == t[k - 1]
            assert t[k] == closed_form_entry(k)
            assert dict(t[k].coeffs) == {k: Fraction(1, math.factorial(k))}


class TestNewtonCoefficient:
    def test_zero_exponent(self):
        assert newton_coefficient(0, 3) == 0

    def test_half(self):
        assert newton_coefficient(Fraction(1, 2), 2) == Fraction(-1, 8)

    def test_five_two_from_repeated_multiplication(self):
        oracle = integer_power_expand(5, 5)[2]
        assert oracle == 10
        assert newton_coefficient(5, 2) == oracle

    def test_imaginary(self):
        assert newton_coefficient(I, 2) == GaussianRational(Fraction(-1, 2), Fraction(-1, 2))

    def test_k_zero_is_one_everywhere(self):
        for n in (0, Fraction(-3, 2), I, Exponent.parse("7")):
            assert newton_coefficient(n, 0) == 1

    def test_float_rejected(self):
        with pytest.raises(ExactnessError):
            newton_coefficient(0.5, 2)

    @pytest.mark.parametrize("n", range(0, 15))
    def test_matches_math_comb(self, n):
        for k in range(0, 20):
            assert newton_coefficient(n, k) == math.comb(n, k)

    @given(st.integers(0, 30), st.integers(0, 64))
    def test_integer_vanishing(self, n, k):
        if k > n:
            assert newton_coefficient(n, k) == 0

    @given(exponents, st.integers(1, 64))
    def test_pascal(self, n, k):
        assert newton_coefficient(n + 1, k) == newton_coefficient(n, k) + newton_coefficient(n, k - 1)


class TestCoefficientValue:
    table = derive_coefficient_polynomials(8)

    def test_leading_one(self):
        for n in (0, 5, Fraction(-7, 3), I):
            assert coefficient_value(self.table, 0, n) == 1

    def test_half(self):
        assert coefficient_value(self.table, 2, Fraction(1, 2)) == newton_coefficient(Fraction(1, 2), 2) == Fraction(-1, 8)

    def test_three_three(self):
        assert coefficient_value(self.table, 3, 3) == integer_power_expand(3, 3)[3] == 1

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            coefficient_value(self.table, 9, 1)
        with pytest.raises(IndexError):
            coefficient_value(self.table, -1, 1)

    @given(exponents, st.integers(0, 8))
    def test_equals_product_formula(self, n, k):
        assert coefficient_value(self.table, k, n) == newton_coefficient(n, k)

    def test_equivalence_seeded(self):
        rng = random.Random(SEED)
        ns = [Fraction(rng.randint(-40, 40), rng.randint(1, 9)) for _ in range(10)]
        ns += [GaussianRational(Fraction(rng.randint(-9, 9), 4), Fraction(rng.randint(1, 9), 3)) for _ in range(3)]
        rep = equivalence_report(derive_coefficient_polynomials(24), ns)
        assert rep.passed and len(rep.checks) == 13


class TestVerifyRecurrence:
    def test_derived_passes(self):
        rep = verify_recurrence(derive_coefficient_polynomials(5))
        assert rep.passed
        assert len(rep.checks) == 5

    def test_corrupted_entry_fails(self):
        table = derive_coefficient_polynomials(5).replace(2, FFPoly.term(2))
        rep = verify_recurrence(table)
        assert not rep.passed
        failed = [c.label for c in rep.failures]
        assert failed[0].startswith("c_2(")
        # c_3 = ff_3/6 now disagrees with the doubled c_2 as well
        assert any(lbl.startswith("c_3(") for lbl in failed)
        assert rep.checks[0].passed

    def test_length_one_vacuous(self):
        rep = verify_recurrence(CoefficientTable([FFPoly.term(0)]))
        assert rep.passed and rep.checks == ()

    def test_report_rendering(self):
        rep = verify_recurrence(derive_coefficient_polynomials(2))
        assert rep.lines() == [
            "[PASS] recurrence: c_1(n+1) - c_1(n) = c_0(n)",
            "[PASS] recurrence: c_2(n+1) - c_2(n) = c_1(n)",
        ]
        assert rep.summary() == {"name": "recurrence", "passed": True, "total": 2, "failed": 0}
