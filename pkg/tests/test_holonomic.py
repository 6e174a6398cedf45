"""Equation/ODE/recurrence conversions, verification, and guessing."""

from fractions import Fraction

import pytest

from motzkin_parity import (
    MODEL_A,
    MODEL_B,
    AlgebraicEq,
    AlreadyHomogeneous,
    DegenerateDiscriminant,
    InsufficientInitialTerms,
    InsufficientTerms,
    LeadingCoeffVanishes,
    LinearODE,
    NotQuadratic,
    OrderTooSmall,
    Poly,
    PRecurrence,
    Series,
    algeq_to_ode,
    f0_series,
    guess_algebraic,
    guess_recurrence,
    homogenize_ode,
    level_series,
    ode_to_recurrence,
    rec_extend,
    rec_verify,
    series_root,
    verify_algebraic,
    verify_ode,
)
from reference_data import (
    A176677_PREFIX,
    FIRST_ORDER_ODE_A,
    HOMOGENEOUS_ODE_A,
    HOMOGENEOUS_Y2_COEFF,
    QUADRATIC_A,
    RECURRENCE_A,
)


def returning_column(model, terms):
    return list(level_series(model, 0, terms).coeffs)


class TestVerifyAlgebraic:
    def test_model_a_series_satisfies_quadratic(self):
        assert verify_algebraic(QUADRATIC_A, f0_series(MODEL_A, 100))

    def test_perturbation_fails(self):
        perturbed = f0_series(MODEL_A, 100) + Series.from_poly(Poly([0] * 50 + [1]), 100)
        assert not verify_algebraic(QUADRATIC_A, perturbed)

    def test_zero_equation_rejected(self):
        with pytest.raises(ValueError):
            AlgebraicEq([Poly(), Poly()])


class TestGuessAlgebraic:
    def test_recovers_model_a_quadratic(self):
        found = guess_algebraic(f0_series(MODEL_A, 40), 2, 3)
        assert found == QUADRATIC_A

    def test_geometric_series(self):
        geometric = Series([1] * 20)
        found = guess_algebraic(geometric, 1, 1)
        assert found == AlgebraicEq([Poly([1]), Poly([-1, 1])])

    def test_no_linear_relation_for_degree_two_series(self):
        assert guess_algebraic(f0_series(MODEL_A, 40), 1, 3) is None

    def test_insufficient_terms(self):
        with pytest.raises(InsufficientTerms):
            guess_algebraic(f0_series(MODEL_A, 12), 2, 3)

    def test_scaling_transforms_relation(self):
        scale = Fraction(3, 7)
        found = guess_algebraic(f0_series(MODEL_A, 40) * scale, 2, 3)
        expected = AlgebraicEq(
            [p * scale ** (2 - j) for j, p in enumerate(QUADRATIC_A.y_coeffs)]
        ).normalized()
        assert found == expected
        assert verify_algebraic(found, f0_series(MODEL_A, 60) * scale)


class TestAlgeqToOde:
    def test_pinned_quadratic(self):
        assert algeq_to_ode(QUADRATIC_A) == FIRST_ORDER_ODE_A

    def test_scaled_input_same_output(self):
        scaled = AlgebraicEq([p * Fraction(-2, 9) for p in QUADRATIC_A.y_coeffs])
        assert algeq_to_ode(scaled) == FIRST_ORDER_ODE_A

    def test_square_root_equation(self):
        # y = sqrt(1+2z) satisfies y'/y = 1/(1+2z)
        eq = AlgebraicEq([Poly([-1, -2]), Poly(), Poly([1])])
        assert algeq_to_ode(eq) == LinearODE([Poly([-1]), Poly([1, 2])], Poly())

    def test_not_quadratic(self):
        with pytest.raises(NotQuadratic):
            algeq_to_ode(AlgebraicEq([Poly([1]), Poly([-1, 1])]))

    def test_degenerate_discriminant(self):
        with pytest.raises(DegenerateDiscriminant):
            algeq_to_ode(AlgebraicEq([Poly(), Poly(), Poly([1])]))
        # perfect square (zy+1)^2
        with pytest.raises(DegenerateDiscriminant):
            algeq_to_ode(AlgebraicEq([Poly([1]), Poly([0, 2]), Poly([0, 0, 1])]))


class TestHomogenize:
    def test_pinned_first_order_ode(self):
        result = homogenize_ode(FIRST_ORDER_ODE_A)
        assert result == HOMOGENEOUS_ODE_A
        assert result.deriv_coeffs[2] == HOMOGENEOUS_Y2_COEFF

    def test_annihilates_returning_series(self):
        assert verify_ode(HOMOGENEOUS_ODE_A, f0_series(MODEL_A, 120))

    def test_constant_inhomogeneity(self):
        ode = LinearODE([Poly(), Poly([1])], Poly([-1]))
        assert homogenize_ode(ode) == LinearODE([Poly(), Poly(), Poly([1])], Poly())

    def test_already_homogeneous(self):
        with pytest.raises(AlreadyHomogeneous):
            homogenize_ode(LinearODE([Poly([1]), Poly([1])], Poly()))


class TestOdeToRecurrence:
    def test_pinned_recurrence(self):
        rec = ode_to_recurrence(FIRST_ORDER_ODE_A)
        assert rec == RECURRENCE_A
        assert rec.valid_from == 0
        assert rec.rhs == ()

    def test_exponential(self):
        rec = ode_to_recurrence(LinearODE([Poly([-1]), Poly([1])], Poly()))
        assert rec == PRecurrence([Poly([1]), Poly([-1, -1])], (), 0)

    def test_inhomogeneous_rhs_and_threshold(self):
        # y' = 1 gives n*a(n) = [n == 1]
        rec = ode_to_recurrence(LinearODE([Poly(), Poly([1])], Poly([-1])))
        assert rec == PRecurrence([Poly([0, 1])], (0, 1), 1)
        assert rec_extend(rec, [Fraction(5)], 6) == [5, 1, 0, 0, 0, 0]
        with pytest.raises(InsufficientInitialTerms):
            rec_extend(rec, [], 6)

    def test_homogenized_ode_recurrence(self):
        rec = ode_to_recurrence(HOMOGENEOUS_ODE_A)
        assert rec.order == 6
        assert max(p.degree for p in rec.coeff_polys) == 2
        assert rec_verify(rec, returning_column(MODEL_A, 50))

    def test_scalar_multiple_same_recurrence(self):
        scaled = LinearODE(
            [p * Fraction(-3, 7) for p in FIRST_ORDER_ODE_A.deriv_coeffs],
            FIRST_ORDER_ODE_A.inhomog * Fraction(-3, 7),
        )
        assert ode_to_recurrence(scaled) == RECURRENCE_A


class TestRecurrenceOps:
    def test_verify_pinned_terms(self):
        # spot value at n=0: 4*1 + 4*1 - 32*2 + 28*5 - 6*14 = 0
        assert rec_verify(RECURRENCE_A, A176677_PREFIX)

    def test_verify_rejects_perturbation(self):
        wrong = list(A176677_PREFIX)
        wrong[7] += 1
        assert not rec_verify(RECURRENCE_A, wrong)

    def test_extend_to_ten(self):
        values = rec_extend(RECURRENCE_A, [1, 1, 2, 5], 10)
        assert values == A176677_PREFIX

    def test_extend_matches_table(self):
        column = returning_column(MODEL_A, 60)
        assert rec_extend(RECURRENCE_A, column[:4], 60) == column

    def test_extend_needs_order_values(self):
        with pytest.raises(InsufficientInitialTerms):
            rec_extend(RECURRENCE_A, [1, 1, 2], 10)

    def test_leading_coefficient_vanishes(self):
        rec = PRecurrence([Poly([1]), Poly([-2, 1])], (), 0)
        with pytest.raises(LeadingCoeffVanishes) as info:
            rec_extend(rec, [Fraction(1)], 10)
        assert info.value.n == 2


class TestGuessRecurrence:
    def test_recovers_pinned_recurrence(self):
        found = guess_recurrence(returning_column(MODEL_A, 40), 4, 1)
        assert found == RECURRENCE_A

    def test_fibonacci(self):
        fib = [1, 1]
        while len(fib) < 20:
            fib.append(fib[-1] + fib[-2])
        found = guess_recurrence(fib, 2, 0)
        assert found == PRecurrence([Poly([1]), Poly([1]), Poly([-1])], (), 0)

    def test_no_small_relation(self):
        assert guess_recurrence(returning_column(MODEL_A, 40), 2, 1) is None

    def test_insufficient_terms(self):
        with pytest.raises(InsufficientTerms):
            guess_recurrence(returning_column(MODEL_A, 18), 4, 1)

    def test_scaling_invariance(self):
        column = returning_column(MODEL_A, 40)
        scaled = [v * Fraction(5, 3) for v in column]
        assert guess_recurrence(scaled, 4, 1) == guess_recurrence(column, 4, 1)


class TestVerifyOde:
    def test_first_order_at_high_order(self):
        assert verify_ode(FIRST_ORDER_ODE_A, f0_series(MODEL_A, 80))

    def test_other_model_fails(self):
        assert not verify_ode(FIRST_ORDER_ODE_A, f0_series(MODEL_B, 60))

    def test_order_too_small(self):
        with pytest.raises(OrderTooSmall):
            verify_ode(FIRST_ORDER_ODE_A, Series([1]))


class TestSeriesRoot:
    def test_lifts_returning_series(self):
        assert series_root(QUADRATIC_A, 12) == f0_series(MODEL_A, 12)

    def test_no_rational_branch(self):
        assert series_root(AlgebraicEq([Poly([-2]), Poly(), Poly([1])]), 8) is None

    def test_linear_equation(self):
        eq = AlgebraicEq([Poly([-1]), Poly([1, -1])])
        assert series_root(eq, 6) == Series([1] * 6)


class TestNormalization:
    def test_idempotence_equation(self):
        eq = AlgebraicEq([p * Fraction(-2, 6) for p in QUADRATIC_A.y_coeffs])
        once = eq.normalized()
        assert once.normalized() == once
        assert once == QUADRATIC_A

    def test_idempotence_ode(self):
        ode = LinearODE(
            [p * Fraction(10, 4) for p in FIRST_ORDER_ODE_A.deriv_coeffs],
            FIRST_ORDER_ODE_A.inhomog * Fraction(10, 4),
        )
        once = ode.normalized()
        assert once.normalized() == once
        assert once == FIRST_ORDER_ODE_A

    def test_idempotence_recurrence_with_shift(self):
        rec = PRecurrence([Poly(), Poly([2]), Poly([2, 2])], (), 0)
        once = rec.normalized()
        assert once == PRecurrence([Poly([1]), Poly([0, 1])], (), 1)
        assert once.normalized() == once

    def test_sign_convention(self):
        eq = AlgebraicEq([-p for p in QUADRATIC_A.y_coeffs])
        assert eq.normalized() == QUADRATIC_A
        rec = PRecurrence([-p for p in RECURRENCE_A.coeff_polys], (), 0)
        assert rec.normalized() == RECURRENCE_A
