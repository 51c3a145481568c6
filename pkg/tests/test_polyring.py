"""Polynomial kernel: operation examples, ring properties, JSON format."""

import json
import random
from fractions import Fraction

import pytest

from disclab.polyring import (
    LAMBDA_VAR,
    MultiPoly,
    NEG_INF,
    NotDivisibleError,
    PolyJSONError,
    UnboundVariableError,
    VarId,
    WeightVector,
    X_VAR,
    ZeroPolynomialError,
    a_var,
    b_var,
    generic_var,
    mono_cmp,
    poly_from_json,
    poly_from_obj,
    poly_to_json,
    poly_to_obj,
    var_from_name,
    var_name,
)

from conftest import A1, A2, A3, B1, LAM, X, frozen_R2, frozen_R3, rand_nonzero_poly, rand_poly

ZERO = MultiPoly.zero()
ONE = MultiPoly.one()


class TestVarId:
    def test_order_is_kind_major_index_minor(self):
        assert a_var(1) < a_var(2) < a_var(10)
        assert a_var(99) < b_var(1)
        assert b_var(2) < LAMBDA_VAR < X_VAR
        assert b_var(1) < generic_var("t") < LAMBDA_VAR

    def test_names_round_trip(self):
        for v in (a_var(1), a_var(12), b_var(3), X_VAR, LAMBDA_VAR, generic_var("t0")):
            assert var_from_name(var_name(v)) == v

    def test_bad_indices(self):
        with pytest.raises(ValueError):
            a_var(0)
        with pytest.raises(ValueError):
            b_var(-1)


class TestMonomialOrder:
    def test_graded_before_lex(self):
        m_small = ((a_var(1), 1),)
        m_big = ((a_var(2), 2),)
        assert mono_cmp(m_small, m_big) == -1  # degree decides

    def test_lex_on_equal_degree(self):
        # a1^2 > a1*a2 > a2^2 under grlex with a1 < a2
        m1 = ((a_var(1), 2),)
        m2 = ((a_var(1), 1), (a_var(2), 1))
        m3 = ((a_var(2), 2),)
        assert mono_cmp(m1, m2) == 1
        assert mono_cmp(m2, m3) == 1
        assert mono_cmp(m1, m3) == 1
        assert mono_cmp(m1, m1) == 0


class TestAdd:
    def test_cancellation(self):
        assert (A1 + A2) + (-A1) == A2

    def test_identity(self):
        f = 4 * A2 ** 3 - A1 ** 2
        assert f + ZERO == f

    def test_disjoint_supports(self):
        f = 4 * A2 ** 3 + (-(A1 ** 2 * A2 ** 2))
        assert f.coefficient({a_var(2): 3}) == 4
        assert f.coefficient({a_var(1): 2, a_var(2): 2}) == -1
        assert len(f) == 2


class TestMul:
    def test_difference_of_squares(self):
        assert (A1 + A2) * (A1 - A2) == A1 ** 2 - A2 ** 2

    def test_identity(self):
        f = frozen_R3()
        assert f * ONE == f

    def test_double_root_times_linear_factor(self):
        # (x + lambda)^2 (x + b1), the n = 3 parametrization rows
        got = (X + LAM) ** 2 * (X + B1)
        want = (
            X ** 3
            + (2 * LAM + B1) * X ** 2
            + (LAM ** 2 + 2 * LAM * B1) * X
            + LAM ** 2 * B1
        )
        assert got == want

    def test_scalar_and_rational_coefficients(self):
        f = Fraction(1, 2) * A1
        assert f + f == A1
        assert (2 * f).coefficient({a_var(1): 1}) == 1


class TestDerivative:
    def test_power_rule(self):
        assert (A1 ** 2 * A3).derivative(a_var(1)) == 2 * A1 * A3

    def test_monic_cubic_in_x(self):
        p = X ** 3 + A1 * X ** 2 + A2 * X + A3
        assert p.derivative(X_VAR) == 3 * X ** 2 + 2 * A1 * X + A2

    def test_termwise(self):
        f = 4 * A2 ** 3 - A1 ** 2 * A2 ** 2
        assert f.derivative(a_var(2)) == 12 * A2 ** 2 - 2 * A1 ** 2 * A2

    def test_absent_variable(self):
        assert A1.derivative(a_var(2)) == ZERO


class TestSubstitute:
    def test_r3_at_a2_zero(self):
        got = frozen_R3().substitute({a_var(2): 0})
        assert got == 4 * A1 ** 3 * A3 + 27 * A3 ** 2

    def test_empty_bindings(self):
        f = frozen_R3()
        assert f.substitute({}) == f

    def test_r3_tail_vanishes(self):
        assert frozen_R3().substitute({a_var(2): 0, a_var(3): 0}) == ZERO

    def test_polynomial_image(self):
        f = A1 ** 2 + A2
        assert f.substitute({a_var(1): A2 + 1}) == A2 ** 2 + 3 * A2 + 1

    def test_simultaneous_swap(self):
        f = X * LAM ** 2
        swapped = f.substitute({X_VAR: LAM, LAMBDA_VAR: X})
        assert swapped == LAM * X ** 2


class TestCoeffsInVar:
    def test_r3_in_a1(self):
        coeffs = frozen_R3().coeffs_in_var(a_var(1))
        assert len(coeffs) == 4  # degree 3
        assert coeffs[3] == 4 * A3

    def test_constant_in_var(self):
        assert (A3 ** 2).coeffs_in_var(a_var(1)) == [A3 ** 2]

    def test_zero_polynomial(self):
        assert ZERO.coeffs_in_var(a_var(1)) == [ZERO]

    def test_degree_of_zero_is_minus_infinity(self):
        assert ZERO.degree_in_var(a_var(1)) == NEG_INF
        assert ZERO.total_degree() == NEG_INF


class TestExactDivide:
    def test_monomial_factor(self):
        assert (A3 * (A1 + A2)).exact_divide(A3) == A1 + A2

    def test_not_divisible(self):
        with pytest.raises(NotDivisibleError):
            (A1 + A2).exact_divide(A3)

    def test_statement_c_shape_for_n3(self):
        f = 4 * A2 ** 3 - A1 ** 2 * A2 ** 2
        assert f.exact_divide(A2 ** 2) == 4 * A2 - A1 ** 2

    def test_zero_divisor(self):
        with pytest.raises(ZeroPolynomialError):
            A1.exact_divide(ZERO)

    def test_nonmonomial_remainder(self):
        with pytest.raises(NotDivisibleError):
            (A1 ** 2 + A2).exact_divide(A1 + A2)


class TestDivisibilityOrder:
    def test_squared_factor(self):
        f = 4 * A2 ** 3 - A1 ** 2 * A2 ** 2
        assert f.divisibility_order(a_var(2)) == 2

    def test_statement_a_instance(self):
        f = 4 * A1 ** 3 * A3 + 27 * A3 ** 2
        assert f.divisibility_order(a_var(3)) == 1

    def test_order_zero(self):
        assert (A2 + A3).divisibility_order(a_var(1)) == 0

    def test_zero_polynomial_rejected(self):
        with pytest.raises(ZeroPolynomialError):
            ZERO.divisibility_order(a_var(1))


class TestQhDegree:
    def test_r3_is_quasi_homogeneous(self):
        w = WeightVector.discriminant(3)
        assert frozen_R3().qh_degree(w) == 6

    def test_single_monomial(self):
        w = WeightVector.discriminant(3)
        assert (A2 ** 3).qh_degree(w) == 6

    def test_mixed_weights(self):
        w = WeightVector.discriminant(3)
        assert (A1 + A2).qh_degree(w) is None

    def test_zero_rejected(self):
        with pytest.raises(ZeroPolynomialError):
            ZERO.qh_degree(WeightVector.discriminant(3))

    def test_weights_validated(self):
        with pytest.raises(ValueError):
            WeightVector({a_var(1): -1})


class TestEvaluate:
    def test_double_root_of_square(self):
        f = 4 * A2 - A1 ** 2
        assert f.evaluate({a_var(1): 2, a_var(2): 1}) == 0

    def test_square(self):
        assert (A3 ** 2).evaluate({a_var(3): 3}) == 9

    def test_rational_point(self):
        f = A1 ** 2 + A2
        assert f.evaluate({a_var(1): Fraction(1, 2), a_var(2): Fraction(3, 4)}) == 1

    def test_unbound_variable(self):
        with pytest.raises(UnboundVariableError):
            (A1 + A2).evaluate({a_var(1): 1})


class TestRingProperties:
    def test_ring_axioms(self):
        rng = random.Random(101)
        for _ in range(200):
            f, g, h = (rand_poly(rng) for _ in range(3))
            assert (f + g) + h == f + (g + h)
            assert f + g == g + f
            assert (f * g) * h == f * (g * h)
            assert f * g == g * f
            assert f * (g + h) == f * g + f * h

    def test_leibniz_rule(self):
        rng = random.Random(202)
        v = a_var(1)
        for _ in range(100):
            f, g = rand_poly(rng), rand_poly(rng)
            lhs = (f * g).derivative(v)
            rhs = f.derivative(v) * g + f * g.derivative(v)
            assert lhs == rhs

    def test_exact_divide_recovers_factor(self):
        rng = random.Random(303)
        for _ in range(100):
            f = rand_poly(rng)
            g = rand_nonzero_poly(rng)
            assert (f * g).exact_divide(g) == f

    def test_substitute_is_ring_homomorphism(self):
        rng = random.Random(404)
        for _ in range(50):
            f, g = rand_poly(rng), rand_poly(rng)
            img = rand_poly(rng, max_vars=2, max_deg=2, max_terms=3)
            bind = {a_var(1): img}
            assert (f * g).substitute(bind) == f.substitute(bind) * g.substitute(bind)
            assert (f + g).substitute(bind) == f.substitute(bind) + g.substitute(bind)

    def test_pow_matches_repeated_mul(self):
        rng = random.Random(505)
        for _ in range(20):
            f = rand_poly(rng, max_terms=3)
            acc = ONE
            for e in range(4):
                assert f ** e == acc
                acc = acc * f


class TestJSONFormat:
    def test_round_trip_examples(self):
        for f in (ZERO, ONE, frozen_R2(), frozen_R3(), Fraction(-1, 2) * A1 * A2 + A3):
            assert poly_from_json(poly_to_json(f)) == f

    def test_round_trip_random(self):
        rng = random.Random(606)
        for _ in range(100):
            f = rand_poly(rng)
            assert poly_from_json(poly_to_json(f)) == f

    def test_format_shape(self):
        obj = poly_to_obj(frozen_R2())
        assert obj["vars"] == ["a1", "a2"]
        assert {"coeff": "4", "exps": {"a2": 1}} in obj["terms"]

    def test_rational_coefficient_strings(self):
        obj = poly_to_obj(Fraction(-3, 7) * A1)
        assert obj["terms"][0]["coeff"] == "-3/7"

    def test_rejects_zero_coefficient(self):
        with pytest.raises(PolyJSONError):
            poly_from_obj({"vars": ["a1"], "terms": [{"coeff": "0", "exps": {"a1": 1}}]})

    def test_rejects_duplicate_monomials(self):
        with pytest.raises(PolyJSONError):
            poly_from_obj(
                {
                    "vars": ["a1"],
                    "terms": [
                        {"coeff": "1", "exps": {"a1": 1}},
                        {"coeff": "2", "exps": {"a1": 1}},
                    ],
                }
            )

    def test_rejects_decimal_coefficients(self):
        with pytest.raises(PolyJSONError):
            poly_from_obj({"vars": ["a1"], "terms": [{"coeff": "0.5", "exps": {"a1": 1}}]})

    def test_rejects_undeclared_variable(self):
        with pytest.raises(PolyJSONError):
            poly_from_obj({"vars": ["a1"], "terms": [{"coeff": "1", "exps": {"a2": 1}}]})

    def test_rejects_nonpositive_exponent(self):
        with pytest.raises(PolyJSONError):
            poly_from_obj({"vars": ["a1"], "terms": [{"coeff": "1", "exps": {"a1": 0}}]})

    def test_universe_must_cover_support(self):
        with pytest.raises(ValueError):
            poly_to_obj(frozen_R3(), universe=[a_var(1)])


class TestRendering:
    def test_str_is_canonical_order(self):
        assert str(frozen_R2()) == "-a1^2 + 4*a2"

    def test_zero_and_constants(self):
        assert str(ZERO) == "0"
        assert str(MultiPoly.const(Fraction(1, 2))) == "1/2"
