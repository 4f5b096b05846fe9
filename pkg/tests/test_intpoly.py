import json

import pytest
from hypothesis import given, strategies as st

from conftest import polys
from fibspecial.errors import CoefficientOverflow
from fibspecial.intpoly import (
    INT64_MAX,
    INT64_MIN,
    IntPoly,
    add,
    from_json,
    from_text,
    monomial,
    mul,
    norm,
    ones_run,
    shift,
)

ZERO = IntPoly()
ONE = IntPoly([1])


def P(*c):
    return IntPoly(c)


class TestExamples:
    def test_add(self):
        assert add(P(0, 1, 1), P(1, -1)) == P(1, 0, 1)
        assert add(P(3, 4), ZERO) == P(3, 4)
        assert add(P(0, 0, 0, 1), P(0, 0, 0, -1)).coeffs == ()

    def test_mul(self):
        assert mul(P(1, 1), P(1, -1)) == P(1, 0, -1)
        assert mul(P(5, 0, 7), ONE) == P(5, 0, 7)
        assert mul(P(0, 1, 1), P(0, 1)) == P(0, 0, 1, 1)

    def test_shift(self):
        assert shift(P(1, 1), 2) == P(0, 0, 1, 1)
        assert shift(ZERO, 5) == ZERO
        assert shift(P(2, 3), 0) == P(2, 3)
        with pytest.raises(ValueError):
            shift(ONE, -1)

    def test_norm(self):
        assert norm(P(0, 1, 1, 1)) == 3
        assert norm(ZERO) == 0

    @pytest.mark.parametrize("a", range(1, 11))
    def test_norm_of_ones_run(self, a):
        assert norm(ones_run(a)) == a


def test_canonical_form_strips_trailing_zeros():
    assert P(1, 2, 0, 0).coeffs == (1, 2)
    assert P(0, 0).is_zero()
    with pytest.raises(ValueError):
        ZERO.degree
    assert P(0, 0, 5).degree == 2


def test_values_are_immutable():
    g = P(1, 2)
    with pytest.raises(ValueError):
        g.array[0] = 7


class TestOverflow:
    def test_constructor_rejects_out_of_range(self):
        with pytest.raises(CoefficientOverflow):
            IntPoly([INT64_MAX + 1])

    def test_add_overflow_detected(self):
        with pytest.raises(CoefficientOverflow):
            add(P(INT64_MAX), P(1))

    def test_add_near_limit_is_exact(self):
        # bound check fails, exact fallback still succeeds
        assert add(P(INT64_MAX, 1), P(-1, 1)) == P(INT64_MAX - 1, 2)

    def test_mul_overflow_detected(self):
        with pytest.raises(CoefficientOverflow):
            mul(P(2**40), P(2**40))

    def test_mul_fallback_exact_when_result_fits(self):
        # coefficient bound says "might overflow", exact product still fits
        g = P(2**32, 2**32)
        h = P(2**30, -(2**30))
        assert mul(g, h) == P(2**62, 0, -(2**62))

    def test_negation_of_min(self):
        with pytest.raises(CoefficientOverflow):
            -P(INT64_MIN)

    def test_norm_overflow(self):
        with pytest.raises(CoefficientOverflow):
            norm(P(INT64_MAX, INT64_MAX))


class TestRendering:
    @pytest.mark.parametrize(
        "coeffs, text",
        [
            ((), "0"),
            ((0, 1, 1), "t + t^2"),
            ((1, 0, -1), "1 - t^2"),
            ((0, -1), "-t"),
            ((-3, 0, 0, 4), "-3 + 4*t^3"),
        ],
    )
    def test_text(self, coeffs, text):
        assert IntPoly(coeffs).to_text() == text
        assert from_text(text) == IntPoly(coeffs)

    def test_text_tolerates_explicit_coefficients(self):
        assert from_text("2 + 1*t^1 - 3*t^2") == P(2, 1, -3)

    @pytest.mark.parametrize("bad", ["", "t^", "2*x", "1 + + t"])
    def test_text_rejects_garbage(self, bad):
        with pytest.raises(ValueError):
            from_text(bad)

    def test_json(self):
        assert P(0, 0, 1, 1).to_json() == "[0, 0, 1, 1]"
        assert from_json("[0, 0, 1, 1, 0]") == P(0, 0, 1, 1)
        with pytest.raises(ValueError):
            from_json('{"a": 1}')

    @given(polys)
    def test_round_trips(self, g):
        assert from_text(g.to_text()) == g
        assert from_json(g.to_json()) == g
        assert json.loads(g.to_json()) == list(g.coeffs)


@given(polys, polys, polys)
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


@given(polys, polys)
def test_canonical_form_closed(f, g):
    for r in (f + g, f - g, f * g, shift(f, 3)):
        assert r.is_zero() or r.coeffs[-1] != 0


@given(polys, polys)
def test_norm_is_evaluation_at_one(f, g):
    assert norm(f * g) == norm(f) * norm(g)
    assert norm(f + g) == norm(f) + norm(g)


@given(polys, st.integers(min_value=0, max_value=32))
def test_shift_is_monomial_product(g, k):
    assert shift(g, k) == mul(g, monomial(k))


@given(polys)
def test_hash_consistent_with_eq(g):
    assert hash(g) == hash(IntPoly(list(g.coeffs) + [0, 0]))
