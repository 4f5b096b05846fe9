import itertools
import random

import pytest
from hypothesis import given, strategies as st

from conftest import polys
from fibspecial import cyclo
from fibspecial.cyclo import (
    ALL_EQUAL,
    M_SET,
    NOT_SPECIAL,
    PAIRWISE_TWO,
    PHI3,
    CycloElement,
    T_MINUS_ONE,
    cadd,
    cmul,
    element,
    in_M_after_shift,
    is_special,
    reduce,
)
from fibspecial.errors import InvalidModulus, ModulusMismatch
from fibspecial.intpoly import IntPoly, norm, shift


def brute_cyclic_product(x, y, d):
    """Multiply as ordinary polynomials, then fold exponents mod d."""
    full = [0] * (2 * d)
    for i, a in enumerate(x):
        for j, b in enumerate(y):
            full[i + j] += a * b
    return tuple(sum(full[k] for k in range(r, 2 * d, d)) for r in range(d))


class TestReduce:
    def test_examples(self):
        assert reduce(IntPoly([0, 1, 1, 1]), 3) == element(1, 1, 1)
        assert reduce(IntPoly([0, 0, 0, 0, 1]), 3) == element(0, 1, 0)
        assert reduce(IntPoly([1, 1, 1]), 2) == element(2, 1)

    def test_invalid_modulus(self):
        with pytest.raises(InvalidModulus):
            reduce(IntPoly([1]), 1)

    def test_zero_polynomial(self):
        assert reduce(IntPoly(), 4) == cyclo.zero(4)


class TestRingOps:
    def test_cadd_examples(self):
        assert cadd(element(1, 0, 1), element(0, 1, 0)) == element(1, 1, 1)
        assert cadd(element(4, -2, 7), cyclo.zero(3)) == element(4, -2, 7)
        assert cadd(element(1, -1, 0), element(-1, 1, 0)) == element(0, 0, 0)

    def test_cmul_examples(self):
        t_plus_one = element(1, 1, 0)
        assert cmul(T_MINUS_ONE, t_plus_one) == element(-1, 0, 1)
        # (T - 1)(T + 1) = -T^2 (T - 1)
        t2 = cyclo.power_of_T(2, 3)
        assert cmul(T_MINUS_ONE, t_plus_one) == -cmul(t2, T_MINUS_ONE)
        assert cmul(PHI3, T_MINUS_ONE) == cyclo.zero(3)
        assert cmul(element(3, -1, 2), cyclo.one(3)) == element(3, -1, 2)

    def test_mismatch(self):
        with pytest.raises(ModulusMismatch):
            cadd(element(1, 0), element(1, 0, 0))
        with pytest.raises(ModulusMismatch):
            cmul(element(1, 0), element(1, 0, 0))

    def test_length_enforced(self):
        with pytest.raises(ValueError):
            CycloElement(3, (1, 2))

    def test_equality_is_literal(self):
        assert element(0, 0) != element(0, 0, 0)
        assert element(1, 1, 1) != element(2, 2, 2)

    @given(st.integers(2, 6), st.data())
    def test_cmul_matches_fold_oracle(self, d, data):
        coeffs = st.lists(st.integers(-9, 9), min_size=d, max_size=d)
        x, y = data.draw(coeffs), data.draw(coeffs)
        assert cmul(CycloElement(d, x), CycloElement(d, y)).coeffs == brute_cyclic_product(x, y, d)

    def test_json_round_trip(self):
        x = element(1, -2, 3, 0)
        assert x.to_json() == '{"d": 4, "coeffs": [1, -2, 3, 0]}'
        assert CycloElement.from_json(x.to_json()) == x


class TestSpecial:
    def test_examples(self):
        assert is_special(element(1, 1, 1)) == cyclo.SpecialVerdict(True, ALL_EQUAL)
        assert is_special(element(1, 0, 1)) == cyclo.SpecialVerdict(True, PAIRWISE_TWO)
        assert is_special(element(2, 0, 0)) == cyclo.SpecialVerdict(False, NOT_SPECIAL)

    def test_only_d3(self):
        with pytest.raises(InvalidModulus):
            is_special(element(1, 1))
        with pytest.raises(InvalidModulus):
            in_M_after_shift(element(1, 1, 1, 1))

    def test_in_M_after_shift_examples(self):
        x = element(1, 0, 1)
        # hand product: (1 + T^2)(T - 1) = T - T^2 = -T(T - 1)
        assert cmul(x, T_MINUS_ONE) == element(0, 1, -1)
        assert in_M_after_shift(x)
        assert in_M_after_shift(element(1, 1, 1))
        assert brute_cyclic_product((2, 0, 0), (-1, 1, 0), 3) == (-2, 2, 0)
        assert not in_M_after_shift(element(2, 0, 0))

    def test_M_set_matches_definition(self):
        # 0 and +-T^k (T - 1), computed from scratch
        expected = {(0, 0, 0)}
        for k in range(3):
            base = brute_cyclic_product(cyclo.power_of_T(k, 3).coeffs, (-1, 1, 0), 3)
            expected.add(base)
            expected.add(tuple(-v for v in base))
        assert M_SET == expected
        assert len(M_SET) == 7

    def test_lmm_equivalence_exhaustive(self):
        for x in itertools.product(range(-5, 6), repeat=3):
            e = CycloElement(3, x)
            assert is_special(e).is_special == in_M_after_shift(e), x

    def test_products_of_special_are_special(self):
        rng = random.Random(7)
        specials = [
            e for e in (CycloElement(3, c) for c in itertools.product(range(-8, 9), repeat=3)) if is_special(e)
        ]
        for _ in range(2000):
            x, y = rng.choice(specials), rng.choice(specials)
            assert is_special(cmul(x, y)), (x, y)


@given(polys, polys, st.sampled_from([2, 3, 4, 5]))
def test_reduce_is_homomorphism(g, h, d):
    assert reduce(g * h, d) == cmul(reduce(g, d), reduce(h, d))
    assert reduce(g + h, d) == cadd(reduce(g, d), reduce(h, d))


@given(polys)
def test_multiple_of_one_plus_t_plus_t2(g):
    assert reduce(IntPoly([1, 1, 1]) * g, 3) == norm(g) * PHI3


@given(polys, st.integers(2, 7))
def test_period_shift_invariance(g, d):
    assert reduce(shift(g, d), d) == reduce(g, d)
