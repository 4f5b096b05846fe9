import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fibspecial import cyclo
from fibspecial.delta import is_3special_poly
from fibspecial.errors import InvalidModulus, InvalidWindow, OutOfRange
from fibspecial.fibparts import (
    PartitionStats,
    fib,
    fibs_upto,
    phi,
    phi_brute,
    phi_table,
    phi_window,
    r_counts,
    residue_table,
    row_poly,
    shallit_check,
)
from fibspecial.intpoly import IntPoly, norm

# number of ways to write n = 1..20 as a sum of distinct Fibonacci numbers,
# from explicit subset enumeration (test_count_prefix_by_subsets re-derives it)
REPRESENTATION_COUNTS = [1, 1, 2, 1, 2, 2, 1, 3, 2, 2, 3, 1, 3, 3, 2, 4, 2, 3, 3, 1]


def P(*c):
    return IntPoly(c)


def subsets_poly(n, parts):
    counts = [0] * (len(parts) + 1)
    for r in range(len(parts) + 1):
        for combo in itertools.combinations(parts, r):
            if sum(combo) == n:
                counts[r] += 1
    return IntPoly(counts)


class TestFibonacci:
    def test_fibs_upto(self):
        assert fibs_upto(10) == [1, 2, 3, 5, 8]
        assert fibs_upto(1) == [1]
        assert fibs_upto(100) == [1, 2, 3, 5, 8, 13, 21, 34, 55, 89]

    def test_indexing(self):
        assert [fib(i) for i in range(1, 8)] == [1, 2, 3, 5, 8, 13, 21]
        with pytest.raises(ValueError):
            fib(0)
        with pytest.raises(ValueError):
            fibs_upto(0)

    def test_recurrence_holds(self):
        f = fibs_upto(10**12)
        assert f[:2] == [1, 2]
        assert all(f[i] == f[i - 1] + f[i - 2] for i in range(2, len(f)))


class TestPhi:
    def test_examples(self):
        assert phi(1) == P(0, 1)
        assert phi(3) == P(0, 1, 1)
        assert phi(10) == P(0, 0, 1, 1)

    def test_brute_examples(self):
        assert phi_brute(4) == P(0, 0, 1)
        assert norm(phi_brute(10)) == 2

    def test_brute_cap(self):
        with pytest.raises(OutOfRange):
            phi_brute(2001)
        with pytest.raises(OutOfRange):
            phi_brute(0)

    @pytest.mark.parametrize("n", range(1, 41))
    def test_against_plain_subset_enumeration(self, n):
        assert phi(n) == subsets_poly(n, fibs_upto(n))

    def test_count_prefix_by_subsets(self):
        counts = [norm(subsets_poly(n, fibs_upto(n))) for n in range(1, 21)]
        assert counts == REPRESENTATION_COUNTS
        assert [norm(phi(n)) for n in range(1, 21)] == REPRESENTATION_COUNTS

    def test_oracle_equivalence(self):
        for n in range(1, 501):
            assert phi(n) == phi_brute(n), n

    def test_batch_table_matches(self):
        table = phi_table(3000)
        for n in list(range(1, 300)) + [1597, 2583, 2999, 3000]:
            assert row_poly(table, n) == phi(n)
        assert table[0, 0] == 1 and table[0, 1:].sum() == 0


class TestWindow:
    def test_examples(self):
        assert phi_window(10, 1, 5) == P(0, 0, 1, 1)
        assert phi_window(10, 4, 5) == P()
        assert phi_window(13, 4, 5) == P(0, 0, 1)

    def test_invalid(self):
        with pytest.raises(InvalidWindow):
            phi_window(5, 3, 2)
        with pytest.raises(InvalidWindow):
            phi_window(5, 0, 2)

    @settings(max_examples=60)
    @given(st.integers(1, 8), st.integers(0, 4), st.data())
    def test_against_subsets(self, a, width, data):
        b = a + width
        parts = [fib(i) for i in range(a, b + 1)]
        n = data.draw(st.integers(1, sum(parts) + 3))
        assert phi_window(n, a, b) == subsets_poly(n, parts)

    @pytest.mark.parametrize("n", [1, 7, 33, 88, 144, 500])
    def test_full_window(self, n):
        b = len(fibs_upto(n))
        assert phi_window(n, 1, b) == phi(n)
        assert phi_window(n, 1, b + 2) == phi(n)


class TestCounts:
    def test_examples(self):
        s = r_counts(10, 3)
        assert s.counts == (1, 0, 1) and s.total == 2
        assert r_counts(3, 2).counts == (1, 1)
        s = r_counts(1, 5)
        assert s.counts == (0, 1, 0, 0, 0) and s.total == 1

    def test_windowed(self):
        s = r_counts(13, 3, (4, 5))
        assert s.counts == (0, 0, 1) and s.window == (4, 5)
        assert s.to_dict() == {"n": 13, "d": 3, "window": [4, 5], "counts": [0, 0, 1], "total": 1}
        assert s.csv_row() == [13, 3, 4, 5, 0, 0, 1, 1]

    def test_invalid_modulus(self):
        with pytest.raises(InvalidModulus):
            r_counts(5, 1)

    @given(st.integers(1, 3000), st.integers(2, 7))
    def test_total_is_norm(self, n, d):
        s = r_counts(n, d)
        assert s.total == norm(phi(n)) == sum(s.counts)

    @pytest.mark.parametrize("d", [2, 3, 4, 5, 7])
    def test_residue_table_matches_full_polynomials(self, d):
        reduced = residue_table(10_000, d)
        full = phi_table(10_000)
        for n in range(1, 10_001):
            assert tuple(reduced[n]) == cyclo.reduce(IntPoly(full[n]), d).coeffs

    def test_residue_table_rejects_bad_modulus(self):
        with pytest.raises(InvalidModulus):
            residue_table(10, 1)

    def test_csv_header(self):
        assert PartitionStats.csv_header(3) == ["n", "d", "a", "b", "r0", "r1", "r2", "total"]


class TestShallit:
    def test_examples(self):
        rec = shallit_check(10)
        assert rec.spread_ok and rec.product_zero and rec.counts == (1, 0, 1)
        rec = shallit_check(1)
        assert rec.spread_ok and rec.product_zero and rec.counts == (0, 1, 0)

    def test_matches_special_predicate(self):
        for n in range(1, 3001):
            rec = shallit_check(n)
            assert is_3special_poly(phi(n)) == (rec.spread_ok and rec.product_zero)
            assert rec.spread_ok and rec.product_zero, n

    def test_predicate_equivalence_on_arbitrary_triples(self):
        # the two numeric conditions coincide with the special-element test on any triple
        from fibspecial.fibparts import spread_and_product

        for triple in itertools.product(range(-3, 4), repeat=3):
            spread_ok, product_zero = spread_and_product(triple)
            assert cyclo.is_special(cyclo.CycloElement(3, triple)).is_special == (spread_ok and product_zero)
