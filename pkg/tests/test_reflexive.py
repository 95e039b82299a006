from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from numsimplex.numsys import BaseR, ExplicitPlaces, Factoradic, Fibonacci, MixedRadix, place_value
from numsimplex.poly import is_symmetric
from numsimplex.reflexive import (
    DivisorPrefix,
    check_divisor_system,
    first_divisor_failure,
    mixed_radix_divisor_system,
    omega_recursive,
    q_from_divisors,
)
from numsimplex.simplex import hstar, is_reflexive, normalized_volume, omega
from numsimplex.stats import descent_stats, perm_of_lex_rank

HYPEROCTAHEDRAL = MixedRadix(tuple([1] + [2 * k for k in range(1, 12)]))


class TestDivisorPrefix:
    def test_validation(self):
        with pytest.raises(ValueError):
            DivisorPrefix(BaseR(2), (2, 2))
        with pytest.raises(ValueError):
            DivisorPrefix(BaseR(2), (0, 2))

    def test_too_short(self):
        with pytest.raises(ValueError):
            check_divisor_system(DivisorPrefix(BaseR(2), (2, 4)), 3)


class TestMixedRadix:
    def test_binary(self):
        dp = mixed_radix_divisor_system(BaseR(2), 8)
        assert dp.d == tuple(2 ** (i + 1) for i in range(8))
        assert check_divisor_system(dp, 8)

    def test_factoradic(self):
        dp = mixed_radix_divisor_system(Factoradic(), 8)
        assert dp.d[:5] == (2, 3, 8, 30, 144)
        assert check_divisor_system(dp, 8)

    def test_hyperoctahedral_has_none(self):
        assert mixed_radix_divisor_system(HYPEROCTAHEDRAL, 8) is None
        n, value = first_divisor_failure(HYPEROCTAHEDRAL, 8)
        assert (n, value) == (1, Fraction(8, 3))

    def test_general_base(self):
        # base r: d_n = r^(n+1)/(r-1)
        assert mixed_radix_divisor_system(BaseR(3), 4) is None
        assert first_divisor_failure(BaseR(3), 4) == (0, Fraction(3, 2))

    def test_not_mixed_radix(self):
        with pytest.raises(ValueError):
            first_divisor_failure(Fibonacci(), 4)

    def test_explicit_divisors(self):
        dp = DivisorPrefix(ExplicitPlaces((1, 2, 4, 8)), (2, 4, 8))
        assert check_divisor_system(dp, 3)
        assert not check_divisor_system(DivisorPrefix(BaseR(2), (2, 3, 8)), 3)


class TestQFromDivisors:
    def test_examples(self):
        fact = mixed_radix_divisor_system(Factoradic(), 6)
        assert q_from_divisors(fact, 3).q == (3, 8, 12)
        binary = mixed_radix_divisor_system(BaseR(2), 6)
        assert q_from_divisors(binary, 3).q == (1, 2, 4)

    @pytest.mark.parametrize("system", [BaseR(2), Factoradic()])
    @pytest.mark.parametrize("n", range(1, 8))
    def test_reflexive_with_volume_a_n(self, system, n):
        s = q_from_divisors(mixed_radix_divisor_system(system, n), n)
        assert normalized_volume(s) == place_value(system, n)
        assert is_reflexive(s)
        assert is_symmetric(hstar(s), n)

    def test_failing_prefix(self):
        with pytest.raises(ValueError):
            q_from_divisors(DivisorPrefix(BaseR(2), (2, 3, 8)), 3)


class TestOmegaRecursive:
    @pytest.mark.parametrize("system", [BaseR(2), Factoradic()])
    @pytest.mark.parametrize("n", range(1, 7))
    def test_matches_direct(self, system, n):
        dp = mixed_radix_divisor_system(system, n)
        s = q_from_divisors(dp, n)
        for b in range(place_value(system, n)):
            assert omega_recursive(dp, n, b) == omega(s, b)

    @given(st.integers(1, 9), st.data())
    def test_factoradic_weight_is_descents(self, n, data):
        dp = mixed_radix_divisor_system(Factoradic(), n)
        b = data.draw(st.integers(0, place_value(Factoradic(), n) - 1))
        assert omega_recursive(dp, n, b) == descent_stats(perm_of_lex_rank(n + 1, b))[0]

    def test_pointwise_descents_small(self):
        n = 4
        s = q_from_divisors(mixed_radix_divisor_system(Factoradic(), n), n)
        for b, p in enumerate(permutations(range(1, n + 2))):
            assert omega(s, b) == descent_stats(p)[0]

    def test_range(self):
        dp = mixed_radix_divisor_system(BaseR(2), 3)
        with pytest.raises(ValueError):
            omega_recursive(dp, 3, 8)
