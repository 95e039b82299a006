"""End-to-end acceptance checks, one test per criterion.

Runtime bounds are asserted with wall-clock timers. A summary line per
criterion is printed by the conftest hook.
"""

import time
from contextlib import contextmanager
from fractions import Fraction
from itertools import combinations_with_replacement, permutations
from math import factorial

import pytest

from numsimplex.baser import (
    BaseRSimplex,
    apply_G,
    apply_H,
    hstar_coeff_via_comps,
    hstar_nasc,
    hstar_sections,
    section_sequence,
    symmetric_decomposition,
)
from numsimplex.numsys import BaseR, Factoradic, Fibonacci, MixedRadix, decode, encode, place_value, radices
from numsimplex.oracle import ehrhart_table, is_ehrhart_positive
from numsimplex.poly import IntPolynomial, is_log_concave, is_real_rooted, is_symmetric, is_unimodal
from numsimplex.reflexive import (
    DivisorPrefix,
    check_divisor_system,
    first_divisor_failure,
    mixed_radix_divisor_system,
    q_from_divisors,
)
from numsimplex.simplex import QSimplex, hstar, is_reflexive, omega
from numsimplex.stats import (
    descent_stats,
    digit_stats,
    maxdes_poly_closed,
    maxdes_poly_recursive,
    perm_of_lex_rank,
)

GOLDEN = IntPolynomial((1, 19, 34, 10))


@contextmanager
def within(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.2f}s, limit {seconds}s"


def base_sections(r):
    return [IntPolynomial()] * (r - 2) + [IntPolynomial((1,))]


@pytest.mark.acceptance(1, "base-4 golden h* by omega, nasc and sections")
def test_criterion_01_golden_base4():
    with within(1):
        assert hstar(BaseRSimplex(4, 3).q) == GOLDEN
        assert hstar_nasc(4, 3) == GOLDEN
        assert hstar_sections(4, 3) == GOLDEN
        a, b = symmetric_decomposition(4, 3)
        assert a == IntPolynomial((1, 10, 10, 1))
        assert b == IntPolynomial((9, 24, 9))


@pytest.mark.acceptance(2, "digit statistics table at r=4, width 3")
def test_criterion_02_digit_table():
    expected = {
        19: ({0, 2}, {0: 1, 2: 1}, 2),
        22: ({0, 1, 2}, {0: 1, 1: -1, 2: Fraction(-1, 2)}, 1),
        31: ({0, 1, 2}, {0: 1, 1: 0, 2: -5}, 2),
    }
    for b, (support, heights, value) in expected.items():
        ds = digit_stats(b, 4, 3)
        assert ds.support == support
        assert dict(ds.heights) == heights
        assert all(isinstance(h, Fraction) for h in ds.heights.values())
        assert ds.nasc == value


@pytest.mark.acceptance(3, "binary q gives (1+z)^n; omega = binary support")
def test_criterion_03_binary():
    with within(10):
        for n in range(1, 17):
            s = QSimplex(tuple(2**i for i in range(n)))
            assert hstar(s) == IntPolynomial((1, 1)) ** n
        for n in range(1, 13):
            s = QSimplex(tuple(2**i for i in range(n)))
            assert all(omega(s, b) == bin(b).count("1") for b in range(2**n))


@pytest.mark.acceptance(4, "factoradic q gives Eulerian polynomials; omega = des pointwise")
def test_criterion_04_eulerian():
    with within(10):
        dp = mixed_radix_divisor_system(Factoradic(), 6)
        for n in range(1, 7):
            s = q_from_divisors(dp, n)
            counts = [0] * (n + 1)
            for b, p in enumerate(permutations(range(1, n + 2))):
                des = descent_stats(p)[0]
                assert perm_of_lex_rank(n + 1, b) == p
                assert omega(s, b) == des
                counts[des] += 1
            assert hstar(s) == IntPolynomial(tuple(counts))
            assert sum(counts) == factorial(n + 1)


@pytest.mark.acceptance(5, "numerals of 102 and round trips below 10^6")
def test_criterion_05_numerals():
    for system, text in [(BaseR(2), "1100110"), (BaseR(3), "10210"), (Fibonacci(), "1000100000")]:
        num = encode(system, 102)
        assert str(num) == text
        assert decode(num) == 102
    for system in (BaseR(2), BaseR(3), Fibonacci()):
        for b in range(10**6):
            assert decode(encode(system, b)) == b


@pytest.mark.acceptance(6, "divisor systems: binary, factoradic; hyperoctahedral has none")
def test_criterion_06_divisor_systems():
    binary = DivisorPrefix(BaseR(2), tuple(2 ** (i + 1) for i in range(8)))
    assert check_divisor_system(binary, 8)
    assert mixed_radix_divisor_system(BaseR(2), 8) == binary

    fact = mixed_radix_divisor_system(Factoradic(), 8)
    assert fact is not None and fact.d[:5] == (2, 3, 8, 30, 144)
    assert check_divisor_system(fact, 8)

    hyper = MixedRadix(tuple([1] + [2 * k for k in range(1, 10)]))
    assert mixed_radix_divisor_system(hyper, 8) is None
    c = radices(hyper, 8)
    # a_3 / (c_3 - 1) = 48/5 is non-integral; an earlier candidate, 8/3, already fails
    assert Fraction(place_value(hyper, 3), c[3] - 1) == Fraction(48, 5)
    assert first_divisor_failure(hyper, 8) == (1, Fraction(8, 3))


@pytest.mark.acceptance(7, "nasc = sections = omega for r<=6, n<=8, r^n<=2e6")
def test_criterion_07_triple_agreement():
    with within(60):
        for r in range(2, 7):
            for n in range(1, 9):
                if r**n > 2 * 10**6:
                    continue
                h = hstar(BaseRSimplex(r, n).q)
                assert hstar_sections(r, n) == h, (r, n)
                assert hstar_nasc(r, n) == h, (r, n)


@pytest.mark.acceptance(8, "Sturm real-rootedness, unimodality, log-concavity of base-r h*")
def test_criterion_08_real_rooted():
    for r in range(2, 7):
        for n in range(1, 9):
            h = hstar_sections(r, n)
            assert is_real_rooted(h) is True, (r, n)
            assert is_unimodal(h) is True
            assert is_log_concave(h) is True


@pytest.mark.acceptance(9, "strict interlacing of sections, G recursion, H last entry")
def test_criterion_09_interlacing():
    for r in range(3, 6):
        for n in range(1, 7):
            assert section_sequence(r, n).is_interlacing(strict=True), (r, n)
    for r in range(2, 7):
        for n in range(1, 9):
            prev = base_sections(r) if n == 1 else list(section_sequence(r, n - 1))
            current = list(section_sequence(r, n))
            assert apply_G(r, prev) == current, (r, n)
            assert apply_H(r, current)[-1] == hstar_sections(r, n), (r, n)


def _oracle_battery():
    for n in range(1, 4):
        for q in combinations_with_replacement(range(1, 7), n):
            yield QSimplex(q)
    for r in range(2, 5):
        for n in range(1, 4):
            yield BaseRSimplex(r, n).q


@pytest.mark.acceptance(10, "lattice-point oracle h* = formula h*; palindromic iff reflexive")
def test_criterion_10_oracle_equivalence():
    with within(120):
        seen = 0
        for s in _oracle_battery():
            table = ehrhart_table(s)
            assert table.hstar == hstar(s), s.q
            assert is_symmetric(table.hstar, s.n) == is_reflexive(s), s.q
            seen += 1
        assert seen == 6 + 21 + 56 + 9


@pytest.mark.acceptance(11, "composition formula matches sections; 19 at (4,3,1)")
def test_criterion_11_compositions():
    assert hstar_coeff_via_comps(4, 3, 1) == 19
    for r in range(2, 6):
        for n in range(1, 7):
            h = hstar_sections(r, n)
            for k in range(n + 1):
                assert hstar_coeff_via_comps(r, n, k) == h[k], (r, n, k)


@pytest.mark.acceptance(12, "max-descent polynomial: closed form = recursion = enumeration")
def test_criterion_12_max_descent():
    for n in range(1, 9):
        counts = [0] * n
        for p in permutations(range(1, n + 1)):
            counts[descent_stats(p)[1]] += 1
        brute = IntPolynomial(tuple(counts))
        assert maxdes_poly_closed(n) == brute
        assert maxdes_poly_recursive(n) == brute
        assert sum(brute) == factorial(n)


@pytest.mark.acceptance(13, "Ehrhart positivity of B_(r,n) for r<=4, n<=3")
def test_criterion_13_ehrhart_positivity():
    for r in range(2, 5):
        for n in range(1, 4):
            table = ehrhart_table(BaseRSimplex(r, n).q)
            assert is_ehrhart_positive(table), (r, n, table.ehrhart_coeffs)
