"""Permutation and digit statistics.

Descents follow the convention pi_i > pi_{i+1}. The identity permutation has
max descent 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import Callable, Mapping, Sequence

from .numsys import Factoradic, encode
from .poly import IntPolynomial

__all__ = [
    "DigitStats",
    "descent_stats",
    "perm_of_lex_rank",
    "lex_rank",
    "eulerian_poly",
    "maxdes_poly",
    "maxdes_poly_closed",
    "maxdes_poly_recursive",
    "permutation_stat_poly",
    "digit_stats",
    "nasc",
    "supp",
    "DEFAULT_PERM_BUDGET",
]

DEFAULT_PERM_BUDGET = 10

Permutation = tuple


def _check_perm(p: Sequence[int]) -> None:
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"not a permutation of 1..{len(p)}: {tuple(p)}")


def descent_stats(p: Sequence[int]) -> tuple[int, int]:
    """(des, maxdes) for a permutation given in one-line notation on 1..n."""
    _check_perm(p)
    des = maxdes = 0
    for i in range(len(p) - 1):
        if p[i] > p[i + 1]:
            des += 1
            maxdes = i + 1
    return des, maxdes


def perm_of_lex_rank(n: int, b: int) -> Permutation:
    """The permutation of 1..n at 0-based position b in lexicographic order.

    The factoradic digit with place value k! is the Lehmer-code entry of
    position n-k: the number of later letters smaller than it.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if not 0 <= b < factorial(n):
        raise ValueError(f"rank {b} out of range for S_{n}")
    code = encode(Factoradic(), b, width=n - 1).digits
    pool = list(range(1, n + 1))
    out = []
    for pos in range(1, n + 1):
        k = n - pos
        out.append(pool.pop(code[k - 1] if k else 0))
    return tuple(out)


def lex_rank(p: Sequence[int]) -> int:
    """Inverse of perm_of_lex_rank."""
    _check_perm(p)
    n = len(p)
    rank = 0
    for i, x in enumerate(p):
        smaller_after = sum(1 for y in p[i + 1 :] if y < x)
        rank += smaller_after * factorial(n - 1 - i)
    return rank


def permutation_stat_poly(
    n: int, stat: Callable[[tuple], int], budget: int = DEFAULT_PERM_BUDGET
) -> IntPolynomial:
    """Generating polynomial sum(z**stat(pi)) over all of S_n, by enumeration."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > budget:
        raise ValueError(f"S_{n} enumeration exceeds budget n <= {budget}")
    counts = [0] * n
    for p in permutations(range(1, n + 1)):
        counts[stat(p)] += 1
    return IntPolynomial(tuple(counts))


def eulerian_poly(n: int, budget: int = DEFAULT_PERM_BUDGET) -> IntPolynomial:
    return permutation_stat_poly(n, lambda p: descent_stats(p)[0], budget)


def maxdes_poly(n: int) -> IntPolynomial:
    """Max-descent polynomial from B(n,0)=1, B(n,1)=n-1, B(n,k)=(n)_{k-1}(n-k)."""
    if n < 1:
        raise ValueError("n must be positive")
    coeffs = [1]
    if n > 1:
        coeffs.append(n - 1)
    falling = n
    for k in range(2, n):
        coeffs.append(falling * (n - k))
        falling *= n - k + 1
    return IntPolynomial(tuple(coeffs))


def maxdes_poly_closed(n: int) -> IntPolynomial:
    """1 + sum_{k=1}^{n-1} n!/((n-k)! + (n-k-1)!) z^k."""
    if n < 1:
        raise ValueError("n must be positive")
    coeffs = [1]
    for k in range(1, n):
        num, den = factorial(n), factorial(n - k) + factorial(n - k - 1)
        q, r = divmod(num, den)
        if r:
            raise ArithmeticError(f"non-integral closed form at n={n}, k={k}")
        coeffs.append(q)
    return IntPolynomial(tuple(coeffs))


def maxdes_poly_recursive(n: int) -> IntPolynomial:
    """B_1 = 1 and B_n = 1 - z + n z B_{n-1}."""
    if n < 1:
        raise ValueError("n must be positive")
    b = IntPolynomial((1,))
    one_minus_z = IntPolynomial((1, -1))
    for m in range(2, n + 1):
        b = one_minus_z + (b * m).shift(1)
    return b


@dataclass(frozen=True)
class DigitStats:
    support: frozenset
    heights: Mapping[int, Fraction]
    nonascents: frozenset

    @property
    def nasc(self) -> int:
        return len(self.nonascents)

    @property
    def supp(self) -> int:
        return len(self.support)


def _base_digits(b: int, r: int, width: int) -> list[int]:
    if r < 2:
        raise ValueError("base must be >= 2")
    if not 0 <= b < r**width:
        raise ValueError(f"{b} does not fit in {width} base-{r} places")
    out = []
    for _ in range(width):
        b, d = divmod(b, r)
        out.append(d)
    return out


def digit_stats(b: int, r: int, width: int) -> DigitStats:
    """Support, average weighted heights and nonascents of b written in base r."""
    digits = _base_digits(b, r, width)
    support = frozenset(i for i, d in enumerate(digits) if d)
    heights = {}
    for i in sorted(support):
        if i == 0:
            heights[i] = Fraction(1)
        else:
            total = sum((digits[i] - digits[j]) * r**j for j in range(i))
            heights[i] = Fraction(total, i)
    nonascents = frozenset(i for i, h in heights.items() if h >= 0)
    return DigitStats(support, heights, nonascents)


def nasc(b: int, r: int, width: int) -> int:
    """Number of nonascents of b in base r, in integer arithmetic.

    Place i > 0 with digit d is a nonascent iff d * (1 + r + ... + r^(i-1))
    is at least the value of the lower i digits.
    """
    if not 0 <= b < r**width:
        raise ValueError(f"{b} does not fit in {width} base-{r} places")
    count = 0
    low = 0
    rep = 0
    power = 1
    for _ in range(width):
        b, d = divmod(b, r)
        if d and d * rep >= low:
            count += 1
        low += d * power
        rep += power
        power *= r
    return count


def supp(b: int) -> int:
    """Number of nonzero binary digits."""
    return bin(b).count("1")
