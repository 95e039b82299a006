"""Divisor systems for numeral systems and the simplices they certify.

All checks run on a finite prefix; nothing here claims a property for every n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .numsys import NumeralSystem, format_system, place_value, radices
from .simplex import QSimplex, omega

__all__ = [
    "DivisorPrefix",
    "check_divisor_system",
    "mixed_radix_divisor_system",
    "first_divisor_failure",
    "q_from_divisors",
    "omega_recursive",
]


@dataclass(frozen=True)
class DivisorPrefix:
    system: NumeralSystem
    d: tuple[int, ...]

    def __post_init__(self):
        d = tuple(int(x) for x in self.d)
        if any(x < 1 for x in d):
            raise ValueError("divisors must be positive")
        if any(x >= y for x, y in zip(d, d[1:])):
            raise ValueError(f"divisor sequence must be strictly increasing, got {d}")
        object.__setattr__(self, "d", d)


def _divisor_conditions_hold(dp: DivisorPrefix, n: int) -> bool:
    a_n = place_value(dp.system, n)
    total = 1
    for d_i in dp.d[:n]:
        if a_n % d_i:
            return False
        total += a_n // d_i
    return total == a_n


def check_divisor_system(dp: DivisorPrefix, n_max: int) -> bool:
    """d_i | a_n for i < n and 1 + sum a_n/d_i == a_n, for every 1 <= n <= n_max."""
    if n_max < 1:
        raise ValueError("n_max must be positive")
    if len(dp.d) < n_max:
        raise ValueError(f"need {n_max} divisors, prefix has {len(dp.d)}")
    return all(_divisor_conditions_hold(dp, n) for n in range(1, n_max + 1))


def first_divisor_failure(s: NumeralSystem, n_max: int) -> Optional[tuple[int, Fraction]]:
    """First index n < n_max where a_{n+1}/(c_{n+1}-1) is not an integer.

    Returns ``(n, value)`` or None when every candidate divisor is integral.
    """
    c = radices(s, n_max)
    if c is None:
        raise ValueError(f"{format_system(s)} is not mixed radix")
    for n in range(n_max):
        value = Fraction(place_value(s, n + 1), c[n + 1] - 1)
        if value.denominator != 1:
            return n, value
    return None


def mixed_radix_divisor_system(s: NumeralSystem, n_max: int) -> Optional[DivisorPrefix]:
    """The only possible divisor system of a mixed-radix system, d_n = a_{n+1}/(c_{n+1}-1).

    Returns None when a candidate is non-integral or the candidates fail the
    divisor conditions up to n_max.
    """
    if first_divisor_failure(s, n_max) is not None:
        return None
    c = radices(s, n_max)
    d = tuple(place_value(s, n + 1) // (c[n + 1] - 1) for n in range(n_max))
    if any(x >= y for x, y in zip(d, d[1:])):
        return None
    dp = DivisorPrefix(s, d)
    return dp if check_divisor_system(dp, n_max) else None


def q_from_divisors(dp: DivisorPrefix, n: int) -> QSimplex:
    """q = (a_n/d_{n-1}, ..., a_n/d_0); its normalized volume is a_n."""
    if not check_divisor_system(dp, n):
        raise ValueError(f"divisor conditions fail by n={n}")
    a_n = place_value(dp.system, n)
    return QSimplex(tuple(a_n // dp.d[i] for i in range(n - 1, -1, -1)))


def omega_recursive(dp: DivisorPrefix, n: int, b: int) -> int:
    """omega by peeling off the top digit: w_n(b) = w_{n-1}(b') + b_top - floor(b/d_{n-1})."""
    if n < 1:
        raise ValueError("n must be positive")
    if not check_divisor_system(dp, n):
        raise ValueError(f"divisor conditions fail by n={n}")
    if not 0 <= b < place_value(dp.system, n):
        raise ValueError(f"b must lie in [0, a_{n})")
    acc = 0
    for m in range(n, 1, -1):
        top, b_rest = divmod(b, place_value(dp.system, m - 1))
        acc += top - b // dp.d[m - 1]
        b = b_rest
    return acc + omega(q_from_divisors(dp, 1), b)
