"""Brute-force Ehrhart data for conv(e_1, ..., e_n, -q).

Counts lattice points in dilates by enumerating a bounding box and testing
exact barycentric coordinates. Nothing here uses the omega formula, so it can
be used to check it.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb, prod
from typing import Optional, Sequence

from .poly import IntPolynomial
from .simplex import QSimplex

__all__ = [
    "EhrhartTable",
    "DEFAULT_BUDGET",
    "default_budget",
    "count_lattice_points",
    "hstar_from_counts",
    "ehrhart_polynomial",
    "ehrhart_table",
    "is_ehrhart_positive",
]

DEFAULT_BUDGET = 10**8


def default_budget() -> int:
    """Candidate-point ceiling per dilate; NS_BUDGET overrides it."""
    env = os.environ.get("NS_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def _box_size(q: Sequence[int], t: int) -> int:
    return prod(t * qi + t + 1 for qi in q)


def count_lattice_points(s: QSimplex, t: int, budget: Optional[int] = None) -> int:
    """|t * Delta ∩ Z^n| by enumerating the box -t*q_i <= x_i <= t."""
    if t < 0:
        raise ValueError("dilation factor must be nonnegative")
    budget = default_budget() if budget is None else budget
    size = _box_size(s.q, t)
    if size > budget:
        raise ValueError(f"box of {size} candidates exceeds budget {budget}")
    q = s.q
    vol = 1 + sum(q)
    # lambda_0 = (t - sum(x)) / vol and lambda_i = x_i + lambda_0 * q_i, all >= 0.
    # Scale by vol to stay in integers. The last coordinate is the inner loop.
    outer = [range(-t * qi, t + 1) for qi in q[:-1]]
    q_last = q[-1]
    count = 0
    for head in product(*outer):
        partial = sum(head)
        for x_last in range(-t * q_last, t + 1):
            rest = t - partial - x_last
            if rest < 0:
                break
            if x_last * vol + rest * q_last < 0:
                continue
            if all(x * vol + rest * qi >= 0 for x, qi in zip(head, q)):
                count += 1
    return count


def hstar_from_counts(counts: Sequence[int], n: int) -> IntPolynomial:
    """h*_k = sum_j (-1)^j C(n+1, j) counts[k-j] for k = 0..n."""
    if n < 1:
        raise ValueError("n must be positive")
    if len(counts) < n + 1:
        raise ValueError(f"need counts for t = 0..{n}")
    if counts[0] != 1:
        raise ValueError(f"i(P;0) must be 1, got {counts[0]}")
    h = []
    for k in range(n + 1):
        value = sum((-1) ** j * comb(n + 1, j) * counts[k - j] for j in range(k + 1))
        if value < 0:
            raise ValueError(f"inconsistent counts: h*_{k} = {value} < 0")
        h.append(value)
    return IntPolynomial(tuple(h))


def ehrhart_polynomial(counts: Sequence[int], n: int) -> tuple[Fraction, ...]:
    """Coefficients (ascending in t) of the degree <= n interpolant through counts[0..n].

    Any further counts are used as out-of-sample checks.
    """
    if len(counts) < n + 1:
        raise ValueError(f"need counts for t = 0..{n}")
    # Newton forward differences on t = 0..n, then expand the binomial basis.
    diffs = [Fraction(c) for c in counts[: n + 1]]
    newton = []
    for _ in range(n + 1):
        newton.append(diffs[0])
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
    coeffs = [Fraction(0)] * (n + 1)
    basis = [Fraction(1)]  # C(t, k) as a polynomial in t
    for k, c in enumerate(newton):
        for i, b in enumerate(basis):
            coeffs[i] += c * b
        # C(t, k+1) = C(t, k) * (t - k) / (k + 1)
        nxt = [Fraction(0)] * (len(basis) + 1)
        for i, b in enumerate(basis):
            nxt[i + 1] += b / (k + 1)
            nxt[i] -= b * k / (k + 1)
        basis = nxt
    for t in range(n + 1, len(counts)):
        predicted = sum(c * t**i for i, c in enumerate(coeffs))
        if predicted != counts[t]:
            raise ValueError(f"interpolant predicts {predicted} at t={t}, counted {counts[t]}")
    return tuple(coeffs)


@dataclass(frozen=True)
class EhrhartTable:
    q: QSimplex
    counts: tuple[int, ...]
    ehrhart_coeffs: tuple[Fraction, ...]
    hstar: IntPolynomial

    def __post_init__(self):
        c = self.counts
        if not c or c[0] != 1:
            raise ValueError("counts[0] must be 1")
        if any(x >= y for x, y in zip(c, c[1:])):
            raise ValueError("lattice-point counts must strictly increase")
        if any(h < 0 for h in self.hstar):
            raise ValueError("h* coefficients must be nonnegative")


def ehrhart_table(
    s: QSimplex, t_max: Optional[int] = None, budget: Optional[int] = None
) -> EhrhartTable:
    """Count dilates t = 0..max(t_max, n+1), interpolate, and extract h*."""
    n = s.n
    t_max = n + 1 if t_max is None else max(t_max, n + 1)
    counts = tuple(count_lattice_points(s, t, budget) for t in range(t_max + 1))
    coeffs = ehrhart_polynomial(counts, n)
    return EhrhartTable(s, counts, coeffs, hstar_from_counts(counts, n))


def is_ehrhart_positive(table: EhrhartTable) -> bool:
    return all(c > 0 for c in table.ehrhart_coeffs)
