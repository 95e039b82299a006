"""The simplices conv(e_1, ..., e_n, -q) and their h*-polynomials."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import gcd
from functools import reduce
from typing import Iterable

from .poly import IntPolynomial

__all__ = [
    "QSimplex",
    "WeightData",
    "normalized_volume",
    "is_reflexive",
    "omega",
    "omega_counts",
    "hstar",
    "weight_factor",
]


@dataclass(frozen=True)
class QSimplex:
    """Weakly increasing positive integer vector q; the simplex lives in R^len(q)."""

    q: tuple[int, ...]

    def __post_init__(self):
        q = tuple(int(x) for x in self.q)
        if not q:
            raise ValueError("q must be nonempty")
        if any(x < 1 for x in q):
            raise ValueError(f"entries of q must be positive, got {q}")
        if any(x > y for x, y in zip(q, q[1:])):
            raise ValueError(f"q must be weakly increasing, got {q}")
        object.__setattr__(self, "q", q)

    @classmethod
    def from_unsorted(cls, q: Iterable[int]) -> QSimplex:
        return cls(tuple(sorted(q)))

    @property
    def n(self) -> int:
        return len(self.q)

    def vertices(self) -> list[tuple[int, ...]]:
        n = self.n
        out = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        out.append(tuple(-x for x in self.q))
        return out


@dataclass(frozen=True)
class WeightData:
    weight: tuple[int, ...]
    factor: int
    reduced: tuple[int, ...]


def normalized_volume(s: QSimplex) -> int:
    return 1 + sum(s.q)


def is_reflexive(s: QSimplex) -> bool:
    """q_i divides 1 + sum_{j != i} q_j for every i."""
    vol = normalized_volume(s)
    return all((vol - qi) % qi == 0 for qi in s.q)


def omega(s: QSimplex, b: int) -> int:
    vol = normalized_volume(s)
    if not 0 <= b < vol:
        raise ValueError(f"b must lie in [0, {vol - 1}], got {b}")
    return b - sum(qi * b // vol for qi in s.q)


def omega_counts(s: QSimplex, start: int = 0, stop: int | None = None) -> list[int]:
    """Histogram of omega(b) for start <= b < stop (default: the full range).

    Separate ranges can be summed coefficientwise; that is how hstar may be
    split across workers.
    """
    vol = normalized_volume(s)
    stop = vol if stop is None else stop
    if not 0 <= start <= stop <= vol:
        raise ValueError("range out of bounds")
    # Repeated entries of q contribute identical floor terms.
    groups = sorted(Counter(s.q).items())
    counts = [0] * (s.n + 1)
    if len(groups) == 1:
        (qi, m), = groups
        for b in range(start, stop):
            counts[b - m * (qi * b // vol)] += 1
        return counts
    for b in range(start, stop):
        w = b
        for qi, m in groups:
            w -= m * (qi * b // vol)
        counts[w] += 1
    return counts


def hstar(s: QSimplex, workers: int = 1) -> IntPolynomial:
    """h*-polynomial as the sum of z**omega(b) over 0 <= b <= sum(q)."""
    vol = normalized_volume(s)
    if workers <= 1 or vol < 100_000:
        return IntPolynomial(tuple(omega_counts(s)))
    from concurrent.futures import ProcessPoolExecutor

    step = -(-vol // workers)
    bounds = [(lo, min(lo + step, vol)) for lo in range(0, vol, step)]
    total = [0] * (s.n + 1)
    with ProcessPoolExecutor(workers) as pool:
        futures = [pool.submit(omega_counts, s, lo, hi) for lo, hi in bounds]
        for fut in futures:
            for k, c in enumerate(fut.result()):
                total[k] += c
    return IntPolynomial(tuple(total))


def weight_factor(s: QSimplex) -> WeightData:
    weight = (1,) + s.q
    lam = reduce(gcd, weight)
    return WeightData(weight, lam, tuple(w // lam for w in weight))
