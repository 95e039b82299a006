"""Base-r simplices: h* by three routes, sections, and the interlacing maps."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .poly import IntPolynomial, interlaces, section
from .simplex import QSimplex
from .stats import nasc

__all__ = [
    "BaseRSimplex",
    "SectionSequence",
    "f_poly",
    "hstar_nasc",
    "hstar_sections",
    "symmetric_decomposition",
    "comp_count",
    "hstar_coeff_via_comps",
    "apply_G",
    "apply_H",
    "section_sequence",
    "DEFAULT_ENUM_BUDGET",
]

DEFAULT_ENUM_BUDGET = 10**8

_ONE = IntPolynomial((1,))
_Z = IntPolynomial((0, 1))
_Z1 = IntPolynomial((1, 1))


def _check_rn(r: int, n: int) -> None:
    if r < 2:
        raise ValueError(f"r must be >= 2, got {r}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")


@dataclass(frozen=True)
class BaseRSimplex:
    r: int
    n: int

    def __post_init__(self):
        _check_rn(self.r, self.n)

    @property
    def q(self) -> QSimplex:
        return QSimplex(tuple((self.r - 1) * self.r**i for i in range(self.n)))


def f_poly(r: int, n: int) -> IntPolynomial:
    """(1 + z + ... + z^(r-1))^n."""
    _check_rn(r, n)
    return IntPolynomial((1,) * r) ** n


def hstar_nasc(r: int, n: int, budget: int = DEFAULT_ENUM_BUDGET) -> IntPolynomial:
    """Sum of z**nasc(b) over every n-digit base-r string."""
    _check_rn(r, n)
    total = r**n
    if total > budget:
        raise ValueError(f"r^n = {total} exceeds enumeration budget {budget}")
    counts = [0] * (n + 1)
    for b in range(total):
        counts[nasc(b, r, n)] += 1
    return IntPolynomial(tuple(counts))


def hstar_sections(r: int, n: int) -> IntPolynomial:
    a, b = symmetric_decomposition(r, n)
    return a + b.shift(1)


def symmetric_decomposition(r: int, n: int) -> tuple[IntPolynomial, IntPolynomial]:
    """(a, b) with h* = a + z*b; a is the 0-th section of f_(r,n), b the sum of the rest."""
    f = f_poly(r, n)
    m = r - 1
    a = section(f, m, 0)
    b = sum((section(f, m, ell) for ell in range(1, m)), IntPolynomial())
    return a, b


def comp_count(t: int, m: int, max_part: int) -> int:
    """Compositions of m into t parts from {1, ..., max_part} (inclusion-exclusion)."""
    if t < 0 or max_part < 1:
        raise ValueError("need t >= 0 and max_part >= 1")
    if t == 0:
        return int(m == 0)
    if m < t or m > t * max_part:
        return 0
    total = 0
    for j in range(t + 1):
        top = m - j * max_part - 1
        if top < t - 1:
            break
        total += (-1) ** j * comb(t, j) * comb(top, t - 1)
    return total


def hstar_coeff_via_comps(r: int, n: int, k: int) -> int:
    """[z^k] h*(B_(r,n)) as a sum of composition counts.

    The leading term counts compositions of n + k(r-1): it is the k-th
    coefficient of the 0-th section of f_(r,n).
    """
    _check_rn(r, n)
    if not 0 <= k <= n:
        raise ValueError(f"k must lie in [0, {n}]")
    value = comp_count(n, n + k * (r - 1), r)
    for ell in range(1, r - 1):
        value += comp_count(n, n + (k - 1) * (r - 1) + ell, r)
    return value


def _check_vector(r: int, v: Sequence[IntPolynomial]) -> list[IntPolynomial]:
    if r < 2:
        raise ValueError("r must be >= 2")
    if len(v) != r - 1:
        raise ValueError(f"expected {r - 1} polynomials, got {len(v)}")
    return list(v)


def _apply(v: list[IntPolynomial], diag: IntPolynomial) -> list[IntPolynomial]:
    """Matrix with ``diag`` on the diagonal, 1 above and z below, times v."""
    m = len(v)
    # prefix[i] = v_0 + ... + v_{i-1}
    prefix = [IntPolynomial()]
    for p in v:
        prefix.append(prefix[-1] + p)
    out = []
    for i in range(m):
        below = prefix[i]
        above = prefix[m] - prefix[i + 1]
        out.append(below.shift(1) + diag * v[i] + above)
    return out


def apply_G(r: int, v: Sequence[IntPolynomial]) -> list[IntPolynomial]:
    """Multiply by the (r-1)x(r-1) matrix with z+1 on the diagonal, 1 above, z below."""
    return _apply(_check_vector(r, v), _Z1)


def apply_H(r: int, v: Sequence[IntPolynomial]) -> list[IntPolynomial]:
    """Multiply by the (r-1)x(r-1) matrix with 1 on the diagonal, 1 above, z below."""
    return _apply(_check_vector(r, v), _ONE)


@dataclass(frozen=True)
class SectionSequence:
    """Sections of f_(r,n) ordered from the (r-2)-th down to the 0-th."""

    r: int
    n: int
    polys: tuple[IntPolynomial, ...]

    def __iter__(self):
        return iter(self.polys)

    def __len__(self) -> int:
        return len(self.polys)

    def interlacing_pairs(self, strict: bool = True) -> dict[tuple[int, int], bool]:
        """Verdict of polys[i] interlacing polys[j] for every i < j."""
        return {
            (i, j): interlaces(self.polys[i], self.polys[j], strict=strict)
            for i in range(len(self.polys))
            for j in range(i + 1, len(self.polys))
        }

    def is_interlacing(self, strict: bool = True) -> bool:
        return all(self.interlacing_pairs(strict).values())


def section_sequence(r: int, n: int) -> SectionSequence:
    f = f_poly(r, n)
    m = r - 1
    polys = tuple(section(f, m, ell) for ell in range(m - 1, -1, -1))
    rebuilt = sum(
        (p.substitute_power(m).shift(ell) for ell, p in zip(range(m - 1, -1, -1), polys)),
        IntPolynomial(),
    )
    if rebuilt != f:
        raise AssertionError("section reconstruction failed")
    return SectionSequence(r, n, polys)
