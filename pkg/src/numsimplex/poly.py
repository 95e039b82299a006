"""Exact integer polynomials and certified distributional-property checks.

Everything here is exact: real-rootedness and interlacing are decided with
Sturm sequences over the rationals, never with floating point.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Union

__all__ = [
    "IntPolynomial",
    "RootIsolation",
    "evaluate",
    "is_symmetric",
    "is_unimodal",
    "is_log_concave",
    "real_root_count",
    "is_real_rooted",
    "isolate_real_roots",
    "interlaces",
    "section",
    "squarefree_decomposition",
]


@dataclass(frozen=True)
class IntPolynomial:
    """Dense polynomial with arbitrary-precision integer coefficients.

    ``coeffs[i]`` is the coefficient of ``z**i``. Trailing zeros are stripped
    on construction, so the zero polynomial is ``IntPolynomial(())``.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        c = [operator.index(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def monomial(cls, k: int, coeff: int = 1) -> IntPolynomial:
        return cls((0,) * k + (coeff,))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        """Coefficient of z**k (zero beyond the degree)."""
        if k < 0:
            raise IndexError(k)
        return self.coeffs[k] if k < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other: Union[IntPolynomial, int]) -> IntPolynomial:
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(tuple(out))

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Union[IntPolynomial, int]) -> IntPolynomial:
        return self + (-_coerce(other))

    def __rsub__(self, other: Union[IntPolynomial, int]) -> IntPolynomial:
        return _coerce(other) - self

    def __mul__(self, other: Union[IntPolynomial, int]) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial(tuple(other * c for c in self.coeffs))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPolynomial:
        if k < 0:
            raise ValueError("negative power")
        result, base = IntPolynomial((1,)), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x):
        return evaluate(self, x)

    def shift(self, k: int) -> IntPolynomial:
        """Multiply by z**k."""
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def substitute_power(self, m: int) -> IntPolynomial:
        """Return p(z**m)."""
        if m < 1:
            raise ValueError("m must be positive")
        out = [0] * ((len(self.coeffs) - 1) * m + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[i * m] = c
        return IntPolynomial(tuple(out))

    def derivative(self) -> IntPolynomial:
        return IntPolynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                mono = "z" if i == 1 else f"z^{i}"
                body = mono if mag == 1 else f"{mag}{mono}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(("+ " if c > 0 else "- ") + body)
        return " ".join(terms)


def _coerce(p: Union[IntPolynomial, int]) -> IntPolynomial:
    if isinstance(p, IntPolynomial):
        return p
    return IntPolynomial((operator.index(p),))


def _require_nonzero(p: IntPolynomial) -> None:
    if p.is_zero:
        raise ValueError("operation undefined on the zero polynomial")


def evaluate(p: IntPolynomial, x):
    """Horner evaluation; exact for int and Fraction arguments."""
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def is_symmetric(p: IntPolynomial, d: int) -> bool:
    """True iff a_i == a_{d-i} for 0 <= i <= d (missing coefficients are 0)."""
    _require_nonzero(p)
    if p.degree > d:
        raise ValueError(f"degree {p.degree} exceeds {d}")
    return all(p[i] == p[d - i] for i in range(d + 1))


def is_unimodal(p: IntPolynomial) -> bool:
    _require_nonzero(p)
    c = p.coeffs
    i = 0
    while i + 1 < len(c) and c[i] <= c[i + 1]:
        i += 1
    while i + 1 < len(c) and c[i] >= c[i + 1]:
        i += 1
    return i == len(c) - 1


def is_log_concave(p: IntPolynomial) -> bool:
    _require_nonzero(p)
    c = p.coeffs
    return all(c[i] * c[i] >= c[i - 1] * c[i + 1] for i in range(1, len(c) - 1))


def section(f: IntPolynomial, m: int, ell: int) -> IntPolynomial:
    """Coefficients of f at exponents ell, ell+m, ell+2m, ... as a new polynomial.

    f(z) == sum(z**ell * section(f, m, ell)(z**m) for ell in range(m)).
    """
    if m < 1:
        raise ValueError("m must be positive")
    if not 0 <= ell < m:
        raise ValueError(f"need 0 <= ell < m, got ell={ell}, m={m}")
    return IntPolynomial(f.coeffs[ell::m])


# ---------------------------------------------------------------------------
# Rational polynomial helpers. A polynomial is a tuple of Fractions, ascending,
# without trailing zeros.

RPoly = tuple


def _rnorm(c: Iterable) -> RPoly:
    c = [Fraction(x) for x in c]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _rsub(a: RPoly, b: RPoly) -> RPoly:
    n = max(len(a), len(b))
    return _rnorm(
        (a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)
    )


def _rderiv(a: RPoly) -> RPoly:
    return _rnorm(i * c for i, c in enumerate(a) if i)


def _rdivmod(a: RPoly, b: RPoly) -> tuple[RPoly, RPoly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    db, lead = len(b) - 1, b[-1]
    if len(rem) <= db:
        return (), _rnorm(rem)
    quo = [Fraction(0)] * (len(rem) - db)
    for k in range(len(rem) - 1 - db, -1, -1):
        coef = rem[k + db] / lead
        quo[k] = coef
        if coef:
            for j, bj in enumerate(b):
                rem[k + j] -= coef * bj
    return _rnorm(quo), _rnorm(rem[:db])


def _rquo(a: RPoly, b: RPoly) -> RPoly:
    q, r = _rdivmod(a, b)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


def _rmonic(a: RPoly) -> RPoly:
    lead = a[-1]
    return tuple(c / lead for c in a)


def _rgcd(a: RPoly, b: RPoly) -> RPoly:
    while b:
        a, b = b, _rdivmod(a, b)[1]
    return _rmonic(a) if a else a


def _reval(a: RPoly, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def squarefree_decomposition(p: IntPolynomial) -> list[tuple[int, RPoly]]:
    """Yun's algorithm over Q.

    Returns ``[(k, a_k), ...]`` with monic, pairwise coprime, squarefree
    nonconstant ``a_k`` such that p = lead * prod(a_k**k).
    """
    _require_nonzero(p)
    f = _rnorm(p.coeffs)
    if len(f) == 1:
        return []
    df = _rderiv(f)
    g = _rgcd(f, df)
    c = _rquo(f, g)
    d = _rsub(_rquo(df, g), _rderiv(c))
    out = []
    k = 1
    while len(c) > 1:
        a = _rgcd(c, d)
        c = _rquo(c, a)
        d = _rsub(_rquo(d, a), _rderiv(c))
        if len(a) > 1:
            out.append((k, a))
        k += 1
    return out


def _sturm_chain(a: RPoly) -> list[RPoly]:
    chain = [a, _rderiv(a)]
    while chain[-1] and len(chain[-1]) > 1:
        r = _rdivmod(chain[-2], chain[-1])[1]
        if not r:
            break
        # Positive rescaling keeps signs intact and the numbers small.
        r = tuple(-c / abs(r[-1]) for c in r)
        chain.append(r)
    return [c for c in chain if c]


def _variations(chain: list[RPoly], x) -> int:
    """Sign changes of the chain at x; x=None means +inf, x='-' means -inf."""
    if x is None:
        signs = [_sign(c[-1]) for c in chain]
    elif x == "-":
        signs = [_sign(c[-1]) * (-1) ** (len(c) - 1) for c in chain]
    else:
        signs = [s for s in (_sign(_reval(c, x)) for c in chain) if s]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def _distinct_real_roots(a: RPoly) -> int:
    if len(a) <= 1:
        return 0
    chain = _sturm_chain(a)
    return _variations(chain, "-") - _variations(chain, None)


def real_root_count(p: IntPolynomial) -> int:
    """Number of real roots of p counted with multiplicity."""
    return sum(k * _distinct_real_roots(a) for k, a in squarefree_decomposition(p))


def is_real_rooted(p: IntPolynomial) -> bool:
    _require_nonzero(p)
    if p.degree == 0:
        return True
    return real_root_count(p) == p.degree


@dataclass(frozen=True)
class RootIsolation:
    """Disjoint rational intervals, one per distinct real root, in increasing order.

    An interval ``(lo, hi)`` with ``lo < hi`` holds its root strictly inside and
    has endpoints that are not roots; ``lo == hi`` means the root is exactly
    ``lo``.
    """

    intervals: tuple[tuple[Fraction, Fraction], ...]
    multiplicities: tuple[int, ...]
    squarefree: RPoly = field(default=(), repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.intervals)

    @property
    def root_count(self) -> int:
        return sum(self.multiplicities)

    def refine(self, width) -> RootIsolation:
        """Bisect every interval until it is no wider than ``width``."""
        width = Fraction(width)
        if width < 0:
            raise ValueError("width must be nonnegative")
        p = self.squarefree
        out = []
        for lo, hi in self.intervals:
            s_lo = _sign(_reval(p, lo))
            while hi - lo > width:
                mid = (lo + hi) / 2
                s_mid = _sign(_reval(p, mid))
                if s_mid == 0:
                    lo = hi = mid
                elif s_mid != s_lo:
                    hi = mid
                else:
                    lo, s_lo = mid, s_mid
            out.append((lo, hi))
        return RootIsolation(tuple(out), self.multiplicities, p)


def _cauchy_bound(a: RPoly) -> Fraction:
    lead = abs(a[-1])
    return 1 + max(abs(c) / lead for c in a[:-1])


def _split_point(a: RPoly, lo: Fraction, hi: Fraction) -> Fraction:
    """A point strictly inside (lo, hi) that is not a root of a."""
    k = 2
    while True:
        for j in range(1, k):
            x = lo + (hi - lo) * Fraction(j, k)
            if _reval(a, x) != 0:
                return x
        k += 1


def _has_root_in(a: RPoly, lo: Fraction, hi: Fraction) -> bool:
    if lo == hi:
        return _reval(a, lo) == 0
    return _sign(_reval(a, lo)) * _sign(_reval(a, hi)) < 0


def isolate_real_roots(p: IntPolynomial) -> RootIsolation:
    """Isolate the distinct real roots of p by Sturm-count bisection."""
    factors = squarefree_decomposition(p)
    sqf: RPoly = (Fraction(1),)
    for _, a in factors:
        sqf = _rnorm(_rmul(sqf, a))
    if len(sqf) == 1:
        return RootIsolation((), (), sqf)
    chain = _sturm_chain(sqf)
    bound = _cauchy_bound(sqf)
    stack = [(-bound, bound)]
    intervals = []
    while stack:
        lo, hi = stack.pop()
        k = _variations(chain, lo) - _variations(chain, hi)
        if k == 0:
            continue
        if k == 1:
            intervals.append((lo, hi))
            continue
        mid = _split_point(sqf, lo, hi)
        stack.append((mid, hi))
        stack.append((lo, mid))
    mults = []
    for lo, hi in intervals:
        ks = [k for k, a in factors if _has_root_in(a, lo, hi)]
        assert len(ks) == 1
        mults.append(ks[0])
    return RootIsolation(tuple(intervals), tuple(mults), sqf)


def _rmul(a: RPoly, b: RPoly) -> RPoly:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)


def _root_positions(p: IntPolynomial, iso: RootIsolation) -> list[int]:
    """Indices into iso.intervals of p's roots, ascending, with multiplicity."""
    factors = squarefree_decomposition(p)
    pos = []
    for idx, (lo, hi) in enumerate(iso.intervals):
        for k, a in factors:
            if _has_root_in(a, lo, hi):
                pos.extend([idx] * k)
                break
    return pos


def interlaces(g: IntPolynomial, f: IntPolynomial, strict: bool = False) -> bool:
    """Decide whether g (strictly) interlaces f.

    With f's roots a_1 <= ... <= a_d and g's roots b_1 <= ... <= b_c this is
    b_1 <= a_1 <= b_2 <= ... <= b_d <= a_d when c == d, and
    a_1 <= b_1 <= a_2 <= ... <= b_c <= a_d when d == c + 1.
    ``strict`` replaces every <= by <.
    """
    _require_nonzero(f)
    _require_nonzero(g)
    gap = f.degree - g.degree
    if gap not in (0, 1):
        raise ValueError(f"degree gap must be 0 or 1, got {gap}")
    if not (is_real_rooted(f) and is_real_rooted(g)):
        raise ValueError("interlacing needs real-rooted polynomials")
    iso = isolate_real_roots(f * g)
    alpha = _root_positions(f, iso)
    beta = _root_positions(g, iso)
    if gap == 0:
        chain = [x for pair in zip(beta, alpha) for x in pair]
    else:
        chain = [alpha[0]] + [x for pair in zip(beta, alpha[1:]) for x in pair]
    if strict:
        return all(x < y for x, y in zip(chain, chain[1:]))
    return all(x <= y for x, y in zip(chain, chain[1:]))

