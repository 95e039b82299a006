"""Positional numeral systems: place values, greedy encoding, decoding."""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Union

__all__ = [
    "BaseR",
    "Factoradic",
    "Fibonacci",
    "MixedRadix",
    "ExplicitPlaces",
    "NumeralSystem",
    "Numeral",
    "place_value",
    "encode",
    "decode",
    "is_valid",
    "radices",
    "parse_system",
    "format_system",
]


@dataclass(frozen=True)
class BaseR:
    r: int

    def __post_init__(self):
        if self.r < 2:
            raise ValueError(f"base must be >= 2, got {self.r}")


@dataclass(frozen=True)
class Factoradic:
    """Place values (n+1)!: 1, 2, 6, 24, ..."""


@dataclass(frozen=True)
class Fibonacci:
    """Place values 1, 2, 3, 5, 8, ...; greedy encoding is Zeckendorf's."""


@dataclass(frozen=True)
class MixedRadix:
    """Finite mixed-radix prefix. ``radices[0]`` must be 1, later entries > 1.

    Place value n is the product radices[0] * ... * radices[n].
    """

    radices: tuple[int, ...]

    def __post_init__(self):
        c = tuple(int(x) for x in self.radices)
        if not c or c[0] != 1 or any(x <= 1 for x in c[1:]):
            raise ValueError(f"radices must be (1, c1, c2, ...) with ci > 1, got {c}")
        object.__setattr__(self, "radices", c)


@dataclass(frozen=True)
class ExplicitPlaces:
    """A finite, strictly increasing prefix of place values starting at 1."""

    places: tuple[int, ...]

    def __post_init__(self):
        a = tuple(int(x) for x in self.places)
        if not a or a[0] != 1 or any(x >= y for x, y in zip(a, a[1:])):
            raise ValueError(f"places must be strictly increasing from 1, got {a}")
        object.__setattr__(self, "places", a)


NumeralSystem = Union[BaseR, Factoradic, Fibonacci, MixedRadix, ExplicitPlaces]


def _finite_length(s: NumeralSystem) -> Optional[int]:
    if isinstance(s, MixedRadix):
        return len(s.radices)
    if isinstance(s, ExplicitPlaces):
        return len(s.places)
    return None


@lru_cache(maxsize=256)
def _place_table(s: NumeralSystem, count: int) -> tuple[int, ...]:
    """The first ``count`` place values a_0, ..., a_{count-1}."""
    limit = _finite_length(s)
    if limit is not None and count > limit:
        raise IndexError(f"{format_system(s)} only defines {limit} place values")
    if isinstance(s, BaseR):
        return tuple(s.r**i for i in range(count))
    if isinstance(s, ExplicitPlaces):
        return s.places[:count]
    out = []
    if isinstance(s, Factoradic):
        acc = 1
        for i in range(count):
            acc *= i + 1
            out.append(acc)
    elif isinstance(s, Fibonacci):
        x, y = 1, 2
        for _ in range(count):
            out.append(x)
            x, y = y, x + y
    elif isinstance(s, MixedRadix):
        acc = 1
        for c in s.radices[:count]:
            acc *= c
            out.append(acc)
    else:
        raise TypeError(f"not a numeral system: {s!r}")
    return tuple(out)


def place_value(s: NumeralSystem, n: int) -> int:
    if n < 0:
        raise IndexError(n)
    return _place_table(s, n + 1)[n]


def _places_covering(s: NumeralSystem, b: int) -> tuple[int, ...]:
    """A place-value prefix whose last entry exceeds b."""
    count = 16
    limit = _finite_length(s)
    while True:
        if limit is not None:
            count = min(count, limit)
        table = _place_table(s, count)
        if table[-1] > b:
            return table
        if limit is not None and count == limit:
            raise ValueError(f"{b} exceeds every place value of {format_system(s)}")
        count *= 2


@dataclass(frozen=True)
class Numeral:
    """Digit string in a numeral system, stored little-endian (digits[i] is place i)."""

    digits: tuple[int, ...]
    system: NumeralSystem

    def __post_init__(self):
        object.__setattr__(self, "digits", tuple(self.digits))

    @property
    def width(self) -> int:
        return len(self.digits)

    def __str__(self) -> str:
        if not self.digits:
            return "0"
        big = self.digits[::-1]
        if any(d > 9 for d in big):
            return ",".join(map(str, big))
        return "".join(map(str, big))

    @classmethod
    def parse(cls, text: str, system: NumeralSystem) -> Numeral:
        """Read a big-endian digit string ("10210" or "1,0,12")."""
        text = text.strip()
        if "," in text:
            big = [int(x) for x in text.split(",")]
        else:
            if not text.isdigit():
                raise ValueError(f"not a digit string: {text!r}")
            big = [int(ch) for ch in text]
        return cls(tuple(reversed(big)), system)


def encode(s: NumeralSystem, b: int, width: Optional[int] = None) -> Numeral:
    """Greedy division of b by the place values from the top down."""
    if b < 0:
        raise ValueError("only nonnegative integers have numerals")
    if width is None:
        places = _places_covering(s, b)
        n = bisect_right(places, b)
    else:
        if width < 0:
            raise ValueError("width must be nonnegative")
        places = _place_table(s, width + 1)
        if b >= places[width]:
            raise ValueError(f"{b} does not fit in {width} places")
        n = width
    digits = [0] * n
    for i in range(n - 1, -1, -1):
        digits[i], b = divmod(b, places[i])
    return Numeral(tuple(digits), s)


def is_valid(num: Numeral) -> bool:
    """Every prefix sum of digit * place value stays below the next place value.

    For a finite system the check needs a_width; numerals too wide for the
    known prefix are reported invalid.
    """
    w = num.width
    if any(d < 0 for d in num.digits):
        return False
    try:
        places = _place_table(num.system, w + 1)
    except IndexError:
        return False
    acc = 0
    for i, d in enumerate(num.digits):
        acc += d * places[i]
        if acc >= places[i + 1]:
            return False
    return True


def decode(num: Numeral) -> int:
    if not is_valid(num):
        raise ValueError(f"{num} is not a valid numeral in {format_system(num.system)}")
    places = _place_table(num.system, num.width)
    return sum(d * a for d, a in zip(num.digits, places))


def radices(s: NumeralSystem, n: int) -> Optional[tuple[int, ...]]:
    """Radices c_0..c_n if the prefix a_0..a_n is mixed radix, else None."""
    if isinstance(s, Fibonacci):
        return None
    if isinstance(s, BaseR):
        return (1,) + (s.r,) * n
    if isinstance(s, Factoradic):
        return tuple(range(1, n + 2))
    if isinstance(s, MixedRadix):
        if n >= len(s.radices):
            raise IndexError(f"{format_system(s)} only defines {len(s.radices)} radices")
        return s.radices[: n + 1]
    a = _place_table(s, n + 1)
    out = [1]
    for prev, cur in zip(a, a[1:]):
        if cur % prev:
            return None
        out.append(cur // prev)
    return tuple(out)


def parse_system(text: str) -> NumeralSystem:
    """Parse "base:R", "factoradic", "fib", "mixed:c1,c2,..." or "places:a0,a1,..."."""
    key, _, rest = text.strip().partition(":")
    key = key.lower()
    try:
        if key in ("base", "baser"):
            return BaseR(int(rest))
        if key in ("factoradic", "fact"):
            return Factoradic()
        if key in ("fib", "fibonacci"):
            return Fibonacci()
        if key == "mixed":
            c = [int(x) for x in rest.split(",")]
            if c[0] != 1:
                c = [1] + c
            return MixedRadix(tuple(c))
        if key == "places":
            return ExplicitPlaces(tuple(int(x) for x in rest.split(",")))
    except ValueError as exc:
        raise ValueError(f"bad system string {text!r}: {exc}") from None
    raise ValueError(f"unknown system string {text!r}")


def format_system(s: NumeralSystem) -> str:
    if isinstance(s, BaseR):
        return f"base:{s.r}"
    if isinstance(s, Factoradic):
        return "factoradic"
    if isinstance(s, Fibonacci):
        return "fib"
    if isinstance(s, MixedRadix):
        return "mixed:" + ",".join(map(str, s.radices[1:]))
    return "places:" + ",".join(map(str, s.places))

