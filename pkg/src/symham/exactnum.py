"""Exact rational helpers, dyadic grids and the nearest-integer distance.

All quantities in this package are carried as :class:`fractions.Fraction`
(aliased :data:`ExactRational`).  Dyadic values ``a / 2**m`` get their own
small value type so that binary digits can be read off directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

__all__ = [
    "ExactRational",
    "DyadicRational",
    "MAX_LEVEL",
    "check_level",
    "as_fraction",
    "nearest_integer_distance",
    "mbit_grid",
    "round_up_mbit",
]

ExactRational = Fraction

#: Largest level accepted by the exhaustive (grid-enumerating) operations.
MAX_LEVEL = 16


def check_level(m: int, max_level: int = MAX_LEVEL) -> int:
    if isinstance(m, bool) or not isinstance(m, int):
        raise TypeError(f"level must be an int, got {type(m).__name__}")
    if not 1 <= m <= max_level:
        raise ValueError(f"level m={m} outside supported range 1..{max_level}")
    return m


def as_fraction(x) -> Fraction:
    """Convert ints, Fractions, DyadicRationals or decimal strings exactly.

    Floats are accepted through their exact binary value, so ``0.3`` becomes
    ``5404319552844595/18014398509481984``, not ``3/10``.
    """
    if isinstance(x, DyadicRational):
        return x.value
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational, float, str)):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


@dataclass(frozen=True, order=True)
class DyadicRational:
    """The value ``numerator / 2**level`` with ``0 <= numerator <= 2**level``.

    ``numerator == 2**level`` encodes the value 1, which only appears as the
    capped result of :func:`round_up_mbit`; its digit view is undefined.
    """

    numerator: int
    level: int

    def __post_init__(self):
        check_level(self.level, max_level=10**6)
        if not 0 <= self.numerator <= (1 << self.level):
            raise ValueError(
                f"numerator {self.numerator} outside [0, 2^{self.level}]"
            )

    @classmethod
    def from_digits(cls, digits) -> "DyadicRational":
        digits = tuple(int(d) for d in digits)
        if not digits or any(d not in (0, 1) for d in digits):
            raise ValueError("digits must be a non-empty sequence of 0/1")
        a = 0
        for d in digits:
            a = (a << 1) | d
        return cls(a, len(digits))

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, 1 << self.level)

    @property
    def is_one(self) -> bool:
        return self.numerator == 1 << self.level

    @property
    def digits(self) -> tuple[int, ...]:
        """Binary digits ``(a_1, ..., a_m)``, most significant first."""
        if self.is_one:
            raise ValueError("the value 1 has no m-bit digit expansion")
        m = self.level
        return tuple((self.numerator >> (m - j)) & 1 for j in range(1, m + 1))

    def digit(self, j: int) -> int:
        """Digit ``a_j`` for ``1 <= j <= m + 1``; ``a_{m+1}`` is always 0."""
        if self.is_one:
            raise ValueError("the value 1 has no m-bit digit expansion")
        m = self.level
        if j == m + 1:
            return 0
        if not 1 <= j <= m:
            raise IndexError(f"digit index {j} outside 1..{m + 1}")
        return (self.numerator >> (m - j)) & 1

    def __float__(self) -> float:
        return self.numerator / (1 << self.level)

    def __str__(self) -> str:
        return f"{self.numerator}/{1 << self.level}"


def nearest_integer_distance(x) -> Fraction:
    """``min_z |x - z|`` over integers ``z``; always in ``[0, 1/2]``."""
    x = as_fraction(x)
    frac = x - math.floor(x)
    return min(frac, 1 - frac)


def mbit_grid(m: int) -> list[DyadicRational]:
    """The nonzero m-bit numbers ``1/2^m, ..., (2^m - 1)/2^m`` in order."""
    check_level(m)
    return [DyadicRational(a, m) for a in range(1, 1 << m)]


def round_up_mbit(x, m: int) -> DyadicRational:
    """Smallest m-bit number ``>= x``, or 1 when ``x > 1 - 2^-m``."""
    x = as_fraction(x)
    check_level(m, max_level=10**6)
    if not 0 < x <= 1:
        raise ValueError(f"round_up_mbit needs 0 < x <= 1, got {x}")
    return DyadicRational(math.ceil(x * (1 << m)), m)
