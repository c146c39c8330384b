"""Digit-shifted Hammersley point sets and their symmetrizations."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .exactnum import DyadicRational, check_level

__all__ = [
    "Shift",
    "PointSet",
    "bit_reverse",
    "hammersley",
    "complement_shift",
    "symmetrized",
    "reflected_symmetrized",
    "zero_count",
    "all_shifts",
    "sample_shifts",
    "iter_shifts",
]


@dataclass(frozen=True)
class Shift:
    """A dyadic shift ``(s_1, ..., s_m)`` applied digit-wise by XOR."""

    bits: tuple[int, ...]

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if not bits:
            raise ValueError("a shift needs at least one bit")
        if any(b not in (0, 1) for b in bits):
            raise ValueError(f"shift bits must be 0 or 1, got {self.bits!r}")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def parse(cls, text: str) -> "Shift":
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"not a bit string: {text!r}")
        return cls(tuple(int(c) for c in text))

    @classmethod
    def from_int(cls, value: int, m: int) -> "Shift":
        """Shift whose bits read ``value`` in binary, most significant first."""
        if not 0 <= value < 1 << m:
            raise ValueError(f"{value} does not fit in {m} bits")
        return cls(tuple((value >> (m - j)) & 1 for j in range(1, m + 1)))

    @property
    def m(self) -> int:
        return len(self.bits)

    def __len__(self) -> int:
        return len(self.bits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.bits)

    def __getitem__(self, j: int) -> int:
        """One-based access ``sigma_j``."""
        if not 1 <= j <= len(self.bits):
            raise IndexError(f"shift index {j} outside 1..{len(self.bits)}")
        return self.bits[j - 1]

    def to_int(self) -> int:
        v = 0
        for b in self.bits:
            v = (v << 1) | b
        return v

    def complement(self) -> "Shift":
        return Shift(tuple(1 - b for b in self.bits))

    def zero_count(self) -> int:
        return self.bits.count(0)

    def __str__(self) -> str:
        return "".join(map(str, self.bits))


@dataclass(frozen=True)
class PointSet:
    """Multiset of points ``(a / 2^m, b / 2^m)`` stored as integer numerators.

    Numerators lie in ``[0, 2^m]``; the value ``2^m`` (coordinate 1) only
    occurs in reflected sets.  Order is significant for serialization but
    not for any discrepancy computation.
    """

    level: int
    points: tuple[tuple[int, int], ...]

    def __post_init__(self):
        check_level(self.level, max_level=64)
        pts = tuple((int(a), int(b)) for a, b in self.points)
        top = 1 << self.level
        for a, b in pts:
            if not (0 <= a <= top and 0 <= b <= top):
                raise ValueError(f"point ({a}, {b}) not in [0, 2^{self.level}]^2")
        object.__setattr__(self, "points", pts)

    @property
    def size(self) -> int:
        return len(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def fractions(self) -> list[tuple[Fraction, Fraction]]:
        d = 1 << self.level
        return [(Fraction(a, d), Fraction(b, d)) for a, b in self.points]

    def dyadic(self) -> list[tuple[DyadicRational, DyadicRational]]:
        m = self.level
        return [(DyadicRational(a, m), DyadicRational(b, m)) for a, b in self.points]

    def counter(self) -> Counter:
        return Counter(self.points)

    def as_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.points)

    def union(self, other: "PointSet") -> "PointSet":
        """Multiset union (concatenation) of two sets at the same level."""
        if other.level != self.level:
            raise ValueError("cannot join point sets of different levels")
        return PointSet(self.level, self.points + other.points)


def bit_reverse(n: int, m: int) -> int:
    r = 0
    for _ in range(m):
        r = (r << 1) | (n & 1)
        n >>= 1
    return r


def _as_shift(sigma) -> Shift:
    if isinstance(sigma, Shift):
        return sigma
    if isinstance(sigma, str):
        return Shift.parse(sigma)
    return Shift(tuple(sigma))


def hammersley(m: int, sigma) -> PointSet:
    """The shifted Hammersley set ``H_m(sigma)`` with ``2^m`` points.

    Point ``n = (t_1 ... t_m)_2`` has x-numerator ``sum_j t_j 2^(j-1)`` (the
    bit reversal of ``n``) and y-numerator ``n XOR (sigma_1 ... sigma_m)_2``.
    Points are listed in increasing ``n``.
    """
    check_level(m, max_level=24)
    sigma = _as_shift(sigma)
    if sigma.m != m:
        raise ValueError(f"shift has length {sigma.m}, expected m={m}")
    s = sigma.to_int()
    return PointSet(m, tuple((bit_reverse(n, m), n ^ s) for n in range(1 << m)))


def complement_shift(sigma) -> Shift:
    return _as_shift(sigma).complement()


def symmetrized(m: int, sigma) -> PointSet:
    """``H_m(sigma) ∪ H_m(sigma*)``: ``2^(m+1)`` distinct points."""
    sigma = _as_shift(sigma)
    pts = hammersley(m, sigma).union(hammersley(m, sigma.complement()))
    if len(pts.as_set()) != pts.size:
        raise AssertionError("symmetrized set has coincident points")
    return pts


def reflected_symmetrized(m: int, sigma) -> PointSet:
    """``H_m(sigma)`` joined with its mirror image ``(x, 1 - y)``, as a multiset.

    A point with ``y = 0`` is mirrored to ``y = 1`` and kept there.
    """
    base = hammersley(m, sigma)
    top = 1 << m
    mirror = PointSet(m, tuple((a, top - b) for a, b in base.points))
    return base.union(mirror)


def zero_count(sigma) -> int:
    return _as_shift(sigma).zero_count()


def all_shifts(m: int) -> list[Shift]:
    return [Shift.from_int(v, m) for v in range(1 << m)]


def sample_shifts(m: int, count: int, seed: int = 0) -> list[Shift]:
    """``count`` distinct pseudo-random shifts (all of them if ``2^m <= count``)."""
    if (1 << m) <= count:
        return all_shifts(m)
    rng = random.Random(f"{seed}:{m}")
    values = sorted(rng.sample(range(1 << m), count))
    return [Shift.from_int(v, m) for v in values]


def iter_shifts(m: int, exhaustive_up_to: int, count: int, seed: int = 0) -> Iterable[Shift]:
    if m <= exhaustive_up_to:
        return all_shifts(m)
    return sample_shifts(m, count, seed)
