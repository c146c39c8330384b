"""Exact L2 discrepancy and the closed forms it is checked against.

The squared scaled discrepancy ``(N * L2(P))^2`` equals

    sum_{p,q} (1 - max(x_p, x_q)) (1 - max(y_p, y_q))
        - 2N sum_p (1 - x_p^2)/2 * (1 - y_p^2)/2 + N^2 / 9,

obtained by expanding the square of ``A - N*alpha*beta`` and integrating.
The double sum is evaluated exactly in integer arithmetic by a sweep over x
with a Fenwick tree over y, so sets with tens of thousands of points are cheap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Optional

from .exactnum import check_level
from .pointset import PointSet, Shift, _as_shift, hammersley, reflected_symmetrized, symmetrized

__all__ = [
    "L2Report",
    "pair_sum",
    "pair_sum_naive",
    "l2sq_exact",
    "cross_integral_exact",
    "theorem1_value",
    "theorem1_value_n_form",
    "kp_value",
    "kp_pair_value",
    "mixed_sum_value",
    "optimal_l",
    "optimal_l_raw",
    "leading_constant",
    "LeadingConstant",
    "decimal_sqrt",
    "l2_decimal",
    "corollary_gap",
    "CorollaryGap",
    "l2_report",
]

DEFAULT_DIGITS = 50


class _Fenwick:
    __slots__ = ("n", "tree")

    def __init__(self, n: int):
        self.n = n
        self.tree = [0] * (n + 1)

    def add(self, i: int, v: int) -> None:
        i += 1
        while i <= self.n:
            self.tree[i] += v
            i += i & -i

    def prefix(self, i: int) -> int:
        """Sum of entries with index ``<= i``."""
        i += 1
        s = 0
        while i > 0:
            s += self.tree[i]
            i -= i & -i
        return s


def pair_sum(points, level: int) -> int:
    """``4^m * sum_{p,q} (1 - max x)(1 - max y)`` over ordered pairs, as an int.

    ``points`` are integer numerator pairs at ``level``; multiplicities count.
    """
    top = 1 << level
    pts = sorted(points)
    count = _Fenwick(top + 1)
    slack = _Fenwick(top + 1)  # sum of (top - y) per y value
    total_slack = 0
    off = 0
    for a, b in pts:
        # every earlier point has x <= a, so max x = a
        below = count.prefix(b)
        above_slack = total_slack - slack.prefix(b)
        off += (top - a) * (below * (top - b) + above_slack)
        count.add(b, 1)
        slack.add(b, top - b)
        total_slack += top - b
    diag = sum((top - a) * (top - b) for a, b in pts)
    return 2 * off + diag


def pair_sum_naive(P: PointSet) -> Fraction:
    """Direct O(N^2) evaluation of the pair sum, in Fractions."""
    pts = P.fractions()
    return sum(
        ((1 - max(xp, xq)) * (1 - max(yp, yq)) for xp, yp in pts for xq, yq in pts),
        Fraction(0),
    )


def _box_sum(P: PointSet) -> Fraction:
    # sum_p (1 - x^2)/2 * (1 - y^2)/2
    top2 = 1 << (2 * P.level)
    s = sum((top2 - a * a) * (top2 - b * b) for a, b in P.points)
    return Fraction(s, 4 * top2 * top2)


def l2sq_exact(P: PointSet) -> Fraction:
    """``(N * L2(P))^2`` exactly, multiplicities included."""
    if P.size == 0:
        raise ValueError("L2 discrepancy of an empty point set")
    n = P.size
    pairs = Fraction(pair_sum(P.points, P.level), 1 << (2 * P.level))
    return pairs - 2 * n * _box_sum(P) + Fraction(n * n, 9)


def cross_integral_exact(P1: PointSet, P2: PointSet) -> Fraction:
    """Integral over the unit square of ``Delta(., ., P1) * Delta(., ., P2)``."""
    if P1.size != P2.size:
        raise ValueError(f"point sets differ in size: {P1.size} vs {P2.size}")
    if P1.level != P2.level:
        raise ValueError("point sets must share the same level")
    if P1.size == 0:
        raise ValueError("empty point sets")
    n, m = P1.size, P1.level
    # sum over P1 x P2 recovered from the three symmetric pair sums
    joint = pair_sum(P1.points + P2.points, m)
    cross2 = joint - pair_sum(P1.points, m) - pair_sum(P2.points, m)
    cross = Fraction(cross2, 2 << (2 * m))
    return cross - n * _box_sum(P1) - n * _box_sum(P2) + Fraction(n * n, 9)


def theorem1_value(m: int) -> Fraction:
    """``m/24 + 11/8 + 2^-m - 1/(9 * 2^(2m+1))``."""
    check_level(m, max_level=10**6)
    return Fraction(m, 24) + Fraction(11, 8) + Fraction(1, 1 << m) - Fraction(1, 9 << (2 * m + 1))


def theorem1_value_n_form(m: int) -> float:
    """Same quantity written through ``N = 2^(m+1)``, in floating point."""
    n = 2.0 ** (m + 1)
    return math.log(n) / (24 * math.log(2)) + 4 / 3 + 2 / n - 2 / (9 * n * n)


def _check_l(m: int, l: int) -> None:
    if not 0 <= l <= m:
        raise ValueError(f"zero count l={l} outside 0..{m}")


def kp_value(m: int, l: int) -> Fraction:
    """``(2^m L2(H_m(sigma)))^2`` for any shift with ``l`` zero bits."""
    check_level(m, max_level=10**6)
    _check_l(m, l)
    F = Fraction
    p = 1 << m
    return (
        F(m * m, 64) - F(19 * m, 192) - F(l * m, 16) + F(l * l, 16) + F(l, 4) + F(3, 8)
        + F(m, 16 * p) - F(l, 8 * p) + F(1, 4 * p) - F(1, 72 * p * p)
    )


def kp_pair_value(m: int, l: int) -> Fraction:
    """Closed form of ``kp_value(m, l) + kp_value(m, m - l)``."""
    _check_l(m, l)
    F = Fraction
    return (
        F(m * m, 32) + F(l * l, 8) - F(l * m, 8) + F(5 * m, 96) + F(3, 4)
        + F(1, 2 << m) - F(1, 9 << (2 * m + 2))
    )


def mixed_sum_value(m: int, l: int) -> Fraction:
    """Closed form of ``4^-m * sum over the open grid of Delta_1 * Delta_2``."""
    check_level(m, max_level=10**6)
    _check_l(m, l)
    F = Fraction
    return (
        -F(m * m, 64) - F(l * l, 16) + F(l * m, 16) - F(m, 192) - F(5, 144)
        - F(1, 9 << (2 * m + 2))
    )


def optimal_l_raw(m: int) -> int:
    """``ceil((m - 5)/2 + 2^-m)`` without clamping (negative for ``m <= 4``)."""
    return math.ceil(Fraction(m - 5, 2) + Fraction(1, 1 << m))


def optimal_l(m: int) -> int:
    check_level(m, max_level=10**6)
    return min(max(optimal_l_raw(m), 0), m)


@dataclass(frozen=True)
class LeadingConstant:
    kind: str
    radicand: str
    value: Decimal

    def __str__(self) -> str:
        return f"sqrt({self.radicand}) = {self.value}"


_CONSTANTS = {
    # kind: (numerator, denominator, log argument)
    "symmetrized": (1, 24, 2),
    "balanced-shift": (5, 192, 2),
    "base22": (278629, 2811072, 22),
}


def leading_constant(kind: str, digits: int = 30) -> LeadingConstant:
    """Coefficient of ``sqrt(log N) / N`` for the three constructions compared."""
    try:
        num, den, base = _CONSTANTS[kind]
    except KeyError:
        raise ValueError(f"unknown constant kind {kind!r}; choose from {sorted(_CONSTANTS)}")
    with localcontext() as ctx:
        ctx.prec = digits + 10
        v = (Decimal(num) / (Decimal(den) * Decimal(base).ln())).sqrt()
        ctx.prec = digits
        v = +v
    return LeadingConstant(kind, f"{num}/({den} log {base})", v)


def decimal_sqrt(x: Fraction, digits: int = DEFAULT_DIGITS) -> Decimal:
    """Square root of a nonnegative rational to ``digits`` significant digits."""
    if x < 0:
        raise ValueError("square root of a negative number")
    with localcontext() as ctx:
        ctx.prec = digits + 10
        r = (Decimal(x.numerator) / Decimal(x.denominator)).sqrt()
        ctx.prec = digits
        return +r


def l2_decimal(squared_scaled: Fraction, n: int, digits: int = DEFAULT_DIGITS) -> Decimal:
    """``L2 = sqrt((N L2)^2) / N`` as a Decimal."""
    with localcontext() as ctx:
        ctx.prec = digits + 10
        r = decimal_sqrt(squared_scaled, digits + 10) / Decimal(n)
        ctx.prec = digits
        return +r


@dataclass(frozen=True)
class CorollaryGap:
    gap: Decimal
    bound: Fraction
    holds: bool
    l2_reflected: Decimal
    l2_symmetrized: Decimal


def corollary_gap(m: int, sigma, digits: int = DEFAULT_DIGITS) -> CorollaryGap:
    """Compare L2 of the ``y -> 1 - y`` reflection with the symmetrized set."""
    sigma = _as_shift(sigma)
    n = 1 << (m + 1)
    tilde = l2_decimal(l2sq_exact(reflected_symmetrized(m, sigma)), n, digits)
    sym = l2_decimal(l2sq_exact(symmetrized(m, sigma)), n, digits)
    with localcontext() as ctx:
        ctx.prec = digits
        gap = abs(tilde - sym)
        bound = Fraction(1, n)
        # 1/N is a power of 1/2, hence exact in decimal
        holds = gap <= Decimal(1) / Decimal(n)
    return CorollaryGap(gap, bound, bool(holds), tilde, sym)


@dataclass(frozen=True)
class L2Report:
    kind: str
    m: int
    sigma: Shift
    n: int
    squared_scaled: Fraction
    predicted: Optional[Fraction] = None
    match: Optional[bool] = field(default=None)

    def __post_init__(self):
        if self.squared_scaled < 0:
            raise ValueError("squared discrepancy cannot be negative")
        if self.predicted is not None:
            object.__setattr__(self, "match", self.squared_scaled == self.predicted)

    def l2(self, digits: int = DEFAULT_DIGITS) -> Decimal:
        return l2_decimal(self.squared_scaled, self.n, digits)


def l2_report(kind: str, m: int, sigma) -> L2Report:
    """Exact L2 of one of the three constructions plus its closed form if known.

    ``kind`` is ``"hammersley"``, ``"symmetrized"`` or ``"reflected"``; the
    reflected set has no closed form, so ``predicted`` stays ``None``.
    """
    sigma = _as_shift(sigma)
    if kind == "hammersley":
        P = hammersley(m, sigma)
        predicted = kp_value(m, sigma.zero_count())
    elif kind == "symmetrized":
        P = symmetrized(m, sigma)
        predicted = theorem1_value(m)
    elif kind == "reflected":
        P = reflected_symmetrized(m, sigma)
        predicted = None
    else:
        raise ValueError(f"unknown set kind {kind!r}")
    return L2Report(kind, m, sigma, P.size, l2sq_exact(P), predicted)
