"""Brute-force sums behind the exact L2 formula, and their closed forms.

Every routine here enumerates the dyadic grid directly and reuses the digit
logic of :mod:`symham.localdisc`; nothing is evaluated in floating point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exactnum import check_level
from .l2 import mixed_sum_value
from .localdisc import (
    DigitContext,
    _factors,
    _to_mbit,
    grid_discrepancy_scaled,
    scaled_norms,
)
from .pointset import Shift, _as_shift

__all__ = [
    "MIXED_SUM_MAX_LEVEL",
    "alpha_factor_table",
    "lemma3_distinct",
    "lemma3_distinct_value",
    "lemma3_equal",
    "lemma3_equal_value",
    "lemma4_cross",
    "lemma4_cross_value",
    "lemma4_square",
    "lemma4_square_value",
    "pill_product_sum",
    "mixed_grid_sum",
    "DecompositionReport",
    "proof_decomposition",
    "predicted_i2",
    "predicted_i4",
    "predicted_s2",
    "predicted_s4",
]

MIXED_SUM_MAX_LEVEL = 10


def _prepare(m: int, sigma, beta) -> tuple[Shift, int]:
    check_level(m)
    sigma = _as_shift(sigma)
    if sigma.m != m:
        raise ValueError(f"shift has length {sigma.m}, expected m={m}")
    return sigma, _to_mbit(beta, m).numerator


def _check_u(m: int, *us: int) -> None:
    for u in us:
        if not 0 <= u <= m - 1:
            raise ValueError(f"u={u} outside 0..{m - 1}")


def alpha_factor_table(m: int, sigma, beta) -> tuple[list[list[int]], list[list[int]]]:
    """Per-alpha digit factors under ``sigma`` and under ``sigma*``.

    Row ``a - 1`` holds ``alpha_{m-u} XOR alpha_{m+1-j(u)}`` for ``u = 0..m-1``
    at ``alpha = a / 2^m``; the first table uses ``j_1`` (shift ``sigma``), the
    second ``j_2`` (shift ``sigma*``).
    """
    sigma, b = _prepare(m, sigma, beta)
    s1, s2 = sigma.to_int(), sigma.complement().to_int()
    first = [_factors(m, s1, a, b) for a in range(1, 1 << m)]
    second = [_factors(m, s2, a, b) for a in range(1, 1 << m)]
    return first, second


def lemma3_distinct(m: int, sigma, beta, u1: int, u2: int) -> Fraction:
    """Sum over alpha of the ``u1`` factor under ``j_1`` times the ``u2`` factor under ``j_2``."""
    if u1 == u2:
        raise ValueError("u1 == u2: use lemma3_equal")
    if m < 2:
        raise ValueError("two distinct u values need m >= 2")
    _check_u(m, u1, u2)
    first, second = alpha_factor_table(m, sigma, beta)
    return Fraction(sum(f[u1] * g[u2] for f, g in zip(first, second)))


def lemma3_distinct_value(m: int) -> Fraction:
    return Fraction(2) ** (m - 2)


def lemma3_equal(m: int, sigma, beta, u: int) -> Fraction:
    """Sum over alpha of the ``u`` factor under ``j_1`` times the same under ``j_2``."""
    _check_u(m, u)
    first, second = alpha_factor_table(m, sigma, beta)
    return Fraction(sum(f[u] * g[u] for f, g in zip(first, second)))


def lemma3_equal_value(m: int, sigma, beta, u: int) -> Fraction:
    """Closed form, driven by ``gamma_j = beta_j XOR sigma_j``."""
    sigma, b = _prepare(m, sigma, beta)
    _check_u(m, u)
    base = Fraction(2) ** (m - u - 1)
    if u in (0, 1):
        return base
    ctx = DigitContext.build(m, sigma, Fraction(0), Fraction(b, 1 << m))
    gu = ctx.gamma(u)
    inner = sum((1 << j) * ((ctx.gamma(j) ^ 1) * gu + ctx.gamma(j) * (gu ^ 1)) for j in range(1, u))
    return base * (1 + inner)


def lemma4_cross(m: int, u1: int, u2: int) -> Fraction:
    """``sum_beta ||2^u1 beta|| * ||2^u2 beta||`` over the nonzero m-bit grid."""
    check_level(m)
    if u1 == u2:
        raise ValueError("u1 == u2: use lemma4_square")
    _check_u(m, u1, u2)
    total = 0
    for b in range(1, 1 << m):
        norms = scaled_norms(m, b)
        total += norms[u1] * norms[u2]
    return Fraction(total, 1 << (2 * m))


def lemma4_cross_value(m: int) -> Fraction:
    return Fraction(1 << m, 16)


def lemma4_square(m: int, u: int) -> Fraction:
    check_level(m)
    _check_u(m, u)
    total = sum(scaled_norms(m, b)[u] ** 2 for b in range(1, 1 << m))
    return Fraction(total, 1 << (2 * m))


def lemma4_square_value(m: int, u: int) -> Fraction:
    return Fraction((1 << (2 * m)) + (1 << (2 * u + 1)), 3 << (m + 2))


def pill_product_sum(
    m: int, sigma, beta, us: Sequence[int], assignment: Sequence[int] | None = None
) -> Fraction:
    """Sum over alpha of ``prod_i (alpha_{m-u_i} XOR alpha_{m+1-j(u_i)})``.

    ``assignment[i]`` is 1 to evaluate ``j(u_i)`` under ``sigma`` and 2 for
    ``sigma*``; omitted, every factor uses ``sigma``.  Expected ``2^(m-k)``.
    """
    k = len(us)
    if not 1 <= k <= m - 1:
        raise ValueError(f"k={k} outside 1..{m - 1}")
    if len(set(us)) != k:
        raise ValueError("u values must be distinct")
    _check_u(m, *us)
    if assignment is None:
        assignment = [1] * k
    if len(assignment) != k or any(s not in (1, 2) for s in assignment):
        raise ValueError("assignment must give 1 or 2 for every u")
    first, second = alpha_factor_table(m, sigma, beta)
    total = 0
    for f, g in zip(first, second):
        prod = 1
        for u, which in zip(us, assignment):
            prod *= f[u] if which == 1 else g[u]
            if not prod:
                break
        total += prod
    return Fraction(total)


def mixed_grid_sum(m: int, sigma) -> Fraction:
    """``4^-m * sum_{alpha, beta}`` of ``Delta_1 * Delta_2`` over the nonzero grid."""
    check_level(m, MIXED_SUM_MAX_LEVEL)
    sigma = _as_shift(sigma)
    if sigma.m != m:
        raise ValueError(f"shift has length {sigma.m}, expected m={m}")
    s1, s2 = sigma.to_int(), sigma.complement().to_int()
    top = 1 << m
    total = 0
    for a in range(1, top):
        for b in range(1, top):
            g1 = grid_discrepancy_scaled(m, s1, a, b)
            if g1:
                total += g1 * grid_discrepancy_scaled(m, s2, a, b)
    return Fraction(total, 1 << (4 * m))


def predicted_i2(m: int) -> Fraction:
    p = 1 << m
    F = Fraction
    return F(25, 36 * p) - F(5, 9 * p**2) - F(25, 36 * p**2) + F(2, 3 * p**3) - F(1, 9 * p**4)


def predicted_i4(m: int) -> Fraction:
    p = 1 << m
    return Fraction(7, 6 * p**2) + Fraction(1, 9 * p**4) - Fraction(2, 3 * p**3)


def predicted_s4(m: int) -> Fraction:
    p = 1 << m
    return -Fraction((p - 1) ** 2 * (32 * p - 25 * p**2 - 8), 72 * p**4)


def predicted_s2(m: int, l: int) -> Fraction:
    p = 1 << m
    return Fraction(p * (2 * p - 1), 2 * p * p) * (Fraction(l, 8) - Fraction(m, 16))


TERMS = ("I1", "I2", "I3", "I4", "S1", "S2", "S3", "S4")


@dataclass(frozen=True)
class DecompositionReport:
    """Exact pieces of the mixed integral and their predicted closed forms."""

    m: int
    sigma: Shift
    computed: dict[str, Fraction]
    predicted: dict[str, Fraction] = field(default_factory=dict)

    def __getattr__(self, name):
        if name in TERMS:
            return self.computed[name]
        raise AttributeError(name)

    @property
    def total(self) -> Fraction:
        c = self.computed
        return c["I1"] + c["I2"] + c["I3"] + c["I4"]

    @property
    def matches(self) -> dict[str, bool]:
        return {k: self.computed[k] == v for k, v in self.predicted.items()}

    @property
    def all_match(self) -> bool:
        return all(self.matches.values())


def _cell_moments(a: int, b: int) -> tuple[int, int]:
    # With h = 2^-m, on cell ((a-1)h, ah] x ((b-1)h, bh] and c = ab h^2:
    #   integral of (c - alpha*beta)   = h^4 (2a + 2b - 1) / 4
    #   integral of (c - alpha*beta)^2 = h^6 r / 36
    pa, pb = 3 * a * a - 3 * a + 1, 3 * b * b - 3 * b + 1
    r = 36 * a * a * b * b - 18 * a * b * (2 * a - 1) * (2 * b - 1) + 4 * pa * pb
    return 2 * a + 2 * b - 1, r


def proof_decomposition(m: int, sigma) -> DecompositionReport:
    """Split the mixed integral at ``1 - 2^-m`` and integrate each cell exactly.

    On a grid cell the local discrepancy is its value at the upper-right
    corner plus ``2^m (alpha(m) beta(m) - alpha beta)``, so the product of both
    discrepancies is a polynomial in ``alpha * beta`` with closed-form moments.
    """
    check_level(m, MIXED_SUM_MAX_LEVEL)
    sigma = _as_shift(sigma)
    if sigma.m != m:
        raise ValueError(f"shift has length {sigma.m}, expected m={m}")
    top = 1 << m
    s1, s2 = sigma.to_int(), sigma.complement().to_int()

    s1_sum = s2_sum = s3_sum = s4_sum = 0
    i2_sum = i3_sum = i4_sum = 0
    for a in range(1, top + 1):
        for b in range(1, top + 1):
            q, r = _cell_moments(a, b)
            if a < top and b < top:
                g1 = grid_discrepancy_scaled(m, s1, a, b)
                g2 = grid_discrepancy_scaled(m, s2, a, b)
                s1_sum += g1 * g2
                s2_sum += g1 * q
                s3_sum += g2 * q
                s4_sum += r
            elif a == top and b == top:
                i4_sum += r
            elif a == top:
                i2_sum += r
            else:
                i3_sum += r

    # S1 = h^4 sum g1 g2;  S2 = 2^m * h * h^4/4 * sum g1 q = h^4/4 * sum;
    # S4 and the edge cells = 4^m * h^6/36 * sum r = h^4/36 * sum
    h4 = 1 << (4 * m)
    c = {
        "S1": Fraction(s1_sum, h4),
        "S2": Fraction(s2_sum, 4 * h4),
        "S3": Fraction(s3_sum, 4 * h4),
        "S4": Fraction(s4_sum, 36 * h4),
        "I2": Fraction(i2_sum, 36 * h4),
        "I3": Fraction(i3_sum, 36 * h4),
        "I4": Fraction(i4_sum, 36 * h4),
    }
    c["I1"] = c["S1"] + c["S2"] + c["S3"] + c["S4"]

    l = sigma.zero_count()
    p = {
        "S1": mixed_sum_value(m, l),
        "S2": predicted_s2(m, l),
        "S3": predicted_s2(m, m - l),
        "S4": predicted_s4(m),
        "I2": predicted_i2(m),
        "I3": predicted_i2(m),
        "I4": predicted_i4(m),
    }
    p["I1"] = p["S1"] + p["S2"] + p["S3"] + p["S4"]
    computed = {k: c[k] for k in TERMS}
    predicted = {k: p[k] for k in TERMS}
    return DecompositionReport(m, sigma, computed, predicted)
