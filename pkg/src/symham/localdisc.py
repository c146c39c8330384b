"""Local discrepancy of shifted Hammersley sets.

Two independent routes are provided: direct box counting on any
:class:`~symham.pointset.PointSet`, and the binary digit formula that
expresses the local discrepancy of ``H_m(sigma)`` at m-bit corners as

    sum_u ||2^u beta|| * (-1)^sigma_{u+1} * (alpha_{m-u} XOR alpha_{m+1-j(u)})

together with its extension to arbitrary corners by rounding up to the grid.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactnum import DyadicRational, as_fraction, round_up_mbit
from .pointset import PointSet, Shift, _as_shift, hammersley

__all__ = [
    "DigitContext",
    "count_points",
    "local_discrepancy",
    "j_function",
    "j_values",
    "digit_factors",
    "scaled_norms",
    "grid_discrepancy_scaled",
    "local_discrepancy_formula",
    "local_discrepancy_extended",
    "local_discrepancy_sym",
]


def count_points(P: PointSet, alpha, beta) -> int:
    """Number of points (with multiplicity) in ``[0, alpha) x [0, beta)``."""
    d = 1 << P.level
    ax = as_fraction(alpha) * d
    by = as_fraction(beta) * d
    return sum(1 for a, b in P.points if a < ax and b < by)


def local_discrepancy(P: PointSet, alpha, beta) -> Fraction:
    alpha, beta = as_fraction(alpha), as_fraction(beta)
    return count_points(P, alpha, beta) - P.size * alpha * beta


def _to_mbit(x, m: int) -> DyadicRational:
    if isinstance(x, DyadicRational):
        if x.level == m:
            if x.is_one:
                raise ValueError("the value 1 is not m-bit")
            return x
        x = x.value
    x = as_fraction(x)
    scaled = x * (1 << m)
    if scaled.denominator != 1 or not 0 <= scaled < (1 << m):
        raise ValueError(f"{x} is not an {m}-bit number")
    return DyadicRational(int(scaled), m)


@dataclass(frozen=True)
class DigitContext:
    """Digits of an m-bit corner ``(alpha, beta)`` together with a shift."""

    sigma: Shift
    alpha: DyadicRational
    beta: DyadicRational

    def __post_init__(self):
        if not (self.alpha.level == self.beta.level == self.sigma.m):
            raise ValueError("alpha, beta and sigma must share the level m")
        if self.alpha.is_one or self.beta.is_one:
            raise ValueError("digit context needs m-bit alpha and beta (< 1)")

    @classmethod
    def build(cls, m: int, sigma, alpha, beta) -> "DigitContext":
        return cls(_as_shift(sigma), _to_mbit(alpha, m), _to_mbit(beta, m))

    @property
    def m(self) -> int:
        return self.sigma.m

    def alpha_digit(self, j: int) -> int:
        """``alpha_j`` for ``1 <= j <= m + 1`` (``alpha_{m+1} = 0``)."""
        return self.alpha.digit(j)

    def gamma(self, j: int) -> int:
        """``beta_j XOR sigma_j``."""
        return self.beta.digit(j) ^ self.sigma[j]


def j_function(ctx: DigitContext, u: int) -> int:
    """Largest ``j <= u`` with ``alpha_{m+1-j} != gamma_j``, or 0 if none."""
    m = ctx.m
    if not 0 <= u <= m - 1:
        raise ValueError(f"u={u} outside 0..{m - 1}")
    for j in range(u, 0, -1):
        if ctx.alpha_digit(m + 1 - j) != ctx.gamma(j):
            return j
    return 0


def _j_scan(m: int, s: int, a: int, b: int) -> list[int]:
    # j(u) = u on a mismatch at position u, else j(u - 1)
    g = b ^ s
    js = [0] * m
    last = 0
    for u in range(1, m):
        alpha_digit = (a >> (u - 1)) & 1  # alpha_{m+1-u}
        gamma_digit = (g >> (m - u)) & 1  # gamma_u
        if alpha_digit != gamma_digit:
            last = u
        js[u] = last
    return js


def j_values(ctx: DigitContext) -> list[int]:
    """``[j(0), ..., j(m-1)]`` in a single left-to-right scan."""
    return _j_scan(ctx.m, ctx.sigma.to_int(), ctx.alpha.numerator, ctx.beta.numerator)


def _factors(m: int, s: int, a: int, b: int) -> list[int]:
    out = []
    for u, j in enumerate(_j_scan(m, s, a, b)):
        # alpha_{m-u} is bit u of a; alpha_{m+1-j} is bit j-1, or the zero sentinel
        left = (a >> u) & 1
        right = (a >> (j - 1)) & 1 if j else 0
        out.append(left ^ right)
    return out


def digit_factors(ctx: DigitContext) -> list[int]:
    """``[alpha_{m-u} XOR alpha_{m+1-j(u)} for u in 0..m-1]``."""
    return _factors(ctx.m, ctx.sigma.to_int(), ctx.alpha.numerator, ctx.beta.numerator)


def scaled_norms(m: int, b: int) -> list[int]:
    """``[2^m * ||2^u b / 2^m|| for u in 0..m-1]`` as integers."""
    top = 1 << m
    out = []
    for u in range(m):
        r = (b << u) & (top - 1)
        out.append(min(r, top - r))
    return out


def grid_discrepancy_scaled(m: int, s: int, a: int, b: int) -> int:
    """``2^m`` times the digit formula at ``(a/2^m, b/2^m)`` for shift integer ``s``.

    Corners on the top or right edge (numerator ``2^m``) give 0.
    """
    top = 1 << m
    if a == top or b == top or a == 0 or b == 0:
        return 0
    total = 0
    norms = scaled_norms(m, b)
    for u, f in enumerate(_factors(m, s, a, b)):
        if f:
            # (-1)^sigma_{u+1}; sigma_{u+1} is bit m-1-u of s
            total += -norms[u] if (s >> (m - 1 - u)) & 1 else norms[u]
    return total


def local_discrepancy_formula(m: int, sigma, alpha, beta) -> Fraction:
    """Digit formula for the local discrepancy of ``H_m(sigma)`` at m-bit corners."""
    ctx = DigitContext.build(m, sigma, alpha, beta)
    return Fraction(
        grid_discrepancy_scaled(m, ctx.sigma.to_int(), ctx.alpha.numerator, ctx.beta.numerator),
        1 << m,
    )


def local_discrepancy_extended(m: int, sigma, alpha, beta) -> Fraction:
    """Local discrepancy of ``H_m(sigma)`` at any corner in ``(0, 1]^2``.

    The corner is rounded up to the grid, where the digit formula applies
    (and both edges ``alpha = 1`` or ``beta = 1`` carry zero discrepancy), and
    the correction ``2^m (alpha(m) beta(m) - alpha beta)`` is added.
    """
    sigma = _as_shift(sigma)
    if sigma.m != m:
        raise ValueError(f"shift has length {sigma.m}, expected m={m}")
    alpha, beta = as_fraction(alpha), as_fraction(beta)
    if alpha == 0 or beta == 0:
        return Fraction(0)
    ra, rb = round_up_mbit(alpha, m), round_up_mbit(beta, m)
    grid = Fraction(grid_discrepancy_scaled(m, sigma.to_int(), ra.numerator, rb.numerator), 1 << m)
    return grid + (1 << m) * (ra.value * rb.value - alpha * beta)


def local_discrepancy_sym(m: int, sigma, alpha, beta) -> Fraction:
    """Local discrepancy of ``H_m(sigma) ∪ H_m(sigma*)`` as the sum of both parts."""
    sigma = _as_shift(sigma)
    return local_discrepancy_extended(m, sigma, alpha, beta) + local_discrepancy_extended(
        m, sigma.complement(), alpha, beta
    )


def counted_on_hammersley(m: int, sigma, alpha, beta) -> Fraction:
    return local_discrepancy(hammersley(m, sigma), alpha, beta)
