"""Exact L2 discrepancy of shifted and symmetrized Hammersley point sets."""

from .exactnum import (
    DyadicRational,
    ExactRational,
    mbit_grid,
    nearest_integer_distance,
    round_up_mbit,
)
from .l2 import (
    corollary_gap,
    cross_integral_exact,
    kp_value,
    l2sq_exact,
    leading_constant,
    mixed_sum_value,
    optimal_l,
    theorem1_value,
)
from .localdisc import (
    count_points,
    local_discrepancy,
    local_discrepancy_extended,
    local_discrepancy_formula,
    local_discrepancy_sym,
)
from .pointset import (
    PointSet,
    Shift,
    complement_shift,
    hammersley,
    reflected_symmetrized,
    symmetrized,
    zero_count,
)

__version__ = "0.1.0"
