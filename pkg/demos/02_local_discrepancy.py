"""Local discrepancy by counting and by the binary digit formula."""

from fractions import Fraction as F

from symham import (
    hammersley,
    local_discrepancy,
    local_discrepancy_extended,
    local_discrepancy_formula,
    local_discrepancy_sym,
    symmetrized,
)
from symham.localdisc import DigitContext, j_values

m, sigma = 3, "011"
P = hammersley(m, sigma)

# on the grid both routes agree exactly
for a, b in [(1, 1), (3, 5), (7, 2), (5, 5)]:
    al, be = F(a, 8), F(b, 8)
    print(f"Delta({al}, {be}):  counted {local_discrepancy(P, al, be)}"
          f"   digits {local_discrepancy_formula(m, sigma, al, be)}")

# the digit formula needs j(u), the deepest mismatch between reversed alpha digits and beta xor sigma
ctx = DigitContext.build(m, sigma, F(5, 8), F(3, 8))
print("j(u) for alpha=5/8, beta=3/8:", j_values(ctx))

# off the grid: round up to the grid and correct by 2^m (alpha(m) beta(m) - alpha beta)
al, be = F(3, 10), F(2, 3)
print("off-grid:", local_discrepancy(P, al, be), "==", local_discrepancy_extended(m, sigma, al, be))

# the worked example with a single point below the corner
print("m=1, corner (3/8, 3/8):", local_discrepancy_extended(1, "0", F(3, 8), F(3, 8)))

# the symmetrized set's discrepancy is the sum over both halves
print("symmetrized:", local_discrepancy(symmetrized(m, sigma), al, be), "==",
      local_discrepancy_sym(m, sigma, al, be))
