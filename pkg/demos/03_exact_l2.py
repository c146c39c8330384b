"""Exact L2 discrepancy: the symmetrized set does not care about the shift."""

import math

from symham import kp_value, l2sq_exact, optimal_l, symmetrized, theorem1_value, hammersley
from symham.l2 import l2_decimal
from symham.pointset import all_shifts

# (N L2)^2 for every shift at m = 5, compared to the closed form
m = 5
values = {l2sq_exact(symmetrized(m, s)) for s in all_shifts(m)}
print(f"m={m}: {len(all_shifts(m))} shifts give {len(values)} distinct value(s):", values)
print("closed form:", theorem1_value(m))

# the value quoted for the level-8 pictures
v = theorem1_value(8)
print("L2 at m=8:", l2_decimal(v, 512, 12))

# a single shifted set depends on the number l of zero bits
m = 10
print(f"\nshifted H_{m}: (N L2)^2 by zero count l")
for l in range(m + 1):
    s = "0" * l + "1" * (m - l)
    exact = l2sq_exact(hammersley(m, s))
    assert exact == kp_value(m, l)
    marker = "  <- optimal" if l == optimal_l(m) else ""
    print(f"  l={l:2d}  {float(exact):.6f}{marker}")

# growth per level tends to 1/24
print("\nincrements:", [round(float(theorem1_value(k + 1) - theorem1_value(k)), 6) for k in range(1, 12)])
print("1/24 =", round(1 / 24, 6), " sqrt(1/(24 log 2)) =", round(math.sqrt(1 / (24 * math.log(2))), 6))
