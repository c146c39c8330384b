"""Reflection by y -> 1 - y, and the leading constants compared."""

from symham import corollary_gap, leading_constant
from symham.cli import table_rows

for m in (2, 5, 8, 10):
    g = corollary_gap(m, "0" * m)
    print(f"m={m:2d}  L2 reflected {g.l2_reflected:.3e}  L2 symmetrized {g.l2_symmetrized:.3e}"
          f"  gap {g.gap:.3e} <= {float(g.bound):.3e}: {g.holds}")

print()
for kind in ("symmetrized", "balanced-shift", "base22"):
    print(f"{kind:>15}: {leading_constant(kind)}")

# L2 * N / sqrt(log N) decreases towards the symmetrized constant, slowly (the 4/3 term decays like 1/log N)
print()
for m, n, sq, l2, ratio, ok in table_rows(range(2, 15, 2)):
    print(f"m={m:2d}  N={n:6d}  ratio {ratio:.5f}")
