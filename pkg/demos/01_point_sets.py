"""Build the shifted, symmetrized and reflected Hammersley sets.

Run:  python demos/01_point_sets.py   (writes two SVG files to the current directory)
"""

from collections import Counter

from symham import hammersley, reflected_symmetrized, symmetrized
from symham.cli import points_svg

# the classical set at level 3: x is the bit reversal of y
H = hammersley(3, "000")
print("H_3(000):", [f"({a}/8, {b}/8)" for a, b in H.points])

# a shift XORs the y digits; the complementary shift fills in the rest
sym = symmetrized(3, "010")
print("symmetrized size:", sym.size, "distinct:", len(sym.as_set()))

# the same set, written as H plus its mirror image y -> 1 - 2^-m - y
mirror = {(a, 8 - 1 - b) for a, b in hammersley(3, "010").points}
print("mirror identity holds:", sym.as_set() == hammersley(3, "010").as_set() | mirror)

# the exact reflection y -> 1 - y may stack points on top of each other
tilde = reflected_symmetrized(3, "010")
dup = {p: c for p, c in Counter(tilde.points).items() if c > 1}
print("reflected set size:", tilde.size, "repeated points:", dup)

# two reference sets: all-zeros shift and alternating shift
for name, shift in [("zeros", "00000000"), ("alternating", "01010101")]:
    with open(f"hsym8_{name}.svg", "w") as fh:
        fh.write(points_svg(symmetrized(8, shift)))
    print(f"wrote hsym8_{name}.svg")
