"""The mixed integral split into corner strips and grid-cell pieces, all exact."""

from symham.l2 import cross_integral_exact, mixed_sum_value
from symham.oracles import mixed_grid_sum, proof_decomposition
from symham.pointset import hammersley

m, sigma = 6, "010011"
rep = proof_decomposition(m, sigma)

for name in ("I1", "I2", "I3", "I4", "S1", "S2", "S3", "S4"):
    got, want = rep.computed[name], rep.predicted[name]
    print(f"{name}: {str(got):>28}  {'ok' if got == want else 'MISMATCH ' + str(want)}")

print("S2 + S3 =", rep.S2 + rep.S3)
cross = cross_integral_exact(hammersley(m, sigma), hammersley(m, "101100"))
print("sum of I terms equals the pair-sum cross integral:", rep.total == cross)

# the grid sum of products, brute force vs closed form
l = sigma.count("0")
print("grid sum:", mixed_grid_sum(m, sigma), " closed form:", mixed_sum_value(m, l))
