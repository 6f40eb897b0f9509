# Identity checks connecting Y to Stirling numbers, higher-order Bernoulli
# polynomials and Hermite polynomials, reported as structured results.

import math

from qbern import (
    SeriesTruncation,
    bernoulli_stirling_identity_check,
    hermite,
    hermite_sum,
    vanishing_sum_check,
)

print("=== Y as a Bernoulli-Stirling convolution ===")
print("Y(n,k;x;q) = [x]^k sum_j C(n,j) B_j^(k)([1-x]) S(n-j,k)")
for n, k, x, q in ((3, 1, 0.5, 1.0), (6, 3, 0.25, 0.6), (8, 5, 0.7, 0.3)):
    rep = bernoulli_stirling_identity_check(n, k, x, q)
    print(f"  n={n} k={k} x={x} q={q}: lhs={rep.lhs:+.10f} rhs={rep.rhs:+.10f} "
          f"residual={rep.residual:.2e} passed={rep.passed}")

print()
print("=== the below-diagonal double sum vanishes exactly ===")
for k in (1, 3, 5, 8):
    rep = vanishing_sum_check(k, 0.4, 0.7)
    print(f"  k={k}: value={rep.lhs} residual={rep.residual} (exact rational arithmetic)")

print()
print("=== Hermite-weighted sum collapses to exp(2(1-y)) ===")
trunc = SeriesTruncation(terms=40)
print("   y     k=1 sum          k=4 sum          exp(2(1-y))      e*sum H_j(1-y)/j!")
for y in (0.1, 0.3, 0.5, 0.7, 0.9):
    s1 = hermite_sum(1, y, trunc)
    s4 = hermite_sum(4, y, trunc)
    oracle = math.exp(2 * (1 - y))
    expansion = math.e * sum(hermite(j, 1 - y) / math.factorial(j) for j in range(31))
    print(f"{y:5.2f}  {s1:.12f}  {s4:.12f}  {oracle:.12f}  {expansion:.12f}")
print("note the sum is independent of k: the k-dependent factors cancel.")
