# Classical Bernstein polynomials: basis properties, operator convergence,
# and the binomial-moment connection.

import math

import numpy as np

from qbern import (
    basis,
    basis_derivative,
    beta_density,
    binomial_moment,
    operator,
    operator_as_expectation,
)

x_grid = np.linspace(0.0, 1.0, 101)

print("=== basis properties (n = 6) ===")
n = 6
unity = max(abs(sum(basis(j, n, x) for j in range(n + 1)) - 1.0) for x in x_grid)
print(f"partition of unity, worst deviation over the grid: {unity:.2e}")

sym = max(
    abs(basis(j, n, x) - basis(n - j, n, 1.0 - x))
    for j in range(n + 1) for x in x_grid
)
print(f"symmetry B(j,n,x) = B(n-j,n,1-x), worst deviation:  {sym:.2e}")

h = 1e-6
fd = (basis(2, n, 0.37 + h) - basis(2, n, 0.37 - h)) / (2 * h)
print(f"derivative identity at (j=2, x=0.37): exact {basis_derivative(2, n, 0.37):+.10f}"
      f"  finite-difference {fd:+.10f}")

print()
print("=== operator convergence on cos ===")
print(" n    max |B_n cos - cos|")
for deg in (5, 10, 20, 50, 100, 200):
    err = max(abs(operator(math.cos, deg, x) - math.cos(x)) for x in x_grid)
    print(f"{deg:4d}  {err:.6e}")

print()
print("=== probabilistic view ===")
# the operator is the expectation of f(y/n) for a binomial(n, x) variable y
for x in (0.2, 0.5, 0.8):
    a = operator(math.exp, 12, x)
    b = operator_as_expectation(math.exp, 12, x)
    print(f"x={x}: operator {a:.12f}  expectation {b:.12f}  diff {abs(a-b):.1e}")

print()
print("moments of binomial(n, x) via the Stirling expansion, n=10, x=0.3:")
m1 = binomial_moment(10, 0.3, 1)
m2 = binomial_moment(10, 0.3, 2)
print(f"  E[y]   = {m1}   (n x = 3.0)")
print(f"  var[y] = {m2 - m1 * m1:.12f}   (n x (1-x) = 2.1)")

print()
print("beta-density normalisation, trapezoid on 2001 points:")
ys = np.array([beta_density(2, 5, x) for x in np.linspace(0, 1, 2001)])
print(f"  integral of (n+1) B(2,5,x) over [0,1] ~= {np.trapezoid(ys, dx=1/2000):.8f}")
