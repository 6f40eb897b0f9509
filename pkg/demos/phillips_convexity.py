# Shape preservation of the Phillips q-Bernstein operator: for convex f the
# approximants decrease monotonically in n and never dip below f.

import numpy as np

from qbern import operator, phillips_operator

f = lambda t: t * t
x_grid = np.linspace(0.0, 1.0, 21)

print("=== beta_n(t^2) decreases in n and stays above t^2 (q = 0.8) ===")
print("   x     f(x)      n=2       n=4       n=8       margin(n=8)")
for x in (0.1, 0.3, 0.5, 0.7, 0.9):
    b2 = phillips_operator(f, 2, x, 0.8)
    b4 = phillips_operator(f, 4, x, 0.8)
    b8 = phillips_operator(f, 8, x, 0.8)
    print(f"{x:5.2f}  {f(x):.4f}  {b2:.6f}  {b4:.6f}  {b8:.6f}  {b8 - f(x):+.6f}")

print()
print("worst one-sidedness margin min_x (beta_n f - f) over a 21-point grid:")
for q in (0.5, 0.8, 1.0):
    for n in (2, 5, 10):
        margin = min(phillips_operator(f, n, x, q) - f(x) for x in x_grid)
        print(f"  q={q:.1f} n={n:2d}: {margin:+.3e}")

print()
print("monotone decrease: max_x (beta_n f - beta_(n-1) f) should be <= 0")
for q in (0.5, 0.8, 1.0):
    for n in (3, 6, 10):
        worst = max(
            phillips_operator(f, n, x, q) - phillips_operator(f, n - 1, x, q)
            for x in x_grid
        )
        print(f"  q={q:.1f} n={n:2d}: {worst:+.3e}")

print()
print("=== q = 1 recovers the classical operator ===")
diff = max(
    abs(phillips_operator(np.cos, n, x, 1.0) - operator(np.cos, n, x))
    for n in (2, 5, 9) for x in x_grid
)
print(f"max |beta_n - B_n| over the grid: {diff:.2e}")
