# The q-Bernstein-type family Y(n,k;x;q): closed form, alternating sum,
# generating-function routes, and the classical limit.

import numpy as np

from qbern import (
    GenFunPoint,
    SeriesTruncation,
    basis,
    gen_fun,
    gen_fun_series,
    q_integer,
    y_from_genfun,
    y_poly,
    y_poly_sumform,
)

n, k, q = 7, 3, 0.6

print(f"=== Y({n},{k}; x; q={q}) three ways ===")
print("   x      closed form      alternating sum   coeff extraction")
for x in np.linspace(0.1, 0.9, 5):
    a = y_poly(n, k, x, q)
    b = y_poly_sumform(n, k, x, q)
    c = y_from_genfun(n, k, x, q)
    print(f"{x:5.2f}  {a:16.12f}  {b:16.12f}  {c:16.12f}")

print()
print("the q-integer weights behind those values:")
for x in (0.25, 0.5, 0.75):
    print(f"  [x:q] at x={x}: {q_integer(x, q):.6f}   [1-x:q]: {q_integer(1 - x, q):.6f}")

print()
print("=== generating function ([x]t)^k/k! exp([1-x]t) ===")
trunc = SeriesTruncation(terms=64)
for t in (0.5, 1.0, -1.0):
    point = GenFunPoint(t=t, x=0.5, q=0.5, truncation=trunc)
    closed = gen_fun(point, 2)
    series = gen_fun_series(point, 2)
    print(f"t={t:+.1f}: closed {closed:+.12e}   series {series:+.12e}   "
          f"diff {abs(closed - series):.1e}")

print()
print("=== classical limit q -> 1 ===")
print("   q         max |Y - B| over k <= n, x grid (n = 6)")
for qv in (0.9, 0.99, 0.999, 1 - 1e-6, 1.0):
    worst = max(
        abs(y_poly(6, kk, x, qv) - basis(kk, 6, x))
        for kk in range(7) for x in np.linspace(0.1, 0.9, 9)
    )
    print(f"{qv:10.7f}   {worst:.3e}")
