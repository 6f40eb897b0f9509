# The interpolation function S(z,k;x): the analytic object whose values at
# negative integers recover the polynomial family.

import math

from qbern import (
    InterpPoint,
    SeriesTruncation,
    SingularityError,
    basis,
    s_derivative,
    s_q_closed,
    s_q_series,
    y_poly,
)

print("=== values at negative integers recover Y ===")
print("S(-n,k;x;q) = (-1)^k n!/(n+k)! Y(n+k,k;x;q)")
for n, k, x, q in ((2, 1, 0.4, 0.7), (3, 2, 0.25, 0.7), (4, 1, 0.7, 1.0)):
    lhs = s_q_closed(InterpPoint(z=float(-n), k=k, x=x, q=q))
    rhs = (-1) ** k * math.factorial(n) / math.factorial(n + k) * y_poly(n + k, k, x, q)
    print(f"  n={n} k={k} x={x} q={q}: S={lhs:+.12f}  scaled Y={rhs:+.12f}")

print()
print("at q=1 this interpolates the classical basis:")
for n in range(5):
    lhs = s_q_closed(InterpPoint(z=float(-n), k=1, x=0.7, q=1.0))
    scaled = -math.factorial(n) / math.factorial(n + 1) * basis(1, n + 1, 0.7)
    print(f"  z=-{n}: {lhs:+.10f}   (-1) n!/(n+1)! B(1,{n + 1},0.7) = {scaled:+.10f}")

print()
print("=== series route vs closed form ===")
trunc = SeriesTruncation(terms=80)
for z in (-3.0, 0.5, 2.0, 1 + 1j):
    p = InterpPoint(z=z, k=2, x=0.5, q=0.7)
    a, b = s_q_series(p, trunc), s_q_closed(p)
    print(f"  z={z}: series {a}  closed {b}  |diff| {abs(a - b):.1e}")

print()
print("=== z-derivatives are log-multiples ===")
for m in (0, 1, 2, 3):
    print(f"  d^{m}/dz^{m} S(0.5, 1; 0.5) = {s_derivative(m, 0.5, 1, 0.5):+.10f}"
          f"   (factor log(1/(1-x)) = {math.log(2):.6f})")

print()
print("=== the pole at x = 1 ===")
try:
    s_q_closed(InterpPoint(z=1.0, k=0, x=1.0, q=1.0))
except SingularityError as exc:
    print(f"  x=1 raises SingularityError: {exc}")
