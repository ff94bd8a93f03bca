"""Phase function T(d, k abar) across dimensions, and the resulting coupling."""

import math

from fracfermi.pseudopot import PseudopotentialSpec, t_function, t_poles

print("T(d, x) at a few arguments")
print(f"{'d':>5} " + " ".join(f"x={x:<6}" for x in (0.2, 0.5, 1.0)) + "  first pole")
for d in (1.5, 2.5, 3.0, 3.5, 5.0):
    row = " ".join(f"{t_function(d, x):8.5f}" for x in (0.2, 0.5, 1.0))
    poles = t_poles(d, 6.0)
    print(f"{d:5.1f} {row}  {poles[0]:.6f}" if poles else f"{d:5.1f} {row}  none")

print(f"\nd = 3 check: T(3, 0.5) = {t_function(3, 0.5):.12f}, tan(0.5)/0.5 = {math.tan(0.5) / 0.5:.12f}")

print("\ncoupling constant at abar = 1, k = 0.3")
for d in (1.0, 1.5, 2.5, 3.0, 3.5, 5.0):
    spec = PseudopotentialSpec(d, 0.3, 1.0)
    print(f"  d = {d:3.1f}: order {spec.deriv_order:+.1f}, g = {spec.coupling:+.8f}")
