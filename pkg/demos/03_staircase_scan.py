"""
The staircase of f/p as the interval stretches
==============================================

Scanning x = 1 + lam over every point where a new prime enters the
interval shows f/p falling in steps toward 3, and a simple staircase
function running just above it.
"""

from fractions import Fraction

from primefrob import build_table, figure_grid, ratio_scan, staircase

p = 1009
table = build_table(4 * p)

xs = figure_grid(table, p, Fraction(3))
points = ratio_scan(table, p, xs)
print(f"{len(points)} grid points for p = {p}")
print(f"{'x':>10} {'f':>10} {'f/p':>8}  staircase")
for pt in points[:6]:
    print(f"{float(pt.x):>10.5f} {pt.f:>10} {float(pt.ratio):>8.4f}  {pt.staircase}")
print("...")
for pt in points[-3:]:
    print(f"{float(pt.x):>10.5f} {pt.f:>10} {float(pt.ratio):>8.4f}  {pt.staircase}")

# the quotient never climbs as x grows, and never drops below 3 - 6/p
ratios = [pt.ratio for pt in points]
assert all(a >= b for a, b in zip(ratios, ratios[1:]))
assert all(r >= 3 - Fraction(6, p) for r in ratios)
print("monotone and bounded below by 3 - 6/p: ok")

# the staircase itself depends only on lam, not on p
print("staircase at lam = 2, 1, 2/3, 1/2:",
      [staircase(Fraction(v)) for v in ("2", "1", "2/3", "1/2")])
