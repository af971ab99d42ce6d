"""
The Wilf quotient across the primes-in-[p,2p] family
====================================================

For each semigroup the check is a single exact rational comparison:
genus / (1 + frobenius) against (e - 1) / e.  Here e counts atoms.
"""

from primefrob import build_table, density, table_for_nth_prime, verify_sp_range

table = table_for_nth_prime(build_table(10_000), 60)

rows = verify_sp_range(table, 8, 60, workers=1)
print(f"{'n':>4} {'p':>6} {'e':>3} {'f':>7} {'g':>7}  quotient  bound")
for r in rows[:6]:
    print(f"{r.n:>4} {r.p:>6} {r.e:>3} {r.f:>7} {r.g:>7}  "
          f"{float(r.lhs):.5f}   {float(r.rhs):.5f}")
print("...")
worst = max(rows, key=lambda r: r.lhs / r.rhs)
print(f"tightest row: n = {worst.n}, quotient/bound = {float(worst.lhs / worst.rhs):.5f}")
print("holds everywhere:", all(r.holds for r in rows))

# the sporadic density (members below f among all of [0, f]) drifts toward 3/8
print()
for p in (19, 101, 1009, 10007):
    table = build_table(2 * p + 2)
    d = density(table, p)
    print(f"density({p}) = {float(d):.6f}")
