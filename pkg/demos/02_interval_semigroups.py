"""
Semigroups generated by the primes in [p, p + lam*p]
====================================================

The star example: all primes between p and 2p (lam = 1).  For p = 19
those are 19, 23, 29, 31, 37, and the largest non-member is 101.
"""

from fractions import Fraction

from primefrob import build_interval_semigroup, build_table, two_primes_in_interval

table = build_table(10_000)

s19 = build_interval_semigroup(table, 19, Fraction(1))
print("p = 19, lam = 1")
print("  generators:", s19.generators)
print("  frobenius:", s19.frobenius, " genus:", s19.genus)
print("  members below 63:", s19.profile.members_below(63).tolist())

# sporadic elements: members below the frobenius number.  Their count is
# determined by f and the genus, no extra search needed.
count, elems = s19.profile.sporadic_elements(59)
print("  sporadic count:", count, " (first few:", elems[:8].tolist(), "...)")

# shrinking lam thins the generators and pushes f up
for lam in (Fraction(1), Fraction(1, 2), Fraction(1, 4), Fraction(1, 8)):
    if not two_primes_in_interval(table, 23, lam):
        print(f"p = 23, lam = {lam}:  fewer than two primes, skipped")
        continue
    ls = build_interval_semigroup(table, 23, lam)
    print(f"p = 23, lam = {lam}:  {len(ls.generators)} generators, f = {ls.frobenius}")
