"""
Semigroups of all primes from p_n up, and prime-counting inequalities
=====================================================================

Infinitely many generators, but a finite certificate: once the computed
frobenius number fits under the truncation bound, every discarded prime
was already a member and the answer is exact.
"""

from primefrob import (
    analytic_l,
    analytic_l2,
    build_table,
    sn_scan,
    tail_frobenius,
    verify_literature_bounds,
)

table = build_table(100_000)

print(f"{'n':>4} {'p_n':>6} {'f_n':>7}  truncation")
for n in (1, 2, 3, 5, 10, 25, 100):
    tp = tail_frobenius(table, n)
    assert tp.certificate_ok
    print(f"{n:>4} {tp.p_n:>6} {tp.f:>7}  {tp.truncation}")

# from n = 5 on, f_n is odd and f_(n+1) - 3 p_n is sandwiched in (0, 2n)
rows = sn_scan(table, 5, 60, workers=1)
print("\nparity and jump pattern on n in [5, 60]:",
      "all pass" if all(r.passes for r in rows) else "FAILED")
print("sample jumps f_(n+1) - 3 p_n:", [r.delta_next for r in rows[:10]])

# the classical prime-counting inequalities that back the tail estimates
report = verify_literature_bounds(table, n_max=500, x_max=40_000)
for check in report.checks:
    print(f"{check.name:>12}: {check.checked} points, "
          f"{'holds' if check.holds else check.counterexamples[:3]}")

# and the two analytic envelopes used for large p
print("\nl(5039) =", round(analytic_l(5039), 6), " l2(675) =", round(analytic_l2(675), 6))
