"""Prime decompositions with closeness certificates, and tail semigroups.

Two families of results live here:

* Writing N as a sum of m primes that are almost equal: each part must stay
  within an explicit window of N/m.  Every search returns a DecompCertificate
  whose bound is re-checkable in exact integer arithmetic; deviations are
  stored as |m*q - N| so no division ever happens.

* The semigroups generated by all primes >= p_n.  These have infinitely many
  generators, but a truncation B with computed f <= B is a proof that the
  discarded generators were already members, so the finite answer is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np

from concurrent.futures import ProcessPoolExecutor

from .errors import DecompositionError, DomainError, InvariantViolationError
from .primes import PrimeTable, build_table, extend_table, table_for_nth_prime
from .semigroup import AperyProfile, IncrementalApery

BOUND_DELTA = "delta"      # strict: |m*q_i - N| < m*delta*N
BOUND_WINDOW = "n_theta"   # inclusive: |m*q_i - N| <= m*floor(N^theta)


@dataclass(frozen=True)
class DecompCertificate:
    """N = sum of m primes, with the achieved deviation and the claimed bound.

    max_deviation = max over parts of |m*q_i - N| (exact integer).  The claim
    is max_deviation < bound_limit for strict bounds, <= otherwise; validate()
    re-derives everything from scratch.
    """

    N: int
    m: int
    parts: tuple[int, ...]
    max_deviation: int
    bound_type: str
    bound_limit: Fraction
    strict: bool

    def deviation_of(self, q: int) -> int:
        return abs(self.m * q - self.N)

    def bound_satisfied(self) -> bool:
        dev = Fraction(self.max_deviation)
        return dev < self.bound_limit if self.strict else dev <= self.bound_limit

    def validate(self, table: PrimeTable) -> bool:
        if len(self.parts) != self.m or sum(self.parts) != self.N:
            return False
        if any(not table.is_prime(q) for q in self.parts):
            return False
        if max(self.deviation_of(q) for q in self.parts) != self.max_deviation:
            return False
        return self.bound_satisfied()


def binary_decomp(table: PrimeTable, n: int, window: int) -> tuple[int, int] | None:
    """Two primes q1 <= q2 with q1 + q2 = n, both within ``window`` of n/2,
    minimizing |q1 - n/2|.  None when no such pair exists (that is an answer,
    not an error: small windows legitimately fail).
    """
    if n % 2 != 0 or n < 4:
        raise DomainError(f"need an even n >= 4, got {n}")
    if n > 2 * table.limit:
        raise DomainError(f"n={n} exceeds twice the sieve limit {table.limit}")
    half = n // 2
    for d in range(0, min(window, half - 2) + 1):
        if table.is_prime(half - d) and table.is_prime(half + d):
            return (half - d, half + d)
    return None


def _balanced_pair(table: PrimeTable, r: int, lo: int, hi: int) -> tuple[int, int] | None:
    """Primes q2 <= q3, q2 + q3 = r, both in [lo, hi], most balanced first."""
    half = r // 2
    start = 0 if r % 2 == 0 else 1  # odd r needs q2 != q3
    for d in range(start, half - 1):
        q2, q3 = half - d, half + d + (r % 2)
        if q2 < lo or q3 > hi:
            return None
        if table.is_prime(q2) and table.is_prime(q3):
            return (q2, q3)
    return None


def _three_primes(
    table: PrimeTable, n: int, lo: int, hi: int
) -> tuple[int, int, int] | None:
    """n as q1+q2+q3, all prime, all in [lo, hi]; q1 nearest n/3 first."""
    lo = max(lo, 2)
    if lo > hi:
        return None
    candidates = table.primes_in(lo, hi)
    if len(candidates) == 0:
        return None
    order = np.lexsort((candidates, np.abs(3 * candidates - n)))
    for q1 in candidates[order]:
        q1 = int(q1)
        pair = _balanced_pair(table, n - q1, lo, hi)
        if pair is not None:
            return tuple(sorted((q1, *pair)))
    return None


def ternary_decomp(table: PrimeTable, n: int, theta: float = 0.6) -> DecompCertificate:
    """n (odd, >= 9) as three primes, each within floor(n^theta) of n/3."""
    if n % 2 == 0 or n < 9:
        raise DomainError(f"need an odd n >= 9, got {n}")
    if n > table.limit:
        raise DomainError(f"n={n} exceeds the sieve limit {table.limit}")
    w = int(n ** theta)
    lo = -((-(n - 3 * w)) // 3)  # ceil((n-3w)/3)
    hi = (n + 3 * w) // 3
    parts = _three_primes(table, n, lo, hi)
    if parts is None:
        raise DecompositionError(
            f"no three-prime split of {n} with parts in [{lo}, {hi}] "
            f"(window floor(n^{theta}) = {w})"
        )
    max_dev = max(abs(3 * q - n) for q in parts)
    return DecompCertificate(
        N=n,
        m=3,
        parts=parts,
        max_deviation=max_dev,
        bound_type=BOUND_WINDOW,
        bound_limit=Fraction(3 * w),
        strict=False,
    )


def decompose_m(
    table: PrimeTable,
    n: int,
    m: int,
    delta: Fraction,
    theta: float = 0.6,
) -> DecompCertificate:
    """n as m primes with every part strictly within delta*n of n/m.

    For m = 3 the three-prime search runs directly over the delta window.
    For m > 3 the construction peels off m-3 copies of the largest prime P in
    [floor(n/m) - floor((n/m)^(21/40)), floor(n/m)], then splits the odd
    remainder n - (m-3)P into three primes; the delta claim is re-checked
    over all m parts at the end.
    """
    delta = Fraction(delta)
    if m < 3:
        raise DomainError(f"need m >= 3, got {m}")
    if delta <= 0:
        raise DomainError(f"need delta > 0, got {delta}")
    if n % 2 != m % 2:
        raise DomainError(f"n={n} and m={m} must have equal parity")
    if n > table.limit:
        raise DomainError(f"n={n} exceeds the sieve limit {table.limit}")
    limit = Fraction(m) * delta * n  # claim: |m*q - n| < limit for every part
    if m == 3:
        # strict window (n/3 - delta*n, n/3 + delta*n) in integers
        lo = (Fraction(n, 3) - delta * n).__floor__() + 1
        hi = (Fraction(n, 3) + delta * n).__ceil__() - 1
        parts = _three_primes(table, n, lo, hi)
        if parts is None:
            raise DecompositionError(
                f"no three-prime split of {n} within delta={delta} of n/3"
            )
    else:
        center = n // m
        reach = int(center ** (21 / 40))
        window = table.primes_in(max(2, center - reach), center)
        if len(window) == 0:
            raise DecompositionError(
                f"no prime in [{center - reach}, {center}] to anchor m={m}"
            )
        anchor = int(window[-1])
        rest = n - (m - 3) * anchor
        inner = ternary_decomp(table, rest, theta=theta)
        parts = tuple(sorted(inner.parts + (anchor,) * (m - 3)))
    max_dev = max(abs(m * q - n) for q in parts)
    cert = DecompCertificate(
        N=n,
        m=m,
        parts=parts,
        max_deviation=max_dev,
        bound_type=BOUND_DELTA,
        bound_limit=limit,
        strict=True,
    )
    if not cert.bound_satisfied():
        raise DecompositionError(
            f"split of {n} into {m} parts missed the delta={delta} bound: "
            f"max deviation {max_dev} vs limit {limit}"
        )
    return cert


@dataclass(frozen=True)
class TailProfile:
    """Exact invariants of the semigroup of all primes >= p_n.

    truncation is the generator cutoff B actually used; certificate_ok
    records f <= B, which makes the truncation lossless: any prime > B
    exceeds f, so it was already a member.
    """

    n: int
    p_n: int
    truncation: int
    f: int
    certificate_ok: bool
    profile: AperyProfile

    @property
    def genus(self) -> int:
        return self.profile.genus


def tail_frobenius(table: PrimeTable, n: int, max_rounds: int = 20) -> TailProfile:
    """Frobenius number of the semigroup generated by all primes >= p_n.

    Start from the truncation B = 4*p_n + 2n and fold primes of [p_n, B]
    ascending; a prime above every current Apery value can no longer change
    the table, so folding stops early.  If the computed f fits under B the
    truncated semigroup equals the full one and the answer is exact;
    otherwise B doubles and the build repeats.
    """
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    table = table_for_nth_prime(table, n)
    p_n = table.nth_prime(n)
    bound = 4 * p_n + 2 * n
    for _ in range(max_rounds):
        table = extend_table(table, bound)
        inc = IncrementalApery(p_n)
        for q in table.primes_in(p_n + 1, bound):
            if int(q) > int(inc.ap.max()):
                break  # every later prime is even larger; the table is final
            inc.add(int(q))
        if inc.complete:
            f = inc.frobenius()
            if f <= bound:
                return TailProfile(
                    n=n,
                    p_n=p_n,
                    truncation=bound,
                    f=f,
                    certificate_ok=True,
                    profile=inc.profile(),
                )
        bound *= 2
    raise InvariantViolationError(
        f"no truncation certificate for n={n} after {max_rounds} doublings"
    )


@dataclass(frozen=True)
class TailScanRow:
    n: int
    p_n: int
    f_n: int
    f_next: int
    f_odd: bool
    delta_next: int  # f_{n+1} - 3 p_n
    delta_in_range: bool

    @property
    def passes(self) -> bool:
        return self.f_odd and self.delta_in_range


_WORKER_TABLE: PrimeTable | None = None


def _init_tail_worker(limit: int) -> None:
    global _WORKER_TABLE
    _WORKER_TABLE = build_table(limit)


def _tail_worker(n: int) -> tuple[int, int, int]:
    assert _WORKER_TABLE is not None
    tp = tail_frobenius(_WORKER_TABLE, n)
    return (n, tp.p_n, tp.f)


def sn_scan(table: PrimeTable, n_lo: int, n_hi: int, workers: int = 1) -> list[TailScanRow]:
    """Rows for n in [n_lo, n_hi]: f_n parity and the jump f_{n+1} - 3 p_n.

    The observed pattern for n >= 5: f_n is odd and the jump sits strictly
    between 0 and 2n.  With workers > 1 the per-n builds fan out over
    processes; rows come back merged in n order either way.
    """
    if n_lo < 1 or n_hi < n_lo:
        raise DomainError(f"bad range [{n_lo}, {n_hi}]")
    ns = range(n_lo, n_hi + 2)
    if workers > 1:
        with ProcessPoolExecutor(
            max_workers=workers, initializer=_init_tail_worker, initargs=(table.limit,)
        ) as ex:
            triples = list(ex.map(_tail_worker, ns, chunksize=16))
    else:
        triples = []
        for n in ns:
            tp = tail_frobenius(table, n)
            triples.append((n, tp.p_n, tp.f))
    by_n = {n: (p, f) for n, p, f in triples}
    rows = []
    for n in range(n_lo, n_hi + 1):
        p_n, f_n = by_n[n]
        f_next = by_n[n + 1][1]
        delta = f_next - 3 * p_n
        rows.append(
            TailScanRow(
                n=n,
                p_n=p_n,
                f_n=f_n,
                f_next=f_next,
                f_odd=f_n % 2 == 1,
                delta_next=delta,
                delta_in_range=0 < delta < 2 * n,
            )
        )
    return rows


@dataclass(frozen=True)
class OddScanResult:
    n: int
    start: int
    count: int
    ok: bool
    first_failure: int | None


def odd_membership_scan(table: PrimeTable, n: int, count: int) -> OddScanResult:
    """Check the first ``count`` odd integers >= 3*p_n + 2n for membership in
    the semigroup of primes >= p_{n+1}.  Failures are reported with the
    witness, not raised: the expectation is asymptotic.
    """
    if count < 1:
        raise DomainError(f"need count >= 1, got {count}")
    table = table_for_nth_prime(table, n + 1)
    p_n = table.nth_prime(n)
    tail = tail_frobenius(table, n + 1)
    start = 3 * p_n + 2 * n
    if start % 2 == 0:
        start += 1
    odds = start + 2 * np.arange(count, dtype=np.int64)
    member = tail.profile.contains_many(odds)
    if bool(member.all()):
        return OddScanResult(n=n, start=start, count=count, ok=True, first_failure=None)
    first = int(odds[np.argmin(member)])
    return OddScanResult(n=n, start=start, count=count, ok=False, first_failure=first)


def exceptional_evens(table: PrimeTable, p: int, profile: AperyProfile) -> np.ndarray:
    """Even numbers in [2p, 4p] missing from the semigroup of primes in [p, 2p]."""
    if 4 * p > table.limit:
        raise DomainError(f"4p={4 * p} exceeds the sieve limit {table.limit}")
    evens = np.arange(2 * p, 4 * p + 1, 2, dtype=np.int64)
    member = profile.contains_many(evens)
    return evens[~member]
