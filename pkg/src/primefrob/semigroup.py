"""Exact numerical-semigroup invariants from a finite generator set.

The work horse is the Apery set with respect to the multiplicity m: for each
residue class r mod m the least semigroup element congruent to r.  Frobenius
number, genus, membership, gaps and sporadic counts all read off it in O(1)
or one linear pass.

The Apery table is computed by round-robin relaxation over the residue
classes: each generator g is folded in by relaxing

    apery[(r + g) mod m] <= apery[r] + g

to a fixed point before the next generator is taken up.  Relaxation steps are
composed by binary doubling (fold t copies of g at once, t = 1, 2, 4, ...),
which reaches the same fixed point in O(m log m) worst case per generator.
A final full pass re-relaxes every generator once and must change nothing.

``brute_force_membership`` is the independent oracle: plain coin-problem
reachability with no modular arithmetic, for tests to diff against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import DomainError, InvariantViolationError, NotNumericalSemigroupError

# Apery values are bounded by m * max(gens); keep far below the int64 ceiling
# so the sentinel plus a doubled relaxation cost can never wrap.
_INF = np.int64(1) << np.int64(62)
_VALUE_BUDGET = 1 << 58

ORACLE_BUDGET = 10_000_000


@dataclass(frozen=True)
class GeneratorSet:
    """Sorted, deduplicated generators of a numerical semigroup (gcd 1)."""

    generators: tuple[int, ...]

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


def normalize_generators(raw: Iterable[int]) -> GeneratorSet:
    """Sort, deduplicate and validate a raw generator list.

    Raises NotNumericalSemigroupError when the gcd exceeds 1 (the complement
    would be infinite) and DomainError on empty input or entries < 2.
    """
    gens = sorted(set(int(g) for g in raw))
    if not gens:
        raise DomainError("generator list is empty")
    if gens[0] < 2:
        raise DomainError(f"generators must be >= 2, got {gens[0]}")
    g = 0
    for x in gens:
        g = math.gcd(g, x)
    if g != 1:
        raise NotNumericalSemigroupError(f"gcd of generators is {g}, not 1")
    return GeneratorSet(tuple(gens))


class AperyError(InvariantViolationError):
    pass


def _fold_generator(ap: np.ndarray, g: int, m: int) -> bool:
    """Close ``ap`` under adding any number of copies of g; True if it changed.

    After the call ap[r] = min over t >= 0 of old_ap[(r - t*g) mod m] + t*g.
    """
    shift = g % m
    if shift == 0:
        return False  # adding multiples of m never lowers a class minimum
    cand = np.roll(ap, shift)
    cand += g
    if not (cand < ap).any():
        return False
    np.minimum(ap, cand, out=ap)
    if bool((ap >= _INF).any()):
        t_bound = m - 1
    else:
        # t copies of g only help while t*g stays below the current maximum
        t_bound = min(m - 1, int(ap.max()) // g)
    covered, step_shift, step_cost = 1, shift, g
    while covered < t_bound:
        step_shift = (2 * step_shift) % m
        step_cost *= 2
        cand = np.roll(ap, step_shift)
        cand += step_cost
        np.minimum(ap, cand, out=ap)
        covered = 2 * covered + 1
    return True


def _verify_fixed_point(ap: np.ndarray, gens: Sequence[int], m: int) -> None:
    for g in gens:
        shift = g % m
        if shift == 0:
            continue
        cand = np.roll(ap, shift)
        cand += g
        if bool((cand < ap).any()):
            raise AperyError(f"relaxation not at fixed point for generator {g}")


@dataclass(frozen=True)
class AperyProfile:
    """Apery set of a numerical semigroup w.r.t. its multiplicity m.

    apery[r] is the least semigroup element congruent to r mod m; apery[0] = 0.
    frobenius = max(apery) - m and genus = sum over r of floor(apery[r] / m).
    """

    multiplicity: int
    apery: np.ndarray
    frobenius: int
    genus: int

    def contains(self, n: int) -> bool:
        """Membership in O(1): n >= 0 and n >= apery[n mod m]."""
        if n < 0:
            return False
        return n >= int(self.apery[n % self.multiplicity])

    def contains_many(self, ns: np.ndarray) -> np.ndarray:
        ns = np.asarray(ns, dtype=np.int64)
        return (ns >= 0) & (ns >= self.apery[ns % self.multiplicity])

    def members_below(self, limit: int) -> np.ndarray:
        """Ascending semigroup elements strictly less than ``limit``."""
        out = [np.arange(start, limit, self.multiplicity, dtype=np.int64)
               for start in self.apery.tolist() if start < limit]
        if not out:
            return np.empty(0, dtype=np.int64)
        return np.sort(np.concatenate(out))

    def gaps(self) -> np.ndarray:
        """All positive integers outside the semigroup, ascending."""
        m = self.multiplicity
        out = []
        for r in range(1, m):
            top = int(self.apery[r])
            if top >= m:
                out.append(np.arange(top - m, 0, -m, dtype=np.int64))
        if not out:
            return np.empty(0, dtype=np.int64)
        return np.sort(np.concatenate(out))

    def sporadic_elements(self, below: int | None = None) -> tuple[int, np.ndarray]:
        """(sporadic count, elements).

        The count is always 1 + frobenius - genus, the number of semigroup
        elements below the Frobenius number.  ``elements`` lists members
        strictly below ``below`` (default: below the Frobenius number).
        """
        count = 1 + self.frobenius - self.genus
        cutoff = self.frobenius if below is None else below
        return count, self.members_below(cutoff)


def apery_set(gens: GeneratorSet, verify: bool = True) -> AperyProfile:
    """Compute the AperyProfile of the semigroup generated by ``gens``."""
    m = gens.multiplicity
    if m * gens.generators[-1] > _VALUE_BUDGET:
        raise ArithmeticError(
            f"apery values may exceed the 64-bit budget for m={m}, "
            f"max generator {gens.generators[-1]}"
        )
    ap = np.full(m, _INF, dtype=np.int64)
    ap[0] = 0
    for g in gens:
        _fold_generator(ap, g, m)
    if bool((ap >= _INF).any()):
        raise AperyError("unreachable residue class despite gcd 1")
    if verify:
        _verify_fixed_point(ap, gens.generators, m)
    return _profile_from_table(m, ap)


def _profile_from_table(m: int, ap: np.ndarray) -> AperyProfile:
    frobenius = int(ap.max()) - m
    genus = int((ap[1:] // m).sum())
    profile = AperyProfile(multiplicity=m, apery=ap, frobenius=frobenius, genus=genus)
    profile.apery.setflags(write=False)
    return profile


class IncrementalApery:
    """Apery table that accepts generators one at a time.

    Adding a generator to an exact table and relaxing to a fixed point keeps
    it exact, so a growing family of semigroups (nested generator sets) costs
    one fold per new generator instead of one full build per member.
    """

    def __init__(self, multiplicity: int):
        if multiplicity < 2:
            raise DomainError(f"multiplicity must be >= 2, got {multiplicity}")
        self.multiplicity = multiplicity
        self.ap = np.full(multiplicity, _INF, dtype=np.int64)
        self.ap[0] = 0
        self.generators: list[int] = [multiplicity]

    def add(self, g: int) -> None:
        if g < self.multiplicity:
            raise DomainError("generators must be added in ascending order from m")
        if self.multiplicity * g > _VALUE_BUDGET:
            raise ArithmeticError(f"generator {g} exceeds the 64-bit value budget")
        self.generators.append(int(g))
        _fold_generator(self.ap, int(g), self.multiplicity)

    @property
    def complete(self) -> bool:
        return not bool((self.ap >= _INF).any())

    def profile(self, verify: bool = False) -> AperyProfile:
        if not self.complete:
            raise AperyError("some residue class is still unreachable")
        if verify:
            _verify_fixed_point(self.ap, self.generators, self.multiplicity)
        return _profile_from_table(self.multiplicity, self.ap.copy())

    def frobenius(self) -> int:
        if not self.complete:
            raise AperyError("some residue class is still unreachable")
        return int(self.ap.max()) - self.multiplicity


@dataclass(frozen=True)
class AtomSet:
    atoms: tuple[int, ...]

    @property
    def embedding_dimension(self) -> int:
        return len(self.atoms)


def atoms(profile: AperyProfile, gens: GeneratorSet) -> AtomSet:
    """Minimal generators among ``gens``: g is an atom iff no semigroup
    element s with 0 < s <= g/2 has g - s in the semigroup.

    Works off membership queries only, so a non-minimal input list is fine.
    """
    top = gens.generators[-1]
    n = np.arange(top + 1, dtype=np.int64)
    member = n >= profile.apery[n % profile.multiplicity]
    out = []
    for g in gens:
        half = g // 2
        lo = member[1 : half + 1]
        hi = member[g - 1 : g - half - 1 : -1]
        if not bool((lo & hi).any()):
            out.append(g)
    return AtomSet(tuple(out))


def brute_force_membership(gens: GeneratorSet, n_max: int) -> np.ndarray:
    """Reachability table over [0, n_max] by direct coin-problem closure.

    Test oracle only: a Python-int bitmask is grown to a fixed point under
    shifting by each generator, with no residue-class reasoning shared with
    the Apery path.
    """
    if n_max > ORACLE_BUDGET:
        raise DomainError(f"oracle bound {n_max} exceeds budget {ORACLE_BUDGET}")
    mask = (1 << (n_max + 1)) - 1
    reach = 1  # bit k set <=> k is a sum of generators
    for g in gens:
        while True:
            grown = (reach | (reach << g)) & mask
            if grown == reach:
                break
            reach = grown
    bits = np.frombuffer(
        reach.to_bytes((n_max // 8) + 1, "little"), dtype=np.uint8
    )
    return np.unpackbits(bits, bitorder="little")[: n_max + 1].astype(bool)


def sylvester_frobenius(a: int, b: int) -> int:
    """Closed form for two coprime generators: ab - a - b."""
    if math.gcd(a, b) != 1:
        raise NotNumericalSemigroupError(f"gcd({a}, {b}) != 1")
    return a * b - a - b


def sylvester_genus(a: int, b: int) -> int:
    """Closed form for two coprime generators: (a-1)(b-1)/2."""
    if math.gcd(a, b) != 1:
        raise NotNumericalSemigroupError(f"gcd({a}, {b}) != 1")
    return (a - 1) * (b - 1) // 2
