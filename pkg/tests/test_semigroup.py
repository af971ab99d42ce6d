import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from primefrob.errors import DomainError, NotNumericalSemigroupError
from primefrob.semigroup import (
    AperyProfile,
    GeneratorSet,
    IncrementalApery,
    apery_set,
    atoms,
    brute_force_membership,
    normalize_generators,
    sylvester_frobenius,
    sylvester_genus,
)


def build(gens):
    g = normalize_generators(gens)
    return g, apery_set(g)


# --- validation ---------------------------------------------------------

def test_normalize_sorts_dedups():
    g = normalize_generators([7, 3, 5, 3])
    assert g.generators == (3, 5, 7)
    assert g.multiplicity == 3


def test_normalize_rejects_bad_input():
    with pytest.raises(NotNumericalSemigroupError):
        normalize_generators([4, 6])
    with pytest.raises(DomainError):
        normalize_generators([])
    with pytest.raises(DomainError):
        normalize_generators([1, 3])
    with pytest.raises(DomainError):
        normalize_generators([0, 5])


# --- closed-form oracle -------------------------------------------------

def test_sylvester_small():
    assert sylvester_frobenius(3, 5) == 7
    assert sylvester_genus(3, 5) == 4
    assert sylvester_frobenius(2, 3) == 1
    with pytest.raises(NotNumericalSemigroupError):
        sylvester_frobenius(4, 6)


def test_apery_of_3_5_by_hand():
    _, p = build([3, 5])
    assert p.apery.tolist() == [0, 10, 5]
    assert p.frobenius == 7
    assert p.genus == 4
    assert p.gaps().tolist() == [1, 2, 4, 7]


def test_sylvester_random_pairs_match_apery():
    rng = random.Random(1093)
    done = 0
    while done < 100:
        a = rng.randint(2, 500)
        b = rng.randint(2, 500)
        if a == b or math.gcd(a, b) != 1:
            continue
        _, p = build([a, b])
        assert p.frobenius == sylvester_frobenius(a, b)
        assert p.genus == sylvester_genus(a, b)
        done += 1


# --- brute-force oracle -------------------------------------------------

def test_membership_agrees_with_reachability_oracle():
    rng = random.Random(28657)
    done = 0
    while done < 200:
        m = rng.randint(2, 50)
        extra = [rng.randint(m, 500) for _ in range(rng.randint(1, 7))]
        gens = [m] + extra
        g = 0
        for x in gens:
            g = math.gcd(g, x)
        if g != 1:
            continue
        gen_set = normalize_generators(gens)
        profile = apery_set(gen_set)
        n_max = 2 * gen_set.multiplicity * gen_set.generators[-1]
        oracle = brute_force_membership(gen_set, n_max)
        mine = profile.contains_many(np.arange(n_max + 1))
        assert (oracle == mine).all()
        done += 1


def test_oracle_rejects_huge_budget():
    g = normalize_generators([3, 5])
    with pytest.raises(DomainError):
        brute_force_membership(g, 10**9)


# --- profile invariants -------------------------------------------------

@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(min_value=2, max_value=400), min_size=2, max_size=6))
def test_apery_table_is_minimal_member_per_class(gens):
    g = 0
    for x in gens:
        g = math.gcd(g, x)
    if g != 1:
        return
    gen_set = normalize_generators(gens)
    profile = apery_set(gen_set)
    m = profile.multiplicity
    ap = profile.apery
    assert ap[0] == 0
    for r in range(m):
        v = int(ap[r])
        assert v % m == r
        assert profile.contains(v)
        if v >= m:
            assert not profile.contains(v - m)


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=2, max_value=300), st.integers(min_value=2, max_value=300))
def test_counting_identities(a, b):
    if math.gcd(a, b) != 1 or a == b:
        return
    _, p = build([a, b])
    gaps = p.gaps()
    assert len(gaps) == p.genus
    assert int(gaps[-1]) == p.frobenius
    count, elems = p.sporadic_elements()
    assert count == 1 + p.frobenius - p.genus
    assert count == len(elems)
    assert not p.contains(p.frobenius)
    assert all(p.contains(p.frobenius + k) for k in range(1, 2 * a + 1))


def test_members_below_lists_ascending():
    _, p = build([19, 23, 29, 31, 37])
    xs = p.members_below(63)
    assert len(xs) == 19
    assert (np.diff(xs) > 0).all()
    assert xs[0] == 0 and xs[-1] == 62


# --- atoms ---------------------------------------------------------------

def test_atoms_drop_redundant_generators():
    g, p = build([4, 6, 9, 13])
    at = atoms(p, g)
    assert at.atoms == (4, 6, 9)  # 13 = 4 + 9
    assert at.embedding_dimension == 3


def test_atoms_of_prime_interval_set():
    g, p = build([23, 29, 31, 37, 41, 43])
    assert atoms(p, g).embedding_dimension == 6


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(min_value=2, max_value=200), min_size=2, max_size=5))
def test_atoms_regenerate_the_semigroup(gens):
    g = 0
    for x in gens:
        g = math.gcd(g, x)
    if g != 1:
        return
    gen_set = normalize_generators(gens)
    profile = apery_set(gen_set)
    at = atoms(profile, gen_set)
    assert set(at.atoms) <= set(gen_set.generators)
    again = apery_set(normalize_generators(at.atoms))
    assert again.frobenius == profile.frobenius
    assert again.genus == profile.genus


# --- incremental ---------------------------------------------------------

def test_incremental_matches_batch():
    inc = IncrementalApery(19)
    for q in (23, 29, 31, 37):
        inc.add(q)
    assert inc.complete
    assert inc.frobenius() == 101
    prof = inc.profile(verify=True)
    _, batch = build([19, 23, 29, 31, 37])
    assert (prof.apery == batch.apery).all()


def test_incremental_incomplete_guard():
    inc = IncrementalApery(4)
    inc.add(6)  # gcd 2: residues 1, 3 unreachable
    assert not inc.complete
    with pytest.raises(Exception):
        inc.frobenius()


def test_overflow_budget_guard():
    with pytest.raises(ArithmeticError):
        apery_set(GeneratorSet((2**30 + 1, 2**30 + 3)))
