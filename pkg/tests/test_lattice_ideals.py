import random

import pytest

from roughideals.harness import oracle_lattice_ideals, random_subset, universe_of
from roughideals.lattice_ideals import (
    SubsetFamily,
    enumerate_lattice_ideals,
    generated_lattice_ideal,
    is_lattice_ideal,
    is_prime_lattice_ideal,
    principal_ideal,
)
from roughideals.universe import Universe


def test_powerset_of_two_points_has_four_nonempty_ideals():
    ps = SubsetFamily.powerset(Universe(("a", "b")))
    ideals = enumerate_lattice_ideals(ps)
    assert len(ideals) == 4
    # all principal in a finite power set
    assert {max(I.members) for I in ideals} == {0, 1, 2, 3}


@pytest.mark.parametrize("seed", range(25))
def test_enumeration_matches_blind_scan(seed):
    rng = random.Random(seed)
    u = universe_of(3)
    members = {random_subset(rng, u.full) for _ in range(rng.randint(1, 8))}
    fam = SubsetFamily(u, tuple(sorted(members)))
    got = {I.members for I in enumerate_lattice_ideals(fam)}
    assert got == set(oracle_lattice_ideals(fam))


def test_ideal_check_reports_a_witness():
    u = Universe(("a", "b"))
    ps = SubsetFamily.powerset(u)
    ok, why = is_lattice_ideal(ps, [0, 1, 2])
    assert not ok and why is not None
    ok, why = is_lattice_ideal(ps, [0, 1])
    assert ok and why is None


def test_generated_and_principal_ideals_agree_on_power_sets():
    u = universe_of(3)
    ps = SubsetFamily.powerset(u)
    assert generated_lattice_ideal(ps, [0b001, 0b010]) == principal_ideal(ps, 0b011)


def test_prime_ideals_of_a_power_set():
    u = universe_of(3)
    ps = SubsetFamily.powerset(u)
    primes = [I for I in enumerate_lattice_ideals(ps) if is_prime_lattice_ideal(ps, I)[0]]
    # the coatom downsets, plus the whole power set, which no pair can refute
    assert sorted(max(I.members) for I in primes) == [0b011, 0b101, 0b110, 0b111]


def test_prime_check_witness_on_two_points():
    ps = SubsetFamily.powerset(Universe(("a", "b")))
    ok, why = is_prime_lattice_ideal(ps, [0])
    assert not ok and why["pair"] == [["a"], ["b"]]
    assert is_prime_lattice_ideal(ps, [0, 1])[0]


def test_chain_ideals():
    u = Universe(("a", "b"))
    chain = SubsetFamily(u, (0, 0b01, 0b11))
    ideals = enumerate_lattice_ideals(chain)
    assert len(ideals) == 3
    assert is_prime_lattice_ideal(chain, [0, 0b01])[0]


def test_join_and_meet_inside_a_family():
    u = universe_of(3)
    fam = SubsetFamily(u, (0, 0b001, 0b010, 0b111))
    assert fam.join(0b001, 0b010) == 0b111
    assert fam.meet(0b001, 0b010) == 0
    assert not fam.closed_under_union()
    assert SubsetFamily.powerset(u).is_algebra()
