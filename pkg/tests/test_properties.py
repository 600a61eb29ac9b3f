from hypothesis import given, settings
from hypothesis import strategies as st

from roughideals import approx as ap
from roughideals import laws as lw
from roughideals import sigma as sg
from roughideals.lattice_ideals import SubsetFamily, principal_ideal
from roughideals.universe import BinaryRelation, Universe, min_neighborhood

N = 4
U = Universe(tuple("abcd"))
FULL = (1 << N) - 1

masks = st.integers(0, FULL)
pairs = st.frozensets(st.tuples(st.integers(0, N - 1), st.integers(0, N - 1)), max_size=16)


def reflexive(ps):
    return BinaryRelation(U, frozenset(ps) | {(i, i) for i in range(N)})


@given(pairs, masks, masks)
@settings(max_examples=150, deadline=None)
def test_kappa_duality_and_inclusion(ps, D, A):
    R = reflexive(ps)
    I = principal_ideal(SubsetFamily.powerset(U), D & ~(1 << 0) if D == FULL else D)
    r = ap.approx_kappa(R, I, A)
    c = ap.approx_kappa(R, I, FULL & ~A)
    assert r.lower & ~A == 0 and A & ~r.upper == 0
    assert r.upper == FULL & ~c.lower
    assert r.lower == FULL & ~c.upper


@given(pairs, masks, masks)
@settings(max_examples=150, deadline=None)
def test_kappa_is_monotone(ps, A, B):
    R = reflexive(ps)
    I = principal_ideal(SubsetFamily.powerset(U), 0)
    small, big = ap.approx_kappa(R, I, A & B), ap.approx_kappa(R, I, A | B)
    assert small.lower & ~big.lower == 0
    assert small.upper & ~big.upper == 0


@given(pairs)
@settings(max_examples=150, deadline=None)
def test_points_lie_in_their_minimal_neighborhood_when_reflexive(ps):
    R = reflexive(ps)
    for x in range(N):
        assert min_neighborhood(R, x) >> x & 1


@given(pairs, st.sampled_from(sg.MODES), st.booleans())
@settings(max_examples=100, deadline=None)
def test_enumerated_ideals_pass_the_predicate(ps, mode, empty):
    s = sg.SigmaStructure(BinaryRelation(U, ps), mode, empty)
    fam = sg.enumerate_sigma_ideals(s)
    assert all(sg.is_sigma_ideal(s, K) for K in fam)
    assert FULL not in fam
    assert (0 in fam) == empty
    if mode == sg.STRICT:
        weak = set(sg.enumerate_sigma_ideals(s.with_options(mode=sg.WEAK)))
        assert set(fam) <= weak


@given(st.lists(masks, min_size=1 << N, max_size=1 << N))
@settings(max_examples=100, deadline=None)
def test_identity_maps_satisfy_every_kappa_law_and_arbitrary_maps_are_checked(lower):
    ident = tuple(range(1 << N))
    pair = lw.MapPair(U, ident, ident, ident)
    assert lw.check(pair, lw.IAD) == {lw.law_name(f): None for f in lw.IAD}
    shrunk = tuple(m & A for m, A in zip(lower, ident))
    assert lw.inclusion(lw.MapPair(U, shrunk, ident, ident)) is None
