import pytest

from roughideals import mereo as mo
from roughideals.errors import InvalidStructureError
from roughideals.harness import universe_of
from roughideals.universe import Universe


def _space(n, actual):
    return mo.build_discrete_contact(mo.DiscreteSpace(universe_of(n), actual))


def _brute_clans(n, related):
    """Grills whose members are pairwise related, by scanning every region family."""
    full = (1 << n) - 1
    rs = range(1 << n)
    out = []
    for sel in range(1, 1 << (1 << n)):
        fam = {h for h in rs if sel >> h & 1}
        if full not in fam or 0 in fam:
            continue
        if any(f not in fam for h in fam for f in rs if h & f == h):
            continue
        if any((h | f) in fam and h not in fam and f not in fam for h in rs for f in rs):
            continue
        if all(related(h, f) for h in fam for f in fam):
            out.append(sel)
    return sorted(out)


@pytest.mark.parametrize("n", [2, 3])
def test_clans_match_blind_scan(n):
    for actual in range(1, (1 << n) - 1):
        s = _space(n, actual)
        got = sorted(c.members for c in mo.clans(s, mo.CLAN))
        assert got == _brute_clans(n, lambda h, f: bool(h & f))
        got = sorted(c.members for c in mo.clans(s, mo.ACTUAL))
        assert got == _brute_clans(n, lambda h, f, a=actual: bool(h & f & a))


def test_axioms_hold_on_discrete_models():
    for n in (2, 3):
        for actual in range(1, (1 << n) - 1):
            s = _space(n, actual)
            for block in ("C", "Ca", "AE"):
                assert all(v is None for v in mo.check_axioms(s, block).values()), (n, actual, block)


def test_actual_points_must_be_proper():
    u = universe_of(2)
    with pytest.raises(InvalidStructureError):
        mo.DiscreteSpace(u, 0)
    with pytest.raises(InvalidStructureError):
        mo.DiscreteSpace(u, u.full)


def test_reflexive_ultrafilters_are_the_actual_points():
    s = _space(3, 0b101)
    canon = mo.canonical_relations(s)
    assert len(canon.ultrafilters) == 3
    refl = [i for i in range(3) if canon.Ra.holds(i, i)]
    assert refl == [0, 2]


def test_grill_and_filter_checks():
    n = 2
    top = 1 << 3
    assert mo.is_filter(n, top) and mo.is_ultrafilter(n, mo.family_of([1, 3]))
    assert not mo.is_grill(n, mo.family_of([0, 3]))


@pytest.mark.parametrize("scheme", mo.SCHEMES)
def test_approximations_sit_around_the_target(scheme):
    s = _space(3, 0b011)
    for K in mo.clans(s, mo.ACTUAL):
        for A in range(8):
            r = mo.mereo_approx(s, K, A, scheme)
            assert r.lower & ~A == 0
            assert A & ~r.upper == 0


def test_non_actual_clan_is_rejected():
    s = _space(2, 0b01)
    actual = {c.members for c in mo.clans(s, mo.ACTUAL)}
    other = [c for c in mo.clans(s, mo.CLAN) if c.members not in actual]
    assert other
    with pytest.raises(InvalidStructureError):
        mo.mereo_approx(s, other[0], 1)


def test_inverse_problem_report():
    u = Universe(("a", "b"))
    ident = list(range(4))
    rep = mo.inverse_problem_laws(u, ident, ident)
    assert all(v["ok"] for v in rep.values())
    bad = mo.inverse_problem_laws(u, [0, 1, 2, 0], ident)
    assert not bad["monotone"]["ok"]
    with pytest.raises(InvalidStructureError):
        mo.inverse_problem_laws(u, [0], ident)
