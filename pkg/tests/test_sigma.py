import pytest

from roughideals import harness as hz
from roughideals import sigma as sg
from roughideals.universe import BinaryRelation, Universe


@pytest.mark.parametrize("mode", sg.MODES)
@pytest.mark.parametrize("allow_empty", [True, False])
def test_enumeration_matches_oracle_on_all_relations_over_three_points(mode, allow_empty):
    for R in hz.all_relations(3):
        st = sg.SigmaStructure(R, mode, allow_empty)
        expected = [K for K in hz.oracle_enumerate_downclosed(st) if hz.oracle_is_ideal(st, K)]
        assert sorted(sg.enumerate_sigma_ideals(st)) == sorted(expected)


def test_six_point_example_modes():
    weak = sg.enumerate_sigma_ideals(hz.s6_structure(sg.WEAK))
    strict = sg.enumerate_sigma_ideals(hz.s6_structure(sg.STRICT))
    u = hz.s6_structure().carrier
    assert sorted(strict) == [0, u.mask("f")]
    for extra in ("g", "fg", "abceg", "f", "abce", "abcef"):
        assert u.mask(extra) in weak
    assert 0 not in sg.enumerate_sigma_ideals(hz.s6_structure(sg.WEAK, False))


def test_ideal_check_names_the_failing_clause():
    st = hz.s6_structure(sg.STRICT)
    u = st.carrier
    chk = sg.check_sigma_ideal(st, u.mask("abce"))
    assert not chk.ok
    assert sg.is_sigma_ideal(st, u.mask("f"))
    assert not sg.is_sigma_ideal(st, u.full)


def test_chain_gives_downsets_as_ideals():
    u = Universe(("a", "b", "c"))
    le = BinaryRelation.from_labels(u, [("a", "a"), ("b", "b"), ("c", "c"), ("a", "b"), ("b", "c"), ("a", "c")])
    st = sg.SigmaStructure(le)
    assert sorted(sg.enumerate_sigma_ideals(st)) == [0, u.mask("a"), u.mask("ab")]
    sup, witness = sg.is_supremal(st)
    assert sup is not None and witness is None
    assert sg.principal_ideal(st, "b") == u.mask("ab")


def test_bounds_on_the_six_point_example():
    st = hz.s6_structure()
    u = st.carrier
    assert sg.upper_bounds(st, "a", "b") == u.mask("ce")
    assert sg.lower_bounds(st, "c", "e") == u.mask("ab")
    assert sg.upper_bounds(st, "a", "e") == 0
