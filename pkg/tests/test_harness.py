import json

import pytest

from roughideals import harness as hz
from roughideals.errors import InvalidStructureError


def test_oracle_scan_on_the_six_point_example():
    st = hz.s6_structure()
    down = hz.oracle_enumerate_downclosed(st)
    # {a,b,c,e} is one sigma-cycle block; f and g are free
    assert len(down) == 8
    assert all(hz.oracle_is_ideal(st, K) == (K in {0, 16, 32, 48, 15, 31, 47}) for K in down)


def test_every_suite_declares_unique_laws():
    for suite in hz.SUITES.values():
        ids = [law.id for law in suite.laws]
        assert len(ids) == len(set(ids))


@pytest.mark.parametrize("sid", sorted(set(hz.SUITES) - {"gosih"}))
def test_suites_pass_at_small_bounds(sid):
    suite = hz.SUITES[sid]
    bounds = suite.bounds if suite.bounds.exhaustive else hz.Bounds(False, 5, 25)
    rep = hz.run_suite(suite.with_bounds(bounds))
    assert rep.ok, rep.failed_laws()
    assert rep.instances > 0


def test_gosih_reports_idempotence_counterexamples():
    rep = hz.run_suite(hz.get_suite("gosih"))
    assert rep.failed_laws() == ["gosih.idempotent_lower"]
    arch = [c for c in rep.counterexamples if c["law"] == "gosih.idempotent_lower"]
    assert 0 < len(arch) <= hz.ARCHIVE_CAP
    assert "families" in arch[0]["instance"]


def test_searched_laws_do_not_fail_a_suite():
    rep = hz.run_suite(hz.get_suite("iad"))
    searched = [law for law, t in rep.laws.values() if law.status == hz.SEARCHED and t.violations]
    assert searched and rep.ok


def test_report_json_shape_and_determinism():
    a = hz.run_suite(hz.get_suite("gosi", hz.Bounds(False, 3, 40))).dumps()
    b = hz.run_suite(hz.get_suite("gosi", hz.Bounds(False, 3, 40))).dumps()
    assert a == b
    d = json.loads(a)
    assert d["bounds"] == {"count": 40, "exhaustive": False, "seed": 3}
    assert {"suite", "instances", "ok", "laws", "counterexamples", "deviations"} <= set(d)


def test_empty_suite_and_unknown_names():
    rep = hz.run_suite(hz.empty_suite())
    assert rep.ok and rep.instances == 0 and rep.laws == {}
    with pytest.raises(InvalidStructureError):
        hz.get_suite("nope")


def test_undeclared_law_is_an_error():
    def ev(case, probe):
        probe.check("ghost", None)

    suite = hz.LawSuite("x", (hz.Law("x.real", "anchor"),), hz.Bounds(True),
                        lambda b: iter([hz.Case({}, None)]), ev)
    with pytest.raises(InvalidStructureError):
        hz.run_suite(suite)


def test_generators_are_seeded():
    import random
    a = [hz.random_relation(random.Random(9), hz.universe_of(4)).pairs for _ in range(3)]
    assert a[0] == a[1] == a[2]
    assert sum(1 for _ in hz.all_relations(2)) == 16
    assert sum(1 for _ in hz.all_relations(3, reflexive=True)) == 64
