"""One check per acceptance criterion.

Each test records a PASS/FAIL line that is printed in the pytest terminal
summary (and on stdout when the module is run as a script).  Criteria that
the implementation cannot meet are asserted as stated and marked
``xfail(strict=True)``: they show up as FAIL lines, and the run turns red if
one of them ever starts passing without the marker being removed.
"""

import io
import os
import sys
import time

import pytest

from roughideals import approx as ap
from roughideals import cli
from roughideals import harness as hz
from roughideals import sigma as sg
from roughideals import worked_examples as wx
from roughideals.universe import min_neighborhood, predecessor_neighborhood, successor_neighborhood

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # run as a script
    ACCEPTANCE_LINES = []

S6 = wx.s6_universe()
CORE = ("a", "b", "c", "e")


def record(crit, passed, detail):
    ACCEPTANCE_LINES.append((crit, passed, detail))
    print(f"{'PASS' if passed else 'FAIL'}  criterion {crit}: {detail}")


def timed(fn):
    t = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t


def _published_pairs():
    for (x, z), (U, L) in wx.PUBLISHED_BOUNDS.items():
        xs = CORE if x == "*" else (x,)
        for x1 in xs:
            yield (x1, z), S6.labels(S6.mask(U)), S6.labels(S6.mask(L))


def test_criterion_1_bounds_table():
    st = hz.s6_structure()

    def run():
        bad = []
        for (x, z), U, L in _published_pairs():
            got = (S6.labels(sg.upper_bounds(st, x, z)), S6.labels(sg.lower_bounds(st, x, z)))
            if got != (U, L):
                bad.append(f"({x},{z}) computed {got}, published {(U, L)}")
        return bad

    bad, dt = timed(run)
    passed = not bad and dt < 1.0
    record(1, passed, f"{len(wx.PUBLISHED_BOUNDS)} listed pairs, {len(bad)} mismatches, {dt:.3f}s (< 1s)")
    assert not bad, bad
    assert dt < 1.0


@pytest.mark.xfail(strict=True, reason="published U(e,e)={c} contradicts the listed relation, which gives {a}")
def test_criterion_2_neighborhood_table():
    R = wx.s6_relation()

    def run():
        bad = []
        for x, published in wx.PUBLISHED_NEIGHBORHOODS.items():
            got = (predecessor_neighborhood(R, x), successor_neighborhood(R, x), min_neighborhood(R, x))
            for col, ref, m in zip(("U", "L", "<>"), published, got):
                if m != S6.mask(ref):
                    bad.append(f"{col}({x},{x}) computed {S6.format(m)}, published {S6.format(S6.mask(ref))}")
        return bad

    bad, dt = timed(run)
    passed = not bad and dt < 1.0
    record(2, passed, f"6 rows x 3 columns, {len(bad)} mismatches {bad}, {dt:.3f}s (< 1s)")
    assert not bad, bad
    assert dt < 1.0


def test_criterion_3_sigma_ideals():
    weak = hz.s6_structure(sg.WEAK)
    strict = hz.s6_structure(sg.STRICT)
    wfam = sg.enumerate_sigma_ideals(weak)
    sfam = sg.enumerate_sigma_ideals(strict)
    I1, I2 = S6.mask("abce"), S6.mask("abcef")
    devs = wx.ideal_deviations(weak, wfam)
    text = devs[0]["explanation"] if devs else ""
    oracle_ok = all(
        sorted(K for K in hz.oracle_enumerate_downclosed(st) if hz.oracle_is_ideal(st, K)) == sorted(fam)
        for st, fam in ((weak, wfam), (strict, sfam))
    )
    checks = {
        "weak has I1": I1 in wfam,
        "weak has I2": I2 in wfam,
        "strict is {∅,{f}}": sorted(sfam) == [0, S6.mask("f")],
        "deviation names {g},{f,g},{a,b,c,e,g}": all(s in text for s in ("{g}", "{f,g}", "{a,b,c,e,g}")),
        "blind 2^6 oracle agrees": oracle_ok,
    }
    failed = [k for k, v in checks.items() if not v]
    record(3, not failed, f"{len(wfam)} weak ideals, strict {[S6.labels(K) for K in sfam]}; failed checks {failed}")
    assert not failed


def test_criterion_4_gosi_example():
    A = S6.mask("ab")
    r, dt = timed(lambda: ap.approx_gosi(hz.s6_structure(), hz.s6_granulation(), A))
    dev = [d for d in r.deviations if d["quantity"] == "lower"]
    checks = {
        "upper = {a,b,c,g}": r.upper == S6.mask("abcg"),
        "lower = {a,b}": r.lower == A,
        "deviation cites {b}": bool(dev) and dev[0]["reference"] == ["b"] and dev[0]["computed"] == ["a", "b"],
        "runtime < 1s": dt < 1.0,
    }
    failed = [k for k, v in checks.items() if not v]
    record(4, not failed, f"upper {S6.format(r.upper)}, lower {S6.format(r.lower)}, {dt:.3f}s; failed {failed}")
    assert not failed


CRIT5 = {
    "a": ("kappa",),
    "b": ("iad", "iasd"),
    "c": ("gosi",),
    "d": ("gosih",),
    "e": ("strong", "antichain"),
}
_crit5_time = []


def _law_suites(part):
    reports = []
    for sid in CRIT5[part]:
        rep, dt = timed(lambda: hz.run_suite(hz.get_suite(sid)))
        _crit5_time.append(dt)
        reports.append((sid, rep, dt))
    return reports


def _crit5(part):
    reports = _law_suites(part)
    failed = [law for _, rep, _ in reports for law in rep.failed_laws()]
    viol = sum(rep.laws[law][1].violations for _, rep, _ in reports for law in rep.failed_laws())
    desc = ", ".join(f"{sid} {rep.instances} instances {dt:.2f}s" for sid, rep, dt in reports)
    record(f"5({part})", not failed, f"{desc}; {viol} violations {failed}")
    assert not failed, failed


def test_criterion_5a_kappa():
    _crit5("a")


def test_criterion_5b_iad_iasd():
    _crit5("b")


def test_criterion_5c_gosi():
    _crit5("c")


@pytest.mark.xfail(strict=True, reason="the lower GOSIH map is not idempotent; see the archived counterexamples")
def test_criterion_5d_gosih():
    _crit5("d")


def test_criterion_5e_strong_antichain():
    _crit5("e")


def test_criterion_5_total_runtime():
    # runs after the five parts in file order; reruns any that were deselected
    if len(_crit5_time) < sum(len(v) for v in CRIT5.values()):
        _crit5_time.clear()
        for part in CRIT5:
            _law_suites(part)
    total = sum(_crit5_time)
    record("5(runtime)", total < 300, f"law suites took {total:.2f}s (< 300s)")
    assert total < 300


def test_criterion_6_mereotopology():
    rep, dt = timed(lambda: hz.run_suite(hz.get_suite("mereo")))
    failed = rep.failed_laws()
    record(6, not failed and dt < 120, f"{rep.instances} discrete models, failed {failed}, {dt:.2f}s (< 120s)")
    assert not failed
    assert dt < 120


def test_criterion_7_iasd_iad_agreement():
    rep = hz.run_suite(hz.get_suite("agreement"))
    mismatches = sum(t.violations for _, t in rep.laws.values())
    checked = sum(t.checked for _, t in rep.laws.values())
    record(7, mismatches == 0, f"{rep.instances} instances, {checked} comparisons, {mismatches} mismatches")
    assert mismatches == 0


def test_criterion_8_determinism(tmp_path):
    differing = []
    for sid in sorted(hz.SUITES):
        blobs = []
        for k in range(2):
            path = tmp_path / f"{sid}-{k}.json"
            argv = ["verify", "--suite", sid, "--seed", "11", "--report", str(path)]
            if not hz.SUITES[sid].bounds.exhaustive:
                argv += ["--count", "50"]
            cli.main(argv, out=io.StringIO(), err=io.StringIO())
            blobs.append(path.read_bytes())
        if blobs[0] != blobs[1]:
            differing.append(sid)
    record(8, not differing, f"{len(hz.SUITES)} suites run twice with seed 11; differing reports {differing}")
    assert not differing


if __name__ == "__main__":
    sys.exit(pytest.main([os.path.abspath(__file__), "-q", "-p", "no:cacheprovider"]))
