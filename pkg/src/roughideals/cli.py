"""Command-line front end: ``roughideals {inspect,ideals,approx,mereo,verify}``.

Exit status: 0 on success, 1 on input errors (the message carries an error
code), 2 when an asserted law fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import approx as ap
from . import harness as hz
from . import mereo as mo
from . import sigma as sg
from . import worked_examples as wx
from .errors import MissingFamilyError, RoughIdealsError, SchemaError, UsageError
from .instance import InstanceDocument, load_instance
from .lattice_ideals import LatticeIdeal, SubsetFamily
from .universe import (
    EMPTY_MEET_EMPTY,
    EMPTY_MEET_UNIVERSE,
    min_neighborhood,
    predecessor_neighborhood,
    relation_properties,
    successor_neighborhood,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_LAW = 2

GLOBAL_DEFAULTS = {
    "mode": sg.WEAK,
    "no_empty": False,
    "empty_meet": EMPTY_MEET_EMPTY,
    "seed": 0,
    "report": None,
}


class LawFailure(Exception):
    """Raised by a command whose output shows a failed asserted law."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _add_globals(p: argparse.ArgumentParser):
    # SUPPRESS lets the flags appear before or after the subcommand
    g = p.add_argument_group("global options")
    g.add_argument("--mode", choices=sg.MODES, default=argparse.SUPPRESS,
                   help="directedness clause for sigma-ideals (default: weak)")
    g.add_argument("--no-empty", action="store_true", default=argparse.SUPPRESS,
                   help="do not admit the empty set as a sigma-ideal")
    g.add_argument("--empty-meet", choices=(EMPTY_MEET_EMPTY, EMPTY_MEET_UNIVERSE), default=argparse.SUPPRESS,
                   help="value of a minimal neighborhood with no covering neighborhood (default: empty)")
    g.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="random seed (default: 0)")
    g.add_argument("--report", default=argparse.SUPPRESS, help="also write the JSON output to this path")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="roughideals", description="Ideal-based rough approximations on finite relational structures.")
    _add_globals(parser)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("inspect", help="bound and neighborhood tables plus relation properties")
    p.add_argument("document")
    p.add_argument("--json", action="store_true", help="emit JSON instead of text tables")
    _add_globals(p)

    p = sub.add_parser("ideals", help="enumerate sigma-ideals with a clause audit")
    p.add_argument("document")
    _add_globals(p)

    p = sub.add_parser("approx", help="lower and upper approximations of a named set")
    p.add_argument("document")
    p.add_argument("--op", required=True, help=f"operator tag, one of {', '.join(ap.TAGS)}")
    p.add_argument("--set", dest="set_name", required=True, help="name of a set in the document")
    p.add_argument("--ideal", help="named family used as the ideal (kappa, iad, iasd, gosih)")
    p.add_argument("--ring", help="named family used as the ring or algebra (iad, iasd); default: power set")
    p.add_argument("--antichain", help="named family of sigma-ideals (antichain)")
    p.add_argument("--clan", type=int, help="index of the actual clan (mereo tags)")
    _add_globals(p)

    p = sub.add_parser("mereo", help="contact structure, clans and CG/G/Clan approximations")
    p.add_argument("document")
    p.add_argument("--actual-points", help="comma-separated labels; overrides the document")
    p.add_argument("--scheme", choices=mo.SCHEMES, default="CG")
    p.add_argument("--gamma", default=mo.MIN, help="min, ca, or a JSON file mapping points to granules")
    p.add_argument("--set", dest="set_name", help="name of a set to approximate")
    p.add_argument("--clan", type=int, help="index of the actual clan; default: every actual clan")
    p.add_argument("--ca1-literal", action="store_true", help="read the first actual-contact axiom literally")
    _add_globals(p)

    p = sub.add_parser("verify", help="run a law suite and report")
    p.add_argument("--suite", required=True, help=f"one of {', '.join(sorted(hz.SUITES))}")
    m = p.add_mutually_exclusive_group()
    m.add_argument("--exhaustive", action="store_true", help="exhaustive small-instance stream")
    m.add_argument("--count", type=int, help="number of seeded random instances")
    _add_globals(p)
    return parser


def _opts(ns) -> dict:
    return {k: getattr(ns, k, v) for k, v in GLOBAL_DEFAULTS.items()}


def _structure(doc: InstanceDocument, o: dict) -> sg.SigmaStructure:
    return sg.SigmaStructure(doc.relation, o["mode"], not o["no_empty"])


def _emit(payload, o: dict, out) -> None:
    text = json.dumps(payload, indent=2, ensure_ascii=False) + "\n"
    out.write(text)
    if o["report"]:
        with open(o["report"], "w", encoding="utf-8") as fh:
            fh.write(text)


# ------------------------------------------------------------------ inspect

def _tables(doc: InstanceDocument, o: dict) -> dict:
    u = doc.universe
    st = _structure(doc, o)
    pairs = []
    for i in range(u.n):
        for j in range(i + 1, u.n):
            pairs.append({
                "pair": [u.elements[i], u.elements[j]],
                "U": u.labels(sg.upper_bounds(st, i, j)),
                "L": u.labels(sg.lower_bounds(st, i, j)),
            })
    rows = {}
    for x in u.elements:
        rows[x] = (
            predecessor_neighborhood(doc.relation, x),
            successor_neighborhood(doc.relation, x),
            min_neighborhood(doc.relation, x, o["empty_meet"]),
        )
    neighborhoods = [{"x": x, "U": u.labels(a), "L": u.labels(b), "min": u.labels(c)} for x, (a, b, c) in rows.items()]
    devs = wx.neighborhood_deviations(rows, u) if wx._is_s6(st) and o["empty_meet"] == EMPTY_MEET_EMPTY else []
    return {
        "universe": list(u.elements),
        "properties": relation_properties(doc.relation, o["empty_meet"]).as_dict(),
        "bounds": pairs,
        "neighborhoods": neighborhoods,
        "deviations": devs,
    }


def _fmt(labels) -> str:
    return "{" + ",".join(labels) + "}"


def _render(t: dict) -> str:
    lines = ["universe: " + " ".join(t["universe"])]
    lines.append("properties: " + ", ".join(f"{k}={'yes' if v else 'no'}" for k, v in t["properties"].items()))
    lines.append("")
    lines.append("Upper and lower bounds")
    rows = [("pair", "U(x,z)", "L(x,z)")]
    rows += [(f"({r['pair'][0]},{r['pair'][1]})", _fmt(r["U"]), _fmt(r["L"])) for r in t["bounds"]]
    lines += _columns(rows)
    lines.append("")
    lines.append("Neighborhoods")
    rows = [("x", "U(x,x)", "L(x,x)", "<x>")]
    rows += [(r["x"], _fmt(r["U"]), _fmt(r["L"]), _fmt(r["min"])) for r in t["neighborhoods"]]
    lines += _columns(rows)
    for d in t["deviations"]:
        lines.append("")
        lines.append(f"deviation: {d['quantity']} computed {_fmt(d['computed'])}, published {_fmt(d['reference'])}")
        if "explanation" in d:
            lines.append(f"  {d['explanation']}")
    return "\n".join(lines) + "\n"


def _columns(rows) -> list[str]:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]


def cmd_inspect(ns, out) -> int:
    o = _opts(ns)
    doc = load_instance(ns.document)
    t = _tables(doc, o)
    if ns.json:
        _emit(t, o, out)
    else:
        out.write(_render(t))
        if o["report"]:
            with open(o["report"], "w", encoding="utf-8") as fh:
                json.dump(t, fh, indent=2)
                fh.write("\n")
    return EXIT_OK


# ------------------------------------------------------------------- ideals

CLAUSES = ("proper", "nonempty", "down-closed", "U-directed")


def cmd_ideals(ns, out) -> int:
    o = _opts(ns)
    doc = load_instance(ns.document)
    st = _structure(doc, o)
    u = st.carrier
    fam = sg.enumerate_sigma_ideals(st)
    down = hz.oracle_enumerate_downclosed(st) if u.n <= hz.MAX_ORACLE_CARRIER else None
    audit, rejected = [], []
    for K in sg.enumerate_down_closed(st):
        check = sg.check_sigma_ideal(st, K)
        if check:
            clauses = {c: True for c in CLAUSES}
            if K == 0:
                clauses["nonempty"] = "not required"
            audit.append({"set": u.labels(K), "clauses": clauses})
        else:
            rejected.append({"set": u.labels(K), **{k: v for k, v in check.describe(u).items() if k != "ok"}})
    payload = {
        "options": st.options(),
        "ideals": sg.format_family(u, fam),
        "audit": audit,
        "rejected": rejected,
        "oracle": None if down is None else {
            "down_closed": len(down),
            "agrees": fam == [K for K in down if hz.oracle_is_ideal(st, K)],
        },
        "deviations": wx.ideal_deviations(st, fam),
    }
    _emit(payload, o, out)
    if payload["oracle"] is not None and not payload["oracle"]["agrees"]:
        raise LawFailure("enumeration disagrees with the blind oracle")
    return EXIT_OK


# ------------------------------------------------------------------- approx

def _ideal_of(doc: InstanceDocument, name: Optional[str], ring: SubsetFamily) -> LatticeIdeal:
    if name is None:
        raise MissingFamilyError("this operator needs --ideal naming a family in the document")
    return LatticeIdeal(ring, frozenset(doc.family(name)))


def _ring_of(doc: InstanceDocument, name: Optional[str]) -> SubsetFamily:
    if name is None:
        return SubsetFamily.powerset(doc.universe)
    return SubsetFamily(doc.universe, doc.family(name))


def _granulation(doc: InstanceDocument) -> ap.Granulation:
    if doc.granulation is None:
        raise MissingFamilyError("this operator needs a granulation in the document")
    return doc.granulation


def _gosih(doc: InstanceDocument, o: dict, ideal_name: Optional[str], A: int) -> ap.ApproxResult:
    if doc.powerset_relation is None:
        raise MissingFamilyError("gosih needs powerset_relation in the document")
    base = doc.universe
    if doc.powerset_relation == "subset":
        rel = None
    else:
        prs = doc.powerset_relation
        rel = lambda a, b: (a, b) in prs  # noqa: E731
    st = ap.powerset_structure(base, rel, o["mode"], not o["no_empty"])
    if ideal_name is None:
        raise MissingFamilyError("gosih needs --ideal naming a family of subsets")
    fixed = ap.family_mask(doc.family(ideal_name))
    return ap.approx_gosih(st, base, _granulation(doc), fixed, A)


def _actual_space(doc: InstanceDocument, override: Optional[str]) -> mo.ContactStructure:
    u = doc.universe
    if override is not None:
        actual = u.mask([x for x in override.split(",") if x])
    elif doc.actual_points is not None:
        actual = doc.actual_points
    else:
        raise MissingFamilyError("mereotopology needs actual_points in the document or --actual-points")
    return mo.build_discrete_contact(mo.DiscreteSpace(u, actual))


def _pick_clans(s: mo.ContactStructure, index: Optional[int]) -> list:
    acl = mo.clans(s, mo.ACTUAL)
    if index is None:
        return acl
    if not 0 <= index < len(acl):
        raise UsageError(f"--clan {index} is out of range; there are {len(acl)} actual clans")
    return [acl[index]]


def cmd_approx(ns, out) -> int:
    o = _opts(ns)
    if ns.op not in ap.TAGS:
        raise UsageError(f"unknown operator tag {ns.op!r}; known tags: {', '.join(ap.TAGS)}")
    doc = load_instance(ns.document)
    A = doc.set_mask(ns.set_name)
    R = doc.relation
    em = o["empty_meet"]
    if ns.op == "kappa":
        ps = SubsetFamily.powerset(doc.universe)
        res = ap.approx_kappa(R, _ideal_of(doc, ns.ideal, ps), A, em)
    elif ns.op in ("iad", "iad_prime"):
        ring = _ring_of(doc, ns.ring)
        res = ap.approx_iad(R, ring, _ideal_of(doc, ns.ideal, ring), A, ns.op == "iad_prime", em)
    elif ns.op == "iasd":
        ring = _ring_of(doc, ns.ring)
        res = ap.approx_iasd(R, ring, _ideal_of(doc, ns.ideal, ring), A, em)
    elif ns.op == "gosi":
        res = ap.approx_gosi(_structure(doc, o), _granulation(doc), A)
    elif ns.op == "gosih":
        res = _gosih(doc, o, ns.ideal, A)
    elif ns.op == "strong":
        res = ap.approx_strong(_structure(doc, o), _granulation(doc), A)
    elif ns.op == "antichain":
        if ns.antichain is None:
            raise MissingFamilyError("antichain needs --antichain naming a family of sigma-ideals")
        res = ap.approx_antichain(_structure(doc, o), _granulation(doc), doc.family(ns.antichain), A)
    else:
        scheme = {"mereo_cg": "CG", "mereo_g": "G", "mereo_clan": "Clan"}[ns.op]
        s = _actual_space(doc, None)
        rows = []
        for K in _pick_clans(s, ns.clan):
            r = mo.mereo_approx(s, K, A, scheme, mo.MIN, empty_meet=em)
            rows.append(dict(r.to_json(), clan=K.to_labels(doc.universe)))
        _emit(rows, o, out)
        return EXIT_OK
    _emit(res.to_json(), o, out)
    return EXIT_OK


# -------------------------------------------------------------------- mereo

def _gamma(doc: InstanceDocument, choice: str):
    if choice in (mo.MIN, mo.CA):
        return choice
    try:
        with open(choice, encoding="utf-8") as fh:
            mapping = json.load(fh)
    except OSError as exc:
        raise UsageError(f"--gamma must be min, ca or a readable JSON file: {exc}") from None
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{choice}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(mapping, dict):
        raise SchemaError(f"{choice}: expected an object mapping points to granules")
    return ap.Granulation.from_labels(doc.universe, mapping)


def cmd_mereo(ns, out) -> int:
    o = _opts(ns)
    doc = load_instance(ns.document)
    u = doc.universe
    s = _actual_space(doc, ns.actual_points)
    axioms = {
        "C": mo.check_axioms(s, "C"),
        "Ca": mo.check_axioms(s, "Ca", ns.ca1_literal),
        "AE": mo.check_axioms(s, "AE"),
    }
    cl = mo.clans(s, mo.CLAN)
    acl = mo.clans(s, mo.ACTUAL)
    payload = {
        "actual_points": u.labels(s.actual_points),
        "options": {"scheme": ns.scheme, "gamma": ns.gamma if ns.gamma in (mo.MIN, mo.CA) else "file",
                    "ca1_literal": ns.ca1_literal, "empty_meet": o["empty_meet"]},
        "axioms": {b: {k: {"holds": v is None, **({} if v is None else {"witness": v})} for k, v in block.items()}
                   for b, block in axioms.items()},
        "clans": [c.to_labels(u) for c in cl],
        "actual_clans": [c.to_labels(u) for c in acl],
        "results": [],
    }
    if ns.set_name is not None:
        A = doc.set_mask(ns.set_name)
        gamma = _gamma(doc, ns.gamma)
        for K in _pick_clans(s, ns.clan):
            r = mo.mereo_approx(s, K, A, ns.scheme, gamma, empty_meet=o["empty_meet"], clan_list=cl)
            payload["results"].append(dict(r.to_json(), clan=K.to_labels(u)))
    _emit(payload, o, out)
    failed = [f"{b}:{k}" for b, block in axioms.items() for k, v in block.items() if v is not None]
    if failed:
        raise LawFailure(f"axiom violations: {', '.join(failed)}")
    return EXIT_OK


# ------------------------------------------------------------------- verify

def cmd_verify(ns, out) -> int:
    o = _opts(ns)
    if ns.suite not in hz.SUITES:
        raise UsageError(f"unknown suite {ns.suite!r}; known suites: {', '.join(sorted(hz.SUITES))}")
    if ns.count is not None and ns.count < 0:
        raise UsageError("--count must be nonnegative")
    base = hz.SUITES[ns.suite]
    if ns.exhaustive:
        bounds = hz.Bounds(True)
    elif ns.count is not None:
        bounds = hz.Bounds(False, o["seed"], ns.count)
    elif base.bounds.exhaustive:
        bounds = base.bounds
    else:
        bounds = hz.Bounds(False, o["seed"], base.bounds.count)
    report = hz.run_suite(base.with_bounds(bounds))
    for law, tally in report.laws.values():
        if law.status == hz.ASSERTED:
            verdict = "PASS" if not tally.violations else "FAIL"
        else:
            verdict = "FOUND" if tally.violations else "NONE"
        out.write(f"{verdict:5s} {law.id} ({tally.violations}/{tally.checked})\n")
    out.write(f"{'ok' if report.ok else 'FAILED'}: {report.instances} instances, suite {report.suite}\n")
    if o["report"]:
        with open(o["report"], "w", encoding="utf-8") as fh:
            fh.write(report.dumps())
    if not report.ok:
        raise LawFailure(f"asserted laws failed: {', '.join(report.failed_laws())}")
    return EXIT_OK


COMMANDS = {
    "inspect": cmd_inspect,
    "ideals": cmd_ideals,
    "approx": cmd_approx,
    "mereo": cmd_mereo,
    "verify": cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        ns = build_parser().parse_args(argv)
        return COMMANDS[ns.command](ns, out)
    except LawFailure as exc:
        err.write(f"law failure: {exc}\n")
        return EXIT_LAW
    except RoughIdealsError as exc:
        err.write(f"error {exc.code}: {exc}\n")
        return EXIT_INPUT
    except OSError as exc:
        err.write(f"error {RoughIdealsError.code}: {exc}\n")
        return EXIT_INPUT
    except AssertionError as exc:
        err.write(f"law failure: {exc}\n")
        return EXIT_LAW


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
