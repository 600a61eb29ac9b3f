"""Brute-force oracles, small-instance generators and the law-suite runner.

A :class:`LawSuite` couples a list of laws with an instance stream and an
evaluator.  The evaluator reports one verdict per (law, check); the runner
tallies them into a :class:`VerificationReport`.  Laws come in two kinds:
``asserted`` laws fail the run on any violation, ``searched`` laws only
archive what they find.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Callable, Iterable, Iterator, Optional

from . import approx as ap
from . import laws as lw
from . import mereo as mo
from . import sigma as sg
from . import worked_examples as wx
from .errors import GuardExceededError, InvalidStructureError
from .lattice_ideals import (
    SubsetFamily,
    enumerate_lattice_ideals,
    generated_lattice_ideal,
    is_lattice_ideal,
    is_prime_lattice_ideal,
)
from .universe import (
    EMPTY_MEET_EMPTY,
    EMPTY_MEET_UNIVERSE,
    BinaryRelation,
    Universe,
    bits,
    canonical_key,
    is_antisymmetric,
    is_reflexive,
    is_subset,
    is_transitive,
    min_neighborhoods,
    predecessor_neighborhood,
    successor_neighborhood,
)

ASSERTED = "asserted"
SEARCHED = "searched"
MAX_ORACLE_CARRIER = 16
ARCHIVE_CAP = 5
LABELS = "abcdefghijklmnop"


# ---------------------------------------------------------------- oracles

def oracle_enumerate_downclosed(structure: sg.SigmaStructure) -> list[int]:
    """Every downward sigma-closed subset, by scanning all ``2**n`` masks."""
    n = structure.carrier.n
    if n > MAX_ORACLE_CARRIER:
        raise GuardExceededError(f"the blind scan is capped at {MAX_ORACLE_CARRIER} elements, got {n}")
    pairs = structure.sigma.pairs
    out = []
    for K in range(1 << n):
        if all(not (K >> b & 1) or K >> a & 1 for a, b in pairs):
            out.append(K)
    out.sort(key=canonical_key)
    return out


def oracle_is_ideal(structure: sg.SigmaStructure, K: int) -> bool:
    """Clause-by-clause ideal test written against the raw pair set."""
    n = structure.carrier.n
    if K == (1 << n) - 1:
        return False
    if K == 0:
        return structure.allow_empty_ideal
    pairs = structure.sigma.pairs
    members = [i for i in range(n) if K >> i & 1]
    for a, b in pairs:
        if K >> b & 1 and not K >> a & 1:
            return False
    for a in members:
        for b in members:
            ub = [x for x in range(n) if (a, x) in pairs and (b, x) in pairs]
            if not ub and structure.mode == sg.WEAK:
                continue
            if not any(K >> x & 1 for x in ub):
                return False
    return True


def oracle_lattice_ideals(ambient: SubsetFamily) -> list[frozenset]:
    """All nonempty subfamilies that are down-closed and join-closed, by blind scan."""
    members = list(ambient.members)
    if len(members) > 12:
        raise GuardExceededError("the lattice-ideal scan is capped at 12 members")
    out = []
    for sel in range(1, 1 << len(members)):
        fam = frozenset(members[i] for i in bits(sel))
        down = all(m in fam for a in fam for m in members if is_subset(m, a))
        if not down:
            continue
        joins = True
        for a in fam:
            for b in fam:
                ups = [m for m in members if is_subset(a, m) and is_subset(b, m)]
                least = [m for m in ups if all(is_subset(m, o) for o in ups)]
                if not least or least[0] not in fam:
                    joins = False
        if joins:
            out.append(fam)
    return out


# ------------------------------------------------------------- generators

def universe_of(n: int) -> Universe:
    return Universe(tuple(LABELS[:n]))


def all_relations(n: int, reflexive: bool = False) -> Iterator[BinaryRelation]:
    """Every relation (or every reflexive relation) on ``n`` points, in mask order."""
    u = universe_of(n)
    cells = [(i, j) for i in range(n) for j in range(n) if not (reflexive and i == j)]
    diag = frozenset((i, i) for i in range(n)) if reflexive else frozenset()
    for sel in range(1 << len(cells)):
        yield BinaryRelation(u, diag | frozenset(cells[k] for k in bits(sel)))


def all_granulations(n: int, reflexive: bool = True) -> Iterator[ap.Granulation]:
    """The granulation pool: every map with ``x`` in its own granule (or every map)."""
    u = universe_of(n)
    choices = []
    for x in range(n):
        opts = range(1 << n)
        choices.append([g for g in opts if not reflexive or g >> x & 1])
    for gamma in product(*choices):
        yield ap.Granulation(u, tuple(gamma))


def random_relation(rng: random.Random, u: Universe, density: float = 0.35, reflexive: bool = False) -> BinaryRelation:
    n = u.n
    pairs = {(i, j) for i in range(n) for j in range(n) if rng.random() < density}
    if reflexive:
        pairs |= {(i, i) for i in range(n)}
    return BinaryRelation(u, frozenset(pairs))


def random_granulation(rng: random.Random, u: Universe, reflexive: bool = False, within: Optional[int] = None) -> ap.Granulation:
    space = u.full if within is None else within
    gamma = []
    for x in range(u.n):
        g = rng.getrandbits(u.n) & space
        if reflexive:
            g |= 1 << x
        gamma.append(g)
    return ap.Granulation(u, tuple(gamma))


def random_subset(rng: random.Random, full: int) -> int:
    return rng.getrandbits(full.bit_length()) & full


def random_supremal(rng: random.Random, max_carrier: int = 6) -> sg.SigmaStructure:
    """A supremal relation: a rejection-sampled relation on three or four points,
    or inclusion on a union-closed family (at most 8 sets) padded with repeats."""
    if rng.random() < 0.5:
        for _ in range(200):
            n = rng.choice((3, 4))
            R = random_relation(rng, universe_of(n), rng.choice((0.3, 0.5, 0.7)))
            st = sg.SigmaStructure(R)
            if sg.is_supremal(st)[0] is not None:
                return st
    base = rng.choice((2, 3))
    fam = {rng.getrandbits(base) for _ in range(rng.randint(1, 4))}
    changed = True
    while changed:
        changed = False
        for a in list(fam):
            for b in list(fam):
                if a | b not in fam:
                    fam.add(a | b)
                    changed = True
    sets = sorted(fam, key=canonical_key)
    while len(sets) < max_carrier and rng.random() < 0.4:
        sets.append(rng.choice(sets))
    u = universe_of(len(sets))
    pairs = frozenset((i, j) for i, a in enumerate(sets) for j, b in enumerate(sets) if is_subset(a, b))
    return sg.SigmaStructure(BinaryRelation(u, pairs))


@dataclass(frozen=True)
class SpaceBounds:
    """``kind`` is ``relations``, ``reflexive`` or ``granulations``."""

    kind: str = "reflexive"
    exhaustive: bool = True
    n: int = 3
    seed: int = 0
    count: int = 100
    sizes: tuple = (4, 5, 6)


def generate_spaces(bounds: SpaceBounds) -> Iterator:
    """Exhaustive streams on ``bounds.n`` points or seeded random streams over ``bounds.sizes``."""
    if bounds.kind not in ("relations", "reflexive", "granulations"):
        raise InvalidStructureError(f"unknown space kind {bounds.kind!r}")
    if bounds.exhaustive:
        if bounds.n > 3 and bounds.kind != "reflexive" or bounds.n > 4:
            raise GuardExceededError("exhaustive streams are capped at 3 points (4 for reflexive relations)")
        if bounds.kind == "granulations":
            yield from all_granulations(bounds.n)
        else:
            yield from all_relations(bounds.n, bounds.kind == "reflexive")
        return
    rng = random.Random(bounds.seed)
    for _ in range(bounds.count):
        u = universe_of(rng.choice(bounds.sizes))
        if bounds.kind == "granulations":
            yield random_granulation(rng, u, reflexive=True)
        else:
            yield random_relation(rng, u, rng.choice((0.2, 0.35, 0.5)), bounds.kind == "reflexive")


# ----------------------------------------------------------- suite types

@dataclass(frozen=True)
class Law:
    id: str
    anchor: str
    status: str = ASSERTED


@dataclass(frozen=True)
class Bounds:
    exhaustive: bool = True
    seed: int = 0
    count: int = 100

    def to_json(self) -> dict:
        if self.exhaustive:
            return {"exhaustive": True}
        return {"exhaustive": False, "seed": self.seed, "count": self.count}


@dataclass(frozen=True)
class Case:
    """One generated instance: its JSON document plus whatever the evaluator needs."""

    doc: dict
    payload: Any = None


class Probe:
    """Collects verdicts and deviation records from one evaluator call."""

    def __init__(self):
        self.verdicts: list[tuple[str, Optional[dict]]] = []
        self.deviations: list[dict] = []

    def check(self, law_id: str, witness: Optional[dict]):
        self.verdicts.append((law_id, witness))

    def deviation(self, record: dict):
        self.deviations.append(record)


@dataclass(frozen=True)
class LawSuite:
    id: str
    laws: tuple
    bounds: Bounds
    generate: Callable[[Bounds], Iterable[Case]]
    evaluate: Callable[[Case, Probe], None]
    description: str = ""

    def __post_init__(self):
        ids = [law.id for law in self.laws]
        if len(ids) != len(set(ids)):
            raise InvalidStructureError(f"suite {self.id!r} lists a law twice")
        for law in self.laws:
            if not law.anchor or law.status not in (ASSERTED, SEARCHED):
                raise InvalidStructureError(f"law {law.id!r} needs an anchor and a valid status")

    def with_bounds(self, bounds: Bounds) -> "LawSuite":
        return LawSuite(self.id, self.laws, bounds, self.generate, self.evaluate, self.description)


@dataclass
class LawTally:
    checked: int = 0
    violations: int = 0


@dataclass
class VerificationReport:
    suite: str
    bounds: dict
    laws: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)
    deviations: list = field(default_factory=list)
    instances: int = 0

    @property
    def ok(self) -> bool:
        return all(t.violations == 0 for law, t in self.laws.values() if law.status == ASSERTED)

    def failed_laws(self) -> list[str]:
        return [k for k, (law, t) in self.laws.items() if law.status == ASSERTED and t.violations]

    def to_json(self) -> dict:
        laws = []
        for law, t in self.laws.values():
            rec = {"id": law.id, "anchor": law.anchor, "status": law.status,
                   "checked": t.checked, "violations": t.violations}
            if law.status == SEARCHED:
                rec["outcome"] = "counterexample found" if t.violations else "none found"
            else:
                rec["outcome"] = "pass" if not t.violations else "fail"
            laws.append(rec)
        return {
            "suite": self.suite,
            "bounds": self.bounds,
            "instances": self.instances,
            "ok": self.ok,
            "laws": laws,
            "counterexamples": self.counterexamples,
            "deviations": self.deviations,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"


def run_suite(suite: LawSuite) -> VerificationReport:
    """Run every law over the suite's instances, sequentially and in stream order."""
    report = VerificationReport(suite.id, suite.bounds.to_json())
    known = {law.id: law for law in suite.laws}
    report.laws = {law.id: (law, LawTally()) for law in suite.laws}
    archived: dict[str, int] = {}
    seen_devs = set()
    if not suite.laws:
        return report
    for case in suite.generate(suite.bounds):
        report.instances += 1
        probe = Probe()
        suite.evaluate(case, probe)
        for law_id, witness in probe.verdicts:
            if law_id not in known:
                raise InvalidStructureError(f"suite {suite.id!r} reported an undeclared law {law_id!r}")
            tally = report.laws[law_id][1]
            tally.checked += 1
            if witness is not None:
                tally.violations += 1
                if archived.get(law_id, 0) < ARCHIVE_CAP:
                    archived[law_id] = archived.get(law_id, 0) + 1
                    report.counterexamples.append({
                        "law": law_id,
                        "status": known[law_id].status,
                        "instance": case.doc,
                        "witness": witness,
                    })
        for d in probe.deviations:
            key = json.dumps(d, sort_keys=True)
            if key not in seen_devs:
                seen_devs.add(key)
                report.deviations.append(d)
    return report


# ------------------------------------------------------------ utilities

def _doc(u: Universe, R: Optional[BinaryRelation] = None, **extra) -> dict:
    doc = {"version": "1", "universe": list(u.elements), "relation": R.label_pairs() if R is not None else []}
    for k, v in extra.items():
        if v is not None:
            doc[k] = v
    return doc


def _fam_labels(u: Universe, members) -> list:
    return [u.labels(m) for m in sorted(members, key=canonical_key)]


def _laws_from(prefix: str, anchor: str, funcs, status: str = ASSERTED) -> tuple:
    return tuple(Law(f"{prefix}.{lw.law_name(f)}", f"{anchor}: {lw.law_name(f).replace('_', ' ')}", status) for f in funcs)


def _run_laws(probe: Probe, prefix: str, pair: lw.MapPair, funcs):
    for f in funcs:
        probe.check(f"{prefix}.{lw.law_name(f)}", f(pair))


def _powerset_ideals(u: Universe):
    ps = SubsetFamily.powerset(u)
    return ps, enumerate_lattice_ideals(ps)


# ------------------------------------------------------------ kappa / IAD / IASD

KAPPA_FUNCS = lw.KAPPA + (lw.ideal_fix_upper(()), lw.ideal_fix_lower(()))
KAPPA_LAWS = _laws_from("kappa", "kappa theorem", KAPPA_FUNCS)
IAD_LAWS = _laws_from("iad", "IAD theorem", lw.IAD) + _laws_from("iad_prime", "IAD theorem, prime ideals", lw.IAD)
IAD_RING_LAWS = _laws_from("iad.subring", "IAD theorem on a proper ring", lw.IAD, SEARCHED)
IASD_LAWS = _laws_from("iasd", "IASD theorem", lw.IAD)
IASD_SUB_LAWS = _laws_from("iasd.subalgebra", "IASD theorem on a proper algebra", lw.IAD, SEARCHED)


def _reflexive_cases(bounds: Bounds, sizes=(4, 5)) -> Iterator[BinaryRelation]:
    if bounds.exhaustive:
        yield from all_relations(3, reflexive=True)
        return
    rng = random.Random(bounds.seed)
    for _ in range(bounds.count):
        yield random_relation(rng, universe_of(rng.choice(sizes)), rng.choice((0.2, 0.35, 0.5)), reflexive=True)


def _ideal_choices(u: Universe, bounds: Bounds, rng: Optional[random.Random]):
    """All power-set ideals when exhaustive; otherwise {∅}, a principal ideal and the largest proper one."""
    ps = SubsetFamily.powerset(u)
    if bounds.exhaustive:
        return ps, enumerate_lattice_ideals(ps)
    from .lattice_ideals import principal_ideal
    picks = [0, random_subset(rng, u.full), u.full & ~(1 << rng.randrange(u.n))]
    out = []
    for D in picks:
        I = principal_ideal(ps, D)
        if I not in out:
            out.append(I)
    return ps, out


def _gen_kappa(bounds: Bounds) -> Iterator[Case]:
    rng = random.Random(bounds.seed)
    for R in _reflexive_cases(bounds):
        u = R.universe
        ps, ideals = _ideal_choices(u, bounds, rng)
        for I in ideals:
            doc = _doc(u, R, families={"I": _fam_labels(u, I.members)})
            yield Case(doc, (R, ps, I))


def _eval_kappa(case: Case, probe: Probe):
    R, _, I = case.payload
    pair = lw.MapPair.from_results(R.universe, lambda A: ap.approx_kappa(R, I, A))
    funcs = lw.KAPPA + (lw.ideal_fix_upper(I.members), lw.ideal_fix_lower(I.members))
    _run_laws(probe, "kappa", pair, funcs)


def _proper_rings(u: Universe, algebra: bool) -> list[SubsetFamily]:
    """Proper sub-rings (or sub-algebras) of the power set of a universe with at most 3 points."""
    if u.n > 3:
        raise GuardExceededError("sub-ring enumeration is capped at 3 points")
    size = 1 << u.n
    out = []
    for sel in range(1, (1 << size) - 1):
        fam = SubsetFamily(u, tuple(bits(sel)))
        if algebra:
            if 0 in fam and u.full in fam and fam.is_ring() and fam.closed_under_complement():
                out.append(fam)
        elif fam.is_ring():
            out.append(fam)
    return out


_RING_CACHE: dict = {}


def _sub_families(u: Universe, algebra: bool) -> list[SubsetFamily]:
    key = (u.elements, algebra)
    if key not in _RING_CACHE:
        _RING_CACHE[key] = _proper_rings(u, algebra)
    return _RING_CACHE[key]


def _gen_iad(bounds: Bounds) -> Iterator[Case]:
    rng = random.Random(bounds.seed)
    for R in _reflexive_cases(bounds):
        u = R.universe
        ps, ideals = _ideal_choices(u, bounds, rng)
        for I in ideals:
            prime = is_prime_lattice_ideal(ps, I)[0]
            doc = _doc(u, R, families={"I": _fam_labels(u, I.members)})
            yield Case(doc, ("full", R, ps, I, prime))
        if u.n <= 3:
            rings = _sub_families(u, algebra=False)
            for ring in rng.sample(rings, min(2, len(rings))):
                ids = enumerate_lattice_ideals(ring)
                I = rng.choice(ids)
                doc = _doc(u, R, families={"ring": ring.to_labels(), "I": _fam_labels(u, I.members)})
                yield Case(doc, ("sub", R, ring, I, False))


def _eval_iad(case: Case, probe: Probe):
    kind, R, ring, I, prime = case.payload
    u = R.universe
    if kind == "full":
        pair = lw.MapPair.from_results(u, lambda A: ap.approx_iad(R, ring, I, A))
        _run_laws(probe, "iad", pair, lw.IAD)
        if prime:
            pair = lw.MapPair.from_results(u, lambda A: ap.approx_iad(R, ring, I, A, prime=True))
            _run_laws(probe, "iad_prime", pair, lw.IAD)
        return
    pair = lw.MapPair.from_results(u, lambda A: ap.approx_iad(R, ring, I, A), domain=ring.members)
    _run_laws(probe, "iad.subring", pair, lw.IAD)


def _gen_iasd(bounds: Bounds) -> Iterator[Case]:
    rng = random.Random(bounds.seed)
    for R in _reflexive_cases(bounds):
        u = R.universe
        ps, ideals = _ideal_choices(u, bounds, rng)
        for I in ideals:
            yield Case(_doc(u, R, families={"I": _fam_labels(u, I.members)}), ("full", R, ps, I))
        if u.n <= 3:
            for alg in _sub_families(u, algebra=True):
                I = rng.choice(enumerate_lattice_ideals(alg))
                doc = _doc(u, R, families={"algebra": alg.to_labels(), "I": _fam_labels(u, I.members)})
                yield Case(doc, ("sub", R, alg, I))


def _eval_iasd(case: Case, probe: Probe):
    kind, R, alg, I = case.payload
    u = R.universe
    if kind == "full":
        pair = lw.MapPair.from_results(u, lambda A: ap.approx_iasd(R, alg, I, A))
        _run_laws(probe, "iasd", pair, lw.IAD)
    else:
        pair = lw.MapPair.from_results(u, lambda A: ap.approx_iasd(R, alg, I, A), domain=alg.members)
        _run_laws(probe, "iasd.subalgebra", pair, lw.IAD)


AGREEMENT_LAWS = (
    Law("agreement.lower", "IASD and IAD agree on complemented algebras: lower"),
    Law("agreement.upper", "IASD and IAD agree on complemented algebras: upper"),
)


def _gen_agreement(bounds: Bounds) -> Iterator[Case]:
    rng = random.Random(bounds.seed)
    for R in _reflexive_cases(bounds, sizes=(4,)):
        u = R.universe
        ps, ideals = _ideal_choices(u, bounds, rng)
        for I in ideals:
            yield Case(_doc(u, R, families={"I": _fam_labels(u, I.members)}), (R, ps, I))


def _eval_agreement(case: Case, probe: Probe):
    R, ps, I = case.payload
    u = R.universe
    bad_lo = bad_up = None
    for A in u.all_subsets():
        k = ap.approx_iad(R, ps, I, A)
        p = ap.approx_iasd(R, ps, I, A)
        if bad_lo is None and k.lower != p.lower:
            bad_lo = {"A": u.labels(A), "iad": u.labels(k.lower), "iasd": u.labels(p.lower)}
        if bad_up is None and k.upper != p.upper:
            bad_up = {"A": u.labels(A), "iad": u.labels(k.upper), "iasd": u.labels(p.upper)}
    probe.check("agreement.lower", bad_lo)
    probe.check("agreement.upper", bad_up)


# ------------------------------------------------------------------ GOSI

GOSI_LAWS = (
    Law("gosi.inclusion", "GOSI theorem: inclusion"),
    Law("gosi.weak_idempotent_lower", "GOSI theorem: lower weak idempotency"),
    Law("gosi.weak_idempotent_upper", "GOSI theorem: upper weak idempotency"),
    Law("gosi.bottom", "GOSI theorem: bottom"),
    Law("gosi.top", "GOSI theorem: top"),
    Law("gosi.membership_paths", "ideal predicate agrees with the enumerated family"),
    Law("gosi.monotone", "GOSI remark: monotonicity need not hold", SEARCHED),
)


def _gen_gosi(bounds: Bounds) -> Iterator[Case]:
    if bounds.exhaustive:
        # every relation on 3 points with granulations from the reflexive pool
        # thinned to one in eight, and every target set
        pool = list(all_granulations(3))[::8]
        for R in all_relations(3):
            st = sg.SigmaStructure(R)
            for g in pool:
                for A in R.universe.all_subsets():
                    rest = R.universe.full & ~A
                    yield _gosi_case(st, g, A, A | (rest & -rest))
        return
    rng = random.Random(bounds.seed)
    for _ in range(bounds.count):
        u = universe_of(rng.randint(1, 6))
        R = random_relation(rng, u, rng.choice((0.15, 0.3, 0.5)))
        g = random_granulation(rng, u, reflexive=rng.random() < 0.5)
        A = random_subset(rng, u.full)
        B = A | random_subset(rng, u.full)
        yield _gosi_case(sg.SigmaStructure(R), g, A, B)


def _gosi_case(st: sg.SigmaStructure, g: ap.Granulation, A: int, B: int) -> Case:
    u = st.carrier
    doc = _doc(u, st.sigma, granulation=g.to_labels(), sets={"A": u.labels(A), "B": u.labels(B)})
    return Case(doc, (st, g, A, B))


def _eval_gosi(case: Case, probe: Probe):
    st, g, A, B = case.payload
    u = st.carrier
    try:
        fam = sg.enumerate_sigma_ideals(st)
        r = ap.approx_gosi(st, g, A, fam)
        probe.check("gosi.membership_paths", None)
    except AssertionError as exc:
        probe.check("gosi.membership_paths", {"error": str(exc)})
        return
    run = lambda X: ap.approx_gosi(st, g, X)  # noqa: E731
    inc = None if is_subset(r.lower, A) and is_subset(A, r.upper) else {"A": u.labels(A)}
    probe.check("gosi.inclusion", inc)
    ll = run(r.lower).lower
    probe.check("gosi.weak_idempotent_lower", None if is_subset(ll, r.lower) else
                {"A": u.labels(A), "lower": u.labels(r.lower), "lower_lower": u.labels(ll)})
    uu = run(r.upper).upper
    probe.check("gosi.weak_idempotent_upper", None if is_subset(r.upper, uu) else
                {"A": u.labels(A), "upper": u.labels(r.upper), "upper_upper": u.labels(uu)})
    e, f = run(0), run(u.full)
    probe.check("gosi.bottom", None if e.lower == 0 == e.upper else {"lower": u.labels(e.lower), "upper": u.labels(e.upper)})
    probe.check("gosi.top", None if f.lower == u.full == f.upper else {"lower": u.labels(f.lower), "upper": u.labels(f.upper)})
    if B != A:
        rb = run(B)
        mono = is_subset(r.lower, rb.lower) and is_subset(r.upper, rb.upper)
        probe.check("gosi.monotone", None if mono else {
            "A": u.labels(A), "B": u.labels(B),
            "lower_A": u.labels(r.lower), "lower_B": u.labels(rb.lower),
            "upper_A": u.labels(r.upper), "upper_B": u.labels(rb.upper),
        })


# ------------------------------------------------------------------ GOSIH

GOSIH_FUNCS = lw.GOSIH_BASE + (lw.ideal_fix_upper(()), lw.ideal_fix_lower(()))
GOSIH_LAWS = (Law("gosih.hypotheses", "GOSIH theorem hypotheses hold on the instance"),) + _laws_from(
    "gosih", "GOSIH theorem", GOSIH_FUNCS
)
_PS_CACHE: dict = {}


def _ps_structure(n: int):
    if n not in _PS_CACHE:
        base = universe_of(n)
        _PS_CACHE[n] = (base, ap.powerset_structure(base))
    return _PS_CACHE[n]


def _gen_gosih(bounds: Bounds) -> Iterator[Case]:
    if bounds.exhaustive:
        for n in (1, 2, 3):
            base, _ = _ps_structure(n)
            for D in range(base.full):
                for g in all_granulations(n):
                    yield _gosih_case(n, D, g)
        return
    rng = random.Random(bounds.seed)
    for _ in range(bounds.count):
        n = rng.randint(1, 4)
        base, _ = _ps_structure(n)
        D = rng.randrange(base.full)  # proper subset of the base
        yield _gosih_case(n, D, random_granulation(rng, base, reflexive=True))


def _gosih_case(n: int, D: int, g: ap.Granulation) -> Case:
    base, _ = _ps_structure(n)
    members = [m for m in base.all_subsets() if is_subset(m, D)]
    doc = _doc(base, BinaryRelation(base, frozenset()), granulation=g.to_labels(),
               families={"I": _fam_labels(base, members)}, powerset_relation="subset")
    return Case(doc, (n, members, g))


def _eval_gosih(case: Case, probe: Probe):
    n, members, g = case.payload
    base, st = _ps_structure(n)
    hyp = ap.gosih_hypotheses(st, g)
    probe.check("gosih.hypotheses", None if all(hyp.values()) else hyp)
    fixed = ap.family_mask(members)
    pair = lw.MapPair.from_results(base, lambda A: ap.approx_gosih(st, base, g, fixed, A))
    funcs = lw.GOSIH_BASE + (lw.ideal_fix_upper(members), lw.ideal_fix_lower(members))
    _run_laws(probe, "gosih", pair, funcs)


# ----------------------------------------------------------- strong / antichain

STRONG_LAWS = (
    Law("strong.lower_between", "strong approximation proposition: lower star within lower s within A"),
    Law("strong.upper_equal", "strong approximation proposition: upper star equals upper s"),
)
ANTICHAIN_LAWS = (
    Law("antichain.lower", "antichain proposition: lower a within lower star"),
    Law("antichain.upper", "antichain proposition: upper star within upper a"),
)


def _gen_strong(bounds: Bounds) -> Iterator[Case]:
    if bounds.exhaustive:
        pool = list(all_granulations(3, reflexive=False))[::37]
        for R in all_relations(3):
            st = sg.SigmaStructure(R)
            if sg.is_supremal(st)[0] is None:
                continue
            for g in pool:
                yield Case(_doc(R.universe, R, granulation=g.to_labels()), (st, g))
        return
    rng = random.Random(bounds.seed)
    for _ in range(bounds.count):
        st = random_supremal(rng)
        g = random_granulation(rng, st.carrier, reflexive=rng.random() < 0.5)
        yield Case(_doc(st.carrier, st.sigma, granulation=g.to_labels()), (st, g))


def _eval_strong(case: Case, probe: Probe):
    st, g = case.payload
    u = st.carrier
    ctx = ap.ParallelContext(st)
    lo_bad = up_bad = None
    for A in u.all_subsets():
        star = ap.approx_gosi(st, g, A)
        s = ap.approx_strong(st, g, A, ctx)
        if lo_bad is None and not (is_subset(star.lower, s.lower) and is_subset(s.lower, A)):
            lo_bad = {"A": u.labels(A), "lower_star": u.labels(star.lower), "lower_s": u.labels(s.lower)}
        if up_bad is None and star.upper != s.upper:
            up_bad = {"A": u.labels(A), "upper_star": u.labels(star.upper), "upper_s": u.labels(s.upper)}
    probe.check("strong.lower_between", lo_bad)
    probe.check("strong.upper_equal", up_bad)


def _random_antichain(rng: random.Random, family: list) -> list:
    fam = list(family)
    rng.shuffle(fam)
    chosen = []
    for K in fam:
        if rng.random() < 0.6 and all(not is_subset(K, C) and not is_subset(C, K) for C in chosen):
            chosen.append(K)
    return sorted(chosen, key=canonical_key)


def _antichains(family: list) -> Iterator[list]:
    """Every nonempty antichain of a small family."""
    k = len(family)
    for sel in range(1, 1 << k):
        ac = [family[i] for i in bits(sel)]
        if all(not is_subset(a, b) for a in ac for b in ac if a != b):
            yield ac


def _gen_antichain(bounds: Bounds) -> Iterator[Case]:
    if bounds.exhaustive:
        for R in all_relations(3):
            st = sg.SigmaStructure(R)
            fam = sg.enumerate_sigma_ideals(st)
            grans = (ap.point_granulation(R), ap.Granulation(R.universe, (R.universe.full,) * 3))
            for ac in _antichains(fam):
                for g in grans:
                    yield _antichain_case(st, g, ac, fam)
        return
    rng = random.Random(bounds.seed)
    for _ in range(bounds.count):
        u = universe_of(rng.randint(2, 6))
        st = sg.SigmaStructure(random_relation(rng, u, rng.choice((0.2, 0.35, 0.5))))
        fam = sg.enumerate_sigma_ideals(st)
        ac = _random_antichain(rng, fam)
        g = random_granulation(rng, u, reflexive=rng.random() < 0.5)
        yield _antichain_case(st, g, ac, fam)


def _antichain_case(st, g, ac, fam) -> Case:
    u = st.carrier
    doc = _doc(u, st.sigma, granulation=g.to_labels(), families={"antichain": _fam_labels(u, ac)})
    return Case(doc, (st, g, ac, fam))


def _eval_antichain(case: Case, probe: Probe):
    st, g, ac, fam = case.payload
    u = st.carrier
    lo_bad = up_bad = None
    for A in u.all_subsets():
        star = ap.approx_gosi(st, g, A)
        a = ap.approx_antichain(st, g, ac, A, fam)
        if lo_bad is None and not is_subset(a.lower, star.lower):
            lo_bad = {"A": u.labels(A), "lower_a": u.labels(a.lower), "lower_star": u.labels(star.lower)}
        if up_bad is None and not is_subset(star.upper, a.upper):
            up_bad = {"A": u.labels(A), "upper_star": u.labels(star.upper), "upper_a": u.labels(a.upper)}
    probe.check("antichain.lower", lo_bad)
    probe.check("antichain.upper", up_bad)


# ----------------------------------------------------------------- mereo

_EMPIRICAL = lw.MEREO_FIRST
MEREO_LAWS = (
    Law("mereo.axioms.C", "contact axioms C1-C5 with the join and transfer consequences"),
    Law("mereo.axioms.Ca", "actual contact axioms Ca1-Ca5"),
    Law("mereo.axioms.AE", "actual existence is a grill"),
    Law("mereo.actual_clans_are_clans", "actual clans form a subfamily of the clans"),
    Law("mereo.actual_contact_shared_clan", "actual contact iff some actual clan holds both regions"),
    Law("mereo.reflexive_ultrafilters", "ultrafilters inside an actual clan are reflexive"),
    Law("mereo.canonical_relations", "R reflexive and symmetric; R^a nonempty, symmetric, quasi-reflexive"),
) + _laws_from("mereo.first", "first mereological approximation theorem", lw.MEREO_FIRST) + _laws_from(
    "mereo.second", "second mereological approximation theorem", lw.MEREO_SECOND
) + (
    Law("mereo.second.idempotent_lower", "second theorem does not claim lower idempotence", SEARCHED),
    Law("mereo.second.idempotent_upper", "second theorem does not claim upper idempotence", SEARCHED),
    Law("mereo.inverse_problem", "maps from actual clans pass the five listed laws"),
) + _laws_from("mereo.g", "G scheme, no laws claimed", _EMPIRICAL, SEARCHED) + _laws_from(
    "mereo.clan", "Clan scheme, no laws claimed", _EMPIRICAL, SEARCHED
)


def _gen_mereo(bounds: Bounds) -> Iterator[Case]:
    rng = random.Random(bounds.seed)
    extra = 2 if bounds.exhaustive else max(1, bounds.count // 10)
    for n in (2, 3, 4):
        u = universe_of(n)
        for xa in range(1, u.full):
            space = mo.DiscreteSpace(u, xa)
            s = mo.build_discrete_contact(space)
            rels = [random_relation(rng, u, 0.4, reflexive=False) for _ in range(extra)]
            # keep random relations inside the actual points so granules stay there
            rels = [BinaryRelation(u, frozenset((a, b) for a, b in R.pairs if xa >> a & 1 and xa >> b & 1)) for R in rels]
            doc = _doc(u, BinaryRelation(u, frozenset()), actual_points=u.labels(xa))
            yield Case(doc, (s, rels))


def _first_failure_dict(report: dict) -> Optional[dict]:
    bad = {k: v for k, v in report.items() if v is not None}
    return bad or None


def _eval_mereo(case: Case, probe: Probe):
    s, rels = case.payload
    u = s.universe
    rs = list(mo.regions(u.n))
    for block in ("C", "Ca", "AE"):
        probe.check(f"mereo.axioms.{block}", _first_failure_dict(mo.check_axioms(s, block)))
    cl = mo.clans(s, mo.CLAN)
    acl = mo.clans(s, mo.ACTUAL)
    plain = {c.members for c in cl}
    missing = [c.to_labels(u) for c in acl if c.members not in plain]
    probe.check("mereo.actual_clans_are_clans", {"actual_clans_not_clans": missing} if missing else None)
    bad = None
    for b in rs:
        for e in rs:
            shared = any(b in c and e in c for c in acl)
            if s.Ca(b, e) != shared and bad is None:
                bad = {"regions": [u.labels(b), u.labels(e)], "actual_contact": s.Ca(b, e), "shared_actual_clan": shared}
    probe.check("mereo.actual_contact_shared_clan", bad)
    canon = mo.canonical_relations(s)
    bad = None
    for c in acl:
        for i in c.ultrafilters:
            if i not in canon.reflexive and bad is None:
                bad = {"ultrafilter": u.elements[i], "clan": c.to_labels(u)}
    probe.check("mereo.reflexive_ultrafilters", bad)
    R, Ra = canon.R, canon.Ra
    props = {
        "R_reflexive": is_reflexive(R),
        "R_symmetric": all(R.holds(j, i) for i, j in R.pairs),
        "Ra_nonempty": bool(Ra.pairs),
        "Ra_symmetric": all(Ra.holds(j, i) for i, j in Ra.pairs),
        "Ra_quasi_reflexive": all(Ra.holds(i, i) for i, _ in Ra.pairs),
    }
    probe.check("mereo.canonical_relations", None if all(props.values()) else props)
    for K in acl:
        tab = lambda **kw: lw.MapPair.from_results(u, lambda A: mo.mereo_approx(s, K, A, **kw))  # noqa: E731
        first = tab(scheme="CG", gamma=mo.MIN)
        _run_laws(probe, "mereo.first", first, lw.MEREO_FIRST)
        for R in rels:
            _run_laws(probe, "mereo.first", tab(scheme="CG", gamma=mo.MIN, relation=R), lw.MEREO_FIRST)
        second = tab(scheme="CG", gamma=mo.CA)
        _run_laws(probe, "mereo.second", second, lw.MEREO_SECOND)
        probe.check("mereo.second.idempotent_lower", lw.idempotent_lower(second))
        probe.check("mereo.second.idempotent_upper", lw.idempotent_upper(second))
        inv = mo.inverse_problem_laws(u, first.lower, first.upper)
        probe.check("mereo.inverse_problem", None if all(v["ok"] for v in inv.values()) else inv)
        _run_laws(probe, "mereo.g", tab(scheme="G", gamma=mo.MIN), _EMPIRICAL)
        _run_laws(probe, "mereo.clan", tab(scheme="Clan", clan_list=cl), _EMPIRICAL)


# ----------------------------------------------------------------- sigma

SIGMA_LAWS = (
    Law("sigma.oracle", "optimized enumeration equals the blind scan filtered by the ideal clauses"),
    Law("sigma.convex_directed", "every sigma-ideal is sigma-convex and U-directed"),
    Law("sigma.directed_carrier", "a sigma-directed carrier has sigma-directed ideals"),
    Law("sigma.neighborhood_bounds", "point neighborhoods equal the bound operators at (x, x)"),
    Law("sigma.supremum_closure", "sigma-ideals are closed under supremums"),
    Law("sigma.antisymmetric_unique", "antisymmetric relations are uniquely supremal"),
    Law("sigma.connex_chain", "a connex relation has a chain of ideals"),
    Law("sigma.quasi_order_principal", "a quasi-order with proper down-sets has principal ideals equal to its down-sets"),
    Law("sigma.quasi_order_principal_literal", "a quasi-order has principal ideals equal to its down-sets", SEARCHED),
    Law("sigma.principal_quasi_order", "principal ideals equal to down-sets force a quasi-order"),
    Law("sigma.principal_monotone", "the transitive completion orders the principal ideals"),
    Law("sigma.generation_least", "the generated closure is the least ideal containing the set"),
    Law("sigma.maximal_extension", "every sigma-ideal lies in a maximal one"),
)


def _gen_sigma(bounds: Bounds) -> Iterator[Case]:
    if bounds.exhaustive:
        for R in all_relations(3):
            yield Case(_doc(R.universe, R), R)
        return
    rng = random.Random(bounds.seed)
    for _ in range(bounds.count):
        if rng.random() < 0.3:
            R = random_supremal(rng).sigma
        else:
            u = universe_of(rng.randint(2, 8))
            R = random_relation(rng, u, rng.choice((0.15, 0.3, 0.5, 0.7)), reflexive=rng.random() < 0.3)
        yield Case(_doc(R.universe, R), R)


def _eval_sigma(case: Case, probe: Probe):
    R = case.payload
    u = R.universe
    n, full = u.n, u.full
    st = sg.SigmaStructure(R)
    bad = None
    for mode in sg.MODES:
        for empty in (True, False):
            s2 = st.with_options(mode, empty)
            fast = sg.enumerate_sigma_ideals(s2)
            slow = [K for K in oracle_enumerate_downclosed(s2) if oracle_is_ideal(s2, K)]
            if fast != slow and bad is None:
                bad = {"options": s2.options(), "enumerated": sg.format_family(u, fast), "oracle": sg.format_family(u, slow)}
    probe.check("sigma.oracle", bad)
    fam = sg.enumerate_sigma_ideals(st)
    weak = st.mode == sg.WEAK
    bad = next(({"ideal": u.labels(K)} for K in fam
                if not (sg.is_sigma_convex(st, K) and sg.is_U_directed(st, K, weak=weak))), None)
    probe.check("sigma.convex_directed", bad)
    if sg.is_sigma_directed(st, full):
        bad = next(({"ideal": u.labels(K)} for K in fam if K and not sg.is_sigma_directed(st, K)), None)
        probe.check("sigma.directed_carrier", bad)
    bad = None
    for x in range(n):
        if successor_neighborhood(R, x) != sg.lower_bounds(st, x, x) or predecessor_neighborhood(R, x) != sg.upper_bounds(st, x, x):
            bad = {"point": u.elements[x]}
            break
    probe.check("sigma.neighborhood_bounds", bad)
    sup, _ = sg.is_supremal(st)
    if sup is not None:
        bad = None
        for K in fam:
            for a in bits(K):
                for b in bits(K):
                    if sup.all_[a, b] & ~K and bad is None:
                        bad = {"ideal": u.labels(K), "pair": [u.elements[a], u.elements[b]], "sups": u.labels(sup.all_[a, b])}
        probe.check("sigma.supremum_closure", bad)
        if is_antisymmetric(R):
            probe.check("sigma.antisymmetric_unique", None if sup.unique() else {"detail": "a pair has two supremums"})
        bad = None
        for X in range(1, 1 << n):
            closure = sg.sigma_closure(st, X, sup)
            least = sg.least_ideal_containing(st, X, fam)
            expected = least.ideal if least.exists else None
            if closure == full:
                ok = not least.minimal_covers
            else:
                ok = closure == expected
            if not ok:
                bad = {"X": u.labels(X), "closure": u.labels(closure),
                       "least": None if expected is None else u.labels(expected)}
                break
        probe.check("sigma.generation_least", bad)
    if all(R.holds(a, b) or R.holds(b, a) for a in range(n) for b in range(n)):
        chain = all(is_subset(K, J) or is_subset(J, K) for K in fam for J in fam)
        probe.check("sigma.connex_chain", None if chain else {"ideals": sg.format_family(u, fam)})
    quasi = is_reflexive(R) and is_transitive(R)
    principal = [sg.principal_ideal(st, a, fam) for a in range(n)]
    matches = all(principal[a] == R.in_[a] for a in range(n))
    if quasi:
        detail = {"principal": [None if p is None else u.labels(p) for p in principal]}
        probe.check("sigma.quasi_order_principal_literal", None if matches else detail)
        if all(R.in_[a] != full for a in range(n)):
            probe.check("sigma.quasi_order_principal", None if matches else detail)
    if matches:
        probe.check("sigma.principal_quasi_order", None if quasi else {"detail": "principal ideals are down-sets but sigma is no quasi-order"})
    tau = R.transitive_closure()
    bad = None
    for a, b in tau.pairs:
        pa, pb = principal[a], principal[b]
        if pa is not None and pb is not None and not is_subset(pa, pb):
            bad = {"pair": [u.elements[a], u.elements[b]], "principal_a": u.labels(pa), "principal_b": u.labels(pb)}
            break
    probe.check("sigma.principal_monotone", bad)
    maximal = [K for K in fam if not any(K != J and is_subset(K, J) for J in fam)]
    bad = next(({"ideal": u.labels(K)} for K in fam if not any(is_subset(K, M) for M in maximal)), None)
    probe.check("sigma.maximal_extension", bad)


# --------------------------------------------------------- neighborhoods

NEIGHBORHOOD_LAWS = (
    Law("neighborhoods.min_monotone", "a in <b> implies <a> within <b>"),
    Law("neighborhoods.reflexive_membership", "reflexive relations put x in both point neighborhoods"),
)


def _gen_neighborhoods(bounds: Bounds) -> Iterator[Case]:
    sb = SpaceBounds("relations", bounds.exhaustive, 3, bounds.seed, bounds.count, (4, 5))
    for R in generate_spaces(sb):
        yield Case(_doc(R.universe, R), R)


def _eval_neighborhoods(case: Case, probe: Probe):
    R = case.payload
    u = R.universe
    for conv in (EMPTY_MEET_EMPTY, EMPTY_MEET_UNIVERSE):
        mins = min_neighborhoods(R, conv)
        bad = None
        for b in range(u.n):
            for a in bits(mins[b]):
                if not is_subset(mins[a], mins[b]):
                    bad = {"convention": conv, "a": u.elements[a], "b": u.elements[b]}
        probe.check("neighborhoods.min_monotone", bad)
    if is_reflexive(R):
        bad = next(({"point": u.elements[x]} for x in range(u.n)
                    if not (successor_neighborhood(R, x) >> x & 1 and predecessor_neighborhood(R, x) >> x & 1)), None)
        probe.check("neighborhoods.reflexive_membership", bad)


# --------------------------------------------------------------- lattice

LATTICE_LAWS = (
    Law("lattice.oracle", "ideal enumeration equals the blind subfamily scan"),
    Law("lattice.valid", "every enumerated ideal passes the ideal test"),
    Law("lattice.generated_meet", "the generated ideal is the meet of the ideals containing the seed"),
    Law("lattice.meet_closed", "ideals of a ring are closed under pairwise intersection"),
)


def _gen_lattice(bounds: Bounds) -> Iterator[Case]:
    u = universe_of(3)
    if bounds.exhaustive:
        fams = _sub_families(u, algebra=False) + [SubsetFamily.powerset(u)]
        fams += [SubsetFamily(u, (0, 1, 3)), SubsetFamily(u, (1, 2, 4, 7))]
    else:
        rng = random.Random(bounds.seed)
        fams = [SubsetFamily(u, tuple(m for m in range(8) if rng.random() < 0.5) or (0,)) for _ in range(bounds.count)]
    for fam in fams:
        yield Case({"version": "1", "universe": list(u.elements), "relation": [], "families": {"ambient": fam.to_labels()}}, fam)


def _eval_lattice(case: Case, probe: Probe):
    fam = case.payload
    u = fam.universe
    ideals = enumerate_lattice_ideals(fam)
    got = sorted((sorted(I.members) for I in ideals))
    want = sorted(sorted(I) for I in oracle_lattice_ideals(fam))
    probe.check("lattice.oracle", None if got == want else {"enumerated": len(got), "oracle": len(want)})
    bad = next(({"ideal": _fam_labels(u, I.members)} for I in ideals if not is_lattice_ideal(fam, I.members)[0]), None)
    probe.check("lattice.valid", bad)
    bad = None
    for m in fam.members:
        covers = [I.members for I in ideals if m in I.members]
        if not covers:
            continue
        meet = frozenset.intersection(*covers)
        gen = generated_lattice_ideal(fam, [m]).members
        if gen != meet:
            bad = {"seed": u.labels(m), "generated": _fam_labels(u, gen), "meet": _fam_labels(u, meet)}
            break
    probe.check("lattice.generated_meet", bad)
    if fam.is_ring():
        sets = {I.members for I in ideals}
        bad = next(({"pair": [_fam_labels(u, a), _fam_labels(u, b)]} for a in sets for b in sets if a & b not in sets), None)
        probe.check("lattice.meet_closed", bad)


# -------------------------------------------------------------------- S6

S6_LAWS = (
    Law("s6.bounds", "published upper and lower bound table"),
    Law("s6.neighborhoods", "published neighborhood table, misprinted cells pinned to the computed value"),
    Law("s6.ideals_weak", "both published ideals are weak-mode sigma-ideals"),
    Law("s6.ideals_strict", "strict mode gives exactly the empty ideal and {f}"),
    Law("s6.oracle", "enumeration agrees with the blind 2^6 scan"),
    Law("s6.gosi_upper", "published upper approximation of {a,b}"),
    Law("s6.gosi_lower", "computed lower approximation of {a,b} under default conventions"),
    Law("s6.non_granular", "the lower approximation of {a,b} is no union of granules"),
)


def s6_structure(mode: str = sg.WEAK, allow_empty_ideal: bool = True) -> sg.SigmaStructure:
    return sg.SigmaStructure(wx.s6_relation(), mode, allow_empty_ideal)


def s6_granulation() -> ap.Granulation:
    return ap.Granulation.from_labels(wx.s6_universe(), wx.S6_GAMMA)


def _gen_s6(bounds: Bounds) -> Iterator[Case]:
    doc = wx.load_s6()
    yield Case(doc, None)


def _eval_s6(case: Case, probe: Probe):
    st = s6_structure()
    u = st.carrier
    bad = None
    for (x, y), (U, L) in wx.PUBLISHED_BOUNDS.items():
        xs = ("a", "b", "c", "e") if x == "*" else (x,)
        for xx in xs:
            got = (u.labels(sg.upper_bounds(st, xx, y)), u.labels(sg.lower_bounds(st, xx, y)))
            if got != (u.labels(u.mask(U)), u.labels(u.mask(L))):
                bad = {"pair": [xx, y], "computed": got, "published": [list(U), list(L)]}
    probe.check("s6.bounds", bad)
    from .universe import min_neighborhood
    table = {x: (sg.upper_bounds(st, x, x), sg.lower_bounds(st, x, x), min_neighborhood(st.sigma, x))
             for x in u.elements}
    bad = None
    for x, published in wx.PUBLISHED_NEIGHBORHOODS.items():
        for col, ref, got in zip(("U", "L", "min"), published, table[x]):
            expected = wx.NEIGHBORHOOD_MISPRINTS.get((x, col), ref)
            if got != u.mask(expected):
                bad = {"point": x, "column": col, "computed": u.labels(got), "expected": list(expected)}
    for d in wx.neighborhood_deviations(table, u):
        probe.deviation(d)
    probe.check("s6.neighborhoods", bad)
    weak = sg.enumerate_sigma_ideals(st)
    need = [u.mask(s) for s in wx.PUBLISHED_NONTRIVIAL_IDEALS]
    probe.check("s6.ideals_weak", None if all(I in weak for I in need) else {"ideals": sg.format_family(u, weak)})
    for d in wx.ideal_deviations(st, weak):
        probe.deviation(d)
    strict = s6_structure(sg.STRICT)
    sfam = sg.enumerate_sigma_ideals(strict)
    probe.check("s6.ideals_strict", None if sfam == [0, u.mask(["f"])] else {"ideals": sg.format_family(u, sfam)})
    for d in wx.ideal_deviations(strict, sfam):
        probe.deviation(d)
    oracle = oracle_enumerate_downclosed(st)
    ok = len(oracle) == 8 and weak == [K for K in oracle if oracle_is_ideal(st, K)]
    probe.check("s6.oracle", None if ok else {"down_closed": sg.format_family(u, oracle)})
    g = s6_granulation()
    A = u.mask(wx.PUBLISHED_GOSI["set"])
    r = ap.approx_gosi(st, g, A, weak)
    probe.check("s6.gosi_upper", None if r.upper == u.mask(wx.PUBLISHED_GOSI["upper"]) else {"upper": u.labels(r.upper)})
    probe.check("s6.gosi_lower", None if r.lower == A else {"lower": u.labels(r.lower)})
    for d in r.deviations:
        probe.deviation(d)
    probe.check("s6.non_granular", None if not ap.is_union_of_granules(g, r.lower) else {"lower": u.labels(r.lower)})


# ---------------------------------------------------------------- registry

def _suite(id_, laws, bounds, gen, ev, description) -> LawSuite:
    return LawSuite(id_, tuple(laws), bounds, gen, ev, description)


EXHAUSTIVE = Bounds(True)


def _registry() -> dict:
    return {
        "kappa": _suite("kappa", KAPPA_LAWS, EXHAUSTIVE, _gen_kappa, _eval_kappa,
                        "kappa approximations: 64 reflexive relations on 3 points, every power-set ideal"),
        "iad": _suite("iad", IAD_LAWS + IAD_RING_LAWS, EXHAUSTIVE, _gen_iad, _eval_iad,
                      "IAD approximations on the power set, with a search over proper rings"),
        "iasd": _suite("iasd", IASD_LAWS + IASD_SUB_LAWS, EXHAUSTIVE, _gen_iasd, _eval_iasd,
                       "IASD approximations on the power set, with a search over proper algebras"),
        "agreement": _suite("agreement", AGREEMENT_LAWS, Bounds(False, 0, 100), _gen_agreement, _eval_agreement,
                            "IASD and IAD coincide on the power-set algebra of 4 points"),
        "gosi": _suite("gosi", GOSI_LAWS, Bounds(False, 0, 1000), _gen_gosi, _eval_gosi,
                       "GOSI approximations on random relations and granulations up to 6 points"),
        "gosih": _suite("gosih", GOSIH_LAWS, Bounds(False, 0, 100), _gen_gosih, _eval_gosih,
                        "GOSIH approximations with inclusion on the power set of up to 4 points"),
        "strong": _suite("strong", STRONG_LAWS, Bounds(False, 0, 100), _gen_strong, _eval_strong,
                         "strong approximations on supremal relations"),
        "antichain": _suite("antichain", ANTICHAIN_LAWS, Bounds(False, 0, 100), _gen_antichain, _eval_antichain,
                            "antichain approximations against the GOSI ones"),
        "mereo": _suite("mereo", MEREO_LAWS, EXHAUSTIVE, _gen_mereo, _eval_mereo,
                        "discrete contact models up to 4 points with every proper set of actual points"),
        "sigma": _suite("sigma", SIGMA_LAWS, EXHAUSTIVE, _gen_sigma, _eval_sigma,
                        "sigma-ideal propositions over all relations on 3 points"),
        "neighborhoods": _suite("neighborhoods", NEIGHBORHOOD_LAWS, EXHAUSTIVE, _gen_neighborhoods, _eval_neighborhoods,
                                "minimal neighborhood laws over all relations on 3 points"),
        "lattice": _suite("lattice", LATTICE_LAWS, EXHAUSTIVE, _gen_lattice, _eval_lattice,
                          "lattice-ideal enumeration on families over 3 points"),
        "s6": _suite("s6", S6_LAWS, EXHAUSTIVE, _gen_s6, _eval_s6, "the published six-point example"),
    }


SUITES = _registry()


def get_suite(suite_id: str, bounds: Optional[Bounds] = None) -> LawSuite:
    if suite_id not in SUITES:
        raise InvalidStructureError(f"unknown suite {suite_id!r}; known suites: {sorted(SUITES)}")
    suite = SUITES[suite_id]
    return suite if bounds is None else suite.with_bounds(bounds)


def empty_suite(suite_id: str = "empty") -> LawSuite:
    return LawSuite(suite_id, (), EXHAUSTIVE, lambda b: iter(()), lambda c, p: None)
