"""Point-wise and co-granular approximation operators.

Every operator has the same shape: a point ``x`` enters the lower
approximation of ``A`` when it lies in ``A`` and its granule minus ``A`` passes
an ideal test, and it enters the upper approximation when it lies in ``A`` or
its granule inside ``A`` fails the test.  What changes between operators is
the granule (minimal neighborhood or an explicit map) and the ideal test.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Optional, Sequence

from . import sigma as sg
from .errors import GuardExceededError, InvalidStructureError, UndefinedApproximationError
from .lattice_ideals import LatticeIdeal, SubsetFamily, is_prime_lattice_ideal
from .universe import (
    EMPTY_MEET_EMPTY,
    BinaryRelation,
    Universe,
    is_reflexive,
    is_subset,
    is_transitive,
    min_neighborhoods,
)
from .worked_examples import gosi_deviations

TAGS = (
    "kappa",
    "iad",
    "iad_prime",
    "iasd",
    "gosi",
    "gosih",
    "strong",
    "antichain",
    "mereo_cg",
    "mereo_g",
    "mereo_clan",
)


@dataclass(frozen=True)
class Granulation:
    universe: Universe
    gamma: tuple

    def __post_init__(self):
        gamma = tuple(self.gamma)
        if len(gamma) != self.universe.n:
            raise InvalidStructureError(
                f"granulation gives {len(gamma)} granules for {self.universe.n} points"
            )
        for g in gamma:
            if g < 0 or g & ~self.universe.full:
                raise InvalidStructureError(f"granule {g:#x} lies outside the universe")
        object.__setattr__(self, "gamma", gamma)

    @classmethod
    def from_labels(cls, universe: Universe, mapping: dict) -> "Granulation":
        missing = [x for x in universe.elements if x not in mapping]
        if missing:
            raise InvalidStructureError(f"granulation is not total; no granule for {missing}")
        extra = [x for x in mapping if x not in universe.rank]
        if extra:
            raise InvalidStructureError(f"granulation mentions unknown points {extra}")
        return cls(universe, tuple(universe.mask(mapping[x]) for x in universe.elements))

    @property
    def covers(self) -> bool:
        acc = 0
        for g in self.gamma:
            acc |= g
        return acc == self.universe.full

    @property
    def reflexive(self) -> bool:
        return all(g >> i & 1 for i, g in enumerate(self.gamma))

    @property
    def granules(self) -> list[int]:
        return sorted(set(self.gamma))

    def to_labels(self) -> dict:
        u = self.universe
        return {x: u.labels(g) for x, g in zip(u.elements, self.gamma)}


class Trace(NamedTuple):
    """How one point was decided.

    ``lower_set`` is ``None`` for points outside the approximated set, which
    never reach the lower test.
    """

    element: int
    lower_set: Optional[int]
    lower_in: Optional[bool]
    upper_set: int
    upper_in: bool
    note: str = ""


@dataclass(frozen=True)
class ApproxResult:
    universe: Universe
    tag: str
    target: int
    lower: int
    upper: int
    provenance: tuple = ()
    deviations: tuple = field(default=(), compare=False)
    options: tuple = field(default=(), compare=False)

    def to_json(self) -> dict:
        u = self.universe
        prov = []
        for t in self.provenance:
            rec = {"element": u.elements[t.element]}
            if t.lower_set is not None:
                rec["lower_test"] = {"set": u.labels(t.lower_set), "in_ideal": t.lower_in}
            rec["upper_test"] = {"set": u.labels(t.upper_set), "in_ideal": t.upper_in}
            rec["in_lower"] = bool(self.lower >> t.element & 1)
            rec["in_upper"] = bool(self.upper >> t.element & 1)
            if t.note:
                rec["note"] = t.note
            prov.append(rec)
        return {
            "op": self.tag,
            "set": u.labels(self.target),
            "options": dict(self.options),
            "lower": u.labels(self.lower),
            "upper": u.labels(self.upper),
            "provenance": prov,
            "deviations": list(self.deviations),
        }


def _check_inclusion(result: ApproxResult) -> ApproxResult:
    if not (is_subset(result.lower, result.target) and is_subset(result.target, result.upper)):
        raise AssertionError(f"{result.tag}: inclusion law violated for {result.universe.format(result.target)}")
    return result


def cogranular(
    universe: Universe,
    granules: Sequence[int],
    A: int,
    in_ideal: Callable[[int], bool],
    tag: str,
    note: Callable[[int], str] = None,
    options: tuple = (),
) -> ApproxResult:
    """Shared core of every point-wise operator.

    ``lower = {x in A : in_ideal(g(x) - A)}`` and
    ``upper = {x : not in_ideal(g(x) & A)} | A``; the union with ``A`` is
    applied after the point test.
    """
    if A < 0 or A & ~universe.full:
        raise InvalidStructureError(f"set {A:#x} lies outside the universe")
    lower = upper = 0
    trace = []
    for x, g in enumerate(granules):
        xb = 1 << x
        if A & xb:
            ls = g & ~A
            lin = in_ideal(ls)
            if lin:
                lower |= xb
        else:
            ls = lin = None
        us = g & A
        uin = in_ideal(us)
        if not uin:
            upper |= xb
        n = ""
        if note is not None:
            n = note(ls) if ls is not None else ""
            un = note(us)
            if un and un not in n:
                n = f"{n}; {un}" if n else un
        trace.append(Trace(x, ls, lin, us, uin, n))
    upper |= A
    return _check_inclusion(ApproxResult(universe, tag, A, lower, upper, tuple(trace), options=options))


def _require_powerset_ideal(R: BinaryRelation, ideal: LatticeIdeal):
    amb = ideal.ambient
    if amb.universe != R.universe:
        raise InvalidStructureError("the ideal and the relation live on different universes")
    if len(amb) != 1 << R.universe.n:
        raise InvalidStructureError("this operator needs an ideal of the full power set")


def approx_kappa(R: BinaryRelation, ideal: LatticeIdeal, A: int, empty_meet: str = EMPTY_MEET_EMPTY) -> ApproxResult:
    """Minimal-neighborhood approximation by an ideal of the power set; R must be reflexive."""
    if not is_reflexive(R):
        raise InvalidStructureError("the kappa approximations need a reflexive relation")
    _require_powerset_ideal(R, ideal)
    mins = min_neighborhoods(R, empty_meet)
    members = ideal.members
    return cogranular(R.universe, mins, A, members.__contains__, "kappa")


def _ring_test(ring: SubsetFamily, ideal: LatticeIdeal):
    members = ideal.members

    def in_ideal(m: int) -> bool:
        return m in members

    def note(m: int) -> str:
        return "" if m in ring else "tested set outside the ring; counted as not in the ideal"

    return in_ideal, note


def approx_iad(
    R: BinaryRelation,
    ring: SubsetFamily,
    ideal: LatticeIdeal,
    A: int,
    prime: bool = False,
    empty_meet: str = EMPTY_MEET_EMPTY,
) -> ApproxResult:
    """Ideal approximations over a ring of sets; ``prime=True`` requires a prime ideal."""
    if not is_reflexive(R):
        raise InvalidStructureError("the IAD approximations need a reflexive relation")
    if ideal.ambient != ring:
        raise InvalidStructureError("the ideal is not an ideal of the given ring")
    if not ring.is_ring():
        raise InvalidStructureError("the family is not closed under union and intersection")
    if prime:
        ok, witness = is_prime_lattice_ideal(ring, ideal)
        if not ok:
            raise InvalidStructureError(f"the ideal is not prime: {witness}")
    in_ideal, note = _ring_test(ring, ideal)
    mins = min_neighborhoods(R, empty_meet)
    return cogranular(R.universe, mins, A, in_ideal, "iad_prime" if prime else "iad", note)


def approx_iasd(
    R: BinaryRelation,
    algebra: SubsetFamily,
    ideal: LatticeIdeal,
    A: int,
    empty_meet: str = EMPTY_MEET_EMPTY,
) -> ApproxResult:
    """Set-difference variant: the lower test uses ``<a> - A`` and needs no complement."""
    if not is_reflexive(R):
        raise InvalidStructureError("the IASD approximations need a reflexive relation")
    if ideal.ambient != algebra:
        raise InvalidStructureError("the ideal is not an ideal of the given algebra")
    if not algebra.is_ring() or not algebra.closed_under_difference():
        raise InvalidStructureError("the family is not closed under union, intersection and difference")
    if A not in algebra:
        raise InvalidStructureError(f"{R.universe.format(A)} is not a member of the algebra")
    in_ideal, note = _ring_test(algebra, ideal)
    u = R.universe
    mins = min_neighborhoods(R, empty_meet)
    lower = upper = 0
    trace = []
    for x, g in enumerate(mins):
        xb = 1 << x
        if A & xb:
            ls = g - (g & A)  # relative difference, computed without a complement
            lin = in_ideal(ls)
            if lin:
                lower |= xb
        else:
            ls = lin = None
        us = g & A
        uin = in_ideal(us)
        if not uin:
            upper |= xb
        trace.append(Trace(x, ls, lin, us, uin, note(ls) if ls is not None else ""))
    return _check_inclusion(ApproxResult(u, "iasd", A, lower, upper | A, tuple(trace)))


def _check_granulation(structure: sg.SigmaStructure, gran: Granulation):
    if gran.universe != structure.carrier:
        raise InvalidStructureError("the granulation and sigma live on different universes")


def approx_gosi(
    structure: sg.SigmaStructure,
    gran: Granulation,
    A: int,
    family: Optional[Sequence[int]] = None,
) -> ApproxResult:
    """``*``-approximations: granule tests against the whole family of sigma-ideals.

    Membership is decided by the ideal predicate; when ``family`` (the
    enumerated ideals) is given the two routes are cross-checked.
    """
    _check_granulation(structure, gran)
    fam = None if family is None else frozenset(family)

    def in_ideal(m: int) -> bool:
        verdict = sg.is_sigma_ideal(structure, m)
        if fam is not None and verdict != (m in fam):
            raise AssertionError("predicate and enumerated family disagree on ideal membership")
        return verdict

    res = cogranular(gran.universe, gran.gamma, A, in_ideal, "gosi", options=tuple(structure.options().items()))
    devs = gosi_deviations(structure, gran, A, res)
    if devs:
        res = ApproxResult(res.universe, res.tag, res.target, res.lower, res.upper, res.provenance, tuple(devs), res.options)
    return res


def approx_gosih(
    structure: sg.SigmaStructure,
    base: Universe,
    gran: Granulation,
    fixed_ideal: int,
    A: int,
) -> ApproxResult:
    """o-approximations with sigma on the power set of ``base``.

    ``structure`` is a sigma-structure whose carrier element of rank ``m`` is
    the subset of ``base`` with mask ``m`` (see :func:`powerset_structure`);
    ``fixed_ideal`` is a mask over that carrier.
    """
    if structure.carrier.n != 1 << base.n:
        raise InvalidStructureError("the sigma-structure is not indexed by the power set of the base universe")
    if gran.universe != base:
        raise InvalidStructureError("the granulation lives on a different universe")
    check = sg.check_sigma_ideal(structure, fixed_ideal)
    if not check:
        raise InvalidStructureError(f"the fixed family is not a sigma-ideal of the power set: {check.describe(structure.carrier)}")

    def in_ideal(m: int) -> bool:
        return bool(fixed_ideal >> m & 1)

    return cogranular(base, gran.gamma, A, in_ideal, "gosih", options=tuple(structure.options().items()))


def powerset_labels(base: Universe) -> tuple[str, ...]:
    return tuple(base.format(m) for m in base.all_subsets())


def powerset_structure(
    base: Universe,
    relation: Optional[Callable[[int, int], bool]] = None,
    mode: str = sg.WEAK,
    allow_empty_ideal: bool = True,
) -> sg.SigmaStructure:
    """Sigma-structure on the power set of ``base``; the default relation is inclusion."""
    carrier = Universe(powerset_labels(base))
    if relation is None:
        relation = is_subset
    pairs = frozenset((a, b) for a in base.all_subsets() for b in base.all_subsets() if relation(a, b))
    return sg.SigmaStructure(BinaryRelation(carrier, pairs), mode, allow_empty_ideal)


def family_mask(members) -> int:
    """Pack a family of subset masks into a mask over the power-set carrier."""
    acc = 0
    for m in members:
        acc |= 1 << m
    return acc


def gosih_hypotheses(structure: sg.SigmaStructure, gran: Granulation) -> dict:
    sup, _ = sg.is_supremal(structure)
    R = structure.sigma
    return {
        "supremal": sup is not None,
        "quasi_order": is_reflexive(R) and is_transitive(R),
        "granules_contain_points": gran.reflexive,
    }


@dataclass
class ParallelContext:
    """Caches the ideal family and supremum data shared by mu and upsilon."""

    structure: sg.SigmaStructure
    family: list = field(default=None)
    supremal: Optional[sg.Supremal] = field(default=None)

    def __post_init__(self):
        if self.family is None:
            self.family = sg.enumerate_sigma_ideals(self.structure)
        self.supremal, _ = sg.is_supremal(self.structure)

    def mu(self, B: int) -> list[int]:
        return sg.maximal_ideals_within(self.structure, B, self.family)

    def upsilon(self, B: int) -> tuple[int, str]:
        """Least ideal containing ``B`` plus a note.

        For supremal sigma, when no ideal contains ``B`` the generated closure
        is the whole carrier and is returned with note ``"carrier"``.
        """
        least = sg.least_ideal_containing(self.structure, B, self.family)
        if least.exists:
            return least.ideal, ""
        if self.supremal is not None and B:
            closure = sg.sigma_closure(self.structure, B, self.supremal)
            if closure == self.structure.carrier.full:
                return closure, "carrier"
        u = self.structure.carrier
        covers = [u.labels(K) for K in least.minimal_covers]
        raise UndefinedApproximationError(
            f"no least sigma-ideal contains {u.format(B)}; minimal covers: {covers}"
        )


def approx_strong(
    structure: sg.SigmaStructure,
    gran: Granulation,
    A: int,
    ctx: Optional[ParallelContext] = None,
) -> ApproxResult:
    """Strong approximations built from the parallel approximations mu and upsilon.

    A point of ``A`` enters the lower approximation when a nonempty sigma-ideal
    fits inside its granule minus ``A``, or when that set is empty and the
    empty ideal is admitted.  A point enters the upper approximation when its
    granule inside ``A`` is strictly smaller than its upsilon.
    """
    _check_granulation(structure, gran)
    if ctx is None:
        ctx = ParallelContext(structure)
    u = gran.universe
    empty_ok = structure.allow_empty_ideal
    lower = upper = 0
    trace = []
    for x, g in enumerate(gran.gamma):
        xb = 1 << x
        note = ""
        if A & xb:
            ls = g & ~A
            if ls == 0:
                lin = empty_ok
                note = "empty tested set"
            else:
                lin = any(K for K in ctx.mu(ls))
            if lin:
                lower |= xb
        else:
            ls = lin = None
        us = g & A
        ups, unote = ctx.upsilon(us)
        strictly_inside = us != ups and is_subset(us, ups)
        if strictly_inside:
            upper |= xb
        if unote:
            note = f"{note}; upsilon is the whole carrier" if note else "upsilon is the whole carrier"
        trace.append(Trace(x, ls, lin, us, not strictly_inside, note))
    return _check_inclusion(ApproxResult(u, "strong", A, lower, upper | A, tuple(trace), options=tuple(structure.options().items())))


@dataclass(frozen=True)
class AntichainSplit:
    plus: tuple
    minus: tuple


def antichain_split(family: Sequence[int], antichain: Sequence[int]) -> AntichainSplit:
    """Split the ideal family into the ideals above some antichain member and the rest."""
    fam = set(family)
    for c in antichain:
        if c not in fam:
            raise InvalidStructureError(f"antichain member {c:#x} is not a sigma-ideal")
    ac = list(antichain)
    for i, c in enumerate(ac):
        for d in ac[i + 1:]:
            if is_subset(c, d) or is_subset(d, c):
                raise InvalidStructureError("the given family is not an antichain")
    plus = tuple(B for B in family if any(is_subset(C, B) for C in ac))
    minus = tuple(B for B in family if B not in set(plus))
    return AntichainSplit(plus, minus)


def approx_antichain(
    structure: sg.SigmaStructure,
    gran: Granulation,
    antichain: Sequence[int],
    A: int,
    family: Optional[Sequence[int]] = None,
) -> ApproxResult:
    _check_granulation(structure, gran)
    if family is None:
        family = sg.enumerate_sigma_ideals(structure)
    split = antichain_split(family, antichain)
    minus = frozenset(split.minus)
    return cogranular(gran.universe, gran.gamma, A, minus.__contains__, "antichain", options=tuple(structure.options().items()))


@dataclass(frozen=True)
class RoughOrder:
    tag: str
    sets: tuple
    below: tuple
    equal: tuple
    classes: tuple


def rough_compare(results: Sequence[tuple[int, ApproxResult]]) -> RoughOrder:
    """Rough inclusion and rough equality over a list of approximated sets."""
    tags = {r.tag for _, r in results}
    if len(tags) > 1:
        raise InvalidStructureError(f"cannot compare results of different operators: {sorted(tags)}")
    tag = tags.pop() if tags else ""
    k = len(results)
    below = tuple(
        tuple(
            is_subset(results[i][1].lower, results[j][1].lower)
            and is_subset(results[i][1].upper, results[j][1].upper)
            for j in range(k)
        )
        for i in range(k)
    )
    equal = tuple(tuple(below[i][j] and below[j][i] for j in range(k)) for i in range(k))
    classes = []
    seen = set()
    for i in range(k):
        if i in seen:
            continue
        cls = tuple(j for j in range(k) if equal[i][j])
        seen.update(cls)
        classes.append(cls)
    return RoughOrder(tag, tuple(A for A, _ in results), below, equal, tuple(classes))


def definite_sets_topology(R: BinaryRelation, ideal: LatticeIdeal, empty_meet: str = EMPTY_MEET_EMPTY) -> dict:
    """Collect the fixpoints of the kappa lower approximation and check they form a topology."""
    n = R.universe.n
    if n > 5:
        raise GuardExceededError(f"the power-set sweep is capped at 5 points, got {n}")
    full = R.universe.full
    fix = [A for A in R.universe.all_subsets() if approx_kappa(R, ideal, A, empty_meet).lower == A]
    fs = set(fix)
    violations = []
    if 0 not in fs:
        violations.append({"law": "empty-set"})
    if full not in fs:
        violations.append({"law": "whole-set"})
    for i, a in enumerate(fix):
        for b in fix[i:]:
            if a | b not in fs:
                violations.append({"law": "union", "pair": [a, b]})
            if a & b not in fs:
                violations.append({"law": "intersection", "pair": [a, b]})
    return {"open_sets": fix, "violations": violations, "is_topology": not violations}


def granular_unions(gran: Granulation) -> set[int]:
    """Every union of granules (the empty union included)."""
    reach = {0}
    for g in gran.granules:
        reach |= {r | g for r in reach}
    return reach


def is_union_of_granules(gran: Granulation, X: int) -> bool:
    acc = 0
    for g in gran.granules:
        if is_subset(g, X):
            acc |= g
    return acc == X


def point_granulation(R: BinaryRelation, empty_meet: str = EMPTY_MEET_EMPTY) -> Granulation:
    """Granulation by minimal neighborhoods."""
    return Granulation(R.universe, min_neighborhoods(R, empty_meet))

