"""Contact structures on discrete spaces with actual points, clans and CG/G/Clan approximations.

Regions are the subsets of the point universe ``X``; a region is identified
by its mask, so the regions are the integers ``0 .. 2**n - 1``.  A family of
regions (filter, grill, clan, ideal) is itself a mask with one bit per region.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from . import laws as lw
from .approx import ApproxResult, Granulation, Trace, cogranular
from .errors import GuardExceededError, InvalidStructureError
from .universe import EMPTY_MEET_EMPTY, BinaryRelation, Universe, bits, is_subset, min_neighborhoods

MAX_ULTRAFILTERS = 12
MAX_POINTS = 6


def regions(n: int) -> range:
    return range(1 << n)


def family_members(fam: int) -> list[int]:
    return list(bits(fam))


def family_of(members) -> int:
    acc = 0
    for m in members:
        acc |= 1 << m
    return acc


@dataclass(frozen=True)
class DiscreteSpace:
    universe: Universe
    actual: int

    def __post_init__(self):
        if not (0 < self.actual < self.universe.full) or self.actual & ~self.universe.full:
            raise InvalidStructureError("actual points must form a nonempty proper subset of the space")

    @classmethod
    def from_labels(cls, universe: Universe, actual) -> "DiscreteSpace":
        return cls(universe, universe.mask(actual))


@dataclass(frozen=True)
class ContactStructure:
    """Power-set algebra of ``universe`` with contact, actual contact and actual existence.

    ``contact[h]`` and ``actual_contact[h]`` are region families: the regions
    in (actual) contact with region ``h``.  ``existence`` is the family of
    actually existing regions.
    """

    universe: Universe
    contact: tuple
    actual_contact: Optional[tuple] = None
    existence: Optional[int] = None
    actual_points: Optional[int] = None

    def __post_init__(self):
        if self.universe.n > MAX_POINTS:
            raise GuardExceededError(f"contact structures are capped at {MAX_POINTS} points")
        size = 1 << self.universe.n
        if len(self.contact) != size or (self.actual_contact is not None and len(self.actual_contact) != size):
            raise InvalidStructureError("contact relations need one row per region")

    @property
    def n_regions(self) -> int:
        return 1 << self.universe.n

    def C(self, h: int, f: int) -> bool:
        return bool(self.contact[h] >> f & 1)

    def Ca(self, h: int, f: int) -> bool:
        return bool(self.actual_contact[h] >> f & 1)

    def AE(self, h: int) -> bool:
        return bool(self.existence >> h & 1)


def build_discrete_contact(space: DiscreteSpace) -> ContactStructure:
    """Overlap contact, actual contact through actual points, and existence as meeting them."""
    u = space.universe
    xa = space.actual
    rs = regions(u.n)
    contact = tuple(family_of(f for f in rs if h & f) for h in rs)
    actual = tuple(family_of(f for f in rs if h & f & xa) for h in rs)
    existence = family_of(h for h in rs if h & xa)
    return ContactStructure(u, contact, actual, existence, xa)


def _fmt(u: Universe, *rs) -> list:
    return [u.labels(r) for r in rs]


def check_contact_axioms(s: ContactStructure) -> dict:
    u = s.universe
    rs = list(regions(u.n))
    C = s.C
    res = {"C1": None, "C2": None, "C3": None, "C4": None, "C5": None, "join": None, "transfer": None}
    for a in rs:
        for b in rs:
            cab = C(a, b)
            if res["C1"] is None and cab and (a == 0 or b == 0):
                res["C1"] = {"regions": _fmt(u, a, b)}
            if res["C2"] is None and cab and not C(b, a):
                res["C2"] = {"regions": _fmt(u, a, b)}
            if res["C5"] is None and a & b and not cab:
                res["C5"] = {"regions": _fmt(u, a, b)}
            for e in rs:
                if res["C3"] is None and cab and is_subset(b, e) and not C(a, e):
                    res["C3"] = {"regions": _fmt(u, a, b, e)}
                if res["C4"] is None and C(a, b | e) and not (cab or C(a, e)):
                    res["C4"] = {"regions": _fmt(u, a, b, e)}
                if res["join"] is None and C(a | b, e) != (C(a, e) or C(b, e)):
                    res["join"] = {"regions": _fmt(u, a, b, e)}
    for a in rs:
        for b in rs:
            if not C(a, b):
                continue
            for x in rs:
                if not is_subset(a, x):
                    continue
                for y in rs:
                    if is_subset(b, y) and not C(x, y):
                        if res["transfer"] is None:
                            res["transfer"] = {"regions": _fmt(u, a, b, x, y)}
    return res


def check_actual_contact_axioms(s: ContactStructure, ca1_literal: bool = False) -> dict:
    if s.actual_contact is None:
        raise InvalidStructureError("the structure has no actual contact relation")
    u = s.universe
    rs = list(regions(u.n))
    top = u.full
    Ca = s.Ca
    res = {"Ca1": None, "Ca2": None, "Ca3": None, "Ca4": None, "Ca5": None}
    bottom_ok = Ca(0, 0) if ca1_literal else not Ca(0, 0)
    if not (Ca(top, top) and bottom_ok):
        res["Ca1"] = {"top_top": Ca(top, top), "bottom_bottom": Ca(0, 0), "literal": ca1_literal}
    for x in rs:
        for b in rs:
            cxb = Ca(x, b)
            if res["Ca2"] is None and cxb and not Ca(b, x):
                res["Ca2"] = {"regions": _fmt(u, x, b)}
            if res["Ca3"] is None and cxb and not Ca(x, x):
                res["Ca3"] = {"regions": _fmt(u, x, b)}
            for e in rs:
                if res["Ca4"] is None and cxb and is_subset(b, e) and not Ca(x, e):
                    res["Ca4"] = {"regions": _fmt(u, x, b, e)}
                if res["Ca5"] is None and Ca(x, b | e) and not (cxb or Ca(x, e)):
                    res["Ca5"] = {"regions": _fmt(u, x, b, e)}
    return res


def check_existence_axioms(s: ContactStructure) -> dict:
    if s.existence is None:
        raise InvalidStructureError("the structure has no actual existence predicate")
    return grill_violations(s.universe.n, s.existence, names=("AE1", "AE2", "AE3"))


def grill_violations(n: int, fam: int, names=("top-bottom", "upward", "join-prime")) -> dict:
    """Grill laws for a region family: contains top and not bottom, upward closed, prime on joins."""
    top = (1 << n) - 1
    rs = list(regions(n))
    inside = lambda h: bool(fam >> h & 1)  # noqa: E731
    res = dict.fromkeys(names)
    if not inside(top) or inside(0):
        res[names[0]] = {"has_top": inside(top), "has_bottom": inside(0)}
    for a in rs:
        for b in rs:
            if res[names[1]] is None and inside(a) and is_subset(a, b) and not inside(b):
                res[names[1]] = {"regions": [a, b]}
            if res[names[2]] is None and inside(a | b) and not (inside(a) or inside(b)):
                res[names[2]] = {"regions": [a, b]}
    return res


def is_grill(n: int, fam: int) -> bool:
    return all(v is None for v in grill_violations(n, fam).values())


def is_filter(n: int, fam: int) -> bool:
    rs = list(regions(n))
    if not fam >> ((1 << n) - 1) & 1 or fam & 1:
        return False
    members = family_members(fam)
    for a in members:
        for b in rs:
            if is_subset(a, b) and not fam >> b & 1:
                return False
        for b in members:
            if not fam >> (a & b) & 1:
                return False
    return True


def is_ultrafilter(n: int, fam: int) -> bool:
    top = (1 << n) - 1
    return is_filter(n, fam) and all(fam >> h & 1 or fam >> (top & ~h) & 1 for h in regions(n))


def check_axioms(s: ContactStructure, block: str, ca1_literal: bool = False) -> dict:
    """Axiom report for ``block`` in ``{"C", "Ca", "AE"}``; values are witnesses or ``None``."""
    if block == "C":
        return check_contact_axioms(s)
    if block == "Ca":
        return check_actual_contact_axioms(s, ca1_literal)
    if block == "AE":
        return check_existence_axioms(s)
    raise ValueError(f"unknown axiom block {block!r}")


def ultrafilters(s: ContactStructure) -> list[int]:
    """One principal ultrafilter per point, in point order."""
    n = s.universe.n
    ufs = [family_of(h for h in regions(n) if h >> x & 1) for x in range(n)]
    for F in ufs:
        if not is_ultrafilter(n, F):
            raise AssertionError("principal family failed the ultrafilter test")
    return ufs


@dataclass(frozen=True)
class CanonicalRelations:
    ultrafilters: tuple
    R: BinaryRelation
    Ra: BinaryRelation
    reflexive: tuple
    union_law_holds: bool


def _canonical(rows, U: int, V: int) -> bool:
    for x in bits(U):
        if V & ~rows[x]:
            return False
    return True


def canonical_relations(s: ContactStructure) -> CanonicalRelations:
    ufs = ultrafilters(s)
    labels = Universe(tuple(f"U_{x}" for x in s.universe.elements))
    k = len(ufs)
    R = frozenset((i, j) for i in range(k) for j in range(k) if _canonical(s.contact, ufs[i], ufs[j]))
    Ra = frozenset((i, j) for i in range(k) for j in range(k) if _canonical(s.actual_contact, ufs[i], ufs[j]))
    law = all(((i, j) in R) == ((i, j) in Ra or i == j) for i in range(k) for j in range(k))
    refl = tuple(i for i in range(k) if (i, i) in Ra)
    return CanonicalRelations(tuple(ufs), BinaryRelation(labels, R), BinaryRelation(labels, Ra), refl, law)


CLAN = "clan"
ACTUAL = "actual"


@dataclass(frozen=True)
class Clan:
    members: int
    kind: str
    ultrafilters: tuple

    def __contains__(self, region: int) -> bool:
        return bool(self.members >> region & 1)

    def regions(self) -> list[int]:
        return family_members(self.members)

    def to_labels(self, u: Universe) -> list[list[str]]:
        return [u.labels(h) for h in self.regions()]


def is_clan(s: ContactStructure, fam: int, kind: str = CLAN) -> bool:
    if not is_grill(s.universe.n, fam):
        return False
    rows = s.contact if kind == CLAN else s.actual_contact
    return all(is_subset(fam, rows[h]) for h in bits(fam))


def clans(s: ContactStructure, kind: str = CLAN) -> list[Clan]:
    """Clans (or actual clans) as unions of mutually related ultrafilters.

    Every candidate union is re-validated against the grill laws and the
    pairwise contact clause; for ``kind="actual"`` the result is also checked
    to be contained in the plain clan list.
    """
    canon = canonical_relations(s)
    ufs = canon.ultrafilters
    k = len(ufs)
    if k > MAX_ULTRAFILTERS:
        raise GuardExceededError(f"{k} ultrafilters; clan enumeration is capped at {MAX_ULTRAFILTERS}")
    rel = canon.R if kind == CLAN else canon.Ra
    found = {}
    for sel in range(1, 1 << k):
        idx = list(bits(sel))
        if not all(rel.holds(i, j) for i in idx for j in idx):
            continue
        fam = 0
        for i in idx:
            fam |= ufs[i]
        if fam not in found and is_clan(s, fam, kind):
            found[fam] = tuple(idx)
    out = [Clan(fam, kind, found[fam]) for fam in sorted(found, key=lambda f: family_members(f))]
    if kind == ACTUAL:
        plain = {c.members for c in clans(s, CLAN)}
        if any(c.members not in plain for c in out):
            raise AssertionError("an actual clan is not a clan")
    return out


def point_actual_relation(s: ContactStructure) -> BinaryRelation:
    """Actual contact between singleton regions, as a relation on points."""
    n = s.universe.n
    return BinaryRelation(
        s.universe,
        frozenset((x, y) for x in range(n) for y in range(n) if s.Ca(1 << x, 1 << y)),
    )


MIN = "min"
CA = "ca"
SCHEMES = ("CG", "G", "Clan")


def mereo_granules(
    s: ContactStructure,
    gamma: Union[str, Granulation] = MIN,
    relation: Optional[BinaryRelation] = None,
    empty_meet: str = EMPTY_MEET_EMPTY,
) -> tuple:
    """Granules for the approximations.

    ``"min"`` uses minimal neighborhoods of ``relation`` (default: point-level
    actual contact); ``"ca"`` uses ``[x] = {b : C^a b x}`` at the point level;
    an explicit :class:`Granulation` must map into the actual points.
    """
    if isinstance(gamma, Granulation):
        if gamma.universe != s.universe:
            raise InvalidStructureError("the granulation lives on a different universe")
        if s.actual_points is not None and any(g & ~s.actual_points for g in gamma.gamma):
            raise InvalidStructureError("explicit granules must consist of actual points")
        return gamma.gamma
    if gamma == MIN:
        rel = relation if relation is not None else point_actual_relation(s)
        if rel.universe != s.universe:
            raise InvalidStructureError("the neighborhood relation lives on a different universe")
        return min_neighborhoods(rel, empty_meet)
    if gamma == CA:
        return point_actual_relation(s).in_
    raise ValueError(f"unknown granule choice {gamma!r}")


def _require_actual_clan(s: ContactStructure, K: Clan):
    if K.kind != ACTUAL or not is_clan(s, K.members, ACTUAL):
        raise InvalidStructureError("the fixed family is not an actual clan")


def mereo_approx(
    s: ContactStructure,
    K: Clan,
    A: int,
    scheme: str = "CG",
    gamma: Union[str, Granulation] = MIN,
    relation: Optional[BinaryRelation] = None,
    empty_meet: str = EMPTY_MEET_EMPTY,
    clan_list: Optional[list] = None,
) -> ApproxResult:
    """CG, G or Clan approximations of ``A`` for a fixed actual clan ``K``.

    Membership "in K" is membership of a region in the clan family.  For the
    Clan scheme the regions ``H`` range over members of the structure's clans.
    """
    _require_actual_clan(s, K)
    u = s.universe
    if scheme not in SCHEMES:
        raise ValueError(f"scheme must be one of {SCHEMES}, not {scheme!r}")
    full = u.full
    comp = full & ~A

    def outside_K(h: int) -> bool:
        return not K.members >> h & 1

    if scheme == "CG":
        g = mereo_granules(s, gamma, relation, empty_meet)
        return cogranular(u, g, A, outside_K, "mereo_cg")
    if scheme == "G":
        g = mereo_granules(s, gamma, relation, empty_meet)
        lo = up = 0
        trace = []
        for x, gx in enumerate(g):
            ls, us = gx & comp, gx & A
            lin, uin = outside_K(ls), outside_K(us)
            if lin:
                lo |= gx
            if not uin:
                up |= gx
            trace.append(Trace(x, ls, lin, us, uin))
        return ApproxResult(u, "mereo_g", A, lo & A, up | A, tuple(trace))
    if clan_list is None:
        clan_list = clans(s, CLAN)
    hs = 0
    for c in clan_list:
        hs |= c.members
    lo = up = 0
    for h in bits(hs):
        if outside_K(h & comp):
            lo |= h
        if K.members >> h & 1 and h & A:
            up |= h
    return ApproxResult(u, "mereo_clan", A, lo & A, up | A, ())


def inverse_problem_laws(universe: Universe, lower_map, upper_map) -> dict:
    """Check the five listed laws for extensionally given maps; no representation is attempted.

    ``lower_map``/``upper_map`` are sequences or dicts indexed by subset mask.
    """
    size = 1 << universe.n
    try:
        lo = tuple(lower_map[A] for A in range(size))
        up = tuple(upper_map[A] for A in range(size))
    except (KeyError, IndexError):
        raise InvalidStructureError("the maps must be defined on every subset") from None
    pair = lw.MapPair(universe, lo, up, tuple(range(size)))
    report = {}
    for name, group in lw.INVERSE_PROBLEM.items():
        witness = lw.first_failure(pair, group)
        report[name] = {"ok": witness is None, "witness": witness}
    return report
