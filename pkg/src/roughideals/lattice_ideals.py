"""Lattice ideals of explicit families of subsets ordered by inclusion."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import GuardExceededError, InvalidStructureError
from .universe import Universe, bits, canonical_key, is_subset

MAX_ENUMERATED_AMBIENT = 24


@dataclass(frozen=True)
class SubsetFamily:
    """A deduplicated family of subsets of ``universe``, kept in canonical order."""

    universe: Universe
    members: tuple
    index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        full = self.universe.full
        uniq = sorted(set(self.members), key=canonical_key)
        for m in uniq:
            if m < 0 or m & ~full:
                raise InvalidStructureError(f"family member {m:#x} lies outside the universe")
        object.__setattr__(self, "members", tuple(uniq))
        object.__setattr__(self, "index", {m: i for i, m in enumerate(uniq)})

    @classmethod
    def powerset(cls, universe: Universe) -> "SubsetFamily":
        return cls(universe, tuple(universe.all_subsets()))

    @classmethod
    def from_labels(cls, universe: Universe, sets: Iterable[Iterable[str]]) -> "SubsetFamily":
        return cls(universe, tuple(universe.mask(s) for s in sets))

    def __contains__(self, mask: int) -> bool:
        return mask in self.index

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def to_labels(self) -> list[list[str]]:
        return [self.universe.labels(m) for m in self.members]

    def closed_under_union(self) -> bool:
        ms = self.members
        return all(a | b in self.index for a in ms for b in ms)

    def closed_under_intersection(self) -> bool:
        ms = self.members
        return all(a & b in self.index for a in ms for b in ms)

    def closed_under_complement(self) -> bool:
        return all(self.universe.complement(a) in self.index for a in self.members)

    def closed_under_difference(self) -> bool:
        ms = self.members
        return all(a & ~b in self.index for a in ms for b in ms)

    def is_ring(self) -> bool:
        return self.closed_under_union() and self.closed_under_intersection()

    def is_algebra(self) -> bool:
        return self.is_ring() and self.closed_under_difference()

    def closure_flags(self) -> dict:
        return {
            "union": self.closed_under_union(),
            "intersection": self.closed_under_intersection(),
            "complement": self.closed_under_complement(),
            "difference": self.closed_under_difference(),
        }

    def join(self, a: int, b: int) -> Optional[int]:
        """Least member containing ``a | b``; ``None`` when there is none."""
        u = a | b
        if u in self.index:
            return u
        uppers = [m for m in self.members if is_subset(u, m)]
        for m in uppers:
            if all(is_subset(m, o) for o in uppers):
                return m
        return None

    def meet(self, a: int, b: int) -> Optional[int]:
        """Greatest member contained in ``a & b``; ``None`` when there is none."""
        v = a & b
        if v in self.index:
            return v
        lowers = [m for m in self.members if is_subset(m, v)]
        for m in lowers:
            if all(is_subset(o, m) for o in lowers):
                return m
        return None


@dataclass(frozen=True)
class LatticeIdeal:
    ambient: SubsetFamily
    members: frozenset

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        ok, witness = is_lattice_ideal(self.ambient, self.members)
        if not ok:
            raise InvalidStructureError(f"not a lattice ideal: {witness}")

    def __contains__(self, mask: int) -> bool:
        return mask in self.members

    def family(self) -> SubsetFamily:
        return SubsetFamily(self.ambient.universe, tuple(self.members))

    def to_json(self) -> dict:
        return {"ambient": self.ambient.to_labels(), "members": self.family().to_labels()}


def _members_of(candidate) -> frozenset:
    if isinstance(candidate, (SubsetFamily, LatticeIdeal)):
        return frozenset(candidate.members)
    return frozenset(candidate)


def is_lattice_ideal(ambient: SubsetFamily, candidate) -> tuple[bool, Optional[dict]]:
    """Check the down-closure and join-closure laws inside ``ambient``.

    Returns ``(True, None)`` or ``(False, witness)`` where the witness names
    the failing law and the offending members.
    """
    members = _members_of(candidate)
    u = ambient.universe
    outside = [m for m in members if m not in ambient]
    if outside:
        raise InvalidStructureError(
            f"candidate member {u.format(min(outside, key=canonical_key))} is not in the ambient family"
        )
    if not members:
        return False, {"law": "nonempty", "detail": "the empty family is not an ideal"}
    ordered = sorted(members, key=canonical_key)
    for b in ordered:
        for a in ambient.members:
            if is_subset(a, b) and a not in members:
                return False, {"law": "o-ideal", "below": u.labels(a), "member": u.labels(b)}
    for i, a in enumerate(ordered):
        for b in ordered[i + 1:]:
            j = ambient.join(a, b)
            if j is None or j not in members:
                return False, {
                    "law": "join-closure",
                    "pair": [u.labels(a), u.labels(b)],
                    "join": None if j is None else u.labels(j),
                }
    return True, None


def _down(ambient: SubsetFamily, m: int) -> frozenset:
    return frozenset(a for a in ambient.members if is_subset(a, m))


def generated_lattice_ideal(ambient: SubsetFamily, seed) -> LatticeIdeal:
    """Least ideal of ``ambient`` containing every member of ``seed``."""
    seed = _members_of(seed)
    u = ambient.universe
    for m in seed:
        if m not in ambient:
            raise InvalidStructureError(f"seed member {u.format(m)} is not in the ambient family")
    current = set(seed)
    if not current:
        lows = [m for m in ambient.members if all(is_subset(m, o) for o in ambient.members)]
        if not lows:
            raise InvalidStructureError("ambient has no least element; the empty seed generates nothing")
        current = {lows[0]}
    while True:
        nxt = set()
        for m in current:
            nxt |= _down(ambient, m)
        ordered = list(nxt)
        for i, a in enumerate(ordered):
            for b in ordered[i:]:
                j = ambient.join(a, b)
                if j is None:
                    raise InvalidStructureError(
                        f"{u.format(a)} and {u.format(b)} have no join in the ambient family"
                    )
                nxt.add(j)
        if nxt == current:
            return LatticeIdeal(ambient, frozenset(current))
        current = nxt


def is_prime_lattice_ideal(ambient: SubsetFamily, ideal) -> tuple[bool, Optional[dict]]:
    """``a ∧ b ∈ P`` forces ``a ∈ P`` or ``b ∈ P`` for every pair of ambient members."""
    members = _members_of(ideal)
    ok, witness = is_lattice_ideal(ambient, members)
    if not ok:
        raise InvalidStructureError(f"not a lattice ideal: {witness}")
    u = ambient.universe
    ms = ambient.members
    for i, a in enumerate(ms):
        if a in members:
            continue
        for b in ms[i:]:
            if b in members:
                continue
            m = ambient.meet(a, b)
            if m is not None and m in members:
                return False, {"pair": [u.labels(a), u.labels(b)], "meet": u.labels(m)}
    return True, None


def enumerate_lattice_ideals(ambient: SubsetFamily) -> list[LatticeIdeal]:
    """Every ideal of ``ambient``, by include/exclude branching over members.

    Including a member adds the ideal it generates together with what is
    already included; excluding it excludes everything above it.  Each leaf is
    an ideal, so the search never visits non-ideals.
    """
    k = len(ambient)
    if k > MAX_ENUMERATED_AMBIENT:
        raise GuardExceededError(
            f"ambient family has {k} members; enumeration is capped at {MAX_ENUMERATED_AMBIENT}"
        )
    ms = ambient.members
    below = [0] * k
    above = [0] * k
    for i, a in enumerate(ms):
        for j, b in enumerate(ms):
            if is_subset(b, a):
                below[i] |= 1 << j
                above[j] |= 1 << i
    join_idx = {}
    for i in range(k):
        for j in range(i, k):
            jm = ambient.join(ms[i], ms[j])
            join_idx[i, j] = None if jm is None else ambient.index[jm]

    def close(inc: int) -> Optional[int]:
        while True:
            nxt = inc
            for i in bits(inc):
                nxt |= below[i]
            idx = list(bits(nxt))
            for a_pos, i in enumerate(idx):
                for j in idx[a_pos:]:
                    jm = join_idx[i, j]
                    if jm is None:
                        return None
                    nxt |= 1 << jm
            if nxt == inc:
                return inc
            inc = nxt

    full = (1 << k) - 1
    found = []

    def branch(inc: int, exc: int):
        undecided = full & ~(inc | exc)
        if not undecided:
            if inc:
                found.append(inc)
            return
        i = (undecided & -undecided).bit_length() - 1
        grown = close(inc | 1 << i)
        if grown is not None and not grown & exc:
            branch(grown, exc)
        shrunk = exc | above[i]
        if not shrunk & inc:
            branch(inc, shrunk)

    branch(0, 0)
    ideals = [frozenset(ms[j] for j in bits(f)) for f in found]
    ideals.sort(key=lambda fam: sorted(canonical_key(m) for m in fam))
    ideals.sort(key=len)
    return [LatticeIdeal(ambient, fam) for fam in ideals]


def principal_ideal(ambient: SubsetFamily, top: int) -> LatticeIdeal:
    """Down-set of ``top`` in ``ambient``."""
    if top not in ambient:
        raise InvalidStructureError(f"{ambient.universe.format(top)} is not in the ambient family")
    return LatticeIdeal(ambient, _down(ambient, top))
