"""Finite universes, bit-mask subsets, binary relations and point neighborhoods.

A subset of a :class:`Universe` is a plain ``int`` whose bit ``i`` is set when
the element of rank ``i`` belongs to it.  All operators in the package take
and return masks; :meth:`Universe.mask` and :meth:`Universe.labels` convert
to and from element labels, always in declaration order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import InvalidStructureError, UnknownElementError

MAX_UNIVERSE = 62

EMPTY_MEET_EMPTY = "empty"
EMPTY_MEET_UNIVERSE = "universe"


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def canonical_key(mask: int) -> tuple:
    """Sort key for subsets: by size, then lexicographically by member ranks."""
    return (mask.bit_count(), tuple(bits(mask)))


@dataclass(frozen=True)
class Universe:
    elements: tuple[str, ...]
    rank: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        elements = tuple(self.elements)
        if not elements:
            raise InvalidStructureError("a universe needs at least one element")
        if len(elements) > MAX_UNIVERSE:
            raise InvalidStructureError(
                f"universe of size {len(elements)} exceeds the cap of {MAX_UNIVERSE}"
            )
        rank = {}
        for i, label in enumerate(elements):
            if not isinstance(label, str):
                raise InvalidStructureError(f"element labels must be strings, got {label!r}")
            if label in rank:
                raise InvalidStructureError(f"duplicate element label {label!r}")
            rank[label] = i
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "rank", rank)

    @property
    def n(self) -> int:
        return len(self.elements)

    @property
    def full(self) -> int:
        return (1 << len(self.elements)) - 1

    def index(self, label: str) -> int:
        try:
            return self.rank[label]
        except (KeyError, TypeError):
            raise UnknownElementError(f"unknown element {label!r}") from None

    def mask(self, labels: Iterable[str]) -> int:
        m = 0
        for label in labels:
            m |= 1 << self.index(label)
        return m

    def labels(self, mask: int) -> list[str]:
        if mask & ~self.full:
            raise InvalidStructureError(f"mask {mask:#x} has bits outside the universe")
        return [self.elements[i] for i in bits(mask)]

    def format(self, mask: int) -> str:
        return "{" + ",".join(self.labels(mask)) + "}"

    def complement(self, mask: int) -> int:
        return self.full & ~mask

    def all_subsets(self) -> range:
        return range(1 << len(self.elements))


@dataclass(frozen=True)
class BinaryRelation:
    """Relation on a universe, stored as per-element successor/predecessor masks.

    ``out_[x]`` is ``{a : R x a}`` and ``in_[x]`` is ``{a : R a x}``.
    """

    universe: Universe
    pairs: frozenset
    out_: tuple = field(init=False, repr=False, compare=False, hash=False)
    in_: tuple = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        n = self.universe.n
        out = [0] * n
        inn = [0] * n
        pairs = frozenset(self.pairs)
        for x, y in pairs:
            if not (0 <= x < n and 0 <= y < n):
                raise InvalidStructureError(f"pair {(x, y)} has a rank outside 0..{n - 1}")
            out[x] |= 1 << y
            inn[y] |= 1 << x
        object.__setattr__(self, "pairs", pairs)
        object.__setattr__(self, "out_", tuple(out))
        object.__setattr__(self, "in_", tuple(inn))

    @classmethod
    def from_labels(cls, universe: Universe, pairs: Iterable[Sequence[str]]) -> "BinaryRelation":
        return cls(universe, frozenset((universe.index(a), universe.index(b)) for a, b in pairs))

    @classmethod
    def from_out_masks(cls, universe: Universe, out: Sequence[int]) -> "BinaryRelation":
        return cls(universe, frozenset((x, y) for x, m in enumerate(out) for y in bits(m)))

    @classmethod
    def identity(cls, universe: Universe) -> "BinaryRelation":
        return cls(universe, frozenset((i, i) for i in range(universe.n)))

    @classmethod
    def full_relation(cls, universe: Universe) -> "BinaryRelation":
        r = range(universe.n)
        return cls(universe, frozenset((i, j) for i in r for j in r))

    def holds(self, x: int, y: int) -> bool:
        return bool(self.out_[x] >> y & 1)

    def label_pairs(self) -> list[list[str]]:
        e = self.universe.elements
        return [[e[x], e[y]] for x, y in sorted(self.pairs)]

    def converse(self) -> "BinaryRelation":
        return BinaryRelation(self.universe, frozenset((y, x) for x, y in self.pairs))

    def transitive_closure(self) -> "BinaryRelation":
        out = list(self.out_)
        for k in range(self.universe.n):
            kb = 1 << k
            for i in range(self.universe.n):
                if out[i] & kb:
                    out[i] |= out[k]
        return BinaryRelation.from_out_masks(self.universe, out)


def _point(R: BinaryRelation, x) -> int:
    if isinstance(x, str):
        return R.universe.index(x)
    if not 0 <= x < R.universe.n:
        raise UnknownElementError(f"unknown element rank {x!r}")
    return x


def successor_neighborhood(R: BinaryRelation, x) -> int:
    """``[x]_R = {a : R a x}``."""
    return R.in_[_point(R, x)]


def predecessor_neighborhood(R: BinaryRelation, x) -> int:
    """``[x]^R = {a : R x a}``."""
    return R.out_[_point(R, x)]


def min_neighborhood(R: BinaryRelation, x, empty_meet: str = EMPTY_MEET_EMPTY) -> int:
    """Intersection of every predecessor neighborhood that contains ``x``.

    When no predecessor neighborhood contains ``x`` the meet is over an empty
    family; ``empty_meet`` picks ``"empty"`` (default) or ``"universe"``.
    """
    i = _point(R, x)
    xb = 1 << i
    meet = None
    for nb in R.out_:
        if nb & xb:
            meet = nb if meet is None else meet & nb
    if meet is None:
        if empty_meet == EMPTY_MEET_EMPTY:
            return 0
        if empty_meet == EMPTY_MEET_UNIVERSE:
            return R.universe.full
        raise ValueError(f"empty_meet must be 'empty' or 'universe', not {empty_meet!r}")
    return meet


def min_neighborhoods(R: BinaryRelation, empty_meet: str = EMPTY_MEET_EMPTY) -> tuple[int, ...]:
    return tuple(min_neighborhood(R, i, empty_meet) for i in range(R.universe.n))


def tau_relation(R: BinaryRelation, empty_meet: str = EMPTY_MEET_EMPTY) -> BinaryRelation:
    """``tau a b`` iff ``a`` lies in the minimal neighborhood of ``b``."""
    mins = min_neighborhoods(R, empty_meet)
    return BinaryRelation(
        R.universe, frozenset((a, b) for b, m in enumerate(mins) for a in bits(m))
    )


@dataclass(frozen=True)
class RelationProperties:
    reflexive: bool
    symmetric: bool
    transitive: bool
    antisymmetric: bool
    quasi_reflexive: bool
    weakly_antisymmetric: bool

    @property
    def quasi_order(self) -> bool:
        return self.reflexive and self.transitive

    def as_dict(self) -> dict:
        return {
            "reflexive": self.reflexive,
            "symmetric": self.symmetric,
            "transitive": self.transitive,
            "quasi_order": self.quasi_order,
            "antisymmetric": self.antisymmetric,
            "quasi_reflexive": self.quasi_reflexive,
            "weakly_antisymmetric": self.weakly_antisymmetric,
        }


def is_reflexive(R: BinaryRelation) -> bool:
    return all(R.out_[i] >> i & 1 for i in range(R.universe.n))


def is_transitive(R: BinaryRelation) -> bool:
    out = R.out_
    for x in range(R.universe.n):
        reach = 0
        for y in bits(out[x]):
            reach |= out[y]
        if reach & ~out[x]:
            return False
    return True


def is_antisymmetric(R: BinaryRelation) -> bool:
    return all(x == y or not R.holds(y, x) for x, y in R.pairs)


def relation_properties(R: BinaryRelation, empty_meet: str = EMPTY_MEET_EMPTY) -> RelationProperties:
    pairs = R.pairs
    mins = min_neighborhoods(R, empty_meet)
    tau = tau_relation(R, empty_meet)
    weak_anti = all(
        mins[a] == mins[b] for a, b in tau.pairs if tau.holds(b, a)
    )
    return RelationProperties(
        reflexive=is_reflexive(R),
        symmetric=all((y, x) in pairs for x, y in pairs),
        transitive=is_transitive(R),
        antisymmetric=is_antisymmetric(R),
        quasi_reflexive=all(R.holds(x, x) for x, _ in pairs),
        weakly_antisymmetric=weak_anti,
    )
