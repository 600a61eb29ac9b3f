"""Ideals relative to an arbitrary binary relation sigma on a finite carrier.

A :class:`SigmaStructure` wraps a relation ``sigma`` on a :class:`Universe`
(the carrier ``H``).  Subsets of the carrier are bit masks, as everywhere else.
The directedness clause of the ideal definition comes in two modes:

``strict``
    ``U(a, b) ∩ K`` is nonempty for every pair of members.
``weak``
    the same, but only required for pairs whose ``U(a, b)`` is nonempty.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import (
    GuardExceededError,
    InvalidStructureError,
    NotSupremalError,
    PropernessError,
    UnknownElementError,
)
from .universe import BinaryRelation, Universe, bits, canonical_key, is_subset

STRICT = "strict"
WEAK = "weak"
MODES = (STRICT, WEAK)

MAX_ENUMERATED_CARRIER = 20


@dataclass(frozen=True)
class SigmaStructure:
    sigma: BinaryRelation
    mode: str = WEAK
    allow_empty_ideal: bool = True
    down: tuple = field(init=False, repr=False, compare=False, hash=False)
    up: tuple = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.mode not in MODES:
            raise InvalidStructureError(f"mode must be one of {MODES}, not {self.mode!r}")
        n = self.carrier.n
        # down[x]: x plus everything reaching x along sigma-paths; any
        # downward-closed set containing x contains down[x].
        closure = self.sigma.transitive_closure()
        down = tuple(closure.in_[x] | 1 << x for x in range(n))
        up = [0] * n
        for x in range(n):
            for y in bits(down[x]):
                up[y] |= 1 << x
        object.__setattr__(self, "down", down)
        object.__setattr__(self, "up", tuple(up))

    @property
    def carrier(self) -> Universe:
        return self.sigma.universe

    def with_options(self, mode: Optional[str] = None, allow_empty_ideal: Optional[bool] = None):
        return SigmaStructure(
            self.sigma,
            self.mode if mode is None else mode,
            self.allow_empty_ideal if allow_empty_ideal is None else allow_empty_ideal,
        )

    def options(self) -> dict:
        return {"mode": self.mode, "allow_empty_ideal": self.allow_empty_ideal}


def _rank(structure: SigmaStructure, x) -> int:
    if isinstance(x, str):
        return structure.carrier.index(x)
    if not 0 <= x < structure.carrier.n:
        raise UnknownElementError(f"unknown element rank {x!r}")
    return x


def upper_bounds(structure: SigmaStructure, a, b) -> int:
    """``U(a, b) = {x : sigma a x and sigma b x}``."""
    out = structure.sigma.out_
    return out[_rank(structure, a)] & out[_rank(structure, b)]


def lower_bounds(structure: SigmaStructure, a, b) -> int:
    """``L(a, b) = {x : sigma x a and sigma x b}``."""
    inn = structure.sigma.in_
    return inn[_rank(structure, a)] & inn[_rank(structure, b)]


def is_down_closed(structure: SigmaStructure, K: int) -> bool:
    inn = structure.sigma.in_
    return all(is_subset(inn[a], K) for a in bits(K))


def is_up_closed(structure: SigmaStructure, F: int) -> bool:
    out = structure.sigma.out_
    return all(is_subset(out[a], F) for a in bits(F))


def _directed_witness(bound, B: int, weak: bool):
    members = list(bits(B))
    for i, a in enumerate(members):
        for b in members[i:]:
            bd = bound[a] & bound[b]
            if weak and not bd:
                continue
            if not bd & B:
                return a, b
    return None


def is_U_directed(structure: SigmaStructure, B: int, weak: bool = False) -> bool:
    return _directed_witness(structure.sigma.out_, B, weak) is None


def is_L_directed(structure: SigmaStructure, B: int, weak: bool = False) -> bool:
    return _directed_witness(structure.sigma.in_, B, weak) is None


def is_sigma_directed(structure: SigmaStructure, B: int) -> bool:
    return is_U_directed(structure, B) and is_L_directed(structure, B)


def is_sigma_convex(structure: SigmaStructure, B: int) -> bool:
    """Every ``x`` squeezed as ``sigma a x`` and ``sigma x b`` with ``a, b`` in ``B`` is in ``B``."""
    out = structure.sigma.out_
    inn = structure.sigma.in_
    for a in bits(B):
        for b in bits(B):
            if out[a] & inn[b] & ~B:
                return False
    return True


@dataclass(frozen=True)
class IdealCheck:
    ok: bool
    clause: Optional[str] = None
    pair: Optional[tuple] = None

    def __bool__(self):
        return self.ok

    def describe(self, carrier: Universe) -> dict:
        d = {"ok": self.ok, "clause": self.clause}
        if self.pair is not None:
            d["pair"] = [carrier.elements[i] for i in self.pair]
        return d


def check_sigma_ideal(structure: SigmaStructure, K: int) -> IdealCheck:
    """Evaluate the ideal clauses in order and report the first that fails."""
    carrier = structure.carrier
    if K == carrier.full:
        return IdealCheck(False, "proper")
    if K == 0 and not structure.allow_empty_ideal:
        return IdealCheck(False, "nonempty")
    inn = structure.sigma.in_
    for a in bits(K):
        missing = inn[a] & ~K
        if missing:
            x = (missing & -missing).bit_length() - 1
            return IdealCheck(False, "down-closed", (x, a))
    bad = _directed_witness(structure.sigma.out_, K, structure.mode == WEAK)
    if bad is not None:
        return IdealCheck(False, "U-directed", bad)
    return IdealCheck(True)


def is_sigma_ideal(structure: SigmaStructure, K: int) -> bool:
    return check_sigma_ideal(structure, K).ok


def check_sigma_filter(structure: SigmaStructure, F: int) -> IdealCheck:
    carrier = structure.carrier
    if F == carrier.full:
        return IdealCheck(False, "proper")
    if F == 0 and not structure.allow_empty_ideal:
        return IdealCheck(False, "nonempty")
    out = structure.sigma.out_
    for a in bits(F):
        missing = out[a] & ~F
        if missing:
            x = (missing & -missing).bit_length() - 1
            return IdealCheck(False, "up-closed", (a, x))
    bad = _directed_witness(structure.sigma.in_, F, structure.mode == WEAK)
    if bad is not None:
        return IdealCheck(False, "L-directed", bad)
    return IdealCheck(True)


def is_sigma_filter(structure: SigmaStructure, F: int) -> bool:
    return check_sigma_filter(structure, F).ok


def is_prime_sigma_ideal(structure: SigmaStructure, K: int) -> bool:
    """A sigma-ideal ``K`` such that ``L(a, b)`` meeting ``K`` forces ``a`` or ``b`` into ``K``."""
    if not is_sigma_ideal(structure, K):
        return False
    inn = structure.sigma.in_
    n = structure.carrier.n
    for a in range(n):
        if K >> a & 1:
            continue
        for b in range(a, n):
            if K >> b & 1:
                continue
            if inn[a] & inn[b] & K:
                return False
    return True


def enumerate_down_closed(structure: SigmaStructure) -> list[int]:
    """All downward sigma-closed subsets, by forced include/exclude branching."""
    n = structure.carrier.n
    if n > MAX_ENUMERATED_CARRIER:
        raise GuardExceededError(
            f"carrier has {n} elements; sigma-ideal enumeration is capped at {MAX_ENUMERATED_CARRIER}"
        )
    down, up = structure.down, structure.up
    full = structure.carrier.full
    out = []
    stack = [(0, 0)]
    while stack:
        inc, exc = stack.pop()
        undecided = full & ~(inc | exc)
        if not undecided:
            out.append(inc)
            continue
        i = (undecided & -undecided).bit_length() - 1
        if not down[i] & exc:
            stack.append((inc | down[i], exc))
        if not up[i] & inc:
            stack.append((inc, exc | up[i]))
    out.sort(key=canonical_key)
    return out


def enumerate_sigma_ideals(structure: SigmaStructure) -> list[int]:
    """Every sigma-ideal under the structure's mode, canonically sorted."""
    return [K for K in enumerate_down_closed(structure) if is_sigma_ideal(structure, K)]


def format_family(carrier: Universe, family) -> list[list[str]]:
    return [carrier.labels(m) for m in family]


@dataclass(frozen=True)
class Supremal:
    """Supremum data of a supremal relation.

    ``choice[a, b]`` is the supremum of lowest rank; ``all_[a, b]`` the mask
    of every supremum of the pair.
    """

    choice: dict
    all_: dict

    def unique(self) -> bool:
        return all(m & (m - 1) == 0 for m in self.all_.values())


def supremums(structure: SigmaStructure, a: int, b: int) -> int:
    out = structure.sigma.out_
    ub = out[a] & out[b]
    found = 0
    for s in bits(ub):
        if is_subset(ub & ~(1 << s), out[s]):
            found |= 1 << s
    return found


def is_supremal(structure: SigmaStructure) -> tuple[Optional[Supremal], Optional[tuple]]:
    """Return ``(Supremal, None)`` or ``(None, witness_pair)``."""
    n = structure.carrier.n
    choice = {}
    every = {}
    for a in range(n):
        for b in range(a, n):
            sups = supremums(structure, a, b)
            if not sups:
                return None, (a, b)
            s = (sups & -sups).bit_length() - 1
            choice[a, b] = choice[b, a] = s
            every[a, b] = every[b, a] = sups
    return Supremal(choice, every), None


def _require_supremal(structure: SigmaStructure) -> Supremal:
    sup, witness = is_supremal(structure)
    if sup is None:
        names = [structure.carrier.elements[i] for i in witness]
        raise NotSupremalError(f"sigma is not supremal; the pair {names} has no supremum")
    return sup


def _lower_set(structure: SigmaStructure, X: int) -> int:
    """``{x : sigma x a for some a in X}``."""
    inn = structure.sigma.in_
    acc = 0
    for a in bits(X):
        acc |= inn[a]
    return acc


def _sup_set(sup: Supremal, X: int) -> int:
    acc = 0
    members = list(bits(X))
    for i, b in enumerate(members):
        for c in members[i:]:
            acc |= sup.all_[b, c]
    return acc


def sigma_closure(structure: SigmaStructure, X: int, sup: Optional[Supremal] = None) -> int:
    """Union of the iterates of (sup-augment after down-augment) starting at ``X``.

    May return the whole carrier; :func:`sigma_generated_ideal` turns that into
    a :class:`PropernessError`.
    """
    if sup is None:
        sup = _require_supremal(structure)
    current = X
    for _ in range(structure.carrier.n + 1):
        lam = _lower_set(structure, current) | current
        nxt = _sup_set(sup, lam) | lam
        if nxt == current:
            return current
        current = nxt
    raise AssertionError("sigma closure did not converge on a finite carrier")


def _reflexive_closure(structure: SigmaStructure, X: int, sup: Supremal) -> int:
    # For reflexive sigma both maps are extensive, so the union of iterates
    # is the first repeated iterate.
    current = X
    for _ in range(structure.carrier.n + 1):
        nxt = _sup_set(sup, _lower_set(structure, current))
        if nxt == current:
            return current
        current = nxt | current
    raise AssertionError("reflexive sigma closure did not converge on a finite carrier")


def sigma_generated_ideal(structure: SigmaStructure, X: int) -> int:
    """The sigma-ideal generated by a nonempty ``X`` for supremal sigma."""
    if X == 0:
        raise InvalidStructureError("the generating set must be nonempty")
    sup = _require_supremal(structure)
    K = sigma_closure(structure, X, sup)
    if structure.sigma.pairs and all(structure.sigma.holds(i, i) for i in range(structure.carrier.n)):
        alt = _reflexive_closure(structure, X, sup)
        if alt != K:
            raise AssertionError("the two generation iterations disagree for reflexive sigma")
    if K == structure.carrier.full:
        raise PropernessError(
            f"the closure of {structure.carrier.format(X)} is the whole carrier, which is not an ideal"
        )
    check = check_sigma_ideal(structure, K)
    if not check:
        raise AssertionError(f"generated set failed the ideal test: {check}")
    return K


def maximal_ideals_within(structure: SigmaStructure, A: int, family=None) -> list[int]:
    """The inclusion-maximal sigma-ideals contained in ``A``."""
    if family is None:
        family = enumerate_sigma_ideals(structure)
    inside = [K for K in family if is_subset(K, A)]
    return [K for K in inside if not any(K != J and is_subset(K, J) for J in inside)]


@dataclass(frozen=True)
class LeastIdeal:
    ideal: Optional[int]
    minimal_covers: tuple

    @property
    def exists(self) -> bool:
        return self.ideal is not None


def least_ideal_containing(structure: SigmaStructure, A: int, family=None) -> LeastIdeal:
    """The least sigma-ideal containing ``A`` or, when absent, its minimal covers."""
    if family is None:
        family = enumerate_sigma_ideals(structure)
    covers = [K for K in family if is_subset(A, K)]
    minimal = tuple(K for K in covers if not any(K != J and is_subset(J, K) for J in covers))
    if len(minimal) == 1:
        return LeastIdeal(minimal[0], minimal)
    return LeastIdeal(None, minimal)


def downset(structure: SigmaStructure, a) -> int:
    """``{b : sigma b a}``."""
    return structure.sigma.in_[_rank(structure, a)]


def principal_ideal(structure: SigmaStructure, x: int, family=None) -> Optional[int]:
    """``<{x}>``: the intersection of all ideals containing ``x`` when that is an ideal."""
    x = _rank(structure, x)
    if family is None:
        family = enumerate_sigma_ideals(structure)
    covers = [K for K in family if K >> x & 1]
    if not covers:
        return None
    meet = structure.carrier.full
    for K in covers:
        meet &= K
    return meet if meet in covers else None
