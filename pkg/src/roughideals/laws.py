"""Tabulated lower/upper maps and the algebraic laws checked against them.

A :class:`MapPair` holds ``l(A)`` and ``u(A)`` for every subset ``A`` of a
small universe.  Each law is a function returning the first counterexample
(a dict) or ``None``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from .universe import Universe, is_subset


@dataclass(frozen=True)
class MapPair:
    universe: Universe
    lower: tuple
    upper: tuple
    domain: tuple = ()

    @classmethod
    def tabulate(cls, universe: Universe, lower: Callable[[int], int], upper: Callable[[int], int], domain=None):
        """Evaluate both maps on ``domain`` (default: every subset)."""
        size = 1 << universe.n
        dom = tuple(range(size)) if domain is None else tuple(domain)
        lo = [None] * size
        up = [None] * size
        for A in dom:
            lo[A] = lower(A)
            up[A] = upper(A)
        return cls(universe, tuple(lo), tuple(up), dom)

    @classmethod
    def from_results(cls, universe: Universe, fn, domain=None):
        """Tabulate from a function returning an object with ``lower``/``upper``."""
        size = 1 << universe.n
        dom = tuple(range(size)) if domain is None else tuple(domain)
        lo = [None] * size
        up = [None] * size
        for A in dom:
            r = fn(A)
            lo[A] = r.lower
            up[A] = r.upper
        return cls(universe, tuple(lo), tuple(up), dom)


def _w(pair: MapPair, law: str, **sets) -> dict:
    u = pair.universe
    return {"law": law, **{k: u.labels(v) for k, v in sets.items()}}


def _in_domain(p: MapPair, X: int) -> bool:
    return p.lower[X] is not None


def inclusion(p: MapPair):
    for A in p.domain:
        if not (is_subset(p.lower[A], A) and is_subset(A, p.upper[A])):
            return _w(p, "inclusion", A=A, lower=p.lower[A], upper=p.upper[A])


def bottom_lower(p: MapPair):
    if _in_domain(p, 0) and p.lower[0]:
        return _w(p, "bottom_lower", lower=p.lower[0])


def bottom_upper(p: MapPair):
    if _in_domain(p, 0) and p.upper[0]:
        return _w(p, "bottom_upper", upper=p.upper[0])


def top_lower(p: MapPair):
    full = p.universe.full
    if _in_domain(p, full) and p.lower[full] != full:
        return _w(p, "top_lower", lower=p.lower[full])


def top_upper(p: MapPair):
    full = p.universe.full
    if _in_domain(p, full) and p.upper[full] != full:
        return _w(p, "top_upper", upper=p.upper[full])


def _pairs(p: MapPair):
    dom = p.domain
    for A in dom:
        for B in dom:
            yield A, B


def monotone_lower(p: MapPair):
    for A, B in _pairs(p):
        if is_subset(A, B) and not is_subset(p.lower[A], p.lower[B]):
            return _w(p, "monotone_lower", A=A, B=B, lower_A=p.lower[A], lower_B=p.lower[B])


def monotone_upper(p: MapPair):
    for A, B in _pairs(p):
        if is_subset(A, B) and not is_subset(p.upper[A], p.upper[B]):
            return _w(p, "monotone_upper", A=A, B=B, upper_A=p.upper[A], upper_B=p.upper[B])


def idempotent_lower(p: MapPair):
    for A in p.domain:
        L = p.lower[A]
        if _in_domain(p, L) and p.lower[L] != L:
            return _w(p, "idempotent_lower", A=A, lower=L, lower_lower=p.lower[L])


def idempotent_upper(p: MapPair):
    for A in p.domain:
        U = p.upper[A]
        if _in_domain(p, U) and p.upper[U] != U:
            return _w(p, "idempotent_upper", A=A, upper=U, upper_upper=p.upper[U])


def weak_idempotent_lower(p: MapPair):
    for A in p.domain:
        L = p.lower[A]
        if _in_domain(p, L) and not is_subset(p.lower[L], L):
            return _w(p, "weak_idempotent_lower", A=A, lower=L, lower_lower=p.lower[L])


def weak_idempotent_upper(p: MapPair):
    for A in p.domain:
        U = p.upper[A]
        if _in_domain(p, U) and not is_subset(U, p.upper[U]):
            return _w(p, "weak_idempotent_upper", A=A, upper=U, upper_upper=p.upper[U])


def lower_meet(p: MapPair):
    for A, B in _pairs(p):
        if _in_domain(p, A & B) and p.lower[A & B] != p.lower[A] & p.lower[B]:
            return _w(p, "lower_meet", A=A, B=B, lower_AB=p.lower[A & B])


def lower_join_half(p: MapPair):
    for A, B in _pairs(p):
        if _in_domain(p, A | B) and not is_subset(p.lower[A] | p.lower[B], p.lower[A | B]):
            return _w(p, "lower_join_half", A=A, B=B, lower_AB=p.lower[A | B])


def upper_join(p: MapPair):
    for A, B in _pairs(p):
        if _in_domain(p, A | B) and p.upper[A | B] != p.upper[A] | p.upper[B]:
            return _w(p, "upper_join", A=A, B=B, upper_AB=p.upper[A | B])


def upper_meet_half(p: MapPair):
    for A, B in _pairs(p):
        if _in_domain(p, A & B) and not is_subset(p.upper[A & B], p.upper[A] & p.upper[B]):
            return _w(p, "upper_meet_half", A=A, B=B, upper_AB=p.upper[A & B])


def duality_upper(p: MapPair):
    full = p.universe.full
    for A in p.domain:
        if _in_domain(p, full & ~A) and p.upper[A] != full & ~p.lower[full & ~A]:
            return _w(p, "duality_upper", A=A, upper=p.upper[A])


def duality_lower(p: MapPair):
    full = p.universe.full
    for A in p.domain:
        if _in_domain(p, full & ~A) and p.lower[A] != full & ~p.upper[full & ~A]:
            return _w(p, "duality_lower", A=A, lower=p.lower[A])


def ideal_fix_upper(members: Iterable[int]):
    """``A`` in the ideal implies ``u(A) = A``."""
    members = frozenset(members)

    def law(p: MapPair):
        for A in p.domain:
            if A in members and p.upper[A] != A:
                return _w(p, "ideal_fix_upper", A=A, upper=p.upper[A])

    law.__name__ = "ideal_fix_upper"
    return law


def ideal_fix_lower(members: Iterable[int]):
    """Complement of ``A`` in the ideal implies ``l(A) = A``."""
    members = frozenset(members)

    def law(p: MapPair):
        full = p.universe.full
        for A in p.domain:
            if full & ~A in members and p.lower[A] != A:
                return _w(p, "ideal_fix_lower", A=A, lower=p.lower[A])

    law.__name__ = "ideal_fix_lower"
    return law


def fixpoint_topology(p: MapPair):
    """Fixpoints of the lower map contain both bounds and are closed under union and meet."""
    fix = [A for A in p.domain if p.lower[A] == A]
    fs = set(fix)
    if 0 not in fs or p.universe.full not in fs:
        return {"law": "fixpoint_topology", "detail": "missing empty or whole set"}
    for A in fix:
        for B in fix:
            if A | B not in fs or A & B not in fs:
                return _w(p, "fixpoint_topology", A=A, B=B)


# Law sets named after the results they encode.
KAPPA = (
    inclusion, bottom_upper, top_lower, monotone_lower, monotone_upper,
    idempotent_lower, idempotent_upper, lower_meet, lower_join_half,
    upper_join, upper_meet_half, duality_upper, duality_lower, fixpoint_topology,
)
IAD = (
    inclusion, bottom_upper, top_lower, monotone_lower, monotone_upper,
    idempotent_lower, idempotent_upper, lower_meet, lower_join_half,
    upper_join, upper_meet_half,
)
GOSI = (inclusion, weak_idempotent_lower, weak_idempotent_upper,
        bottom_lower, bottom_upper, top_lower, top_upper)
GOSIH_BASE = (inclusion, bottom_upper, top_lower, monotone_lower, monotone_upper,
              idempotent_lower, weak_idempotent_upper)
MEREO_FIRST = (
    inclusion, bottom_upper, bottom_lower, top_lower, top_upper,
    monotone_lower, monotone_upper, idempotent_lower, idempotent_upper,
    lower_meet, lower_join_half, upper_join, upper_meet_half,
)
MEREO_SECOND = (inclusion, bottom_upper, bottom_lower, top_lower, top_upper,
                monotone_lower, monotone_upper)
INVERSE_PROBLEM = {
    "inclusion": (inclusion,),
    "bounds": (bottom_lower, bottom_upper, top_lower, top_upper),
    "monotone": (monotone_lower, monotone_upper),
    "lower_idempotent": (idempotent_lower,),
    "upper_expansion": (weak_idempotent_upper,),
}


def law_name(law) -> str:
    return law.__name__


def check(p: MapPair, laws) -> dict:
    """``{law name: first counterexample or None}``."""
    return {law_name(law): law(p) for law in laws}


def first_failure(p: MapPair, laws) -> Optional[dict]:
    for law in laws:
        w = law(p)
        if w is not None:
            return w
    return None
