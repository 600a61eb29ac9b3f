import itertools

import pytest

from roughideals.errors import RoughIdealsError
from roughideals.universe import (
    EMPTY_MEET_UNIVERSE,
    BinaryRelation,
    Universe,
    canonical_key,
    min_neighborhood,
    predecessor_neighborhood,
    relation_properties,
    successor_neighborhood,
)
from roughideals.harness import all_relations


def test_masks_and_labels_round_trip():
    u = Universe(("a", "b", "c"))
    assert u.full == 0b111
    assert u.mask(["c", "a"]) == 0b101
    assert u.labels(0b101) == ["a", "c"]
    assert u.format(0) == "{}"
    assert u.complement(0b001) == 0b110


def test_duplicate_labels_rejected():
    with pytest.raises(RoughIdealsError):
        Universe(("a", "a"))


def test_canonical_order_is_size_then_rank():
    masks = sorted(range(8), key=canonical_key)
    assert masks == [0, 1, 2, 4, 3, 5, 6, 7]


def _brute(R):
    u = R.universe
    pairs = {(u.elements[a], u.elements[b]) for a, b in R.pairs}
    X = u.elements
    succ = {x: {a for a in X if (a, x) in pairs} for x in X}
    pred = {x: {a for a in X if (x, a) in pairs} for x in X}
    mins = {}
    for x in X:
        covers = [pred[b] for b in X if x in pred[b]]
        mins[x] = set.intersection(*covers) if covers else set()
    return succ, pred, mins


def test_neighborhoods_match_definitions_on_every_relation_over_three_points():
    for R in all_relations(3):
        u = R.universe
        succ, pred, mins = _brute(R)
        for x in u.elements:
            assert set(u.labels(successor_neighborhood(R, x))) == succ[x]
            assert set(u.labels(predecessor_neighborhood(R, x))) == pred[x]
            assert set(u.labels(min_neighborhood(R, x))) == mins[x]


def test_empty_meet_flag():
    u = Universe(("a", "b"))
    R = BinaryRelation.from_labels(u, [("a", "a")])
    assert min_neighborhood(R, "b") == 0
    assert min_neighborhood(R, "b", EMPTY_MEET_UNIVERSE) == u.full
    assert min_neighborhood(R, "a", EMPTY_MEET_UNIVERSE) == u.mask("a")


def test_relation_properties():
    u = Universe(("a", "b", "c"))
    le = BinaryRelation.from_labels(u, [(x, y) for x, y in itertools.product("abc", repeat=2) if x <= y])
    p = relation_properties(le).as_dict()
    assert p["reflexive"] and p["transitive"] and p["antisymmetric"] and p["quasi_order"]
    assert not p["symmetric"]
    full = BinaryRelation.full_relation(u)
    assert relation_properties(full).as_dict()["symmetric"]
    assert not relation_properties(full).as_dict()["antisymmetric"]


def test_transitive_closure_and_converse():
    u = Universe(("a", "b", "c"))
    R = BinaryRelation.from_labels(u, [("a", "b"), ("b", "c")])
    assert ["a", "c"] in R.transitive_closure().label_pairs()
    assert R.converse().label_pairs() == [["b", "a"], ["c", "b"]]


def test_unknown_label():
    u = Universe(("a",))
    with pytest.raises(RoughIdealsError):
        u.mask(["z"])
