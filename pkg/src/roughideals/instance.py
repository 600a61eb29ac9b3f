"""The shared JSON instance document.

::

    {"version": "1",
     "universe": ["a", "b", ...],
     "relation": [["a", "c"], ...],
     "granulation": {"a": ["b"], ...},
     "sets": {"A": ["a", "b"]},
     "families": {"I": [[], ["a"]]},
     "actual_points": ["a"],
     "powerset_relation": "subset" | [[["a"], ["a", "b"]], ...]}

Only ``version``, ``universe`` and ``relation`` are required.  Unknown keys
are rejected; every error names the JSON path of the offending value.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional, Union

from .approx import Granulation
from .errors import MissingFamilyError, RoughIdealsError, SchemaError
from .universe import BinaryRelation, Universe, canonical_key

SCHEMA_VERSION = "1"
KEYS = ("version", "universe", "relation", "granulation", "sets", "families", "actual_points", "powerset_relation")


@dataclass
class InstanceDocument:
    universe: Universe
    relation: BinaryRelation
    granulation: Optional[Granulation] = None
    sets: dict = field(default_factory=dict)
    families: dict = field(default_factory=dict)
    actual_points: Optional[int] = None
    powerset_relation: Union[None, str, frozenset] = None

    def set_mask(self, name: str) -> int:
        if name in self.sets:
            return self.sets[name]
        raise MissingFamilyError(f"$.sets: no set named {name!r}")

    def family(self, name: str) -> tuple:
        if name in self.families:
            return self.families[name]
        raise MissingFamilyError(f"$.families: no family named {name!r}")

    def to_json(self) -> dict:
        return dump_instance(self)


def _fail(path: str, msg: str):
    raise SchemaError(f"{path}: {msg}")


def _labels(u: Universe, value, path: str) -> int:
    if not isinstance(value, list):
        _fail(path, "expected a list of element labels")
    mask = 0
    for i, label in enumerate(value):
        if not isinstance(label, str):
            _fail(f"{path}[{i}]", f"expected a string label, got {label!r}")
        if label not in u.rank:
            _fail(f"{path}[{i}]", f"unknown element {label!r}")
        mask |= 1 << u.rank[label]
    return mask


def parse_instance(data, require_version: bool = True) -> InstanceDocument:
    if not isinstance(data, dict):
        _fail("$", "the instance must be a JSON object")
    unknown = sorted(set(data) - set(KEYS))
    if unknown:
        _fail("$", f"unknown keys {unknown}")
    if require_version:
        if "version" not in data:
            _fail("$", "missing required key 'version'")
        if data["version"] != SCHEMA_VERSION:
            _fail("$.version", f"expected {SCHEMA_VERSION!r}, got {data['version']!r}")
    for key in ("universe", "relation"):
        if key not in data:
            _fail("$", f"missing required key {key!r}")
    elems = data["universe"]
    if not isinstance(elems, list) or not elems:
        _fail("$.universe", "expected a nonempty list of labels")
    for i, e in enumerate(elems):
        if not isinstance(e, str):
            _fail(f"$.universe[{i}]", f"expected a string label, got {e!r}")
    try:
        u = Universe(tuple(elems))
    except RoughIdealsError as exc:
        _fail("$.universe", str(exc))
    rel = data["relation"]
    if not isinstance(rel, list):
        _fail("$.relation", "expected a list of [source, target] pairs")
    pairs = set()
    for i, p in enumerate(rel):
        if not (isinstance(p, list) and len(p) == 2):
            _fail(f"$.relation[{i}]", "expected a [source, target] pair")
        for j, label in enumerate(p):
            if label not in u.rank:
                _fail(f"$.relation[{i}][{j}]", f"unknown element {label!r}")
        pairs.add((u.rank[p[0]], u.rank[p[1]]))
    doc = InstanceDocument(u, BinaryRelation(u, frozenset(pairs)))
    if "granulation" in data:
        g = data["granulation"]
        if not isinstance(g, dict):
            _fail("$.granulation", "expected an object mapping every point to a list of labels")
        for x in g:
            if x not in u.rank:
                _fail(f"$.granulation.{x}", f"unknown element {x!r}")
        for x in u.elements:
            if x not in g:
                _fail("$.granulation", f"no granule for {x!r}; the map must be total")
        doc.granulation = Granulation(u, tuple(_labels(u, g[x], f"$.granulation.{x}") for x in u.elements))
    if "sets" in data:
        sets = data["sets"]
        if not isinstance(sets, dict):
            _fail("$.sets", "expected an object of named sets")
        doc.sets = {k: _labels(u, v, f"$.sets.{k}") for k, v in sets.items()}
    if "families" in data:
        fams = data["families"]
        if not isinstance(fams, dict):
            _fail("$.families", "expected an object of named families")
        out = {}
        for k, v in fams.items():
            if not isinstance(v, list):
                _fail(f"$.families.{k}", "expected a list of sets")
            ms = {_labels(u, s, f"$.families.{k}[{i}]") for i, s in enumerate(v)}
            out[k] = tuple(sorted(ms, key=canonical_key))
        doc.families = out
    if "actual_points" in data:
        doc.actual_points = _labels(u, data["actual_points"], "$.actual_points")
    if "powerset_relation" in data:
        pr = data["powerset_relation"]
        if pr == "subset":
            doc.powerset_relation = "subset"
        elif isinstance(pr, list):
            prs = set()
            for i, p in enumerate(pr):
                if not (isinstance(p, list) and len(p) == 2):
                    _fail(f"$.powerset_relation[{i}]", "expected a pair of label lists")
                prs.add((_labels(u, p[0], f"$.powerset_relation[{i}][0]"),
                         _labels(u, p[1], f"$.powerset_relation[{i}][1]")))
            doc.powerset_relation = frozenset(prs)
        else:
            _fail("$.powerset_relation", "expected \"subset\" or a list of pairs")
    return doc


def loads_instance(text: str, require_version: bool = True) -> InstanceDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return parse_instance(data, require_version)


def load_instance(path: str, require_version: bool = True) -> InstanceDocument:
    with open(path, encoding="utf-8") as fh:
        return loads_instance(fh.read(), require_version)


def dump_instance(doc: InstanceDocument) -> dict:
    u = doc.universe
    out = {"version": SCHEMA_VERSION, "universe": list(u.elements), "relation": doc.relation.label_pairs()}
    if doc.granulation is not None:
        out["granulation"] = doc.granulation.to_labels()
    if doc.sets:
        out["sets"] = {k: u.labels(v) for k, v in doc.sets.items()}
    if doc.families:
        out["families"] = {k: [u.labels(m) for m in v] for k, v in doc.families.items()}
    if doc.actual_points is not None:
        out["actual_points"] = u.labels(doc.actual_points)
    if doc.powerset_relation == "subset":
        out["powerset_relation"] = "subset"
    elif doc.powerset_relation:
        out["powerset_relation"] = [[u.labels(a), u.labels(b)] for a, b in sorted(doc.powerset_relation)]
    return out
