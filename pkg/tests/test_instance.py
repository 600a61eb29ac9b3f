import json

import pytest

from roughideals.errors import MissingFamilyError, SchemaError
from roughideals.instance import dump_instance, load_instance, loads_instance, parse_instance

BASE = {"version": "1", "universe": ["a", "b"], "relation": [["a", "b"]]}


def test_shipped_document_round_trips(s6_path):
    doc = load_instance(s6_path)
    assert doc.universe.elements == ("a", "b", "c", "e", "f", "g")
    again = parse_instance(json.loads(json.dumps(dump_instance(doc))))
    assert dump_instance(again) == dump_instance(doc)
    assert doc.set_mask("A") == doc.universe.mask("ab")


@pytest.mark.parametrize("patch, path", [
    ({"version": "2"}, "$.version"),
    ({"extra": 1}, "$"),
    ({"universe": []}, "$.universe"),
    ({"relation": [["a", "z"]]}, "$.relation[0][1]"),
    ({"relation": [["a"]]}, "$.relation[0]"),
    ({"sets": {"A": ["q"]}}, "$.sets.A[0]"),
    ({"granulation": {"a": ["a"]}}, "$.granulation"),
    ({"families": {"I": [["a"], [3]]}}, "$.families.I[1][0]"),
    ({"powerset_relation": 5}, "$.powerset_relation"),
])
def test_errors_name_the_json_path(patch, path):
    with pytest.raises(SchemaError) as exc:
        parse_instance({**BASE, **patch})
    assert str(exc.value).split(": ")[0].endswith(path)
    assert exc.value.code == SchemaError.code


def test_missing_version_is_allowed_when_not_required():
    data = {k: v for k, v in BASE.items() if k != "version"}
    with pytest.raises(SchemaError):
        parse_instance(data)
    assert parse_instance(data, require_version=False).universe.n == 2


def test_bad_json_reports_position():
    with pytest.raises(SchemaError, match="line 1 column"):
        loads_instance('{"version": ')


def test_missing_names():
    doc = parse_instance(BASE)
    with pytest.raises(MissingFamilyError):
        doc.family("I")
    with pytest.raises(MissingFamilyError):
        doc.set_mask("A")


def test_families_are_canonically_ordered_and_deduplicated():
    doc = parse_instance({**BASE, "families": {"I": [["a", "b"], [], ["b"], ["b"]]}})
    assert doc.families["I"] == (0, 0b10, 0b11)
