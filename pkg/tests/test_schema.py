import json

import pytest

from sheaf_homology.errors import InputError
from sheaf_homology.homology import homology
from sheaf_homology.schema import (
    parse,
    parse_group,
    read_space,
    sheaf_from_json,
    sheaf_to_json,
    space_from_json,
    space_to_json,
)

from .conftest import load


@pytest.mark.parametrize(
    "text, expected",
    [
        ("0", "0"),
        ("Z", "Z"),
        ("Z^3", "Z^3"),
        ("Z/2", "Z/2"),
        ("Z + Z/2 + Z/4", "Z + Z/2 + Z/4"),
        ("Z/1", "0"),
        ("Z/2+Z/3", "Z/6"),
    ],
)
def test_parse_group(text, expected):
    assert str(parse_group(text)) == expected


@pytest.mark.parametrize("text", ["Q", "Z/0", "Z^", "2Z", ""])
def test_parse_group_rejects(text):
    with pytest.raises(InputError, match="cannot read the group"):
        parse_group(text)


def test_space_errors_name_the_file(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"elements": ["a", "b"], "covers": [["a", "b"], ["b", "a"]]}')
    with pytest.raises(InputError, match="bad.json: cycle"):
        read_space(path)

    path.write_text("{not json")
    with pytest.raises(InputError, match="invalid JSON at line 1"):
        read_space(path)

    with pytest.raises(InputError, match="missing key 'covers'"):
        space_from_json({"elements": []})
    with pytest.raises(InputError, match=r"covers\[0\] must be a pair"):
        space_from_json({"elements": ["a"], "covers": [["a"]]})


def test_space_name_defaults_to_file_stem(tmp_path):
    path = tmp_path / "line.json"
    path.write_text(json.dumps({"elements": ["a", "b"], "covers": [["a", "b"]]}))
    name, p = read_space(path)
    assert name == "line"
    assert len(p) == 2


def test_sheaf_errors(s1):
    with pytest.raises(InputError, match="no stalk for element 'd'"):
        sheaf_from_json({"stalks": {"a": "Z", "b": "Z", "c": "Z"}}, s1)
    with pytest.raises(InputError, match="written for space 's2'"):
        sheaf_from_json({"space": "s2", "stalks": {}}, s1, "s1")
    with pytest.raises(InputError, match="must look like 'x->y'"):
        sheaf_from_json({"stalks": {x: "0" for x in "abcd"}, "maps": {"a-c": []}}, s1)
    with pytest.raises(InputError, match="is missing"):
        sheaf_from_json({"stalks": {x: "Z" for x in "abcd"}}, s1)
    with pytest.raises(InputError, match=r"torsion must list integers above 1"):
        sheaf_from_json({"stalks": {"a": {"rank": 0, "torsion": [1]}}}, s1)


def test_maps_may_be_omitted_around_zero_stalks(s1):
    data = {
        "stalks": {"a": "Z", "b": "0", "c": "Z", "d": "0"},
        "maps": {"a->c": [[1]], "b->c": []},
    }
    f = sheaf_from_json(data, s1)
    assert f.cover_matrix("a", "d").rows == 0
    # a dies in d, and c is glued to a
    assert [str(g) for g in homology(f, 1)] == ["0", "0"]


def test_stalk_objects_and_strings_agree(s1):
    maps = {f"{x}->{y}": [[1, 0], [0, 1]] for x, y in s1.covers}
    as_text = sheaf_from_json({"stalks": {x: "Z + Z/2" for x in "abcd"}, "maps": maps}, s1)
    as_object = sheaf_from_json(
        {"stalks": {x: {"rank": 1, "torsion": [2]} for x in "abcd"}, "maps": maps}, s1
    )
    assert str(as_text.stalk("a")) == str(as_object.stalk("a")) == "Z + Z/2"
    assert [str(g) for g in homology(as_text, 1)] == ["Z + Z/2", "Z + Z/2"]


def test_canonical_form_of_bundled_sheaf():
    name, p, f = load("random7", "random7_sheaf")
    data = sheaf_to_json(name, f)
    assert data["space"] == "random7"
    assert data["stalks"]["p4"] == {"rank": 0, "torsion": [4]}
    again = sheaf_from_json(json.loads(json.dumps(data)), p, name)
    for a, b in zip(homology(f, 2), homology(again, 2)):
        assert a.is_isomorphic(b)


def test_space_to_json_lists_covers_in_order(s1):
    data = space_to_json("s1", s1)
    assert data["covers"] == [["a", "c"], ["a", "d"], ["b", "c"], ["b", "d"]]


def test_parse_reads_text_without_touching_disk():
    text = json.dumps({"name": "pt", "elements": ["*"], "covers": []})
    name, p, f = parse("virtual.json", space_text=text)
    assert name == "pt"
    assert f is None
