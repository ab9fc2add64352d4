import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from og4kit import io as docio
from og4kit.errors import DocumentError
from og4kit.families import FamilySpec
from og4kit.ogpair import pair_isomorphic
from og4kit.quotient import cyclic_quotient_census, distinct_quotients

from conftest import gamma

SPECS = [FamilySpec("gamma", 3, 3), FamilySpec("gamma", 5, 4, "H", "con2c"),
         FamilySpec("gamma-plus", 4, 4), FamilySpec("double", 3, 3), FamilySpec("lex", 5)]


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(SPECS), st.booleans())
def test_roundtrip(spec, with_labels):
    pair = spec.build()
    labels = [f"v{i}" for i in range(pair.n)] if with_labels else None
    doc = docio.PairDocument.from_pair(pair, spec, labels)
    again = docio.loads(doc.dumps())
    assert again == doc
    back = again.to_pair()
    assert back.graph == pair.graph and back.group == pair.group
    assert again.dumps() == doc.dumps()


def test_file_roundtrip(tmp_path):
    pair = gamma(3, 4)
    path = tmp_path / "g.json"
    docio.write_pair(pair, path, FamilySpec("gamma", 3, 4))
    assert pair_isomorphic(docio.read_pair(path), pair, strict=True) == tuple(range(12))
    assert docio.read_document(path).family.r == 3


def _doc(**changes):
    d = docio.PairDocument.from_pair(gamma(3, 3)).to_dict()
    d.update(changes)
    return d


@pytest.mark.parametrize("changes,where", [
    ({"version": 2}, "version"),
    ({"n": 0}, "n"),
    ({"generators": [[0, 1, 2]]}, "generators[0]"),
    ({"generators": [[0, 1, 2, 3, 4, 5, 6, 7, 9]]}, "generators[0][8]"),
    ({"generators": [[0, 0, 2, 3, 4, 5, 6, 7, 8]]}, "generators[0]"),
    ({"arcs": [[0, 1], [1, 0]]}, "arcs[1]"),
    ({"arcs": [[0, 0]]}, "arcs[0]"),
    ({"arcs": [[0, 1, 2]]}, "arcs[0]"),
    ({"arcs": [[0, "x"]]}, "arcs[0][1]"),
    ({"labels": ["a"]}, "labels"),
    ({"family": {"family": "nope", "r": 3}}, "family"),
])
def test_positioned_errors(changes, where):
    with pytest.raises(DocumentError) as info:
        docio.parse_document(_doc(**changes))
    assert info.value.where == where


def test_missing_field():
    d = _doc()
    del d["arcs"]
    with pytest.raises(DocumentError) as info:
        docio.parse_document(d)
    assert info.value.where == "arcs"


def test_json_syntax_error():
    with pytest.raises(DocumentError) as info:
        docio.loads('{"n": 3,\n "arcs": [}')
    assert info.value.where.startswith("line 2")


def test_dot_and_csv():
    pair = gamma(3, 3)
    doc = docio.PairDocument.from_pair(pair, labels=[str(i) for i in range(9)])
    assert docio.pair_dot(doc).count("--") == 18
    rows = distinct_quotients(cyclic_quotient_census(pair))
    text = docio.census_csv(rows, "gamma", 3, 3)
    lines = text.strip().split("\n")
    assert lines[0] == ",".join(docio.CENSUS_COLUMNS)
    assert len(lines) == 3 and {ln.split(",")[5] for ln in lines[1:]} == {"0", "1"}


def test_dumps_is_sorted_json():
    text = docio.PairDocument.from_pair(gamma(3, 3)).dumps()
    assert list(json.loads(text)) == sorted(json.loads(text))
