import json

import pytest
from hypothesis import given, settings, strategies as st

from penner_entropy import (BadGrading, DimensionTooSmall, MatrixKind, NotATree, ParseError,
                            SchemaError, TwistWord, UnknownVertex, emit_json, entropy_report,
                            parse_spec_file, report_from_json, word_matrix)
from penner_entropy.io import matrix_from_json
from penner_entropy.transfer import identity
from penner_entropy.verify import random_case

from conftest import PHI, PHI4
import random

BASE = {
    "tree": {"vertices": ["1", "2", "3"], "edges": [["1", "2"], ["2", "3"]]},
    "n": 3,
    "word_applied_first": [{"vertex": "3", "sign": "+"}, {"vertex": "2", "sign": "-"}],
}


def load(obj):
    return parse_spec_file(json.dumps(obj).encode())


def test_spec_files(spec_dir):
    a3 = parse_spec_file((spec_dir / "a3.json").read_bytes())
    assert a3.word == PHI and a3.plumbing.n == 3
    assert a3.metadata["description"].startswith("A3")
    a3w4 = parse_spec_file((spec_dir / "a3w4.json").read_bytes())
    assert a3w4.word == PHI4 and a3w4.plumbing.n == 4


@pytest.mark.parametrize("change,error", [
    ({"n": 2}, DimensionTooSmall),
    ({"extra": 1}, SchemaError),
    ({"word_paper_order": []}, SchemaError),
    ({"n": "3"}, SchemaError),
    ({"n": True}, SchemaError),
    ({"grading": [{"edge": ["1", "3"], "s": 1}]}, BadGrading),
    ({"grading": [{"edge": ["1", "2"]}]}, SchemaError),
    ({"tree": {"vertices": ["1", "2", "3"], "edges": [["1", "2"]]}}, NotATree),
    ({"tree": {"vertices": ["1", "2", "3"]}}, SchemaError),
    ({"word_applied_first": [{"vertex": "9", "sign": "+"}]}, UnknownVertex),
    ({"word_applied_first": [{"vertex": "1", "sign": "x"}]}, SchemaError),
    ({"word_applied_first": [{"vertex": 1, "sign": "+"}]}, SchemaError),
    ({"metadata": {"k": 1}}, SchemaError),
])
def test_spec_errors(change, error):
    with pytest.raises(error):
        load({**BASE, **change})


def test_missing_word_key():
    obj = dict(BASE)
    del obj["word_applied_first"]
    with pytest.raises(SchemaError):
        load(obj)


def test_duplicate_key_and_malformed():
    with pytest.raises(SchemaError):
        parse_spec_file(b'{"n": 3, "n": 4}')
    with pytest.raises(ParseError):
        parse_spec_file(b'{"n": 3')
    with pytest.raises(ParseError):
        parse_spec_file(b"\xff\xfe")


def test_spec_round_trip(spec_dir):
    spec = parse_spec_file((spec_dir / "a3w4.json").read_bytes())
    assert parse_spec_file(emit_json(spec)) == spec


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_random_spec_round_trip(seed):
    case = random_case(random.Random(seed))
    spec = parse_spec_file(json.dumps({
        "tree": {"vertices": list(case.spec.vertices),
                 "edges": [list(e) for e in case.spec.tree.sorted_edges()]},
        "n": case.spec.n,
        "grading": [{"edge": list(p), "s": case.spec.s(*p)} for p in sorted(case.spec.grading.anchored)],
        "word_applied_first": [{"vertex": x.vertex, "sign": "+" if x.sign > 0 else "-"}
                               for x in case.word],
    }))
    assert spec.plumbing == case.spec
    assert parse_spec_file(emit_json(spec)) == spec


def test_identity_matrix_json(spec3):
    out = emit_json(identity(MatrixKind.unsigned(), spec3.vertices))
    assert b'"rows":[["1","0","0"],["0","1","0"],["0","0","1"]]' in out


def test_word_matrix_json(spec3, phi):
    out = json.loads(emit_json(word_matrix(phi, 1, MatrixKind.unsigned(), spec3)))
    assert out["rows"] == [["1", "1", "1"], ["1", "2", "2"], ["0", "1", "2"]]
    assert "n" not in out and "t" not in out


@pytest.mark.parametrize("kind", [MatrixKind.unsigned(), MatrixKind.signed(4),
                                  MatrixKind.weighted(0.25, 4)])
def test_matrix_round_trip(spec3, phi4, kind):
    m = word_matrix(phi4, 2, kind, spec3)
    assert matrix_from_json(emit_json(m)) == m


def test_weighted_zero_entries_round_trip(spec3):
    m = word_matrix(TwistWord([("1", 1)]), 1, MatrixKind.weighted(0.5, 3), spec3)
    assert matrix_from_json(emit_json(m)) == m


def test_big_integers_are_strings(spec3, phi):
    m = word_matrix(phi, 60, MatrixKind.unsigned(), spec3)
    out = json.loads(emit_json(m))
    assert int(out["rows"][1][1]) == m.rows[1][1] > 2**64


def test_report_round_trip(spec3, phi):
    report = entropy_report(spec3, phi, m_max=5, t_values=[0.0, 0.5])
    data = emit_json(report)
    assert report_from_json(data) == report
    assert emit_json(report_from_json(data)) == data
    assert b"null" not in data


def test_empty_fields_omitted(spec3):
    data = json.loads(emit_json(entropy_report(spec3, TwistWord(), m_max=1)))
    assert "t_weighted" not in data and "word_applied_first" not in data
    assert "violations" not in data["penner"]
