import json
from pathlib import Path

import pytest
from hypothesis import given

from relnerve.cli import main
from relnerve.fincat import CategoryError, FinFunctor, walking_retract
from relnerve.io import (
    category_from_dict, category_to_dict, dumps, emit_category, functor_from_dict, functor_to_dict, parse_category,
)
from relnerve.relcat import max_rel
from conftest import categories

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@given(categories())
def test_category_round_trip(C):
    assert parse_category(emit_category(C)) == C


def test_relcat_round_trip():
    R = max_rel(walking_retract())
    assert parse_category(emit_category(R)) == R


def test_emit_is_canonical():
    text = emit_category(walking_retract())
    assert text.endswith("\n") and text == dumps(json.loads(text))


@pytest.mark.parametrize("mutate, code", [
    (lambda d: d.update(extra=1), "schema"),
    (lambda d: d.update(schema=2), "schema"),
    (lambda d: d["morphisms"].append(dict(d["morphisms"][0])), "schema"),
    (lambda d: d["composition"].append([d["composition"][0][0], d["composition"][0][1], "zzz"]), "schema"),
    (lambda d: d["morphisms"].append({"id": "q", "src": "0", "tgt": "nowhere"}), "dangling-id"),
    (lambda d: d.update(weq=["nope"]), "dangling-id"),
])
def test_bad_documents(mutate, code):
    doc = category_to_dict(walking_retract())
    mutate(doc)
    with pytest.raises(CategoryError) as exc:
        category_from_dict(doc)
    assert exc.value.code == code


def test_invalid_json():
    with pytest.raises(CategoryError) as exc:
        parse_category("{not json")
    assert exc.value.code == "schema"


def test_functor_round_trip():
    doc = json.loads((CORPUS / "functor_point_to_iso.json").read_text())
    F, src, tgt = functor_from_dict(doc)
    assert functor_from_dict(functor_to_dict(F, src, tgt))[0].morphism_map == F.morphism_map


def test_bad_functor():
    doc = json.loads((CORPUS / "functor_point_to_iso.json").read_text())
    doc["objects"] = {"0": "b"}
    with pytest.raises(CategoryError) as exc:
        functor_from_dict(doc)
    assert exc.value.code == "bad-functor"


def test_cli_nerve(capsys):
    code, out, _ = run(capsys, "nerve", "--in", str(CORPUS / "interval2.json"), "--d", "2")
    assert code == 0 and json.loads(out)["level_sizes"] == [3, 6, 10]


@pytest.mark.parametrize("argv, expected", [
    (["segal", "--in", "interval2.json"], 0),
    (["segal", "--catvalued", "--in", "interval1_max.json", "--n-max", "2"], 0),
    (["complete", "--in", "interval2.json"], 0),
    (["complete", "--in", "walking_iso.json"], 1),
    (["localize", "--in", "interval1_max.json"], 0),
    (["localize", "--in", "parallel_pair_max.json"], 3),
    (["saturated", "--in", "walking_retract_f.json"], 1),
    (["saturated", "--in", "interval2.json"], 0),
    (["bk-weq", "--functor", "functor_point_to_iso.json"], 0),
    (["bk-weq", "--functor", "functor_discrete_to_point.json"], 1),
    (["pi1", "--in", "z2.json"], 0),
    (["pi1", "--in", "parallel_pair_max.json", "--max-cosets", "50"], 3),
    (["hom", "--in", "interval2.json", "--x", "0", "--y", "2"], 0),
    (["hom", "--in", "interval2.json", "--x", "0", "--y", "9"], 2),
    (["involution", "--max-n", "3"], 0),
    (["verify-zigzag", "--max-n", "2"], 0),
    (["tshriek", "--in", "walking_iso.json", "--d", "2"], 0),
    (["tshriek", "--upper", "--in", "interval1.json", "--d1", "1", "--d2", "1"], 0),
    (["diag", "--in", "interval1.json"], 0),
    (["rezk-nerve", "--in", "z2.json", "--d1", "1", "--d2", "1"], 0),
    (["nerve", "--in", "missing.json"], 2),
    (["frobnicate"], 2),
])
def test_cli_exit_codes(capsys, argv, expected):
    argv = [str(CORPUS / a) if a.endswith(".json") else a for a in argv]
    assert run(capsys, *argv)[0] == expected


def test_cli_parse_error_reports_json(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"schema": 1, "objects": ["x"], "morphisms": [], "composition": []}')
    code, out, err = run(capsys, "nerve", "--in", str(bad))
    assert code == 2 and out == "" and json.loads(err)["error"] == "missing-identity"


def test_cli_cell_limit(capsys, monkeypatch):
    monkeypatch.setenv("RNK_MAX_CELLS", "50")
    code, _, err = run(capsys, "nerve", "--in", str(CORPUS / "interval2.json"), "--d", "4")
    assert code == 2 and json.loads(err)["error"] == "cell-limit"


def test_cli_emit_report(capsys, tmp_path):
    report = tmp_path / "r.json"
    code, out, _ = run(capsys, "--emit-report", str(report), "saturated", "--in", str(CORPUS / "walking_retract_f.json"))
    assert code == 1 and report.read_text() == out
    assert json.loads(out) == {"verdict": "no", "witnesses": ["e", "g"]}


def test_cli_zigzag_full_report(capsys, tmp_path):
    report = tmp_path / "z.json"
    code, out, _ = run(capsys, "verify-zigzag", "--max-n", "2", "--emit-report", str(report))
    full = json.loads(report.read_text())
    assert code == 0 and "entries" in full and "entries" not in json.loads(out)
    assert full["instances_checked"] == json.loads(out)["instances_checked"]


def test_cli_is_deterministic(capsys):
    outs = {run(capsys, "--seed", str(s), "localize", "--in", str(CORPUS / "poset2_partial.json"))[1] for s in (0, 1, 2)}
    assert len(outs) == 1
