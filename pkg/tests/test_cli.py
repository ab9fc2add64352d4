import json

import pytest

from og4kit.cli import EXIT_BOUND, EXIT_FAIL, EXIT_OK, EXIT_PARAM, main


@pytest.fixture
def doc33(tmp_path):
    path = tmp_path / "g33.json"
    assert main(["construct", "gamma", "3", "3", "-o", str(path)]) == EXIT_OK
    return path


def test_construct_to_stdout(capsys):
    assert main(["construct", "lex", "4"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["n"] == 8 and data["family"]["family"] == "lex"


def test_construct_bad_params(capsys):
    assert main(["construct", "double", "3", "4"]) == EXIT_PARAM
    assert main(["construct", "gamma", "4", "4"]) == EXIT_PARAM
    assert "error" in capsys.readouterr().err


def test_analyze(doc33, capsys):
    assert main(["analyze", str(doc33)]) == EXIT_OK
    assert "OG(4): yes; |G_x| = 2" in capsys.readouterr().out
    assert main(["analyze", "--json", str(doc33)]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["member"] is True


def test_quotients_and_csv(doc33, tmp_path, capsys):
    csv_path = tmp_path / "c.csv"
    assert main(["quotients", str(doc33), "--csv", str(csv_path)]) == EXIT_OK
    assert csv_path.read_text().startswith("family,r,s,subgroup-id")
    assert main(["quotients", str(doc33), "--bound", "5"]) == EXIT_BOUND


def test_classify(doc33, capsys):
    assert main(["classify", str(doc33)]) == EXIT_OK
    assert "Table 1 line 1; (r, s) = (3, 3)" in capsys.readouterr().out
    assert main(["classify", "--json", "--strict-delta", str(doc33)]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["table_line"] == 1


def test_classify_without_independent_pair(tmp_path, capsys):
    path = tmp_path / "lex.json"
    main(["construct", "lex", "5", "-o", str(path)])
    assert main(["classify", str(path)]) == EXIT_OK
    assert "no independent" in capsys.readouterr().out


def test_meta(doc33, capsys):
    # generators keep construction order: mu, nu, sigma
    assert main(["meta", "--json", str(doc33), "0", "1"]) == EXIT_OK
    out = json.loads(capsys.readouterr().out)
    assert out["is_weak"] and out["m"] == 3
    assert main(["meta", str(doc33), "0", "9"]) == EXIT_PARAM
    assert main(["meta", str(doc33), "[0,1,2,3,4,5,6,7,8]", "[1,0,2,3,4,5,6,7,8]",
                 "--element"]) == EXIT_PARAM


def test_bad_document(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"version": 1, "n": 3, "generators": [[0, 1]], "arcs": []}')
    assert main(["analyze", str(path)]) == EXIT_PARAM
    assert "generators[0]" in capsys.readouterr().err
    assert main(["analyze", str(tmp_path / "missing.json")]) == EXIT_PARAM


def test_export(doc33, tmp_path):
    dot, csv = tmp_path / "g.dot", tmp_path / "g.csv"
    assert main(["export", str(doc33), "--dot", str(dot), "--csv", str(csv)]) == EXIT_OK
    assert dot.read_text().startswith("graph G {")
    assert main(["export", str(doc33)]) == EXIT_PARAM


def test_verify(capsys):
    assert main(["verify", "monomorphism"]) == EXIT_OK
    assert capsys.readouterr().out.startswith("PASS monomorphism")
    assert main(["verify", "nosuch"]) == EXIT_PARAM
    assert EXIT_FAIL == 1
