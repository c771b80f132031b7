import json

import pytest

from vcl.cli import main
from vcl.correspondence import to_prop_model
from vcl.fixtures import bundled, fixture_ex1
from vcl.io import model_to_dict

EX1 = str(bundled("ex1.json"))
EX2 = str(bundled("ex2.json"))


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_project_text(capsys):
    code, out, _ = run(capsys, "project", "--model", EX1, "--state", "s", "--var", "x", "--coalition", "1",
                       "--member", "a", "--member", "a,b,c")
    assert code == 0
    lines = out.splitlines()
    assert lines[:3] == ["generators:", "{a,b}", "{b,c}"]
    assert "indeterminacy: 2" in lines
    assert "{a}: no" in lines and "{a,b,c}: yes" in lines


def test_project_json_with_dual(capsys):
    code, out, _ = run(capsys, "project", "--model", EX1, "--state", "s", "--var", "x", "--coalition", "1",
                       "--dual", "--witness", "--format", "json")
    doc = json.loads(out)
    assert doc["transversal_dual"] == [["a", "c"], ["b"]]
    assert [w["profile"] for w in doc["witnesses"]] == [{"1": "α1"}, {"1": "α2"}]


def test_check_exit_codes(capsys):
    assert run(capsys, "check", "--model", EX2, "--state", "s", "--formula", "[1](x in {a,b})")[0] == 0
    assert run(capsys, "check", "--model", EX2, "--state", "s", "--formula", "[1](x=a)")[0] == 1
    code, _, err = run(capsys, "check", "--model", EX2, "--state", "s", "--formula", "x=z")
    assert code == 2 and "not in domain" in err


def test_max_profiles_guard(capsys):
    code, _, err = run(capsys, "--max-profiles", "2", "check", "--model", EX1, "--state", "s", "--formula", "T")
    assert code == 2 and "--max-profiles" in err


def test_translate_and_coherence(capsys, tmp_path):
    code, out, _ = run(capsys, "translate", "--model", EX1)
    assert code == 0
    prop = tmp_path / "p.json"
    prop.write_text(out, encoding="utf-8")
    assert json.loads(out) == model_to_dict(to_prop_model(fixture_ex1()))
    assert run(capsys, "coherence", "--model", str(prop))[0] == 0
    code, out, _ = run(capsys, "translate", "--direction", "prop2vcl", "--model", str(prop))
    assert json.loads(out) == model_to_dict(fixture_ex1())
    code, out, _ = run(capsys, "translate", "--model", EX1, "--formula", "[1](x=a)")
    assert out.strip() == "[1](x=a)"


def test_incoherent_model(capsys, tmp_path):
    doc = model_to_dict(to_prop_model(fixture_ex1()))
    doc["states"]["s"] = []
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc), encoding="utf-8")
    code, out, _ = run(capsys, "coherence", "--model", str(bad))
    assert code == 1 and "no-value" in out
    code, _, err = run(capsys, "translate", "--direction", "prop2vcl", "--model", str(bad))
    assert code == 2 and "s x no-value" in err


@pytest.mark.parametrize("name, code", [("c3.json", 0), ("mp.json", 0), ("bad_re_coalition.json", 1)])
def test_prove(capsys, name, code):
    got, out, _ = run(capsys, "prove", "--derivation", str(bundled(f"derivations/{name}")))
    assert got == code
    if code:
        assert out.startswith("rejected at line 2")


def test_props(capsys):
    code, out, _ = run(capsys, "props", "--trials", "2", "--format", "json")
    assert code == 0 and json.loads(out)


def test_missing_file(capsys):
    assert run(capsys, "check", "--model", "/nonexistent.json", "--state", "s", "--formula", "T")[0] == 2
