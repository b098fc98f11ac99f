import json

import jsonschema
import pytest

from su3singlet.cli import cmd_act, cmd_basis, cmd_matrix, cmd_verify, main


def test_basis_json(schema):
    doc = json.loads(cmd_basis("su3", 3))
    jsonschema.validate(doc, schema("basis"))
    assert doc["labels"][0] == {"label": {"l12": 0, "l21": 0, "l13": 0, "l31": 0, "l23": 0, "l32": 0, "p": 0},
                                "norm_sq": "1/1", "irreps": [[0, 0], [0, 0], [0, 0]]}
    jsonschema.validate(json.loads(cmd_basis("su2", 4)), schema("basis"))


def test_basis_csv():
    lines = cmd_basis("su2", 2, "csv").splitlines()
    assert lines[0] == "l12,l23,l31,norm_sq,n"
    assert len(lines) == 1 + 4


def test_act_json(schema, capsys):
    assert main(["act", "--op", "a+(1).b+(2)", "--label", "{}", "--float"]) == 0
    doc = json.loads(capsys.readouterr().out)
    jsonschema.validate(doc, schema("act"))
    (tr,) = doc["transitions"]
    assert tr["coeff"] == {"sign": 1, "radicand": "3/1", "float_lossy": "1.73205080756888"}
    assert doc["source"] == "closed_form"


def test_act_via_oracle_agrees():
    label = '{"l12": 1, "l23": 1, "l31": 1}'
    a = json.loads(cmd_act("su3", "a(1).b(2)", _label(label)))
    b = json.loads(cmd_act("su3", "a(1).b(2)", _label(label), via_oracle=True))
    assert a["transitions"] == b["transitions"]


def _label(text):
    from su3singlet.cli import _parse_label
    return _parse_label("su3", text)


def test_unreachable_needs_oracle(capsys):
    assert main(["act", "--op", "eps(a+(1),b(2),a+(3))", "--label", '{"l12": 1}']) == 2
    assert "--via-oracle" in capsys.readouterr().err
    assert main(["act", "--op", "eps(a+(1),b(2),a+(3))", "--label", '{"l12": 1}', "--via-oracle"]) == 0


@pytest.mark.parametrize("argv", [
    ["act", "--op", "a+(4).b(2)", "--label", "{}"],
    ["act", "--op", "a+(1).b+(2)", "--label", "not json"],
    ["act", "--op", "a+(1).b+(2)", "--label", '{"l99": 1}'],
    ["basis", "--wmax", "-1"],
])
def test_bad_input_exit_code(argv):
    assert main(argv) == 2


def test_matrix(schema, tmp_path):
    out = tmp_path / "m.json"
    assert main(["matrix", "--op", "a(1).b(2)", "--wmax", "4", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    jsonschema.validate(doc, schema("matrix"))
    assert doc["entries"]
    csv = cmd_matrix("su3", "a(1).b(2)", 4, "csv").splitlines()
    assert len(csv) == 1 + len(doc["entries"])


def test_matrix_su2():
    doc = json.loads(cmd_matrix("su2", "a+(3).a(1)", 4))
    assert all(e["coeff"]["sign"] for e in doc["entries"])


def test_verify_su2(schema):
    text, code = cmd_verify("su2", 4, "json")
    assert code == 0
    jsonschema.validate(json.loads(text), schema("verify"))
    text, code = cmd_verify("su2", 4)
    assert text.rstrip().endswith("verify: PASS")


def test_verify_su3_small(schema):
    text, code = cmd_verify("su3", 3, "json")
    doc = json.loads(text)
    jsonschema.validate(doc, schema("verify"))
    assert code == 0 and doc["passed"]
    assert any(r["formula"] == "S(0,p) base" for r in doc["discrepancies"])
    csv_text, _ = cmd_verify("su3", 3, "csv")
    assert csv_text.splitlines()[0].startswith("formula,label,paper_sign")
