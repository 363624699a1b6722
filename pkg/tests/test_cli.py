import json
from pathlib import Path

import jsonschema
import pytest

from artifact.cli import main

SCHEMAS = Path(__file__).resolve().parents[1] / "schemas"


def schema(name):
    return json.loads((SCHEMAS / f"{name}.json").read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    doc = json.loads(out)
    jsonschema.validate(doc, schema("envelope"))
    jsonschema.validate(doc["payload"], schema(doc["command"]))
    return code, doc


def test_classify_so23(capsys):
    code, doc = run_json(capsys, "classify", "--real-form", "so:2,3")
    assert code == 0 and [d["diagram"] for d in doc["payload"]["diagrams"]] == ["5-", "3+,1-^2"]  # [DERIVED]


def test_classify_sp22_empty(capsys):
    code, doc = run_json(capsys, "classify", "--real-form", "sp:2,2")
    assert code == 0 and doc["payload"]["diagrams"] == []  # [PAPER]


def test_classify_su33(capsys):
    _, doc = run_json(capsys, "classify", "--real-form", "su:3,3")
    assert sorted(d["diagram"] for d in doc["payload"]["diagrams"]) == ["2+^3", "2-^3"]  # [PAPER]


def test_classify_case_id(capsys):
    code, doc = run_json(capsys, "classify", "--real-form", "quat-F4")
    assert code == 0 and doc["payload"]["catalog"] is not None


def test_oracle_f4(capsys):
    _, doc = run_json(capsys, "oracle", "--type", "F4", "--labels", "0,0,2,2")
    assert doc["payload"]["magical"] and doc["payload"]["dim_c"] == 3  # [PAPER]


def test_oracle_g2(capsys):
    _, doc = run_json(capsys, "oracle", "--type", "G2", "--labels", "2,2")
    assert doc["payload"]["magical"] and doc["payload"]["dim_c"] == 0  # [PAPER]


def test_oracle_sl3_not_magical(capsys):
    code, doc = run_json(capsys, "oracle", "--type", "sl", "--n", "3", "--partition", "2,1")
    assert code == 0 and not doc["payload"]["magical"] and doc["payload"]["witness"]  # [DERIVED]


def test_oracle_structure(capsys):
    _, doc = run_json(capsys, "oracle", "--type", "sp", "--n", "4", "--partition", "2,2", "--structure")
    assert doc["payload"]["magical"] and doc["payload"]["structure"]


def test_record_quat_e8(capsys):
    code, doc = run_json(capsys, "record", "--case", "quat-E8", "--genus", "2")
    p = json.dumps(doc["payload"])
    assert code == 0 and "unknown (expected 1)" in p  # [PAPER]


def test_record_text(capsys):
    code, out, _ = run(capsys, "record", "--case", "hermitian-C:4", "--genus", "3")
    assert code == 0 and "h0 = [6]" in out  # [TRIVIAL] 3g - 3 with g = 3


def test_render_round_trip(capsys):
    _, a = run_json(capsys, "render", "--poset", "F4", "--labels", "0,0,2,2")
    _, b = run_json(capsys, "render", "--poset", "F4", "--labels", "0,0,2,2")
    assert a == b and a["payload"]["text"].startswith("digraph")
    code, out, _ = run(capsys, "render", "--poset", "F4", "--labels", "0,0,2,2")
    assert code == 0 and out == a["payload"]["text"]


def test_render_dynkin_rejects_dot(capsys):
    code, _, err = run(capsys, "render", "--dynkin", "B4", "--labels", "2,2,0,0", "--format", "dot")
    assert code == 2 and err


def test_verify_identities(capsys):
    code, doc = run_json(capsys, "verify", "--suite", "identities")
    assert code == 0 and doc["payload"]["failed"] == 0


@pytest.mark.parametrize("argv", [
    ["classify", "--real-form", "bogus"],
    ["oracle", "--type", "F4", "--labels", "1,2"],
    ["record", "--case", "quat-G2"],
    ["record", "--case", "quat-F4", "--genus", "1"],
    ["render", "--poset", "X9", "--labels", "2"],
])
def test_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:") and out == ""


def test_exact_numbers_serialised(capsys):
    _, doc = run_json(capsys, "classify", "--real-form", "su*:2", "--cap", "4")
    assert doc["args"]["cap"] == 4
