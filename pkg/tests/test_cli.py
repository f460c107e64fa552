import json
from pathlib import Path

import pytest

from orbistruct.cli import main
from orbistruct.report import ReportDocument, validate_document

FIXTURES = Path(__file__).parent / "fixtures"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_json(capsys):
    code, out, err = run(capsys, "analyze", "--gamma", "A5", "--b", "A4", "--delta", "A3", "--format", "json")
    assert code == 0 and err == ""
    doc = json.loads(out)
    validate_document(doc)
    p = doc["payload"]
    assert p["gamma_P_O"]["label"] == "A4"
    assert p["gamma_Q_O"]["label"] == "Z2"
    assert p["gamma_Q_P"]["route1"]["label"] == p["gamma_Q_P"]["route2"]["label"] == "1"
    assert p["canonical_compatible"] is False
    assert p["flags"]["P_saturated_in_O"] is False
    witness = p["structures"]["P_in_O"]["saturation_witness"]
    assert witness["gamma"] == "(1 5 4 3 2)" and witness["support"] == ["(2 3 4)"]


def test_analyze_text_order(capsys):
    code, out, _ = run(capsys, "analyze", "--gamma", "A5", "--b", "A4", "--delta", "A3")
    assert code == 0
    assert out.index("Γ_P^O") < out.index("Γ_Q^O") < out.index("Γ_Q^P")


def test_analyze_generator_lists(capsys):
    code, out, _ = run(
        capsys, "analyze", "--gamma", "(1 2 3 4 5);(1 2 3)", "--b", "(1 2 3);(1 2)(3 4)",
        "--delta", "(1 2 3)", "--format", "json",
    )
    assert code == 0
    assert json.loads(out)["payload"]["gamma_P_O"]["label"] == "A4"


def test_analyze_custom_lambda(capsys):
    code, out, _ = run(
        capsys, "analyze", "--gamma", "A5", "--b", "A4", "--delta", "A3",
        "--lambda", "(1 2 3)", "--format", "json",
    )
    assert code == 0
    custom = json.loads(out)["payload"]["structures"]["Q_custom_in_O"]
    assert custom["isotropy"]["label"] == "1"
    assert custom["canonical"] is False


def test_analyze_rejects_bad_chain(capsys):
    code, _, err = run(capsys, "analyze", "--gamma", "A5", "--b", "(1 2)", "--delta", "()")
    assert code == 2 and "error" in err


def test_analyze_rejects_bad_lambda(capsys):
    code, _, err = run(capsys, "analyze", "--gamma", "A5", "--b", "A4", "--delta", "A3", "--lambda", "(1 2 3 4 5)")
    assert code == 2


def test_analyze_parse_error(capsys):
    code, _, err = run(capsys, "analyze", "--gamma", "A5", "--b", "(1 2 3", "--delta", "A3")
    assert code == 2 and "position" in err


def test_analyze_degenerate_chain_warns(capsys):
    code, _, err = run(capsys, "analyze", "--gamma", "A5", "--b", "A5", "--delta", "A5")
    assert code == 0 and "warning" in err


def test_abelian_gamma_is_invalid(capsys):
    code, _, err = run(capsys, "analyze", "--gamma", "Z6", "--b", "(1 3 5)(2 4 6)", "--delta", "()")
    assert code == 2 and "center" in err


def test_resource_limit_exit_code(capsys, monkeypatch):
    monkeypatch.setenv("ORBISTRUCT_ORDER_CAP", "10")
    code, _, err = run(capsys, "sweep", "A5")
    assert code == 1 and "ORBISTRUCT_ORDER_CAP" in err


def test_sweep_matches_golden(capsys):
    code, out, _ = run(capsys, "sweep", "S4", "--format", "json")
    assert code == 0
    assert json.loads(out) == json.loads((FIXTURES / "sweep_S4.json").read_text())


def test_sweep_filters(capsys):
    code, out, _ = run(capsys, "sweep", "S4", "--only-incompatible", "--format", "json")
    doc = json.loads(out)
    validate_document(doc)
    chains = doc["payload"]["chains"]
    assert len(chains) == 1
    assert chains[0]["report"]["chain"]["b"]["label"] == "D4"
    code, out, _ = run(capsys, "sweep", "S4", "--only-unsaturated", "--format", "json")
    assert len(json.loads(out)["payload"]["chains"]) == 6


def test_sweep_text_and_warnings(capsys):
    code, out, err = run(capsys, "sweep", "Z3")
    assert code == 0 and "warning" in err


def test_catalog_commands(capsys):
    code, out, _ = run(capsys, "catalog", "list")
    assert code == 0 and "A5" in out and "S4" in out
    code, out, _ = run(capsys, "catalog", "show", "A4", "--format", "json")
    doc = json.loads(out)
    validate_document(doc)
    (g,) = doc["payload"]["groups"]
    assert g["order"] == 12 and len(g["elements"]) == 12
    code, _, err = run(capsys, "catalog", "show", "M11")
    assert code == 2


def test_product(capsys):
    code, out, _ = run(capsys, "product", "(1 2)", "(2 3)")
    assert code == 0 and out.strip() == "(1 2 3)"
    code, out, _ = run(capsys, "product", "(1 2)(3 4)", "(1 3)(2 4)")
    assert out.strip() == "(1 4)(2 3)"


def test_document_round_trip(capsys):
    _, out, _ = run(capsys, "analyze", "--gamma", "S4", "--b", "D4", "--delta", "V4", "--format", "json")
    doc = ReportDocument.from_json(out)
    assert json.loads(doc.to_json()) == json.loads(out)
    assert doc.payload["gamma_Q_O"]["label"] == "S3"


def test_schema_rejects_garbage():
    from jsonschema import ValidationError

    with pytest.raises(ValidationError):
        validate_document({"schema_version": "1.0", "kind": "analysis", "command": {}, "payload": {}, "warnings": []})
