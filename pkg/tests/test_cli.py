"""End-to-end tests for the dmod command line."""
import io
import json
import sys

import pytest

from src.cli.app import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


@pytest.fixture
def stdin(monkeypatch):
    def _feed(data):
        text = data if isinstance(data, str) else json.dumps(data)
        monkeypatch.setattr(sys, "stdin", io.StringIO(text))

    return _feed


G1 = {"ring": "A", "prec": 10, "terms": [[0, [[1]]], [2, [[0], [1], [0], [2]]]]}


def test_gen_deltaT(capsys):
    code, data = run_json(capsys, "gen", "deltaT", "--q", "3", "--prec", "8")
    assert code == 0
    assert data == {"ring": "A", "prec": 8, "terms": [[2, [[1]]], [6, [[2]]]]}


def test_gen_ET(capsys):
    code, data = run_json(capsys, "gen", "ET", "--prec", "4")
    assert code == 0
    assert data["terms"] == [[1, [[1]]], [3, [[0], [2]]]]


def test_gen_gd_constant_term(capsys):
    code, data = run_json(capsys, "gen", "gd:2", "--prec", "5")
    assert code == 0
    assert data["terms"][0] == [0, [[1]]]


def test_gen_over_F9(capsys):
    code, data = run_json(capsys, "gen", "deltaT", "--q", "9", "--modulus", "x^2+1", "--prec", "9")
    assert code == 0
    assert data["terms"] == [[8, [[1, 0]]]]


def test_gen_text_format(capsys):
    code, out = run(capsys, "gen", "ET", "--prec", "4", "--format", "text")
    assert code == 0
    assert out.strip() == "(1)*u^1 + (2*T)*u^3 + O(u^4)"


def test_gen_unknown_name(capsys):
    code, data = run_json(capsys, "gen", "nope")
    assert code == 2
    assert data["error"] == "UsageError"


def test_even_characteristic_is_a_usage_error(capsys):
    code, data = run_json(capsys, "gen", "ET", "--q", "4")
    assert code == 2
    assert data["error"] == "EvenCharacteristic"


def test_precision_cap(capsys):
    code, data = run_json(capsys, "gen", "ET", "--prec", "100000")
    assert code == 2
    assert data["error"] == "PrecisionOutOfRange"


def test_missing_argument_exits_2(capsys):
    assert main(["decompose"]) == 2


def test_decompose_g1(capsys, stdin):
    stdin(G1)
    code, data = run_json(capsys, "decompose", "--weight", "2", "--type", "0")
    assert code == 0
    assert (data["k"], data["l"]) == (2, 0)
    assert data["iso"]["coeffs"] == [[[1]], [[0], [0], [0], [2]]]


def test_decompose_rejects_tampered_series(capsys, stdin):
    tampered = dict(G1, terms=G1["terms"] + [[4, [[1]]]])
    stdin(tampered)
    code, data = run_json(capsys, "decompose", "--weight", "2", "--type", "0")
    assert code == 1
    assert data["error"] == "NotModular"


def test_decompose_bad_json(capsys, stdin):
    stdin("{not json")
    code, data = run_json(capsys, "decompose", "--weight", "2", "--type", "0")
    assert code == 2
    assert data["error"] == "UsageError"


def test_series_of_named_form(capsys):
    code, data = run_json(capsys, "series", "deltaT", "--prec", "8")
    assert code == 0
    assert data["terms"] == [[2, [[1]]], [6, [[2]]]]


def test_vm(capsys):
    code, data = run_json(capsys, "vm", "--weight", "2", "--type", "1")
    assert code == 0
    assert data == [{"k": 2, "l": 1, "iso": {"ring": "A", "weight": 0, "coeffs": [[[1]]]}}]


def test_phi(capsys):
    code, data = run_json(capsys, "phi", "--d", "1")
    assert code == 0
    assert data == {"ring": "A", "weight": 2, "coeffs": [[[1]], [[0], [0], [0], [2]]]}


def test_phi_reduced(capsys):
    code, data = run_json(capsys, "phi", "--d", "1", "--reduce", "--pi", "T+1")
    assert code == 0
    assert data["ring"] == "Fpd"
    assert data["coeffs"] == [[[1]], [[1]]]


def test_filtration(capsys):
    form = {"k": 4, "l": 0, "iso": {"weight": 4, "coeffs": ["0", "1", "-T^3"]}}
    code, data = run_json(capsys, "filtration", json.dumps(form), "--pi", "T+1")
    assert code == 0
    assert data["w"] == 2
    assert data["steps"] == 1


def test_filtration_needs_a_prime(capsys):
    code, data = run_json(capsys, "filtration", "deltaT")
    assert code == 2
    assert "--pi" in data["detail"]


def test_congruent(capsys):
    code, data = run_json(capsys, "congruent", "gd:1", "one", "--pi", "T+1")
    assert code == 0
    assert data["congruent"] is True
    assert data["m"] == 1


def test_congruent_from_stdin(capsys, stdin):
    stdin(["deltaT", "deltaW"])
    code, out = run(capsys, "congruent", "--pi", "T+1", "--format", "text")
    assert code == 0
    assert out.startswith("false")


def test_reducible_pi(capsys):
    code, data = run_json(capsys, "congruent", "gd:1", "one", "--pi", "T^2-1")
    assert code == 1
    assert data["error"] == "Reducible"


def test_verify_identities(capsys):
    code, data = run_json(capsys, "verify", "--suite", "identities", "--prec", "30")
    assert code == 0
    assert data["suite"] == "identities"
    assert data["passed"] is True
    assert all(c["passed"] for c in data["checks"])


def test_verify_modp_needs_prime(capsys):
    code, data = run_json(capsys, "verify", "--suite", "modp")
    assert code == 2
    assert data["error"] == "UsageError"


def test_verify_output_is_deterministic(capsys):
    argv = ("verify", "--suite", "identities", "--prec", "30")
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second
    assert "seconds" not in first[1]


def test_vm_over_residue_field_needs_a_prime(capsys):
    code, data = run_json(capsys, "vm", "--weight", "2", "--type", "1", "--ring", "Fpd")
    assert code == 2
    assert data["error"] == "UsageError"
    assert "--pi" in data["detail"]


def test_vm_over_residue_field(capsys):
    code, data = run_json(capsys, "vm", "--weight", "2", "--type", "1", "--ring", "Fpd", "--pi", "T+1")
    assert code == 0
    assert data[0]["iso"]["ring"] == "Fpd"


def test_missing_config_file_exits_2(capsys, tmp_path):
    code, data = run_json(capsys, "gen", "ET", "--config", str(tmp_path / "nope.yaml"))
    assert code == 2
    assert data["error"] == "UsageError"
