import io
import json
import subprocess
import sys

import pytest

from corpus import theta_graph, tropical_line
from tropical_nearby import cli, hodge
from tropical_nearby.cli import RunConfig, main, run
from tropical_nearby.errors import SchemaMismatch
from tropical_nearby.lattice_geometry import dilated_simplex
from tropical_nearby.tropical import dual_complex, with_eclass_labels

T3 = [list(p) for p in dilated_simplex(3, 2).points]
HONEYCOMB = {"points": T3, "lifts": [a * a + a * b + b * b for a, b in T3]}
SQUARE_POSET = {
    "elements": 10,
    "covers": [[0, 1], [0, 2], [0, 3], [0, 4], [1, 5], [2, 5], [2, 6], [3, 6], [3, 7],
               [4, 7], [4, 8], [1, 8], [5, 9], [6, 9], [7, 9], [8, 9]],
}


def call(command, payload, *flags):
    stdin = io.StringIO(payload if isinstance(payload, str) else json.dumps(payload))
    status, report = run(RunConfig(command, *flags), stdin)
    return status, report


def test_limit_example():
    status, rep = call("limit", HONEYCOMB)
    assert status == 0
    assert rep["e_limit"]["terms"] == [] and rep["genus"] == 1
    assert all(c["pass"] for c in rep["audit"])


def test_matroid_example():
    assert call("matroid", {"uniform": [2, 3]}) == (0, {"chi": [-3, 1], "class": [-2, 1]})


def test_gpoly_example():
    assert call("gpoly", SQUARE_POSET) == (0, {"g": [1, 1]})


@pytest.mark.parametrize(
    "command, payload, key",
    [
        ("ehrhart", {"points": T3}, "hstar"),
        ("hvector", {"points": T3}, "h"),
        ("bb", {"points": T3}, "e"),
        ("table", HONEYCOMB, "limit_hodge"),
        ("euler", {"points": T3}, "euler"),
        ("genus", {"points": T3}, "genus"),
        ("bergman", {"uniform": [3, 4]}, "rays"),
        ("psi", tropical_line().to_json(), "psi"),
        ("curve", {"V": 2, "B": 3, "U": 0}, "genus"),
        ("check-lemma", HONEYCOMB, "checked"),
        ("refine-check", dict(HONEYCOMB, edits=[{"split": {"face": 20}}]), "equal"),
    ],
)
def test_every_command_runs(command, payload, key):
    status, rep = call(command, payload)
    assert status == 0, rep
    assert key in rep


def test_command_values():
    assert call("ehrhart", {"points": T3})[1]["hstar"] == [1, 7, 1]
    assert call("euler", {"points": [list(p) for p in dilated_simplex(4, 3).points]})[1]["euler"] == 24
    assert call("curve", {"V": 2, "B": 3, "U": 0})[1] == {"psi": [-1, -1], "genus": 2}
    assert call("check-lemma", HONEYCOMB)[1]["pass"] is True
    assert call("refine-check", dict(HONEYCOMB, edits=[{"split": {"face": 20}}]))[1]["equal"] is True
    psi = call("psi", theta_graph().to_json())[1]
    assert psi["euler"] == -2


def test_refine_check_on_explicit_complex():
    from tropical_nearby.hodge import NewtonData

    C = dual_complex(NewtonData(HONEYCOMB["points"], HONEYCOMB["lifts"]))
    status, rep = call("refine-check", {"complex": C.to_json(), "edits": [{"split": {"face": 3}}]})
    assert status == 0 and rep["equal"]
    status, rep = call("refine-check", {"complex": C.to_json(), "edits": [{"delete_ray": 0}]})
    assert status == 2 and rep["error"] == "RecessionFanChanged"


@pytest.mark.parametrize(
    "command, payload, code",
    [
        ("limit", "{not json", "ParseError"),
        ("limit", {"lifts": [0]}, "SchemaMismatch"),
        ("limit", {"points": [[0, 0], [1, 1]], "lifts": [0, 0]}, "DegenerateInput"),
        ("matroid", {"ground": 4, "bases": [[0, 1], [2, 3]]}, "InvalidMatroid"),
        ("matroid", [1, 2], "SchemaMismatch"),
        ("gpoly", {"elements": 3, "covers": [[0, 1], [1, 2]]}, "NotEulerian"),
        ("psi", {"ambient": 1, "vertices": [[0]], "faces": [{"v": [0]}]}, "MissingLabel"),
        ("curve", {"degrees": [3, 3], "B": 2, "U": 0}, "InconsistentGraph"),
        ("ehrhart", {"points": [[0] * 7, [1] + [0] * 6]}, "DimensionTooLarge"),
    ],
)
def test_errors_are_json(command, payload, code):
    status, rep = call(command, payload)
    assert status == 2
    assert rep["error"] == code and isinstance(rep["detail"], str)


def test_run_config_validation():
    with pytest.raises(SchemaMismatch):
        RunConfig("nope")
    with pytest.raises(SchemaMismatch):
        RunConfig("limit", dim_cap=0)


def test_dim_cap_flag_and_env(monkeypatch):
    big = {"points": [[0] * 7, [1] + [0] * 6]}
    assert call("ehrhart", big, None, None, 7)[0] == 0
    monkeypatch.setenv("TROP_DIM_CAP", "1")
    assert call("ehrhart", {"points": T3})[1]["error"] == "DimensionTooLarge"


def test_files_and_determinism(tmp_path, capsys):
    src = tmp_path / "in.json"
    src.write_text(json.dumps(HONEYCOMB))
    outs = []
    for k in range(2):
        dst = tmp_path / f"out{k}.json"
        assert main(["limit", "-i", str(src), "-o", str(dst)]) == 0
        outs.append(dst.read_bytes())
    assert outs[0] == outs[1]
    text = outs[0].decode()
    assert text == cli.dumps(json.loads(text))
    assert main(["limit", "-i", str(tmp_path / "missing.json")]) == 2
    assert json.loads(capsys.readouterr().out)["error"] == "ParseError"


def test_no_audit_flag(tmp_path):
    src = tmp_path / "in.json"
    src.write_text(json.dumps(HONEYCOMB))
    dst = tmp_path / "out.json"
    assert main(["limit", "-i", str(src), "-o", str(dst), "--no-audit"]) == 0
    assert "audit" not in json.loads(dst.read_text())


def test_corrupted_report_fails_audit(monkeypatch, tmp_path):
    status, rep = call("limit", HONEYCOMB, None, None, None, False)
    rep["e_limit"] = {"vars": ["u", "v"], "terms": [{"e": [0, 0], "c": "1"}]}
    checks = {c["check"]: c["pass"] for c in hodge.audit_block(rep)}
    assert checks["euler_agreement"] is False
    seg = call("limit", {"points": [[0], [3]], "lifts": [0, 0]})[1]
    assert {c["check"]: c["pass"] for c in seg["audit"]}["v1_identity"]

    real = hodge.EPolyReport.to_json

    def corrupt(self, audit=True):
        out = real(self, audit=False)
        out["euler"] += 1
        if audit:
            out["audit"] = hodge.audit_block(out)
        return out

    monkeypatch.setattr(hodge.EPolyReport, "to_json", corrupt)
    status, rep = call("limit", HONEYCOMB)
    assert status == 3 and rep["error"] == "AuditFailure"
    status, rep = call("limit", HONEYCOMB, None, None, None, True, False)
    assert status == 0


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "tropical_nearby", "matroid"],
        input=json.dumps({"uniform": [2, 4]}), capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {"chi": [-4, 1], "class": [-3, 1]}


def test_psi_with_eclass_labels():
    C = with_eclass_labels(theta_graph())
    assert call("psi", C.to_json())[1]["psi"] == {"vars": ["u", "v"], "terms": [
        {"e": [0, 0], "c": "-1"}, {"e": [1, 1], "c": "-1"}]}


def test_non_almost_smooth_input_fails_audit():
    octa = [[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0], [0, 0, 1], [0, 0, -1], [0, 0, 0]]
    status, rep = call("limit", {"points": octa, "lifts": [0] * 7})
    assert status == 3 and rep["almost_smooth"] is False
    assert [c["check"] for c in rep["audit"] if not c["pass"]] == ["almost_smooth"]
