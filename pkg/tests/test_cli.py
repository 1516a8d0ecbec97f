from __future__ import annotations

import json
import subprocess
import sys

import pytest

from contactdual.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_overlap_passes(capsys):
    code, out, _ = run(capsys, "check", "--structure", "p3_overlap")
    assert code == 0
    assert "C6: pass" in out and out.endswith("result: PASS\n")
    assert "seed: 0\nsamples: 1000\n" in out


def test_check_failure_exit_code_and_counterexample(capsys):
    code, out, _ = run(capsys, "check", "--structure", "path3")
    assert code == 1
    assert "C5: fail (a={0}, b={2})" in out


def test_check_interval_echoes_budget(capsys):
    code, out, _ = run(capsys, "check", "--structure", "interval_two_point", "--samples", "40", "--seed", "9")
    assert code == 0
    assert "seed: 9\nsamples: 40" in out
    assert "RC2: sampled-pass (40 samples)" in out


def test_enumerate_admissible(capsys):
    code, out, _ = run(capsys, "enumerate", "--space", "discrete3", "--admissible")
    assert code == 0
    assert "\n1 structure\n" in out


def test_enumerate_topologies_json(capsys):
    code, out, _ = run(capsys, "enumerate", "--topologies", "--max-atoms", "3", "--format", "json")
    assert code == 0
    assert json.loads(out)["count"] == 29


def test_verify_duality(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "duality", "--max-atoms", "2")
    assert code == 0
    assert "suite duality (max-atoms 2, samples 1000, seed 0)" in out
    assert "[FAIL]" not in out


def test_verify_is_byte_identical(capsys):
    first = run(capsys, "verify", "--suite", "ka", "--samples", "60", "--seed", "7")
    second = run(capsys, "verify", "--suite", "ka", "--samples", "60", "--seed", "7")
    assert first == second


def test_clusters_and_dual(capsys):
    code, out, _ = run(capsys, "clusters", "--structure", "p3_overlap", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert [c["members"] for c in doc["clusters"]][0] == [[0], [0, 1], [0, 2], [0, 1, 2]]
    code, out, _ = run(capsys, "dual", "--structure", "p3_overlap")
    assert code == 0 and "lambda_g: pass" in out
    code, out, _ = run(capsys, "dual", "--space", "discrete3", "--format", "json")
    assert json.loads(out)["homeomorphism"] is True


def test_extend_map(capsys, tmp_path):
    code, out, _ = run(capsys, "extend-map", "--map", "collapse_3_2")
    assert code == 0
    assert "g: u0->u0, u1->u0, u2->u1" in out
    assert "POLJAKOV: pass" in out
    scenario = tmp_path / "sc.json"
    scenario.write_text(json.dumps({"domain": "discrete2", "codomain": "discrete2",
                                    "pairs": [["0", "1"], ["1", "0"]]}))
    code, out, _ = run(capsys, "extend-map", "--scenario", str(scenario), "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["g"] == [["u0", "u1"], ["u1", "u0"]]


def test_render(capsys):
    code, out, _ = run(capsys, "render", "--space", "discrete3", "--admissible")
    assert code == 0 and out == 'digraph admissible {\n  "s0";\n}\n'
    code, out, _ = run(capsys, "check", "--space", "circle4", "--format", "dot")
    assert out.count("->") == 4


@pytest.mark.parametrize("argv", [
    ["clusters", "--structure", "interval_standard"],
    ["check", "--structure", "nowhere"],
    ["check"],
    ["dual", "--space", "circle4"],
    ["verify", "--suite", "axioms", "--max-atoms", "0"],
    ["clusters", "--structure", "p3_overlap", "--format", "dot"],
])
def test_input_and_precondition_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == "" and err.startswith("error: ")


def test_parse_error_position(capsys, tmp_path):
    bad = tmp_path / "s.json"
    bad.write_text('{"carrier": {"kind": "atoms", "n": 2},\n "relation": {"kind" "standard"}}')
    code, _, err = run(capsys, "check", "--structure", str(bad))
    assert code == 2
    assert "line 2, column 22" in err


def test_unknown_verb_and_option_show_usage(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    assert "usage:" in capsys.readouterr().err
    with pytest.raises(SystemExit) as exc:
        main(["check", "--wat"])
    assert exc.value.code == 2


def test_structure_file(capsys, tmp_path):
    path = tmp_path / "s.json"
    path.write_text(json.dumps({"carrier": {"kind": "atoms", "n": 2},
                                "relation": {"kind": "atom_graph", "graph": [[0, 0], [1, 1], [0, 1]]}}))
    code, out, _ = run(capsys, "check", "--structure", str(path))
    assert code == 1
    assert "C6: fail (a={0})" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "contactdual.cli", "check", "--structure", "p3_overlap"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
