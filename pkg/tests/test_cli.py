import json

import jsonschema
import pytest

from hyperwit import SignState
from hyperwit.cli import main
from hyperwit.serialize import schema_for

DRAWN_EDGES = "[[1,2],[3,4],[3,4,5],[2,3,4,5]]"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, kind, *argv):
    code, out, err = run(capsys, *argv)
    doc = json.loads(out)
    jsonschema.validate(doc, schema_for(kind))
    return code, doc, err


def test_state_build(capsys):
    code, doc, _ = run_json(capsys, "state-build", "state", "build", "--family", "single-max", "--n", "3")
    assert code == 0
    assert doc == {"n": 3, "edges": [[1, 2, 3]], "text": "n=3; edges=[[1,2,3]]"}


def test_state_dump_hex_round_trip(capsys):
    code, doc, _ = run_json(capsys, "state-dump", "state", "dump", "--edges", "[[1,2]]", "--n", "2")
    assert code == 0
    s = SignState.from_hex(doc["n"], doc["signs_hex"])
    assert s.sign(0b11) == -1 and s.sign(0b10) == 1


def test_verify_commands_pass(capsys):
    for action in ("stabilizers", "basis", "projector"):
        code, doc, _ = run_json(
            capsys, "verify", "verify", action, "--family", "all-ge-n-1", "--n", "4"
        )
        assert code == 0
        assert doc["ok"] is True
    assert doc["deviation"] == 0.0


def test_entanglement_brute_json(capsys):
    code, doc, _ = run_json(
        capsys, "entanglement", "entanglement", "--family", "single-max", "--n", "3"
    )
    assert code == 0
    assert abs(doc["alpha"] - 0.75) <= 1e-12
    assert abs(doc["E"] - 0.25) <= 1e-12
    assert doc["argmax_part_a"] == [1]
    assert len(doc["per_bipartition"]) == 3


def test_entanglement_cross_check(capsys):
    code, doc, _ = run_json(
        capsys,
        "entanglement",
        "entanglement",
        "--family",
        "all-n-1",
        "--n",
        "4",
        "--mode",
        "procedure",
        "--cross-check",
    )
    assert code == 0
    assert doc["match"] is True
    assert doc["procedure"]["success"] is False
    assert doc["closed_form"]["irrational"] is True


def test_entanglement_csv(capsys):
    code, out, _ = run(
        capsys, "entanglement", "--edges", "[[1,2],[2,3]]", "--n", "3", "--format", "csv"
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "part_a,alpha,entanglement"
    assert len(lines) == 4  # header + 3 cuts


def test_entanglement_csv_requires_brute(capsys):
    code, _, err = run(
        capsys, "entanglement", "--family", "single-max", "--n", "3",
        "--mode", "closed-form", "--format", "csv",
    )
    assert code == 2
    assert "brute" in err


def test_reduce_drawn_instance(capsys):
    code, doc, _ = run_json(
        capsys, "reduce", "reduce", "--edges", DRAWN_EDGES, "--n", "5", "--partA", "1,2,3"
    )
    assert code == 0
    assert doc["bound"] == {"num": 1, "den": 4, "float": 0.25}
    assert doc["kappa_prime_worst"] == 3
    assert doc["validated"] is True
    assert doc["branches"][0]["steps"][0]["op"] == "select"


def test_witness_build_and_eval(capsys):
    code, doc, _ = run_json(
        capsys, "witness", "witness", "build", "--family", "single-max", "--n", "4",
        "--kind", "stabilizer",
    )
    assert code == 0
    assert doc["beta"] == {"num": 15, "den": 4, "float": 3.75}
    assert doc["feasible"] is True

    code, doc, _ = run_json(
        capsys, "witness", "witness", "eval", "--family", "single-max", "--n", "3",
        "--kind", "projector", "--p", "2/7",
    )
    assert code == 0
    assert doc["expectation"] == {"num": 0, "den": 1, "float": 0.0}
    assert doc["negative"] is False


def test_witness_table_json_and_csv(capsys):
    code, doc, _ = run_json(
        capsys, "robustness-table", "witness", "table", "--family", "single-max",
        "--n-range", "2..4",
    )
    assert code == 0
    assert [r["n"] for r in doc["rows"]] == [2, 3, 4]
    assert doc["rows"][0]["projector"] == {"num": 2, "den": 3, "float": 2 / 3}

    code, out, _ = run(
        capsys, "witness", "table", "--family", "all-n-1", "--n-range", "4..4",
        "--format", "csv",
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0].startswith("n,projector_num")
    # irrational alpha at n=4 leaves the rational cells empty
    assert lines[1].startswith("4,,,")


def test_settings_list(capsys):
    code, doc, _ = run_json(
        capsys, "settings", "settings", "list", "--family", "single-max", "--n", "2",
        "--kind", "projector",
    )
    assert code == 0
    assert doc["count"] == 3
    assert doc["settings"] == ["XZ", "YY", "ZX"]


def test_settings_greedy_mode(capsys):
    code, doc, _ = run_json(
        capsys, "settings", "settings", "count", "--family", "single-max", "--n", "4",
        "--kind", "projector", "--mode", "greedy",
    )
    assert code == 0
    assert doc["count"] <= 40


def test_campaign_small(capsys):
    code, doc, _ = run_json(
        capsys, "campaign", "campaign", "lower-bound", "--count", "6", "--max-n", "5",
        "--seed", "99",
    )
    assert code == 0
    assert doc["all_hold"] is True
    assert len(doc["rows"]) == 6
    assert doc["seed"] == 99


def test_deterministic_artifacts(capsys):
    args = ("campaign", "lower-bound", "--count", "4", "--max-n", "5", "--seed", "5")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second

    args = ("witness", "table", "--family", "single-max", "--n-range", "2..6", "--format", "csv")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_out_writes_file(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, out, _ = run(
        capsys, "state", "build", "--family", "single-max", "--n", "2", "--out", str(path)
    )
    assert code == 0
    assert out == ""
    doc = json.loads(path.read_text())
    assert doc["edges"] == [[1, 2]]


def test_usage_errors_exit_2(capsys):
    code, _, err = run(capsys, "entanglement", "--n", "4")
    assert code == 2 and "error:" in err
    code, _, err = run(capsys, "entanglement", "--family", "single-max")
    assert code == 2
    code, _, err = run(capsys, "state", "build", "--edges", "not-json", "--n", "2")
    assert code == 2
    code, _, err = run(capsys, "witness", "eval", "--family", "single-max", "--n", "3")
    assert code == 2


def test_cap_flags_enforced(capsys):
    code, _, err = run(
        capsys, "settings", "count", "--family", "single-max", "--n", "6",
        "--cap-symbolic", "5",
    )
    assert code == 2 and "error:" in err


def test_unknown_family_rejected_by_argparse(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["state", "build", "--family", "mystery", "--n", "3"])
    assert exc.value.code == 2


def test_threads_env_fallback(capsys, monkeypatch):
    monkeypatch.setenv("HYPERWIT_THREADS", "3")
    code, _, _ = run(capsys, "state", "build", "--family", "single-max", "--n", "2")
    assert code == 0
    monkeypatch.setenv("HYPERWIT_THREADS", "not-an-int")
    code, _, err = run(capsys, "state", "build", "--family", "single-max", "--n", "2")
    assert code == 2 and "error:" in err
