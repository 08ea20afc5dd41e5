import io
import json

import pytest

from emdlab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_cycle_all(capsys):
    code, out, _ = run(capsys, "compute", "cycle:8", "--all", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    emd = doc["parameters"]["gamma_emd"]
    assert emd["value"] == 3 and len(emd["witness"]) == 3
    assert emd["witness"] == sorted(emd["witness"])
    assert doc["bounds"] and all(b["holds"] for b in doc["bounds"] if b["bound_id"].startswith("sandwich"))


def test_compute_single_parameter_table(capsys):
    code, out, _ = run(capsys, "compute", "path:5", "--gamma-emd")
    assert code == 0
    row = [line.split() for line in out.splitlines() if line.startswith("gamma_emd")][0]
    assert row[1] == "2"
    # one parameter means no bound table
    assert "bound" not in out


def test_table_and_json_agree(capsys):
    _, out, _ = run(capsys, "compute", "wheel:6", "--format", "json")
    doc = json.loads(out)
    _, table, _ = run(capsys, "compute", "wheel:6")
    for name, p in doc["parameters"].items():
        line = next(x for x in table.splitlines() if x.startswith(name + " "))
        assert line.split()[1] == str(p["value"])


def test_compute_reads_files_and_stdin(capsys, tmp_path, monkeypatch):
    f = tmp_path / "g.txt"
    f.write_text("4 3\n0 1\n1 2\n2 3\n")
    code, out, _ = run(capsys, "compute", str(f), "--beta-e", "--format", "json")
    assert code == 0 and json.loads(out)["parameters"]["beta_e"]["value"] == 1
    monkeypatch.setattr("sys.stdin", io.StringIO("3 3\n0 1\n1 2\n0 2\n"))
    code, out, _ = run(capsys, "compute", "-", "--gamma-ve", "--format", "json")
    assert code == 0 and json.loads(out)["parameters"]["gamma_ve"]["value"] == 1


@pytest.mark.parametrize("argv", [
    ["compute", "DISCONNECTED"],
    ["compute", "cycle:2"],
    ["compute", "nonsense"],
    ["family", "wheel", "9..5"],
    ["scan", "no-such-file.g6"],
    ["scan", "corpus-n6.g6", "--bounds", "not-a-bound"],
])
def test_input_errors_exit_2(capsys, tmp_path, argv):
    if argv[1] == "DISCONNECTED":
        f = tmp_path / "d.txt"
        f.write_text("4 2\n0 1\n2 3\n")
        argv = ["compute", str(f)]
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("error:")


def test_budget_exit_3(capsys):
    code, _, err = run(capsys, "compute", "complete:10", "--gamma-emd", "--budget", "0.000001")
    assert code == 3 and "error" in err


def test_bad_budget_rejected_by_parser(capsys):
    with pytest.raises(SystemExit):
        main(["compute", "path:3", "--budget", "0"])


def test_family_wheel(capsys):
    code, out, _ = run(capsys, "family", "wheel", "5..9", "--gamma-emd", "--format", "json")
    rows = json.loads(out)
    assert code == 0
    assert [r["computed"] for r in rows] == [n - 1 for n in range(5, 10)]
    assert all(r["status"] == "match" for r in rows)


def test_family_prism_beta_e(capsys):
    code, out, _ = run(capsys, "family", "prism2", "4..10", "--beta-e", "--format", "json")
    assert code == 0
    assert [r["computed"] for r in json.loads(out)] == [3] * 7


def test_family_path_gamma_ve(capsys):
    code, out, _ = run(capsys, "family", "path", "2..16", "--gamma-ve", "--format", "json")
    assert code == 0
    assert [r["computed"] for r in json.loads(out)] == [(n + 2) // 4 for n in range(2, 17)]


def test_family_with_fixed_prefix_and_mismatch_exit(capsys):
    code, out, _ = run(capsys, "family", "kb:2", "2..4", "--gamma-emd")
    assert code == 0 and "kb:2,4" in out
    code, out, _ = run(capsys, "family", "grid2", "3", "--gamma-emd")
    assert code == 1 and "mismatch" in out


def test_verify_fixtures(capsys, tmp_path):
    out_file = tmp_path / "r.json"
    code, _, err = run(capsys, "verify", "--suite", "fixtures", "--out", str(out_file))
    doc = json.loads(out_file.read_text())
    status = {c["theorem_id"]: c["status"] for c in doc["checks"]}
    assert all(v == "match" for k, v in status.items() if k.startswith("pi-"))
    assert status["omega-vertex-codes"] == status["omega-edge-codes"] == "match"
    # the claimed Omega gamma_emd and beta_e disagree with exhaustive search
    assert {k for k, v in status.items() if v == "mismatch"} == {"omega-gamma-emd", "omega-beta-e"}
    assert code == 1 and "mismatch=2" in err


def test_verify_families_summary(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "families", "--max-n", "12")
    doc = json.loads(out)
    assert sum(doc["summary"].values()) == len(doc["checks"]) > 0
    assert code == (1 if doc["summary"]["mismatch"] else 0)


def test_verify_trees_comparability(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "trees", "--count", "200", "--seed", "7")
    checks = json.loads(out)["checks"]
    comp = [c for c in checks if c["theorem_id"] == "tree-comparability"]
    assert len(comp) == 200 and all(c["status"] == "match" for c in comp)


def test_verify_table_format_groups_failures(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "fixtures", "--format", "table")
    assert code == 1
    assert "omega-beta-e" in out and "match=" in out


def test_scan_corrupted_line(capsys, tmp_path):
    f = tmp_path / "c.g6"
    f.write_text("Bw\nnot graph6\nA_\n")
    code, out, err = run(capsys, "scan", str(f), "--bounds", "sandwich-emd-lower,sandwich-emd-upper")
    doc = json.loads(out)
    assert code == 2
    assert "line 2" in err
    assert doc["summary"]["match"] == 4 and doc["summary"]["error"] == 1


def test_scan_shipped_corpus_sandwich(capsys):
    code, out, _ = run(capsys, "scan", "corpus-n6.g6", "--bounds",
                       "sandwich-emd-lower,sandwich-emd-upper,sandwich-md-lower,sandwich-md-upper")
    doc = json.loads(out)
    assert code == 0 and doc["summary"]["mismatch"] == 0
    # K1 has no edges, so only gamma is defined and no bound applies
    assert doc["summary"]["match"] == 4 * 142


def test_scan_floor_probe_gives_a_verdict(capsys):
    code, out, _ = run(capsys, "scan", "corpus-n6.g6", "--bounds", "gamma-emd-floor")
    doc = json.loads(out)
    assert code in (0, 1)
    assert doc["summary"]["match"] + doc["summary"]["mismatch"] == 142


def test_json_output_is_deterministic(capsys):
    _, a, _ = run(capsys, "verify", "--suite", "comparison")
    _, b, _ = run(capsys, "verify", "--suite", "comparison")
    assert a == b
