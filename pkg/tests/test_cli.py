"""CLI behaviour: golden bytes, determinism, exit codes, errata ledger."""

import json
import subprocess
import sys
from pathlib import Path

GOLDEN = Path(__file__).parent / "golden"


def run_cli(*args, cwd=None):
    return subprocess.run(
        [sys.executable, "-m", "cyclofhs", *args],
        capture_output=True,
        text=True,
        cwd=cwd,
    )


def test_generate_single_sequence_csv_golden():
    result = run_cli("generate", "--p", "3", "--n", "2", "--seq", "0", "--format", "csv")
    assert result.returncode == 0
    assert result.stdout == "0,0,2,3,0,2,3,1,2,3\n"
    assert result.stdout == (GOLDEN / "generate_p3_n2_seq0.csv").read_text()


def test_generate_family_json_golden():
    result = run_cli("generate", "--p", "3", "--n", "3")
    assert result.returncode == 0
    assert result.stdout == (GOLDEN / "generate_p3_n3.json").read_text()
    doc = json.loads(result.stdout)
    sequences = doc["payload"]["sequences"]
    assert len(sequences) == 6
    assert all(len(s["symbols"]) == 27 for s in sequences)


def test_bounds_json_golden_and_deterministic():
    first = run_cli("bounds", "--p", "3", "--n", "2")
    second = run_cli("bounds", "--p", "3", "--n", "2")
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout
    assert first.stdout == (GOLDEN / "bounds_p3_n2.json").read_text()
    payload = json.loads(first.stdout)["payload"]
    assert payload["A_a"] == "7/4"
    assert payload["A_c"] == "58/27"
    assert payload["ah_equality"] is True
    assert payload["peng_fan"] == [3, 3]
    assert payload["H_S"] == 7
    assert payload["peng_fan_optimal"] is False


def test_usage_errors_exit_two():
    assert run_cli("generate", "--p", "4", "--n", "2").returncode == 2
    assert run_cli("bounds", "--p", "9", "--n", "2").returncode == 2
    assert run_cli("generate", "--p", "3", "--n", "2", "--seq", "7").returncode == 2
    assert run_cli("correlate", "--p", "3", "--n", "2", "--pair", "0", "9").returncode == 2
    assert run_cli("generate", "--p", "3", "--n", "1").returncode == 2


def test_correlate_both_mode_all_match():
    result = run_cli("correlate", "--p", "3", "--n", "2", "--pair", "0", "0", "--mode", "both")
    assert result.returncode == 0
    doc = json.loads(result.stdout)
    rows = doc["payload"]["rows"]
    assert len(rows) == 9
    assert all(row["match"] is True for row in rows)
    assert doc["manifest"]["checks_passed"] == 9
    assert doc["manifest"]["checks_failed"] == 0


def test_correlate_closed_mode_uncovered_residue_one():
    result = run_cli("correlate", "--p", "5", "--n", "2", "--pair", "0", "1", "--mode", "closed")
    assert result.returncode == 0
    rows = json.loads(result.stdout)["payload"]["rows"]
    assert len(rows) == 25
    assert all(row["covered"] is False and row["value"] is None for row in rows)


def test_correlate_brute_csv_spot_row():
    result = run_cli(
        "correlate", "--p", "3", "--n", "2", "--pair", "0", "1", "--mode", "brute",
        "--format", "csv",
    )
    assert result.returncode == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "tau,value"
    assert lines[3] == "2,6"


def test_verify_grid_passes_and_writes_errata(tmp_path):
    errata = tmp_path / "errata.jsonl"
    result = run_cli(
        "verify", "--p", "3,7,11", "--n", "2,3", "--errata", str(errata), cwd=tmp_path
    )
    assert result.returncode == 0
    doc = json.loads(result.stdout)
    assert doc["manifest"]["checks_failed"] == 0
    assert doc["manifest"]["exit_status"] == 0
    assert len(doc["payload"]["instances"]) == 6
    entries = [json.loads(line) for line in errata.read_text().splitlines()]
    assert entries
    expected_keys = {"location", "kind", "printed", "corrected", "instance", "evidence"}
    assert all(expected_keys <= set(e) for e in entries)
    mixed_pair = [e for e in entries if e["location"] == "cyclotomic:p%4==3:(0,1)"]
    assert len(mixed_pair) == 6  # one per instance, every p here is 3 mod 4
    assert all(e["kind"] == "correction" for e in mixed_pair)


def test_verify_deep_instance_emits_tail_entries(tmp_path):
    errata = tmp_path / "errata.jsonl"
    result = run_cli("verify", "--p", "3", "--n", "5", "--errata", str(errata), cwd=tmp_path)
    assert result.returncode == 0
    locations = {json.loads(line)["location"] for line in errata.read_text().splitlines()}
    assert "cross:odd:2dp>n+2:parity=1:k>dp" in locations
    assert "cross:odd:2dp>n+2:parity=0:k>dp" in locations
    assert "cross:even:2dp>n:k>dp+1" in locations
    assert "cross:even:2dp<n:k>eps:class-set" in locations
    assert "average-auto:shift-range" in locations


def test_verify_is_deterministic(tmp_path):
    first = run_cli("verify", "--p", "3", "--n", "2,3", "--errata", str(tmp_path / "a.jsonl"), cwd=tmp_path)
    second = run_cli("verify", "--p", "3", "--n", "2,3", "--errata", str(tmp_path / "a.jsonl"), cwd=tmp_path)
    assert first.stdout == second.stdout


def test_verify_refuses_oversized_instance(tmp_path):
    result = run_cli("verify", "--p", "3", "--n", "20", cwd=tmp_path)
    assert result.returncode == 2
    assert "refusing" in result.stderr
    result = run_cli("verify", "--p", "3", "--n", "2", "--max-nu", "5", cwd=tmp_path)
    assert result.returncode == 2


def test_verify_rejects_malformed_list(tmp_path):
    assert run_cli("verify", "--p", "3;7", "--n", "2", cwd=tmp_path).returncode == 2


def test_out_flag_writes_same_bytes(tmp_path):
    out = tmp_path / "family.json"
    result = run_cli("generate", "--p", "3", "--n", "3", "--out", str(out))
    assert result.returncode == 0
    assert result.stdout == ""
    assert out.read_text() == (GOLDEN / "generate_p3_n3.json").read_text()


def test_generate_csv_whole_family_has_no_header():
    result = run_cli("generate", "--p", "3", "--n", "2", "--format", "csv")
    lines = result.stdout.splitlines()
    assert len(lines) == 4
    assert lines[0] == "0,0,2,3,0,2,3,1,2,3"
    assert lines[1].startswith("1,")
