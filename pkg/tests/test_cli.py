import json
import re
import subprocess
import sys

import pytest

from batlb import parse_instance
from batlb.cli import main

RATIONAL = re.compile(r"^-?\d+/\d+$")


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_deterministic_bytes(capsys):
    code1, out1, _ = run_cli(capsys, "gen", "--kind", "random", "-n", "9", "-m", "30", "--seed", "4")
    code2, out2, _ = run_cli(capsys, "gen", "--kind", "random", "-n", "9", "-m", "30", "--seed", "4")
    assert code1 == code2 == 0
    assert out1 == out2
    assert parse_instance(out1).m == 30


def test_gen_complete_json(capsys):
    code, out, _ = run_cli(capsys, "gen", "--kind", "complete", "-n", "4", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["m"] == 12
    assert parse_instance(payload["instance"]).m == 12


def test_gen_planted_json_carries_arrangement(capsys):
    code, out, _ = run_cli(
        capsys, "gen", "--kind", "planted", "-n", "7", "-m", "15",
        "--noise", "0", "--seed", "2", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert sorted(payload["planted_arrangement"]) == list(range(1, 8))


def test_gen_to_file_then_solve(tmp_path, capsys):
    path = tmp_path / "inst.txt"
    code, _, _ = run_cli(
        capsys, "gen", "--kind", "random", "-n", "7", "-m", "20", "--seed", "1",
        "-o", str(path),
    )
    assert code == 0
    code, out, _ = run_cli(capsys, "solve", str(path), "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["method"] == "dp"
    assert payload["optimal"] is True
    assert RATIONAL.match(payload["lower_bound_m_over_3"])
    assert RATIONAL.match(payload["above_bound"])
    assert sorted(payload["arrangement"]) == list(range(1, 8))


def test_solve_heuristic_fallback(capsys, tmp_path):
    path = tmp_path / "big.txt"
    run_cli(capsys, "gen", "--kind", "random", "-n", "30", "-m", "120", "--seed", "3",
            "-o", str(path))
    code, out, _ = run_cli(capsys, "solve", str(path), "--dp-max", "10", "--trials", "8",
                           "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["method"] == "local_search"
    assert payload["optimal"] is False


def test_solve_exact_too_large_exit_3(capsys, tmp_path):
    path = tmp_path / "big.txt"
    run_cli(capsys, "gen", "--kind", "random", "-n", "30", "-m", "120", "--seed", "3",
            "-o", str(path))
    code, out, err = run_cli(capsys, "solve", str(path), "--dp-max", "10", "--exact")
    assert code == 3
    assert out == ""
    assert "error" in err


def test_kernelize_json_schema_and_kernel_text(capsys, tmp_path):
    path = tmp_path / "inst.txt"
    run_cli(capsys, "gen", "--kind", "random", "-n", "10", "-m", "50", "--seed", "3",
            "-o", str(path))
    code, out, _ = run_cli(capsys, "kernelize", str(path), "--kappa", "1",
                           "--format", "json")
    assert code == 0
    payload = json.loads(out)
    for key in ("verdict", "kappa", "m_original", "m_reduced", "triples_removed",
                "threshold", "mode"):
        assert key in payload
    assert payload["verdict"] == "KERNEL"
    kernel = parse_instance(payload["kernel"])
    assert kernel.m == payload["m_reduced"] <= 50


def test_kernelize_yes_has_no_kernel_payload(capsys, tmp_path):
    path = tmp_path / "inst.txt"
    run_cli(capsys, "gen", "--kind", "random", "-n", "8", "-m", "20", "--seed", "5",
            "-o", str(path))
    code, out, _ = run_cli(capsys, "kernelize", str(path), "--kappa", "0",
                           "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"] == "YES"
    assert "kernel" not in payload


def test_decide_unreadable_stdin_is_config_error(capsys):
    # pytest gives a stdin that errors on read; that must exit 2, not crash
    code, out, _ = run_cli(capsys, "decide", "-", "--kappa", "0", "--format", "json")
    assert code == 2
    assert out == ""


def test_decide_on_file(capsys, tmp_path):
    path = tmp_path / "inst.txt"
    run_cli(capsys, "gen", "--kind", "random", "-n", "8", "-m", "25", "--seed", "7",
            "-o", str(path))
    code, out, _ = run_cli(capsys, "decide", str(path), "--kappa", "0", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"] == "YES"
    assert payload["kernel"]["verdict"] == "YES"

    code, out, _ = run_cli(capsys, "decide", str(path), "--kappa", "3", "--format", "json")
    assert code == 0
    verdict = json.loads(out)["verdict"]
    assert verdict in ("YES", "NO")


def test_verify_self_contained(capsys):
    code, out, _ = run_cli(capsys, "verify", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] is True
    assert len(payload["checks"]) == 4


def test_verify_with_instance(capsys, tmp_path):
    path = tmp_path / "inst.txt"
    run_cli(capsys, "gen", "--kind", "random", "-n", "12", "-m", "60", "--seed", "9",
            "-o", str(path))
    code, out, _ = run_cli(capsys, "verify", str(path), "--format", "json")
    assert code == 0
    payload = json.loads(out)
    names = {c["name"] for c in payload["checks"]}
    assert "second-moment-agreement" in names
    assert "second-moment-lower-bound" in names


def test_verify_reducible_instance_notes_skip(capsys, tmp_path):
    path = tmp_path / "complete.txt"
    run_cli(capsys, "gen", "--kind", "complete", "-n", "4", "-o", str(path))
    code, out, _ = run_cli(capsys, "verify", str(path), "--format", "json")
    assert code == 0
    payload = json.loads(out)
    bound = [c for c in payload["checks"] if c["name"] == "second-moment-lower-bound"]
    assert bound and "skipped" in str(bound[0]["detail"])


def test_stats_rationals_are_fraction_strings(capsys, tmp_path):
    path = tmp_path / "inst.txt"
    run_cli(capsys, "gen", "--kind", "random", "-n", "9", "-m", "35", "--seed", "11",
            "-o", str(path))
    code, out, _ = run_cli(capsys, "stats", str(path), "--trials", "64", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    for key in ("second_moment_closed_form", "second_moment_enumerated", "cross_term"):
        assert RATIONAL.match(payload[key]), payload[key]
    assert RATIONAL.match(payload["monte_carlo"]["mean"])
    assert payload["second_moment_closed_form"] == payload["second_moment_enumerated"]
    assert "." not in out  # no decimal rationals anywhere


def test_stats_deterministic(capsys, tmp_path):
    path = tmp_path / "inst.txt"
    run_cli(capsys, "gen", "--kind", "random", "-n", "8", "-m", "20", "--seed", "1",
            "-o", str(path))
    _, out1, _ = run_cli(capsys, "stats", str(path), "--seed", "5", "--format", "json")
    _, out2, _ = run_cli(capsys, "stats", str(path), "--seed", "5", "--format", "json")
    assert out1 == out2


def test_parse_error_exit_2(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("p btw 3 1\nb 1 1 2\n")
    code, out, err = run_cli(capsys, "solve", str(path))
    assert code == 2
    assert out == ""
    assert "error" in err


def test_dedupe_flag(capsys, tmp_path):
    path = tmp_path / "dup.txt"
    path.write_text("p btw 3 2\nb 2 1 3\nb 2 3 1\n")
    code, _, _ = run_cli(capsys, "solve", str(path))
    assert code == 2
    code, out, _ = run_cli(capsys, "solve", str(path), "--dedupe", "--format", "json")
    assert code == 0
    assert json.loads(out)["m"] == 1


def test_unknown_flag_is_an_error():
    proc = subprocess.run(
        [sys.executable, "-m", "batlb.cli", "verify", "--bogus"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2


def test_entry_point_gen_solve_pipe():
    gen = subprocess.run(
        [sys.executable, "-m", "batlb.cli", "gen", "--kind", "complete", "-n", "5"],
        capture_output=True,
        text=True,
    )
    assert gen.returncode == 0
    solve = subprocess.run(
        [sys.executable, "-m", "batlb.cli", "solve", "-", "--format", "json"],
        input=gen.stdout,
        capture_output=True,
        text=True,
    )
    assert solve.returncode == 0
    assert json.loads(solve.stdout)["best_count"] == 10
