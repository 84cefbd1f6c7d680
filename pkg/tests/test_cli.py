"""Command-line interface: transcripts, formats, exit codes."""

import json

import pytest

from flygraph.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_sample_two_node_sweep_transcript(capsys):
    code, out, err = run(capsys, "sample", "--model", "ba", "--n", "2")
    assert code == 0
    assert out == "q 1 -> 1\nq 1 -> 2\nq 1 -> 3\nq 2 -> 1\nq 2 -> 3\n"
    assert err == ""


def test_sample_text_is_reproducible(capsys):
    args = ("sample", "--model", "rrt", "--n", "9", "--seed", "42",
            "--schedule", "roundrobin")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second
    assert first.startswith("q 1 -> ")


def test_sample_json_shape(capsys):
    code, out, _ = run(capsys, "sample", "--model", "ba", "--n", "6",
                       "--seed", "3", "--output", "json")
    assert code == 0
    blob = json.loads(out)
    assert blob["model"] == "ba"
    assert blob["n"] == 6
    assert blob["schedule"] == "sweep"
    assert blob["bits_consumed"] > 0
    assert blob["stored_cells"] > 0
    assert all(1 <= j <= 6 and 1 <= r <= 7 for j, r in blob["queries"])


def test_sample_from_queries_file(tmp_path, capsys):
    path = tmp_path / "queries.txt"
    path.write_text("1\n\n  2\n1\n")
    code, out, err = run(capsys, "sample", "--model", "ba", "--n", "4",
                         "--schedule", "file", "--queries-file", str(path))
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 3
    assert lines[0].startswith("q 1 -> ")
    assert lines[1].startswith("q 2 -> ")


def test_queries_file_parse_error_names_line(tmp_path, capsys):
    path = tmp_path / "queries.txt"
    path.write_text("1\nbogus\n2\n")
    code, out, err = run(capsys, "sample", "--model", "ba", "--n", "4",
                         "--schedule", "file", "--queries-file", str(path))
    assert code == 1
    assert "line 2" in err


def test_queries_file_range_error(tmp_path, capsys):
    path = tmp_path / "queries.txt"
    path.write_text("5\n")
    code, _, err = run(capsys, "sample", "--model", "ba", "--n", "4",
                       "--schedule", "file", "--queries-file", str(path))
    assert code == 1
    assert "line 1" in err


def test_file_schedule_requires_path(capsys):
    code, _, err = run(capsys, "sample", "--model", "ba", "--n", "4",
                       "--schedule", "file")
    assert code == 1
    assert "queries-file" in err


def test_batch_text_and_json(capsys):
    code, out, _ = run(capsys, "batch", "--model", "ba", "--n", "5",
                       "--seed", "1")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 5
    assert lines[0] == "1 1"
    code, out, _ = run(capsys, "batch", "--model", "rrt", "--n", "5",
                       "--seed", "1", "--output", "json")
    blob = json.loads(out)
    assert blob["model"] == "rrt"
    assert len(blob["parents"]) == 5


def test_compare_passes_on_honest_sampler(capsys):
    code, out, _ = run(capsys, "compare", "--model", "ba", "--n", "3",
                       "--trials", "4000", "--seed", "0")
    assert code == 0
    assert out.endswith("PASS\n")


def test_compare_fails_on_tiny_sample(capsys):
    code, out, _ = run(capsys, "compare", "--model", "ba", "--n", "5",
                       "--trials", "30", "--seed", "0")
    assert code == 2
    assert out.endswith("FAIL\n")


def test_compare_json(capsys):
    code, out, _ = run(capsys, "compare", "--model", "rrt", "--n", "3",
                       "--trials", "4000", "--seed", "1", "--output", "json")
    assert code == 0
    blob = json.loads(out)
    assert blob["pass"] is True
    assert 0 <= blob["tv"] < 0.015


def test_compare_rejects_large_n(capsys):
    code, _, err = run(capsys, "compare", "--model", "ba", "--n", "9",
                       "--trials", "10")
    assert code == 1
    assert "n <= 8" in err


def test_stats_text_and_json(capsys):
    code, out, _ = run(capsys, "stats", "--model", "ba", "--n", "50",
                       "--seeds", "5")
    assert code == 0
    assert "height_mean=" in out
    code, out, _ = run(capsys, "stats", "--model", "rrt", "--n", "6",
                       "--seeds", "50", "--output", "json")
    blob = json.loads(out)
    assert blob["n"] == 6
    assert blob["tv"] is not None
    assert blob["height"] > 0
    assert blob["bits_per_query_mean"] >= 0
    assert blob["time_per_query_ns"] > 0


def test_bench_json(capsys):
    code, out, _ = run(capsys, "bench", "--model", "ba", "--n", "1000",
                       "--queries", "200", "--seed", "2")
    assert code == 0
    blob = json.loads(out)
    for key in ("bits_per_query_mean", "time_per_query_ns", "stored_cells",
                "max_scan_iterations", "max_recursion_depth"):
        assert key in blob
    assert blob["stored_cells"] > 0


def test_usage_errors_exit_one(capsys):
    assert run(capsys, "sample")[0] == 1
    assert run(capsys, "nope", "--n", "3")[0] == 1
    assert run(capsys, "sample", "--model", "bad", "--n", "3")[0] == 1
    code, _, err = run(capsys, "sample", "--model", "ba", "--n", "0")
    assert code == 1
    assert "positive" in err
