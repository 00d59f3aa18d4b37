"""Command-line behaviour: output shapes, exit codes, cache discipline."""

from __future__ import annotations

import json

import pytest

from ncgram.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# enumerate


def test_enumerate_counts(capsys):
    code, out, _ = run(capsys, "enumerate", "--points", "4", "--class", "nc")
    lines = out.splitlines()
    assert code == 0
    assert len(lines) == 15
    assert lines[-1] == "count 14"
    assert lines[0] == "0|4|0000"


def test_enumerate_empty(capsys):
    code, out, _ = run(capsys, "enumerate", "--points", "0", "--class", "nc")
    assert code == 0
    assert out.splitlines() == ["0|0|", "count 1"]


def test_enumerate_pairs(capsys):
    code, out, _ = run(capsys, "enumerate", "--points", "6", "--class", "nc2")
    assert code == 0
    assert out.splitlines()[-1] == "count 5"


def test_unknown_class_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["enumerate", "--points", "4", "--class", "bogus"])
    assert exc.value.code == 2


# ---------------------------------------------------------------------------
# gram


def test_gram_det_json(capsys):
    code, out, _ = run(capsys, "gram", "--points", "2", "--class", "nc", "--param", "4", "--det")
    assert code == 0
    payload = json.loads(out)
    assert payload == {"n": 2, "class": "nc", "N_or_symbolic": 4, "det": "48"}


def test_gram_symbolic_det_coefficients(capsys):
    code, out, _ = run(capsys, "gram", "--points", "1", "--class", "nc", "--symbolic", "--det")
    assert code == 0
    assert json.loads(out)["det"] == [0, 1]


def test_gram_rank(capsys):
    code, out, _ = run(capsys, "gram", "--points", "4", "--class", "all", "--param", "2", "--rank")
    assert code == 0
    assert json.loads(out)["rank"] == 8


def test_gram_csv_format(capsys):
    code, out, _ = run(
        capsys,
        "gram",
        "--points",
        "2",
        "--class",
        "nc",
        "--param",
        "4",
        "--det",
        "--format",
        "csv",
    )
    assert code == 0
    header, row = out.splitlines()
    assert header == "n,class,N_or_symbolic,det"
    assert row == "2,nc,4,48"


def test_gram_without_work_is_usage_error(capsys):
    code, _, err = run(capsys, "gram", "--points", "2", "--class", "nc", "--param", "4")
    assert code == 2
    assert "error" in err


def test_gram_rank_needs_numeric_parameter(capsys):
    code, _, _ = run(capsys, "gram", "--points", "2", "--class", "nc", "--symbolic", "--rank")
    assert code == 2


def test_gram_negative_points_rejected(capsys):
    code, _, _ = run(capsys, "gram", "--points", "-1", "--class", "nc", "--param", "4", "--det")
    assert code == 2


# ---------------------------------------------------------------------------
# recursion


def test_recursion_base_case(capsys):
    code, out, _ = run(capsys, "recursion", "--points", "1", "--param", "4")
    assert code == 0
    payload = json.loads(out)
    assert payload["det"] == "4"
    assert payload["trace"] == [{"level_n": 1, "r": 0, "base_value": "4"}]


def test_recursion_verify_agrees(capsys):
    code, out, _ = run(capsys, "recursion", "--points", "4", "--param", "4", "--verify")
    assert code == 0
    payload = json.loads(out)
    assert payload["status"] == "ok"
    assert payload["det"] == payload["direct"]


def test_recursion_rejects_parameter_three(capsys):
    code, _, err = run(capsys, "recursion", "--points", "4", "--param", "3")
    assert code == 2
    assert "N >= 4" in err


# ---------------------------------------------------------------------------
# laws


def test_laws_default_bounds_pass(capsys):
    code, out, _ = run(capsys, "laws")
    assert code == 0
    payload = json.loads(out)
    assert payload["failures"] == 0
    assert payload["N"] == 2
    names = [r["law"] for r in payload["reports"]]
    assert names[:3] == ["tensor", "involution", "composition"]
    assert all(r["cases"] > 0 for r in payload["reports"])


# ---------------------------------------------------------------------------
# cache and determinism


def test_output_is_byte_identical_and_cache_hits(tmp_path, capsys):
    cache = tmp_path / "cache.jsonl"
    args = [
        "gram",
        "--points",
        "3",
        "--class",
        "nc",
        "--param",
        "5",
        "--det",
        "--cache",
        str(cache),
    ]
    code1 = main(args)
    first = capsys.readouterr()
    code2 = main(args)
    second = capsys.readouterr()
    assert code1 == code2 == 0
    assert first.out == second.out
    assert "cache hit" in second.err
    lines = cache.read_text().splitlines()
    assert len(lines) == 1
    record = json.loads(lines[0])
    assert record["key"] == "gram:nc:3:5"
    assert record["det"] == json.loads(first.out)["det"]
    assert isinstance(record["ts"], int)


def test_corrupted_trailing_cache_line_is_ignored(tmp_path, capsys):
    cache = tmp_path / "cache.jsonl"
    cache.write_text('{"key":"gram:nc:2:4","det":"48","ts":1}\n{"key":"gram:nc:')
    code, out, err = run(
        capsys,
        "gram",
        "--points",
        "2",
        "--class",
        "nc",
        "--param",
        "4",
        "--det",
        "--cache",
        str(cache),
    )
    assert code == 0
    assert json.loads(out)["det"] == "48"
    assert "corrupted" in err
    assert "cache hit" in err


def test_cache_ignores_symbolic_jobs(tmp_path, capsys):
    cache = tmp_path / "cache.jsonl"
    code, _, _ = run(
        capsys,
        "gram",
        "--points",
        "2",
        "--class",
        "nc",
        "--symbolic",
        "--det",
        "--cache",
        str(cache),
    )
    assert code == 0
    assert not cache.exists()
