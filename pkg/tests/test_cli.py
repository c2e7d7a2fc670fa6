import json
import time

import pytest

from lukaspaths.cli import (
    EXIT_BFILE,
    EXIT_DISAGREE,
    EXIT_DOMAIN,
    EXIT_INFINITE,
    EXIT_OK,
    EXIT_ORACLE_CAP,
    main,
)
from lukaspaths.engines import bundled_bfile


def run_cli(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_count_examples(capsys):
    rc, out, _ = run_cli(capsys, "count", "--n", "9", "--k", "0", "--kind", "any")
    assert rc == EXIT_OK and out.strip() == "4862"
    rc, out, _ = run_cli(capsys, "count", "--n", "0", "--k", "0")
    assert rc == EXIT_OK and out.strip() == "1"
    rc, out, _ = run_cli(capsys, "count", "--n", "9", "--k", "2", "--alternate")
    assert rc == EXIT_OK and out.strip() == "1333"


def test_count_single_engines_agree(capsys):
    values = set()
    for engine in ("oracle", "dp", "closed", "gf"):
        rc, out, _ = run_cli(capsys, "count", "--n", "7", "--k", "2", "--engine", engine)
        assert rc == EXIT_OK
        values.add(out.strip())
    assert values == {"2002"}


def test_count_json_schema(capsys):
    rc, out, _ = run_cli(capsys, "count", "--n", "9", "--k", "0", "--format", "json")
    assert rc == EXIT_OK
    record = json.loads(out)
    assert list(record) == ["query", "engine", "values", "meta"]
    assert record["values"] == ["4862"]
    assert all(isinstance(v, str) for v in record["values"])
    assert record["query"]["n"] == 9
    assert record["meta"]["engines"] == ["oracle", "dp", "closed", "gf"]


def test_output_is_deterministic(capsys):
    first = run_cli(capsys, "count", "--n", "8", "--k", "1", "--format", "json")
    second = run_cli(capsys, "count", "--n", "8", "--k", "1", "--format", "json")
    assert first == second


def test_count_error_exit_codes(capsys):
    rc, _, err = run_cli(capsys, "count", "--n", "3", "--total")
    assert rc == EXIT_INFINITE and "infinite family" in err
    rc, _, err = run_cli(capsys, "count", "--n", "12", "--k", "0", "--engine", "oracle")
    assert rc == EXIT_ORACLE_CAP and "oracle cap exceeded" in err
    rc, _, err = run_cli(capsys, "count", "--n", "4", "--k", "1", "--bound", "3",
                         "--engine", "closed")
    assert rc == EXIT_DOMAIN
    rc, _, err = run_cli(capsys, "count", "--n", "4", "--k", "5", "--bound", "3")
    assert rc == EXIT_DOMAIN and "exceeds" in err
    rc, _, err = run_cli(capsys, "count", "--n", "3", "--k", "1", "--total")
    assert rc == EXIT_DOMAIN and "mutually exclusive" in err


def test_series_examples(capsys):
    rc, out, _ = run_cli(capsys, "series", "--k", "3", "--orientation", "l2r",
                         "--order", "10")
    assert rc == EXIT_OK
    assert out.strip() == "0,1,5,20,75,275,1001,3640,13260,48450"
    rc, out, _ = run_cli(capsys, "series", "--total", "--bound", "2", "--order", "6")
    assert rc == EXIT_OK and out.strip() == "1,3,8,21,55,144"
    rc, out, _ = run_cli(capsys, "series", "--k", "0", "--order", "1")
    assert rc == EXIT_OK and out.strip() == "1"


def test_series_csv_and_json(capsys):
    rc, out, _ = run_cli(capsys, "series", "--k", "0", "--order", "4", "--format", "csv")
    assert rc == EXIT_OK
    assert out.splitlines() == ["index,value", "0,1", "1,1", "2,2", "3,5"]
    rc, out, _ = run_cli(capsys, "series", "--k", "0", "--order", "4", "--format", "json")
    record = json.loads(out)
    assert record["values"] == ["1", "1", "2", "5"]
    assert record["meta"]["order"] == 4


def test_series_requires_k_or_total(capsys):
    rc, _, err = run_cli(capsys, "series", "--order", "5")
    assert rc == EXIT_DOMAIN and "--k or --total" in err


def test_series_alternate_needs_l2r_unbounded(capsys):
    rc, _, err = run_cli(capsys, "series", "--k", "1", "--alternate",
                         "--orientation", "r2l", "--order", "4")
    assert rc == EXIT_DOMAIN
    rc, out, _ = run_cli(capsys, "series", "--k", "0", "--alternate", "--order", "10")
    assert rc == EXIT_OK
    assert out.strip() == "1,1,1,3,5,9,19,39,81,173"


def test_order_env_override(capsys, monkeypatch):
    monkeypatch.setenv("LUKAS_ORDER", "5")
    rc, out, _ = run_cli(capsys, "series", "--k", "0")
    assert rc == EXIT_OK and out.strip() == "1,1,2,5,14"
    monkeypatch.setenv("LUKAS_ORDER", "not-a-number")
    with pytest.raises(SystemExit):
        run_cli(capsys, "series", "--k", "0")


def test_check_bundled_fixture(capsys):
    rc, out, _ = run_cli(capsys, "check", "--bfile", str(bundled_bfile("b000245.txt")),
                         "--k", "1", "--order", "21")
    assert rc == EXIT_OK
    assert out.strip() == "21 comparisons, 0 mismatches"


def test_check_with_shift(capsys):
    rc, out, _ = run_cli(capsys, "check", "--bfile", str(bundled_bfile("b002057.txt")),
                         "--k", "3", "--orientation", "r2l", "--shift", "3",
                         "--order", "21")
    assert rc == EXIT_OK
    assert out.strip() == "18 comparisons, 0 mismatches"


def test_check_empty_bfile(capsys, tmp_path):
    empty = tmp_path / "empty.txt"
    empty.write_text("# nothing here\n\n", encoding="utf-8")
    rc, out, _ = run_cli(capsys, "check", "--bfile", str(empty), "--k", "1",
                         "--order", "8")
    assert rc == EXIT_OK and out.strip() == "0 comparisons, 0 mismatches"


def test_check_malformed_bfile(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("0 1\nnot a data line\n", encoding="utf-8")
    rc, _, err = run_cli(capsys, "check", "--bfile", str(bad), "--k", "1", "--order", "4")
    assert rc == EXIT_BFILE and "malformed" in err
    missing = tmp_path / "missing.txt"
    rc, _, err = run_cli(capsys, "check", "--bfile", str(missing), "--k", "1",
                         "--order", "4")
    assert rc == EXIT_BFILE and "unreadable" in err
    decreasing = tmp_path / "decreasing.txt"
    decreasing.write_text("1 1\n0 1\n", encoding="utf-8")
    rc, _, err = run_cli(capsys, "check", "--bfile", str(decreasing), "--k", "1",
                         "--order", "4")
    assert rc == EXIT_BFILE and "strictly increasing" in err


def test_check_reports_mismatches(capsys, tmp_path):
    wrong = tmp_path / "wrong.txt"
    wrong.write_text("0 1\n1 999\n", encoding="utf-8")
    rc, out, _ = run_cli(capsys, "check", "--bfile", str(wrong), "--k", "0",
                         "--order", "5")
    assert rc == EXIT_DISAGREE
    assert "index 1: computed 1 != fixture 999" in out
    assert "2 comparisons, 1 mismatches" in out


def test_height_text(capsys):
    rc, out, _ = run_cli(capsys, "height", "--family", "return-to-zero",
                         "--n-list", "1,2,3")
    assert rc == EXIT_OK
    lines = out.splitlines()
    assert lines[2].startswith("1 0 ")
    assert lines[3].startswith("2 1/2 ")
    assert lines[4].startswith("3 1 ")


def test_height_json(capsys):
    rc, out, _ = run_cli(capsys, "height", "--family", "suffix-at-k", "--k", "1",
                         "--n-list", "2,4", "--format", "json", "--route", "dp")
    assert rc == EXIT_OK
    record = json.loads(out)
    assert record["family"] == "suffix-at-k"
    assert [st["n"] for st in record["stats"]] == [2, 4]
    assert all("mean" in st and "ratio" in st for st in record["stats"])


def test_height_infinite_family(capsys):
    rc, _, err = run_cli(capsys, "height", "--family", "prefix-any", "--n-list", "4")
    assert rc == EXIT_INFINITE and "infinite family" in err


def test_selftest_quick(capsys):
    started = time.perf_counter()
    rc, out, _ = run_cli(capsys, "selftest", "--quick")
    elapsed = time.perf_counter() - started
    assert rc == EXIT_OK
    assert "selftest: all checks passed" in out
    assert elapsed < 30.0


def test_help_documents_exit_codes(capsys):
    with pytest.raises(SystemExit):
        main(["--help"])
    out = capsys.readouterr().out
    for code in ("3", "4", "5", "6", "7"):
        assert code in out
    assert "LUKAS_ORDER" in out
