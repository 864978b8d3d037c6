import io
import json
import sys

import pytest

from contracta import cli
from contracta.graph import complete_minus_edge, cycle, wheel
from contracta.graph6 import emit_graph6


def run(argv, stdin=b"", monkeypatch=None, capsys=None):
    monkeypatch.setattr(sys, "stdin", io.TextIOWrapper(io.BytesIO(stdin)))
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_k4(monkeypatch, capsys):
    code, out, _ = run(["analyze"], b"C~\n", monkeypatch, capsys)
    assert code == 0
    rec = json.loads(out)
    assert rec["tags"] == ["complete", "wheel"] and rec["contractible"] == []


def test_analyze_k5_minus(monkeypatch, capsys):
    code, out, _ = run(["analyze"], emit_graph6(complete_minus_edge(5)) + b"\n", monkeypatch, capsys)
    rec = json.loads(out)
    assert code == 0 and rec["contractible"] == [[0, 1]] and rec["contractibleCount"] == 1


def test_analyze_strict_kappa(monkeypatch, capsys):
    data = emit_graph6(cycle(5)) + b"\nC~\n"
    code, out, err = run(["analyze", "--strict"], data, monkeypatch, capsys)
    assert code == 3 and "kappa=2 < 3" in err
    assert len(out.splitlines()) == 1


def test_analyze_lenient_kappa(monkeypatch, capsys):
    data = emit_graph6(cycle(5)) + b"\nC~\n"
    code, out, _ = run(["analyze"], data, monkeypatch, capsys)
    assert code == 3 and len(out.splitlines()) == 2


def test_analyze_parse_error(monkeypatch, capsys):
    code, _, err = run(["analyze"], b"C~\nC~~\n", monkeypatch, capsys)
    assert code == 2 and "line 2" in err


@pytest.mark.parametrize("fmt", ["csv", "text"])
def test_analyze_formats(fmt, monkeypatch, capsys):
    data = b"C~\n" + emit_graph6(wheel(5)) + b"\n"
    code, out, _ = run(["analyze", "--format", fmt], data, monkeypatch, capsys)
    assert code == 0
    assert len(out.splitlines()) == (3 if fmt == "csv" else 2)


def test_analyze_files_and_threads(tmp_path, monkeypatch, capsys):
    path = tmp_path / "in.g6"
    path.write_bytes(b"C~\n" * 40)
    code, out, _ = run(["analyze", "--threads", "2", str(path)], b"", monkeypatch, capsys)
    assert code == 0 and len(out.splitlines()) == 40


def test_verify_out_of_range(monkeypatch, capsys):
    code, _, err = run(["verify", "--n-max", "3"], b"", monkeypatch, capsys)
    assert code == 1 and "n-max" in err


def test_verify_report(tmp_path, monkeypatch, capsys):
    out = tmp_path / "r.json"
    code, _, err = run(["verify", "--n-max", "7", "--out", str(out)], b"", monkeypatch, capsys)
    report = json.loads(out.read_text())
    assert code == 0
    assert report["graphsProcessed"] == sum(report["countsByOrder"].values()) == 1 + 3 + 17 + 136
    assert "PASS theorem zero-contractible" in err
    assert all(line.startswith("PASS") for line in err.splitlines())


def test_catalog_derive(tmp_path, monkeypatch, capsys):
    code, _, err = run(["catalog", "derive", "--n-max", "7", "--out", str(tmp_path)], b"", monkeypatch, capsys)
    assert code == 0
    assert (tmp_path / "zero.g6").exists() and (tmp_path / "one.g6").exists()


def test_threads_from_environment(monkeypatch):
    monkeypatch.setenv("CONTRACTA_THREADS", "3")
    cfg = cli.config_from_args(cli.build_parser().parse_args(["verify", "--n-max", "6"]))
    assert cfg.threads == 3
