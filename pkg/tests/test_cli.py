import io
import subprocess
import sys

import pytest

from bergetools.cli import EXIT_BUDGET, EXIT_OK, EXIT_USAGE, main
from bergetools.formats import read_hypergraph


def run(capsys, monkeypatch, argv, stdin=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_construct_then_count_kst(tmp_path, capsys, monkeypatch):
    path = tmp_path / "r3.txt"
    assert run(capsys, monkeypatch, ["construct", "--family", "polarity", "--q", "3", "--out", str(path)])[0] == 0
    code, out, _ = run(capsys, monkeypatch, ["count", str(path), "--kst", "2", "2"])
    assert code == EXIT_OK and out.strip() == "free: true"


def test_construct_is_byte_stable(tmp_path, capsys, monkeypatch):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    for p in (a, b):
        run(capsys, monkeypatch, ["construct", "--family", "composite", "--s", "3", "--q", "9",
                                  "--seed", "2", "--out", str(p)])
    assert a.read_bytes() == b.read_bytes()
    assert read_hypergraph(a).n == 1458


def test_census_output(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["census", "--n", "4", "--r", "3", "--no-telemetry"])
    assert code == 0
    assert "count[0]: 1\ncount[1]: 4\n" in out


def test_check_berge_witness_and_none(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["check", "--berge", "C2"], stdin="4 3 2\n0 1 2\n0 1 3\n")
    assert code == 0 and out.startswith("core:")
    code, out, _ = run(capsys, monkeypatch, ["check", "--expansion", "K3"], stdin="4 3 1\n0 1 2\n")
    assert code == 0 and out.strip() == "none"


def test_parse_error_exit_code(capsys, monkeypatch):
    code, _, err = run(capsys, monkeypatch, ["girth"], stdin="4 3 2\n0 1 2\n0 1\n")
    assert code == EXIT_USAGE and "line 3" in err


def test_budget_exit_code(capsys, monkeypatch):
    code, _, err = run(capsys, monkeypatch, ["search", "--mode", "graph", "--n", "8",
                                             "--forbid", "C4", "--budget", "10"])
    assert code == EXIT_BUDGET and "budget" in err


def test_search_family_alias(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["search", "--mode", "berge", "--n", "5", "--r", "3",
                                             "--forbid", "B4", "--no-telemetry"])
    assert code == 0 and "value: 2\n" in out and "pattern: B4\n" in out


def test_search_repeated_forbid(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["search", "--mode", "graph", "--n", "5",
                                             "--forbid", "C3", "--forbid", "C4", "--no-telemetry"])
    assert code == 0 and "value: 5\n" in out


def test_girth_and_counts(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["construct", "--family", "fano"])
    assert run(capsys, monkeypatch, ["girth"], stdin=out)[1].strip() == "girth: 3"
    c4 = "4 2 4\n0 1\n0 3\n1 2\n2 3\n"
    assert run(capsys, monkeypatch, ["count", "--k22"], stdin=c4)[1].strip() == "k22: 1"
    assert run(capsys, monkeypatch, ["count", "--ind", "2"], stdin=c4)[1].strip() == "ind[2]: 2"
    assert run(capsys, monkeypatch, ["count", "--clique", "2"], stdin=c4)[1].strip() == "cliques[2]: 4"


def test_usage_errors(capsys, monkeypatch):
    assert run(capsys, monkeypatch, ["construct", "--family", "norm", "--q", "3"])[0] == EXIT_USAGE
    assert run(capsys, monkeypatch, ["search", "--mode", "graph", "--n", "5", "--forbid", "Z9"])[0] == EXIT_USAGE
    with pytest.raises(SystemExit) as exc:
        main(["search", "--mode", "nope", "--n", "3", "--forbid", "K3"])
    assert exc.value.code == 2


def test_verify_kw_suite(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["verify", "--suite", "kw"])
    assert code == 0 and "check 10" in out and out.rstrip().endswith("result: PASS")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "bergetools", "census", "--n", "3", "--r", "3",
                           "--no-telemetry"], capture_output=True, text=True)
    assert proc.returncode == 0 and "total: 2" in proc.stdout
