import json
import subprocess
import sys

import pytest

from dotparse import parse
from flagorbits.cli import EXIT_BUDGET, EXIT_FAIL, EXIT_OK, EXIT_USAGE, UsageError, main, read_manifest
from flagorbits.graphio import validate_graph


def run(*argv):
    return main(list(argv))


def test_rootsys(capsys):
    assert run("rootsys", "--type", "E6") == EXIT_OK
    out = capsys.readouterr().out
    assert "positive roots 36" in out
    assert "node 1: cominuscule, |W^P| = 27" in out and "node 6: cominuscule" in out


def test_distance(capsys):
    assert run("distance", "--type", "A3", "--p1", "2", "--p2", "2", "--pair", "dominant,lowest") == EXIT_OK
    assert capsys.readouterr().out.startswith("d = 2")
    assert run("distance", "--type", "D4", "--p1", "1", "--p2", "3") == EXIT_OK
    assert "0 mismatches" in capsys.readouterr().out
    assert run("distance", "--type", "A3", "--p1", "1", "--p2", "1", "--pair", "dominant,21") == EXIT_OK
    assert capsys.readouterr().out.startswith("d = 1")


def test_cascade(capsys):
    assert run("cascade", "--type", "D5", "--p1", "1", "--p2", "1") == EXIT_OK
    out = capsys.readouterr().out
    assert out.count("theta_") == 4 and "dense orbit rank 2" in out


def test_shadow_stdout_is_valid_and_reproducible(capsys):
    assert run("shadow", "--type", "A1", "--p1", "1", "--p2", "1", "--gorbit", "dense") == EXIT_OK
    first = capsys.readouterr().out
    doc = json.loads(first)
    validate_graph(doc)
    assert len(doc["nodes"]) == 3 and len(doc["edges"]) == 2
    run("shadow", "--type", "A1", "--p1", "1", "--p2", "1", "--gorbit", "dense")
    assert capsys.readouterr().out == first


def test_shadow_files(tmp_path):
    j, d = tmp_path / "g.json", tmp_path / "g.dot"
    assert run("shadow", "--type", "A3", "--p1", "1", "--p2", "3", "--json", str(j), "--dot", str(d)) == EXIT_OK
    validate_graph(json.loads(j.read_text()))
    graphs = parse(d.read_text())
    assert [g["name"] for g in graphs] == ["gorbit_e", "gorbit_123"]
    before = (j.read_bytes(), d.read_bytes())
    run("shadow", "--type", "A3", "--p1", "1", "--p2", "3", "--json", str(j), "--dot", str(d))
    assert (j.read_bytes(), d.read_bytes()) == before


def test_manifest_and_flag_precedence(tmp_path, capsys):
    m = tmp_path / "run.manifest"
    m.write_text("# small run\ntype = A2\np1 = 1\np2 = 1\nq = 2,3\n")
    assert read_manifest(m) == {"type": "A2", "p1": "1", "p2": "1", "q": "2,3"}
    assert run("orbitlab", "--manifest", str(m)) == EXIT_OK
    assert "12 B-orbits" in capsys.readouterr().out
    assert run("orbitlab", "--manifest", str(m), "--p2", "2") == EXIT_OK
    assert "A2 nodes (1,2)" in capsys.readouterr().out
    m.write_text("bogus = 1\n")
    assert run("orbitlab", "--manifest", str(m)) == EXIT_USAGE
    with pytest.raises(UsageError):
        read_manifest(tmp_path / "missing")


def test_orbitlab_outputs(tmp_path, capsys):
    j, d = tmp_path / "r.json", tmp_path / "r.dot"
    assert run("orbitlab", "--type", "C2", "--p1", "2", "--p2", "2", "--q", "3", "--json", str(j), "--dot",
               str(d), "--gorbit", "dense") == EXIT_OK
    from flagorbits.orbitlab.report import validate_report

    validate_report(json.loads(j.read_text()))
    assert len(parse(d.read_text())) == 1


def test_verify(capsys):
    assert run("verify", "--type", "A2", "--p1", "1", "--p2", "1", "--q", "2,3") == EXIT_OK
    assert capsys.readouterr().out.rstrip().endswith("PASS")
    assert run("verify", "--type", "C2", "--p1", "2", "--p2", "2", "--q", "3") == EXIT_OK
    assert "not simply laced" in capsys.readouterr().out


def test_exit_codes(capsys):
    assert run("orbitlab", "--type", "A3", "--p1", "2", "--p2", "2", "--q", "2,3", "--budget", "100") == EXIT_BUDGET
    assert run("orbitlab", "--type", "E6", "--p1", "1", "--p2", "1", "--q", "3") == EXIT_USAGE
    assert run("orbitlab", "--type", "A2", "--p1", "1", "--p2", "1", "--q", "4") == EXIT_USAGE
    assert run("orbitlab", "--type", "A2", "--p1", "1", "--p2", "1") == EXIT_USAGE
    assert run("distance", "--type", "Q7", "--p1", "1", "--p2", "1") == EXIT_USAGE
    assert run("distance", "--type", "A2", "--p1", "5", "--p2", "1") == EXIT_USAGE
    assert run("shadow", "--type", "C3", "--p1", "3", "--p2", "3") == EXIT_USAGE
    assert run("shadow", "--type", "A2", "--p1", "1", "--p2", "1", "--gorbit", "9") == EXIT_USAGE
    with pytest.raises(SystemExit) as exc:
        run("nosuch")
    assert exc.value.code == EXIT_USAGE
    capsys.readouterr()


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "flagorbits", "rootsys", "--type", "A2"], capture_output=True,
                         text=True)
    assert out.returncode == EXIT_OK and "rank 2" in out.stdout
    assert EXIT_FAIL == 1


def test_counterexample_exit_codes(monkeypatch, sp6_report, capsys):
    import flagorbits.orbitlab.counterexample as ce

    monkeypatch.setattr(ce, "counterexample_sp6", lambda: sp6_report)
    # the literal p2 identity fails (see the ledger), so the command reports a verification failure
    assert run("counterexample") == EXIT_FAIL
    out = capsys.readouterr().out
    assert "[FAIL] q=7: p2 x0 = x2" in out and out.rstrip().endswith("FAIL")
    assert run("counterexample", "sp4") == EXIT_USAGE
