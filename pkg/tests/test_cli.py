import json
import subprocess
import sys

import pytest

from spectralab.canon import canonical_graph6
from spectralab.cli import main, read_config
from spectralab.families import generate


@pytest.fixture(autouse=True)
def _isolate(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("SPECTRALAB_BUDGET", raising=False)


def _kv(text):
    return dict(line.split("=", 1) for line in text.splitlines() if "=" in line)


def test_invariants_of_a_family_member(capsys):
    assert main(["invariants", "--family", "doublekite(8,5)"]) == 0
    out = _kv(capsys.readouterr().out)
    assert (out["n"], out["m"]) == ("21", "62")
    assert float(out["lambda1"]) == pytest.approx(7.0185, abs=1e-4)


def test_verify_exit_codes_and_counterexample_file(tmp_path, capsys):
    g6 = tmp_path / "c7.g6"
    g6.write_text(generate("cycle(7)").to_graph6() + "\n")
    assert main(["verify", "--g6", str(g6), "--conj", "C04"]) == 0
    out = tmp_path / "report.json"
    assert main(["verify", "--g6", str(g6), "--conj", "C04:ell_mode=n_plus", "--out", str(out)]) == 1
    report = json.loads(out.read_text())
    assert report["conjectures"][0]["violated"] == 1
    lines = (tmp_path / "report.counterexamples.g6").read_text().splitlines()
    assert lines == [f"{report['conjectures'][0]['witnesses'][0]}\tC04_ELW:ell_mode=n_plus"]
    capsys.readouterr()


def test_unknown_id_is_a_usage_error_with_catalog_hint(capsys):
    assert main(["verify", "--enum", "4", "--conj", "C99"]) == 2
    assert "spectralab catalog" in capsys.readouterr().err


def test_missing_input_and_bad_arguments():
    assert main(["verify", "--g6", "does-not-exist.g6", "--conj", "C01"]) == 3
    assert main(["no-such-command"]) == 2
    assert main(["extremal", "--enum", "5"]) == 2
    assert main(["hypercube", "--d", "3", "--m", "20"]) == 2
    assert main(["signed-min", "--family", "complete(9)"]) == 3


def test_config_file_and_flag_precedence(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# comment\nenum = 5\nconnected = true\nconj = C01\n")
    assert read_config(str(cfg)) == {"enum": "5", "connected": "true", "conj": "C01"}
    assert main(["verify", "--config", str(cfg)]) == 0
    assert "graphs: 21" in capsys.readouterr().out
    assert main(["verify", "--config", str(cfg), "--enum", "4"]) == 0
    assert "graphs: 6" in capsys.readouterr().out


def test_extremal_and_generate(tmp_path, capsys):
    assert main(["extremal", "--trees", "10", "--objective", "spectral_gap"]) == 0
    head, *codes = capsys.readouterr().out.splitlines()
    assert head.startswith("min spectral_gap = 0.198")
    assert codes == [canonical_graph6(generate("doublecomet(2,6)"))]
    target = tmp_path / "trees.g6"
    assert main(["generate", "--trees", "7", "--out", str(target)]) == 0
    assert len(target.read_text().splitlines()) == 11


def test_hypercube_range_and_catalog(capsys):
    assert main(["hypercube", "--d", "4", "--m", "7-8"]) == 0
    rows = capsys.readouterr().out.splitlines()
    assert len(rows) == 2 and "lambda=3 " in rows[1]
    assert main(["catalog", "--json"]) == 0
    assert len(json.loads(capsys.readouterr().out)) == 24


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "spectralab.cli", "catalog"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.count("\n") == 24
