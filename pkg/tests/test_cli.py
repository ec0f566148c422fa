import json
import subprocess
import sys

import pytest

from geoprob.cli import main


def test_list_methods(capsys):
    assert main(["run", "--list-methods"]) == 0
    out = capsys.readouterr().out
    assert "generated" in out and "prisoners-switch" in out


def test_run_json_to_file(tmp_path):
    out = tmp_path / "r.json"
    code = main(["run", "--method", "stick-parallel,prisoners-stay", "--trials", "5000", "--seed", "3",
                 "--format", "json", "--out", str(out)])
    assert code == 0
    doc = json.loads(out.read_text())
    assert [e["name"] for e in doc["experiments"]] == ["stick-parallel", "prisoners-stay"]


def test_csv_to_stdout(capsys):
    assert main(["run", "--method", "l-method", "--trials", "3000", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("method,metric,mean")
    assert lines[1].startswith("l-method,P,")


@pytest.mark.parametrize("argv", [["run", "--method", "bogus"], ["run", "--method", "generated", "--trials", "0"], ["run"]])
def test_config_error_exit_code(argv, capsys):
    assert main(argv) == 2


def test_nonconvergence_exit_code(monkeypatch):
    from geoprob import samplers

    monkeypatch.setattr(samplers, "MAX_REJECTIONS", 1)
    assert main(["run", "--method", "l-method", "--trials", "100"]) == 3


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "geoprob", "run", "--method", "generated", "--trials", "8"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "P = 0.75" in proc.stdout
