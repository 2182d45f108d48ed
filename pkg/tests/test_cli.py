import json
import subprocess
import sys

import pytest

from crepant_kit.cli import analyze, main, molien


def run(*args, env=None):
    return subprocess.run([sys.executable, "-m", "crepant_kit", *args],
                          capture_output=True, text=True, env=env)


def checks_by_name(report):
    return {c["name"]: c for c in report["checks"]}


def test_analyze_crepant_json(capsys):
    assert main(["analyze", "--n", "2", "--d", "2", "--max-degree", "10", "--format", "json"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["verdict"] == "pass"
    checks = checks_by_name(rep)
    assert checks["discrepancy"]["data"]["value"] == "0"
    assert checks["sod"]["data"]["block_count"] == 0
    assert checks["sod"]["data"]["statement"] == "T_0 = D^b(X̃)"
    assert set(rep) == {"schema", "command", "input", "checks", "verdict", "version", "elapsed_ms"}
    for c in rep["checks"]:
        assert set(c) <= {"name", "status", "witness", "data"}


def test_analyze_p3_text(capsys):
    assert main(["analyze", "--n", "4", "--d", "2", "--max-degree", "10"]) == 0
    out = capsys.readouterr().out
    assert "verdict: pass" in out
    assert "a = 1" in out
    assert "Hilbert match to fiber degree 10" in out
    assert "1 block(s)" in out
    assert "\x1b[" not in out


def test_analyze_hypothesis_violated(capsys):
    assert main(["analyze", "--n", "3", "--d", "2", "--max-degree", "5"]) == 1
    out = capsys.readouterr().out
    assert "verdict: hypothesis-violated" in out
    rep = analyze(3, 2, 5)
    statuses = {c.name: c.status for c in rep.checks}
    assert statuses["tilting"] == statuses["sod"] == statuses["descent"] == "SKIP"
    assert statuses["gorenstein"] == "FAIL"


def test_molien_text(capsys):
    assert main(["molien", "--d", "2", "--weights", "1,1", "--max-degree", "4"]) == 0
    out = capsys.readouterr().out
    assert "(1,0,3,0,5)" in out
    rep = molien(2, [1, 1], 4)
    assert all(c.data.get("agreement", True) for c in rep.checks)


def test_molien_trivial_group(capsys):
    assert main(["molien", "--d", "1", "--weights", "1", "--max-degree", "3"]) == 0
    assert "(1,1,1,1)" in capsys.readouterr().out


def test_molien_json_certificate(capsys):
    assert main(["molien", "--d", "3", "--weights", "1,1,2", "--max-degree", "6",
                 "--format", "json"]) == 0
    rep = json.loads(capsys.readouterr().out)
    checks = checks_by_name(rep)
    assert {"series[chi_0]", "series[chi_1]", "series[chi_2]"} <= set(checks)
    cert = checks["gorenstein"]["data"]
    assert cert["weight_sum_mod_d"] == 1 and cert["gorenstein"] is False
    assert "sum w = 4 = 1 mod 3" in cert["summary"]


def test_molien_scalar_from_n(capsys):
    assert main(["molien", "--d", "3", "--n", "3", "--max-degree", "6"]) == 0
    assert "(1,0,0,10,0,0,28)" in capsys.readouterr().out


def test_determinism_and_timing_field():
    a = run("analyze", "--n", "4", "--d", "2", "--max-degree", "10", "--format", "json")
    b = run("analyze", "--n", "4", "--d", "2", "--max-degree", "10", "--format", "json")
    assert a.returncode == b.returncode == 0
    ja, jb = json.loads(a.stdout), json.loads(b.stdout)
    ja.pop("elapsed_ms"), jb.pop("elapsed_ms")
    assert json.dumps(ja, sort_keys=True) == json.dumps(jb, sort_keys=True)
    strip = [line for line in a.stdout.splitlines() if '"elapsed_ms"' not in line]
    strip_b = [line for line in b.stdout.splitlines() if '"elapsed_ms"' not in line]
    assert strip == strip_b


def test_thread_cap_does_not_change_output(monkeypatch):
    monkeypatch.setenv("CREPANT_KIT_THREADS", "1")
    one = analyze(6, 3, 6).to_json(include_timing=False)
    monkeypatch.setenv("CREPANT_KIT_THREADS", "8")
    many = analyze(6, 3, 6).to_json(include_timing=False)
    assert one == many


def test_bad_thread_env(monkeypatch, capsys):
    monkeypatch.setenv("CREPANT_KIT_THREADS", "lots")
    assert main(["analyze", "--n", "2", "--d", "2", "--max-degree", "1"]) == 2


@pytest.mark.parametrize("n", range(1, 9))
@pytest.mark.parametrize("d", range(1, 6))
def test_exit_code_grid(n, d, capsys):
    code = main(["analyze", "--n", str(n), "--d", str(d), "--max-degree", "4", "--format", "json"])
    rep = json.loads(capsys.readouterr().out)
    if n % d == 0:
        assert code == 0 and rep["verdict"] == "pass"
    else:
        assert code == 1 and rep["verdict"] == "hypothesis-violated"


@pytest.mark.parametrize("argv", [
    ["analyze", "--n", "0", "--d", "2", "--max-degree", "3"],
    ["analyze", "--n", "2", "--d", "0", "--max-degree", "3"],
    ["analyze", "--n", "2", "--d", "2", "--max-degree", "-1"],
    ["analyze", "--n", "2", "--d", "2", "--max-degree", "3", "--weights", "1,2"],
    ["analyze", "--n", "2", "--d", "3", "--max-degree", "3", "--weights", "1"],
    ["molien", "--d", "2", "--weights", "1,x", "--max-degree", "3"],
    ["molien", "--d", "2", "--max-degree", "3"],
    ["molien", "--d", "2", "--n", "3", "--weights", "1,1", "--max-degree", "3"],
])
def test_usage_errors_exit_2(argv, capsys):
    assert main(argv) == 2
    assert "error" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    ["analyze", "--n", "2", "--max-degree", "3"],
    ["analyze", "--n", "2", "--d", "2", "--max-degree", "3", "--format", "xml"],
    ["frobnicate"],
])
def test_argparse_errors_exit_2(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_output_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    assert main(["analyze", "--n", "4", "--d", "2", "--max-degree", "3", "--format", "json",
                 "--output", str(target)]) == 0
    assert capsys.readouterr().out == ""
    assert json.loads(target.read_text(encoding="utf-8"))["verdict"] == "pass"


def test_color_flag(capsys):
    main(["analyze", "--n", "2", "--d", "2", "--max-degree", "2", "--color"])
    assert "\x1b[32mPASS" in capsys.readouterr().out


def test_subprocess_exit_codes():
    assert run("analyze", "--n", "3", "--d", "2", "--max-degree", "5").returncode == 1
    assert run("analyze", "--n", "6", "--d", "3", "--max-degree", "5").returncode == 0
    assert run("analyze", "--n", "-1", "--d", "2", "--max-degree", "5").returncode == 2
