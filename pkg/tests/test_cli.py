import json
import os
import subprocess
import sys

import pytest

from witt_forge.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def js(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


def test_positivity_example(capsys):
    code, out = js(capsys, "sf", "positivity", "--expr", "-1*w[5]")
    assert code == 0 and out["schur_positive"] is True and out["schema"] == 1
    code, out = js(capsys, "sf", "positivity", "--expr", "w[5]")
    assert code == 1 and out["schur_positive"] is False and out["schur_witness"]["coef"] == "-1"


def test_roots_example(capsys):
    code, out = js(capsys, "tnn", "roots", "--coeffs", "1,3,2")
    assert code == 0 and out["in_W_N"] is True and out["linear_factors"] == [1, 2]
    code, out = js(capsys, "tnn", "roots", "--coeffs", "1,1,1")
    assert code == 1 and out["in_W_N"] is False


def test_tnn_check_and_edrei(capsys):
    code, out = js(capsys, "tnn", "check", "--coeffs", "1,1,1", "--order", "3")
    assert code == 1 and out["witness"] == {"rows": [1, 2, 3], "cols": [0, 1, 2], "value": "-1"}
    code, out = js(capsys, "tnn", "edrei", "--alpha", "1", "--beta", "1", "--n", "3")
    assert out["coeffs"] == ["1", "2", "2", "2"]


def test_sf_commands(capsys):
    code, out = js(capsys, "sf", "convert", "--expr", "w[4]", "--to", "s")
    assert [t["coef"] for t in out["terms"]] == ["-1"] * 4
    code, out = js(capsys, "sf", "multiply", "--left", "m[1]", "--right", "m[1]", "--to", "m")
    assert {tuple(t["partition"]): t["coef"] for t in out["terms"]} == {(2,): "1", (1, 1): "2"}
    code, out = js(capsys, "sf", "plethysm", "--outer", "p[2]", "--inner", "p[3]", "--to", "p")
    assert out["terms"] == [{"partition": [6], "coef": "1"}]
    code, out = js(capsys, "sf", "coproduct", "--expr", "e[2]", "--kind", "mul", "--to", "e")
    assert {"left": [2], "right": [2], "coef": "-2"} in out["terms"]


def test_witt_commands(capsys):
    code, out = js(capsys, "witt", "add", "--x", "-1,2", "--y", "3,4")
    assert out["ghost"] == ["2", "6"]
    code, out = js(capsys, "witt", "teich", "--a", "2", "--n", "3", "--anti")
    assert out["ghost"] == ["2", "-4", "8"]
    code, out = js(capsys, "witt", "series", "--x", "ghost:1,1,1", "--norm", "++")
    assert out["series"] == ["1", "1", "0", "0"]
    code, out = js(capsys, "witt", "coords", "--x", "series:1,1,1")
    assert out["witt"] == ["1", "0"]
    code, out = js(capsys, "witt", "member", "--x", "1,-1,1,-1", "--schur")
    assert code == 0 and out["member"] is True
    code, out = js(capsys, "witt", "member", "--x", "1,-1,1,-1")
    assert code == 1 and out["witness"] == [2]


def test_ptypical_commands(capsys):
    code, out = js(capsys, "ptypical", "grid", "--p", "2", "--k", "2", "--ghost", "1,1/2,1/8")
    assert out["grid"]["0,1"] == "1/4" and out["grid"]["0,2"] == "0"
    code, out = js(capsys, "ptypical", "member", "--p", "2", "--k", "2", "--ghost", "0,1,0")
    assert code == 1 and out["witness"] == [0, 1]
    code, out = js(capsys, "ptypical", "add", "--p", "2", "--k", "1", "--x", "1,1", "--y", "1,1")
    assert out["grid"] == {"0,0": "2", "1,0": "2", "0,1": "1"}
    code, out = js(capsys, "ptypical", "verify-basis", "--p", "2", "--k", "1", "--degree", "4")
    assert code == 0 and out["independent"] is True


def test_usage_and_capacity_errors(capsys):
    code, _, err = run(capsys, "sf", "convert", "--expr", "q[1]")
    assert code == 2 and "error" in err
    code, _, err = run(capsys, "sf", "plethysm", "--outer", "p[5]", "--inner", "p[5]")
    assert code == 2 and "capacity error" in err
    code, _, err = run(capsys, "tnn", "roots", "--coeffs", "1,x")
    assert code == 2
    code, _, err = run(capsys, "verify", "--check", "bogus")
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["sf"])
    assert exc.value.code == 2


def test_verify_json_and_flags(capsys, tmp_path):
    cache_file = tmp_path / "c.json"
    code, out, _ = run(capsys, "verify", "--check", "drs", "--check", "theta_table", "--json", "--cache-path", str(cache_file))
    reports = json.loads(out)
    assert code == 0 and [r["check"] for r in reports] == ["drs", "theta_table"]
    assert all(r["schema"] == 1 and r["status"] == "pass" for r in reports)
    assert cache_file.exists()
    code, _, err = run(capsys, "--max-degree", "10", "verify", "--check", "drs", "--cache-path", str(cache_file))
    assert code == 2 and "capacity" in err


def test_console_script(tmp_path):
    env = dict(os.environ, WITT_FORGE_CACHE=str(tmp_path / "c.json"))
    out = subprocess.run(
        [sys.executable, "-m", "witt_forge.cli", "verify", "--check", "theta_table"], capture_output=True, text=True, env=env
    )
    assert out.returncode == 0 and "PASS" in out.stdout


@pytest.mark.parametrize("norm, member", [("++", True), ("+-", False), ("-+", False), ("--", False)])
def test_norm_values_starting_with_dash(capsys, norm, member):
    # (1+t)^2 is a W(N) member only when read as the e-series
    code, out = js(capsys, "witt", "member", "--x", "series:1,2,1", "--domain", "nat", "--norm", norm)
    assert out["member"] is member
    assert code == (0 if member else 1)
