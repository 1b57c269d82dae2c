import io
import json
import os
import signal
import subprocess
import sys
import time

import pytest

from perichar import cli
from perichar.laurent import LaurentPolynomial


def run(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


X1_PLUS_X2 = '{"nvars":2,"terms":[[[0,1],"1"],[[1,0],"1"]]}'


def test_thinkac_json():
    code, out, _ = run("thinkac", "--n", "2", "--weight", "0,0", "--json")
    assert code == 0
    assert out == '{"nvars":2,"terms":[[[0,0],"1"],[[1,1],"-1"]]}\n'


def test_member_from_file(tmp_path):
    f = tmp_path / "f.json"
    f.write_text(X1_PLUS_X2)
    code, out, _ = run("member", "--n", "2", "--poly-file", str(f))
    assert (code, out) == (0, "false\n")


def test_member_from_stdin():
    r = '{"nvars":2,"terms":[[[0,0],"1"],[[1,1],"-1"]]}'
    assert run("member", "--stdin", stdin=r)[:2] == (0, "true\n")


def test_probe_report():
    code, out, _ = run("probe", "--n", "3", "--k", "1", "--a-min", "-3", "--a-max", "3")
    assert code == 0
    rep = json.loads(out)
    assert [row["a"] for row in rep["rows"]] == list(range(-3, 4))
    assert all(row["equals_plus"] for row in rep["rows"])


def test_domain_error_prefix():
    code, out, err = run("kernel", "--stdin", stdin=X1_PLUS_X2)
    assert code == 1 and out == ""
    assert err == "ERROR: not in kernel\n"
    code, _, err = run("schur", "--weight", "0,1")
    assert code == 1 and err.startswith("ERROR: weight not dominant")
    code, _, err = run("member", "--stdin", stdin='{"nvars":2,"terms":[[[0],"1"]]}')
    assert code == 1 and "exponent length mismatch" in err
    code, _, err = run("euler", "--weight", "1,0", "--gamma", "0,0")
    assert code == 1 and err == "ERROR: weight not constant on Levi blocks\n"


@pytest.mark.parametrize("argv", [
    ["frobnicate"],
    ["thinkac"],
    ["thinkac", "--weight", "1,x"],
    ["thinkac", "--n", "3", "--weight", "0,0"],
    ["member"],
    ["probe", "--n", "3"],
    ["probe", "--n", "3", "--k", "1", "--a", "1", "--a-min", "0", "--a-max", "2"],
    ["thinkac", "--weight", "0", "--json", "--text"],
])
def test_usage_errors(argv):
    code, _, err = run(*argv)
    assert code == 2
    assert "usage:" in err


def test_negative_weights_parse():
    code, out, _ = run("translate", "--weight", "-1,-1", "--k", "-1")
    assert code == 0
    assert json.loads(out)["n"] == 2


def test_text_outputs():
    assert run("schur", "--weight", "2,0", "--text")[1] == "x1^2 + x1*x2 + x2^2\n"
    assert run("tensorv", "--weight", "0,0", "--text")[1] == "-1 nabla(0,-1)\n-1 nabla(1,0)\n"
    assert run("euler", "--weight", "1,0", "--gamma", "0,-1", "--schur", "--text")[1] == \
        "+1 s(1,0)\n-1 s(2,1)\n"
    assert run("translate", "--weight", "0,0", "--text")[1] == \
        "k=1 case=1 -1 nabla(1,0)\nk=0 case=2 -1 nabla(0,-1)\n"
    beads = run("diagram", "--weight", "0,-1,-3", "--window", "-4,4", "--text")[1]
    assert beads.splitlines()[0].replace(" ", "") == "...obooboboo..."


def test_ds_and_kernel_pipeline():
    f = LaurentPolynomial.monomial((1, 1, 1, 1))
    assert run("ds", "--stdin", stdin=f.to_json())[1] == LaurentPolynomial.monomial((1, 1)).to_json() + "\n"
    thin = run("thinkac", "--weight", "1,0,0")[1]
    assert run("ds", "--stdin", stdin=thin)[1] == '{"nvars":1,"terms":[]}\n'
    assert json.loads(run("kernel", "--stdin", stdin=thin)[1]) == {"n": 3, "terms": [[[1, 0, 0], 1]]}
    code, out, _ = run("schur", "--stdin", stdin=run("schur", "--weight", "3,1,0")[1])
    assert json.loads(out) == [[[3, 1, 0], 1]]


def test_selftest_subset_and_failure_exit():
    code, out, _ = run("selftest", "--quick", "--only", "1", "--only", "7a")
    report = json.loads(out)
    assert code == 0 and report["passed"]
    assert [r["criterion"] for r in report["results"]] == ["1", "7a"]
    code, out, _ = run("selftest", "--quick", "--only", "7b", "--text")
    assert code == 1 and out.startswith("FAIL 7b")


def test_write_golden(tmp_path):
    assert run("selftest", "--write-golden", str(tmp_path))[0] == 0
    from perichar.selftest import load_golden
    for name in ("probe_reports.json", "sign_table.json"):
        assert (tmp_path / name).read_text() == load_golden(name)


def _console(*argv, **kw):
    return subprocess.run([sys.executable, "-m", "perichar.cli", *argv], capture_output=True,
                          text=True, **kw)


def test_console_entry_point_is_deterministic():
    argv = ["tensorv", "--weight", "1,0,-1"]
    a, b = _console(*argv), _console(*argv)
    assert a.returncode == 0 and a.stdout == b.stdout and a.stdout


def test_interrupt_exits_130():
    proc = subprocess.Popen([sys.executable, "-m", "perichar.cli", "selftest", "--full"],
                            stdout=subprocess.PIPE, stderr=subprocess.PIPE, text=True)
    time.sleep(1.5)
    proc.send_signal(signal.SIGINT)
    _, err = proc.communicate(timeout=30)
    assert proc.returncode == 130
    assert "ERROR: cancelled" in err


def test_max_subsets_env():
    env = dict(os.environ, PERICHAR_MAX_SUBSETS="2")
    r = _console("euler", "--weight", "0,0,0", "--gamma", "0,-1,-1", env=env)
    assert r.returncode == 1 and r.stderr == "ERROR: parabolic too large for desk scale\n"
