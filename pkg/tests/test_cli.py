import io
import json
import subprocess
import sys

import pytest

from gf2fourier.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    status = run(list(argv), stdout=out, stderr=err)
    return status, out.getvalue(), err.getvalue()


def test_spectrum_example():
    status, out, _ = call("spectrum", "--n", "2", "--poly", "x1*x2")
    assert status == 0
    assert out.strip() == '{"0":"1/2","1":"1/2","2":"1/2","3":"-1/2"}'


def test_methods_byte_identical():
    for poly, n in [("x1*x2 + x2*x3 + x4", "4"), ("1", "3"), ("0", "2"), ("x1 x2 x3 x4 x5 + x2", "5")]:
        a = call("spectrum", "--n", n, "--poly", poly, "--method", "wht")
        b = call("spectrum", "--n", n, "--poly", poly, "--method", "covers")
        assert a == b


def test_spectrum_keys_numeric_order():
    _, out, _ = call("spectrum", "--n", "4", "--construct", "complete:2")
    assert list(json.loads(out)) == [str(i) for i in range(16)]


def test_lrank_example():
    status, out, _ = call("lrank", "--n", "6", "--construct", "complete:2")
    data = json.loads(out)
    assert status == 0 and data["lrank"] == 3 and len(data["witness"]) == 3


def test_lrank_not_found():
    _, out, _ = call("lrank", "--n", "6", "--construct", "complete:2", "--r-max", "2")
    assert json.loads(out) == {"lrank": None, "witness": None}


def test_sparsity_and_granularity():
    _, out, _ = call("sparsity", "--n", "4", "--construct", "gip:2")
    assert json.loads(out) == {"sparsity": 16, "sparsity_pm": 16}
    _, out, _ = call("granularity", "--n", "4", "--construct", "gip:2")
    assert json.loads(out)["granularity"] == 2


def test_covers():
    _, out, _ = call("covers", "--n", "3", "--poly", "x1*x2 + x2*x3")
    data = json.loads(out)
    assert data["A"] == {"0": 1, "3": -2, "6": -2, "7": 4}
    assert data["weights"]["7"] == "1/2"
    _, out, _ = call("covers", "--n", "4", "--construct", "complete:2", "--target", "15", "--k", "2")
    assert json.loads(out)["count"] == 3


def test_construct_with_lower_part():
    a = call("construct", "--n", "6", "--construct", "complete:3", "--lower-density", "1/2", "--seed", "4")
    b = call("construct", "--n", "6", "--construct", "complete:3", "--lower-density", "1/2", "--seed", "4")
    assert a == b and json.loads(a[1])["degree"] == 3


def test_csv():
    _, out, _ = call("spectrum", "--n", "1", "--poly", "x1", "--format", "csv")
    assert out.splitlines() == ["mask,coefficient", "0,0", "1,1"]


def test_verify_symlrank():
    status, out, _ = call("verify", "--suite", "symlrank", "--n-max", "6")
    assert status == 0
    assert all(r["pass"] for r in json.loads(out))


def test_verify_failure_status(monkeypatch):
    from gf2fourier import cli
    from gf2fourier.verify import Report

    monkeypatch.setattr(cli, "run_suite", lambda *a, **k: [Report("fake", {}, "==", 1, 2)])
    status, _, _ = call("verify", "--suite", "parity")
    assert status == 1


@pytest.mark.parametrize("argv", [
    ["spectrum", "--n", "3", "--poly", "x9"],
    ["spectrum", "--n", "3"],
    ["lrank", "--n", "3", "--poly", "1"],
    ["construct", "--n", "6", "--construct", "grid:3"],
    ["construct", "--n", "6", "--construct", "complete"],
])
def test_domain_errors_exit_2(argv):
    status, out, err = call(*argv)
    assert status == 2 and out == "" and err.startswith("error:")


def test_usage_errors_exit_2(capsys):
    assert call("bogus")[0] == 2
    assert call("spectrum", "--what")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "gf2fourier", "spectrum", "--n", "2", "--poly", "x1*x2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == '{"0":"1/2","1":"1/2","2":"1/2","3":"-1/2"}'
