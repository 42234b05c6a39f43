import io
import json
import subprocess
import sys

import pytest

from lbanded.cli import run


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write


def test_det(files):
    code, out, _ = cli("det", "--band", files("b.txt", "3\n2\n1\n"))
    assert code == 0 and out == '{"det":"1"}\n'


def test_det_float_mode(files):
    code, out, _ = cli("det", "--mode", "float", "--band", files("b.txt", "3\n2\n1\n"))
    assert json.loads(out) == {"det": 1.0}


def test_json_band_file(files):
    code, out, _ = cli("det", "--json", "--band", files("b.json", '["3", "2", "1"]'))
    assert json.loads(out) == {"det": "1"}


def test_definiteness(files):
    code, out, _ = cli("definiteness", "--band", files("b.txt", "1\n1\n0\n"))
    assert json.loads(out) == {"class": "PositiveSemiDefinite"}


def test_band_commands(files):
    band = files("b.txt", "3\n2\n1\n")
    assert json.loads(cli("inv", "--band", band)[1]) == {"diag": ["1", "2", "2"], "offdiag": ["-1", "-1"]}
    assert json.loads(cli("quadform", "--band", band, "--x", files("x.txt", "1\n1\n1\n"))[1]) == {"quadform": "14"}
    ldl = json.loads(cli("ldl", "--band", band)[1])
    assert ldl["d"] == ["3", "2/3", "1/2"] and ldl["L"][2] == ["1/3", "1/2", "1"]
    chol = json.loads(cli("chol", "--band", band)[1])
    assert chol["L"][0][0] == pytest.approx(3**0.5)
    assert json.loads(cli("cofactor", "--band", band, "--i", "1", "--j", "2")[1]) == {"cofactor": "-1", "minor": "1"}
    colsub = cli("colsub", "--band", band, "--k", "1", "--b", files("bb.txt", "1\n0\n0\n"))
    assert json.loads(colsub[1]) == {"det": "1"}
    assert json.loads(cli("charpoly", "--band", band)[1]) == {"coeffs": ["-1", "5", "-6", "1"], "method": "recurrence"}
    hprod = cli("hprod", "--band", files("a.txt", "3\n2\n"), "--h", files("h.txt", "1\n1\n"))
    assert json.loads(hprod[1]) == {"band": ["5", "4"]}
    assert json.loads(cli("square", "--band", files("s.txt", "2\n1\n"))[1]) == {"matrix": [["5", "3"], ["3", "2"]]}


def test_charpoly_dense_fallback(files):
    band = files("b.txt", "2\n2\n1\n")
    code, _, err = cli("charpoly", "--band", band)
    assert code == 3 and json.loads(err)["error"] == "SingularMatrix"
    code, out, _ = cli("charpoly", "--band", band, "--dense-fallback")
    assert code == 0 and json.loads(out)["method"] == "dense"


def test_damp(files):
    code, out, _ = cli("damp", "--matrix", files("v.csv", "1,0\n0,4\n"), "--covariance")
    data = json.loads(out)
    assert data["zeta"] == ["4/5", "1/5"] and data["normalizer"] == "5/4"
    assert data["l_banded"] is True and data["band"] == ["1", "4/5"]


def test_plain_format_and_out(files, tmp_path):
    band = files("b.txt", "3\n2\n1\n")
    code, out, _ = cli("det", "--format", "plain", "--band", band)
    assert out == 'det: "1"\n'
    target = tmp_path / "out.json"
    code, out, _ = cli("det", "--band", band, "--out", str(target))
    assert code == 0 and out == "" and json.loads(target.read_text()) == {"det": "1"}


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["nosuch"],
        ["det"],
        ["det", "--band", "x", "--mode", "complex"],
        ["det", "--band", "x", "--eq-tol", "0"],
        ["bench", "--op", "det", "--sizes", "0,4"],
        ["bench", "--op", "det", "--sizes", "a,b"],
        ["bench", "--op", "det", "--reps", "0"],
        ["bench", "--op", "eig"],
        ["verify", "--trials", "0"],
    ],
)
def test_usage_errors(argv):
    code, out, err = cli(*argv)
    assert code == 2 and out == ""
    assert json.loads(err)["error"] == "UsageError"


def test_parse_errors(files):
    for text in ("", "3\nfoo\n", "1/0\n"):
        code, out, err = cli("det", "--band", files("bad.txt", text))
        assert code == 2 and out == ""
        assert json.loads(err)["error"] == "ParseError"
    code, _, err = cli("det", "--band", "/nonexistent/band.txt")
    assert code == 2 and json.loads(err)["error"] == "ParseError"


@pytest.mark.parametrize(
    "argv,kind",
    [
        (["inv", "--band", "1\n1\n"], "SingularMatrix"),
        (["chol", "--band", "1\n2\n"], "NotPositiveDefinite"),
        (["ldl", "--band", "3\n0\n1\n"], "NoLdlDecomposition"),
        (["cofactor", "--band", "3\n2\n1\n", "--i", "4", "--j", "1"], "IndexOutOfRange"),
    ],
)
def test_domain_errors(files, argv, kind):
    argv = [files("b.txt", a) if "\n" in a else a for a in argv]
    code, out, err = cli(*argv)
    assert code == 3 and out == ""
    assert json.loads(err)["error"] == kind


def test_dimension_mismatch(files):
    code, _, err = cli("quadform", "--band", files("b.txt", "3\n2\n"), "--x", files("x.txt", "1\n"))
    assert code == 3 and json.loads(err)["error"] == "DimensionMismatch"


def test_verify_small_and_deterministic():
    code, out, _ = cli("verify", "--n-max", "1", "--trials", "1", "--seed", "0")
    reports = json.loads(out)
    assert code == 0 and reports and all(r["passed"] for r in reports)
    for mode in ("rational", "float"):
        a = cli("verify", "--n-max", "4", "--trials", "10", "--seed", "3", "--mode", mode)
        b = cli("verify", "--n-max", "4", "--trials", "10", "--seed", "3", "--mode", mode)
        assert a == b and a[0] == 0


def test_bench_cli():
    code, out, _ = cli("bench", "--op", "det", "--sizes", "8,16", "--reps", "1")
    data = json.loads(out)
    assert code == 0
    assert {r["implementation"] for r in data["records"]} == {"closed-form", "dense-oracle"}
    assert set(data["exponents"]) == {"closed-form", "dense-oracle"}


def test_console_entry_point(tmp_path):
    band = tmp_path / "b.txt"
    band.write_text("3\n2\n1\n")
    proc = subprocess.run([sys.executable, "-m", "lbanded.cli", "det", "--band", str(band)], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == '{"det":"1"}\n'


def test_verify_failure_exit_code(monkeypatch):
    from lbanded import ops

    monkeypatch.setattr(ops, "determinant", lambda A: A.band[0])
    code, out, _ = cli("verify", "--n-max", "3", "--trials", "5")
    assert code == 1
    assert any(not r["passed"] for r in json.loads(out))
