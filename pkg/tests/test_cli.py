import math

import pytest

import cyclosc.algebra
from cyclosc.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_info_basic(capsys):
    code, out, err = run(capsys, "info", "--lambda", "2", "--alpha", "0.5,-0.5")
    assert code == 0
    assert "lambda: 2" in out
    assert "0.75" in out  # ground-state energy at alpha_0 = 0.5


def test_info_inadmissible_alpha(capsys):
    code, out, err = run(capsys, "info", "--lambda", "2", "--alpha=-1,1")
    assert code == 1
    assert "error:" in err
    assert "alpha_0" in err


def test_info_rejects_lambda_one(capsys):
    code, out, err = run(capsys, "info", "--lambda", "1")
    assert code == 1
    assert "error:" in err


def test_alpha_auto_completion(capsys):
    code, out, err = run(capsys, "info", "--lambda", "3", "--alpha", "0.5,-0.25,auto")
    assert code == 0
    assert "-0.25" in out


def test_sga_csv_casimir(capsys):
    code, out, err = run(capsys, "sga", "--lambda", "3", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "kind,mu,power,value"
    rows = [ln.split(",") for ln in lines[1:]]
    cas = {int(r[1]): float(r[3]) for r in rows if r[0] == "casimir"}
    for mu in range(3):
        assert math.isclose(cas[mu], 5.0 / 24.0, rel_tol=1e-10)
    f00 = [float(r[3]) for r in rows if r[0] == "f" and r[1] == "0" and r[2] == "0"]
    assert math.isclose(f00[0], -5.0 / 12.0, rel_tol=1e-10)


def test_sga_text_report(capsys):
    code, out, err = run(capsys, "sga", "--lambda", "2", "--alpha", "0.5,-0.5")
    assert code == 0
    assert "closed-form max deviation" in out


def test_sweep_csv_shape_and_determinism(tmp_path, capsys):
    args = [
        "sweep", "--lambda", "2", "--alpha", "0.5,-0.5", "--mu", "1",
        "--quantity", "mandel-q", "--r-from", "0.25", "--r-to", "4", "--steps", "7",
    ]
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(args + ["--out", str(a)]) == 0
    assert main(args + ["--out", str(b)]) == 0
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()
    lines = a.read_text().splitlines()
    assert lines[0] == "z_re,z_im,abs_z,value"
    assert len(lines) == 8


def test_sweep_squeezing_values(capsys):
    code, out, err = run(
        capsys, "sweep", "--lambda", "2", "--alpha", "1,auto",
        "--quantity", "X", "--z-from=-6", "--z-to=-0.1", "--steps", "5",
    )
    assert code == 0
    vals = [float(ln.split(",")[3]) for ln in out.strip().splitlines()[1:]]
    assert len(vals) == 5
    assert all(v < 0.9 for v in vals)


def test_sweep_mandel_positive(capsys):
    code, out, err = run(
        capsys, "sweep", "--lambda", "2", "--quantity", "mandel-q",
        "--r-from", "0.25", "--r-to", "4", "--steps", "6",
    )
    assert code == 0
    vals = [float(ln.split(",")[3]) for ln in out.strip().splitlines()[1:]]
    assert all(v > 0.0 for v in vals)


def test_sweep_argument_validation(capsys):
    base = ["sweep", "--lambda", "2", "--quantity", "var-x"]
    assert main(base + ["--r-from", "0", "--r-to", "1", "--steps", "1"]) == 1
    assert main(base) == 1  # neither range given
    assert main(base + ["--r-from", "0", "--r-to", "1", "--z-from", "0", "--z-to", "1"]) == 1
    assert main(base + ["--z-from", "1", "--z-to", "1"]) == 1  # degenerate line
    capsys.readouterr()


def test_sweep_invalid_quantity(capsys):
    code, out, err = run(
        capsys, "sweep", "--lambda", "2", "--quantity", "skew",
        "--r-from", "0", "--r-to", "1",
    )
    assert code == 1


def test_sweep_truncation_exit(capsys):
    code, out, err = run(
        capsys, "sweep", "--lambda", "2", "--quantity", "mandel-q",
        "--r-from", "1", "--r-to", "1e6", "--steps", "3",
    )
    assert code == 3
    assert "error:" in err


def test_verify_single_suite(tmp_path, capsys):
    out_file = tmp_path / "report.txt"
    code = main(["verify", "--suite", "sga", "--out", str(out_file)])
    capsys.readouterr()
    assert code == 0
    text = out_file.read_text()
    assert "suite sga" in text
    assert "FAIL" not in text


def test_verify_catches_mutation(tmp_path, capsys, monkeypatch):
    orig = cyclosc.algebra.structure_function

    def bent(params, n):
        return orig(params, n) + 0.01

    monkeypatch.setattr(cyclosc.algebra, "structure_function", bent)
    out_file = tmp_path / "report.txt"
    code = main(["verify", "--suite", "commutators", "--out", str(out_file)])
    capsys.readouterr()
    assert code == 2
    assert "commutator-identity" in out_file.read_text()


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    capsys.readouterr()
