import json
import subprocess
import sys

import pytest

from degenmat import ledger
from degenmat.cli import main
from degenmat.ledger import perturb
from degenmat.matrices import LowerTri, pascal
from degenmat.ring import LAMBDA, X, parse_poly


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_beta(capsys):
    code, out, _ = run(capsys, "compute", "beta", "--m", "2", "--w", "1", "--lambda", "lambda", "--x", "x")
    assert code == 0
    assert out.strip() == "x^2 - x - 1/6*lambda^2 + 1/6"


def test_compute_hyperharmonic(capsys):
    assert run(capsys, "compute", "hyperharmonic", "--m", "3", "--r", "1")[1].strip() == "11/6"


def test_compute_triangle(capsys):
    code, out, _ = run(capsys, "compute", "stirling2", "--m", "0..4", "--k", "0..4")
    assert code == 0
    rows = {line.split("|")[0].strip(): line.split("|")[1].split() for line in out.splitlines() if "|" in line}
    assert rows["4"] == ["0", "1", "7", "6", "1"]
    assert rows["0"] == ["1"]


def test_compute_rational_flags(capsys):
    code, out, _ = run(capsys, "compute", "beta", "--m", "1", "--lambda=1/2", "--x=-1/2")
    assert code == 0 and out.strip() == "-3/4"


@pytest.mark.parametrize("seq", ["alpha", "bernoulli", "bernoulli2", "stirling1", "stirling1-gen",
                                 "stirling2-gen", "r-stirling1", "r-stirling2", "lah", "gff", "rising"])
def test_compute_every_sequence(capsys, seq):
    code, out, _ = run(capsys, "compute", seq, "--m", "3", "--k", "2", "--r", "1", "--mu", "1")
    assert code == 0 and out.strip()


def test_compute_json_roundtrip(capsys):
    code, out, _ = run(capsys, "--format", "json", "compute", "stirling2-gen", "--m", "0..4", "--k", "0..2",
                       "--lambda", "lambda", "--x", "x")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 15
    for row in rows:
        parse_poly(row["value"])


def test_compute_csv(capsys):
    code, out, _ = run(capsys, "compute", "lah", "--m", "4", "--k", "1..4", "--format", "csv")
    assert out.splitlines() == ["m,k,value", "4,1,24", "4,2,36", "4,3,12", "4,4,1"]


def test_bad_symbol_is_usage_error(capsys):
    code, _, err = run(capsys, "compute", "beta", "--m", "2", "--x", "z")
    assert code == 2 and "lambda, mu, x, y" in err
    assert run(capsys, "compute", "beta", "--m", "4..2")[0] == 2
    assert run(capsys, "compute", "nosuch")[0] == 2


def test_bad_params_quotes_constraint(capsys):
    code, _, err = run(capsys, "compute", "stirling2-gen", "--m", "2", "--k", "1",
                       "--mu", "0", "--lambda", "0", "--x", "0")
    assert code == 2 and "(0, 0, 0)" in err


def test_matrix_pascal_example(capsys):
    code, out, _ = run(capsys, "matrix", "pascal", "--n", "4", "--lambda", "lambda", "--x", "x")
    assert code == 0
    last = out.splitlines()[-1]
    assert "x^3 - 3*x^2*lambda + 2*x*lambda^2" in last and "3*x^2 - 3*x*lambda" in last


def test_matrix_json_roundtrip(capsys):
    code, out, _ = run(capsys, "matrix", "pascal", "--n", "4", "--format", "json")
    assert code == 0
    assert LowerTri.from_json(json.loads(out)) == pascal(4, LAMBDA, X)


def test_matrix_t_entry(capsys):
    _, out, _ = run(capsys, "matrix", "t", "--n", "3", "--lambda", "1", "--x", "2", "--format", "json")
    assert json.loads(out)["entries"][2][0] == "2"


def test_matrix_identity(capsys):
    _, out, _ = run(capsys, "matrix", "pascal", "--n", "3", "--x", "0", "--lambda", "lambda", "--format", "csv")
    assert out.splitlines() == ["1", "0,1", "0,0,1"]


@pytest.mark.parametrize("family", ["pascal", "r", "t", "g", "q", "bernoulli", "l", "stirling1-t1",
                                    "stirling2-t1", "stirling1-t2", "stirling2-t2"])
def test_matrix_every_family(capsys, family):
    code, out, _ = run(capsys, "matrix", family, "--n", "4")
    assert code == 0 and len(out.splitlines()) == 4


def test_matrix_zero_denominator(capsys):
    code, _, err = run(capsys, "matrix", "r", "--n", "3", "--lambda", "1", "--x", "1")
    assert code == 2 and "vanishes" in err


def test_verify_golden(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "thm-2.1")
    assert code == 0 and out.strip() == "thm-2.1: 24/24 passed"


def test_verify_unknown(capsys):
    code, _, err = run(capsys, "verify", "--identity", "nonsense")
    assert code == 2 and "degenmat list" in err


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "eq-13", "--format", "json", "--profile", "full")
    data = json.loads(out)
    assert code == 0 and data["id"] == "eq-13" and data["failures"] == []


def test_verify_perturbed_exits_one(capsys, monkeypatch):
    spec = perturb(ledger.CATALOG.get("eq-13"))
    monkeypatch.setattr(ledger, "CATALOG", ledger.CATALOG.replace(spec))
    code, out, _ = run(capsys, "verify", "--identity", "eq-13")
    assert code == 1 and "FAIL" in out


def test_list(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0
    assert "eq-13  §5.3 'is Eq. (7) of [26]'" in out
    assert len(out.splitlines()) >= 40
    _, out, _ = run(capsys, "list", "--format", "json")
    entries = json.loads(out)
    assert len(entries) >= 40 and set(entries[0]) == {"id", "anchor", "domain"}


def test_global_flags_either_side(capsys):
    before = run(capsys, "--format", "json", "list")[1]
    after = run(capsys, "list", "--format", "json")[1]
    assert before == after and before.startswith("[")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "degenmat", "compute", "hyperharmonic", "--m", "3", "--r", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "11/6"
