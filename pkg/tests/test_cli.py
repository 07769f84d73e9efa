import json
import re

import pytest

from hrkit import catalog, cli
from hrkit.catalog import Exclusion
from hrkit.liealg import GenericityError

KEYS = {"space", "dim_g", "rank_g", "dim_isotropy", "rank_isotropy", "cohomogeneity", "hrk", "seeds",
        "samples_agreed", "derived_series_dims"}


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_u3_pair(capsys):
    code, out, _ = run(capsys, "compute", "--rep", "std(u(3))+std(u(3))", "--space", "hp",
                       "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert set(d) == KEYS
    assert (d["hrk"], d["cohomogeneity"], d["dim_isotropy"], d["rank_isotropy"]) == (0, 4, 2, 2)
    assert d["space"] == "quaternionic_projective(6)"


def test_compute_trivial_linear(capsys):
    code, out, _ = run(capsys, "compute", "--rep", "trivial(4)", "--space", "linear")
    assert code == 0
    assert json.loads(out)["hrk"] == -4


def test_table_format(capsys):
    code, out, _ = run(capsys, "compute", "--rep", "std(so(3))", "--space", "linear",
                       "--format", "table")
    assert code == 0
    rows = dict(line.split(None, 1) for line in out.splitlines())
    assert rows["hrk"] == "-1" and rows["cohomogeneity"] == "1"


def test_weyl_dim(capsys):
    assert run(capsys, "weyl-dim", "--type", "C", "--rank", "3", "--weight", "0,0,1")[:2] == (0, "14\n")
    code, _, err = run(capsys, "weyl-dim", "--type", "C", "--rank", "3", "--weight", "0,1")
    assert code == 2 and "error" in err


def test_structure_type(capsys):
    code, out, _ = run(capsys, "structure-type", "--rep", "std(sp(2))")
    assert code == 0
    assert json.loads(out) == {"type": "quaternionic", "commutant_dim": 4}


def test_json_round_trip_and_seeds(capsys):
    _, out, _ = run(capsys, "compute", "--rep", "std(so(5))", "--seed", "40", "--samples", "2")
    d = json.loads(out)
    assert d["seeds"] == [40, 41]
    assert cli.to_json(d) == out


def test_determinism(capsys):
    argv = ("compute", "--rep", "wedge(2, std(su(4)))", "--seed", "7")
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_env_seed(capsys, monkeypatch):
    monkeypatch.setenv("HRK_SEED", "123")
    _, out, _ = run(capsys, "compute", "--rep", "std(sp(1))")
    assert json.loads(out)["seeds"] == [123, 124, 125]
    monkeypatch.setenv("HRK_SEED", "abc")
    assert run(capsys, "compute", "--rep", "std(sp(1))")[0] == 2


@pytest.mark.parametrize("argv", [
    ("compute", "--rep", "std(so(3)"),
    ("compute", "--rep", "wedge(5, std(su(3)))"),
    ("compute", "--rep", "spinrep(9)"),
    ("compute", "--rep", "std(sp(1))", "--samples", "0"),
    ("survey", "--n", "9"),
    ("verify-theorem", "--n", "1"),
])
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("hrk: error:")


def test_argparse_errors_exit_two():
    with pytest.raises(SystemExit) as info:
        cli.main(["compute"])
    assert info.value.code == 2


def test_genericity_exit(capsys, monkeypatch):
    def boom(*a, **k):
        raise GenericityError("principal isotropy dimension", [3, 4, 5])

    monkeypatch.setattr(cli, "hrk_projective", boom)
    code, _, err = run(capsys, "compute", "--rep", "std(sp(1))")
    assert code == 3 and "genericity" in err


def test_verify_pass(capsys):
    code, out, err = run(capsys, "verify-theorem", "--n", "3")
    assert code == 0
    rows = json.loads(out)
    assert any(r["verdict"] == catalog.UNSUPPORTED for r in rows)
    assert re.fullmatch(r"\d+ cases verified, \d+ unsupported(, \d+ failing the dimension condition)?",
                        err.strip())


def test_verify_fail_names_case(capsys, monkeypatch):
    real = catalog.exclusions

    def wrong(n):
        return real(n) + [Exclusion(catalog.on_h(catalog.classical_group("u", n)), hrk=-1)]

    monkeypatch.setattr(catalog, "exclusions", wrong)
    code, out, err = run(capsys, "verify-theorem", "--n", "3", "--format", "table")
    assert code == 1
    assert "FAIL U(3) (exclusion)" in err


def test_survey_table_and_out(capsys, tmp_path):
    path = tmp_path / "s.json"
    code, out, _ = run(capsys, "survey", "--n", "2", "--out", str(path))
    assert code == 0 and out == ""
    rows = json.loads(path.read_text())
    assert rows[0]["chain"] == "Sp(2)"
    code, out, _ = run(capsys, "survey", "--n", "2", "--format", "table")
    assert "verified-hrk(0)" in out


def test_tables(capsys):
    code, out, _ = run(capsys, "tables", "--family", "sp", "--n", "3")
    rows = json.loads(out)
    assert code == 0
    assert {r["row"] for r in rows} >= {"U(3)", "Sp(2)xSp(1)", "SO(3)(x)Sp(1)"}
