import json
from fractions import Fraction as F

from hyperorb import assembler
from hyperorb.ages import sector_age
from hyperorb.cli import main

N3_PLUS = "hyp(g=2) N=3 k=2 a=0 chi={1,2} mod 3 lambda=+1"


def run_json(capsys, *argv):
    code = main(list(argv) + ["--format", "json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_sectors_hyp(capsys):
    code, data = run_json(capsys, "sectors", "--g", "2")
    assert code == 0
    assert data["count"] == 18 and len(data["sectors"]) == 18


def test_sectors_m0n(capsys):
    code, data = run_json(capsys, "sectors", "--stack", "m0n", "--n", "6")
    assert code == 0 and data["count"] == 9


def test_genus_one_is_a_usage_error(capsys):
    assert main(["sectors", "--g", "1"]) == 2
    assert "usage error" in capsys.readouterr().err


def test_argparse_errors_exit_two(capsys):
    assert main(["plot", "--g", "2"]) == 2
    assert main(["poincare", "--format", "xml", "--g", "2"]) == 2


def test_poincare_paper_text(capsys):
    assert main(["poincare", "--g", "2"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == (
        "P_orb(H_2) mode=paper: 2 + q^(1/2) + q + q^(3/2) + q^2 + 2*q^(12/5) + q^(5/2)"
        " + 2*q^(14/5) + 4*q^3 + 2*q^(16/5) + 2*q^(18/5) + 2*q^4 + 2*q^5"
    )
    assert "total dimension: 23" in out


def test_poincare_first_principles_complex(capsys):
    code, data = run_json(capsys, "poincare", "--g", "2", "--mode", "fp", "--grading", "complex")
    assert code == 0
    assert data["polynomial"][1]["exp"] == {"num": 1, "den": 2}
    assert data["total"] == 23


def test_poincare_constant_term_genus_three(capsys):
    code, data = run_json(capsys, "poincare", "--g", "3")
    assert data["polynomial"][0] == {"exp": {"num": 0, "den": 1}, "coeff": 2}


def test_stringy_genus_three(capsys):
    code, data = run_json(capsys, "stringy", "--g", "3")
    assert code == 0 and data["total"] == 28


def test_corollary(capsys):
    code, data = run_json(capsys, "corollary", "--g", "2")
    assert (data["literal"], data["clamped"], data["reference"]) == (7, 15, 23)


def test_reconcile_records_corollary_gap(capsys):
    code, data = run_json(capsys, "reconcile", "--g", "2")
    assert code == 0
    assert data["totals"] == {"paper_total": 23, "fp_total": 23, "corollary_literal": 7,
                              "corollary_clamped": 15, "corollary_gap": 16}
    assert data["corollary_informational"] is True


def test_summary_range_is_a_list(capsys):
    code, data = run_json(capsys, "summary", "--g", "2..4")
    assert code == 0
    assert [d["g"] for d in data] == [2, 3, 4]


def test_verify_small(capsys):
    assert main(["verify", "--g-max", "2"]) == 0
    assert "all laws hold for g=2..2" in capsys.readouterr().out


def test_verify_catches_tampered_age(capsys, monkeypatch):
    def tampered(sector):
        age = sector_age(sector)
        return age + F(1, 3) if sector.g == 2 and sector.N == 3 and sector.lam == 1 else age

    monkeypatch.setattr(assembler, "sector_age", tampered)
    assert main(["verify", "--g-max", "4"]) == 1
    captured = capsys.readouterr()
    assert N3_PLUS in captured.err
    assert N3_PLUS in captured.out


def test_reconcile_failure_exits_one(capsys, monkeypatch):
    def tampered(sector):
        age = sector_age(sector)
        return age + F(1, 3) if sector.N == 3 and sector.lam == 1 else age

    monkeypatch.setattr(assembler, "sector_age", tampered)
    assert main(["reconcile", "--g", "2"]) == 1
    assert N3_PLUS in capsys.readouterr().err


def test_output_identical_across_workers(capsys):
    outputs = []
    for workers in ("1", "2"):
        assert main(["poincare", "--g", "2..6", "--mode", "fp", "--format", "json", "--workers", workers]) == 0
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]
    assert main(["poincare", "--g", "2..6", "--mode", "fp", "--format", "json"]) == 0
    assert capsys.readouterr().out == outputs[0]


def test_out_directory(tmp_path, capsys):
    assert main(["poincare", "--g", "2", "--format", "csv", "--out", str(tmp_path)]) == 0
    written = tmp_path / "poincare_g2.csv"
    assert written.exists()
    assert written.read_text(encoding="utf-8").startswith("polynomial,exponent,coeff\n")
    assert capsys.readouterr().out == ""


def test_latex_output(capsys):
    assert main(["poincare", "--g", "2", "--format", "latex"]) == 0
    assert "q^{\\frac{12}{5}}" in capsys.readouterr().out


def test_config_file_with_override(tmp_path, capsys):
    path = tmp_path / "run.yaml"
    path.write_text("mode: fp\ngrading: complex\nformat_unused: 1\n", encoding="utf-8")
    assert main(["poincare", "--g", "2", "--config", str(path)]) == 2
    path.write_text("mode: fp\ngrading: complex\n", encoding="utf-8")
    capsys.readouterr()
    code, data = run_json(capsys, "poincare", "--g", "2", "--config", str(path), "--grading", "real")
    assert code == 0
    assert (data["mode"], data["grading"]) == ("fp", "real")


def test_config_file_with_mistyped_values_exits_two(tmp_path, capsys):
    path = tmp_path / "run.yaml"
    path.write_text("workers: two\n", encoding="utf-8")
    assert main(["verify", "--config", str(path)]) == 2
    assert "workers" in capsys.readouterr().err
    path.write_text("g_max: \"3\"\n", encoding="utf-8")
    assert main(["verify", "--config", str(path)]) == 0
