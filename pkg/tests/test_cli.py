import subprocess
import sys

import pytest

from tcring.cli import main

S2 = "ring S2\ncoeff Z\ndim 2\nbasis v:2\nmul v*v = 0\n"
POINT = "ring pt\ncoeff Q\ndim 0\n"


@pytest.fixture
def s2(tmp_path):
    p = tmp_path / "s2.ring"
    p.write_text(S2)
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def tsv(out):
    return dict(line.split("\t", 1) for line in out.splitlines())


def test_tc_bound_tsv(capsys, s2):
    code, out, _ = run(capsys, "--format", "tsv", "tc-bound", s2)
    assert code == 0
    fields = tsv(out)
    assert fields["ring"] == "S2"
    assert fields["coeff"] == "Z"
    assert fields["zcl"] == fields["tc_lower_bound"] == "3"
    assert fields["witness_factors"] == "v,v"
    assert fields["witness_product"] == "-2*v⊗v"


def test_tc_bound_after_base_change(capsys, s2):
    code, out, _ = run(capsys, "tc-bound", s2, "--coeff", "F_2", "--format", "tsv")
    assert code == 0
    assert tsv(out)["zcl"] == "2"


def test_text_format(capsys, s2):
    code, out, _ = run(capsys, "zcl", s2, "--witness")
    assert code == 0
    assert out.splitlines()[2] == "zcl 3"


def test_zcl_without_witness_exits_one(capsys, tmp_path):
    p = tmp_path / "pt.ring"
    p.write_text(POINT)
    code, out, err = run(capsys, "zcl", str(p), "--witness")
    assert code == 1
    assert "zcl 1" in out
    assert "no witness" in err


def test_input_errors_exit_two(capsys, tmp_path):
    bad = tmp_path / "bad.ring"
    bad.write_text("ring X\ncoeff Z\nbasis u:1 v:1 g:2\nmul u*v = g\nmul v*u = g\n")
    code, out, err = run(capsys, "validate", str(bad))
    assert code == 2 and out == "" and "v*u" in err
    code, _, err = run(capsys, "info", str(tmp_path / "missing.ring"))
    assert code == 2 and "cannot read" in err
    bad.write_text("ring X\ncoeff Z\nbasis u:1\nmul u*w = 0\n")
    code, _, err = run(capsys, "zcl", str(bad))
    assert code == 2 and "line 4" in err


def test_info_reports_duality(capsys, s2):
    code, out, _ = run(capsys, "info", s2)
    assert code == 0
    assert "poincare_duality yes" in out.splitlines()


def test_cuplength(capsys, s2):
    code, out, _ = run(capsys, "--format", "tsv", "cuplength", s2)
    assert tsv(out)["cat_lower_bound"] == "2"


def test_catalog_show_then_classify(capsys, tmp_path):
    code, out, _ = run(capsys, "catalog", "show", "Wu")
    assert code == 0
    p = tmp_path / "wu.mf"
    p.write_text(out)
    code, out, _ = run(capsys, "classify", str(p), "--format", "tsv")
    assert code == 0
    assert tsv(out)["verdict"] == "Alternative3(2)"
    code, out, _ = run(capsys, "validate", str(p))
    assert code == 0 and "valid yes" in out


def test_classify_excluded_prints_witness(capsys, tmp_path):
    code, out, _ = run(capsys, "catalog", "show", "S2xS2")
    p = tmp_path / "s2s2.mf"
    p.write_text(out)
    code, out, _ = run(capsys, "--format", "tsv", "classify", str(p))
    fields = tsv(out)
    assert fields["verdict"] == "Excluded" and fields["tc_floor"] == "4"
    assert len(fields["witness_factors"].split(",")) == 3


def test_catalog_show_unknown(capsys):
    code, _, err = run(capsys, "catalog", "show", "CP2")
    assert code == 2 and "CP2" in err


def test_catalog_list(capsys):
    code, out, _ = run(capsys, "catalog", "list")
    assert code == 0
    assert out.splitlines()[0].startswith("S1 dim=1")


def test_catalog_check(capsys):
    code, out, _ = run(capsys, "catalog", "check", "--format", "tsv")
    assert code == 0
    assert all(line.endswith("\tPASS") for line in out.splitlines())


def test_module_entry_point_is_byte_stable(s2):
    cmd = [sys.executable, "-m", "tcring", "--format", "tsv", "tc-bound", s2]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first
