import json
import subprocess
import sys

import pytest

from wpscheck.cli import main, parse_seeds
from wpscheck.core import SparsePoly, WeightSystem
from wpscheck.report import analyze, render_text


def run(argv, capsys):
    code = main(argv)
    return code, capsys.readouterr().out


def test_parse_seeds():
    assert parse_seeds("0..3") == [0, 1, 2, 3]
    assert parse_seeds("5,7") == [5, 7]


def test_analyze_x8(capsys):
    code, out = run(["analyze", "--weights", "1,1,2,2,2", "--degree", "8", "--seeds", "0..2"], capsys)
    assert code == 0
    rep = json.loads(out)
    assert rep["schema_version"] == 1
    assert rep["singular_curves"][0]["genus"] == 3
    assert (rep["moduli"], rep["h21_Y"], rep["euler_expected"]) == (83, 86, -168)
    assert rep["intersection"]["nef_criterion"]["holds"] is True
    assert rep["intersection"]["euler_number"] == -168
    assert rep["singular_curves"][0]["quasi_smooth_probe"] is True


def test_analyze_x14_has_no_intersection_block(capsys):
    code, out = run(["analyze", "--preset", "x14", "--seeds", "0..1"], capsys)
    rep = json.loads(out)
    assert code == 0
    assert (rep["singular_curves"][0]["genus"], rep["moduli"], rep["h21_Y"]) == (15, 107, 122)
    assert rep["intersection"] is None
    assert rep["automorphism"]["forced_involution"] == 4


def test_analyze_quintic():
    rep = analyze((1, 1, 1, 1, 1), 5, seeds=[0])
    assert rep.singular_curves == [] and rep.moduli == 101 and rep.h11_Y == 1
    assert rep.consistent


def test_report_is_byte_stable(capsys):
    argv = ["analyze", "--preset", "x12", "--seeds", "0..1"]
    _, first = run(argv, capsys)
    _, second = run(argv, capsys)
    assert first == second


def test_text_format(capsys):
    code, out = run(["analyze", "--preset", "x8", "--seeds", "0", "--format", "text"], capsys)
    assert code == 0
    assert "genus 3" in out and "[ok] euler_contract" in out


@pytest.mark.filterwarnings("ignore::wpscheck.strata.FlopCountWarning")
def test_unsupported_singularity_exit_code(capsys):
    code, out = run(["analyze", "--weights", "1,1,3,3,3", "--degree", "9", "--seeds", "0"], capsys)
    assert code == 3
    rep = json.loads(out)
    assert rep["error"].startswith("unsupported singularity")
    assert rep["moduli"] is not None


@pytest.mark.parametrize(
    "argv",
    [["analyze", "--weights", "1,a", "--degree", "4"], ["analyze", "--weights", "1,1"], ["nef", "--preset", "x14"]],
)
def test_parse_errors_exit_2(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_nef_command(capsys):
    code, out = run(["nef", "--preset", "x12"], capsys)
    block = json.loads(out)
    assert code == 0
    assert block["cubic_form"] == [4, 2, 0, 0]
    assert block["nef_criterion"]["holds"] is True


def test_aut_command_serializes_member(capsys):
    code, out = run(["aut", "--preset", "x12", "--seed", "3"], capsys)
    payload = json.loads(out)
    assert code == 0
    assert payload["stabilizer_dim"] == 1 and payload["involution_check"] is True
    w = WeightSystem((1, 1, 2, 2, 6))
    member = SparsePoly.from_json(w, payload["member"])
    assert len(member) == 171 and member.is_homogeneous(12)
    assert all("/" in t["coeff"] for t in payload["member"])
    completed = SparsePoly.from_json(w, payload["square_completed"])
    assert all(e[4] != 1 for e in completed.terms)


def test_out_file(tmp_path, capsys):
    path = tmp_path / "x8.json"
    code, out = run(["analyze", "--preset", "x8", "--seeds", "0", "--out", str(path)], capsys)
    assert code == 0 and out == ""
    assert json.loads(path.read_text())["degree"] == 8


def test_inconsistency_exit_code(monkeypatch, capsys):
    import wpscheck.cli as cli

    def broken(*args, **kwargs):
        rep = analyze((1, 1, 2, 2, 2), 8, seeds=[0])
        rep.consistency["euler_contract"] = False
        return rep

    monkeypatch.setattr(cli, "analyze", broken)
    code, _ = run(["analyze", "--preset", "x8"], capsys)
    assert code == 4


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "wpscheck", "nef", "--preset", "x8", "--format", "text"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert "criterion holds: True" in proc.stdout


@pytest.mark.filterwarnings("ignore::wpscheck.strata.FlopCountWarning")
def test_render_text_on_partial_report():
    rep = analyze((1, 1, 3, 3, 3), 9, seeds=[0])
    assert "ERROR" in render_text(rep)
