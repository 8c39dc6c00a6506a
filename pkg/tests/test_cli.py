import json

import pytest

from conftest import SD8_PAIR
from drgforge.cayley import build_sd
from drgforge.classify import classify
from drgforge.cli import main
from drgforge.drg import check_distance_regular, intersection_matrix_spectrum
from drgforge.search import search_hadamard_pairs


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--output", "json")
    return code, json.loads(out)


def test_verify_matches_library(capsys):
    code, js = run_json(
        capsys, "verify", "--family", "sd", "--n", "8",
        "--R", "5,7,9,11", "--T", "4,8,10,14",
    )
    assert code == 0
    report = check_distance_regular(build_sd(8, *SD8_PAIR))
    assert js["isDRG"] is True
    assert js["array"] == report.array.to_json()
    assert js["array"]["rendered"] == "{8,7,4,1;1,4,7,8}"
    assert js["bipartite"] and js["antipodal"] and js["antipodalIndex"] == 2
    assert js["diameter"] == 4


def test_classify_matches_library(capsys):
    code, js = run_json(
        capsys, "classify", "--family", "sd", "--n", "8",
        "--R", "5,7,9,11", "--T", "4,8,10,14",
    )
    assert code == 0
    assert js == classify("sd", 8, *SD8_PAIR).to_json()


def test_spectrum_matches_library(capsys):
    code, js = run_json(
        capsys, "spectrum", "--family", "sd", "--n", "8",
        "--R", "5,7,9,11", "--T", "4,8,10,14",
    )
    assert code == 0
    report = check_distance_regular(build_sd(8, *SD8_PAIR))
    spec = intersection_matrix_spectrum(report.array, 32)
    assert js["spectrum"]["multiplicities"] == spec.multiplicities


def test_search_matches_library_and_is_stable(capsys):
    code, js1 = run_json(
        capsys, "search-hadamard", "--family", "sd", "--n", "8",
    )
    assert code == 0
    result = search_hadamard_pairs("sd", 8)
    assert js1["pairCount"] == len(result.pairs)
    assert "elapsedMs" not in js1  # timing kept out of the stable schema
    code, js2 = run_json(
        capsys, "search-hadamard", "--family", "sd", "--n", "8",
        "--threads", "3",
    )
    assert js1 == js2


def test_quotient_and_halve(capsys):
    code, js = run_json(
        capsys, "quotient", "--family", "sd", "--n", "8",
        "--R", "5,7,9,11", "--T", "4,8,10,14",
    )
    assert code == 0 and js["order"] == 16 and js["isDRG"]
    code, js = run_json(
        capsys, "halve", "--family", "sd", "--n", "8",
        "--R", "5,7,9,11", "--T", "4,8,10,14",
    )
    assert code == 0 and js["order"] == 16 and js["isDRG"]


def test_search_ds(capsys):
    code, js = run_json(
        capsys, "search-ds", "--family", "cyclic", "--n", "7", "--k", "3",
    )
    assert code == 0
    assert js["count"] == 2
    assert [0, 1, 3] in js["sets"]


def test_validation_exit_code_and_diagnostic(capsys):
    code, out, err = run(
        capsys, "verify", "--family", "sd", "--n", "8",
        "--R", "1,2", "--T", "",
    )
    assert code == 2
    assert "inverse-closed" in err or "closure" in err


def test_empty_search_exits_zero(capsys):
    code, js = run_json(
        capsys, "search-hadamard", "--family", "sd", "--n", "16",
    )
    assert code == 0 and js["pairCount"] == 0


def test_not_drg_exits_zero(capsys):
    code, js = run_json(
        capsys, "verify", "--family", "sd", "--n", "8",
        "--R", "1,15", "--T", "0",
    )
    assert code == 0


def test_bad_residue_list(capsys):
    code, out, err = run(
        capsys, "verify", "--family", "sd", "--n", "8",
        "--R", "1,x", "--T", "",
    )
    assert code == 2


def test_text_output(capsys):
    code, out, err = run(
        capsys, "verify", "--family", "sd", "--n", "8",
        "--R", "5,7,9,11", "--T", "4,8,10,14",
    )
    assert code == 0
    assert "isDRG: True" in out
    assert "{8,7,4,1;1,4,7,8}" in out


def test_selfcheck(capsys):
    code, out, err = run(capsys, "selfcheck")
    assert code == 0
    assert "FAIL" not in out
    assert out.count("PASS") >= 5
