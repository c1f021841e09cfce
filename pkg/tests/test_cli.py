from __future__ import annotations

import json
import subprocess
import sys

import pytest

from stabcodes.cli import main
from stabcodes.formats import parse_check_matrix
from stabcodes.gf2 import BitMatrix
from stabcodes.reed_muller import rm_generator

from .conftest import FIVE_QUBIT, K1_VECTORS


@pytest.fixture
def five_file(tmp_path):
    path = tmp_path / "five.txt"
    path.write_text("\n".join(FIVE_QUBIT) + "\n")
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_check(capsys, five_file):
    code, rep = run_json(capsys, "check", "--in", five_file)
    assert code == 0
    assert rep["commutative"] and rep["rank"] == 4 and rep["k"] == 1


def test_mindist(capsys, five_file):
    code, rep = run_json(capsys, "mindist", "--in", five_file, "--method", "collision")
    assert code == 0 and rep["d"] == 3 and not rep["truncated"]


def test_mindist_truncation_is_reported(capsys, five_file):
    code, rep = run_json(capsys, "mindist", "--in", five_file, "--cap", "4", "--method", "collision")
    assert code == 0 and rep["truncated"] and rep["d_lower"] <= 3


def test_decode_default_sphere(capsys, five_file):
    code, rep = run_json(capsys, "decode", "--in", five_file, "--syndrome", "1000")
    assert code == 0
    assert rep["status"] == "corrected" and rep["error"] == "IXIII" and rep["table_size"] == 16


def test_decode_collision_is_a_contract_error(capsys, five_file):
    code, rep = run_json(capsys, "decode", "--in", five_file, "--syndrome", "1000", "--t-star", "1")
    assert code == 1 and rep["kind"] == "SyndromeCollisionError"


def test_decode_wrong_width(capsys, five_file):
    code, rep = run_json(capsys, "decode", "--in", five_file, "--syndrome", "10")
    assert code == 1 and "error" in rep


def test_bad_matrix_file_exits_one(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("10|01\n# ok\n10|1\n")
    code, rep = run_json(capsys, "check", "--in", str(path))
    assert code == 1
    assert rep["kind"] == "MatrixFormatError" and ":3:" in rep["error"]


def test_usage_error_exits_two(capsys):
    with pytest.raises(SystemExit) as err:
        main(["rm", "--r", "one", "--m", "3"])
    assert err.value.code == 2


def test_construction_error_exits_one(capsys, tmp_path):
    a = tmp_path / "a.txt"
    a.write_text("11\n")
    b = tmp_path / "b.txt"
    b.write_text("10\n")
    code, rep = run_json(capsys, "construct", "c1", "--in", str(a), str(b))
    assert code == 1 and rep["kind"] == "orthogonality"


def test_construct_css_and_out_file(capsys, tmp_path):
    h = tmp_path / "ham.txt"
    h.write_text("1010101\n0110011\n0001111\n")
    out = tmp_path / "steane.json"
    code, _ = run(capsys, "construct", "css", "--in", str(h), str(h), "--distance", "--out", str(out))
    assert code == 0
    rep = json.loads(out.read_text())
    assert rep["params"] == "[[7,1,3]]"
    # the report's check matrix parses back
    h_back = parse_check_matrix("\n".join(rep["h"]))
    assert h_back.n == 7 and h_back.r == 6


def test_construct_enlarged(capsys, tmp_path):
    g = rm_generator(2, 3)
    parts = {
        "g1": g.select_rows(range(4)),
        "g3": g.select_rows(range(4, 7)),
        "h2": g.select_rows(range(1)),
        "h3": g.select_rows(range(1, 4)),
        "p": BitMatrix.from_strings(["010", "001", "110"]),
    }
    files = []
    for name, m in parts.items():
        path = tmp_path / f"{name}.txt"
        path.write_text("\n".join(m.to_strings()) + "\n")
        files.append(str(path))
    code, rep = run_json(capsys, "construct", "enlarged", "--in", *files, "--distance")
    assert code == 0 and rep["params"] == "[[8,3,3]]"


def test_rm_and_permuted_rm(capsys):
    code, rep = run_json(capsys, "rm", "--r", "1", "--m", "3", "--perm", "tq", "--distance")
    assert code == 0 and rep["params"] == "[[8,3,3]]"
    code, rep = run_json(capsys, "rm", "--r", "1", "--m", "3", "--perm", "t")
    assert code == 1 and "10" in rep["kind"]


def test_rm_conjecture_rows(capsys):
    code, rep = run_json(capsys, "rm-conjecture", "--mmax", "4")
    assert code == 0
    tq13 = next(r for r in rep["rows"] if (r["r"], r["m"], r["perm"]) == (1, 3, "TQ"))
    assert tq13["all"]


def test_circulant_and_search(capsys):
    code, rep = run_json(capsys, "circulant", "--n", "5", "--g1", "11000", "--g2", "00101", "--distance")
    assert code == 0 and rep["params"] == "[[5,1,3]]"
    code, rep = run_json(capsys, "circulant-search", "--n", "5", "--k", "1")
    assert code == 0 and rep["d"] == 3


def test_qr_and_k1(capsys):
    code, rep = run_json(capsys, "qr", "--p", "7", "--variant", "css", "--distance")
    assert code == 0 and rep["params"] == "[[7,1,3]]"
    code, rep = run_json(capsys, "qr", "--p", "29", "--variant", "circulant", "--distance")
    assert code == 1 and "--long" in rep["error"]
    code, rep = run_json(capsys, "k1", "--a", K1_VECTORS[0], "--distance")
    assert code == 0 and rep["params"] == "[[17,1,7]]"


def test_bounds_csv(capsys):
    code, out = run(capsys, "bounds", "--names", "gv-css,plotkin-thm2", "--grid", "3")
    assert code == 0
    assert out.splitlines()[0] == "delta,gv-css,plotkin-thm2"
    code, rep = run_json(capsys, "bounds", "--names", "nope")
    assert code == 1


def test_search_perm(capsys, tmp_path):
    path = tmp_path / "hp.txt"
    path.write_text("1|0\n0|1\n")
    code, rep = run_json(capsys, "search-perm", "--in", str(path))
    assert code == 0 and rep["status"] == "none-exists"


def test_tables_one(capsys):
    code, rep = run_json(capsys, "tables", "1")
    assert code == 0
    assert rep["summary"] == {"matched": 8, "mismatch": 2, "skipped-budget": 0}


def test_reports_are_deterministic(capsys):
    argv = ["circulant-search", "--n", "6", "--k", "2", "--seed", "3"]
    assert run(capsys, *argv) == run(capsys, *argv)
    _, rep = run_json(capsys, *argv)
    assert rep["seed"] == 3 and rep["schema"] == 1


def test_console_entry_point(five_file):
    proc = subprocess.run(
        [sys.executable, "-m", "stabcodes.cli", "check", "--in", five_file], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["k"] == 1
