import json
import subprocess
import sys

import pytest
from reference import all_pairsets

from cubepaths.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--json")
    doc = json.loads(out)
    assert doc["schema_version"] == 1
    return code, doc


def test_solve_c2(capsys):
    code, doc = run_json(capsys, "solve", "0000-0111,0001-0110,0011-0100", "--engine", "auto")
    assert code == 1
    assert doc["status"] == "unconnectable" and doc["configuration"] == "C2"


def test_solve_connectable_roundtrip(capsys):
    pairs = "0000-0001,0010-0011,0100-1111"
    code, doc = run_json(capsys, "solve", pairs)
    assert code == 0 and doc["status"] == "connectable"
    code, out = run(capsys, "verify", pairs, doc["connector"])
    assert code == 0 and "valid" in out


def test_roundtrip_every_q3_instance(capsys):
    for size in (1, 2):
        for A in all_pairsets(3, size):
            code, doc = run_json(capsys, "solve", A.format(), "--engine", "oracle")
            if code == 0:
                code, out = run(capsys, "verify", A.format(), doc["connector"])
                assert code == 0, out


def test_engines_agree_on_q3_catalogue(capsys):
    for A in all_pairsets(3, 2):
        if A.chi != 0:
            continue
        c1 = main(["solve", A.format(), "--engine", "constructor"])
        c2 = main(["solve", A.format(), "--engine", "oracle"])
        assert c1 == c2
    capsys.readouterr()


def test_unsupported_exit_code(capsys):
    code, doc = run_json(capsys, "solve", "000000-000001,000010-000111,001000-111111", "--engine", "constructor")
    assert doc["status"] in ("unsupported", "unconnectable")
    code, doc = run_json(capsys, "solve", "000011-111011,101100-110011,000000-000001", "--engine", "constructor")
    assert code == 3 and doc["status"] == "unsupported"


def test_budget_exit_code(capsys):
    code, doc = run_json(capsys, "solve", "00000-00001", "--engine", "oracle", "--budget", "2")
    assert code == 3 and doc["status"] == "budget-exhausted"


def test_verify_failure(capsys):
    code, doc = run_json(capsys, "verify", "000-001,010-011", "000,001;010,110,011")
    assert code == 1 and doc["valid"] is False and doc["clause"] == "adjacency"


def test_gray(capsys):
    code, doc = run_json(capsys, "gray", "--from", "0000", "--to", "0001")
    assert code == 0
    assert len(doc["path"]) == 16 and len(doc["transitions"]) == 15
    assert doc["path"][0] == "0000" and doc["path"][-1] == "0001"
    code, doc = run_json(capsys, "gray", "--from", "0000", "--to", "0011")
    assert code == 1 and doc["certificate"] == "parity-obstruction"


def test_dot_output(capsys):
    code, out = run(capsys, "gray", "--from", "000", "--to", "111", "--dot")
    assert code == 0 and out.startswith("graph Q {") and out.count("penwidth") == 7


def test_classify_and_canon(capsys):
    code, doc = run_json(capsys, "classify", "000-001,010-011,100-110")
    assert doc["odd"] and doc["diminishable"] and doc["enc"] == []
    assert doc["separating_coordinate"] is not None
    code, doc = run_json(capsys, "canon", "010-110")
    assert doc["canonical"] == "000-100" or doc["orbit_size"] == 12


def test_census_json(capsys):
    code, doc = run_json(
        capsys, "census", "--n", "3", "--size", "2", "--balanced", "--verdict", "unconnectable",
        "--engine", "both",
    )
    assert code == 0
    assert doc["selected"] == {"verdict": "unconnectable", "classes": 2, "raw": 12}


def test_census_expect_reports_conventions(capsys):
    code, doc = run_json(
        capsys, "census", "--n", "4", "--size", "1-3", "--odd", "--verdict", "unconnectable",
        "--expect", "32",
    )
    assert doc["expected"]["matching_conventions"] == ["raw"]


def test_census_sample_needs_seed(capsys):
    assert main(["census", "--n", "5", "--size", "2", "--odd", "--sample", "5"]) == 2
    code, doc = run_json(
        capsys, "census", "--n", "5", "--size", "2", "--odd", "--sample", "5", "--seed", "1"
    )
    assert doc["counts"] == {"connectable": 5}


def test_usage_errors(capsys):
    assert main(["solve", "00-0"]) == 2
    with pytest.raises(SystemExit) as e:
        main(["solve"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["frobnicate"])
    assert e.value.code == 2


def test_console_script_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "cubepaths.cli", "gray", "--from", "0", "--to", "1"],
        capture_output=True,
        text=True,
    )
    assert out.returncode == 0 and out.stdout.split()[:2] == ["0", "1"]
