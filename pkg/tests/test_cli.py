"""End-to-end tests for the command line: every command and flag, the three
exit codes, and byte-level determinism of the documents."""

import json
import subprocess
import sys

import pytest

from polarwords.cli import main
from polarwords.verify import CheckResult


def run_cli(capsys, *argv):
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


# ------------------------------------------------------------- scalars


def test_g_text(capsys):
    assert run_cli(capsys, "g", "5") == (0, "187\n", "")


def test_g_csv(capsys):
    assert run_cli(capsys, "g", "5", "--format", "csv") == (0, "5,187\n", "")


def test_g_json(capsys):
    status, out, _ = run_cli(capsys, "g", "5", "--format", "json")
    assert status == 0
    assert json.loads(out) == {"g": 187, "n": 5}


def test_count_words(capsys):
    assert run_cli(capsys, "count-words", "12")[:2] == (0, "2798251\n")


def test_udim(capsys):
    assert run_cli(capsys, "udim", "2") == (0, "5\n", "")


# --------------------------------------------------------- enumerations


def test_enumerate_words_case_filter(capsys):
    assert run_cli(capsys, "enumerate-words", "3", "--case", "7") == (0, "122\n233\n", "")


def test_enumerate_words_csv(capsys):
    status, out, _ = run_cli(capsys, "enumerate-words", "2", "--format", "csv")
    assert status == 0
    assert out == "11,1\n12,2\n21,1\n22,7\n23,2\n"


def test_enumerate_words_json(capsys):
    status, out, _ = run_cli(capsys, "enumerate-words", "1", "--format", "json")
    assert json.loads(out) == {
        "n": 1,
        "words": [{"case": 1, "word": "1"}, {"case": 2, "word": "2"}],
    }


def test_enumerate_subspaces_text(capsys):
    status, out, _ = run_cli(capsys, "enumerate-subspaces", "2")
    assert status == 0
    assert out == ",0,1,\n01,1,2,\n10,1,1,\n11,1,7,\n10;01,2,2,\n"


def test_enumerate_subspaces_case_filter_json(capsys):
    status, out, _ = run_cli(capsys, "enumerate-subspaces", "3", "--case", "7", "--format", "json")
    doc = json.loads(out)
    assert doc["n"] == 3
    assert doc["subspaces"] == [
        {"basis": "011", "case": 7, "dim": 1, "subcase": None},
        {"basis": "100;011", "case": 7, "dim": 2, "subcase": "a"},
    ]


def test_empty_enumeration_still_ends_with_newline(capsys):
    status, out, _ = run_cli(capsys, "enumerate-words", "3", "--case", "6")
    assert status == 0
    assert out == "\n"


# ------------------------------------------------------ strata and table


def test_strata_text(capsys):
    assert run_cli(capsys, "strata", "2", "0") == (0, "0,1,1\n1,6,3\n2,8,1\n", "")


def test_strata_json_structure(capsys):
    status, out, _ = run_cli(capsys, "strata", "2", "3", "--format", "json")
    doc = json.loads(out)
    assert doc["base"] == 3 and doc["n"] == 2
    assert [len(s) for s in doc["strata"]] == [1, 6, 8]
    assert [len(c) for c in doc["components"]] == [1, 3, 1]


def test_strata_bad_base_is_usage_error(capsys):
    status, out, err = run_cli(capsys, "strata", "2", "99")
    assert status == 2
    assert "out of range" in err


def test_bijection_table(capsys):
    status, out, _ = run_cli(capsys, "bijection", "2")
    assert status == 0
    assert out == "11,1,\n12,2,01\n21,1,10\n22,7,11\n23,2,10;01\n"


def test_bijection_table_json(capsys):
    status, out, _ = run_cli(capsys, "bijection", "1", "--format", "json")
    assert json.loads(out) == {
        "n": 1,
        "table": [
            {"case": 1, "subspace": "", "word": "1"},
            {"case": 2, "subspace": "1", "word": "2"},
        ],
    }


def test_bijection_verify(capsys):
    status, out, _ = run_cli(capsys, "bijection", "3", "--verify")
    assert status == 0
    assert out.splitlines()[0] == "n 3: 15 words, 15 subspaces, 15 matched"
    assert out.splitlines()[1] == "classes: 5, 5, 1, 1, 1, 0, 2"


def test_bijection_verify_json(capsys):
    status, out, _ = run_cli(capsys, "bijection", "4", "--verify", "--format", "json")
    doc = json.loads(out)
    assert status == 0
    assert doc["matched"] == doc["words"] == doc["subspaces"] == 51
    assert doc["case_counts"] == [15, 15, 5, 5, 5, 2, 4]
    assert doc["failures"] == []


def test_bijection_verify_has_no_csv(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bijection", "3", "--verify", "--format", "csv"])
    assert exc.value.code == 2


# ----------------------------------------------------------------- export


def test_export_default_is_json(capsys):
    status, out, _ = run_cli(capsys, "export-incidence", "2")
    doc = json.loads(out)
    assert len(doc["points"]) == 15 and len(doc["lines"]) == 15
    # canonical form: sorted keys, indent 2, trailing newline
    assert out == json.dumps(doc, sort_keys=True, indent=2) + "\n"


def test_export_csv(capsys):
    assert run_cli(capsys, "export-incidence", "1", "--format", "csv") == (0, "0,0,1,2\n", "")


def test_export_dot_is_wellformed(capsys):
    status, out, _ = run_cli(capsys, "export-incidence", "1", "--format", "dot")
    assert status == 0
    assert out.startswith("graph polar_rank_1 {\n") and out.endswith("}\n")
    assert out.count(" -- ") == 3


# ------------------------------------------------------------ exit codes


def test_guard_violations_exit_three(capsys):
    status, out, err = run_cli(capsys, "udim", "9")
    assert (status, out) == (3, "")
    assert "guard refused" in err and "build_geometry" in err
    assert run_cli(capsys, "enumerate-words", "40")[0] == 3
    assert run_cli(capsys, "bijection", "8")[0] == 3


@pytest.mark.parametrize(
    "argv",
    [
        ["g"],                                  # missing n
        ["g", "abc"],                           # non-integer n
        ["nosuchcommand", "3"],                 # unknown command
        ["enumerate-words", "3", "--case", "9"],
        ["export-incidence", "2", "--format", "text"],
        ["g", "5", "--threads", "0"],
    ],
)
def test_usage_errors_exit_two(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_failing_verification_exits_one(capsys, monkeypatch):
    import polarwords.cli as cli

    def fake_run_all(fast=False):
        return (CheckResult("g-sequence", False, "forced failure for the test"),)

    monkeypatch.setattr(cli, "run_all", fake_run_all)
    status, out, _ = run_cli(capsys, "verify-all")
    assert status == 1
    assert out.startswith("FAIL g-sequence")


# ---------------------------------------------------------- determinism


def test_verify_all_fast_passes(capsys):
    status, out, _ = run_cli(capsys, "verify-all", "--fast")
    assert status == 0
    lines = out.splitlines()
    assert len(lines) == 9
    assert all(line.startswith("PASS ") for line in lines)
    assert lines[0].startswith("PASS g-sequence")


def test_thread_count_never_changes_bytes(capsys):
    runs = []
    for k in ("1", "4"):
        status, out, _ = run_cli(capsys, "export-incidence", "2", "--threads", k)
        assert status == 0
        runs.append(out)
    assert runs[0] == runs[1]


def test_out_flag_writes_the_document(tmp_path, capsys):
    target = tmp_path / "words.txt"
    status, out, _ = run_cli(capsys, "enumerate-words", "2", "--out", str(target))
    assert status == 0
    assert out == ""
    assert target.read_text() == "11\n12\n21\n22\n23\n"


@pytest.mark.parametrize(
    "argv,name",
    [
        (["strata", "2", "0"], "strata.png"),
        (["bijection", "3", "--verify"], "classes.png"),
        (["bijection", "3"], "table_classes.png"),
        (["export-incidence", "1"], "incidence.png"),
    ],
)
def test_figure_flag_renders_a_file(tmp_path, capsys, argv, name):
    target = tmp_path / name
    status, _, _ = run_cli(capsys, *argv, "--figure", str(target))
    assert status == 0
    assert target.stat().st_size > 0


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "polarwords", "g", "5"],
        capture_output=True,
        text=True,
        timeout=60,
    )
    assert proc.returncode == 0
    assert proc.stdout == "187\n"
