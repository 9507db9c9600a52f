"""Command-line interface behaviour and exit codes."""

from collections import Counter

from plexcount.cli import main
from plexcount.cycle_index import cycle_index_subset_action, cycle_index_symmetric
from plexcount.golden import load_golden
from plexcount.render import parse_structured


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_count_command(capsys):
    code, out = run(capsys, "count", "--p", "8", "--n", "1")
    assert code == 0
    assert out == "12346\n"


def test_count_command_big_value(capsys):
    code, out = run(capsys, "count", "--p", "9", "--n", "3")
    assert code == 0
    assert out == "234431745534048922731115555415680\n"


def test_poly_command(capsys):
    code, out = run(capsys, "poly", "--p", "4", "--n", "1")
    assert code == 0
    assert out.splitlines() == [
        "p=4 n=1 degree=6",
        "0: 1", "1: 1", "2: 2", "3: 3", "4: 2", "5: 1", "6: 1",
        "total: 11"]


def test_poly_command_degenerate(capsys):
    code, out = run(capsys, "poly", "--p", "2", "--n", "3")
    assert code == 0
    assert out.splitlines() == ["p=2 n=3 degree=0", "0: 1", "total: 1"]


def test_table_command_matches_reference(capsys):
    code, out = run(capsys, "table")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["p", "n=1", "n=2", "n=3"]
    counts = load_golden().counts
    assert len(lines) == 10
    for line in lines[1:]:
        p, *values = line.split()
        assert [int(v) for v in values] == [counts[(int(p), n)] for n in (1, 2, 3)]


def test_table_command_small(capsys):
    code, out = run(capsys, "table", "--max-p", "1", "--max-n", "1")
    assert code == 0
    assert [line.split() for line in out.splitlines()] == [["p", "n=1"], ["1", "1"]]


def test_cycle_index_plain(capsys):
    code, out = run(capsys, "cycle-index", "--p", "3", "--r", "1")
    assert code == 0
    assert out == "1/6 * (\n    a1^3\n  + 3 a1 a2\n  + 2 a3\n)\n"


def test_cycle_index_latex_contains_published_terms(capsys):
    code, out = run(capsys, "cycle-index", "--p", "6", "--r", "3", "--format", "latex")
    assert code == 0
    for piece in ("a_1^{20}", "15 a_1^8 a_2^6", "45 a_1^4 a_2^8", "80 a_1^2 a_3^6",
                  "120 a_1^2 a_3^2 a_6^2", "15 a_2^{10}", "180 a_2^2 a_4^4",
                  "120 a_2 a_6^3", "144 a_5^4"):
        assert piece in out
    assert out.count("+") == 8


def test_cycle_index_json_like_roundtrip(capsys):
    code, out = run(capsys, "cycle-index", "--p", "7", "--r", "3",
                    "--format", "json-like")
    assert code == 0
    assert parse_structured(out) == cycle_index_subset_action(7, 3)


def test_cycle_index_unmerged_json_like_merges_back(capsys):
    code, out = run(capsys, "cycle-index", "--p", "6", "--r", "3",
                    "--format", "json-like", "--unmerged")
    assert code == 0
    assert parse_structured(out) == cycle_index_subset_action(6, 3)
    assert out.count("\"source\"") == 11


def test_cycle_index_r1_matches_symmetric_group(capsys):
    _, out = run(capsys, "cycle-index", "--p", "5", "--r", "1",
                 "--format", "json-like")
    assert parse_structured(out) == cycle_index_symmetric(5)


def test_cycle_index_complement_same_terms(capsys):
    _, first = run(capsys, "cycle-index", "--p", "7", "--r", "3")
    _, second = run(capsys, "cycle-index", "--p", "7", "--r", "4")
    assert Counter(first.splitlines()[1:-1]) == Counter(second.splitlines()[1:-1])


def test_usage_errors_exit_2(capsys):
    assert main(["count", "--p", "3"]) == 2            # missing --n
    capsys.readouterr()
    assert main(["count", "--p", "0", "--n", "1"]) == 2
    capsys.readouterr()
    assert main(["count", "--p", "3", "--n", "0"]) == 2
    capsys.readouterr()
    assert main(["cycle-index", "--p", "3", "--r", "4"]) == 2
    capsys.readouterr()
    assert main(["cycle-index", "--p", "13", "--r", "2"]) == 2  # over the ceiling
    capsys.readouterr()
    assert main(["table", "--max-p", "13"]) == 2
    capsys.readouterr()
    assert main(["verify", "--scope", "nonsense"]) == 2
    capsys.readouterr()
    assert main(["no-such-command"]) == 2
    capsys.readouterr()


def test_limit_flag_raises_ceiling(capsys):
    code, out = run(capsys, "count", "--p", "13", "--n", "1", "--limit", "13")
    assert code == 0
    assert out.strip().isdigit()


def test_help_exits_0(capsys):
    assert main(["--help"]) == 0
    capsys.readouterr()


def test_verify_table_scope(capsys):
    code, out = run(capsys, "verify", "--scope", "table")
    assert code == 0
    lines = out.splitlines()
    assert lines[-1] == "27/27 checks passed"
    assert all(line.startswith("PASS count p=") for line in lines[:-1])


def test_verify_formulas_scope_reports_misprint(capsys):
    code, out = run(capsys, "verify", "--scope", "formulas")
    assert code == 0
    assert "7/7 checks passed" in out
    assert "PASS formula p=8 r=4: known misprint" in out
    assert "computed 3360 a1^2 a4^2 a6^2 a12^4" in out
    assert "published 3360 a1^2 a4^2 a6^2 (degree 22, expected 70)" in out


def test_verify_oracle_scope(capsys):
    code, out = run(capsys, "verify", "--scope", "oracle")
    assert code == 0
    assert out.splitlines()[-1].endswith("checks passed")
    assert "FAIL" not in out


def test_output_deterministic(capsys):
    for argv in (["cycle-index", "--p", "8", "--r", "3", "--format", "latex"],
                 ["poly", "--p", "6", "--n", "2"],
                 ["table", "--max-p", "7"]):
        _, first = run(capsys, *argv)
        _, second = run(capsys, *argv)
        assert first == second
