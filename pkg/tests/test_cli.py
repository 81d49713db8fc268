import json

import pytest

from degseq.cli import main
from degseq.maximal import MaximalSetReport
from degseq.orders import DegreeSequence
from degseq.realizability import Verdict, erdos_gallai


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCheck:
    def test_constant_method_trace(self, capsys):
        code, out, _ = run(capsys, "check", "5,4,4,3,3,3", "--method", "constant")
        assert code == 0
        assert "graphical: yes" in out
        assert "3,3,3,3,3,3" in out

    def test_certificate_method(self, capsys):
        code, out, _ = run(capsys, "check", "4,4,3,2,1", "--method", "certificate")
        assert code == 1
        assert "graphical: no" in out
        assert "4,4,2,2,2" in out

    def test_certificate_inconclusive(self, capsys):
        code, out, _ = run(capsys, "check", "4,3,3,3,1", "--method", "certificate")
        assert code == 0
        assert "inconclusive" in out

    def test_connected_negative(self, capsys):
        code, out, _ = run(capsys, "check", "2,1,1,1,1", "--connected")
        assert code == 1
        assert "graphical: yes" in out
        assert "c-graphical: no" in out

    def test_connected_positive(self, capsys):
        code, out, _ = run(capsys, "check", "4,3,3,3,1", "--connected")
        assert code == 0
        assert "c-graphical: yes" in out

    def test_hh_trace(self, capsys):
        code, out, _ = run(capsys, "check", "5,4,4,3,3,3", "--method", "hh")
        assert code == 0
        for step in ("3,3,2,2,2", "2,2,1,1", "1,1,0", "0,0"):
            assert step in out

    def test_parse_failure(self, capsys):
        code, _, err = run(capsys, "check", "5,4,x")
        assert code == 2

    def test_json_round_trip(self, capsys):
        code, out, _ = run(capsys, "check", "5,4,4,3,3,3", "--method", "hh", "--json")
        assert code == 0
        verdict = Verdict.from_dict(json.loads(out))
        assert verdict.graphical
        assert verdict.sequence == DegreeSequence((5, 4, 4, 3, 3, 3))

    def test_reorder_note_and_quiet(self, capsys):
        _, _, err = run(capsys, "check", "3,4,3,3,1")
        assert "reordered" in err
        _, _, err = run(capsys, "check", "3,4,3,3,1", "--quiet")
        assert err == ""


class TestRealize:
    def test_connected_realization(self, capsys):
        code, out, _ = run(capsys, "realize", "4,3,3,3,1", "--connected")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "5 7"
        assert len(lines) == 8

    def test_single_edge(self, capsys):
        code, out, _ = run(capsys, "realize", "1,1")
        assert code == 0
        assert out == "2 1\n0 1\n"

    def test_not_graphical_exit(self, capsys):
        code, _, err = run(capsys, "realize", "5,3,3,2,1")
        assert code == 1
        assert "not realizable" in err

    def test_dot_format(self, capsys):
        code, out, _ = run(capsys, "realize", "1,1", "--format", "dot")
        assert code == 0
        assert out.startswith("graph G {")
        assert "0 -- 1;" in out


class TestCompare:
    def test_less(self, capsys):
        code, out, _ = run(capsys, "compare", "4,3,3,3,1", "5,3,3,2,1", "--order", "generalized")
        assert code == 0 and out.strip() == "Less"

    def test_incomparable(self, capsys):
        code, out, _ = run(capsys, "compare", "4,3,3,3,1", "4,4,2,2,2")
        assert code == 0 and out.strip() == "Incomparable"

    def test_equal(self, capsys):
        code, out, _ = run(capsys, "compare", "2,2,1", "2,2,1")
        assert code == 0 and out.strip() == "Equal"

    def test_lorenz_order(self, capsys):
        code, out, _ = run(capsys, "compare", "4,4,4,4,4", "4,4,2,1,1", "--order", "lorenz")
        assert code == 0 and out.strip() == "Less"

    def test_length_mismatch_usage_error(self, capsys):
        code, _, err = run(capsys, "compare", "2,1", "2,1,1")
        assert code == 2


class TestConstruct:
    def test_hub_fill(self, capsys):
        code, out, _ = run(capsys, "construct", "5", "3")
        assert code == 0 and out.strip() == "4,4,2,2,2"

    def test_clique_fill(self, capsys):
        code, out, _ = run(capsys, "construct", "7", "3", "--prime")
        assert code == 0 and out.strip() == "6,3,3,3,1,1,1"

    def test_negative_d(self, capsys):
        code, out, _ = run(capsys, "construct", "5", "-2")
        assert code == 0 and out.strip() == "2,1,1,0,0"

    def test_emit_graph(self, capsys):
        code, out, _ = run(capsys, "construct", "5", "0", "--emit", "graph")
        assert code == 0
        assert out.splitlines()[0] == "5 4"

    def test_out_of_range(self, capsys):
        code, _, err = run(capsys, "construct", "5", "7")
        assert code == 2

    def test_prime_negative_rejected(self, capsys):
        code, _, err = run(capsys, "construct", "5", "-2", "--prime")
        assert code == 2


class TestMaximal:
    def test_two_lines(self, capsys):
        code, out, err = run(capsys, "maximal", "5", "3", "--oracle", "partitions")
        assert code == 0
        assert out.splitlines() == ["4,4,2,2,2", "4,3,3,3,1"]
        assert "n=5 d=3" in err

    def test_tree_level(self, capsys):
        code, out, _ = run(capsys, "maximal", "5", "0", "--oracle", "partitions")
        assert code == 0 and out.splitlines() == ["4,1,1,1,1"]

    def test_five_edges_on_seven(self, capsys):
        code, out, _ = run(capsys, "maximal", "7", "5", "--oracle", "partitions")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) >= 3
        assert "6,5,3,3,2,2,1" in lines

    def test_full_image(self, capsys):
        code, out, _ = run(capsys, "maximal", "5", "0", "--oracle", "partitions", "--full")
        assert code == 0
        assert "# full image" in out
        assert "2,2,2,1,1" in out

    def test_json_round_trip(self, capsys):
        code, out, _ = run(capsys, "maximal", "5", "3", "--json")
        assert code == 0
        report = MaximalSetReport.from_dict(json.loads(out))
        assert report.n == 5 and report.d == 3
        assert report.oracle_agreement

    def test_out_of_caps(self, capsys):
        code, _, err = run(capsys, "maximal", "40", "0")
        assert code == 2

    def test_max_n_override(self, capsys):
        code, _, _ = run(capsys, "maximal", "13", "0", "--oracle", "partitions")
        assert code == 2
        code, out, err = run(
            capsys, "maximal", "13", "0", "--oracle", "partitions", "--max-n", "13"
        )
        assert code == 0
        assert out.splitlines()[0] == "12," + ",".join(["1"] * 12)
        assert "overridden" in err


class TestDecompose:
    def test_single_step(self, capsys):
        code, out, _ = run(capsys, "decompose", "2,2,2", "3,2,1")
        assert code == 0
        assert out.strip() == "(3 → 1)"

    def test_identity_empty(self, capsys):
        code, out, _ = run(capsys, "decompose", "2,2,1", "2,2,1")
        assert code == 0 and out == ""

    def test_wrong_direction(self, capsys):
        code, _, err = run(capsys, "decompose", "3,2,1", "2,2,2")
        assert code == 1
        assert "not decomposable" in err


class TestLorenz:
    def test_points(self, capsys):
        code, out, _ = run(capsys, "lorenz", "4,1,1,1,1")
        assert code == 0
        assert "(1/5, 1/2)" in out
        assert out.strip().splitlines()[-1] == "(1, 1)"

    def test_diagonal(self, capsys):
        code, out, _ = run(capsys, "lorenz", "2,2,2")
        assert code == 0
        assert "(1/3, 1/3)" in out and "(2/3, 2/3)" in out

    def test_nonnormalized(self, capsys):
        code, out, _ = run(capsys, "lorenz", "2,1,1", "--nonnormalized")
        assert code == 0
        assert out.strip().splitlines() == ["(0, 0)", "(1, 2)", "(2, 3)", "(3, 4)"]

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "lorenz", "2,1,1", "--csv")
        assert code == 0
        assert out.splitlines()[0] == "x,y"
        assert out.splitlines()[1] == "0/1,0/1"

    def test_zero_sum_usage_error(self, capsys):
        code, _, _ = run(capsys, "lorenz", "0,0")
        assert code == 2


class TestVerdictConsistency:
    # CLI must be a thin adapter over the library verdicts
    @pytest.mark.parametrize(
        "literal", ["5,4,4,3,3,3", "4,4,3,2,1", "2,1,1,1,1", "0,0,0", "4,3,3,3,1"]
    )
    def test_check_matches_library(self, capsys, literal):
        code, _, _ = run(capsys, "check", literal)
        expected = erdos_gallai(DegreeSequence(int(v) for v in literal.split(",")))
        assert code == (0 if expected else 1)

    def test_usage_error_on_unknown_command(self, capsys):
        assert main(["frobnicate"]) == 2
