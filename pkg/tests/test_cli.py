import json

import pytest

from curveobs.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestAnalyze:
    def test_paper_pair_json(self, capsys):
        code, out, _ = run(capsys, "analyze", "--genus", "2",
                           "--a", "x1 x2 y2 x2^-1", "--b", "y2 x1^-1",
                           "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["verdict"] == "certified_positive_theorem"
        assert data["obstruction"] == {"X1": "1"}

    def test_text_output(self, capsys):
        code, out, _ = run(capsys, "analyze", "--genus", "2",
                           "--a", "x1 x2 y2 x2^-1", "--b", "y2 x1^-1")
        assert code == 0
        assert "certified_positive_theorem" in out
        assert "NOT in Z|a| + Z|b|" in out

    def test_dependent_pair(self, capsys):
        code, out, _ = run(capsys, "analyze", "--genus", "2",
                           "--a", "x1", "--b", "x1", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["iA"] == 0
        assert data["lattice"]["member"] is True
        assert data["verdict"] == "inconclusive"

    def test_json_roundtrip(self, capsys):
        code, out, _ = run(capsys, "analyze", "--genus", "2",
                           "--a", "x1 (x2 y2)^2 x2^-1", "--b", "zeta y2 x1^-1",
                           "--format", "json")
        assert code == 0
        data = json.loads(out)
        code2, out2, _ = run(capsys, "analyze", "--genus", str(data["genus"]),
                             "--a", data["a"], "--b", data["b"],
                             "--format", "json")
        assert code2 == 0 and json.loads(out2) == data

    def test_batch_pairs(self, capsys, tmp_path):
        pairs = tmp_path / "pairs.tsv"
        pairs.write_text("2\tx1 x2 y2 x2^-1\ty2 x1^-1\n"
                         "1\tx1\ty1\n"
                         "2\tx1\tx2^-1 [y1,zeta] zeta\n")
        code, out, _ = run(capsys, "analyze", "--pairs", str(pairs))
        assert code == 0
        lines = [json.loads(l) for l in out.strip().splitlines()]
        assert [l["verdict"] for l in lines] == [
            "certified_positive_theorem",
            "certified_positive_homological",
            "inconclusive",
        ]

    def test_parse_error_exit_code(self, capsys):
        code, _, err = run(capsys, "analyze", "--genus", "2",
                           "--a", "x9", "--b", "y1")
        assert code == 1
        assert "x9" in err

    def test_bad_token_named(self, capsys):
        code, _, err = run(capsys, "eval", "--genus", "1", "x1 & y1")
        assert code == 1
        assert "&" in err

    def test_missing_words(self, capsys):
        code, _, err = run(capsys, "analyze", "--genus", "2")
        assert code == 1


class TestTwistCheck:
    def test_consistent_pair(self, capsys):
        code, out, _ = run(capsys, "twist-check", "--genus", "2",
                           "--a", "x1 x2 y2 x2^-1", "--b", "y2 x1^-1")
        assert code == 0
        assert "True" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "twist-check", "--genus", "2",
                           "--a", "x1", "--b", "x2", "--format", "json")
        assert code == 0
        assert json.loads(out)["consistent"] is True

    def test_nonzero_intersection_rejected(self, capsys):
        code, _, err = run(capsys, "twist-check", "--genus", "1",
                           "--a", "x1", "--b", "y1")
        assert code == 1


class TestEval:
    def test_zeta(self, capsys):
        code, out, _ = run(capsys, "eval", "--genus", "2", "zeta",
                           "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["abs"] == {}
        assert data["ell"] == [
            {"basis": "X1^Y1", "coeff": "1"},
            {"basis": "X2^Y2", "coeff": "1"},
        ]

    def test_text(self, capsys):
        code, out, _ = run(capsys, "eval", "--genus", "2", "x1 x2 y2 x2^-1")
        assert code == 0
        assert "X1 + Y2" in out


class TestSelftest:
    def test_deterministic_and_green(self, capsys):
        code1, out1, _ = run(capsys, "selftest", "--seed", "5")
        code2, out2, _ = run(capsys, "selftest", "--seed", "5")
        assert code1 == code2 == 0
        assert out1 == out2
        assert "FAIL" not in out1

    def test_bad_iterations(self, capsys):
        code, _, err = run(capsys, "selftest", "--iterations", "0")
        assert code == 1
