import json
import subprocess
import sys

import pytest

from roofpairs.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--json")
    return code, json.loads(out)


class TestDescribe:
    def test_gram_and_invariants(self, capsys):
        code, report = run_json(capsys, "describe", "g2dagger")
        assert code == 0
        side = report["sides"][0]
        assert side["gram"] == [[0, 1, 5], [1, 10, 32], [5, 32, 82]]
        assert side["gram_determinant"] == -12
        assert side["smith_factors"] == [1, 1, 12]
        assert side["discriminant_group"] == "Z/12"
        assert side["relation"] == "xi^3 - 5*L*xi^2 + 9*L^2*xi - 12*Pi = 0"
        assert side["mukai_index_condition"] is True

    def test_d4_table(self, capsys):
        code, report = run_json(capsys, "describe", "d4")
        assert code == 0
        assert report["sides"][1]["gram"] == [
            [0, 0, 0, 1, 6],
            [0, 0, 1, 6, 22],
            [0, 1, 0, 6, 22],
            [1, 6, 6, 44, 126],
            [6, 22, 22, 126, 308],
        ]
        assert report["sides"][1]["discriminant_group"] == "Z/12"

    def test_unknown_config_exits_2(self, capsys):
        assert main(["describe", "nosuch"]) == 2

    def test_config_file(self, capsys, toy_path):
        code, report = run_json(capsys, "describe", "--config", toy_path)
        assert code == 0
        assert report["name"] == "toy-sym"
        assert report["sides"][0]["discriminant_group"] == "Z/2"
        assert report["sides"][0]["mukai_index_condition"] is False

    def test_config_file_name_mismatch(self, capsys, toy_path):
        assert main(["describe", "g2dagger", "--config", toy_path]) == 2


class TestLemma7:
    def test_g2dagger(self, capsys):
        code, report = run_json(capsys, "lemma7", "g2dagger")
        assert code == 0
        assert report["sign_orbit"] == [5, 7]
        assert report["iso_obstructed"] is True
        assert report["declared_form"]["witness"]["class"] == "L^2*xi - 7*Pi"
        assert report["switched_locus"]["class"] == "7*L*xi^2 - 23*L^2*xi + 42*Pi"

    def test_d4(self, capsys):
        code, report = run_json(capsys, "lemma7", "d4")
        assert code == 0
        assert report["sign_orbit"] == [5, 7]
        assert report["iso_obstructed"] is True
        assert report["declared_form"]["witness"]["class"] == \
            "-L^2*xi^2 + 5*Pi1*xi + 4*Pi2*xi - 14*Pi1*L"

    def test_symmetric_toy_unobstructed(self, capsys, toy_path):
        code, report = run_json(capsys, "lemma7", "--config", toy_path)
        assert code == 0
        assert report["residue_set"] == [1]
        assert report["iso_obstructed"] is False

    def test_pipeline_failure_names_stage(self, tmp_path, capsys, toy_path):
        # a middle basis missing the top xi-monomial leaves no rank-1 complement
        with open(toy_path) as fh:
            data = json.load(fh)
        data["sides"][0]["middle_basis"] = [["Pi1", 0], ["Pi2", 0]]
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps(data))
        code = main(["lemma7", "--config", str(bad)])
        err = capsys.readouterr().err
        assert code == 1
        assert "locus class" in err


class TestBwb:
    def test_linear_forms(self, capsys):
        code, report = run_json(capsys, "bwb", "5", "O", "1")
        assert code == 0 and report["table"] == {"0": 7}

    def test_sym2_twist(self, capsys):
        code, report = run_json(capsys, "bwb", "5", "Sym2Sdual", "-3")
        assert code == 0 and report["table"] == {"2": 1}

    def test_ottaviani_pipeline(self, capsys):
        code, report = run_json(capsys, "bwb", "5", "G", "1")
        assert code == 0 and report["table"] == {"0": 41}

    @pytest.mark.parametrize("case,expected", [(1, {"0": 1}), (2, {"2": 1}), (3, {"2": 1})])
    def test_cases(self, capsys, case, expected):
        code, report = run_json(capsys, "bwb", "--case", str(case))
        assert code == 0 and report["table"] == expected

    def test_unsupported_descriptor_exits_2(self, capsys):
        assert main(["bwb", "5", "Nope", "0"]) == 2

    def test_underdetermined_exits_1(self, capsys):
        assert main(["bwb", "5", "C", "2"]) == 1


class TestMukai:
    def test_vector(self, capsys):
        code, report = run_json(capsys, "mukai", "g2dagger")
        assert code == 0
        assert report["mukai_vector"] == [2, 1, -3]
        assert report["theta_v"]["class"] == "Pi"
        assert report["theta_w"]["class"] == "L^2*xi - 5*Pi"
        assert report["solution_orbits"] == 1
        assert report["switched_generator"]["coordinates"] == [5, -3, 1]

    def test_small_bound(self, capsys):
        code, report = run_json(capsys, "mukai", "g2dagger", "--bound", "6")
        assert code == 0 and report["mukai_vector"] == [2, 1, -3]


class TestMotivic:
    def test_all_ranks(self, capsys):
        code, report = run_json(capsys, "motivic")
        assert code == 0
        assert report["all_match"] is True
        assert [r["rank"] for r in report["identities"]] == list(range(2, 13))

    def test_single_rank(self, capsys):
        code, report = run_json(capsys, "motivic", "--rank", "4")
        assert code == 0 and report["identities"][0]["match"] is True


class TestVerifyAll:
    def test_passes(self, capsys):
        code, report = run_json(capsys, "verify-all")
        assert code == 0
        assert report["passed"] is True
        assert report["failures"] == 0

    def test_byte_determinism(self, capsys):
        code1, _ = main(["verify-all", "--json"]), capsys.readouterr()
        out1 = _.out
        code2, _ = main(["verify-all", "--json"]), capsys.readouterr()
        out2 = _.out
        assert out1 == out2

    def test_corrupted_config_fails(self, capsys):
        assert main(["verify-all", "--corrupt"]) == 1

    def test_one_line_per_check(self, capsys):
        code, out = run(capsys, "verify-all")
        lines = [l for l in out.splitlines() if l.startswith(("PASS", "FAIL"))]
        assert code == 0 and len(lines) >= 40
        assert all(l.startswith("PASS") for l in lines)


def test_module_entry_point(toy_path):
    proc = subprocess.run(
        [sys.executable, "-m", "roofpairs", "describe", "--config", toy_path, "--json"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["name"] == "toy-sym"
