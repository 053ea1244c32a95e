import json
import shutil

import pytest

from normcolour import Policy
from normcolour.cli import main
from normcolour.documents import parse_norm_document, write_resolution
from normcolour.resolution import colour_curtail_complete

from .conftest import DATA_DIR, data_text


@pytest.fixture
def six_norms_file(tmp_path):
    path = tmp_path / "six_norms.json"
    shutil.copy(DATA_DIR / "six_norms.json", path)
    return str(path)


@pytest.fixture
def k2_file(tmp_path):
    path = tmp_path / "k2.json"
    shutil.copy(DATA_DIR / "k2.json", path)
    return str(path)


class TestResolveCommand:
    def test_max_class_to_stdout(self, six_norms_file, capsys):
        code = main(["resolve", "--input", six_norms_file, "--algorithm", "resolve", "--policy", "max-class"])
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["algorithm"] == "resolve"
        assert doc["policy"] == "max-class"
        assert all(e["curtailed_wrt"] == [] for e in doc["entries"])

    def test_output_file(self, six_norms_file, tmp_path):
        out = tmp_path / "res.json"
        code = main(
            ["resolve", "--input", six_norms_file, "--algorithm", "curtail",
             "--policy", "lex-posterior", "--output", str(out)]
        )
        assert code == 0
        doc = json.loads(out.read_text())
        assert len(doc["entries"]) == 6

    def test_matches_library_call(self, six_norms_file, capsys):
        code = main(
            ["resolve", "--input", six_norms_file, "--algorithm", "curtail-complete",
             "--policy", "lex-posterior", "--mode", "gross"]
        )
        assert code == 0
        from normcolour.policies import ScoreMode

        g = parse_norm_document(data_text("six_norms.json"))
        expected = write_resolution(
            colour_curtail_complete(g, Policy.lex_posterior(ScoreMode.GROSS))
        )
        assert capsys.readouterr().out == expected

    def test_weak_order_with_rank_file(self, k2_file, tmp_path, capsys):
        rank_file = tmp_path / "ranks.json"
        rank_file.write_text('{"a": 1, "b": 2}')
        code = main(
            ["resolve", "--input", k2_file, "--algorithm", "resolve",
             "--policy", "weak-order", "--rank-file", str(rank_file)]
        )
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        assert [e["norm"] for e in doc["entries"]] == ["b"]

    def test_weak_order_without_rank_file_is_usage_error(self, k2_file, capsys):
        code = main(["resolve", "--input", k2_file, "--policy", "weak-order"])
        assert code == 1
        assert "rank-file" in capsys.readouterr().err

    def test_bad_rank_file_is_input_error(self, k2_file, tmp_path, capsys):
        rank_file = tmp_path / "ranks.json"
        rank_file.write_text('{"a": "high"}')
        code = main(
            ["resolve", "--input", k2_file, "--policy", "weak-order",
             "--rank-file", str(rank_file)]
        )
        assert code == 2

    def test_missing_input_file(self, capsys):
        code = main(["resolve", "--input", "/nonexistent.json", "--policy", "max-class"])
        assert code == 2
        assert "error" in capsys.readouterr().err

    def test_malformed_input(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{nope")
        assert main(["resolve", "--input", str(bad), "--policy", "max-class"]) == 2

    def test_schema_violation(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text('{"norms": [{"label": "missing id"}]}')
        assert main(["resolve", "--input", str(bad), "--policy", "max-class"]) == 2


class TestCheckCommand:
    def test_conflicting_pair(self, k2_file, capsys):
        code = main(["check", "--input", k2_file, "--set", "a,b"])
        assert code == 0
        assert capsys.readouterr().out.strip() == (
            "conflict_free=false admissible=false complete=false"
        )

    def test_complete_set(self, six_norms_file, capsys):
        code = main(["check", "--input", six_norms_file, "--set", "1,2,3,5"])
        assert code == 0
        out = capsys.readouterr().out
        assert "conflict_free=true" in out
        assert "admissible=true" in out
        assert "complete=true" in out

    def test_empty_set(self, k2_file, capsys):
        assert main(["check", "--input", k2_file, "--set", ""]) == 0
        assert "conflict_free=true" in capsys.readouterr().out

    def test_unknown_id_is_input_error(self, k2_file):
        assert main(["check", "--input", k2_file, "--set", "a,zz"]) == 2


class TestBenchCommand:
    def test_small_preset_run(self, tmp_path):
        out = tmp_path / "rows.csv"
        code = main(["bench", "--preset", "score-sum", "--seed", "3", "--trials", "1", "--out", str(out)])
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "num_conflicts,trial,algorithm,policy,metric,value,seed"
        # 120 conflict counts x 1 trial x 2 algorithms
        assert len(lines) == 1 + 120 * 2

    def test_unknown_preset_is_usage_error(self, capsys):
        assert main(["bench", "--preset", "mystery"]) == 1


class TestUsageErrors:
    def test_unknown_flag(self, capsys):
        assert main(["resolve", "--frobnicate"]) == 1

    def test_unknown_subcommand(self):
        assert main(["explode"]) == 1

    def test_no_subcommand(self, capsys):
        assert main([]) == 1
        assert "subcommand" in capsys.readouterr().err

    def test_bad_algorithm_name(self, k2_file):
        assert main(["resolve", "--input", k2_file, "--policy", "max-class", "--algorithm", "nope"]) == 1
