import json

import pytest

from lrwkit.cli import main, parse_partition, parse_weight
from lrwkit.partitions import DominantWeight, Partition


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestParsing:
    def test_partition(self):
        assert parse_partition("4,3,1") == Partition([4, 3, 1])
        assert parse_partition("") == Partition()
        assert parse_partition("-") == Partition()

    def test_partition_errors(self):
        from lrwkit.cli import UsageError

        with pytest.raises(UsageError):
            parse_partition("a,b")

    def test_weight(self):
        assert parse_weight("1,2,1@rank=3") == DominantWeight((1, 2, 1), 3)
        assert parse_weight("@rank=2") == DominantWeight((0, 0), 2)
        assert parse_weight("1@rank=3") == DominantWeight((1, 0, 0), 3)


class TestCommands:
    def test_part_roundtrip(self, capsys):
        code, out, _ = run(capsys, "part", "fromweight", "1,2,1@rank=3")
        assert code == 0
        assert json.loads(out)["result"] == [4, 3, 1]
        code, out, _ = run(capsys, "part", "toweight", "4,3,1", "3")
        assert json.loads(out)["result"] == [1, 2, 1]

    def test_part_conjugate_contains_size(self, capsys):
        code, out, _ = run(capsys, "part", "conjugate", "4,3,1")
        assert json.loads(out)["result"] == [3, 2, 2, 1]
        code, out, _ = run(capsys, "part", "contains", "3,2,1", "2,2")
        assert json.loads(out)["result"] is True
        code, out, _ = run(capsys, "part", "size", "4,3,1")
        assert json.loads(out)["result"] == 8

    def test_schur_commands(self, capsys):
        code, out, _ = run(capsys, "schur", "mult", "1", "1")
        assert json.loads(out)["result"] == [
            {"partition": [2], "coeff": 1},
            {"partition": [1, 1], "coeff": 1},
        ]
        code, out, _ = run(capsys, "schur", "skew", "3,2,1", "2,2")
        assert json.loads(out)["result"] == [
            {"partition": [2], "coeff": 1},
            {"partition": [1, 1], "coeff": 1},
        ]
        code, out, _ = run(capsys, "schur", "jt", "2,1")
        payload = json.loads(out)
        assert payload["h_expansion"] == [
            {"partition": [3], "coeff": -1},
            {"partition": [2, 1], "coeff": 1},
        ]
        assert payload["schur"] == [{"partition": [2, 1], "coeff": 1}]

    def test_lr(self, capsys):
        code, out, _ = run(capsys, "lr", "2,1", "1", "1,1")
        assert code == 0
        assert json.loads(out)["coefficient"] == 1

    def test_branch(self, capsys):
        code, out, _ = run(capsys, "branch", "1,1", "--target", "sp")
        assert json.loads(out)["result"] == [
            {"partition": [1, 1], "coeff": 1},
            {"partition": [], "coeff": 1},
        ]

    def test_dcoef(self, capsys):
        code, out, _ = run(capsys, "dcoef", "1", "1")
        assert json.loads(out)["result"] == [
            {"partition": [2], "coeff": 1},
            {"partition": [1, 1], "coeff": 1},
            {"partition": [], "coeff": 1},
        ]
        code, out, _ = run(capsys, "dcoef", "1", "1", "--lam", "", "--family", "o")
        assert json.loads(out)["coefficient"] == 1

    def test_wdecomp(self, capsys):
        code, out, _ = run(capsys, "wdecomp", "3,2,1", "--family", "o")
        payload = json.loads(out)
        assert payload["family"] == "O"
        assert len(payload["terms"]) == 6

    def test_wtensor(self, capsys):
        code, out, _ = run(capsys, "wtensor", "1", "1", "--family", "sp")
        payload = json.loads(out)
        assert payload["equal"] is True
        assert payload["lhs"] == payload["rhs"]

    def test_fermionic(self, capsys):
        code, out, _ = run(capsys, "fermionic", "B", "3", "--factor", "1,2")
        payload = json.loads(out)
        assert payload["terms"] == [
            {"weight": [0, 1, 0], "mult": 1},
            {"weight": [0, 0, 0], "mult": 1},
        ]
        code, out, _ = run(
            capsys, "fermionic", "B", "3", "--factor", "1,2", "--weight", "@rank=3"
        )
        assert json.loads(out)["multiplicity"] == 1

    def test_roots(self, capsys):
        code, out, _ = run(capsys, "roots", "beta", "D", "5")
        payload = json.loads(out)
        assert payload["count"] == 3
        assert payload["roots"][0]["weight"] == [0, 1, 0, 0, 0]
        code, out, _ = run(capsys, "roots", "commute", "C", "4")
        assert json.loads(out)["ok"] is True
        code, out, _ = run(
            capsys, "roots", "cone", "D", "5", "--weight", "1,-1,1,0,0"
        )
        assert json.loads(out)["solutions"] == [[0, 1, 0]]
        code, out, _ = run(capsys, "roots", "cone", "D", "5", "--alpha", "1,1,2,1,1")
        assert json.loads(out)["solutions"] == [[0, 1, 0]]

    def test_tsv_format(self, capsys):
        code, out, _ = run(capsys, "--format", "tsv", "wdecomp", "3,2,1", "--family", "o")
        lines = out.strip().splitlines()
        assert lines[0] == "3,2,1\t1"
        assert len(lines) == 6


class TestExitCodes:
    def test_usage_error_from_argparse(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["no-such-command"])
        assert err.value.code == 2

    def test_usage_error_from_values(self, capsys):
        code, _, err = run(capsys, "lr", "2,1", "1", "x")
        assert code == 2
        assert "bad partition" in err

    def test_cap_exceeded(self, capsys):
        code, _, err = run(capsys, "wdecomp", "6,6,6,6,6", "--family", "o")
        assert code == 3
        assert "cap" in err

    def test_cap_can_be_raised(self, capsys):
        code, _, _ = run(
            capsys, "--max-boxes", "40", "wdecomp", "5,5,5", "--family", "o"
        )
        assert code == 0

    def test_cap_env_variable(self, capsys, monkeypatch):
        monkeypatch.setenv("LRWKIT_MAX_BOXES", "3")
        code, _, _ = run(capsys, "wdecomp", "2,2", "--family", "o")
        assert code == 3
        monkeypatch.setenv("LRWKIT_MAX_BOXES", "30")
        code, _, _ = run(capsys, "wdecomp", "2,2", "--family", "o")
        assert code == 0

    def test_verify_quick_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--level", "quick")
        assert code == 0
        lines = out.strip().splitlines()
        summary = json.loads(lines[-1])["summary"]
        assert summary["failed"] == 0
        assert summary["total"] == len(lines) - 1


class TestConfig:
    def test_empty_config_file(self, capsys, tmp_path):
        cfg = tmp_path / "empty.json"
        cfg.write_text("")
        code, out, _ = run(
            capsys, "--config", str(cfg), "part", "size", "2,1"
        )
        assert code == 0
        assert json.loads(out)["result"] == 3

    def test_config_sets_cap_and_format(self, capsys, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"max_boxes": 3, "format": "tsv"}))
        code, _, err = run(
            capsys, "--config", str(cfg), "wdecomp", "2,2", "--family", "o"
        )
        assert code == 3
        code, out, _ = run(capsys, "--config", str(cfg), "part", "size", "2,1")
        assert out.strip() == "3"

    def test_flag_overrides_config(self, capsys, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"max_boxes": 3}))
        code, _, _ = run(
            capsys,
            "--config",
            str(cfg),
            "--max-boxes",
            "20",
            "wdecomp",
            "2,2",
            "--family",
            "o",
        )
        assert code == 0

    def test_bad_config(self, capsys, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text("[1,2]")
        code, _, err = run(capsys, "--config", str(cfg), "part", "size", "1")
        assert code == 2


class TestDeterminism:
    def test_identical_runs_byte_identical(self, capsys):
        _, out1, _ = run(capsys, "verify", "--level", "quick")
        _, out2, _ = run(capsys, "verify", "--level", "quick")
        assert out1 == out2

    def test_report_file(self, capsys, tmp_path):
        out_path = tmp_path / "report.json"
        code, _, _ = run(capsys, "verify", "--level", "quick", "--out", str(out_path))
        assert code == 0
        report = json.loads(out_path.read_text())
        assert report["summary"]["failed"] == 0
        code, _, _ = run(capsys, "verify", "--level", "quick", "--out", str(out_path))
        assert json.loads(out_path.read_text()) == report
