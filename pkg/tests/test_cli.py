"""The command-line surface: subcommands, formats, files and exit codes."""

import json

import pytest

from revwiener.cli import EXIT_BOUND, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestStats:
    def test_human(self, capsys, tmp_path):
        tree_file = tmp_path / "p5.txt"
        tree_file.write_text("5\n0 1\n1 2\n2 3\n3 4\n")
        code, out, _ = run(capsys, "stats", str(tree_file))
        assert code == EXIT_OK
        assert "reverse_wiener = 20" in out
        assert "diameter = 4" in out

    def test_structured(self, capsys, tmp_path):
        tree_file = tmp_path / "s4.txt"
        tree_file.write_text("4\n0 1\n0 2\n0 3\n")
        code, out, _ = run(capsys, "stats", str(tree_file), "--format", "structured")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload == {
            "n": 4,
            "wiener": 9,
            "diameter": 2,
            "reverse_wiener": 3,
            "centers": [0],
        }

    def test_tabular(self, capsys, tmp_path):
        tree_file = tmp_path / "p4.txt"
        tree_file.write_text("4\n0 1\n1 2\n2 3\n")
        code, out, _ = run(capsys, "stats", str(tree_file), "--format", "tabular")
        assert code == EXIT_OK
        header, row = out.strip().splitlines()
        assert header.split("\t") == ["n", "wiener", "diameter", "reverse_wiener", "centers"]
        assert row.split("\t") == ["4", "10", "3", "8", "1,2"]

    def test_stdin(self, capsys, monkeypatch):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO("2\n0 1\n"))
        code, out, _ = run(capsys, "stats", "-")
        assert code == EXIT_OK and "n = 2" in out

    def test_parse_error_is_usage(self, capsys, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("not a tree\n")
        code, _, err = run(capsys, "stats", str(bad))
        assert code == EXIT_USAGE and "error:" in err

    def test_missing_file_is_usage(self, capsys):
        code, _, err = run(capsys, "stats", "/no/such/file")
        assert code == EXIT_USAGE and "error:" in err


class TestConstruct:
    def test_round_trip(self, capsys, tmp_path):
        out_file = tmp_path / "tree.txt"
        code, _, _ = run(capsys, "construct", "D(6,3)", "--out", str(out_file))
        assert code == EXIT_OK
        code, out, _ = run(capsys, "stats", str(out_file))
        assert code == EXIT_OK and "n = 6" in out and "diameter = 3" in out

    def test_diam4_spec(self, capsys):
        code, out, _ = run(capsys, "construct", "T(n0=1; 2^2)")
        assert code == EXIT_OK
        assert out.splitlines()[0] == "8"

    def test_bad_spec_is_usage(self, capsys):
        for spec in ("X(1)", "D(6,1)", "T(3)"):
            code, _, err = run(capsys, "construct", spec)
            assert code == EXIT_USAGE and "error:" in err


class TestEnumerate:
    def test_count(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--n", "7")
        assert code == EXIT_OK
        assert out.strip().splitlines()[-1] == "total: 11"

    def test_diameter_filter(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--n", "6", "--diameter", "3", "--format", "structured")
        payload = json.loads(out)
        assert code == EXIT_OK and payload["count"] == 2  # D(6,2) and D(6,3)

    def test_diam4_spec_route_beyond_free_bound(self, capsys):
        code, out, _ = run(
            capsys, "enumerate", "--n", "25", "--diameter", "4", "--format", "structured"
        )
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["count"] > 0
        assert all(len(t["edges"]) == 24 for t in payload["trees"])

    def test_bound_exceeded(self, capsys):
        code, _, err = run(capsys, "enumerate", "--n", "25")
        assert code == EXIT_BOUND and "error:" in err


class TestRank:
    def test_human(self, capsys):
        code, out, _ = run(capsys, "rank", "--n", "8", "--k", "2")
        assert code == EXIT_OK
        lines = out.strip().splitlines()
        assert lines[0].startswith("#1: value 7, 1 tree(s)")

    def test_structured(self, capsys):
        code, out, _ = run(capsys, "rank", "--n", "8", "--k", "2", "--format", "structured")
        payload = json.loads(out)
        assert code == EXIT_OK
        assert [e["value"] for e in payload["entries"]] == [7, 26]

    def test_tabular(self, capsys):
        code, out, _ = run(capsys, "rank", "--n", "8", "--k", "1", "--format", "tabular")
        assert code == EXIT_OK
        assert out.splitlines()[0] == "rank\tvalue\tties\ttruncated"

    def test_mem_budget_caps_tie_sets(self, capsys, monkeypatch):
        monkeypatch.setenv("REVWIENER_MAX_MEM", "600")
        code, out, _ = run(capsys, "rank", "--n", "10", "--k", "2", "--format", "structured")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert all(len(e["trees"]) <= 1 for e in payload["entries"])

    def test_bad_mem_budget_is_usage(self, capsys, monkeypatch):
        monkeypatch.setenv("REVWIENER_MAX_MEM", "lots")
        code, _, err = run(capsys, "rank", "--n", "8", "--k", "1")
        assert code == EXIT_USAGE and "error:" in err

    def test_bound_exceeded(self, capsys):
        code, _, _ = run(capsys, "rank", "--n", "30", "--k", "1")
        assert code == EXIT_BOUND


class TestClosedForm:
    def test_plain_value(self, capsys):
        code, out, _ = run(capsys, "closed-form", "f3", "--n", "57")
        assert code == EXIT_OK and "f3(57) = 896" in out

    def test_structured_with_attaining(self, capsys):
        code, out, _ = run(capsys, "closed-form", "second", "--n", "57", "--format", "structured")
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["value"] == 896
        assert sorted(payload["attaining"]) == ["D(57,28)", "T(6^8)", "T(7^7)"]

    def test_domain_error_is_usage(self, capsys):
        code, _, err = run(capsys, "closed-form", "g4", "--n", "4")
        assert code == EXIT_USAGE and "error:" in err


class TestVerify:
    def test_pass_is_exit_zero(self, capsys):
        code, out, _ = run(capsys, "verify", "prop-d3", "--n-from", "4", "--n-to", "10")
        assert code == EXIT_OK
        assert "failed=0" in out

    def test_set_mismatch_is_exit_one(self, capsys):
        # The published second-minimum table misses one attaining tree at n=9.
        code, out, _ = run(capsys, "verify", "prop-g4", "--n", "9")
        assert code == EXIT_MISMATCH
        assert "FAIL" in out

    def test_structured_report(self, capsys):
        code, out, _ = run(
            capsys, "verify", "smallest", "--n-from", "4", "--n-to", "8",
            "--format", "structured",
        )
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["schema_version"] == "revwiener-report/1"
        assert payload["summary"]["failed"] == 0

    def test_tabular_report(self, capsys):
        code, out, _ = run(
            capsys, "verify", "prop-f4", "--n", "10", "--format", "tabular"
        )
        assert code == EXIT_OK
        assert out.splitlines()[0].startswith("theorem\tn\t")

    def test_lemmas_default_range(self, capsys):
        code, out, _ = run(capsys, "verify", "lemmas", "--trials", "5")
        assert code == EXIT_OK

    def test_missing_range_is_usage(self, capsys):
        code, _, err = run(capsys, "verify", "prop-f4")
        assert code == EXIT_USAGE and "error:" in err

    def test_jobs_flag(self, capsys):
        code, out, _ = run(
            capsys, "verify", "second-smallest", "--n-from", "4", "--n-to", "10",
            "--jobs", "2",
        )
        assert code == EXIT_OK


class TestUsage:
    def test_no_command(self, capsys):
        assert main([]) == EXIT_USAGE

    def test_unknown_command(self, capsys):
        assert main(["frobnicate"]) == EXIT_USAGE

    def test_help_is_ok(self, capsys):
        assert main(["--help"]) == EXIT_OK
