import io
import json
from pathlib import Path

import pytest

jsonschema = pytest.importorskip("jsonschema")

from signed_extremal.cli import run
from signed_extremal.core import canonical_switch
from signed_extremal.families import build_gst
from signed_extremal.graphio import format_graph, parse_graph
from signed_extremal.spectral import eigenvalues, spectrum_to_json

SCHEMAS = Path(__file__).resolve().parent.parent / "docs" / "schemas"


def run_cli(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def load_schema(name):
    return json.loads((SCHEMAS / name).read_text())


class TestConstruct:
    def test_writes_family_file(self, tmp_path):
        path = tmp_path / "g.sg"
        code, _ = run_cli("construct", "--family", "gst", "--s", "1", "--t", "4",
                          "--out", str(path))
        assert code == 0
        assert parse_graph(path.read_text()) == build_gst(1, 4)

    def test_stdout_default(self):
        code, text = run_cli("construct", "--family", "unbal-c4")
        assert code == 0
        assert text == format_graph(build_gst(1, 1))

    def test_missing_parameters_exit_2(self):
        code, _ = run_cli("construct", "--family", "gst")
        assert code == 2

    def test_unknown_family_exit_2(self):
        code, _ = run_cli("construct", "--family", "petersen")
        assert code == 2


class TestSpectrum:
    def test_round_trip_matches_in_memory_exactly(self, tmp_path):
        path = tmp_path / "g.sg"
        run_cli("construct", "--family", "gst", "--s", "1", "--t", "4",
                "--out", str(path))
        code, text = run_cli("spectrum", "--in", str(path), "--format", "json")
        assert code == 0
        assert text.strip() == spectrum_to_json(eigenvalues(build_gst(1, 4)))

    def test_json_validates(self, tmp_path):
        path = tmp_path / "g.sg"
        run_cli("construct", "--family", "gst-maxneg", "--n", "6", "--out", str(path))
        _, text = run_cli("spectrum", "--in", str(path), "--format", "json")
        jsonschema.validate(json.loads(text), load_schema("spectrum.schema.json"))

    def test_csv_columns(self, tmp_path):
        path = tmp_path / "g.sg"
        run_cli("construct", "--family", "unbal-c4", "--out", str(path))
        _, text = run_cli("spectrum", "--in", str(path), "--format", "csv")
        lines = text.strip().splitlines()
        assert lines[0] == "index,eigenvalue"
        assert len(lines) == 5

    def test_missing_file_exit_2(self):
        code, _ = run_cli("spectrum", "--in", "/nonexistent.sg")
        assert code == 2

    def test_malformed_file_exit_2(self, tmp_path):
        path = tmp_path / "bad.sg"
        path.write_text("3 1\n0 9 +1\n")
        code, _ = run_cli("spectrum", "--in", str(path))
        assert code == 2


class TestCanonical:
    def test_canonicalizes(self, tmp_path):
        src = tmp_path / "in.sg"
        src.write_text("3 2\n0 1 -1\n1 2 -1\n")
        code, text = run_cli("canonical", "--in", str(src))
        assert code == 0
        g = parse_graph(src.read_text())
        assert parse_graph(text) == canonical_switch(g)


class TestCheck:
    def test_passes_and_validates(self):
        code, text = run_cli("check", "--seed", "7", "--instances", "20",
                             "--format", "json")
        assert code == 0
        data = json.loads(text)
        jsonschema.validate(data, load_schema("check_report.schema.json"))
        assert all(s["passed"] for s in data["suites"])

    def test_seed_reproducibility(self):
        a = run_cli("check", "--seed", "3", "--instances", "15", "--format", "json")
        b = run_cli("check", "--seed", "3", "--instances", "15", "--format", "json")
        assert a == b

    def test_csv_shape(self):
        code, text = run_cli("check", "--seed", "1", "--instances", "5",
                             "--format", "csv")
        assert code == 0
        lines = text.strip().splitlines()
        assert lines[0] == "suite,instances,violations,passed"
        assert len(lines) == 7


class TestBounds:
    def test_closed_form_table(self):
        code, text = run_cli("bounds", "--n", "7")
        assert code == 0
        assert "edge_bound(7) = 16" in text
        assert "neg_edge_bound(7) = 11" in text

    def test_graph_comparison_satisfied(self, tmp_path):
        path = tmp_path / "g.sg"
        run_cli("construct", "--family", "gst", "--s", "1", "--t", "3",
                "--out", str(path))
        code, text = run_cli("bounds", "--in", str(path), "--format", "json")
        assert code == 0
        data = json.loads(text)
        for rep in data:
            jsonschema.validate(rep, load_schema("bound_report.schema.json"))

    def test_violating_graph_exits_1(self, tmp_path):
        # the all-positive complete graph is balanced, so the unbalanced edge
        # bound does not apply to it and is exceeded
        path = tmp_path / "k7.sg"
        run_cli("construct", "--family", "complete-pos", "--n", "7",
                "--out", str(path))
        code, _ = run_cli("bounds", "--in", str(path))
        assert code == 1

    def test_needs_argument(self):
        code, _ = run_cli("bounds")
        assert code == 2


class TestSearch:
    def test_json_validates_and_reproduces(self):
        code, a = run_cli("search", "--n", "5", "--objective", "max-rho",
                          "--forbid", "c3-minus", "--format", "json")
        assert code == 0
        data = json.loads(a)
        jsonschema.validate(data, load_schema("search_report.schema.json"))
        assert data["matched_family"] == ["gst(1,2)"]
        _, b = run_cli("search", "--n", "5", "--objective", "max-rho",
                       "--forbid", "c3-minus", "--format", "json")
        assert a == b

    def test_csv(self):
        code, text = run_cli("search", "--n", "5", "--format", "csv")
        assert code == 0
        lines = text.strip().splitlines()
        assert lines[0] == "witness,optimum,edges,neg_edges,matched_family"
        # the canonical class representative pins tree edges +1, so its own
        # negative edge count is a class-dependent constant
        assert lines[1] == "1,7,7,2,gst(1,2)"

    def test_bad_objective_exit_2(self):
        code, _ = run_cli("search", "--n", "5", "--objective", "min-rho")
        assert code == 2

    def test_out_of_range_exit_2(self):
        code, _ = run_cli("search", "--n", "12")
        assert code == 2


class TestVerify:
    def test_pass_exit_0(self):
        code, text = run_cli("verify", "--theorem", "t1_3", "--n", "6",
                             "--format", "json")
        assert code == 0
        data = json.loads(text)
        jsonschema.validate(data, load_schema("bound_report.schema.json"))
        assert data["passed"] is True
        assert abs(data["observed"] - 3.645751311064591) < 1e-9

    def test_kebab_theorem_name(self):
        code, _ = run_cli("verify", "--theorem", "l3-6-order", "--n", "8")
        assert code == 0

    def test_unknown_theorem_exit_2(self):
        code, _ = run_cli("verify", "--theorem", "t7_7", "--n", "5")
        assert code == 2

    def test_table_verdict(self):
        code, text = run_cli("verify", "--theorem", "t1_2_edges", "--n", "5")
        assert code == 0
        assert text.startswith("PASS t1_2_edges n=5")


class TestUsage:
    def test_no_command(self):
        code, _ = run_cli()
        assert code == 2

    def test_unknown_flag(self):
        code, _ = run_cli("bounds", "--n", "7", "--frobnicate")
        assert code == 2

    def test_help_exit_0(self):
        code, _ = run_cli("--help")
        assert code == 0

    def test_workers_env_default(self, monkeypatch):
        from signed_extremal import cli

        monkeypatch.setenv("SIGNED_EXTREMAL_WORKERS", "3")
        assert cli._default_workers() == 3
        monkeypatch.setenv("SIGNED_EXTREMAL_WORKERS", "junk")
        assert cli._default_workers() == 1

    def test_internal_numeric_failure_exit_3(self, monkeypatch):
        from signed_extremal import cli
        from signed_extremal.spectral import SpectralError

        def boom(*args, **kwargs):
            raise SpectralError("synthetic failure")

        monkeypatch.setattr(cli, "verify_theorem", boom)
        code, _ = run_cli("verify", "--theorem", "t1_3", "--n", "5")
        assert code == 3

    def test_progress_milestones(self, capsys):
        from signed_extremal.cli import _make_progress

        progress = _make_progress()
        progress({"signatures_scanned": 500_000})
        progress({"signatures_scanned": 2_100_000})
        err = capsys.readouterr().err
        assert err.splitlines() == [
            "progress: 1000000 signatures scanned",
            "progress: 2000000 signatures scanned",
        ]
