"""End-to-end CLI coverage through main(argv), including exit codes."""

import json

import jsonschema
import pytest

from isokit.cli import main
from isokit.serialize import RUN_RECORD_SCHEMA


@pytest.fixture
def c7_file(tmp_path):
    path = tmp_path / "c7.el"
    path.write_text("7 7\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 0\n")
    return str(path)


@pytest.fixture
def k3_file(tmp_path):
    path = tmp_path / "k3.el"
    path.write_text("3 3\n0 1\n1 2\n2 0\n")
    return str(path)


@pytest.fixture
def split_file(tmp_path):
    path = tmp_path / "split.el"
    path.write_text("6 6\n0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n")
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_solve_human_output(capsys, c7_file):
    code, out, _ = run(capsys, "solve", c7_file)
    assert code == 0
    assert "D = 0" in out
    assert "size = 1" in out
    assert "bound = 1" in out
    assert "valid = true" in out


def test_solve_json_schema_and_trace(capsys, c7_file):
    code, out, _ = run(capsys, "solve", c7_file, "--json", "--trace")
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, RUN_RECORD_SCHEMA)
    assert payload["result"]["set"] == [0]
    assert payload["result"]["trace"][0]["case_label"] == "B1-maxdeg2"


def test_solve_json_and_human_agree(capsys, c7_file):
    _, human, _ = run(capsys, "solve", c7_file)
    _, as_json, _ = run(capsys, "solve", c7_file, "--json")
    payload = json.loads(as_json)["result"]
    assert f"size = {payload['size']}" in human
    assert f"bound = {payload['bound']}" in human


def test_solve_triangle_exits_2(capsys, k3_file):
    code, _, err = run(capsys, "solve", k3_file)
    assert code == 2
    assert "triangle" in err


def test_solve_disconnected_exits_3(capsys, split_file):
    code, _, _ = run(capsys, "solve", split_file)
    assert code == 3


def test_solve_any_accepts_disconnected(capsys, split_file):
    code, out, _ = run(capsys, "solve", split_file, "--any")
    assert code == 0
    assert "size = 2" in out


def test_solve_any_accepts_triangle(capsys, k3_file):
    code, out, _ = run(capsys, "solve", k3_file, "--any")
    assert code == 0
    assert "D = 0" in out


def test_solve_reads_graph6_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", __import__("io").StringIO("C~\n"))
    code, out, _ = run(capsys, "solve", "-")
    assert code == 0
    assert "size = 1" in out


def test_exact_cycle(capsys, c7_file):
    code, out, _ = run(capsys, "exact", c7_file)
    assert code == 0
    assert "minimum = 1" in out


def test_exact_pattern_flag(capsys, c7_file):
    code, out, _ = run(capsys, "exact", c7_file, "--pattern", "k1")
    assert code == 0
    assert "minimum = 3" in out  # domination number of C7


def test_verify_valid_and_invalid(capsys, c7_file):
    code, out, _ = run(capsys, "verify", c7_file, "--set", "0")
    assert code == 0 and "valid = true" in out
    code, out, _ = run(capsys, "verify", c7_file, "--set", "")
    assert code == 1 and "valid = false" in out


def test_verify_pattern(capsys, k3_file):
    code, out, _ = run(capsys, "verify", k3_file, "--set", "0", "--pattern", "k3")
    assert code == 0


def test_verify_bad_set_is_usage_error(capsys, c7_file):
    code, _, err = run(capsys, "verify", c7_file, "--set", "0,x")
    assert code == 64


def test_verify_out_of_range_label(capsys, c7_file):
    code, _, err = run(capsys, "verify", c7_file, "--set", "99")
    assert code == 64
    assert "not in the graph" in err


def test_gen_graph6_feeds_exact(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "--family", "b", "--n", "8")
    assert code == 0
    path = tmp_path / "b8.g6"
    path.write_text(out)
    code, out, _ = run(capsys, "exact", str(path))
    assert code == 0
    assert "minimum = 2" in out


def test_gen_edgelist_roundtrip(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "--family", "b", "--n", "12",
                       "--pattern", "k3", "--format", "edgelist")
    assert code == 0
    path = tmp_path / "b12.el"
    path.write_text(out)
    code, out, _ = run(capsys, "solve", str(path))
    assert code == 0
    assert "size = 3" in out
    assert "bound = 3" in out


def test_gen_unknown_family(capsys):
    code, _, _ = run(capsys, "gen", "--family", "z", "--n", "5")
    assert code == 64


def test_enum_csv(capsys):
    code, out, _ = run(capsys, "enum", "--n", "4")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,graphs_checked,max_iota_c,expected,extremal_count,all_bounds_held"
    assert lines[1] == "4,38,1,1,4,true"


def test_enum_json(capsys):
    code, out, _ = run(capsys, "enum", "--n", "4", "--json")
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, RUN_RECORD_SCHEMA)
    assert payload["result"]["max_iota_c"] == 1
    assert payload["result"]["failures"] == []


def test_lemma2_command(capsys):
    code, out, _ = run(capsys, "lemma2", "--pattern", "k3", "--nmax", "8")
    assert code == 0
    assert "n=8 value=2" in out
    assert "all_match = true" in out


def test_lemma2_skips_undefined(capsys):
    code, out, _ = run(capsys, "lemma2", "--pattern", "p3", "--nmax", "4")
    assert code == 0
    assert "n=3 skipped" in out


def test_fuzz_command_json(capsys):
    code, out, _ = run(capsys, "fuzz", "--trials", "5", "--nmax", "10",
                       "--seed", "1", "--json")
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, RUN_RECORD_SCHEMA)
    assert payload["result"]["violations"] == []


def test_fuzz_requires_seed(capsys):
    code, _, err = run(capsys, "fuzz", "--trials", "5", "--nmax", "10")
    assert code == 64


def test_unknown_subcommand_is_usage_error(capsys):
    code, _, _ = run(capsys, "nonsense")
    assert code == 64


def test_missing_file_is_io_error(capsys, tmp_path):
    code, _, err = run(capsys, "solve", str(tmp_path / "absent.el"))
    assert code == 74
    assert "cannot read" in err


def test_malformed_input_is_io_error(capsys, tmp_path):
    path = tmp_path / "bad.el"
    path.write_text("3 1\n0 9\n")
    code, _, err = run(capsys, "solve", str(path))
    assert code == 74
    assert "parse error" in err


def test_format_sniffing_picks_graph6(capsys, tmp_path):
    path = tmp_path / "g.g6"
    path.write_text("C~\n")
    code, out, _ = run(capsys, "solve", str(path))
    assert code == 0 and "size = 1" in out


def test_format_override(capsys, tmp_path):
    path = tmp_path / "g.any"
    path.write_text("4 0\n")
    code, out, _ = run(capsys, "solve", str(path), "--format", "edgelist", "--any")
    assert code == 0 and "size = 0" in out


def test_duplicate_edge_warning_on_stderr(capsys, tmp_path):
    path = tmp_path / "dup.el"
    path.write_text("3 3\n0 1\n0 1\n1 2\n")
    code, _, err = run(capsys, "solve", str(path))
    assert code == 0
    assert "duplicate" in err
