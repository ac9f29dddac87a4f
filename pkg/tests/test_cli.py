import io
import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from specpairs import SwitchingPlan, decode_graph6, encode_graph6
from specpairs.cli import _CHECKS, _Metrics, _verify_report, main
from specpairs.families import ExpectedMetrics, FamilyInstance


@pytest.fixture(scope="module")
def schema():
    text = resources.files("specpairs").joinpath("report_schema.json").read_text()
    return json.loads(text)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- generate -----------------------------------------------------------------


def test_generate_stdout(capsys, vertex3):
    code, out, err = run_cli(capsys, "generate", "--family", "vertex", "--k", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 2
    assert decode_graph6(lines[0]) == vertex3.gamma
    assert decode_graph6(lines[1]) == vertex3.gamma_prime


def test_generate_sidecars(tmp_path, capsys, edge6):
    base = str(tmp_path / "pair")
    code, out, err = run_cli(
        capsys, "generate", "--family", "edge", "--k", "6",
        "--seed", "11", "--out", base,
    )
    assert code == 0 and "wrote" in err
    g6 = (tmp_path / "pair.g6").read_text().splitlines()
    assert [decode_graph6(s) for s in g6] == [edge6.gamma, edge6.gamma_prime]
    plan = SwitchingPlan.from_json((tmp_path / "pair.plan.json").read_text())
    assert plan.classes == edge6.plan.classes
    meta = json.loads((tmp_path / "pair.meta.json").read_text())
    assert meta["order"] == 52 and meta["degree"] == 13
    assert meta["seed"] == 11
    assert meta["expected"]["kappa_prime"] == [13, 12]
    assert meta["named"]["x1"] == 5


def test_generate_rejects_bad_parameters(capsys):
    code, out, err = run_cli(capsys, "generate", "--family", "edge", "--k", "7")
    assert code == 2 and "error" in err


# -- verify -------------------------------------------------------------------


def test_verify_text_output(capsys):
    code, out, err = run_cli(capsys, "verify", "--family", "vertex", "--k", "2")
    assert code == 0
    assert "verdict: PASS" in out
    assert "cospectral" in out and "whitney" in out


def test_verify_json_conforms_to_schema(capsys, tmp_path, schema):
    out_file = tmp_path / "report.json"
    code, out, err = run_cli(
        capsys, "verify", "--family", "edge-variant4", "--checks", "all",
        "--json", "--out", str(out_file),
    )
    assert code == 0
    report = json.loads(out)
    jsonschema.validate(report, schema)
    assert report == json.loads(out_file.read_text())
    assert report["verdict"] == "PASS"
    names = [c["name"] for c in report["checks"]]
    assert names == [
        "cospectral", "kappa", "kappa_prime", "whitney", "fiedler", "linegraph",
    ]
    kappa_prime = next(c for c in report["checks"] if c["name"] == "kappa_prime")
    assert kappa_prime["computed"]["gamma"]["value"] == 7
    assert kappa_prime["computed"]["gamma"]["witness_checked"] is True


def test_verify_rejects_unknown_check(capsys):
    code, out, err = run_cli(
        capsys, "verify", "--family", "vertex", "--k", "2", "--checks", "nope"
    )
    assert code == 2 and "unknown check" in err


def test_verify_reports_failure_for_wrong_claims(vertex3):
    # same pair, deliberately wrong claim: the report must say FAIL
    wrong = FamilyInstance(
        vertex3.tag, vertex3.k, vertex3.gamma, vertex3.gamma_prime,
        vertex3.plan, vertex3.named,
        ExpectedMetrics(order=18, degree=6, kappa_gamma=5),
    )
    report = _verify_report(wrong, ("kappa",), None)
    assert report["verdict"] == "FAIL"
    check = report["checks"][0]
    assert check["status"] == "FAIL"
    assert "claimed 5" in check["detail"]


def test_connectivity_check_info_when_no_claim(variant4):
    check = _CHECKS["kappa"](variant4, _Metrics(variant4))
    assert check["status"] == "INFO"
    assert "no claim" in check["detail"]


# -- table ---------------------------------------------------------------------


def test_table_text(capsys):
    code, out, err = run_cli(
        capsys, "table", "--family", "vertex", "--kmin", "2", "--kmax", "3"
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 3  # header + 2 rows
    assert "4/3" in lines[1]  # kappa split at k=2


def test_table_json_schema(capsys, schema):
    code, out, err = run_cli(
        capsys, "table", "--family", "edge", "--kmin", "6", "--kmax", "8", "--json"
    )
    assert code == 0
    report = json.loads(out)
    jsonschema.validate(report, schema)
    assert [r["k"] for r in report["rows"]] == [6, 8]
    assert report["rows"][0]["kappa_prime"] == [13, 12]
    assert all(r["cospectral"] for r in report["rows"])


def test_table_argument_validation(capsys):
    code, out, err = run_cli(capsys, "table", "--family", "vertex")
    assert code == 2
    code, out, err = run_cli(
        capsys, "table", "--family", "vertex", "--kmin", "3", "--kmax", "2"
    )
    assert code == 2


# -- analyze ---------------------------------------------------------------------


def test_analyze_file(tmp_path, capsys, schema):
    path = tmp_path / "graphs.g6"
    path.write_text("Bw\n\n@\n")  # blank lines are skipped
    code, out, err = run_cli(
        capsys, "analyze", "--in", str(path), "--json", "--polys"
    )
    assert code == 0
    report = json.loads(out)
    jsonschema.validate(report, schema)
    assert len(report["graphs"]) == 2
    first = report["graphs"][0]
    assert first["order"] == 3 and first["edges"] == 3
    assert first["vertex_connectivity"]["value"] == 2
    assert first["vertex_connectivity"]["witness"] is None
    assert first["char_poly_adjacency"] == ["-2", "-3", "0", "1"]
    assert first["bipartite"] == {
        "by_coloring": False, "by_spectrum": False, "consistent": True,
    }


def test_analyze_stdin(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("A_\n"))
    code, out, err = run_cli(capsys, "analyze", "--in", "-")
    assert code == 0
    assert "n=2" in out


def test_analyze_parse_error_names_line(tmp_path, capsys):
    path = tmp_path / "bad.g6"
    path.write_text("Bw\nB\n")
    code, out, err = run_cli(capsys, "analyze", "--in", str(path))
    assert code == 2
    assert "line 2" in err


def test_analyze_missing_file(capsys):
    code, out, err = run_cli(capsys, "analyze", "--in", "/nonexistent/x.g6")
    assert code == 2


# -- switch ----------------------------------------------------------------------


def test_switch_round_trip(tmp_path, capsys, vertex3):
    graph_file = tmp_path / "g.g6"
    graph_file.write_text(encode_graph6(vertex3.gamma) + "\n")
    plan_file = tmp_path / "plan.json"
    plan_file.write_text(vertex3.plan.to_json())
    out_file = tmp_path / "switched.g6"
    code, out, err = run_cli(
        capsys, "switch", "--in", str(graph_file), "--plan", str(plan_file),
        "--out", str(out_file),
    )
    assert code == 0
    assert "cospectral (adjacency, exact): True" in err
    assert decode_graph6(out_file.read_text().strip()) == vertex3.gamma_prime
    # applying the same plan to the result restores the original
    code, out, err = run_cli(
        capsys, "switch", "--in", str(out_file), "--plan", str(plan_file)
    )
    assert code == 0
    assert decode_graph6(out.strip()) == vertex3.gamma


def test_switch_rejects_inadmissible_plan(tmp_path, capsys):
    graph_file = tmp_path / "g.g6"
    graph_file.write_text("DhC\n")  # 5-path
    plan_file = tmp_path / "plan.json"
    plan_file.write_text('{"n": 5, "classes": [[0, 1, 2]]}')
    code, out, err = run_cli(
        capsys, "switch", "--in", str(graph_file), "--plan", str(plan_file)
    )
    assert code == 1
    assert "plan rejected" in err and "free-vertex-count" in err


def test_switch_wants_exactly_one_graph(tmp_path, capsys):
    graph_file = tmp_path / "two.g6"
    graph_file.write_text("Bw\nBw\n")
    plan_file = tmp_path / "plan.json"
    plan_file.write_text('{"n": 3, "classes": []}')
    code, out, err = run_cli(
        capsys, "switch", "--in", str(graph_file), "--plan", str(plan_file)
    )
    assert code == 2 and "exactly one" in err


def test_switch_order_mismatch_is_usage_error(tmp_path, capsys):
    graph_file = tmp_path / "g.g6"
    graph_file.write_text("Bw\n")
    plan_file = tmp_path / "plan.json"
    plan_file.write_text('{"n": 7, "classes": [[0]]}')
    code, out, err = run_cli(
        capsys, "switch", "--in", str(graph_file), "--plan", str(plan_file)
    )
    assert code == 2


# -- harness ------------------------------------------------------------------------


def test_unknown_verb_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "specpairs", "--help"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "generate" in proc.stdout and "switch" in proc.stdout
