import csv
import io
import json

import pytest

from bsotools.cli import main
from bsotools.graph import complete_bipartite_graph, complete_graph, cycle_graph, path_graph, to_edge_list, to_graph6


@pytest.fixture
def g6_file(tmp_path):
    path = tmp_path / "graphs.g6"
    path.write_text("\n".join(to_graph6(g) for g in (cycle_graph(5), complete_graph(2), path_graph(4))) + "\n")
    return path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_indices_table(capsys, g6_file):
    code, out, _ = run(capsys, "indices", g6_file)
    assert code == 0
    rows = [line.split() for line in out.splitlines()[2:]]
    values = {(r[0].rsplit(":", 1)[1], r[1]): r[2] for r in rows}
    assert values[("1", "BSO")] == "3.5355339"
    assert values[("2", "BSO")] == "1.4142136" and values[("2", "SO")] == "1.4142136"
    assert values[("2", "R")] == "1.0000000" and values[("2", "H")] == "1.0000000"
    assert values[("3", "H")] == "1.8333333"
    assert len(rows) == 30


def test_indices_json_full_precision(capsys, g6_file):
    code, out, _ = run(capsys, "indices", g6_file, "--format", "json")
    data = json.loads(out)
    bso = [r["value"] for r in data if r["index"] == "BSO"]
    assert bso[0] == 5 / 2**0.5 or abs(bso[0] - 5 / 2**0.5) < 1e-15
    assert repr(bso[0]) in out


def test_indices_csv(capsys, g6_file):
    code, out, _ = run(capsys, "indices", g6_file, "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows[0].keys() == {"graph", "index", "value"}
    assert len(rows) == 30


def test_edge_list_input(capsys, tmp_path):
    path = tmp_path / "p4.edges"
    path.write_text(to_edge_list(path_graph(4)))
    code, out, _ = run(capsys, "indices", path, "--format", "json")
    assert code == 0
    h = next(r for r in json.loads(out) if r["index"] == "H")
    assert h["value"] == pytest.approx(11 / 6)


def test_input_format_override(capsys, tmp_path):
    path = tmp_path / "graph.txt"
    path.write_text("0 1\n1 2\n")
    code, _, err = run(capsys, "indices", path)
    assert code == 1 and "--input-format" in err
    code, _, _ = run(capsys, "indices", path, "--input-format", "edges")
    assert code == 0


def test_parse_and_domain_errors_reported_per_line(capsys, tmp_path):
    path = tmp_path / "mixed.g6"
    path.write_text("Bg\nB g\nB?\n")
    code, out, err = run(capsys, "indices", path)
    assert code == 1
    assert f"{path}:2: byte 1" in err
    assert f"{path}:3: disconnected" in err
    assert f"{path}:1" in out


def test_bounds_c6(capsys, tmp_path):
    path = tmp_path / "c6.edges"
    path.write_text(to_edge_list(cycle_graph(6)))
    code, out, _ = run(capsys, "bounds", path, "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 27
    for r in rows:
        if not r["skipped"] and r["id"] not in ("T3.12", "C3.1", "C3.2"):
            assert r["equality_detected"] and r["equality_predicted"] and r["consistent"]


def test_bounds_k23_and_k5(capsys, tmp_path):
    path = tmp_path / "g.g6"
    path.write_text(to_graph6(complete_bipartite_graph(2, 3)) + "\n" + to_graph6(complete_graph(5)) + "\n")
    code, out, _ = run(capsys, "bounds", path, "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    k23 = {r["id"]: r for r in rows if r["graph"].endswith(":1")}
    k5 = {r["id"]: r for r in rows if r["graph"].endswith(":2")}
    assert k23["T3.4"]["equality_detected"] == "True" and k23["T3.4"]["consistent"] == "True"
    for bid in ("C3.3-lower", "C3.3-upper", "C3.4-lower", "C3.4-upper"):
        assert k5[bid]["skipped"] == "True" and k5[bid]["skip_reason"] == "complement-zero-degree"


def test_bounds_id_filter(capsys, g6_file):
    code, out, _ = run(capsys, "bounds", g6_file, "--id", "T3.4", "--id", "T3.2", "--format", "json")
    assert code == 0
    assert {r["id"] for r in json.loads(out)} == {"T3.4", "T3.2"}


def test_bounds_unknown_id(capsys, g6_file):
    with pytest.raises(SystemExit):
        main(["bounds", str(g6_file), "--id", "T9.9"])


def test_extremal_n5(capsys):
    code, out, _ = run(capsys, "extremal", "--n", 5, "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert round(d["min_value"], 4) == 3.6503 and round(d["max_value"], 4) == 4.1231
    assert d["closed_form_min_matches"] and d["closed_form_max_matches"]
    assert d["min_trees"] == [to_graph6(path_graph(5))] or len(d["min_trees"]) == 1


def test_extremal_chemical_table(capsys):
    code, out, _ = run(capsys, "extremal", "--n", 8, "--chemical")
    assert code == 0
    table = dict(line.split(None, 1) for line in out.splitlines())
    assert table["chemical_upper_bound"].strip() == "6.5382118"
    assert table["chemical_bound_holds"].strip() == "True"
    assert table["chemical_bound_attained"].strip() == "True"


def test_extremal_out_of_range(capsys):
    code, _, err = run(capsys, "extremal", "--n", 2)
    assert code != 0 and "3" in err


def test_extremal_other_index(capsys):
    code, out, _ = run(capsys, "extremal", "--n", 6, "--index", "F", "--format", "csv")
    assert code == 0
    row = next(csv.DictReader(io.StringIO(out)))
    assert row["index"] == "F" and row["closed_form_min"] == ""


def test_verify_random_structured_only(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "random", "--count", 0)
    assert code == 0
    assert "overall: PASS" in out
    assert "sweep over 46 graphs" in out


def test_verify_trees(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "trees", "--max-n", 8)
    assert code == 0 and "[FAIL]" not in out


def test_verify_deterministic_json(capsys):
    args = ("verify", "--suite", "random", "--count", 50, "--seed", 7, "--format", "json")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second
    assert json.loads(first)["passed"]


def test_bounds_output_byte_identical(capsys, g6_file):
    _, a, _ = run(capsys, "bounds", g6_file, "--format", "csv")
    _, b, _ = run(capsys, "bounds", g6_file, "--format", "csv")
    assert a == b


def test_bad_tol(capsys, g6_file):
    code, _, err = run(capsys, "indices", g6_file, "--tol", "0")
    assert code == 2 and "tol" in err
