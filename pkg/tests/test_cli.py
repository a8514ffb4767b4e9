import io
import json

import pytest

from whitneyprod.cli import main
from whitneyprod.graphs import graph_to_json, named


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_dim_named_house(capsys):
    code, out, _ = run_cli(capsys, "dim", "named:house")
    assert code == 0
    assert json.loads(out) == {"dim": "22/15"}


def test_betti_product_pipe(capsys, monkeypatch):
    code, out, _ = run_cli(capsys, "product", "named:cycle:4", "named:cycle:4")
    assert code == 0
    monkeypatch.setattr("sys.stdin", io.StringIO(out))
    code, out2, _ = run_cli(capsys, "betti")
    assert code == 0
    assert json.loads(out2) == {"betti": [1, 2, 1]}


def test_kunneth_verb(capsys):
    code, out, _ = run_cli(capsys, "kunneth", "named:house", "named:sun:1,0,0,0")
    assert code == 0
    payload = json.loads(out)
    assert payload["lhs"] == [1, 2, 1] and payload["ok"] is True


def test_euler_and_poincare(capsys):
    code, out, _ = run_cli(capsys, "euler", "named:octahedron")
    assert code == 0 and json.loads(out)["euler"] == 2
    code, out, _ = run_cli(capsys, "poincare", "named:house")
    assert code == 0 and json.loads(out)["poincare"] == [1, 1, 0]


def test_curvature_output_fractions(capsys):
    code, out, _ = run_cli(capsys, "curvature", "named:icosahedron")
    payload = json.loads(out)
    assert code == 0
    assert payload["total"] == "2"
    assert set(payload["curvature"]) == {"1/6"}


def test_chromatic_product(capsys):
    code, out, _ = run_cli(capsys, "chromatic", "named:complete:2", "named:complete:2")
    assert code == 0 and json.loads(out)["chromatic"] == 3


def test_contractible_and_sphere(capsys):
    code, out, _ = run_cli(capsys, "contractible", "named:cycle:4")
    assert code == 0 and json.loads(out)["contractible"] is False
    code, out, _ = run_cli(capsys, "sphere-check", "named:octahedron", "-d", "2")
    assert code == 0 and json.loads(out)["sphere"] is True


def test_refine_reports_dims(capsys):
    code, out, _ = run_cli(capsys, "refine", "named:house", "-n", "1")
    payload = json.loads(out)
    assert code == 0
    assert [s["dim"] for s in payload["steps"]] == ["22/15", "37/24"]


def test_enhance_then_euler_same_chi(capsys):
    code, out, _ = run_cli(capsys, "enhance", "named:house")
    assert code == 0
    g = json.loads(out)
    assert len(g["labels"]) == 12


def test_join_and_suspend(capsys):
    code, out, _ = run_cli(capsys, "suspend", "named:cycle:4")
    assert code == 0
    assert len(json.loads(out)["labels"]) == 6


def test_export_dot_and_triplet(capsys):
    code, out, _ = run_cli(capsys, "export", "named:cycle:3", "--format", "dot")
    assert code == 0 and out.startswith("graph G {")
    code, out, _ = run_cli(capsys, "export", "named:complete:3",
                           "--format", "triplet", "--grade", "1")
    assert code == 0
    assert out.splitlines()[0] == "1 3 3"


def test_unknown_named_graph_exits_2(capsys):
    code, _, err = run_cli(capsys, "dim", "named:nonsense")
    assert code == 2 and "error" in err


def test_malformed_json_exits_2(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("{broken"))
    code, _, err = run_cli(capsys, "betti")
    assert code == 2


def test_size_cap_exits_3(capsys):
    code, _, err = run_cli(capsys, "--max-product-vertices", "10",
                           "product", "named:octahedron", "named:octahedron")
    assert code == 3
    assert "--max-product-vertices" in err


def test_byte_identical_reruns(capsys):
    _, out1, _ = run_cli(capsys, "product", "named:erdos_renyi:8,50,7",
                         "named:complete:2")
    _, out2, _ = run_cli(capsys, "product", "named:erdos_renyi:8,50,7",
                         "named:complete:2")
    assert out1 == out2


def test_pretty_mode(capsys):
    code, out, _ = run_cli(capsys, "--pretty", "dim", "named:house")
    assert code == 0 and "dim" in out and ":" in out and "22/15" in out


def test_approx_field(capsys):
    code, out, _ = run_cli(capsys, "--approx", "dim", "named:house")
    payload = json.loads(out)
    assert abs(payload["dim_approx"] - 22 / 15) < 1e-9


def test_file_input(tmp_path, capsys):
    path = tmp_path / "g.json"
    path.write_text(graph_to_json(named("cycle", [5])))
    code, out, _ = run_cli(capsys, "euler", str(path))
    assert code == 0 and json.loads(out)["euler"] == 0


def test_derham_check_verb(capsys):
    code, out, _ = run_cli(capsys, "derham-check", "named:complete:2",
                           "named:complete:2")
    payload = json.loads(out)
    assert code == 0 and payload["ok"] is True
    assert payload["tensor_dims"] == [4, 4, 1]


def test_product_metadata(capsys):
    code, out, _ = run_cli(capsys, "product", "--metadata",
                           "named:complete:2", "named:complete:2")
    payload = json.loads(out)
    assert code == 0
    assert payload["f_vector"] == [9, 16, 8]
    assert payload["euler"] == 1
    assert payload["dim"] == "2"
    assert len(payload["provenance"]) == 9
