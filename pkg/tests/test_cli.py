from __future__ import annotations

import json
import subprocess
import sys

import pytest

from srgraph import families as fam
from srgraph.cli import main
from srgraph.io import emit_graph6, parse_edge_list, parse_graph6
from srgraph.iso import are_isomorphic, canonical_form
from srgraph.products import ProductKind, product


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_srg_of_c5_file_is_a_fixed_point(tmp_path, capsys):
    path = tmp_path / "c5.g6"
    path.write_text(emit_graph6(fam.cycle(5)) + "\n")
    code, out, _ = run(capsys, "srg", "--in", str(path), "--canonical")
    assert code == 0
    assert out.strip() == emit_graph6(canonical_form(fam.cycle(5)).graph)
    code, out, _ = run(capsys, "srg", str(path))
    assert are_isomorphic(parse_graph6(out.strip()), fam.cycle(5))


def test_output_format_follows_input(tmp_path, capsys):
    path = tmp_path / "p4.txt"
    path.write_text("a b\nb c\nc d\n")
    code, out, _ = run(capsys, "srg", str(path))
    assert code == 0 and out == "n 2\nlabels a d\na d\n"
    code, out, _ = run(capsys, "srg", str(path), "--format", "json")
    data = json.loads(out)
    assert data["labels"] == ["a", "d"] and data["edges"] == [["a", "d"]]


def test_stdin_input(monkeypatch, capsys):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO(emit_graph6(fam.star(3)) + "\n"))
    code, out, _ = run(capsys, "srg", "-")
    assert code == 0 and are_isomorphic(parse_graph6(out.strip()), fam.complete(3))


@pytest.mark.parametrize("cmd, n_edges", [("srgi", 3), ("gstar", 3), ("srs", 3)])
def test_other_transforms(capsys, cmd, n_edges):
    code, out, _ = run(capsys, cmd, "K1,3", "--format", "edges")
    assert code == 0
    assert parse_edge_list(out).edge_count == n_edges


def test_dims_figure5(capsys):
    code, out, _ = run(capsys, "dims", "fig:fig5", "--route", "both", "--basis", "a,c,d,h")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "4" and lines[2] == "4"
    assert lines[-1] == "{a,c,d,h} is a strong metric generator"


def test_dims_json_and_bad_basis(capsys):
    code, out, _ = run(capsys, "dims", "C6", "--json", "--basis", "0,1")
    assert code == 1
    data = json.loads(out)
    assert data["routes"]["srg"]["dimension"] == 3
    assert data["check"] == {"basis": ["0", "1"], "strong_generator": False}


def test_product_and_family(capsys):
    code, out, _ = run(capsys, "product", "--kind", "cartesian", "P2", "P3")
    assert code == 0
    G = parse_edge_list(out)
    assert G.vertex_labels()[0] == "(0,0)"
    assert are_isomorphic(G, product(ProductKind.CARTESIAN, fam.path(2), fam.path(3)))
    code, out, _ = run(capsys, "family", "FP(9)", "--format", "graph6")
    assert code == 0 and parse_graph6(out.strip()).n == 15


def test_iso_exit_codes(capsys):
    code, out, _ = run(capsys, "iso", "C5", "compl(C5)")
    assert code == 0 and out.startswith("isomorphic")
    code, out, _ = run(capsys, "iso", "C6", "compl(C6)", "--json")
    assert code == 1 and json.loads(out) == {"isomorphic": False}


def test_verify_pass(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "T20", "--max-order", "4")
    assert code == 0 and out.startswith("T20: PASS")


def test_verify_honest_fail(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "T27", "--instance", "fig:fig12;K3")
    assert code == 1
    assert "T27: FAIL" in out and "replay: srgraph verify --theorem T27" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "T5", "--max-order", "3", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["theorem"] == "T5" and data["verdict"] == "PASS"
    assert data["instances"][0]["checked"] == 1 + 2 + 8


def test_search(capsys, tmp_path):
    code, out, _ = run(capsys, "search", "--target", "C7", "--max-order", "7")
    assert code == 0 and out.startswith("FOUND") and "compl(C7)" in out
    frontier = tmp_path / "k12.json"
    code, out, _ = run(capsys, "search", "--target", "K1,2", "--max-order", "5",
                       "--frontier", str(frontier), "--json")
    assert code == 0 and json.loads(out)["outcome"] == "EXHAUSTED"
    assert frontier.exists()


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["srg"],
        ["bogus"],
        ["dims", "C(5)"],
        ["product", "--kind", "weird", "P2", "P3"],
        ["verify", "--theorem", "T99"],
        ["verify", "--theorem", "T3", "--max-order", "7"],
        ["verify", "--theorem", "T20", "--jobs", "0"],
        ["search", "--target", "P4", "--max-order", "9"],
        ["srg", "/nonexistent/dir/file.g6"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code = main(argv)
    capsys.readouterr()
    assert code == 2


def test_malformed_graph6_file(tmp_path, capsys):
    path = tmp_path / "bad.g6"
    path.write_text("A__\n")
    code, _, err = run(capsys, "srg", str(path))
    assert code == 2 and "MalformedInput" in err


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "srgraph", "dims", "petersen"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0 and proc.stdout.splitlines()[0] == "8"
