from __future__ import annotations

import json
import shlex

import pytest

from srgraph import families as fam
from srgraph import theorems as th
from srgraph.cli import main
from srgraph.errors import GridTooLarge, InvalidParameter
from srgraph.graph import overlay
from srgraph.iso import are_isomorphic
from srgraph.products import ProductKind, product
from srgraph.srg import srg


def test_registry_covers_every_grid_table():
    grids = th.load_grids()
    assert set(grids) == set(th.THEOREMS)
    for tid, cfg in grids.items():
        assert cfg["anchor"]
        assert th.grid_instances(tid) or "exhaustive" in cfg


def test_aliases_and_unknown_ids():
    assert th.resolve_id("T3") == "T3/T4"
    assert th.resolve_id("t4") == "T3/T4"
    assert th.resolve_id("p30") == "P30"
    with pytest.raises(InvalidParameter):
        th.resolve_id("T99")


def test_cross_grid_expands_to_all_pairs():
    inst = th.grid_instances("T20")
    assert len(inst) == 49 and "C5;K1,3" in inst and "K1,3;C5" in inst


def test_theorem20_on_c3_c3():
    rep = th.verify_theorem("T20", instances=["C3;C3"])
    assert rep.verdict == "PASS"
    assert rep.instances == [{"instance": "C3;C3", "status": "pass"}]


def test_theorem12_on_c5():
    assert th.check_theorem12([fam.cycle(5)]).status == "pass"
    rep = th.verify_theorem("T12", instances=["C5"])
    assert rep.verdict == "PASS"


def test_theorem27_reports_the_figure_instance_as_fail():
    rep = th.verify_theorem("T27", instances=["fig:fig12;K3"])
    assert rep.verdict == "FAIL"
    cx = rep.counterexample
    assert cx["instance"] == "fig:fig12;K3"
    assert cx["replay"].startswith("srgraph verify --theorem T27 --instance ")
    lhs = th.parse_instance("g6:" + cx["graphs"]["lhs"])[0]
    assert lhs.edge_count == 51


@pytest.mark.parametrize("inst", ["C7;K3", "P4;K3", "C6;K3", "K3;K3", "K4;K3"])
def test_theorem27_other_instances_pass(inst):
    assert th.verify_theorem("T27", instances=[inst]).verdict == "PASS"


def test_uncorrected_theorem27_fails_on_k3_k3():
    K3 = fam.complete(3)
    N3 = fam.empty(3)
    lhs = srg(product(ProductKind.DIRECT, K3, K3))
    # the earlier form keeps the lexicographic part even for complete G
    rhs = overlay(product(ProductKind.CARTESIAN, K3, N3), product(ProductKind.LEXICOGRAPHIC, srg(K3), N3))
    rhs = overlay(rhs, product(ProductKind.CARTESIAN, N3, K3))
    assert not are_isomorphic(lhs, rhs)
    assert are_isomorphic(lhs, product(ProductKind.CARTESIAN, K3, K3))


def test_report_json_schema():
    rep = th.verify_theorem("C28")
    data = json.loads(json.dumps(rep.to_json()))
    assert set(data) >= {"theorem", "anchor_quote", "instances", "verdict", "elapsed_ms"}
    assert data["theorem"] == "C28" and data["verdict"] == "PASS"
    assert data["anchor_quote"] == th.load_grids()["C28"]["anchor"]
    assert [i["instance"] for i in data["instances"]] == ["K3;K3", "K3;K4", "K4;K4"]
    assert isinstance(data["elapsed_ms"], float)


def test_exhaustive_report_counts_graphs():
    rep = th.verify_theorem("T3/T4", max_order=4)
    assert rep.verdict == "PASS"
    # connected labeled graphs of orders 1..4: 1 + 1 + 4 + 38
    assert rep.instances[0]["checked"] == 44
    assert "44 checked" in rep.summary()


def test_max_order_drops_large_instances():
    rep = th.verify_theorem("C28", max_order=3)
    assert [i["instance"] for i in rep.instances] == ["K3;K3"]
    rep = th.verify_theorem("C28", max_order=2)
    assert rep.verdict == "SKIPPED" and rep.reason


def test_skipped_when_no_instance_meets_hypotheses():
    rep = th.verify_theorem("C28", instances=["P3;K3"])
    assert rep.verdict == "SKIPPED"
    assert "K_r" in rep.reason


def test_grid_too_large():
    with pytest.raises(GridTooLarge):
        th.verify_theorem("T3/T4", max_order=7)
    with pytest.raises(GridTooLarge):
        th.verify_theorem("T20", instances=["C8;C8"])


def test_wrong_arity_rejected():
    with pytest.raises(InvalidParameter):
        th.verify_theorem("T20", instances=["C5"])


def test_parallel_exhaustive_matches_serial():
    ids = ["T3/T4", "T5", "T8", "R41"]
    serial = th.exhaustive_checks(ids, max_order=5, jobs=1)
    parallel = th.exhaustive_checks(ids, max_order=5, jobs=2)
    assert serial == parallel
    assert all(v[2] is None for v in serial.values())


def test_fail_replay_round_trip(monkeypatch, capsys):
    real = th.THEOREMS["T20"]

    def broken(gs):
        if any(g.n == 5 for g in gs):
            return th.fail("planted failure", G=gs[0])
        return real.check(gs)

    monkeypatch.setitem(th.THEOREMS, "T20", th.Theorem("T20", broken, 2))
    assert main(["verify", "--theorem", "T20"]) == 1
    out = capsys.readouterr().out
    assert "T20: FAIL" in out and "planted failure" in out
    replay = out.split("replay: ")[1].strip()
    argv = shlex.split(replay)
    assert argv[0] == "srgraph"

    assert main(argv[1:] + ["--json"]) == 1
    data = json.loads(capsys.readouterr().out)
    assert data["verdict"] == "FAIL" and len(data["instances"]) == 1

    monkeypatch.setitem(th.THEOREMS, "T20", real)
    assert main(argv[1:]) == 0
    assert "T20: PASS" in capsys.readouterr().out


def test_exhaustive_failure_replays_on_the_reported_graph(monkeypatch, capsys):
    real = th.THEOREMS["T8"]

    def broken(gs):
        if gs[0].n == 4 and gs[0].edge_count == 3:
            return th.fail("planted failure")
        return real.check(gs)

    monkeypatch.setitem(th.THEOREMS, "T8", th.Theorem("T8", broken, 1))
    rep = th.verify_theorem("T8", max_order=4)
    assert rep.verdict == "FAIL"
    G = th.parse_instance(rep.counterexample["instance"])[0]
    assert G.n == 4 and G.edge_count == 3 and G.is_connected()
    argv = shlex.split(rep.counterexample["replay"])[1:]
    assert main(argv) == 1
    capsys.readouterr()


@pytest.mark.parametrize(
    "tid",
    ["OBS2", "P15", "P16", "P19", "EQ3", "T21", "C23", "L24", "R25", "C29", "P30", "P31", "R32",
     "T33", "T34", "P35", "L36", "T37", "T38", "L39", "L40", "L41b", "P42", "P43", "P44", "P45",
     "COR-SR", "SRS-EX"],
)
def test_grid_statements_pass(tid):
    rep = th.verify_theorem(tid)
    assert rep.verdict == "PASS", rep.summary()


@pytest.mark.parametrize("tid", ["OBS1", "R1", "R2", "L6", "L7", "L9", "P10", "P11", "P13", "C17", "R41"])
def test_exhaustive_statements_pass_to_order_5(tid):
    rep = th.verify_theorem(tid, max_order=5)
    assert rep.verdict == "PASS", rep.summary()
