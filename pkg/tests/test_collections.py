from __future__ import annotations

from functools import lru_cache

import pytest

from towercoh import collections as col
from towercoh.tower import TRIVIAL, LineTwist, get_tower
from towercoh.weights import RepSum


@lru_cache(maxsize=None)
def _table(name: str, no_reductions: bool = False) -> col.ExtTable:
    return col.ext_table(col.get_collection(name), None, no_reductions)


def _beilinson(twists: range = range(1, 1)) -> col.CollectionSpec:
    pv = get_tower("pv")
    objects = [(f"O({k})", LineTwist(0, k)) for k in range(5)]
    return col.simple_collection("beilinson", pv, objects, LineTwist(0, 1), twists)


def test_citation_format():
    assert col.citation("duality-13").startswith("duality-13: ")
    with pytest.raises(KeyError):
        col.citation("no-such-rule")


def test_toggleable_rules():
    toggles = {r.id for r in col.RULES.values() if r.toggleable}
    assert "duality-13" in toggles
    assert "blowup-to-y3" not in toggles


def test_beilinson_collection_is_strong_exceptional():
    table = col.ext_table(_beilinson(), [0])
    assert col.check_strong_exceptional(table).verdict == "PASS"
    q = col.quiver(table)
    assert len(q["edges"]) == 10


def test_single_line_is_a_lefschetz_block_up_to_its_length():
    pv = get_tower("pv")
    ok = col.simple_collection("o", pv, [("O", TRIVIAL)], LineTwist(0, 1), range(1, 5))
    assert col.check_lefschetz(col.ext_table(ok)).verdict == "PASS"
    too_long = col.simple_collection("o", pv, [("O", TRIVIAL)], LineTwist(0, 1), range(1, 6))
    assert col.check_lefschetz(col.ext_table(too_long)).verdict == "FAIL"


def test_reversed_order_is_not_exceptional():
    pv = get_tower("pv")
    objects = [("O(1)", LineTwist(0, 1)), ("O", TRIVIAL)]
    table = col.ext_table(col.simple_collection("rev", pv, objects, LineTwist(0, 1)), [0])
    assert col.check_strong_exceptional(table).verdict == "FAIL"


def test_duplicate_object_names_are_rejected():
    pv = get_tower("pv")
    with pytest.raises(ValueError):
        col.simple_collection("dup", pv, [("A", TRIVIAL), ("A", TRIVIAL)], LineTwist(0, 1))


def test_chow_diagonal_cell():
    cell = col.compute_cell(col.get_collection("chow"), 1, 1, 0)
    assert cell.computed
    assert cell.rep(0) == RepSum.trivial(5)
    assert col.cell_verdict(cell, "trivial")[0] == "PASS"


def test_cell_json_schema():
    cell = _table("chow")[(3, 4, 0)]
    data = cell.to_json("chow", "PASS")
    assert set(data) == {"collection", "cell", "mode", "citations", "degrees", "verdict"}
    assert data["cell"] == {"i": 3, "j": 4, "t": 0}
    assert data["degrees"] == {"0": {"dim": 5, "rep": "V*"}}


def test_chow_records_twist_five_without_grading_it():
    spec = col.get_collection("chow")
    assert spec.extra_twists == (5,)
    table = col.ext_table(spec, [5])
    nonzero = {k: c for k, c in table.cells.items() if c.degrees}
    assert len(nonzero) == 9
    assert all(set(c.degrees) == {8} for c in nonzero.values())


def test_chow_duality_check_covers_sixteen_pairs():
    rep = col.chow_duality_check(range(0, 2))
    assert rep["checked"] == 32
    assert rep["verdict"] == "PASS"


def test_y_cells_all_carry_citations():
    table = _table("y-tilde")
    assert len(table.cells) == 160
    assert all(c.citations for c in table.cells.values())


def test_y_duality_route_is_used_for_high_twists():
    table = _table("y-tilde")
    cell = table[(4, 4, 7)]
    assert any(c.startswith("duality-13") for c in cell.citations)
    assert cell.mode == "reduced"


def test_y_special_cells():
    table = _table("y-tilde")
    assert table[(1, 4, 0)].rep(0).modulo_det() == RepSum.single((0, 0, 0, 0, -2)).modulo_det()
    assert table[(2, 4, 0)].rep(0).modulo_det() == RepSum.single((0, 0, 0, 0, -1)).modulo_det()
    assert not table[(3, 4, 0)].degrees
    second = table[(2, 4, 0)]
    assert any(a.startswith("restriction-kernel-acyclic") for a in second.assumptions)


def test_no_reductions_skips_cells_without_failing():
    table = _table("y-tilde", True)
    skipped = [k for k, c in table.cells.items() if c.status == "skipped"]
    assert len(skipped) == 67
    assert {k for k in skipped if k[2] < 5} == {(1, 4, 0), (2, 4, 0), (3, 4, 0)}
    # the shifted last row already needs duality at t=5, the shifted last column still not at t=6
    assert {k for k in skipped if k[2] == 5} == {(4, 1, 5), (4, 2, 5), (4, 3, 5)}
    assert {k for k in table.cells if k[2] == 6} - set(skipped) == {(1, 4, 6), (2, 4, 6), (3, 4, 6)}
    assert col.check_lefschetz(table).verdict == "PASS"
    assert col.check_strong_exceptional(table).verdict == "PASS"


def test_quiver_dot_output():
    q = col.quiver(_table("chow"))
    dot = col.quiver_dot(q)
    assert dot.startswith("digraph")
    assert '"F3" -> "F2"' in dot


def test_cohomology_table_on_z():
    rep = col.verify_z_table(range(0, 11))
    assert rep["verdict"] == "PASS"
    by_key = {(r["family"], r["k"]): r for r in rep["rows"]}
    assert by_key[("line", 10)]["computed"] == {"13": 1}
    assert by_key[("tangent", 0)]["computed"] == {"0": 24}
    assert all(not r["computed"] for r in rep["rows"] if r["family"] == "twisted-by-N")


def test_z_tower_cited_inputs():
    res = col.evaluate(col.pulled_back_e_dual(1), get_tower("z"))
    assert res.dims() == {0: 1}
    assert any(a.startswith("end-e-simple") for a in res.assumptions)


def test_invariants_are_derived():
    inv = col.invariants_Y()
    assert inv["steps"]["h_restricted_tangent"] == [24, 0, 1]
    assert inv["steps"]["h_O_Z_M"] == {"0": 5}
    assert {k: v["value"] for k, v in inv["invariants"].items()} == {
        "M3": 10,
        "c2M": 40,
        "euler": -50,
        "h11": 1,
        "h12": 26,
    }
