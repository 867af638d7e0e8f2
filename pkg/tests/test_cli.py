from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from strategies import exprs

from towercoh.cli import ParseError, main, parse_expression, tokenize
from towercoh.tower import (
    TRIVIAL,
    ConstRep,
    Dual,
    ExtPow,
    LineTwist,
    SchurApply,
    SymPow,
    TautQ,
    TautS,
    dsum,
    get_tower,
    nf,
    render,
    tensor,
)

Y3 = get_tower("y3")
PV = get_tower("pv")


def _same(a, b, tower) -> bool:
    return nf(a, tower) == nf(b, tower)


def test_tokenizer():
    assert tokenize("sym^2(S@1) * O(-2H)") == ["sym", "^", "2", "(", "S", "@", "1", ")", "*", "O", "(", "-", "2", "H", ")"]


@pytest.mark.parametrize(
    "text, expected",
    [
        ("S", TautS(1)),
        ("Q@0", TautQ(0)),
        ("dual(Q)", Dual(TautQ(1))),
        ("sym^2(dual(S@0))", SymPow(2, Dual(TautS(0)))),
        ("ext^2(Q@0)", ExtPow(2, TautQ(0))),
        ("sch[1,1,0](Q)", SchurApply((1, 1, 0), TautQ(1))),
        ("rep[1,0,0,0,0]", ConstRep((1, 0, 0, 0, 0))),
        ("O(L)", LineTwist(0, 1)),
        ("O(-2)", LineTwist(0, -2)),
        ("O(H@1 - 3 L)", tensor(LineTwist(1, 1), LineTwist(0, -3))),
        ("T(-1)", TautQ(0)),
        ("Omega(1)", Dual(TautQ(0))),
        ("S * dual(Q) * O(det Q)", tensor(TautS(1), Dual(TautQ(1)), ExtPow(3, TautQ(1)))),
    ],
)
def test_parse_expressions_on_y3(text, expected):
    assert _same(parse_expression(text, Y3), expected, Y3)


def test_sums_and_copies():
    got = parse_expression("2 x O + Q@0", PV)
    assert _same(got, dsum((TRIVIAL, 2), TautQ(0)), PV)


def test_line_power():
    assert _same(parse_expression("O(L)^3", Y3), LineTwist(0, 3), Y3)
    assert _same(parse_expression("(O(L))^-1", Y3), LineTwist(0, -1), Y3)


@pytest.mark.parametrize("text", ["", "S @", "dual(S", "sym^(S)", "sch[1,2](Q)", "O(X)", "foo", "S S"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_expression(text, Y3)


@settings(max_examples=50, deadline=None)
@given(exprs(Y3))
def test_render_parse_roundtrip(e):
    assert _same(parse_expression(render(e), Y3), e, Y3)


@settings(max_examples=30, deadline=None)
@given(exprs(get_tower("chow-hat")))
def test_render_parse_roundtrip_on_chow_hat(e):
    t = get_tower("chow-hat")
    assert _same(parse_expression(render(e), t), e, t)


def test_cohomology_command_json(capsys):
    code = main(["cohomology", "S * dual(Q) * O(det Q)", "--tower", "y3", "--format", "json"])
    assert code == 0
    out = json.loads(capsys.readouterr().out)
    assert out["degrees"] == {"0": {"dim": 15, "rep": "S²V"}}


def test_cohomology_command_markdown(capsys):
    assert main(["cohomology", "T(-1)", "--tower", "pv"]) == 0
    assert "H^0: V" in capsys.readouterr().out


def test_cohomology_command_writes_file(tmp_path):
    target = tmp_path / "out.json"
    assert main(["cohomology", "O(1)", "--tower", "pv", "--format", "json", "--output", str(target)]) == 0
    assert json.loads(target.read_text())["degrees"]["0"]["dim"] == 5


def test_exit_code_parse_error(capsys):
    assert main(["cohomology", "dual(", "--tower", "pv"]) == 2
    assert main(["cohomology", "O", "--tower", "nope"]) == 2
    assert main(["bogus"]) == 2


def test_exit_code_unsupported_shape():
    assert main(["cohomology", "S@1 * Q@1", "--tower", "z"]) == 3


def test_exit_code_cap(restore_limits):
    # warm the caches first: the cap must still apply
    assert main(["cohomology", "sym^3(Q)", "--tower", "y3"]) == 0
    assert main(["--cap", "10", "cohomology", "sym^3(Q)", "--tower", "y3"]) == 4


def test_verify_unknown_suite():
    assert main(["verify", "nope"]) == 2


def test_verify_writes_artifacts(tmp_path, capsys):
    code = main(["verify", "thm-gvan1", "--output", str(tmp_path)])
    assert code == 0
    names = sorted(p.name for p in tmp_path.iterdir())
    assert names == ["thm-gvan1-quiver.dot", "thm-gvan1-quiver.json", "thm-gvan1.json", "thm-gvan1.md"]
    assert json.loads((tmp_path / "thm-gvan1.json").read_text())["verdict"] == "PASS"
    assert "thm-gvan1: PASS" in capsys.readouterr().err


def test_verify_no_reductions(capsys):
    assert main(["verify", "thm-gvan", "--no-reductions"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["config"]["no_reductions"] is True
    assert len(report["skipped_cells"]) == 67


def test_towers_listing(capsys):
    assert main(["towers", "--format", "json"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert {r["name"] for r in rows} == {"chow-hat", "y3", "p-rho", "g3v", "z", "pv", "g2v"}
