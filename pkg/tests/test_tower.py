from __future__ import annotations

import pytest
from hypothesis import given, settings
from strategies import exprs

from towercoh.tower import (
    ConstRep,
    Dual,
    ExtPow,
    Level,
    LineTwist,
    SchurApply,
    SymPow,
    TautQ,
    TautS,
    Tower,
    builtin_towers,
    canonical_class,
    describe_line,
    dsum,
    get_tower,
    nf,
    nf_character,
    nf_dual,
    rank,
    render,
    tensor,
)


def test_builtin_dimensions():
    dims = {name: t.dimension() for name, t in builtin_towers().items()}
    assert dims == {"chow-hat": 8, "y3": 13, "p-rho": 7, "g3v": 6, "z": 14, "pv": 4, "g2v": 6}


def test_only_z_has_a_resolved_ambient():
    assert [name for name, t in builtin_towers().items() if not t.is_honest()] == ["z"]
    assert get_tower("z").n(1) == 15 - 6


def test_unknown_tower():
    with pytest.raises(KeyError):
        get_tower("nope")


def test_tower_validates_ranks():
    with pytest.raises(ValueError):
        Tower("bad", 3, (Level(3),))
    with pytest.raises(ValueError):
        Tower("bad", 3, (Level(1, TautQ(0)),))


def test_ranks_of_expressions():
    pv = get_tower("pv")
    assert rank(TautQ(0), pv) == 4
    assert rank(ExtPow(2, TautQ(0)), pv) == 6
    assert rank(SymPow(2, Dual(TautQ(0))), pv) == 10
    assert rank(dsum((TautQ(0), 2), TautS(0)), pv) == 9
    assert rank(ConstRep((1, 1, 0, 0, 0)), pv) == 10
    y3 = get_tower("y3")
    assert rank(tensor(TautS(1), Dual(TautQ(1))), y3) == 9


def test_schur_of_tautological_matches_rank():
    g = get_tower("g3v")
    assert rank(SchurApply((2, 1, 0), TautS(0)), g) == 8
    assert rank(SchurApply((1, 1, 1), TautS(0)), g) == 1


def test_canonical_class_of_projective_space():
    pv = get_tower("pv")
    assert describe_line(pv, canonical_class(pv)) == {"detS@0": -5, "detV*": 1}


def test_canonical_class_of_y3():
    y3 = get_tower("y3")
    assert describe_line(y3, canonical_class(y3)) == {"detS@0": -14, "detS@1": -6, "detV*": 10}


def test_render_forms():
    assert render(tensor(TautS(1), Dual(TautQ(0)), LineTwist(0, -2))) == "S@1 * dual(Q@0) * O(-2 H@0)"
    assert render(dsum((TautQ(0), 2), ConstRep((1, 0)))) == "2 x Q@0 + rep[1,0]"
    assert render(tensor()) == "O"


@settings(max_examples=40, deadline=None)
@given(exprs(get_tower("y3")))
def test_dual_of_normal_form_inverts_the_character(e):
    y3 = get_tower("y3")
    a = nf(e, y3)
    chi = nf_character(a)
    chi_dual = nf_character(nf_dual(a))
    assert chi_dual == {tuple(-x for x in m): c for m, c in chi.items()}
    assert nf(Dual(Dual(e)), y3) == a
