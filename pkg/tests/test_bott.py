from __future__ import annotations

from math import comb

import pytest
from hypothesis import given, settings
from strategies import HONEST_TOWERS, exprs, serre_holds

from towercoh.bott import CohomologyTable, cohomology, euler_characteristic, rep_name
from towercoh.schur import rep_product
from towercoh.tower import (
    ConstRep,
    Dual,
    LineTwist,
    SymPow,
    TautQ,
    TautS,
    UnsupportedShape,
    dsum,
    get_tower,
    tensor,
)
from towercoh.weights import RepSum

V = RepSum.single((0, 0, 0, 0, -1))


@pytest.mark.parametrize("k", range(0, 5))
def test_sections_of_line_bundles_on_projective_space(k):
    table = cohomology(LineTwist(0, k), get_tower("pv"))
    assert table.entries == {0: RepSum.single((k, 0, 0, 0, 0))}
    assert table[0].dim() == comb(k + 4, 4)


def test_projective_space_negative_twists():
    pv = get_tower("pv")
    for k in range(1, 5):
        assert cohomology(LineTwist(0, -k), pv).is_zero()
    assert cohomology(LineTwist(0, -5), pv).dims() == {4: 1}
    assert cohomology(LineTwist(0, -6), pv).dims() == {4: 5}


def test_euler_sequence_on_projective_space():
    pv = get_tower("pv")
    assert cohomology(TautQ(0), pv).entries == {0: V}
    assert cohomology(Dual(TautQ(0)), pv).is_zero()


def test_borel_weil_on_g3v():
    g = get_tower("g3v")
    assert cohomology(TautS(0), g).entries == {0: RepSum.single((1, 0, 0, 0, 0))}
    assert cohomology(SymPow(2, TautS(0)), g).entries == {0: RepSum.single((2, 0, 0, 0, 0))}
    assert cohomology(LineTwist(0, 1), g)[0].dim() == 10


def test_euler_pushforward_on_p_rho():
    assert cohomology(TautQ(1), get_tower("p-rho")).entries == {0: V}


def test_cohomology_is_additive():
    pv = get_tower("pv")
    a, b = LineTwist(0, 2), tensor(TautQ(0), LineTwist(0, -6))
    ha, hb = cohomology(a, pv), cohomology(b, pv)
    total = cohomology(dsum((a, 2), b), pv)
    for d in set(ha.entries) | set(hb.entries):
        assert total[d] == ha[d].scale(2) + hb[d]


def test_constant_factor_comes_out():
    g = get_tower("g2v")
    w = (1, 0, 0, 0, -1)
    plain = cohomology(TautQ(0), g)
    twisted = cohomology(tensor(ConstRep(w), TautQ(0)), g)
    for d, r in plain.entries.items():
        assert twisted[d] == rep_product(RepSum.single(w), r)


def test_euler_characteristic_matches_table():
    pv = get_tower("pv")
    e = tensor(TautQ(0), LineTwist(0, -7))
    assert euler_characteristic(e, pv) == cohomology(e, pv).chi()


def test_resolved_ambient_needs_complexes():
    with pytest.raises(UnsupportedShape):
        cohomology(tensor(TautS(1), TautQ(1)), get_tower("z"))


def test_table_json_and_names():
    table = cohomology(TautQ(0), get_tower("pv"))
    assert table.to_json() == {"0": {"dim": 5, "rep": "V"}}
    assert rep_name(RepSum.single((0, 0, 0, -1, -1))) == "∧²V"
    assert rep_name(RepSum.single((1, 1, 1, 1, 0))) == "V ⊗ (det V*)^1"
    assert CohomologyTable({}, "pv").pretty() == "all cohomology vanishes"


def _serre_case(name):
    tower = get_tower(name)

    @settings(max_examples=15, deadline=None)
    @given(exprs(tower))
    def check(e):
        assert serre_holds(e, tower)

    return check


@pytest.mark.parametrize("name", HONEST_TOWERS)
def test_serre_duality_on_random_expressions(name):
    _serre_case(name)()
