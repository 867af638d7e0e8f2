"""The eight acceptance criteria.  Each test prints one PASS/FAIL line.

Run directly with ``python3 tests/test_acceptance.py`` or through pytest, which also
lists the lines in its terminal summary.
"""

from __future__ import annotations

import io
import random
import time
from contextlib import contextmanager, redirect_stderr, redirect_stdout
from fractions import Fraction
from itertools import combinations
from math import comb
from pathlib import Path

from conftest import ACCEPTANCE
from strategies import HONEST_TOWERS, random_expr, serre_holds

from towercoh import cli
from towercoh import collections as col
from towercoh.plucker import antidiag, conic_point, run_suite
from towercoh.schur import lr_product, plethysm_apply, power_op, rep_product
from towercoh.suites import Config, run
from towercoh.tower import get_tower
from towercoh.weights import RepSum, weyl_dim

V = (0, 0, 0, 0, -1)


@contextmanager
def criterion(n: int, title: str):
    try:
        yield
    except BaseException:
        ACCEPTANCE[n] = ("FAIL", title)
        print(f"criterion {n}: FAIL  {title}")
        raise
    ACCEPTANCE[n] = ("PASS", title)
    print(f"criterion {n}: PASS  {title}")


def _mod_det(w: tuple[int, ...] | None) -> RepSum:
    return RepSum.zero(5) if w is None else RepSum.single(w).modulo_det()


def _edge_labels(quiver: dict) -> dict[tuple[str, str], RepSum]:
    out = {}
    for e in quiver["edges"]:
        terms = {tuple(x["weight"]): x["mult"] for x in e["weights"]}
        out[(e["from"], e["to"])] = RepSum(5, terms).modulo_det()
    return out


def _cells(report: dict) -> dict[tuple[int, int, int], dict]:
    return {(c["cell"]["i"], c["cell"]["j"], c["cell"]["t"]): c for c in report["cells"]}


def _nonzero(cell: dict) -> dict[int, int]:
    return {int(d): v["dim"] for d, v in cell["degrees"].items() if v["dim"]}


# ---------------------------------------------------------------- 1


def test_criterion_1_chow_collection():
    with criterion(1, "Chow-side collection: vanishing for t=0..4, Hom(E,E)=C, quiver labels"):
        start = time.perf_counter()
        (res,) = run("thm-gvan1", Config())
        elapsed = time.perf_counter() - start
        rep = res.report
        cells = _cells(rep)
        assert res.verdict == "PASS"
        assert len([k for k in cells if k[2] <= 4]) == 16 * 5
        for (i, j, t), c in cells.items():
            if t > 4:
                continue
            nz = _nonzero(c)
            assert all(d == 0 for d in nz), (i, j, t, nz)
            if t > 0:
                assert not nz, (i, j, t, nz)
        for i in range(1, 5):
            assert cells[(i, i, 0)]["degrees"] == {"0": {"dim": 1, "rep": "C"}}
        # only the six quiver arrows carry Homs at t = 0
        hom = {(i, j) for (i, j, t), c in cells.items() if t == 0 and i != j and _nonzero(c)}
        assert hom <= {(3, 4), (2, 4), (1, 4), (2, 3), (1, 3), (1, 2)}
        want = {
            ("F3", "F2"): (1, 0, 0, 0, 0),
            ("F3", "F1a"): (2, 0, 0, 0, 0),
            ("F3", "F1b"): (1, 1, 0, 0, 0),
            ("F2", "F1a"): (1, 0, 0, 0, 0),
            ("F2", "F1b"): (1, 0, 0, 0, 0),
            ("F1a", "F1b"): None,
        }
        got = _edge_labels(rep["quiver"])
        assert got == {k: _mod_det(w) for k, w in want.items()}
        assert elapsed < 60


# ---------------------------------------------------------------- 2


def test_criterion_2_y_collection():
    with criterion(2, "y-tilde collection: quiver, t=1..9 vanishing, special cells"):
        start = time.perf_counter()
        (res,) = run("thm-gvan", Config())
        elapsed = time.perf_counter() - start
        rep = res.report
        cells = _cells(rep)
        assert res.verdict == "PASS"
        assert len(cells) == 16 * 10
        for (i, j, t), c in cells.items():
            assert c["verdict"] == "PASS"
            assert c["citations"], (i, j, t)
            if t >= 1:
                assert not _nonzero(c), (i, j, t)
            ids = {x.split(":")[0] for x in c["citations"]}
            # the shifted column reaches the y3 twist t-1, so t=6 there is still direct
            direct_ok = t <= 5 or (t == 6 and "last-column-shift" in ids and "duality-13" not in ids)
            assert direct_ok or "duality-13" in ids, (i, j, t)
            if t < 5:
                assert "duality-13" not in ids, (i, j, t)
        for i in range(1, 5):
            assert _nonzero(cells[(i, i, 0)]) == {0: 1}
        want = {
            ("E3", "E2"): V,
            ("E3", "E1a"): (0, 0, 0, -1, -1),
            ("E3", "E1b"): (0, 0, 0, 0, -2),
            ("E2", "E1a"): V,
            ("E2", "E1b"): V,
            ("E1a", "E1b"): None,
        }
        assert _edge_labels(rep["quiver"]) == {k: _mod_det(w) for k, w in want.items()}
        special = {tuple(s["cell"]): s for s in rep["checks"]["special_cells"]["cells"]}
        assert [special[(i, 4, 0)]["computed"] for i in (1, 2, 3)] == ["S²V", "V", "0"]
        assert all(s["match"] and s["citations"] for s in special.values())
        assert elapsed < 300


# ---------------------------------------------------------------- 3


def test_criterion_3_z_table():
    with criterion(3, "cohomology table on the tower z for k=0..10"):
        (res,) = run("lemma-cohZ", Config())
        rows = res.report["rows"]
        want = {
            "twisted-by-N": {},
            "line": {(0, 0): 1, (13, 10): 1},
            "via-E-dual": {(0, 0): 1, (13, 10): 1},
            "pulled-back-tangent": {(0, 0): 24, (12, 10): 1},
            "tangent": {(0, 0): 24, (12, 10): 1},
        }
        for row in rows:
            fam, k = row["family"], row["k"]
            expected = {d: x for (d, kk), x in want[fam].items() if kk == k}
            if row["status"] == "INDETERMINATE":
                assert row["assumptions"], row
                continue
            assert row["status"] == "PASS", row
            assert {int(d): x for d, x in row["computed"].items()} == expected, row
        assert sorted({r["k"] for r in rows}) == list(range(11))
        assert res.verdict == "PASS"


# ---------------------------------------------------------------- 4


def test_criterion_4_invariants():
    with criterion(4, "invariants of Y: M^3=10, c2.M=40, e=-50, h11=1, h12=26"):
        start = time.perf_counter()
        (res,) = run("prop-y", Config())
        elapsed = time.perf_counter() - start
        rep = res.report
        steps = rep["steps"]
        assert steps["h_restricted_tangent"] == [24, 0, 1]
        h0 = steps["h_O_Z_M"]["0"]
        assert steps["normal_h0"] == 10 * h0 == 50
        # rebuild the numbers from the intermediate steps
        h24, h1, h2 = steps["h_restricted_tangent"]
        h12 = steps["normal_h0"] - h24 + h1
        h11 = h2
        m3 = 2 * 5
        c2m = 12 * (Fraction(h0) - Fraction(m3, 6))
        values = {k: v["value"] for k, v in rep["invariants"].items()}
        assert values == {"M3": m3, "c2M": c2m, "euler": 2 * (h11 - h12), "h11": h11, "h12": h12}
        assert values == {"M3": 10, "c2M": 40, "euler": -50, "h11": 1, "h12": 26}
        assert res.verdict == "PASS"
        assert elapsed < 120


# ---------------------------------------------------------------- 5


def test_criterion_5_double_spin_coordinates():
    with criterion(5, "G(3,6) in symmetric-pair coordinates over 1000 samples per profile"):
        start = time.perf_counter()
        rep = run_suite(1000, 7)
        elapsed = time.perf_counter() - start
        assert set(rep["profiles"]) == {"generic", "rank2", "rank1", "veronese_rho", "veronese_sigma"}
        for name, st in rep["profiles"].items():
            assert st["samples"] == 1000
            assert st["nonzero_residuals"] == 0, name
            assert st["relation_failures"] == 0, name
            assert not any(k.startswith("3,") or k.endswith(",3") for k in st["rank_pairs"]), name
        s = conic_point()
        assert s.vm == antidiag((-1, 1, 1, -1))
        assert s.wm == antidiag((1, -1, -1, 1))
        assert rep["rank3_observed"] is False
        assert rep["verdict"] == "PASS"
        assert elapsed < 30


# ---------------------------------------------------------------- 6


def _ssyt_weights(shape: tuple[int, ...], letters: int) -> dict[tuple[int, ...], int]:
    """Content multiset of semistandard tableaux, by direct enumeration."""
    cells = [(r, c) for r, n in enumerate(shape) for c in range(n)]
    out: dict[tuple[int, ...], int] = {}
    fill: dict[tuple[int, int], int] = {}

    def go(k: int) -> None:
        if k == len(cells):
            w = [0] * letters
            for x in fill.values():
                w[x] += 1
            out[tuple(w)] = out.get(tuple(w), 0) + 1
            return
        r, c = cells[k]
        lo = max(fill.get((r, c - 1), 0), fill.get((r - 1, c), -1) + 1)
        for x in range(lo, letters):
            fill[(r, c)] = x
            go(k + 1)
        fill.pop((r, c), None)

    go(0)
    return out


def _irrep_char(w: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    low = min(w)
    base = _ssyt_weights(tuple(x - low for x in w if x > low), len(w))
    return {tuple(x + low for x in m): c for m, c in base.items()}


def _rep_char(r: RepSum) -> dict[tuple[int, ...], int]:
    out: dict[tuple[int, ...], int] = {}
    for w, m in r.terms.items():
        for e, c in _irrep_char(w).items():
            out[e] = out.get(e, 0) + m * c
    return {e: c for e, c in out.items() if c}


def _outer_on_weights(outer: tuple[int, ...], weights: list[tuple[int, ...]]) -> dict[tuple[int, ...], int]:
    """Character of Sigma^outer(U) from the weights of U, by substitution."""
    out: dict[tuple[int, ...], int] = {}
    for e, c in _irrep_char(outer).items():
        total = [0] * len(weights[0])
        for k, x in enumerate(e):
            for j in range(len(total)):
                total[j] += x * weights[k][j]
        out[tuple(total)] = out.get(tuple(total), 0) + c
    return {e: c for e, c in out.items() if c}


def test_criterion_6_plethysm_regressions():
    with criterion(6, "plethysm regression set"):
        wedge2 = RepSum.single((1, 1, 0, 0))
        wedge2_weights = [tuple(int(k in pair) for k in range(4)) for pair in combinations(range(4), 2)]
        sym2_u = RepSum.single((2, 0, 0))
        sym2_u_weights = [tuple(int(k == a) + int(k == b) for k in range(3)) for a in range(3) for b in range(a, 3)]
        cases = [
            ((1, 1, 1, 0, 0, 0), wedge2, wedge2_weights, {(3, 1, 1, 1): 1, (2, 2, 2, 0): 1}),
            ((2, 0, 0, 0, 0, 0), sym2_u, sym2_u_weights, {(4, 0, 0): 1, (2, 2, 0): 1}),
            ((1, 1, 0, 0, 0, -1), wedge2, wedge2_weights, {(2, 0, 0, 0): 1, (1, 1, 1, -1): 1, (2, 1, 0, -1): 1}),
            ((1, 1, 0, 0, 0, 0), wedge2, wedge2_weights, {(2, 1, 1, 0): 1}),
        ]
        for outer, inner, weights, want in cases:
            expected = RepSum(inner.rank, want)
            assert plethysm_apply(outer, inner) == expected, outer
            # independent route: substitute weights into the outer character
            assert _outer_on_weights(outer, weights) == _rep_char(expected), outer


# ---------------------------------------------------------------- 7


def test_criterion_7_property_suites():
    with criterion(7, "Serre duality, 16-pair Chow duality for t=0..5, LR dimensions, lambda-ring"):
        checked = 0
        for name in HONEST_TOWERS:
            tower = get_tower(name)
            rng = random.Random(f"serre:{name}")
            for _ in range(12):
                assert serre_holds(random_expr(rng, tower), tower), name
                checked += 1
        assert checked >= 50

        dual = col.chow_duality_check(range(0, 6))
        assert dual["verdict"] == "PASS"
        assert dual["checked"] == 16 * 6

        for a in _dominant_sweep(3, 0, 2):
            for b in _dominant_sweep(3, -1, 1):
                assert lr_product(a, b).dim() == weyl_dim(a) * weyl_dim(b)

        for r in (RepSum.single((1, 0, 0)), RepSum.single((1, 1, 0)) + RepSum.single((0, 0, -1))):
            d = r.dim()
            for k in range(0, d + 2):
                assert power_op("ext", k, r).dim() == comb(d, k)
                assert power_op("sym", k, r).dim() == comb(d + k - 1, k)
            for n in range(1, 4):
                koszul = RepSum.zero(3)
                for k in range(n + 1):
                    koszul = koszul + rep_product(power_op("ext", k, r), power_op("sym", n - k, r)).scale((-1) ** k)
                assert not koszul
        x = RepSum.single((1, 0, 0))
        for k in range(1, 4):
            assert not power_op("ext", k, x - x)


def _dominant_sweep(rank: int, lo: int, hi: int):
    if rank == 0:
        yield ()
        return
    for first in range(hi, lo - 1, -1):
        for rest in _dominant_sweep(rank - 1, lo, first):
            yield (first,) + rest


# ---------------------------------------------------------------- 8


def test_criterion_8_determinism(tmp_path: Path):
    with criterion(8, "byte-identical reports across repeated runs and --jobs"):
        outs = []
        for tag, jobs in (("a", "1"), ("b", "4"), ("c", "1")):
            d = tmp_path / tag
            with redirect_stdout(io.StringIO()), redirect_stderr(io.StringIO()):
                code = cli.main(["verify", "all", "--samples", "100", "--seed", "3", "--jobs", jobs, "--output", str(d)])
            assert code == 0
            outs.append({p.name: p.read_bytes() for p in sorted(d.iterdir())})
        assert len(outs[0]) >= 5 * 2
        assert outs[0] == outs[1] == outs[2]


if __name__ == "__main__":
    import sys
    import tempfile

    failed = 0
    for name, fn in sorted(globals().items()):
        if not name.startswith("test_criterion_"):
            continue
        try:
            if name.endswith("determinism"):
                with tempfile.TemporaryDirectory() as tmp:
                    fn(Path(tmp))
            else:
                fn()
        except Exception:
            failed += 1
    sys.exit(1 if failed else 0)
