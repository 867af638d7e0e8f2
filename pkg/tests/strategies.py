"""Random bundle expressions shared by the property tests and the acceptance suite."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from towercoh.bott import cohomology
from towercoh.schur import dual_rep
from towercoh.tower import ConstRep, Dual, LineTwist, SchurApply, TautQ, TautS, Tower, canonical_class, tensor

HONEST_TOWERS = ("pv", "g2v", "g3v", "chow-hat", "y3", "p-rho")


def _weight(draw_int, rank: int, lo: int = -2, hi: int = 2) -> tuple[int, ...]:
    return tuple(sorted((draw_int(lo, hi) for _ in range(rank)), reverse=True))


def random_expr(rng: random.Random, tower: Tower):
    """A tensor product of one or two Schur functors of tautological bundles and a line."""
    factors = []
    for _ in range(rng.randint(1, 2)):
        lev = rng.randint(0, tower.top)
        if rng.random() < 0.5:
            factors.append(SchurApply(_weight(rng.randint, tower.r(lev), -1, 1), TautS(lev)))
        else:
            f = SchurApply(_weight(rng.randint, tower.q(lev), -1, 1), TautQ(lev))
            factors.append(Dual(f) if rng.random() < 0.3 else f)
    for lev in range(tower.top + 1):
        factors.append(LineTwist(lev, rng.randint(-3, 2)))
    if rng.random() < 0.3:
        factors.append(ConstRep(_weight(rng.randint, tower.base_rank, 0, 1)))
    return tensor(*factors)


@st.composite
def exprs(draw, tower: Tower):
    seed = draw(st.integers(min_value=0, max_value=2**32 - 1))
    return random_expr(random.Random(seed), tower)


def dominant(rank: int, lo: int = -2, hi: int = 3):
    return st.lists(st.integers(lo, hi), min_size=rank, max_size=rank).map(lambda xs: tuple(sorted(xs, reverse=True)))


def serre_holds(e, tower: Tower) -> bool:
    """H^d(E) against the dual of H^{N-d}(E* (x) K), computed by two separate Bott runs."""
    n = tower.dimension()
    a = cohomology(e, tower)
    b = cohomology(tensor(Dual(e), canonical_class(tower)), tower)
    return set(a.entries) == {n - d for d in b.entries} and all(b[n - d] == dual_rep(r) for d, r in a.entries.items())
