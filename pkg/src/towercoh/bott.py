"""Level-by-level Bott pushforward and global cohomology of bundle expressions."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .tower import (
    NF,
    BundleExpr,
    Key,
    ResolvedAmbient,
    SchurApply,
    Tower,
    UnsupportedShape,
    canonicalize,
    nf,
    nf_tensor,
    render,
)
from .tower import Dual as _Dual
from .weights import BottResult, RepSum, Weight, bott_sort, register_cache, shift
from .weights import parity_sign as _sign


@dataclass
class CohomologyTable:
    entries: dict[int, RepSum]
    tower: str
    fingerprint: str = ""
    rank: int = 5

    def __post_init__(self) -> None:
        self.entries = {d: r for d, r in sorted(self.entries.items()) if r}

    def __getitem__(self, d: int) -> RepSum:
        return self.entries.get(d, RepSum.zero(self.rank))

    def dims(self) -> dict[int, int]:
        return {d: r.dim() for d, r in self.entries.items()}

    def is_zero(self) -> bool:
        return not self.entries

    def chi(self) -> RepSum:
        total = RepSum.zero(self.rank)
        for d, r in self.entries.items():
            total = total + r.scale(_sign(d))
        return total

    def to_json(self) -> dict[str, dict[str, object]]:
        return {str(d): {"dim": r.dim(), "rep": rep_name(r)} for d, r in self.entries.items()}

    def pretty(self) -> str:
        if not self.entries:
            return "all cohomology vanishes"
        return "\n".join(f"H^{d}: {rep_name(r)}  (dim {r.dim()})" for d, r in self.entries.items())


# ---------------------------------------------------------------- pushforward


def _split_key(key: Key, level: int) -> tuple[Weight, Key]:
    const, blocks = key
    beta, gamma = blocks[level]
    return beta + gamma, (const, blocks[:level])


@register_cache
@lru_cache(maxsize=50_000)
def _schur_of_dual_ambient(tower: Tower, level: int, mu: Weight) -> tuple[tuple[Key, int], ...]:
    """Sigma^mu(A_level^*) as a canonical normal form one level down."""
    if level == 0:
        return (((mu, ()), 1),)
    amb = tower.levels[level].ambient
    if isinstance(amb, ResolvedAmbient):
        raise UnsupportedShape(
            f"level {level} has a resolved ambient; route this computation through complexes"
        )
    return tuple(sorted(nf(SchurApply(mu, _Dual(amb)), tower, level - 1).items()))


def push_key(tower: Tower, level: int, key: Key) -> tuple[int, NF] | None:
    """Bott pushforward of one irreducible summand: (degree, normal form one level down)."""
    alpha, lower = _split_key(key, level)
    out = bott_sort(alpha)
    if not isinstance(out, BottResult):
        return None
    pushed = dict(_schur_of_dual_ambient(tower, level, out.weight))
    res = nf_tensor(pushed, {lower: 1})
    if level >= 1:
        res = canonicalize(res, tower, level - 1)
    return out.length, res


def pushforward_level(e: BundleExpr, tower: Tower, level: int | None = None) -> dict[int, NF]:
    """R pi_* of e from `level` to the level below, as normal forms by degree."""
    if level is None:
        level = tower.top
    out: dict[int, NF] = {}
    for key, m in nf(e, tower, level).items():
        pushed = push_key(tower, level, key)
        if pushed is None:
            continue
        deg, form = pushed
        acc = out.setdefault(deg, {})
        for k, c in form.items():
            acc[k] = acc.get(k, 0) + m * c
    return {d: {k: c for k, c in f.items() if c} for d, f in sorted(out.items()) if any(f.values())}


@register_cache
@lru_cache(maxsize=200_000)
def key_cohomology(tower: Tower, level: int, key: Key) -> tuple[tuple[int, RepSum], ...]:
    """Cohomology of one irreducible summand living on `level` (-1 means the point)."""
    if level < 0:
        const, _ = key
        return ((0, RepSum.single(const)),)
    pushed = push_key(tower, level, key)
    if pushed is None:
        return ()
    deg, form = pushed
    acc: dict[int, RepSum] = {}
    for k, m in form.items():
        for d, rep in key_cohomology(tower, level - 1, k):
            acc[deg + d] = acc.get(deg + d, RepSum.zero(tower.base_rank)) + rep.scale(m)
    return tuple(sorted((d, r) for d, r in acc.items() if r))


def nf_cohomology(form: NF, tower: Tower, level: int | None = None) -> dict[int, RepSum]:
    if level is None:
        level = tower.top
    acc: dict[int, RepSum] = {}
    for key, m in sorted(form.items()):
        for d, rep in key_cohomology(tower, level, key):
            acc[d] = acc.get(d, RepSum.zero(tower.base_rank)) + rep.scale(m)
    return {d: r for d, r in sorted(acc.items()) if r}


def cohomology(e: BundleExpr, tower: Tower) -> CohomologyTable:
    """H^*(total space, e) as GL(V)-representations, degree by degree."""
    entries = nf_cohomology(nf(e, tower), tower)
    return CohomologyTable(entries, tower.name, render(e), tower.base_rank)


def euler_characteristic(e: BundleExpr, tower: Tower) -> RepSum:
    return cohomology(e, tower).chi()


# ---------------------------------------------------------------- naming


def named_weights(n: int) -> dict[Weight, str]:
    z = [0] * n
    if n < 2:
        return {tuple(z): "C"}

    def w(**pos: int) -> Weight:
        v = list(z)
        for k, x in pos.items():
            v[int(k[1:])] = x
        return tuple(v)

    last, prev = n - 1, n - 2
    names = {
        tuple(z): "C",
        w(i0=1): "V*",
        w(**{f"i{last}": -1}): "V",
        w(i0=2): "S²V*",
        w(**{f"i{last}": -2}): "S²V",
        w(i0=1, i1=1): "∧²V*",
        w(**{f"i{prev}": -1, f"i{last}": -1}): "∧²V",
    }
    adj = w(**{"i0": 1, f"i{last}": -1})
    names[adj] = "Σ^{(" + ",".join(map(str, adj)) + ")}V*"
    return names


def weight_name(w: Weight) -> str:
    names = named_weights(len(w))
    if w in names:
        return names[w]
    for k in range(-12, 13):
        base = shift(w, -k)
        if k and base in names:
            return f"{names[base]} ⊗ (det V*)^{k}"
    return "Σ^{(" + ",".join(map(str, w)) + ")}V*"


def rep_name(r: RepSum) -> str:
    if not r:
        return "0"
    parts = []
    for w, m in r.items():
        name = weight_name(w)
        parts.append(name if m == 1 else f"{m}·{name}")
    return " ⊕ ".join(parts)


@dataclass
class TableDiff:
    ok: bool
    notes: list[str] = field(default_factory=list)
