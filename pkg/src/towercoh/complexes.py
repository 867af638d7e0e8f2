"""Hypercohomology of bounded complexes of bundle expressions.

A first-page grid is assembled from the cohomology of every term.  Each grid
entry carries a filtration index (a tuple, so nested complexes refine it
lexicographically) and a total degree.  A spectral-sequence differential can only
run from a smaller filtration index to a strictly larger one and raises the total
degree by one.  Degrees not touched by any such potential differential are forced.
Within a chain of linked degrees the alternating sum of dimensions is invariant,
which pins a degree when every other member of the chain is known to vanish.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Union

from .bott import nf_cohomology, rep_name
from .schur import dual_rep, power_op
from .tower import (
    NF,
    BundleExpr,
    ConstRep,
    DirectSum,
    Dual,
    ExtPow,
    LinePow,
    ResolvedAmbient,
    Tower,
    UnsupportedShape,
    canonicalize,
    nf,
    nf_tensor,
    render,
    tensor,
)
from .weights import BottResult, RepSum, bott_sort
from .weights import parity_sign as _sign

# ---------------------------------------------------------------- objects


@dataclass(frozen=True)
class OnTower:
    """A bundle expression evaluated on a tower other than the enclosing one."""

    expr: BundleExpr
    tower: Tower


@dataclass(eq=False)
class Assumed:
    """A cited cohomology table standing in for an object.

    If `mechanical` is given it is computed too, and the cited table must be
    compatible with the mechanical bounds.
    """

    table: dict[int, RepSum]
    citation: str
    mechanical: "Obj | None" = None
    tower: Tower | None = None


@dataclass(eq=False)
class ComplexSpec:
    terms: dict[int, list[tuple["Obj", int]]]
    tower: Tower | None = None
    resolves: str | None = None  # "left": resolves a sheaf in degree 0 by terms in degrees <= 0
    equivariant: bool = True
    label: str = ""

    def degrees(self) -> list[int]:
        return sorted(d for d, ts in self.terms.items() if ts)


Obj = Union[BundleExpr, ComplexSpec, OnTower, Assumed]


class InconsistentAssumption(ValueError):
    """A cited table contradicts the mechanically computed bounds."""


# ---------------------------------------------------------------- results


@dataclass(frozen=True)
class Forced:
    dim: int
    rep: RepSum | None

    def to_json(self) -> dict[str, object]:
        out: dict[str, object] = {"status": "forced", "dim": self.dim}
        if self.rep is not None:
            out["rep"] = rep_name(self.rep)
        return out


@dataclass(frozen=True)
class Bounded:
    lower: int
    upper: int

    def to_json(self) -> dict[str, object]:
        return {"status": "bounded", "lower": self.lower, "upper": self.upper}


@dataclass(frozen=True)
class Entry:
    p: tuple[int, ...]
    d: int
    rep: RepSum


@dataclass
class Block:
    entries: list[Entry]
    zero_below: int | None = None  # degrees < zero_below vanish (left resolutions)
    equivariant: bool = True

    def known_zero(self, d: int) -> bool:
        return self.zero_below is not None and d < self.zero_below


@dataclass
class HyperResult:
    degrees: dict[int, Forced | Bounded]
    chi_dim: int
    chi: RepSum | None
    assumptions: list[str] = field(default_factory=list)
    blocks: list[Block] = field(default_factory=list)

    def is_forced(self) -> bool:
        return all(isinstance(v, Forced) for v in self.degrees.values())

    def dims(self) -> dict[int, int]:
        if not self.is_forced():
            raise ValueError("result is not forced")
        return {d: v.dim for d, v in self.degrees.items() if v.dim}

    def table(self) -> dict[int, RepSum]:
        out = {}
        for d, v in self.degrees.items():
            if not isinstance(v, Forced) or v.rep is None:
                raise ValueError(f"degree {d} has no exact representation")
            if v.rep:
                out[d] = v.rep
        return out

    def bounds(self, d: int) -> tuple[int, int]:
        v = self.degrees.get(d)
        if v is None:
            return (0, 0)
        if isinstance(v, Forced):
            return (v.dim, v.dim)
        return (v.lower, v.upper)

    def admits(self, dims: dict[int, int]) -> bool:
        """Whether a dimension table is compatible with this result."""
        for d in set(dims) | set(self.degrees):
            lo, hi = self.bounds(d)
            if not lo <= dims.get(d, 0) <= hi:
                return False
        return sum(_sign(d) * x for d, x in dims.items()) == self.chi_dim

    def to_json(self) -> dict[str, object]:
        return {
            "degrees": {str(d): v.to_json() for d, v in self.degrees.items()},
            "chi_dim": self.chi_dim,
            "assumptions": list(self.assumptions),
        }


# ---------------------------------------------------------------- constructors


def koszul_restriction(line: BundleExpr, count: int, twist_by: Obj, tower: Tower | None = None) -> ComplexSpec:
    """Koszul complex of `count` sections of line^{-1}, tensored with `twist_by`."""
    if count < 1:
        raise ValueError("need at least one section")
    terms: dict[int, list[tuple[Obj, int]]] = {}
    for k in range(count + 1):
        power = LinePow(line, k)
        terms[-k] = [(_tensor_obj(power, twist_by), comb(count, k))]
    return ComplexSpec(terms, tower, resolves="left", equivariant=False, label="koszul")


def _tensor_obj(e: BundleExpr, obj: Obj) -> Obj:
    if isinstance(obj, ComplexSpec):
        return tensor_complexes(ComplexSpec({0: [(e, 1)]}, obj.tower), obj)
    if isinstance(obj, OnTower):
        return OnTower(tensor(e, obj.expr), obj.tower)
    if isinstance(obj, Assumed):
        raise TypeError("cannot twist a cited table")
    return tensor(e, obj)


def two_term(side: str, a: Obj, b: Obj, tower: Tower | None = None) -> ComplexSpec:
    """coker(a -> b) in degrees (-1, 0) or ker(a -> b) in degrees (0, 1)."""
    if side == "coker":
        return ComplexSpec({-1: [(a, 1)], 0: [(b, 1)]}, tower, resolves="left", label="coker")
    if side == "kernel":
        return ComplexSpec({0: [(a, 1)], 1: [(b, 1)]}, tower, label="kernel")
    raise ValueError("side must be 'coker' or 'kernel'")


def shifted(obj: Obj, n: int, tower: Tower | None = None) -> ComplexSpec:
    """obj[n]: the object placed in degree -n."""
    return ComplexSpec({-n: [(obj, 1)]}, tower, label=f"shift{n}")


def extension(sub: Obj, quotient: Obj, tower: Tower | None = None) -> ComplexSpec:
    """An object X with 0 -> sub -> X -> quotient -> 0, as Cone(quotient[-1] -> sub)."""
    return ComplexSpec({-1: [(shifted(quotient, -1, tower), 1)], 0: [(sub, 1)]}, tower, label="extension")


def rep_expr(r: RepSum) -> BundleExpr:
    return DirectSum(tuple((ConstRep(w), m) for w, m in r.items()))


def _resolved_level(tower: Tower) -> ResolvedAmbient:
    amb = tower.levels[tower.top].ambient
    if not isinstance(amb, ResolvedAmbient):
        raise ValueError(f"tower {tower.name} has no resolved ambient on top")
    return amb


def sym_power_resolution(m: int, which: str, tower: Tower) -> ComplexSpec:
    """Resolution of S^m(A^*) ("dual") or S^m(A) ("ambient") for A = ker(C -> B).

    On the tower z, A = E*, so "dual" resolves S^m E and "ambient" resolves S^m E*.
    Terms live one level below the resolved top level.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    amb = _resolved_level(tower)
    terms: dict[int, list[tuple[Obj, int]]] = {}
    for k in range(m + 1):
        if which == "dual":
            const = power_op("sym", m - k, dual_rep(amb.const))
            if const:
                terms[-k] = [(tensor(ExtPow(k, Dual(amb.target)), rep_expr(const)), 1)]
        elif which == "ambient":
            const = power_op("sym", m - k, amb.const)
            if const:
                terms[k] = [(tensor(rep_expr(const), ExtPow(k, amb.target)), 1)]
        else:
            raise ValueError("which must be 'dual' or 'ambient'")
    return ComplexSpec(terms, tower, resolves="left" if which == "dual" else None, label=f"sym{m}")


def tensor_complexes(a: ComplexSpec, b: ComplexSpec) -> ComplexSpec:
    tower = a.tower or b.tower
    terms: dict[int, list[tuple[Obj, int]]] = {}
    for i, ta in a.terms.items():
        for j, tb in b.terms.items():
            for x, m in ta:
                for y, n in tb:
                    terms.setdefault(i + j, []).append((_tensor_pair(x, y), m * n))
    resolves = "left" if a.resolves == "left" and b.resolves == "left" else None
    return ComplexSpec(terms, tower, resolves, a.equivariant and b.equivariant, "tensor")


def _tensor_pair(x: Obj, y: Obj) -> Obj:
    if isinstance(x, ComplexSpec) and isinstance(y, ComplexSpec):
        return tensor_complexes(x, y)
    if isinstance(x, ComplexSpec):
        return tensor_complexes(x, ComplexSpec({0: [(y, 1)]}, x.tower))
    if isinstance(y, ComplexSpec):
        return tensor_complexes(ComplexSpec({0: [(x, 1)]}, y.tower), y)
    if isinstance(x, (OnTower, Assumed)) or isinstance(y, (OnTower, Assumed)):
        raise TypeError("tensor products need plain bundle expressions")
    return tensor(x, y)


# ---------------------------------------------------------------- evaluation


def _expr_blocks(e: BundleExpr, tower: Tower) -> list[Block]:
    if tower.is_honest():
        table = nf_cohomology(nf(e, tower), tower)
        return [Block([Entry((), d, r) for d, r in table.items()])]
    return _resolved_blocks(nf(e, tower), tower)


def _resolved_blocks(form: NF, tower: Tower) -> list[Block]:
    top = tower.top
    amb = _resolved_level(tower)
    blocks: list[Block] = []
    det_dual = nf(Dual(amb.det), tower, top - 1)
    for key, mult in sorted(form.items()):
        const, bl = key
        beta, gamma = bl[top]
        out = bott_sort(beta + gamma)
        if not isinstance(out, BottResult):
            continue
        mu, shift_deg = out.weight, out.length
        lower = {(const, bl[:top]): 1}
        if len(set(mu[1:])) <= 1 and mu[0] >= mu[-1]:
            b = mu[-1]
            m_pow, which = mu[0] - b, "dual"
        elif len(set(mu[:-1])) <= 1:
            b = mu[0]
            m_pow, which = b - mu[-1], "ambient"
        else:
            raise UnsupportedShape(f"Sigma^{mu} of a resolved ambient is not a symmetric power times a determinant")
        # Sigma^mu(A^*) = S^m(A^* or A) (x) det(A^*)^b
        twist = nf_tensor(lower, _line_pow_form(det_dual, b))
        res = sym_power_resolution(m_pow, which, tower)
        entries: list[Entry] = []
        for k in res.degrees():
            for obj, c in res.terms[k]:
                form_k = canonicalize(nf_tensor(nf(obj, tower, top - 1), twist), tower, top - 1)
                for d, rep in nf_cohomology(form_k, tower, top - 1).items():
                    entries.append(Entry((k,), shift_deg + k + d, rep.scale(c * mult)))
        zero_below = shift_deg if which == "dual" else None
        blocks.append(Block(entries, zero_below))
    return blocks


def _line_pow_form(line: NF, k: int) -> NF:
    (key, _), = line.items()
    const, blocks = key
    return {(tuple(k * x for x in const), tuple((tuple(k * x for x in b), tuple(k * x for x in g)) for b, g in blocks)): 1}


def _atomic_entries(res: HyperResult, prefix: tuple[int, ...], deg: int, mult: int, rank: int) -> list[Entry]:
    out = []
    for d, v in sorted(res.degrees.items()):
        assert isinstance(v, Forced)
        if v.dim == 0:
            continue
        rep = v.rep if v.rep is not None else None
        if rep is None:
            raise ValueError("atomic entry without a representation")
        out.append(Entry(prefix, deg + d, rep.scale(mult)))
    return out


def _obj_blocks(obj: Obj, tower: Tower | None, assumptions: list[str]) -> tuple[list[Block], HyperResult | None]:
    if isinstance(obj, OnTower):
        return _expr_blocks(obj.expr, obj.tower), None
    if isinstance(obj, Assumed):
        res = _assumed_result(obj, tower)
        assumptions.extend(res.assumptions)
        return res.blocks, res
    if isinstance(obj, ComplexSpec):
        res = hypercohomology(obj, obj.tower or tower)
        assumptions.extend(res.assumptions)
        return res.blocks, res
    if tower is None:
        raise ValueError("bundle expression without a tower")
    return _expr_blocks(obj, tower), None


def _assumed_result(obj: Assumed, tower: Tower | None) -> HyperResult:
    t = obj.tower or tower
    rank = t.base_rank if t is not None else 5
    notes = [obj.citation]
    if obj.mechanical is not None:
        mech = evaluate(obj.mechanical, t)
        dims = {d: r.dim() for d, r in obj.table.items() if r}
        if not mech.admits(dims):
            raise InconsistentAssumption(f"cited table {dims} contradicts computed bounds ({obj.citation})")
        notes = mech.assumptions + notes
    entries = [Entry((), d, r) for d, r in obj.table.items() if r]
    return analyse([Block(entries)], notes, rank)


def evaluate(obj: Obj, tower: Tower | None) -> HyperResult:
    """Hypercohomology of any object (expression, complex, cited table)."""
    if isinstance(obj, ComplexSpec):
        return hypercohomology(obj, obj.tower or tower)
    if isinstance(obj, Assumed):
        return _assumed_result(obj, tower)
    notes: list[str] = []
    blocks, _ = _obj_blocks(obj, tower, notes)
    t = obj.tower if isinstance(obj, OnTower) else tower
    return analyse(blocks, notes, t.base_rank if t else 5)


def hypercohomology(c: ComplexSpec, tower: Tower | None = None) -> HyperResult:
    tower = c.tower or tower
    notes: list[str] = []
    entries: list[Entry] = []
    equivariant = c.equivariant
    rank = tower.base_rank if tower is not None else 5
    for k in c.degrees():
        for obj, mult in c.terms[k]:
            blocks, res = _obj_blocks(obj, tower, notes)
            if res is None:
                res = analyse(blocks, [], rank)
            equivariant = equivariant and all(b.equivariant for b in blocks)
            if res.is_forced() and all(isinstance(v, Forced) and v.rep is not None for v in res.degrees.values()):
                entries += _atomic_entries(res, (k,), k, mult, rank)
            else:
                for b in blocks:
                    for e in b.entries:
                        entries.append(Entry((k,) + e.p, k + e.d, e.rep.scale(mult)))
    block = Block(entries, 0 if c.resolves == "left" else None, equivariant)
    return analyse([block], _dedupe(notes), rank)


def _dedupe(xs: list[str]) -> list[str]:
    seen: list[str] = []
    for x in xs:
        if x not in seen:
            seen.append(x)
    return seen


def analyse(blocks: list[Block], assumptions: list[str], rank: int) -> HyperResult:
    degrees: dict[int, Forced | Bounded] = {}
    chi_dim = 0
    chi: RepSum | None = RepSum.zero(rank)
    for block in blocks:
        per_deg, bchi_dim, bchi = _analyse_block(block, rank)
        chi_dim += bchi_dim
        chi = None if chi is None or bchi is None else chi + bchi
        for d, v in per_deg.items():
            degrees[d] = _combine(degrees.get(d), v)
    degrees = {d: v for d, v in sorted(degrees.items()) if not (isinstance(v, Forced) and v.dim == 0)}
    return HyperResult(degrees, chi_dim, chi, _dedupe(assumptions), blocks)


def _combine(a: Forced | Bounded | None, b: Forced | Bounded) -> Forced | Bounded:
    if a is None:
        return b
    if isinstance(a, Forced) and isinstance(b, Forced):
        rep = None if a.rep is None or b.rep is None else a.rep + b.rep
        return Forced(a.dim + b.dim, rep)
    lo_a, hi_a = (a.dim, a.dim) if isinstance(a, Forced) else (a.lower, a.upper)
    lo_b, hi_b = (b.dim, b.dim) if isinstance(b, Forced) else (b.lower, b.upper)
    return Bounded(lo_a + lo_b, hi_a + hi_b)


def _analyse_block(block: Block, rank: int) -> tuple[dict[int, Forced | Bounded], int, RepSum | None]:
    entries = [e for e in block.entries if e.rep]
    by_deg: dict[int, list[Entry]] = {}
    for e in entries:
        by_deg.setdefault(e.d, []).append(e)
    reps = {d: _sum_reps([e.rep for e in es], rank) for d, es in by_deg.items()}
    dims = {d: r.dim() for d, r in reps.items()}
    chi_dim = sum(_sign(d) * x for d, x in dims.items())
    chi = _sum_reps([r.scale(_sign(d)) for d, r in reps.items()], rank)

    def linked(d: int) -> bool:
        lo, hi = by_deg.get(d, []), by_deg.get(d + 1, [])
        return any(b.p > a.p for a in lo for b in hi)

    out: dict[int, Forced | Bounded] = {}
    degs = sorted(by_deg)
    comps: list[list[int]] = []
    for d in degs:
        if comps and comps[-1][-1] == d - 1 and linked(d - 1):
            comps[-1].append(d)
        else:
            comps.append([d])
    for comp in comps:
        unknown = [d for d in comp if not block.known_zero(d)]
        if len(comp) == 1:
            d = comp[0]
            if block.known_zero(d):
                raise ValueError(f"isolated entry in degree {d} contradicts a resolution")
            out[d] = Forced(dims[d], reps[d])
            continue
        for d in comp:
            if block.known_zero(d):
                out[d] = Forced(0, RepSum.zero(rank))
        if len(unknown) == 1:
            d0 = unknown[0]
            dim = _sign(d0) * sum(_sign(d) * dims[d] for d in comp)
            rep = None
            if block.equivariant:
                virt = _sum_reps([reps[d].scale(_sign(d + d0)) for d in comp], rank)
                rep = virt if virt.is_honest() else None
            if dim < 0:
                raise ValueError("negative forced dimension; the complex is inconsistent")
            out[d0] = Forced(dim, rep)
        elif not unknown:
            if sum(_sign(d) * dims[d] for d in comp):
                raise ValueError("a resolution with all degrees vanishing has nonzero Euler characteristic")
        else:
            for d in unknown:
                nb = dims.get(d - 1, 0) * (d - 1 in comp) + dims.get(d + 1, 0) * (d + 1 in comp)
                out[d] = Bounded(max(0, dims[d] - nb), dims[d])
    return out, chi_dim, chi if block.equivariant else None


def _sum_reps(rs: list[RepSum], rank: int) -> RepSum:
    total = RepSum.zero(rank)
    for r in rs:
        total = total + r
    return total


def describe(obj: Obj) -> str:
    if isinstance(obj, ComplexSpec):
        parts = []
        for d in obj.degrees():
            parts.append(f"[{d}] " + " ⊕ ".join(f"{m}x{describe(o)}" if m != 1 else describe(o) for o, m in obj.terms[d]))
        return "{" + "; ".join(parts) + "}"
    if isinstance(obj, OnTower):
        return f"{obj.tower.name}:{render(obj.expr)}"
    if isinstance(obj, Assumed):
        return f"cited<{obj.citation}>"
    return render(obj)


__all__ = [
    "Assumed",
    "Block",
    "Bounded",
    "ComplexSpec",
    "Entry",
    "Forced",
    "HyperResult",
    "InconsistentAssumption",
    "OnTower",
    "analyse",
    "evaluate",
    "extension",
    "hypercohomology",
    "koszul_restriction",
    "shifted",
    "sym_power_resolution",
    "tensor_complexes",
    "two_term",
]

