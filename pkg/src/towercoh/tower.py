"""Towers of Grassmann bundles, the bundle-expression language, and Bott-ready normal forms.

Convention on every level: 0 -> S* -> A -> Q -> 0 with S* the rank-r subbundle,
so for r = 1 the tautological O(1) is S and pi_* O(1) = A*.  Constant
representations are written as Sigma^w V*, so V itself is rep[0,...,0,-1].

A normal form is a dict from keys to integer multiplicities.  A key is
``(const, blocks)`` where ``const`` is a GL(V) weight and ``blocks[l] = (beta, gamma)``
describes Sigma^beta S_l (x) Sigma^gamma Q_l^* on level l.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Union

from .schur import apply_schur_to_monomials, decompose_blocks, monomial_list, rep_product
from .weights import RepSum, Weight, check_weight, dual_weight, register_cache, shift, weight_multiset, weyl_dim


class UnsupportedShape(ValueError):
    """An expression needs a Schur functor the engine cannot evaluate directly."""


# ---------------------------------------------------------------- expressions


@dataclass(frozen=True)
class TautS:
    level: int


@dataclass(frozen=True)
class TautQ:
    level: int


@dataclass(frozen=True)
class ConstRep:
    weight: Weight


@dataclass(frozen=True)
class LineTwist:
    """O(t * det S_level)."""

    level: int
    t: int


@dataclass(frozen=True)
class Dual:
    inner: "BundleExpr"


@dataclass(frozen=True)
class Tensor:
    factors: tuple["BundleExpr", ...]


@dataclass(frozen=True)
class DirectSum:
    summands: tuple[tuple["BundleExpr", int], ...]


@dataclass(frozen=True)
class SchurApply:
    weight: Weight
    inner: "BundleExpr"


@dataclass(frozen=True)
class SymPow:
    k: int
    inner: "BundleExpr"


@dataclass(frozen=True)
class ExtPow:
    k: int
    inner: "BundleExpr"


@dataclass(frozen=True)
class LinePow:
    """Integer power of a line bundle expression."""

    inner: "BundleExpr"
    k: int


BundleExpr = Union[TautS, TautQ, ConstRep, LineTwist, Dual, Tensor, DirectSum, SchurApply, SymPow, ExtPow, LinePow]

TRIVIAL = Tensor(())


def tensor(*factors: BundleExpr) -> BundleExpr:
    flat: list[BundleExpr] = []
    for f in factors:
        if isinstance(f, Tensor):
            flat.extend(f.factors)
        else:
            flat.append(f)
    if len(flat) == 1:
        return flat[0]
    return Tensor(tuple(flat))


def dsum(*parts: BundleExpr | tuple[BundleExpr, int]) -> BundleExpr:
    items = tuple(p if isinstance(p, tuple) else (p, 1) for p in parts)
    return DirectSum(items)


def dual(e: BundleExpr) -> BundleExpr:
    return Dual(e)


def expr_levels(e: BundleExpr) -> int:
    """Highest level index of an atom in e (-1 for constant expressions)."""
    if isinstance(e, (TautS, TautQ, LineTwist)):
        return e.level
    if isinstance(e, ConstRep):
        return -1
    if isinstance(e, (Dual, SchurApply, SymPow, ExtPow, LinePow)):
        return expr_levels(e.inner)
    if isinstance(e, Tensor):
        return max((expr_levels(f) for f in e.factors), default=-1)
    if isinstance(e, DirectSum):
        return max((expr_levels(f) for f, _ in e.summands), default=-1)
    raise TypeError(f"not a bundle expression: {e!r}")


def render(e: BundleExpr) -> str:
    """Text form in the CLI grammar."""
    if isinstance(e, TautS):
        return f"S@{e.level}"
    if isinstance(e, TautQ):
        return f"Q@{e.level}"
    if isinstance(e, ConstRep):
        return "rep[" + ",".join(map(str, e.weight)) + "]"
    if isinstance(e, LineTwist):
        return f"O({e.t} H@{e.level})"
    if isinstance(e, Dual):
        return f"dual({render(e.inner)})"
    if isinstance(e, Tensor):
        if not e.factors:
            return "O"
        return " * ".join(_paren(f) for f in e.factors)
    if isinstance(e, DirectSum):
        return " + ".join((f"{m} x " if m != 1 else "") + _paren(f) for f, m in e.summands) or "0"
    if isinstance(e, SchurApply):
        return "sch[" + ",".join(map(str, e.weight)) + f"]({render(e.inner)})"
    if isinstance(e, SymPow):
        return f"sym^{e.k}({render(e.inner)})"
    if isinstance(e, ExtPow):
        return f"ext^{e.k}({render(e.inner)})"
    if isinstance(e, LinePow):
        return f"({render(e.inner)})^{e.k}"
    raise TypeError(e)


def _paren(e: BundleExpr) -> str:
    s = render(e)
    return f"({s})" if isinstance(e, (DirectSum, Tensor)) and len(s.split()) > 1 else s


# ---------------------------------------------------------------- towers


@dataclass(frozen=True)
class ResolvedAmbient:
    """Ambient A = ker(C (x) O -> B) for a constant rep C and a bundle B one level down."""

    const: RepSum
    target: BundleExpr
    det: BundleExpr
    label: str = "E*"


@dataclass(frozen=True, eq=False)
class Level:
    r: int
    ambient: BundleExpr | ResolvedAmbient | None = None
    names: tuple[str, str] = ("S", "Q")


@dataclass(eq=False)
class Tower:
    name: str
    base_rank: int
    levels: tuple[Level, ...]
    divisors: dict[str, BundleExpr] = field(default_factory=dict)
    aliases: dict[str, BundleExpr] = field(default_factory=dict)
    default_divisor: str | None = None
    description: str = ""

    def __post_init__(self) -> None:
        if not self.levels:
            raise ValueError("a tower needs at least one level")
        if self.levels[0].ambient is not None:
            raise ValueError("level 0 ambient is the constant V")
        self._ranks: list[int] = []
        for i, lev in enumerate(self.levels):
            n = self.base_rank if i == 0 else self._ambient_rank(i)
            if not 0 < lev.r < n:
                raise ValueError(f"level {i}: need 0 < r < rank ambient ({lev.r}, {n})")
            self._ranks.append(n)

    def __hash__(self) -> int:
        return id(self)

    def __repr__(self) -> str:
        return f"Tower({self.name})"

    @property
    def top(self) -> int:
        return len(self.levels) - 1

    def n(self, level: int) -> int:
        return self._ranks[level]

    def r(self, level: int) -> int:
        return self.levels[level].r

    def q(self, level: int) -> int:
        return self._ranks[level] - self.levels[level].r

    def block_ranks(self, upto: int) -> list[int]:
        ranks = [self.base_rank]
        for lev in range(upto + 1):
            ranks += [self.r(lev), self.q(lev)]
        return ranks

    def dimension(self) -> int:
        return sum(self.r(i) * self.q(i) for i in range(len(self.levels)))

    def is_honest(self) -> bool:
        return not any(isinstance(lev.ambient, ResolvedAmbient) for lev in self.levels)

    def _ambient_rank(self, i: int) -> int:
        amb = self.levels[i].ambient
        if isinstance(amb, ResolvedAmbient):
            return amb.const.dim() - rank(amb.target, self, i - 1)
        if amb is None:
            raise ValueError(f"level {i} needs an ambient")
        return rank(amb, self, i - 1)

    def det_s(self, level: int) -> BundleExpr:
        return LineTwist(level, 1)

    def det_q(self, level: int) -> BundleExpr:
        return ExtPow(self.q(level), TautQ(level))


# ---------------------------------------------------------------- normal forms

Key = tuple[Weight, tuple[tuple[Weight, Weight], ...]]
NF = dict[Key, int]


def _zero_key(tower: Tower, m: int) -> Key:
    blocks = tuple(((0,) * tower.r(lev), (0,) * tower.q(lev)) for lev in range(m + 1))
    return ((0,) * tower.base_rank, blocks)


def _key_slots(key: Key) -> list[Weight]:
    const, blocks = key
    out = [const]
    for b, g in blocks:
        out += [b, g]
    return out


def _slots_key(slots: list[Weight]) -> Key:
    const = slots[0]
    blocks = tuple((slots[1 + 2 * i], slots[2 + 2 * i]) for i in range((len(slots) - 1) // 2))
    return (const, blocks)


def key_dim(key: Key) -> int:
    d = 1
    for w in _key_slots(key):
        d *= weyl_dim(w)
    return d


def nf_add(a: NF, b: NF, scale: int = 1) -> NF:
    out = dict(a)
    for k, m in b.items():
        v = out.get(k, 0) + scale * m
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def nf_dual(a: NF) -> NF:
    return {_slots_key([dual_weight(w) for w in _key_slots(k)]): m for k, m in a.items()}


@register_cache
@lru_cache(maxsize=200_000)
def _key_product(k1: Key, k2: Key) -> tuple[tuple[Key, int], ...]:
    s1, s2 = _key_slots(k1), _key_slots(k2)
    acc: list[tuple[list[Weight], int]] = [([], 1)]
    for a, b in zip(s1, s2):
        prod_ = rep_product(RepSum.single(a), RepSum.single(b))
        acc = [(ws + [w], c * m) for ws, c in acc for w, m in prod_.terms.items()]
    return tuple((_slots_key(ws), c) for ws, c in acc)


def nf_tensor(a: NF, b: NF) -> NF:
    out: NF = {}
    for k1, m1 in a.items():
        for k2, m2 in b.items():
            for k, c in _key_product(k1, k2):
                out[k] = out.get(k, 0) + m1 * m2 * c
    return {k: m for k, m in out.items() if m}


def nf_rank(a: NF) -> int:
    return sum(m * key_dim(k) for k, m in a.items())


def nf_character(a: NF) -> dict[tuple[int, ...], int]:
    out: dict[tuple[int, ...], int] = {}
    for key, m in a.items():
        acc: list[tuple[tuple[int, ...], int]] = [((), m)]
        for w in _key_slots(key):
            wm = weight_multiset(w)
            acc = [(e + f, c * d) for e, c in acc for f, d in wm.items()]
        for e, c in acc:
            out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c}


def _from_blocks(blocks: dict[tuple[Weight, ...], int]) -> NF:
    return {_slots_key(list(ws)): m for ws, m in blocks.items()}


def _is_line(a: NF) -> bool:
    if len(a) != 1:
        return False
    (key, m), = a.items()
    return m == 1 and all(len(set(w)) <= 1 for w in _key_slots(key))


def _line_power(a: NF, k: int) -> NF:
    if not _is_line(a):
        raise UnsupportedShape("LinePow needs a line bundle")
    (key, _), = a.items()
    return {_slots_key([tuple(k * x for x in w) for w in _key_slots(key)]): 1}


def _single_slot(a: NF) -> tuple[int, Weight] | None:
    """If a is one irreducible with exactly one nontrivial slot, return (slot index, weight)."""
    if len(a) != 1:
        return None
    (key, m), = a.items()
    if m != 1:
        return None
    slots = _key_slots(key)
    nz = [i for i, w in enumerate(slots) if any(w)]
    if len(nz) != 1:
        return None
    return nz[0], slots[nz[0]]


def _schur_apply_nf(w: Weight, a: NF, total: int) -> NF:
    if len(w) != total:
        raise ValueError(f"Schur weight {w} needs an inner bundle of rank {len(w)}, got {total}")
    single = _single_slot(a)
    if single is not None:
        idx, sw = single
        n = len(sw)
        (key, _), = a.items()
        slots = _key_slots(key)
        if n == total and sw == (1,) + (0,) * (n - 1):
            slots[idx] = w
            return {_slots_key(slots): 1}
        if n == total and sw == (0,) * (n - 1) + (-1,):
            slots[idx] = dual_weight(w)
            return {_slots_key(slots): 1}
    if total == 1 and _is_line(a):
        return _line_power(a, w[0])
    if any(m < 0 for m in a.values()):
        raise UnsupportedShape("Schur functors of virtual bundles are not supported")
    # choose the side (a or its dual) with fewer boxes after the det shift
    options = []
    for side, weight in ((a, w), (nf_dual(a), dual_weight(w))):
        k = -min(0, weight[-1])
        options.append((sum(shift(weight, k)), k, side, weight))
    _, k, side, weight = min(options, key=lambda t: t[0])
    chi = nf_character(side)
    mons = monomial_list(chi)
    det_exp = tuple(sum(col) for col in zip(*mons))
    lam = shift(weight, k)
    res = apply_schur_to_monomials(lam, mons)
    if k:
        res = {tuple(x - k * d for x, d in zip(e, det_exp)): c for e, c in res.items()}
    (key0, _), = list(a.items())[:1]
    ranks = [len(s) for s in _key_slots(key0)]
    return _from_blocks(decompose_blocks(res, ranks))


def _power_nf(kind: str, k: int, a: NF, tower: Tower, m: int) -> NF:
    if k < 0:
        raise ValueError("power must be nonnegative")
    if k == 0:
        return {_zero_key(tower, m): 1}
    pos = {key: c for key, c in a.items() if c > 0}
    neg = {key: -c for key, c in a.items() if c < 0}

    def honest(kind_: str, j: int, b: NF) -> NF:
        if j == 0:
            return {_zero_key(tower, m): 1}
        r = nf_rank(b)
        if kind_ == "ext" and j > r:
            return {}
        if not b:
            return {}
        w = (j,) + (0,) * (r - 1) if kind_ == "sym" else (1,) * j + (0,) * (r - j)
        return _schur_apply_nf(w, b, r)

    if not neg:
        return honest(kind, k, pos)
    other = "ext" if kind == "sym" else "sym"
    out: NF = {}
    for j in range(k + 1):
        out = nf_add(out, nf_tensor(honest(kind, k - j, pos), honest(other, j, neg)), (-1) ** j)
    return out


@register_cache
@lru_cache(maxsize=100_000)
def _nf_cached(e: BundleExpr, tower: Tower, m: int) -> tuple[tuple[Key, int], ...]:
    return tuple(sorted(_nf(e, tower, m).items()))


def _nf(e: BundleExpr, tower: Tower, m: int) -> NF:
    if isinstance(e, (TautS, TautQ, LineTwist)) and not 0 <= e.level <= m:
        raise ValueError(f"atom {render(e)} does not live on level {m}")
    if isinstance(e, TautS):
        const, blocks = _zero_key(tower, m)
        b = list(blocks)
        b[e.level] = ((1,) + (0,) * (tower.r(e.level) - 1), b[e.level][1])
        return {(const, tuple(b)): 1}
    if isinstance(e, TautQ):
        const, blocks = _zero_key(tower, m)
        b = list(blocks)
        b[e.level] = (b[e.level][0], (0,) * (tower.q(e.level) - 1) + (-1,))
        return {(const, tuple(b)): 1}
    if isinstance(e, LineTwist):
        const, blocks = _zero_key(tower, m)
        b = list(blocks)
        b[e.level] = ((e.t,) * tower.r(e.level), b[e.level][1])
        return {(const, tuple(b)): 1}
    if isinstance(e, ConstRep):
        w = check_weight(e.weight)
        if len(w) != tower.base_rank:
            raise ValueError(f"constant weight {w} must have rank {tower.base_rank}")
        _, blocks = _zero_key(tower, m)
        return {(w, blocks): 1}
    if isinstance(e, Dual):
        return nf_dual(_raw(e.inner, tower, m))
    if isinstance(e, Tensor):
        out: NF = {_zero_key(tower, m): 1}
        for f in e.factors:
            out = nf_tensor(out, _raw(f, tower, m))
        return out
    if isinstance(e, DirectSum):
        out = {}
        for f, mult in e.summands:
            out = nf_add(out, _raw(f, tower, m), mult)
        return out
    if isinstance(e, SchurApply):
        inner = _raw(e.inner, tower, m)
        w = check_weight(e.weight)
        return _schur_apply_nf(w, inner, nf_rank(inner))
    if isinstance(e, SymPow):
        return _power_nf("sym", e.k, _raw(e.inner, tower, m), tower, m)
    if isinstance(e, ExtPow):
        return _power_nf("ext", e.k, _raw(e.inner, tower, m), tower, m)
    if isinstance(e, LinePow):
        return _line_power(_raw(e.inner, tower, m), e.k)
    raise TypeError(f"not a bundle expression: {e!r}")


def _raw(e: BundleExpr, tower: Tower, m: int) -> NF:
    return dict(_nf_cached(e, tower, m))


def nf(e: BundleExpr, tower: Tower, m: int | None = None) -> NF:
    """Normal form of e on level m (default: top level), canonicalized."""
    if m is None:
        m = tower.top
    return canonicalize(dict(_nf_cached(e, tower, m)), tower, m)


def rank(e: BundleExpr, tower: Tower, m: int | None = None) -> int:
    if m is None:
        m = tower.top
    return nf_rank(dict(_nf_cached(e, tower, m)))


@register_cache
@lru_cache(maxsize=64)
def _det_ambient_dual(tower: Tower, level: int) -> Key:
    """Canonical line key (one level down) of det(A_level^*)."""
    if level == 0:
        return ((1,) * tower.base_rank, ())
    amb = tower.levels[level].ambient
    if isinstance(amb, ResolvedAmbient):
        line = nf(Dual(amb.det), tower, level - 1)
    else:
        line = nf(Dual(ExtPow(tower.n(level), amb)), tower, level - 1)
    if not _is_line(line):
        raise ValueError("ambient determinant is not a line")
    (key, _), = line.items()
    return key


def canonicalize(a: NF, tower: Tower, m: int) -> NF:
    """Move det Q_l^* powers into det S_l and det A_l^* so every gamma ends in 0."""
    out: NF = {}
    for key, mult in a.items():
        slots = _key_slots(key)
        for lev in range(m, -1, -1):
            gi = 2 + 2 * lev
            c = slots[gi][-1]
            if not c:
                continue
            slots[gi] = shift(slots[gi], -c)
            slots[gi - 1] = shift(slots[gi - 1], -c)
            det_slots = _key_slots(_det_ambient_dual(tower, lev))
            for i, dw in enumerate(det_slots):
                slots[i] = tuple(x + c * d for x, d in zip(slots[i], dw))
        k = _slots_key(slots)
        out[k] = out.get(k, 0) + mult
    return {k: v for k, v in out.items() if v}


def normalize(e: BundleExpr, tower: Tower, level: int) -> list[tuple[Weight, Weight, BundleExpr, int]]:
    """Bott-ready terms (beta for S_level, gamma for Q_level^*, pulled factor, multiplicity)."""
    out = []
    for key, m in sorted(nf(e, tower, level).items()):
        const, blocks = key
        beta, gamma = blocks[level]
        out.append((beta, gamma, key_to_expr((const, blocks[:level])), m))
    return out


def key_to_expr(key: Key) -> BundleExpr:
    const, blocks = key
    factors: list[BundleExpr] = []
    if any(const):
        factors.append(ConstRep(const))
    for lev, (b, g) in enumerate(blocks):
        if any(b):
            factors.append(SchurApply(b, TautS(lev)))
        if any(g):
            factors.append(SchurApply(g, Dual(TautQ(lev))))
    return tensor(*factors) if factors else TRIVIAL


def nf_to_expr(a: NF) -> BundleExpr:
    parts = [(key_to_expr(k), m) for k, m in sorted(a.items())]
    if len(parts) == 1 and parts[0][1] == 1:
        return parts[0][0]
    return DirectSum(tuple(parts))


def line_key(e: BundleExpr, tower: Tower) -> Key:
    a = nf(e, tower)
    if not _is_line(a):
        raise ValueError(f"{render(e)} is not a line bundle")
    (key, _), = a.items()
    return key


def canonical_class(tower: Tower) -> BundleExpr:
    """K of the total space: sum over levels of -(n det S + r det A)."""
    m = tower.top
    total: NF = {_zero_key(tower, m): 1}
    for lev in range(m + 1):
        n, r = tower.n(lev), tower.r(lev)
        det_s = nf(LineTwist(lev, -n), tower, m)
        dk = _det_ambient_dual(tower, lev)
        const, blocks = dk
        pad = _zero_key(tower, m)[1][len(blocks):]
        det_a_dual = {(const, blocks + pad): 1}
        total = nf_tensor(total, nf_tensor(det_s, _line_power(det_a_dual, r)))
    total = canonicalize(total, tower, m)
    (key, _), = total.items()
    return key_to_expr(key)


def describe_line(tower: Tower, e: BundleExpr) -> dict[str, int]:
    """Coefficients of a line in the det S_l basis (plus the det V* character)."""
    const, blocks = line_key(e, tower)
    out = {f"detS@{lev}": b[0] for lev, (b, _) in enumerate(blocks) if b[0]}
    if const[0]:
        out["detV*"] = const[0]
    return out


# ---------------------------------------------------------------- catalogue

V5 = 5
STD_DUAL = (1, 0, 0, 0, 0)  # V*


def _vee(n: int) -> Weight:
    return (0,) * (n - 1) + (-1,)


def make_pv(n: int = V5) -> Tower:
    return Tower(
        "pv",
        n,
        (Level(1),),
        divisors={"H": LineTwist(0, 1), "L": LineTwist(0, 1)},
        aliases={"T(-1)": TautQ(0), "Omega(1)": Dual(TautQ(0))},
        default_divisor="H",
        description="P(V) = G(1,V); O(1) = S",
    )


def make_g2v(n: int = V5) -> Tower:
    return Tower(
        "g2v",
        n,
        (Level(2),),
        divisors={"L": LineTwist(0, 1)},
        aliases={"F": TautS(0), "G": TautQ(0)},
        default_divisor="L",
        description="G(2,V) with F = S, G = Q",
    )


def make_chow_hat(n: int = V5) -> Tower:
    return Tower(
        "chow-hat",
        n,
        (Level(2), Level(1, SymPow(2, Dual(TautS(0))))),
        divisors={"H": LineTwist(1, 1), "L": LineTwist(0, 1)},
        aliases={"F": TautS(0), "G": TautQ(0)},
        default_divisor="H",
        description="P(S^2 F*) over G(2,V)",
    )


def make_y3(n: int = V5) -> Tower:
    return Tower(
        "y3",
        n,
        (Level(1), Level(3, ExtPow(2, TautQ(0)))),
        divisors={"L": LineTwist(0, 1)},
        aliases={"T(-1)": TautQ(0), "Omega(1)": Dual(TautQ(0))},
        default_divisor="L",
        description="G(3, wedge^2 T(-1)) over P(V)",
    )


def make_p_rho(n: int = V5) -> Tower:
    return Tower(
        "p-rho",
        n,
        (Level(1), Level(1, TautQ(0))),
        divisors={"H": LineTwist(1, 1), "L": LineTwist(0, 1)},
        aliases={"R": TautQ(1), "T(-1)": TautQ(0), "Omega(1)": Dual(TautQ(0))},
        default_divisor="H",
        description="P(T(-1)) over P(V); R = Q on the top level",
    )


def make_g3v(n: int = V5) -> Tower:
    return Tower(
        "g3v",
        n,
        (Level(3),),
        divisors={"N": LineTwist(0, 1)},
        aliases={"U": TautS(0), "W": TautQ(0)},
        default_divisor="N",
        description="G(3,V) with U = S, W = Q, O(1) = det U",
    )


def sym2_vdual(n: int) -> RepSum:
    return RepSum.single((2,) + (0,) * (n - 1))


def make_z(n: int = V5) -> Tower:
    # E* = ker(S^2 V* (x) O -> S^2 U); det E = O(4) (x) det(S^2 V)
    c = n + 1  # each index occurs n+1 times in the weights of S^2 V
    det_e_star = tensor(LineTwist(0, -4), ConstRep((c,) * n))
    amb = ResolvedAmbient(sym2_vdual(n), SymPow(2, TautS(0)), det_e_star, "E*")
    return Tower(
        "z",
        n,
        (Level(3), Level(1, amb)),
        divisors={"M": LineTwist(1, 1), "N": LineTwist(0, 1)},
        aliases={"U": TautS(0), "W": TautQ(0)},
        default_divisor="M",
        description="P(E*) over G(3,V)",
    )


_BUILDERS = {
    "chow-hat": make_chow_hat,
    "y3": make_y3,
    "p-rho": make_p_rho,
    "g3v": make_g3v,
    "z": make_z,
    "pv": make_pv,
    "g2v": make_g2v,
}

_CATALOGUE: dict[str, Tower] = {}


def get_tower(name: str) -> Tower:
    if name not in _BUILDERS:
        raise KeyError(f"unknown tower {name!r}; known: {sorted(_BUILDERS)}")
    if name not in _CATALOGUE:
        _CATALOGUE[name] = _BUILDERS[name]()
    return _CATALOGUE[name]


def builtin_towers() -> dict[str, Tower]:
    return {name: get_tower(name) for name in _BUILDERS}


def const_rep(w: Iterable[int]) -> ConstRep:
    return ConstRep(tuple(w))
