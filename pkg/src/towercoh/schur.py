"""Representation-ring algebra: LR products, duals, lambda-ring powers, plethysm."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from .weights import (
    RepSum,
    Weight,
    check_weight,
    dominant_multiplicities,
    dual_weight,
    is_dominant,
    register_cache,
    shift,
    weight_multiset,
)

# exponent vector -> multiplicity
LaurentCharacter = dict[tuple[int, ...], int]


def _lr_partitions(lam: Weight, mu: Weight, rank: int) -> dict[Weight, int]:
    """LR coefficients c^nu_{lam,mu} for partitions, nu truncated to `rank` rows."""
    mu = tuple(x for x in mu if x > 0)
    if not mu:
        return {lam: 1}
    out: dict[Weight, int] = {}
    n = rank

    def place(letter: int, shape: list[int], prev_counts: list[int]) -> None:
        # prev_counts[r] = number of (letter-1) boxes in row r (lattice bookkeeping)
        if letter == len(mu):
            nu = tuple(shape)
            out[nu] = out.get(nu, 0) + 1
            return
        need = mu[letter]
        old = list(shape)
        counts = [0] * n

        def row(r: int, remaining: int, cum_this: int, cum_prev: int) -> None:
            if r == n:
                if remaining == 0:
                    new_shape = [old[i] + counts[i] for i in range(n)]
                    place(letter + 1, new_shape, list(counts))
                return
            # horizontal strip: new length in row r at most old length of row r-1
            cap = (old[r - 1] - old[r]) if r > 0 else remaining
            cap = min(cap, remaining)
            for k in range(cap, -1, -1):
                if letter > 0 and cum_this + k > cum_prev:
                    continue
                counts[r] = k
                row(r + 1, remaining - k, cum_this + k, cum_prev + (prev_counts[r] if letter > 0 else 0))
            counts[r] = 0

        row(0, need, 0, 0)

    place(0, list(lam) + [0] * (n - len(lam)), [0] * n)
    return out


@register_cache
@lru_cache(maxsize=200_000)
def _lr_cached(a: Weight, b: Weight) -> tuple[tuple[Weight, int], ...]:
    n = len(a)
    ka = -min(0, a[-1])
    kb = -min(0, b[-1])
    la, lb = shift(a, ka), shift(b, kb)
    # put the larger factor first; the rule is symmetric
    if sum(lb) > sum(la):
        la, lb = lb, la
    raw = _lr_partitions(la, lb, n)
    return tuple(sorted((shift(nu, -ka - kb), c) for nu, c in raw.items()))


def lr_product(a: Iterable[int], b: Iterable[int]) -> RepSum:
    a, b = check_weight(a), check_weight(b)
    if len(a) != len(b):
        raise ValueError("lr_product needs equal ranks")
    return RepSum(len(a), dict(_lr_cached(a, b)))


def rep_product(x: RepSum, y: RepSum) -> RepSum:
    x._same_rank(y)
    out: dict[Weight, int] = {}
    for a, m in x.terms.items():
        for b, k in y.terms.items():
            for nu, c in _lr_cached(a, b):
                out[nu] = out.get(nu, 0) + m * k * c
    return RepSum(x.rank, out)


def dual_rep(r: RepSum) -> RepSum:
    return RepSum(r.rank, {dual_weight(w): m for w, m in r.terms.items()})


def character(r: RepSum) -> LaurentCharacter:
    out: LaurentCharacter = {}
    for w, m in r.terms.items():
        for e, c in weight_multiset(w).items():
            out[e] = out.get(e, 0) + m * c
    return {e: c for e, c in out.items() if c}


def _split(e: tuple[int, ...], ranks: Sequence[int]) -> tuple[Weight, ...]:
    out, i = [], 0
    for r in ranks:
        out.append(tuple(e[i:i + r]))
        i += r
    return tuple(out)


@register_cache
@lru_cache(maxsize=100_000)
def _block_dominant(ws: tuple[Weight, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    parts = [dominant_multiplicities(w) for w in ws]
    acc: list[tuple[tuple[int, ...], int]] = [((), 1)]
    for p in parts:
        acc = [(e + f, c * d) for e, c in acc for f, d in p]
    return tuple(acc)


def decompose_blocks(c: LaurentCharacter, ranks: Sequence[int]) -> dict[tuple[Weight, ...], int]:
    """Decompose a character of GL(r1) x ... x GL(rk) by leading-weight subtraction.

    Only dominant monomials are kept; the input must be symmetric in each block.
    """
    dom = {e: m for e, m in c.items() if m and all(is_dominant(b) for b in _split(e, ranks))}
    out: dict[tuple[Weight, ...], int] = {}
    while dom:
        top = max(dom)
        m = dom[top]
        ws = _split(top, ranks)
        out[ws] = m
        for e, k in _block_dominant(ws):
            v = dom.get(e, 0) - m * k
            if v:
                dom[e] = v
            elif e in dom:
                del dom[e]
        if top in dom:
            raise ValueError("character is not symmetric")
    return out


def decompose_character(c: LaurentCharacter) -> RepSum:
    if not c:
        raise ValueError("empty character has no rank")
    rank = len(next(iter(c)))
    if len(set(len(e) for e in c)) != 1:
        raise ValueError("mixed exponent lengths")
    for e, m in c.items():
        if m and c.get(tuple(sorted(e, reverse=True)), 0) != m:
            raise ValueError("character is not symmetric")
    blocks = decompose_blocks(c, [rank])
    return RepSum(rank, {ws[0]: m for ws, m in blocks.items()})


def apply_schur_to_monomials(outer: Weight, monomials: Sequence[tuple[int, ...]]) -> LaurentCharacter:
    """Evaluate s_outer on the given list of monomials (exponent vectors)."""
    m = len(monomials)
    if len(outer) != m:
        raise ValueError("outer rank must equal number of monomials")
    if m == 0:
        return {}
    width = len(monomials[0])
    out: LaurentCharacter = {}
    for content, mult in weight_multiset(outer).items():
        e = [0] * width
        for ci, y in zip(content, monomials):
            if ci:
                for j, yj in enumerate(y):
                    e[j] += ci * yj
        key = tuple(e)
        out[key] = out.get(key, 0) + mult
    return {e: c for e, c in out.items() if c}


def monomial_list(c: LaurentCharacter) -> list[tuple[int, ...]]:
    out = []
    for e, m in sorted(c.items()):
        if m < 0:
            raise ValueError("plethysm needs an honest inner representation")
        out.extend([e] * m)
    return out


def plethysm_apply(outer: Iterable[int], inner: RepSum) -> RepSum:
    outer = check_weight(outer)
    if inner.dim() != len(outer):
        raise ValueError("dim(inner) must equal rank(outer)")
    chi = apply_schur_to_monomials(outer, monomial_list(character(inner)))
    if not chi:
        return RepSum.zero(inner.rank)
    return decompose_character(chi)


def _sym_character(k: int, monomials: Sequence[tuple[int, ...]], width: int) -> LaurentCharacter:
    out: LaurentCharacter = {}
    for combo in combinations_with_replacement(range(len(monomials)), k):
        e = [0] * width
        for i in combo:
            for j, x in enumerate(monomials[i]):
                e[j] += x
        key = tuple(e)
        out[key] = out.get(key, 0) + 1
    return out


def _ext_character(k: int, monomials: Sequence[tuple[int, ...]], width: int) -> LaurentCharacter:
    from itertools import combinations

    out: LaurentCharacter = {}
    for combo in combinations(range(len(monomials)), k):
        e = [0] * width
        for i in combo:
            for j, x in enumerate(monomials[i]):
                e[j] += x
        key = tuple(e)
        out[key] = out.get(key, 0) + 1
    return out


def _honest_power(kind: str, k: int, r: RepSum) -> RepSum:
    if k == 0:
        return RepSum.trivial(r.rank)
    if not r:
        return RepSum.zero(r.rank)
    mons = monomial_list(character(r))
    if kind == "ext" and k > len(mons):
        return RepSum.zero(r.rank)
    fn = _sym_character if kind == "sym" else _ext_character
    chi = {e: c for e, c in fn(k, mons, r.rank).items() if c}
    return decompose_character(chi) if chi else RepSum.zero(r.rank)


def power_op(kind: str, k: int, r: RepSum) -> RepSum:
    """k-th symmetric ("sym") or exterior ("ext") power of a virtual representation."""
    if kind not in ("sym", "ext"):
        raise ValueError(f"unknown power kind {kind!r}")
    if k < 0:
        raise ValueError("k must be nonnegative")
    pos = RepSum(r.rank, {w: m for w, m in r.terms.items() if m > 0})
    neg = RepSum(r.rank, {w: -m for w, m in r.terms.items() if m < 0})
    if not neg:
        return _honest_power(kind, k, pos)
    other = "ext" if kind == "sym" else "sym"
    total = RepSum.zero(r.rank)
    for j in range(k + 1):
        term = rep_product(_honest_power(kind, k - j, pos), _honest_power(other, j, neg))
        total = total + term.scale((-1) ** j)
    return total


def ssyt_count(outer: Weight, letters: int) -> int:
    """Number of SSYT of partition shape `outer` (padded) with entries in 1..letters."""
    lam = tuple(x for x in outer if x > 0)
    if len(lam) > letters:
        return 0
    lam = lam + (0,) * (letters - len(lam))
    from .weights import weyl_dim

    return weyl_dim(lam)


__all__ = [
    "LaurentCharacter",
    "apply_schur_to_monomials",
    "character",
    "decompose_blocks",
    "decompose_character",
    "dual_rep",
    "lr_product",
    "monomial_list",
    "plethysm_apply",
    "power_op",
    "rep_product",
    "ssyt_count",
]
