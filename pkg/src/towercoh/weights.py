"""GL(n) weight combinatorics: dominance, the rho-sort, dimensions and characters."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import prod
from typing import Iterable, Iterator, Mapping

Weight = tuple[int, ...]


class ResourceCapExceeded(RuntimeError):
    """Raised when an enumeration would exceed the configured size cap."""


@dataclass
class Limits:
    multiset_cap: int = 10**7


LIMITS = Limits()
_CACHES: list = []


def register_cache(fn):
    """Mark an lru_cache'd function so a cap change starts from a clean slate."""
    _CACHES.append(fn)
    return fn


def set_multiset_cap(cap: int) -> None:
    # cached results would skip the size check, so drop them
    LIMITS.multiset_cap = cap
    for fn in _CACHES:
        fn.cache_clear()


def is_dominant(w: Iterable[int]) -> bool:
    w = tuple(w)
    return all(w[i] >= w[i + 1] for i in range(len(w) - 1))


def check_weight(w: Iterable[int]) -> Weight:
    w = tuple(int(x) for x in w)
    if not w:
        raise ValueError("weights need rank >= 1")
    if not is_dominant(w):
        raise ValueError(f"weight {w} is not weakly decreasing")
    return w


def parity_sign(d: int) -> int:
    """(-1)^d as an int, also for negative d."""
    return -1 if d % 2 else 1


def dual_weight(w: Weight) -> Weight:
    return tuple(-x for x in reversed(w))


def shift(w: Weight, k: int) -> Weight:
    return tuple(x + k for x in w)


class _Singular:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Singular"

    def __reduce__(self):
        return (_Singular, ())


Singular = _Singular()


@dataclass(frozen=True)
class BottResult:
    weight: Weight
    length: int


def bott_sort(alpha: Iterable[int]) -> BottResult | _Singular:
    """Add rho = (n, ..., 1); vanish on a repeat, else sort and count inversions."""
    alpha = tuple(alpha)
    n = len(alpha)
    if n < 1:
        raise ValueError("need n >= 1")
    shifted = [a + n - i for i, a in enumerate(alpha)]
    if len(set(shifted)) < n:
        return Singular
    inversions = sum(1 for i in range(n) for j in range(i + 1, n) if shifted[i] < shifted[j])
    ordered = sorted(shifted, reverse=True)
    return BottResult(tuple(x - (n - i) for i, x in enumerate(ordered)), inversions)


def weyl_dim(w: Iterable[int]) -> int:
    w = tuple(w)
    n = len(w)
    num = prod(w[i] - w[j] + j - i for i in range(n) for j in range(i + 1, n))
    den = prod(j - i for i in range(n) for j in range(i + 1, n))
    return num // den


def _interlacing(lam: Weight) -> Iterator[Weight]:
    """Partitions mu with lam[i+1] <= mu[i] <= lam[i], one part shorter."""
    n = len(lam)
    ranges = [range(lam[i + 1], lam[i] + 1) for i in range(n - 1)]

    def rec(i: int, acc: list[int]) -> Iterator[Weight]:
        if i == n - 1:
            yield tuple(acc)
            return
        for x in ranges[i]:
            acc.append(x)
            yield from rec(i + 1, acc)
            acc.pop()

    yield from rec(0, [])


@register_cache
@lru_cache(maxsize=4096)
def _partition_character(lam: Weight) -> tuple[tuple[Weight, int], ...]:
    # Gelfand-Tsetlin branching: peel off the last variable.
    n = len(lam)
    if n == 1:
        return (((lam[0],), 1),)
    total = sum(lam)
    out: dict[Weight, int] = {}
    for mu in _interlacing(lam):
        e = total - sum(mu)
        for m, c in _partition_character(mu):
            key = m + (e,)
            out[key] = out.get(key, 0) + c
    if len(out) > LIMITS.multiset_cap:
        raise ResourceCapExceeded(f"character of {lam} has {len(out)} weights")
    return tuple(sorted(out.items()))


def weight_multiset(w: Iterable[int]) -> dict[Weight, int]:
    """Full character of the irreducible with highest weight w."""
    w = check_weight(w)
    k = -min(0, w[-1])
    lam = shift(w, k)
    if weyl_dim(lam) > LIMITS.multiset_cap:
        raise ResourceCapExceeded(f"dimension of {w} exceeds the cap")
    return {shift(m, -k): c for m, c in _partition_character(lam)}


@register_cache
@lru_cache(maxsize=8192)
def dominant_multiplicities(w: Weight) -> tuple[tuple[Weight, int], ...]:
    """Kostka-type multiplicities of the dominant weights of Sigma^w."""
    return tuple((m, c) for m, c in sorted(weight_multiset(w).items()) if is_dominant(m))


class RepSum:
    """A virtual GL(rank) representation: weight -> integer multiplicity."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms: Mapping[Weight, int] | None = None):
        if rank < 1:
            raise ValueError("rank must be positive")
        self.rank = rank
        clean: dict[Weight, int] = {}
        for w, m in (terms or {}).items():
            w = check_weight(w)
            if len(w) != rank:
                raise ValueError(f"weight {w} does not have rank {rank}")
            if m:
                clean[w] = clean.get(w, 0) + m
        self.terms = {w: m for w, m in clean.items() if m}

    @classmethod
    def single(cls, w: Iterable[int], mult: int = 1) -> RepSum:
        w = tuple(w)
        return cls(len(w), {w: mult})

    @classmethod
    def trivial(cls, rank: int) -> RepSum:
        return cls(rank, {(0,) * rank: 1})

    @classmethod
    def zero(cls, rank: int) -> RepSum:
        return cls(rank, {})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RepSum):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.rank, tuple(sorted(self.terms.items()))))

    def __add__(self, other: RepSum) -> RepSum:
        self._same_rank(other)
        out = dict(self.terms)
        for w, m in other.terms.items():
            out[w] = out.get(w, 0) + m
        return RepSum(self.rank, out)

    def __neg__(self) -> RepSum:
        return RepSum(self.rank, {w: -m for w, m in self.terms.items()})

    def __sub__(self, other: RepSum) -> RepSum:
        return self + (-other)

    def scale(self, k: int) -> RepSum:
        return RepSum(self.rank, {w: k * m for w, m in self.terms.items()})

    def _same_rank(self, other: RepSum) -> None:
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch {self.rank} vs {other.rank}")

    def items(self) -> list[tuple[Weight, int]]:
        return sorted(self.terms.items(), reverse=True)

    def dim(self) -> int:
        return sum(m * weyl_dim(w) for w, m in self.terms.items())

    def is_honest(self) -> bool:
        return all(m > 0 for m in self.terms.values())

    def modulo_det(self) -> RepSum:
        """Normalize every weight so its last part is 0 (SL-class of the rep)."""
        out: dict[Weight, int] = {}
        for w, m in self.terms.items():
            v = shift(w, -w[-1])
            out[v] = out.get(v, 0) + m
        return RepSum(self.rank, out)

    def __repr__(self) -> str:
        if not self.terms:
            return f"RepSum({self.rank}, 0)"
        body = " + ".join(f"{m}*{w}" if m != 1 else str(w) for w, m in self.items())
        return f"RepSum({self.rank}: {body})"

    def to_json(self) -> list[dict[str, object]]:
        return [{"weight": list(w), "mult": m} for w, m in self.items()]
