"""G(3,6) through symmetric pairs: Pluecker vectors, symmetric pairs (v, w), the ideal
generators in (v, w), and seeded samplers for the rank strata.

The six basis vectors of wedge^2 C^4 are ordered 12, 13, 23, 14, 24, 34 and referred
to as 1..6.  All arithmetic is exact over the rationals.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Iterable, Sequence

Matrix = list[list[Fraction]]

PAIRS: tuple[tuple[int, int], ...] = ((1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4))
TRIPLES: tuple[tuple[int, int, int], ...] = tuple(combinations(range(1, 7), 3))
PROFILES = ("generic", "rank2", "rank1", "veronese_rho", "veronese_sigma")


class RankDeficient(ValueError):
    """The 3x6 matrix does not have full row rank."""


class NotOnGrassmannian(ValueError):
    """A relation check was asked for a pair with nonzero ideal residuals."""


# ---------------------------------------------------------------- linear algebra


def as_matrix(rows: Iterable[Iterable[object]]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def zeros(n: int, m: int | None = None) -> Matrix:
    return [[Fraction(0)] * (m if m is not None else n) for _ in range(n)]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def scale(a: Matrix, c: Fraction) -> Matrix:
    return [[c * x for x in row] for row in a]


def _echelon(a: Matrix) -> tuple[Matrix, int, Fraction]:
    """Row echelon form, rank, and the sign/pivot product (determinant if square)."""
    m = [list(row) for row in a]
    rows = len(m)
    cols = len(m[0]) if m else 0
    r = 0
    det = Fraction(1)
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            det = Fraction(0)
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
            det = -det
        det *= m[r][c]
        for i in range(r + 1, rows):
            if m[i][c]:
                f = m[i][c] / m[r][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == rows:
            break
    return m, r, det


def rank(a: Matrix) -> int:
    if not a or not a[0]:
        return 0
    return _echelon(a)[1]


def det(a: Matrix) -> Fraction:
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    _, r, d = _echelon(a)
    return d if r == n else Fraction(0)


def minor2(a: Matrix, rows: tuple[int, int], cols: tuple[int, int]) -> Fraction:
    (i, k), (j, m) = rows, cols
    return a[i - 1][j - 1] * a[k - 1][m - 1] - a[i - 1][m - 1] * a[k - 1][j - 1]


def is_symmetric(a: Matrix) -> bool:
    return all(a[i][j] == a[j][i] for i in range(len(a)) for j in range(i))


def perm_sign(seq: Sequence[int]) -> int:
    s = 1
    seq = list(seq)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                s = -s
            elif seq[i] == seq[j]:
                return 0
    return s


# ---------------------------------------------------------------- Pluecker vectors


@dataclass(frozen=True)
class PluckerVector:
    coords: tuple[Fraction, ...]  # indexed like TRIPLES

    def __post_init__(self) -> None:
        if len(self.coords) != 20:
            raise ValueError("a Pluecker vector has 20 coordinates")
        if not any(self.coords):
            raise ValueError("the zero vector is not a projective point")

    @classmethod
    def from_dict(cls, values: dict[tuple[int, int, int], object]) -> PluckerVector:
        coords = [Fraction(0)] * 20
        for idx, x in values.items():
            s = perm_sign(idx)
            if s == 0:
                continue
            coords[TRIPLES.index(tuple(sorted(idx)))] += s * Fraction(x)
        return cls(tuple(coords))

    def __call__(self, a: int, b: int, c: int) -> Fraction:
        """Totally antisymmetric access p_{abc}."""
        s = perm_sign((a, b, c))
        if s == 0:
            return Fraction(0)
        return s * self.coords[TRIPLES.index(tuple(sorted((a, b, c))))]

    def scaled(self, c: Fraction) -> PluckerVector:
        return PluckerVector(tuple(c * x for x in self.coords))


def plucker_from_matrix(m: Sequence[Sequence[object]]) -> PluckerVector:
    rows = as_matrix(m)
    if len(rows) != 3 or any(len(r) != 6 for r in rows):
        raise ValueError("need a 3x6 matrix")
    if rank(rows) < 3:
        raise RankDeficient("the rows do not span a 3-dimensional subspace")
    (a, b, c) = rows
    coords = []
    for i, j, k in TRIPLES:
        i, j, k = i - 1, j - 1, k - 1
        coords.append(
            a[i] * (b[j] * c[k] - b[k] * c[j]) - a[j] * (b[i] * c[k] - b[k] * c[i]) + a[k] * (b[i] * c[j] - b[j] * c[i])
        )
    return PluckerVector(tuple(coords))


# ---------------------------------------------------------------- symmetric pairs


@dataclass(frozen=True)
class SymPair:
    v: tuple[tuple[Fraction, ...], ...]
    w: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def of(cls, v: Sequence[Sequence[object]], w: Sequence[Sequence[object]]) -> SymPair:
        vm, wm = as_matrix(v), as_matrix(w)
        for name, a in (("v", vm), ("w", wm)):
            if len(a) != 4 or any(len(r) != 4 for r in a):
                raise ValueError(f"{name} must be 4x4")
            if not is_symmetric(a):
                raise ValueError(f"{name} must be symmetric")
        return cls(tuple(map(tuple, vm)), tuple(map(tuple, wm)))

    @property
    def vm(self) -> Matrix:
        return [list(r) for r in self.v]

    @property
    def wm(self) -> Matrix:
        return [list(r) for r in self.w]

    def to_json(self) -> dict[str, list[list[str]]]:
        return {"v": _json_matrix(self.v), "w": _json_matrix(self.w)}

    @classmethod
    def from_json(cls, data: dict[str, list[list[str]]]) -> SymPair:
        return cls.of([[Fraction(x) for x in r] for r in data["v"]], [[Fraction(x) for x in r] for r in data["w"]])


def _json_matrix(a: Iterable[Iterable[Fraction]]) -> list[list[str]]:
    return [[f"{x.numerator}/{x.denominator}" for x in row] for row in a]


def vw_from_plucker(p: PluckerVector) -> SymPair:
    v = zeros(4)
    w = zeros(4)
    upper_v = {
        (1, 1): 2 * p(1, 2, 4),
        (1, 2): p(1, 3, 4) + p(1, 2, 5),
        (1, 3): p(2, 3, 4) + p(1, 2, 6),
        (1, 4): p(1, 4, 6) - p(2, 4, 5),
        (2, 2): 2 * p(1, 3, 5),
        (2, 3): p(2, 3, 5) + p(1, 3, 6),
        (2, 4): p(1, 5, 6) - p(3, 4, 5),
        (3, 3): 2 * p(2, 3, 6),
        (3, 4): p(2, 5, 6) - p(3, 4, 6),
        (4, 4): 2 * p(4, 5, 6),
    }
    upper_w = {
        (1, 1): 2 * p(3, 5, 6),
        (1, 2): -p(3, 4, 6) - p(2, 5, 6),
        (1, 3): p(3, 4, 5) + p(1, 5, 6),
        (1, 4): p(2, 3, 5) - p(1, 3, 6),
        (2, 2): 2 * p(2, 4, 6),
        (2, 3): -p(2, 4, 5) - p(1, 4, 6),
        (2, 4): p(1, 2, 6) - p(2, 3, 4),
        (3, 3): 2 * p(1, 4, 5),
        (3, 4): p(1, 3, 4) - p(1, 2, 5),
        (4, 4): 2 * p(1, 2, 3),
    }
    for (i, j), x in upper_v.items():
        v[i - 1][j - 1] = v[j - 1][i - 1] = x
    for (i, j), x in upper_w.items():
        w[i - 1][j - 1] = w[j - 1][i - 1] = x
    return SymPair.of(v, w)


def linear_map_matrix() -> Matrix:
    """The 20x20 matrix of p -> (upper triangle of v, upper triangle of w)."""
    cols = []
    for k in range(20):
        e = [Fraction(0)] * 20
        e[k] = Fraction(1)
        s = vw_from_plucker(PluckerVector(tuple(e)))
        col = [s.v[i][j] for i in range(4) for j in range(i, 4)] + [s.w[i][j] for i in range(4) for j in range(i, 4)]
        cols.append(col)
    return [[cols[k][r] for k in range(20)] for r in range(20)]


# ---------------------------------------------------------------- the ideal


def complement(pair: tuple[int, int]) -> tuple[int, int]:
    rest = tuple(x for x in (1, 2, 3, 4) if x not in pair)
    return rest  # type: ignore[return-value]


def epsilon(pair: tuple[int, int]) -> int:
    return perm_sign(pair + complement(pair))


def ideal_residuals(s: SymPair) -> list[Fraction]:
    """All generators of the ideal evaluated at (v, w).

    36 minor relations, the 12 off-diagonal entries of v.w, and the 3 differences
    of consecutive diagonal entries.  The list is zero exactly on G(3,6).
    """
    v, w = _fast(s.v), _fast(s.w)
    out = []
    for a in PAIRS:
        for b in PAIRS:
            rhs = epsilon(a) * epsilon(b) * minor2(w, complement(a), complement(b))
            out.append(minor2(v, a, b) - rhs)
    vw = matmul(v, w)
    out += [vw[i][j] for i in range(4) for j in range(4) if i != j]
    out += [vw[i][i] - vw[i + 1][i + 1] for i in range(3)]
    return [Fraction(x) for x in out]


def _fast(a: tuple[tuple[Fraction, ...], ...]) -> list[list]:
    # plain ints are much faster than Fractions with denominator 1
    if all(x.denominator == 1 for row in a for x in row):
        return [[x.numerator for x in row] for row in a]
    return [list(row) for row in a]


def on_grassmannian(s: SymPair) -> bool:
    return not any(ideal_residuals(s))


@dataclass
class RelationReport:
    det_v: Fraction
    det_w: Fraction
    rank_v: int
    rank_w: int
    scalar: Fraction | None
    checks: dict[str, bool]

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict[str, object]:
        return {
            "det_v": str(self.det_v),
            "det_w": str(self.det_w),
            "rank_v": self.rank_v,
            "rank_w": self.rank_w,
            "scalar": None if self.scalar is None else str(self.scalar),
            "checks": dict(self.checks),
        }


def check_relations(s: SymPair, residuals_checked: bool = False) -> RelationReport:
    if not residuals_checked and not on_grassmannian(s):
        raise NotOnGrassmannian("ideal residuals are nonzero")
    v, w = s.vm, s.wm
    dv, dw = det(v), det(w)
    rv, rw = rank(v), rank(w)
    vw = matmul(v, w)
    d = vw[0][0]
    scalar_ok = vw == scale(identity(4), d)
    checks = {
        "I1": dv == dw,
        "I2": scalar_ok and d * d == dw,
        "I3": rw != 3 and rv != 3,
        "I4": (rw == 2) == (rv == 2),
        "I5": (rw <= 1) == (rv <= 1),
    }
    return RelationReport(dv, dw, rv, rw, d if scalar_ok else None, checks)


def rank2_equation(s: SymPair, t: Fraction | int = 1) -> Fraction:
    """(v11 v22 - v12^2) - t^2 (w33 w44 - w34^2) for the point [v, t w].

    `s` holds v and the fixed representative w, not the scaled t w.
    """
    v, w = s.v, s.w
    return (v[0][0] * v[1][1] - v[0][1] ** 2) - Fraction(t) ** 2 * (w[2][2] * w[3][3] - w[2][3] ** 2)


# ---------------------------------------------------------------- samplers


def _frac(rng: random.Random, bound: int = 5) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, 3))


def _nonzero(rng: random.Random) -> Fraction:
    while True:
        x = _frac(rng)
        if x:
            return x


def random_matrix(rng: random.Random) -> Matrix:
    while True:
        m = [[_frac(rng) for _ in range(6)] for _ in range(3)]
        if rank(m) == 3:
            return m


def _outer(x: Sequence[Fraction], y: Sequence[Fraction], c: Fraction = Fraction(1)) -> Matrix:
    return [[c * a * b for b in y] for a in x]


def _vector(rng: random.Random) -> list[Fraction]:
    while True:
        x = [_frac(rng) for _ in range(4)]
        if any(x):
            return x


def _orthogonal(rng: random.Random, x: Sequence[Fraction]) -> list[Fraction]:
    """A nonzero vector a with a . x = 0."""
    k = next(i for i, xi in enumerate(x) if xi)
    while True:
        a = [_frac(rng) for _ in range(4)]
        a[k] = Fraction(0)
        a[k] = -sum((ai * xi for ai, xi in zip(a, x)), Fraction(0)) / x[k]
        if any(a):
            return a


def integral(s: SymPair) -> SymPair:
    """The same projective point with the denominators cleared."""
    m = 1
    for row in s.v + s.w:
        for x in row:
            m = lcm(m, x.denominator)
    return SymPair.of(scale(s.vm, Fraction(m)), scale(s.wm, Fraction(m)))


def sample(profile: str, seed: int, t: Fraction | int | None = None) -> SymPair:
    """A deterministic point of G(3,6) from the requested stratum, with integral entries."""
    return integral(_sample(profile, seed, t))


def _sample(profile: str, seed: int, t: Fraction | int | None) -> SymPair:
    rng = random.Random(f"{profile}:{seed}")
    if profile == "generic":
        return vw_from_plucker(plucker_from_matrix(random_matrix(rng)))
    if profile == "rank2":
        tt = Fraction(t) if t is not None else _nonzero(rng)
        while True:
            w2 = [[_frac(rng), None], [None, _frac(rng)]]
            w2[0][1] = w2[1][0] = _frac(rng)
            dw = w2[0][0] * w2[1][1] - w2[0][1] ** 2
            if dw:
                break
        v11, v12 = _nonzero(rng), _frac(rng)
        v22 = (tt * tt * dw + v12 * v12) / v11
        v = zeros(4)
        v[0][0], v[0][1], v[1][0], v[1][1] = v11, v12, v12, v22
        w = zeros(4)
        for i in range(2):
            for j in range(2):
                w[2 + i][2 + j] = tt * w2[i][j]
        return SymPair.of(v, w)
    if profile == "rank1":
        x = _vector(rng)
        a = _orthogonal(rng, x)
        return SymPair.of(_outer(x, x), _outer(a, a, _nonzero(rng)))
    if profile == "veronese_rho":
        x = _vector(rng)
        return SymPair.of(_outer(x, x), zeros(4))
    if profile == "veronese_sigma":
        a = _vector(rng)
        return SymPair.of(zeros(4), _outer(a, a))
    raise ValueError(f"unknown profile {profile!r}; known: {', '.join(PROFILES)}")


CONIC_ROWS = ((0, 1, 0, 0, 0, 0), (0, 0, 1, 1, 0, 0), (0, 0, 0, 0, 1, 0))


def conic_point() -> SymPair:
    """The conic point spanned by e13, e14 + e23, e24."""
    return vw_from_plucker(plucker_from_matrix(CONIC_ROWS))


def antidiag(entries: Sequence[int]) -> Matrix:
    m = zeros(4)
    for i, x in enumerate(entries):
        m[i][3 - i] = Fraction(x)
    return m


# ---------------------------------------------------------------- suite


def run_suite(samples: int = 1000, seed: int = 0) -> dict[str, object]:
    """Residuals and relations over all profiles, plus the fixed checks."""
    per_profile: dict[str, dict[str, object]] = {}
    failures: list[dict[str, object]] = []
    rank3_seen = False
    for profile in PROFILES:
        stats = {"samples": samples, "nonzero_residuals": 0, "relation_failures": 0, "rank_pairs": {}}
        for k in range(samples):
            s = sample(profile, seed * 1_000_003 + k)
            res = ideal_residuals(s)
            if any(res):
                stats["nonzero_residuals"] += 1
                failures.append({"profile": profile, "index": k, "point": s.to_json()})
                continue
            rep = check_relations(s, residuals_checked=True)
            key = f"{rep.rank_v},{rep.rank_w}"
            stats["rank_pairs"][key] = stats["rank_pairs"].get(key, 0) + 1
            if rep.rank_w == 3 or rep.rank_v == 3:
                rank3_seen = True
            if not rep.ok:
                stats["relation_failures"] += 1
                failures.append({"profile": profile, "index": k, "checks": rep.checks})
        stats["rank_pairs"] = dict(sorted(stats["rank_pairs"].items()))
        per_profile[profile] = stats
    st = conic_point()
    conic_ok = st.vm == antidiag((-1, 1, 1, -1)) and st.wm == antidiag((1, -1, -1, 1))
    conic_rel = check_relations(st)
    bijection_rank = rank(linear_map_matrix())
    ok = not failures and conic_ok and conic_rel.ok and not rank3_seen and bijection_rank == 20
    return {
        "suite": "appendix-a",
        "seed": seed,
        "samples_per_profile": samples,
        "profiles": per_profile,
        "failures": failures[:20],
        "conic_point": {"matches": conic_ok, "point": st.to_json(), "relations": conic_rel.to_json()},
        "rank3_observed": rank3_seen,
        "linear_map_rank": bijection_rank,
        "verdict": "PASS" if ok else "FAIL",
    }


__all__ = [
    "NotOnGrassmannian",
    "PluckerVector",
    "RankDeficient",
    "RelationReport",
    "SymPair",
    "check_relations",
    "ideal_residuals",
    "linear_map_matrix",
    "plucker_from_matrix",
    "rank2_equation",
    "run_suite",
    "sample",
    "conic_point",
    "vw_from_plucker",
]
