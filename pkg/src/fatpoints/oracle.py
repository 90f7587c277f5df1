"""Exact actual-dimension oracle over a large prime field.

The generic dimension of a fat-point system is computed by interpolation:
sample random points, build the matrix of vanishing conditions (Taylor rows
up to the imposed multiplicity, plus optional vanishing-along-a-line rows),
and row reduce modulo a word-sized prime. Specializing points can only
inflate h^0, so the minimum over independent trials is the generic value
with overwhelming probability; a second prime and seed are used by the
verification suites to cross-check.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iproduct

import numpy as np

from .combinatorics import binom
from .systems import (
    FatPointGroup,
    LinearSystem,
    Space,
    expected_dim,
    point_conditions,
    virtual_dim,
)

DEFAULT_PRIME = 2147483647  # 2^31 - 1; squares of residues fit in int64
SECOND_PRIME = 2147483629
THIRD_PRIME = 2147483587
DEFAULT_SEED = 271828

Point = tuple[tuple[int, ...], ...]  # homogeneous coordinates, one tuple per factor
LineScheme = tuple[int, int, int]  # (point index, point index, alpha)


class OracleSamplingError(RuntimeError):
    """Raised when no admissible random point configuration could be drawn."""


@dataclass(frozen=True)
class PrimeField:
    p: int = DEFAULT_PRIME


@dataclass(frozen=True)
class OracleConfig:
    prime: PrimeField = PrimeField()
    trials: int = 3
    seed: int = DEFAULT_SEED

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise ValueError("trials must be >= 1")


@dataclass(frozen=True)
class SubspaceScheme:
    """Constrain the first ``points_on`` system points inside a linear P^s.

    With ``vanish`` set, rows forcing identical vanishing on the subspace are
    added (enough simple points on it to kill every degree-d form).
    """

    s: int
    points_on: int
    vanish: bool = False


@dataclass(frozen=True)
class OracleResult:
    h0: int
    h1: int | None
    rank: int
    rows: int
    cols: int
    special: bool
    trials_used: int
    prime: int
    seed: int

    def to_json(self) -> dict:
        return {
            "h0": self.h0,
            "h1": self.h1,
            "rank": self.rank,
            "special": self.special,
            "prime": self.prime,
            "seed": self.seed,
            "trials": self.trials_used,
        }


@dataclass(frozen=True)
class CrossCheckedH0:
    """Agreement record for the two-prime / two-seed consistency check."""

    h0: int
    agreed: bool
    values: tuple[int, ...]
    primes: tuple[int, ...]


@lru_cache(maxsize=None)
def _factor_exponents(nvars: int, degree: int) -> tuple[tuple[int, ...], ...]:
    if nvars == 1:
        return ((degree,),)
    out = []
    for a in range(degree, -1, -1):
        for rest in _factor_exponents(nvars - 1, degree - a):
            out.append((a, *rest))
    return tuple(out)


@lru_cache(maxsize=None)
def _basis(factors: tuple[int, ...], multidegree: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """Monomial exponent vectors, factor blocks concatenated, lexicographic."""
    per_factor = [_factor_exponents(n + 1, d) for n, d in zip(factors, multidegree)]
    return tuple(tuple(x for block in combo for x in block) for combo in iproduct(*per_factor))


def monomial_exponents(space: Space, multidegree: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    return _basis(space.factors, tuple(multidegree))


def rank_mod_p(A: np.ndarray, p: int) -> int:
    """Rank of an integer matrix over F_p by dense forward elimination."""
    if A.size == 0:
        return 0
    A = np.asarray(A, dtype=np.int64) % p
    m, n = A.shape
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r, c:] = (A[r, c:] * inv) % p
        below = r + 1 + np.nonzero(A[r + 1 :, c])[0]
        if below.size:
            A[np.ix_(below, range(c, n))] = (
                A[np.ix_(below, range(c, n))] - np.outer(A[below, c], A[r, c:])
            ) % p
        r += 1
    return r


def _normalize_factor(coords: tuple[int, ...], p: int) -> tuple[int, ...]:
    """Scale so the largest-index nonzero coordinate becomes 1."""
    chart = max(i for i, x in enumerate(coords) if x % p != 0)
    inv = pow(coords[chart] % p, -1, p)
    return tuple((x * inv) % p for x in coords)


def sample_points(
    space: Space,
    h: int,
    cfg: OracleConfig,
    constraint: str | tuple[str, int] | None = None,
    trial: int = 0,
    salt: str = "",
) -> list[Point]:
    """Draw h deterministic pseudo-random points in general position.

    constraint: None, "coordinate-points" (the coordinate simplex, single
    factor only), or ("subspace", s) restricting to x_{s+1} = ... = x_n = 0.
    Unconstrained coordinates are sampled nonzero so every chart works; a
    repeated point triggers resampling.
    """
    if h < 0:
        raise ValueError("point count must be >= 0")
    p = cfg.prime.p
    if constraint == "coordinate-points":
        if space.nfactors != 1:
            raise NotImplementedError("coordinate points are only defined on a single factor")
        n = space.n
        if h > n + 1:
            raise OracleSamplingError(f"only {n + 1} coordinate points exist in P^{n}")
        return [
            (tuple(1 if j == i else 0 for j in range(n + 1)),) for i in range(h)
        ]

    sub_s: int | None = None
    if isinstance(constraint, tuple):
        kind, sub_s = constraint
        if kind != "subspace":
            raise ValueError(f"unknown sampling constraint {constraint!r}")
        if space.nfactors != 1 or not (1 <= sub_s <= space.n):
            raise ValueError("subspace constraint needs a single factor and 1 <= s <= n")
    elif constraint is not None:
        raise ValueError(f"unknown sampling constraint {constraint!r}")

    rng = random.Random(f"{cfg.seed}:{trial}:{p}:{salt}")
    points: list[Point] = []
    seen: set[Point] = set()
    attempts = 0
    while len(points) < h:
        attempts += 1
        if attempts > 64 * (h + 1):
            raise OracleSamplingError("could not sample distinct points in general position")
        factors = []
        for n in space.factors:
            width = (sub_s + 1) if sub_s is not None else (n + 1)
            coords = [rng.randrange(1, p) for _ in range(width)]
            coords += [0] * (n + 1 - width)
            factors.append(_normalize_factor(tuple(coords), p))
        pt: Point = tuple(factors)
        if pt in seen:
            continue
        seen.add(pt)
        points.append(pt)
    return points


def _falling_table(max_a: int, max_b: int, p: int) -> np.ndarray:
    """FALL[a, b] = a (a-1) ... (a-b+1) mod p, zero when b > a."""
    fall = np.zeros((max_a + 1, max_b + 1), dtype=np.int64)
    fall[:, 0] = 1
    for b in range(1, max_b + 1):
        for a in range(max_a + 1):
            fall[a, b] = fall[a, b - 1] * max(a - b + 1, 0) % p
    return fall


def _chart_positions(space: Space, point: Point, p: int) -> list[int]:
    """Global index of the normalized chart coordinate for each factor."""
    charts = []
    offset = 0
    for n, coords in zip(space.factors, point):
        charts.append(offset + max(i for i, x in enumerate(coords) if x % p != 0))
        offset += n + 1
    return charts


def _derivative_indices(space: Space, charts: list[int], m: int) -> list[tuple[int, ...]]:
    """Multi-indices of total order <= m-1 over the non-chart positions."""
    width = sum(n + 1 for n in space.factors)
    free = [v for v in range(width) if v not in charts]
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int], budget: int, i: int) -> None:
        if i == len(free):
            beta = [0] * width
            for v, b in zip(free, prefix):
                beta[v] = b
            out.append(tuple(beta))
            return
        for b in range(budget + 1):
            rec(prefix + [b], budget - b, i + 1)

    rec([], m - 1, 0)
    out.sort(key=lambda beta: (sum(beta), beta))
    return out


class _RowBuilder:
    """Shared tables for building condition rows of one system mod p."""

    def __init__(self, sys: LinearSystem, p: int):
        self.sys = sys
        self.p = p
        self.space = sys.space
        self.E = np.array(_basis(sys.space.factors, sys.multidegree), dtype=np.int64)
        self.cols = self.E.shape[0]
        self.width = self.E.shape[1]
        self.maxdeg = max(sys.multidegree) if sys.multidegree else 0
        max_order = max([g.multiplicity for g in sys.points] + [1])
        self.fall = _falling_table(self.maxdeg, max_order, p)

    def _pow_table(self, point: Point) -> np.ndarray:
        p = self.p
        flat = [x % p for coords in point for x in coords]
        pow_t = np.ones((self.width, self.maxdeg + 1), dtype=np.int64)
        for v, x in enumerate(flat):
            acc = 1
            for k in range(1, self.maxdeg + 1):
                acc = acc * x % p
                pow_t[v, k] = acc
        return pow_t

    def point_rows(self, point: Point, m: int) -> np.ndarray:
        if self.space.nfactors > 1 and m > 2:
            raise NotImplementedError("multiplicity >= 3 on products is not supported")
        p = self.p
        if m >= self.fall.shape[1]:
            self.fall = _falling_table(self.maxdeg, m, p)
        point = tuple(_normalize_factor(coords, p) for coords in point)
        charts = _chart_positions(self.space, point, p)
        betas = _derivative_indices(self.space, charts, m)
        pow_t = self._pow_table(point)
        rows = np.empty((len(betas), self.cols), dtype=np.int64)
        for r, beta in enumerate(betas):
            row = np.ones(self.cols, dtype=np.int64)
            for v in range(self.width):
                a = self.E[:, v]
                b = beta[v]
                if b == 0:
                    f = pow_t[v, a]
                else:
                    ok = a >= b
                    f = np.where(ok, self.fall[a, b] * pow_t[v, np.maximum(a - b, 0)] % p, 0)
                row = row * f % p
            rows[r] = row
        return rows

    def line_rows(self, line: tuple[Point, Point], alpha: int) -> np.ndarray:
        """Rows forcing vanishing to order alpha along the line through two
        points (single factor only). For each homogeneous derivative
        multi-index of order k < alpha, the derivative restricted to the
        parametrized line is a binary form of degree d-k; one row per
        coefficient. Redundant rows are harmless, rank is what matters."""
        if self.space.nfactors != 1:
            raise NotImplementedError("line schemes are only supported on a single factor")
        if alpha < 1:
            raise ValueError("alpha must be >= 1")
        p = self.p
        a_pt = _normalize_factor(line[0][0], p)
        b_pt = _normalize_factor(line[1][0], p)
        if a_pt == b_pt:
            raise ValueError("line needs two distinct defining points")
        d = self.sys.multidegree[0]
        nv = self.width

        def conv(u: list[int], w: list[int]) -> list[int]:
            out = [0] * (len(u) + len(w) - 1)
            for i, x in enumerate(u):
                if x:
                    for j, y in enumerate(w):
                        out[i + j] = (out[i + j] + x * y) % p
            return out

        # (A_v u + B_v w)^k as coefficient lists, index j = coefficient of u^(k-j) w^j
        pow_forms: list[list[list[int]]] = []
        for v in range(nv):
            forms = [[1]]
            base = [a_pt[v] % p, b_pt[v] % p]
            for _ in range(d):
                forms.append(conv(forms[-1], base))
            pow_forms.append(forms)
        fall = _falling_table(d, alpha, p)

        betas: list[tuple[int, ...]] = []
        for k in range(alpha):
            betas.extend(_factor_exponents(nv, k))
        rows_list: list[np.ndarray] = []
        for beta in betas:
            k = sum(beta)
            block = np.zeros((d - k + 1, self.cols), dtype=np.int64)
            for col in range(self.cols):
                exps = self.E[col]
                scalar = 1
                coeffs = [1]
                ok = True
                for v in range(nv):
                    b = beta[v]
                    a = int(exps[v])
                    if a < b:
                        ok = False
                        break
                    if b:
                        scalar = scalar * int(fall[a, b]) % p
                    coeffs = conv(coeffs, pow_forms[v][a - b])
                if not ok or scalar == 0:
                    continue
                block[:, col] = [c * scalar % p for c in coeffs]
            rows_list.append(block)
        return np.vstack(rows_list)

    def subspace_vanishing_rows(self, s: int, points: list[Point]) -> np.ndarray:
        """Evaluation rows at simple points spanning O(d) on a linear P^s."""
        return np.vstack([self.point_rows(pt, 1) for pt in points])


# public row-level API (thin wrappers so the condition builders can be tested
# and reused without the full oracle loop)

def fat_point_rows(sys: LinearSystem, point: Point, m: int, p: int = DEFAULT_PRIME) -> np.ndarray:
    """Condition rows for one multiplicity-m point: the value and all chart
    derivatives of order < m, one row per derivative multi-index."""
    return _RowBuilder(sys, p).point_rows(point, m)


def line_multiplicity_rows(
    sys: LinearSystem, line: tuple[Point, Point], alpha: int, p: int = DEFAULT_PRIME
) -> np.ndarray:
    return _RowBuilder(sys, p).line_rows(line, alpha)


def h0_oracle(
    sys: LinearSystem,
    cfg: OracleConfig | None = None,
    extra_schemes: tuple[LineScheme, ...] | list[LineScheme] = (),
    subspace: SubspaceScheme | None = None,
) -> OracleResult:
    """Generic h^0 of the system (minimum of cols - rank over random trials).

    extra_schemes adds vanishing to order alpha along lines through pairs of
    the sampled base points, given as (i, j, alpha) flattened point indices.
    h1 is the naive condition count minus the rank; it is only meaningful
    (and only reported) for pure fat-point systems.
    """
    cfg = cfg or OracleConfig()
    p = cfg.prime.p
    builder = _RowBuilder(sys, p)
    cols = builder.cols
    mults = list(sys.point_multiplicities())
    conditions = sum(point_conditions(m, sys.space) for m in mults)
    pure = not extra_schemes and subspace is None
    nu = virtual_dim(sys)
    eps = expected_dim(sys)

    for i, j, alpha in extra_schemes:
        if i == j or not (0 <= i < len(mults)) or not (0 <= j < len(mults)):
            raise ValueError(f"line scheme ({i},{j}) must join two distinct base points")
        if alpha < 1:
            raise ValueError("line multiplicity must be >= 1")

    best_h0: int | None = None
    rows_built = 0
    trials_used = 0
    for t in range(cfg.trials):
        trials_used += 1
        if subspace is None:
            points = sample_points(sys.space, len(mults), cfg, trial=t)
        else:
            on = sample_points(
                sys.space, subspace.points_on, cfg, constraint=("subspace", subspace.s), trial=t
            )
            off = sample_points(sys.space, len(mults) - subspace.points_on, cfg, trial=t, salt="off")
            points = on + off
        blocks = [builder.point_rows(pt, m) for pt, m in zip(points, mults)]
        for i, j, alpha in extra_schemes:
            blocks.append(builder.line_rows((points[i], points[j]), alpha))
        if subspace is not None and subspace.vanish:
            span = binom(sys.multidegree[0] + subspace.s, subspace.s)
            extra_pts = sample_points(
                sys.space, span, cfg, constraint=("subspace", subspace.s), trial=t, salt="vanish"
            )
            blocks.append(builder.subspace_vanishing_rows(subspace.s, extra_pts))
        A = np.vstack(blocks) if blocks else np.zeros((0, cols), dtype=np.int64)
        rows_built = A.shape[0]
        h0_t = cols - rank_mod_p(A, p)
        if pure and h0_t < max(nu + 1, 0):
            raise OracleSamplingError(
                f"semicontinuity violated: h0 trial value {h0_t} below {max(nu + 1, 0)}"
            )
        best_h0 = h0_t if best_h0 is None else min(best_h0, h0_t)
        floor = max(nu + 1, 0) if pure else max(cols - rows_built, 0)
        if best_h0 == floor:
            break

    assert best_h0 is not None
    h1 = conditions - (cols - best_h0) if pure else None
    return OracleResult(
        h0=best_h0,
        h1=h1,
        rank=cols - best_h0,
        rows=rows_built,
        cols=cols,
        special=(best_h0 - 1) > eps,
        trials_used=trials_used,
        prime=p,
        seed=cfg.seed,
    )


def is_special_oracle(sys: LinearSystem, cfg: OracleConfig | None = None) -> OracleResult:
    """Speciality verdict: actual dimension h0 - 1 versus the expected one."""
    return h0_oracle(sys, cfg)


def h1_oracle(sys: LinearSystem, cfg: OracleConfig | None = None) -> int:
    """h^1 of a pure fat-point system: naive conditions minus the rank."""
    res = h0_oracle(sys, cfg)
    assert res.h1 is not None
    return res.h1


def restrict_to_subspace(sys: LinearSystem, s: int, points_on: int | None = None) -> LinearSystem:
    """The system cut to a linear P^s: same degree, first points_on points."""
    if sys.space.nfactors != 1:
        raise ValueError("restriction to a subspace needs a single factor")
    n = sys.space.n
    if not (1 <= s <= n):
        raise ValueError(f"need 1 <= s <= {n}, got {s}")
    if s == n:
        return sys
    keep = sys.total_points if points_on is None else points_on
    if not (0 <= keep <= sys.total_points):
        raise ValueError(f"points_on out of range: {keep}")
    groups: list[FatPointGroup] = []
    for g in sys.points:
        if keep <= 0:
            break
        take = min(g.count, keep)
        groups.append(FatPointGroup(g.multiplicity, take))
        keep -= take
    return LinearSystem(Space((s,)), sys.multidegree, tuple(groups))


def cross_checked_h0(
    sys: LinearSystem,
    cfg: OracleConfig | None = None,
    extra_schemes: tuple[LineScheme, ...] | list[LineScheme] = (),
) -> CrossCheckedH0:
    """h^0 computed with two distinct primes and seeds; on disagreement a
    third prime is tried and the minimum (the generic value) is kept."""
    cfg = cfg or OracleConfig()
    p1 = cfg.prime.p
    p2 = SECOND_PRIME if p1 != SECOND_PRIME else DEFAULT_PRIME
    r1 = h0_oracle(sys, cfg, extra_schemes=extra_schemes)
    r2 = h0_oracle(
        sys,
        OracleConfig(PrimeField(p2), cfg.trials, cfg.seed + 1),
        extra_schemes=extra_schemes,
    )
    if r1.h0 == r2.h0:
        return CrossCheckedH0(r1.h0, True, (r1.h0, r2.h0), (p1, p2))
    p3 = next(p for p in (THIRD_PRIME, SECOND_PRIME, DEFAULT_PRIME) if p not in (p1, p2))
    r3 = h0_oracle(
        sys,
        OracleConfig(PrimeField(p3), cfg.trials, cfg.seed + 2),
        extra_schemes=extra_schemes,
    )
    return CrossCheckedH0(
        min(r1.h0, r2.h0, r3.h0), False, (r1.h0, r2.h0, r3.h0), (p1, p2, p3)
    )
