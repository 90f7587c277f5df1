"""Bounded enumeration drivers for the classification tables.

Each scan walks an explicit parameter grid and keeps the tuples satisfying
the defining inequalities of one candidate family, evaluated exactly in
integer arithmetic. The bounds are arguments: the monotonicity lemmas of the
combinatorics module guarantee nothing is missed above them for the families
enumerated here, but the scans themselves only certify the grid they were
given. Scans never consult the oracle; verify_cgg is the one driver that
does, since its claim is about actual dimensions.

Point-count windows use the strict exact rational lower bound h > (monomials
- residual) / (conditions per point). Printed tables elsewhere often floor
that bound and write "<=", which admits one extra h in some rows; such rows
are flagged in the record notes.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product as iproduct
from math import isqrt, prod

from .combinatorics import binom
from .effect_varieties import (
    ConfigStep,
    Hypersurface,
    classify_alpha_sev,
    classify_configuration,
    rnc_double_residual_nu,
)
from .oracle import OracleConfig, cross_checked_h0, h0_oracle
from .systems import expected_dim, make_system


@dataclass(frozen=True)
class ScanRecord:
    kind: str
    space: tuple[int, ...]
    degree: tuple[int, ...]
    variety: tuple[int, ...]
    h: int
    notes: tuple[str, ...] = ()
    witness: dict = field(default_factory=dict, compare=False)

    def key(self) -> tuple:
        return (self.kind, self.space, self.degree, self.variety, self.h)

    def cells(self) -> tuple[str, str, str, str, str]:
        def fmt(t: tuple[int, ...]) -> str:
            return str(t[0]) if len(t) == 1 else "(" + ",".join(map(str, t)) + ")"

        space = "x".join(f"P{n}" for n in self.space)
        return space, fmt(self.degree), fmt(self.variety), str(self.h), ";".join(self.notes)


def records_to_csv(records: list[ScanRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["space", "degree", "variety", "h", "notes"])
    for rec in records:
        writer.writerow(rec.cells())
    return buf.getvalue()


def records_to_markdown(records: list[ScanRecord]) -> str:
    lines = ["| space | degree | variety | h | notes |", "| --- | --- | --- | --- | --- |"]
    for rec in records:
        lines.append("| " + " | ".join(rec.cells()) + " |")
    return "\n".join(lines) + "\n"


def _strict_lower(numerator: int, denominator: int) -> int:
    """Smallest integer h with h * denominator > numerator."""
    return numerator // denominator + 1


# ---------------------------------------------------------------------------
# hypersurfaces in P^n

def scan_hypersurfaces(n_max: int = 5, e_max: int = 3, d_max: int = 7) -> list[ScanRecord]:
    """All (n, d, e, h), h >= n, where a smooth degree-e hypersurface through
    h double points is a 2-special-effect candidate for the degree-d system:
    enough hypersurfaces through the points, a strictly raised residual, and
    d >= 2e."""
    records = []
    for n in range(2, n_max + 1):
        for e in range(1, e_max + 1):
            for d in range(2 * e, d_max + 1):
                upper = binom(e + n, n) - 1
                h_lo = _strict_lower(binom(d + n, n) - binom(d - 2 * e + n, n), n + 1)
                for h in range(max(h_lo, n), upper + 1):
                    records.append(
                        ScanRecord(
                            "hypersurface",
                            (n,),
                            (d,),
                            (e,),
                            h,
                            witness={"h_max": upper},
                        )
                    )
    records.sort(key=ScanRecord.key)
    return records


# ---------------------------------------------------------------------------
# linear subspaces

def rho_linear(n: int, h: int) -> int:
    """Smallest subspace dimension s for which P^s is a 2-special-effect
    variety for the quadric system with h double points in P^n.

    The defining condition is (2s+1)^2 >= 1 - 12n - 4n^2 + 8hn + 8h, solved
    exactly over the integers (so the returned s always satisfies it; a
    floored square-root evaluation would not at non-square radicands)."""
    if not (2 <= h <= n):
        raise ValueError(f"need 2 <= h <= n, got h={h}, n={n}")
    if 2 * h * (n + 1) > n * n + 3 * n:
        radicand = 1 - 12 * n - 4 * n * n + 8 * h * n + 8 * h
        if radicand >= 0:
            root = isqrt(radicand)
            if root * root < radicand:
                root += 1
            return max(1, root // 2)
    return 1


# ---------------------------------------------------------------------------
# rational normal curves

def scan_rnc(d_max: int = 5, n_max: int = 5) -> list[ScanRecord]:
    """(n, d) pairs for which the double rational normal curve through n+3
    double points raises the virtual dimension and stays effective. The
    h != n+3 exclusions are re-verified on the same grid."""
    records = []
    for n in range(2, n_max + 1):
        for d in range(3, d_max + 1):
            special_ineq = (2 - d) * n * n + 4 * n + 1 > 0
            nu = rnc_double_residual_nu(d, n)
            if special_ineq and nu >= 0:
                records.append(
                    ScanRecord("rnc", (n,), (d,), (n,), n + 3, witness={"nu_residual": nu})
                )
            # h <= n+2: the property and effectiveness are never both satisfied
            for h in range(2, n + 3):
                if h * (n + 1) - ((d - 1) * n * n + 2) > 0 and nu >= 0:
                    raise RuntimeError(
                        f"unexpected special-effect curve with h={h} <= n+2 at (n,d)=({n},{d})"
                    )
            # h >= n+4: the off-curve points make the residual negative
            if special_ineq and nu - (n + 1) >= 0:
                raise RuntimeError(f"residual stays effective for h=n+4 at (n,d)=({n},{d})")
    records.sort(key=ScanRecord.key)
    return records


# ---------------------------------------------------------------------------
# rational curves in P^3

def scan_rational_curves_p3(d_max: int = 4, e_max: int = 4) -> list[ScanRecord]:
    """All (d, e, h) passing the three displayed curve conditions in P^3:
    the curve family is big enough for the points (2e >= h), the residual
    Euler characteristic stays effective, and the points outweigh it. Rows
    where the h points could not be in general position while lying on the
    curve (more than 2 on a line, more than 3 on a conic) are emitted with a
    note, since the plain parameter count does not see that. Degrees below
    the imposed multiplicity are skipped: those systems are empty, and
    special-effect candidates only make sense for effective systems."""
    records = []
    for d in range(2, d_max + 1):
        for e in range(1, e_max + 1):
            for h in range(1, 2 * e + 1):
                if binom(d + 3, 3) - 3 * d * e + 4 * e - 6 < 0:
                    continue
                if not 4 * h > 3 * d * e - 4 * e + 5:
                    continue
                span_cap = {1: 2, 2: 3}.get(e)
                general = span_cap is None or h <= span_cap
                records.append(
                    ScanRecord(
                        "curve3",
                        (3,),
                        (d,),
                        (e,),
                        h,
                        notes=() if general else ("not-general-position",),
                        witness={"general_position": general},
                    )
                )
    records.sort(key=ScanRecord.key)
    return records


# ---------------------------------------------------------------------------
# divisors on products of projective spaces

_PRODUCT_DEFAULTS = {2: (4, 3, 6), 3: (4, 2, 4), 4: (2, 2, 4)}


def _table_floor_note(space: tuple[int, ...], degree: tuple[int, ...], e: tuple[int, ...], h_lo: int) -> tuple[str, ...]:
    """Flag rows whose printed-table lower endpoint (floored bound with a
    non-strict inequality) would admit one more h than the exact bound."""
    if len(space) != 2:
        return ()
    n1, n2 = space
    if n1 == 1 and n2 >= 2 and e[1] == 1 and degree == (2 * e[0], 2):
        m1 = (2 * e[0] + 1) * (n2 + 1) // 2
        if m1 < h_lo:
            return (f"m1={m1}<h_lo",)
    if n1 == 2 and e == (1, 1) and degree == (2, 2):
        m2 = (3 * n2 * n2 + 9 * n2 + 5) // (n2 + 3)
        if m2 < h_lo:
            return (f"m2={m2}<h_lo",)
    return ()


def scan_product_divisors(
    t: int,
    n_max: int | None = None,
    e_max: int | None = None,
    d_max: int | None = None,
) -> list[ScanRecord]:
    """All (spaces, multidegree, divisor multidegree, h) on a t-fold product
    where a simple divisor through h double points is a 2-special-effect
    candidate. Factors are enumerated with nondecreasing dimensions; the two
    orderings of an asymmetric degree pattern on equal factors both appear."""
    if t not in _PRODUCT_DEFAULTS:
        raise NotImplementedError(f"products with t={t} factors are not supported (t in 2..4)")
    dn, de, dd = _PRODUCT_DEFAULTS[t]
    n_max = dn if n_max is None else n_max
    e_max = de if e_max is None else e_max
    d_max = dd if d_max is None else d_max

    records = []
    e_min = 0 if t == 2 else 1  # one factor degree may drop out only for t=2
    for space in combinations_with_replacement(range(1, n_max + 1), t):
        cond_per_point = sum(space) + 1
        for e in iproduct(range(e_min, e_max + 1), repeat=t):
            if all(ei == 0 for ei in e):
                continue
            deg_ranges = [range(max(2 * ei, 1), d_max + 1) for ei in e]
            for degree in iproduct(*deg_ranges):
                mono = prod(binom(d + n, n) for d, n in zip(degree, space))
                resid = prod(binom(d - 2 * ei + n, n) for d, ei, n in zip(degree, e, space))
                upper = prod(binom(ei + n, n) for ei, n in zip(e, space)) - 1
                h_lo = _strict_lower(mono - resid, cond_per_point)
                if h_lo > upper:
                    continue
                notes = _table_floor_note(space, degree, e, h_lo)
                for h in range(h_lo, upper + 1):
                    records.append(
                        ScanRecord(
                            "product",
                            space,
                            degree,
                            e,
                            h,
                            notes=notes if h == h_lo else (),
                            witness={"h_max": upper, "monomials": mono},
                        )
                    )
    records.sort(key=ScanRecord.key)
    return records


# ---------------------------------------------------------------------------
# oracle-backed verification of the product-space speciality lists

class CggMismatchError(RuntimeError):
    """The oracle's special set differs from the published classification."""


def _attach_witness_t2(a1: int, a2: int, h: int, cfg: OracleConfig | None) -> dict:
    d = max(a1, a2) // 2
    e = (d, 1) if a1 >= a2 else (1, d)
    sys = make_system([1, 1], [a1, a2], [(2, h)])
    rep = classify_alpha_sev(sys, Hypersurface.through_all(sys, e))
    return {"witness": f"divisor {e}", "witness_ok": rep.is_sev, "alpha": rep.alpha_max}


def _attach_witness_t3(degree: tuple[int, int, int], h: int, cfg: OracleConfig | None) -> dict:
    sys = make_system([1, 1, 1], list(degree), [(2, h)])
    if sorted(degree) == [2, 2, 2]:
        rep = classify_alpha_sev(sys, Hypersurface.through_all(sys, (1, 1, 1)))
        return {"witness": "divisor (1,1,1)", "witness_ok": rep.is_sev, "alpha": rep.alpha_max}
    # (2a, 1, 1) up to permutation: remove two transverse simple divisors
    alpha = max(degree) // 2
    pos = degree.index(max(degree))
    others = [i for i in range(3) if i != pos]
    e1 = [0, 0, 0]
    e2 = [0, 0, 0]
    e1[pos] = alpha
    e2[pos] = alpha
    e1[others[0]] = 1
    e2[others[1]] = 1
    steps = [
        ConfigStep(Hypersurface.through_all(sys, tuple(e1)), 1),
        ConfigStep(Hypersurface.through_all(sys, tuple(e2)), 1),
    ]
    rep = classify_configuration(sys, steps, cfg)
    return {
        "witness": f"config {tuple(e1)}+{tuple(e2)}",
        "witness_ok": rep.is_sev,
        "nu_first_residual": rep.values["nu_steps"][1],  # type: ignore[index]
    }


def verify_cgg(
    a2_max: int = 8,
    h2_max: int = 20,
    a3_max: int = 4,
    h3_max: int = 15,
    cfg: OracleConfig | None = None,
    cross_check: bool = False,
) -> list[ScanRecord]:
    """Run the speciality oracle over the P^1 x P^1 and (P^1)^3 double-point
    grids and compare the special set with the published classification
    (bidegrees (2d, 2) with h = 2d+1; multidegrees (2,2,2) with h = 7 and
    (2a, 1, 1) with h = 2a+1, up to permutation). Each special system gets
    its special-effect witness attached and re-verified. A mismatch raises
    CggMismatchError."""
    cfg = cfg or OracleConfig()
    records: list[ScanRecord] = []

    def actual_h0(sys) -> int:
        if cross_check:
            cc = cross_checked_h0(sys, cfg)
            if not cc.agreed:
                raise CggMismatchError(f"prime disagreement for {sys}: {cc.values}")
            return cc.h0
        return h0_oracle(sys, cfg).h0

    found2: set[tuple[int, int, int]] = set()
    for a1 in range(1, a2_max + 1):
        for a2 in range(1, a1 + 1):
            for h in range(1, h2_max + 1):
                sys = make_system([1, 1], [a1, a2], [(2, h)])
                h0 = actual_h0(sys)
                if h0 - 1 > expected_dim(sys):
                    found2.add((a1, a2, h))
                    records.append(
                        ScanRecord(
                            "cgg2",
                            (1, 1),
                            (a1, a2),
                            (a1 // 2, 1) if a2 == 2 else (0,),
                            h,
                            witness={"h0": h0, **_attach_witness_t2(a1, a2, h, cfg)},
                        )
                    )
    expected2 = {(2 * d, 2, 2 * d + 1) for d in range(1, a2_max // 2 + 1) if 2 * d + 1 <= h2_max}
    if found2 != expected2:
        raise CggMismatchError(f"P1xP1 special set {sorted(found2)} != expected {sorted(expected2)}")

    found3: set[tuple[int, int, int, int]] = set()
    for degree in combinations_with_replacement(range(1, a3_max + 1), 3):
        a3, a2_, a1 = degree
        ordered = (a1, a2_, a3)  # nonincreasing
        for h in range(1, h3_max + 1):
            sys = make_system([1, 1, 1], list(ordered), [(2, h)])
            h0 = actual_h0(sys)
            if h0 - 1 > expected_dim(sys):
                found3.add((*ordered, h))
                records.append(
                    ScanRecord(
                        "cgg3",
                        (1, 1, 1),
                        ordered,
                        (1, 1, 1) if ordered == (2, 2, 2) else (ordered[0] // 2, 1, 1),
                        h,
                        witness={"h0": h0, **_attach_witness_t3(ordered, h, cfg)},
                    )
                )
    expected3 = {(2, 2, 2, 7)} if 7 <= h3_max else set()
    expected3 |= {
        (2 * a, 1, 1, 2 * a + 1)
        for a in range(1, a3_max // 2 + 1)
        if 2 * a + 1 <= h3_max
    }
    if found3 != expected3:
        raise CggMismatchError(f"(P1)^3 special set {sorted(found3)} != expected {sorted(expected3)}")

    bad = [r for r in records if not r.witness.get("witness_ok", False)]
    if bad:
        raise CggMismatchError(f"witness classification failed for {[r.key() for r in bad]}")
    records.sort(key=ScanRecord.key)
    return records
