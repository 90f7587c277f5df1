"""Exact integer combinatorics behind the dimension counts.

Everything here is pure integer (or exact rational) arithmetic: binomial
coefficients, rising factorials, and the inequality functions that decide
whether removing a multiple divisor from a fat-point system can raise its
virtual dimension. Python ints are arbitrary precision, so no overflow
guards are needed.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Sequence


def binom(a: int, b: int) -> int:
    """Binomial coefficient C(a, b) with the "0 when b < 0 or b > a" convention.

    Negative tops are rejected: every formula in this package keeps its tops
    nonnegative via explicit degree guards, so a negative ``a`` signals a
    caller bug rather than a request for the generalized binomial.
    """
    if a < 0:
        raise ValueError(f"binom: negative top {a}")
    if b < 0 or b > a:
        return 0
    return comb(a, b)


def rising(r: int, z: int) -> int:
    """Rising factorial (r)_(z) = (r+1)(r+2)...(r+z); 1 if z == 0, 0 if z < 0."""
    if r < 0:
        raise ValueError(f"rising: negative base {r}")
    if z < 0:
        return 0
    out = 1
    for i in range(1, z + 1):
        out *= r + i
    return out


def phi_hyp(d: int, e: int, n: int) -> int:
    """Feasibility margin for a double degree-e hypersurface on P^n systems.

    phi(d,e,n) = C(d+n,n) - C(d-2e+n,n) - (n+1)C(e+n,n) + n + 1.
    A simple smooth hypersurface of degree e through enough double points can
    be a 2-special-effect variety for a degree-d system exactly when this is
    negative (the point-count window is then nonempty).
    """
    if n < 2 or e < 1 or d < 2 * e:
        raise ValueError(f"phi_hyp: need d >= 2e >= 2 and n >= 2, got {(d, e, n)}")
    return binom(d + n, n) - binom(d - 2 * e + n, n) - (n + 1) * binom(e + n, n) + n + 1


def psi_hyp_alpha1(d: int, e: int, n: int) -> int:
    """Analogue of :func:`phi_hyp` for removing the hypersurface only once.

    psi(d,e,n) = C(d+n,n) - C(d-e+n,n) - n*C(e+n,n) + n. At d = 2e this equals
    phi_hyp(2e,e,n), which is why the single-removal case contributes no new
    examples.
    """
    if n < 2 or e < 1 or d < 2 * e:
        raise ValueError(f"psi_hyp_alpha1: need d >= 2e >= 2 and n >= 2, got {(d, e, n)}")
    return binom(d + n, n) - binom(d - e + n, n) - n * binom(e + n, n) + n


def A_ratio(e: int, n: int) -> Fraction:
    """Exact rational A(e) = (n+e+1)...(n+2e) / ((e+1)...(2e)) - n - 1.

    Strictly increasing in e (for fixed n); its sign at e = 3 drives the
    nonnegativity of phi_hyp for d >= 2e >= 6, n >= 3.
    """
    if e < 1 or n < 1:
        raise ValueError(f"A_ratio: need e >= 1 and n >= 1, got {(e, n)}")
    return Fraction(rising(n + e, e), rising(e, e)) - (n + 1)


def _check_product_args(d: Sequence[int], e: Sequence[int], n: Sequence[int]) -> None:
    if not (len(d) == len(e) == len(n)):
        raise ValueError("product arguments must have equal lengths")
    if len(d) < 2:
        raise ValueError("product case needs at least two factors")
    for di, ei, ni in zip(d, e, n):
        if ni < 1:
            raise ValueError(f"factor dimension must be >= 1, got {ni}")
        if ei < 0 or di < 2 * ei:
            raise ValueError(f"need d_i >= 2e_i >= 0, got d={di}, e={ei}")


def phi_product(d: Sequence[int], e: Sequence[int], n: Sequence[int]) -> int:
    """Multidegree version of :func:`phi_hyp` on a product of projective spaces.

    prod C(d_i+n_i,n_i) - prod C(d_i-2e_i+n_i,n_i)
        - (prod C(e_i+n_i,n_i) - 1) * (sum n_i + 1).
    """
    _check_product_args(d, e, n)
    mono = 1
    resid = 1
    through = 1
    for di, ei, ni in zip(d, e, n):
        mono *= binom(di + ni, ni)
        resid *= binom(di - 2 * ei + ni, ni)
        through *= binom(ei + ni, ni)
    return mono - resid - (through - 1) * (sum(n) + 1)


def eta_product(e: Sequence[int], n: Sequence[int]) -> int:
    """The d = 2e slice of :func:`phi_product`, non-decreasing in each n_i."""
    if any(ei < 1 for ei in e):
        raise ValueError("eta_product: need e_i >= 1")
    return phi_product([2 * ei for ei in e], e, n)
