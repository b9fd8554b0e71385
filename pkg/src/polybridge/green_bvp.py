"""Green functions of v^(2n) = (-1)^n u with v^(i)(0) = 0 (i < n), v^(i)(1) = 0 (i in I).

G_I(s, t) = (-1)^n 1{s<=t} (t-s)^(2n-1)/(2n-1)!
            - (-1)^n sum_{iota in I} (1-s)^(2n-1-iota)/(2n-1-iota)! R_{I,iota}(t)
so that v(t) = int_0^1 G_I(s, t) u(s) ds.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Literal

from .exact_core import (
    ONE,
    ZERO,
    BiPoly,
    PiecewiseBiPoly,
    UniPoly,
    binomial_power,
    bipoly_to_json,
    bipoly_definite_integral_s,
    format_bipoly,
    inv_factorial,
    piecewise_to_json,
    unipoly_to_json,
)
from .hermite import hermite_basis
from .index_sets import ILike, IndexSetI, as_iset, dual_set, is_admissible


@dataclass(frozen=True)
class GreenFunction:
    n: int
    I: IndexSetI
    piece: PiecewiseBiPoly
    basis: dict

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "I": list(self.I.elems),
            "admissible": is_admissible(self.I),
            "green": piecewise_to_json(self.piece),
            "basis": {str(i): unipoly_to_json(p) for i, p in self.basis.items()},
        }


@dataclass(frozen=True)
class BvpReport:
    ode_residual: UniPoly
    bc0_values: list
    bc1_values: list
    passed: bool

    def to_json(self) -> dict:
        return {
            "ode_residual": unipoly_to_json(self.ode_residual),
            "bc0_values": [f"{x.numerator}/{x.denominator}" for x in self.bc0_values],
            "bc1_values": [f"{x.numerator}/{x.denominator}" for x in self.bc1_values],
            "passed": self.passed,
        }


def jump_term(n: int) -> BiPoly:
    """(t - s)^(2n-1) / (2n-1)!"""
    return binomial_power(-1, 1, 2 * n - 1) * inv_factorial(2 * n - 1)


@lru_cache(maxsize=None)
def _green(n: int, I: IndexSetI) -> GreenFunction:
    sign = (-1) ** n
    R = hermite_basis(n, I)
    corr = BiPoly()
    for iota, Rp in R.items():
        m = 2 * n - 1 - iota
        # (1 - s)^m / m!
        tail = UniPoly([Fraction((-1) ** k * comb(m, k)) for k in range(m + 1)]) * inv_factorial(m)
        corr = corr + BiPoly.product(tail, Rp)
    lower = (jump_term(n) - corr) * sign
    upper = corr * (-sign)
    return GreenFunction(n, I, PiecewiseBiPoly(lower, upper), R)


def green_function(n: int, I: ILike) -> GreenFunction:
    return _green(n, as_iset(n, I))


def is_symmetric(g: GreenFunction) -> bool:
    return g.piece.is_symmetric()


def check_duality(g1: GreenFunction, g2: GreenFunction) -> bool:
    """G1(s, t) == G2(t, s) on both branches."""
    if g1.n != g2.n:
        raise ValueError("duality is only defined for Green functions of the same order")
    return g1.piece.lower == g2.piece.upper.swap() and g1.piece.upper == g2.piece.lower.swap()


def green_difference(n: int, I1: ILike, I2: ILike) -> PiecewiseBiPoly:
    return green_function(n, I1).piece - green_function(n, I2).piece


def bvp_solve(n: int, I: ILike, u: UniPoly) -> UniPoly:
    """v(t) = int_0^1 G_I(s, t) u(s) ds, exactly."""
    return bipoly_definite_integral_s(green_function(n, I).piece, u)


def bvp_verify(v: UniPoly, u: UniPoly, n: int, I: ILike) -> BvpReport:
    I = as_iset(n, I)
    residual = v.derivative(2 * n) - u * ((-1) ** n)
    bc0 = [v.derivative(i)(ZERO) for i in range(n)]
    bc1 = [v.derivative(i)(ONE) for i in I]
    passed = residual.is_zero() and not any(bc0) and not any(bc1)
    return BvpReport(residual, bc0, bc1, passed)


# ---------------------------------------------------------------------------
# session-style report
# ---------------------------------------------------------------------------

Normalization = Literal["maple", "theorem"]


@dataclass(frozen=True)
class GreenReport:
    """Field-for-field record of one Green-function session.

    With ``normalization="maple"`` kernels are those of v^(2n) = u, i.e.
    (-1)^n G_I. Fields labelled "s>t" hold the s>t branch with its two
    arguments exchanged, so every polynomial is read on s < t.
    """

    n: int
    I1: IndexSetI
    normalization: str
    green_lt: BiPoly
    green_gt: BiPoly
    symmetric: bool
    I2: IndexSetI
    diff_lt: BiPoly
    diff_gt: BiPoly
    dual_lt: bool
    dual_gt: bool

    def lines(self) -> list[str]:
        b = lambda x: "true" if x else "false"
        fmt = lambda xs: "[" + ",".join(str(i) for i in xs) + "]"
        return [
            f"value of n = {self.n}, differentiating indices set I_1 = {fmt(self.I1)}",
            f"kernel normalization = {self.normalization} "
            + ("(v^(2n) = u)" if self.normalization == "maple" else "(v^(2n) = (-1)^n u)"),
            f"Green function for s<t: GI_1(s,t) = {format_bipoly(self.green_lt)}",
            f"Green function for s>t, arguments exchanged: GI_1(t,s) = {format_bipoly(self.green_gt)}",
            f"symmetry test: GI_1(s,t)=GI_1(t,s)? = {b(self.symmetric)}",
            f"complementary set of 2n-1-I_1: I_2 = {fmt(self.I2)}",
            "difference between the two Green functions for s<t: "
            f"GI_1(s,t)-GI_2(s,t) = {format_bipoly(self.diff_lt)}",
            "difference between the two Green functions for s>t, arguments exchanged: "
            f"GI_1(t,s)-GI_2(t,s) = {format_bipoly(self.diff_gt)}",
            f"equality test between the two Green functions for s<t: GI_1(s,t)=GI_2(t,s)? = {b(self.dual_lt)}",
            f"equality test between the two Green functions for s>t: GI_1(s,t)=GI_2(t,s)? = {b(self.dual_gt)}",
        ]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "I1": list(self.I1.elems),
            "normalization": self.normalization,
            "green_lt": bipoly_to_json(self.green_lt),
            "green_gt_exchanged": bipoly_to_json(self.green_gt),
            "symmetric": self.symmetric,
            "I2": list(self.I2.elems),
            "diff_lt": bipoly_to_json(self.diff_lt),
            "diff_gt_exchanged": bipoly_to_json(self.diff_gt),
            "dual_lt": self.dual_lt,
            "dual_gt": self.dual_gt,
        }


def green_report(n: int, I: ILike, normalization: Normalization = "maple") -> GreenReport:
    I1 = as_iset(n, I)
    I2 = dual_set(I1)
    g1, g2 = green_function(n, I1), green_function(n, I2)
    if normalization == "maple":
        scale = (-1) ** n
    elif normalization == "theorem":
        scale = 1
    else:
        raise ValueError(f"unknown normalization {normalization!r}")
    k1, k2 = g1.piece * scale, g2.piece * scale
    return GreenReport(
        n=n,
        I1=I1,
        normalization=normalization,
        green_lt=k1.lower,
        green_gt=k1.upper.swap(),
        symmetric=is_symmetric(g1),
        I2=I2,
        diff_lt=k1.lower - k2.lower,
        diff_gt=(k1.upper - k2.upper).swap(),
        dual_lt=g1.piece.lower == g2.piece.upper.swap(),
        dual_gt=g1.piece.upper == g2.piece.lower.swap(),
    )
