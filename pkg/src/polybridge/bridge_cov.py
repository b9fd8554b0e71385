"""Covariances of X_n and of its bridges, drift polynomials and psi-tilde.

Conventions: X_n is the (n-1)-fold integral of Brownian motion, X_1 = B.
A bridge conditions X_j(1) = 0 for j in J. Piecewise functions store the
branch on {s <= t} as ``lower``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .exact_core import (
    ONE,
    ZERO,
    BiPoly,
    PiecewiseBiPoly,
    RatMatrix,
    UniPoly,
    factorial,
    inv_factorial,
    piecewise_to_json,
    solve_linear,
    unipoly_to_json,
)
from .index_sets import IndexSetI, IndexSetJ, JLike, as_jset, j_to_i


class EmptyJ(ValueError):
    pass


class NonConstant(AssertionError):
    """A Wronskian-type sum turned out not to be constant."""


def _check_order(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"process order must be a positive integer, got {n!r}")


def phi_psi(n: int) -> tuple[list[UniPoly], list[UniPoly]]:
    """phi_k(s) = (-1)^(n-1-k) s^(2n-1-k)/(2n-1-k)!,  psi_k(t) = t^k/k!."""
    _check_order(n)
    phis = [UniPoly.monomial(2 * n - 1 - k, (-1) ** (n - 1 - k) * inv_factorial(2 * n - 1 - k)) for k in range(n)]
    psis = [UniPoly.monomial(k, inv_factorial(k)) for k in range(n)]
    return phis, psis


def _separable(phis: list[UniPoly], psis: list[UniPoly]) -> PiecewiseBiPoly:
    lower = BiPoly()
    for f, g in zip(phis, psis):
        lower = lower + BiPoly.product(f, g)
    return PiecewiseBiPoly.symmetric_from_lower(lower)


@lru_cache(maxsize=None)
def cov_xn(n: int) -> PiecewiseBiPoly:
    phis, psis = phi_psi(n)
    return _separable(phis, psis)


def _iterated_kernel_integral(a: int, b: int) -> BiPoly:
    # int_0^s (s-u)^a (t-u)^b du, expanded in s and t
    out: dict = {}
    for p in range(a + 1):
        for q in range(b + 1):
            m = p + q
            c = Fraction(comb(a, p) * comb(b, q) * (-1) ** m, m + 1)
            key = (a - p + m + 1, b - q)
            out[key] = out.get(key, ZERO) + c
    return BiPoly(out)


@lru_cache(maxsize=None)
def cross_cov(n: int, j: int, k: int) -> PiecewiseBiPoly:
    """E[X_j(s) X_k(t)] as a piecewise polynomial in (s, t)."""
    _check_order(n)
    if not (1 <= j <= n and 1 <= k <= n):
        raise ValueError(f"indices must lie in 1..{n}, got j={j}, k={k}")
    scale = inv_factorial(j - 1) * inv_factorial(k - 1)
    lower = _iterated_kernel_integral(j - 1, k - 1) * scale
    # for s >= t integrate up to t: same integral with the roles swapped
    upper = _iterated_kernel_integral(k - 1, j - 1).swap() * scale
    return PiecewiseBiPoly(lower, upper)


def terminal_cross_cov(n: int, k: int) -> UniPoly:
    """t -> E[X_n(t) X_k(1)] for t in [0, 1]."""
    return cross_cov(n, n, k).lower.at_t(ONE)


def _gram_entry(j: int, k: int) -> Fraction:
    return inv_factorial(j - 1) * inv_factorial(k - 1) / (j + k - 1)


def gram_matrix(n: int, J: JLike) -> RatMatrix:
    J = as_jset(n, J)
    if not len(J):
        raise EmptyJ("the Gram matrix of an empty conditioning set is undefined")
    return RatMatrix([[_gram_entry(j, k) for k in J] for j in J])


@lru_cache(maxsize=None)
def _drift(n: int, J: IndexSetJ) -> dict[int, UniPoly]:
    if not len(J):
        return {}
    G = gram_matrix(n, J)
    rhs_polys = [terminal_cross_cov(n, k) for k in J]
    width = 2 * n
    rhs = RatMatrix([[p.coeff(d) for d in range(width)] for p in rhs_polys])
    # G is symmetric, so the row-k equation sum_j G[j,k] P_j = rhs_k reads G X = rhs
    X = solve_linear(G, rhs)
    out = {}
    for row, j in enumerate(J):
        P = UniPoly(X.rows[row])
        if P.degree > 2 * n - 1:
            raise AssertionError(f"drift polynomial P_{j} has degree {P.degree} > {2 * n - 1}")
        out[j] = P
    return out


def drift_polys(n: int, J: JLike) -> dict[int, UniPoly]:
    """P_j for j in J, from the Gram system E[X_j(1)X_k(1)] P_j = E[X_n(t)X_k(1)]."""
    return dict(_drift(n, as_jset(n, J)))


@lru_cache(maxsize=None)
def _psi_tilde(n: int, J: IndexSetJ) -> tuple[UniPoly, ...]:
    _, psis = phi_psi(n)
    P = _drift(n, J)
    out = []
    for psi in psis:
        acc = psi
        for j in J:
            acc = acc - P[j] * psi.derivative(n - j)(ONE)
        out.append(acc)
    return tuple(out)


def psi_tilde(n: int, J: JLike) -> list[UniPoly]:
    return list(_psi_tilde(n, as_jset(n, J)))


@lru_cache(maxsize=None)
def _cov_bridge(n: int, J: IndexSetJ) -> PiecewiseBiPoly:
    phis, _ = phi_psi(n)
    return _separable(phis, list(_psi_tilde(n, J)))


def cov_bridge(n: int, J: JLike) -> PiecewiseBiPoly:
    return _cov_bridge(n, as_jset(n, J))


def q_polynomial(n: int, J: JLike) -> PiecewiseBiPoly:
    """Q(s,t) = sum_j E[X_n(s) X_j(1)] P_j(t), the correction c_X - c_Y."""
    J = as_jset(n, J)
    P = _drift(n, J)
    Q = BiPoly()
    for j in J:
        Q = Q + BiPoly.product(terminal_cross_cov(n, j), P[j])
    return PiecewiseBiPoly(Q, Q)


def wronskian_sum_check(n: int, i: int) -> Fraction:
    """Constant value of sum_k [phi_k psi_k^(i) - phi_k^(i) psi_k]."""
    if not 0 <= i <= 2 * n - 1:
        raise ValueError(f"derivative order must lie in 0..{2 * n - 1}")
    phis, psis = phi_psi(n)
    total = UniPoly()
    for f, g in zip(phis, psis):
        total = total + f * g.derivative(i) - f.derivative(i) * g
    if not total.is_constant():
        raise NonConstant(f"Wronskian sum for n={n}, i={i} is {total}, not a constant")
    return total.coeff(0)


@dataclass(frozen=True)
class BridgeModel:
    n: int
    J: IndexSetJ
    I: IndexSetI
    drift: dict
    psi_tilde: tuple
    cov: PiecewiseBiPoly

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "J": list(self.J.elems),
            "I": list(self.I.elems),
            "drift": {str(j): unipoly_to_json(p) for j, p in self.drift.items()},
            "psi_tilde": [unipoly_to_json(p) for p in self.psi_tilde],
            "cov": piecewise_to_json(self.cov),
        }


def bridge_model(n: int, J: JLike) -> BridgeModel:
    J = as_jset(n, J)
    return BridgeModel(n, J, j_to_i(J), drift_polys(n, J), tuple(psi_tilde(n, J)), cov_bridge(n, J))
