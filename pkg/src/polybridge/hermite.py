"""Hermite interpolation at 0 and 1 with selected derivative orders at 1.

The interpolant is written as P(t) = sum_j c_j t^j / j!, so that
P^(i)(0) = c_i. The first n coefficients are therefore the data at 0, and
the remaining n solve A0 c = rhs where A0[i, j] = 1/(n+j-i)! for i in I.
A0 is factored as L U by successive column eliminations; each step clears
one more factor (i - i_k) from the columns to the right.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from .exact_core import (
    ONE,
    ZERO,
    RatMatrix,
    RationalLike,
    UniPoly,
    as_rational,
    back_substitution,
    factorial,
    forward_substitution,
    inv_factorial,
    upper_triangular_inverse,
)
from .index_sets import ILike, IndexSetI, as_iset


@dataclass(frozen=True)
class HermiteSpec:
    n: int
    I: IndexSetI
    a: tuple[Fraction, ...]
    b: Mapping[int, Fraction] = field(hash=False)

    def __init__(self, n: int, I: ILike, a: Sequence[RationalLike], b: Mapping[int, RationalLike]):
        I = as_iset(n, I)
        a = tuple(as_rational(x) for x in a)
        if len(a) != n:
            raise ValueError(f"expected {n} values at 0, got {len(a)}")
        b = {int(k): as_rational(v) for k, v in b.items()}
        if set(b) - set(I):
            raise ValueError(f"values at 1 given for orders {sorted(set(b) - set(I))} outside I = {I}")
        b = {i: b.get(i, ZERO) for i in I}
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "I", I)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __add__(self, other: "HermiteSpec") -> "HermiteSpec":
        if (self.n, self.I) != (other.n, other.I):
            raise ValueError("specs with different (n, I) cannot be added")
        return HermiteSpec(
            self.n,
            self.I,
            [x + y for x, y in zip(self.a, other.a)],
            {i: self.b[i] + other.b[i] for i in self.I},
        )


@dataclass(frozen=True)
class LUFactors:
    L: RatMatrix
    U: RatMatrix
    # the column-transform matrices U_1 .. U_{n-1}, kept for inspection
    steps: tuple[RatMatrix, ...] = ()


def build_a0(n: int, I: ILike) -> RatMatrix:
    I = as_iset(n, I)
    return RatMatrix([[inv_factorial(n + j - i) for j in range(n)] for i in I])


def _transform_ratio(n: int, j: int, k: int, idx: Sequence[int]) -> Fraction:
    # (n+j-i_1-1)...(n+j-i_{k-1}-1) / ((n+j-i_1)...(n+j-i_k)), i_m = idx[m-1]
    num = ONE
    for m in range(k - 1):
        num *= n + j - idx[m] - 1
    den = ONE
    for m in range(k):
        den *= n + j - idx[m]
    return num / den


def column_step(n: int, k: int, idx: Sequence[int]) -> RatMatrix:
    """U_k: unit upper bidiagonal, C_j <- C_j - ratio * C_{j-1} for j >= k."""
    rows = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = ONE
    for j in range(k, n):
        rows[j - 1][j] = -_transform_ratio(n, j, k, idx)
    return RatMatrix(rows)


@lru_cache(maxsize=None)
def _lu(n: int, I: IndexSetI) -> LUFactors:
    idx = I.elems
    A = [list(r) for r in build_a0(n, I).rows]
    W = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]  # U_1 ... U_k
    steps = []
    for k in range(1, n):
        ratios = {j: _transform_ratio(n, j, k, idx) for j in range(k, n)}
        # descending j so that column j-1 still holds its previous value
        for M in (A, W):
            for row in M:
                for j in range(n - 1, k - 1, -1):
                    if row[j - 1]:
                        row[j] -= ratios[j] * row[j - 1]
        steps.append(column_step(n, k, idx))
    L = RatMatrix(A)
    U = upper_triangular_inverse(RatMatrix(W))
    if not L.is_lower_triangular() or any(d == 0 for d in L.diagonal()):
        raise AssertionError(f"column elimination did not produce a regular lower factor for I = {I}")
    return LUFactors(L, U, tuple(steps))


def lu_factorize_a0(n: int, I: ILike) -> LUFactors:
    return _lu(n, as_iset(n, I))


def hermite_solve(spec: HermiteSpec) -> UniPoly:
    """The unique P of degree < 2n matching ``spec`` (solved through L U)."""
    n, I = spec.n, spec.I
    rhs = [spec.b[i] - sum((spec.a[j] * inv_factorial(j - i) for j in range(n)), ZERO) for i in I]
    lu = _lu(n, I)
    y = forward_substitution(lu.L, rhs)
    high = back_substitution(lu.U, y)
    coeffs = list(spec.a) + high
    P = UniPoly([c / factorial(j) for j, c in enumerate(coeffs)])
    assert P.degree <= 2 * n - 1
    return P


@lru_cache(maxsize=None)
def _basis(n: int, I: IndexSetI) -> dict[int, UniPoly]:
    zeros = [ZERO] * n
    return {iota: hermite_solve(HermiteSpec(n, I, zeros, {iota: ONE})) for iota in I}


def hermite_basis(n: int, I: ILike) -> dict[int, UniPoly]:
    """R_{I,iota}: zero data at 0, R^(i)(1) = delta(iota, i) for i in I."""
    return dict(_basis(n, as_iset(n, I)))


def boundary_values(P: UniPoly, n: int, I: ILike) -> tuple[list[Fraction], dict[int, Fraction]]:
    """(P^(i)(0) for i < n, {iota: P^(iota)(1)})."""
    I = as_iset(n, I)
    at0 = [P.derivative(i)(ZERO) for i in range(n)]
    at1 = {i: P.derivative(i)(ONE) for i in I}
    return at0, at1
