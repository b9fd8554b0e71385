"""Prediction of a bridge from time t0 onwards.

Y(t0 + t) = Ytilde(t) + sum_i Q_i(t) Y^(i)(t0), where the residual Ytilde is an
independent bridge on the shorter horizon h = 1 - t0 whose drift polynomials
are Ptilde_j. All polynomials live on the shifted clock t in [0, h].
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bridge_cov import drift_polys, psi_tilde
from .exact_core import ONE, ZERO, RationalLike, UniPoly, as_rational, rational_to_str, unipoly_to_json
from .hermite import HermiteSpec, hermite_solve
from .index_sets import IndexSetJ, JLike, as_jset, j_to_i


class BadHorizon(ValueError):
    """The prediction time lies outside [0, 1)."""


@dataclass(frozen=True)
class PredictionModel:
    n: int
    J: IndexSetJ
    t0: Fraction
    p_tilde: dict
    q: tuple

    @property
    def horizon(self) -> Fraction:
        return ONE - self.t0

    def absolute_time(self) -> "PredictionModel":
        """Same polynomials re-expressed in absolute time t in [t0, 1]."""
        shift = -self.t0
        return PredictionModel(
            self.n,
            self.J,
            self.t0,
            {j: p.shift_argument(shift) for j, p in self.p_tilde.items()},
            tuple(p.shift_argument(shift) for p in self.q),
        )

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "J": list(self.J.elems),
            "t0": rational_to_str(self.t0),
            "p_tilde": {str(j): unipoly_to_json(p) for j, p in self.p_tilde.items()},
            "q": [unipoly_to_json(p) for p in self.q],
        }


def predict(n: int, J: JLike, t0: RationalLike) -> PredictionModel:
    J = as_jset(n, J)
    t0 = as_rational(t0)
    if not ZERO <= t0 < ONE:
        raise BadHorizon(f"prediction time must satisfy 0 <= t0 < 1, got {t0}")
    h = ONE - t0
    # p(t/h) is p.scale_argument(1/h)
    p_tilde = {j: P.scale_argument(1 / h) * h ** (n - j) for j, P in drift_polys(n, J).items()}
    q = tuple(psi.scale_argument(1 / h) * h**i for i, psi in enumerate(psi_tilde(n, J)))
    return PredictionModel(n, J, t0, p_tilde, q)


def _boundary_ok(p: UniPoly, at0: list[Fraction], at_h: dict[int, Fraction], h: Fraction) -> bool:
    if any(p.derivative(i)(ZERO) != v for i, v in enumerate(at0)):
        return False
    return all(p.derivative(i)(h) == v for i, v in at_h.items())


def verify_prediction(m: PredictionModel) -> bool:
    """Check the boundary systems and rebuild each polynomial by Hermite interpolation."""
    n, h = m.n, m.horizon
    I = j_to_i(m.J)
    zeros = [ZERO] * n

    for j, p in m.p_tilde.items():
        target = {iota: (ONE if iota == n - j else ZERO) for iota in I}
        if not _boundary_ok(p, zeros, target, h):
            return False
        # on the unit clock, f(u) = p(h u) has f^(n-j)(1) = h^(n-j)
        f = hermite_solve(HermiteSpec(n, I, zeros, {n - j: h ** (n - j)}))
        if f.scale_argument(1 / h) != p:
            return False

    if len(m.q) != n:
        return False
    for i, p in enumerate(m.q):
        at0 = [ONE if k == i else ZERO for k in range(n)]
        if not _boundary_ok(p, at0, {iota: ZERO for iota in I}, h):
            return False
        f = hermite_solve(HermiteSpec(n, I, [h**i if k == i else ZERO for k in range(n)], {}))
        if f.scale_argument(1 / h) != p:
            return False
    return True
