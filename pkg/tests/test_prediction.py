from fractions import Fraction

import pytest
import sympy as sp

from polybridge.bridge_cov import drift_polys, psi_tilde
from polybridge.exact_core import UniPoly, inv_factorial
from polybridge.index_sets import all_jsets, j_to_i
from polybridge.prediction import BadHorizon, PredictionModel, predict, verify_prediction

F = Fraction
T = UniPoly([0, 1])
TIMES = [F(0), F(1, 4), F(1, 2), F(3, 4)]


def test_free_process_shift():
    for t0 in TIMES:
        m = predict(2, [], t0)
        assert m.q == (UniPoly([1]), T)
        assert m.p_tilde == {}


@pytest.mark.parametrize("t0", TIMES)
def test_integrated_brownian_bridge(t0):
    h = 1 - t0
    assert predict(2, [1], t0).q[1] == T - T * T / (2 * h)


@pytest.mark.parametrize("t0", TIMES)
def test_bridge_of_integrated_brownian_motion(t0):
    h = 1 - t0
    q0 = (T**3 - T * T * 3 * h + UniPoly([2 * h**3])) / (2 * h**3)
    q1 = (T**3 - T * T * 3 * h + T * 2 * h**2) / (2 * h**2)
    m = predict(2, [2], t0)
    assert m.q == (q0, q1)


@pytest.mark.parametrize("t0", TIMES)
def test_pinned_position_and_velocity(t0):
    h = 1 - t0
    m = predict(2, [1, 2], t0)
    # derived independently: cubic Hermite basis on [0, h]
    assert m.q[0] == (UniPoly([h**3]) - T * T * 3 * h + T**3 * 2) / h**3
    assert m.q[1] == T * (UniPoly([h]) - T) ** 2 / h**2


def test_cli_example_value():
    assert predict(2, [1], F(1, 2)).q[1] == T - T * T


@pytest.mark.parametrize("n", range(1, 5))
def test_t0_zero_collapses(n):
    for J in all_jsets(n):
        m = predict(n, J, 0)
        assert m.p_tilde == drift_polys(n, J)
        assert list(m.q) == psi_tilde(n, J)


@pytest.mark.parametrize("n", range(1, 5))
def test_boundary_systems(n):
    for J in all_jsets(n):
        I = j_to_i(J)
        for t0 in TIMES[1:]:
            m = predict(n, J, t0)
            h = m.horizon
            assert verify_prediction(m)
            for j, p in m.p_tilde.items():
                assert all(p.derivative(i)(0) == 0 for i in range(n))
                assert all(p.derivative(i)(h) == int(i == n - j) for i in I)
            for i, q in enumerate(m.q):
                assert all(q.derivative(k)(0) == int(k == i) for k in range(n))
                assert all(q.derivative(k)(h) == 0 for k in I)


def test_verify_rejects_tampered_model():
    m = predict(2, [1, 2], F(1, 2))
    bad = PredictionModel(m.n, m.J, m.t0, m.p_tilde, (m.q[0] + T**3, m.q[1]))
    assert not verify_prediction(bad)
    bad_p = PredictionModel(m.n, m.J, m.t0, {1: m.p_tilde[1] * 2, 2: m.p_tilde[2]}, m.q)
    assert not verify_prediction(bad_p)


@pytest.mark.parametrize("t0", [F(-1, 2), F(1), F(3, 2)])
def test_bad_horizon(t0):
    with pytest.raises(BadHorizon):
        predict(2, [1], t0)


def test_absolute_time():
    m = predict(2, [2], F(1, 4))
    a = m.absolute_time()
    for q, qa in zip(m.q, a.q):
        assert qa(F(1, 4) + F(1, 8)) == q(F(1, 8))
    assert a.t0 == m.t0


def _q_by_linear_system(n, J, t0):
    """Coefficient of Y^(i)(t0) via A = (a_ik), B = A^-1 (independent of the rescaling route)."""
    h = 1 - t0
    P = drift_polys(n, J)

    def weight(j, k):
        return h ** (j + k - n) * inv_factorial(j + k - n)

    A = sp.zeros(n, n)
    for i in range(n):
        for k in range(n):
            val = F(int(i == k)) - sum((weight(j, k) * P[j].derivative(i)(t0) for j in J if j >= n - k), F(0))
            A[i, k] = sp.Rational(val.numerator, val.denominator)
    B = A.inv()
    shifted = {j: p.shift_argument(t0) for j, p in P.items()}
    qs = []
    for i in range(n):
        acc = UniPoly()
        for k in range(n):
            b = F(int(B[k, i].p), int(B[k, i].q))
            bracket = UniPoly.monomial(k, inv_factorial(k))
            for j in J:
                if j >= n - k:
                    bracket = bracket - shifted[j] * weight(j, k)
            acc = acc + bracket * b
        qs.append(acc)
    return qs


@pytest.mark.parametrize("n", [1, 2, 3])
def test_q_agrees_with_linear_system_route(n):
    for J in all_jsets(n):
        for t0 in TIMES:
            assert list(predict(n, J, t0).q) == _q_by_linear_system(n, J.elems, t0)
