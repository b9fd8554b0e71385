from fractions import Fraction

import pytest
import sympy as sp

from oracles import conditioned_covariance, s_sym, sympy_to_bipoly, t_sym, u_sym
from polybridge.bridge_cov import (
    EmptyJ,
    NonConstant,
    bridge_model,
    cov_bridge,
    cov_xn,
    cross_cov,
    drift_polys,
    gram_matrix,
    phi_psi,
    psi_tilde,
    q_polynomial,
    terminal_cross_cov,
    wronskian_sum_check,
)
from polybridge.exact_core import BiPoly, UniPoly
from polybridge.hermite import boundary_values
from polybridge.index_sets import all_jsets, j_to_i

F = Fraction


def test_brownian_motion_and_bridge():
    assert cov_xn(1).lower == BiPoly({(1, 0): 1})
    assert cov_bridge(1, [1]).lower == BiPoly({(1, 0): 1, (1, 1): -1})
    assert cov_bridge(1, [1])(F(1, 4), F(3, 4)) == F(1, 16)


def test_integrated_brownian_motion():
    # (1/6) s^2 (3t - s) on s <= t
    assert cov_xn(2).lower == BiPoly({(2, 1): F(1, 2), (3, 0): F(-1, 6)})


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_cov_xn_matches_integral(n):
    k = (s_sym - u_sym) ** (n - 1) * (t_sym - u_sym) ** (n - 1) / sp.factorial(n - 1) ** 2
    assert cov_xn(n).lower == sympy_to_bipoly(sp.integrate(k, (u_sym, 0, s_sym)))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_cross_cov_matches_integral(n):
    for j in range(1, n + 1):
        for k in range(1, n + 1):
            expr = (s_sym - u_sym) ** (j - 1) * (t_sym - u_sym) ** (k - 1) / (sp.factorial(j - 1) * sp.factorial(k - 1))
            cc = cross_cov(n, j, k)
            assert cc.lower == sympy_to_bipoly(sp.integrate(expr, (u_sym, 0, s_sym)))
            assert cc.upper == sympy_to_bipoly(sp.integrate(expr, (u_sym, 0, t_sym)))


def test_terminal_cross_cov():
    # E[X_2(t) X_1(1)] = t^2 / 2
    assert terminal_cross_cov(2, 1) == UniPoly([0, 0, F(1, 2)])


def test_gram_matrix():
    assert gram_matrix(2, [1, 2]).rows == ((1, F(1, 2)), (F(1, 2), F(1, 3)))
    with pytest.raises(EmptyJ):
        gram_matrix(2, [])


def test_n2_drifts():
    assert drift_polys(2, [1]) == {1: UniPoly([0, 0, F(1, 2)])}
    assert drift_polys(2, [2]) == {2: UniPoly([0, 0, F(3, 2), F(-1, 2)])}
    assert drift_polys(2, [1, 2]) == {1: UniPoly([0, 0, -1, 1]), 2: UniPoly([0, 0, 3, -2])}
    assert drift_polys(2, []) == {}


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_drifts_satisfy_hermite_conditions(n):
    for J in all_jsets(n):
        I = j_to_i(J)
        for j, P in drift_polys(n, J).items():
            at0, at1 = boundary_values(P, n, I)
            assert not any(at0)
            assert at1 == {i: F(int(i == n - j)) for i in I}


@pytest.mark.parametrize("n", [1, 2, 3])
def test_bridge_covariance_matches_gaussian_conditioning(n):
    for J in all_jsets(n):
        cov = cov_bridge(n, J)
        assert cov.lower == conditioned_covariance(n, J.elems)
        assert cov.is_symmetric()


@pytest.mark.parametrize("n", [2, 3, 4])
def test_q_polynomial_is_the_correction(n):
    for J in all_jsets(n):
        if not len(J):
            continue
        Q = q_polynomial(n, J)
        assert cov_xn(n).lower - Q.lower == cov_bridge(n, J).lower
        assert cov_xn(n).upper - Q.upper == cov_bridge(n, J).upper


def test_psi_tilde_n2():
    assert psi_tilde(2, [1, 2]) == [UniPoly([1, 0, -3, 2]), UniPoly([0, 1, -2, 1])]
    assert psi_tilde(2, []) == phi_psi(2)[1]


@pytest.mark.parametrize("n", range(1, 7))
def test_wronskian_sums(n):
    for i in range(2 * n):
        assert wronskian_sum_check(n, i) == (0 if i < 2 * n - 1 else (-1) ** n)


def test_wronskian_rejects_bad_order():
    with pytest.raises(ValueError):
        wronskian_sum_check(2, 4)


def test_non_constant_is_an_assertion_error():
    assert issubclass(NonConstant, AssertionError)


def test_bridge_model_bundle():
    m = bridge_model(2, [1, 2])
    assert m.I.elems == (0, 1)
    assert m.cov == cov_bridge(2, [1, 2])
    assert set(m.to_json()) >= {"n", "J", "I", "drift", "psi_tilde", "cov"}


def test_bad_order():
    with pytest.raises(ValueError):
        phi_psi(0)
    with pytest.raises(ValueError):
        cross_cov(2, 3, 1)
