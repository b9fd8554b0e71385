import random
from fractions import Fraction
from itertools import product

import pytest

from oracles import bvp_by_integration
from polybridge.bridge_cov import cov_bridge
from polybridge.exact_core import BiPoly, PiecewiseBiPoly, UniPoly, binomial_power, inv_factorial
from polybridge.green_bvp import (
    bvp_solve,
    bvp_verify,
    check_duality,
    green_difference,
    green_function,
    green_report,
    is_symmetric,
)
from polybridge.index_sets import IndexSetI, all_isets, dual_set, i_to_j, is_admissible

F = Fraction


def sixth_of_min_cubic() -> BiPoly:
    # (1/6) s^2 (3t - s), the s <= t branch of (1/6)(s^t)^2 (3(s v t) - s^t)
    return BiPoly({(2, 1): F(1, 2), (3, 0): F(-1, 6)})


def test_counterexample_sets():
    g1 = green_function(2, [0, 3])
    g2 = green_function(2, [1, 2])
    base = PiecewiseBiPoly.symmetric_from_lower(sixth_of_min_cubic())
    extra1 = BiPoly({(3, 2): F(1, 6), (2, 2): F(-1, 2)})  # (1/6) s^2 t^2 (s - 3)
    extra2 = BiPoly({(2, 3): F(1, 6), (2, 2): F(-1, 2)})  # (1/6) s^2 t^2 (t - 3)
    assert g1.piece.lower == base.lower + extra1
    assert g1.piece.upper == base.upper + extra1
    assert g2.piece.lower == base.lower + extra2
    assert g2.piece.upper == base.upper + extra2
    assert not is_symmetric(g1) and not is_symmetric(g2)
    assert check_duality(g1, g2)
    assert not check_duality(g1, g1)


@pytest.mark.parametrize("n", range(1, 5))
def test_jump_structure(n):
    jump = binomial_power(-1, 1, 2 * n - 1) * inv_factorial(2 * n - 1) * (-1) ** n
    for I in all_isets(n):
        g = green_function(n, I)
        assert g.piece.lower - g.piece.upper == jump


@pytest.mark.parametrize("n", range(1, 5))
def test_symmetry_iff_admissible(n):
    for I in all_isets(n):
        assert is_symmetric(green_function(n, I)) == is_admissible(I)


@pytest.mark.parametrize("n", range(1, 5))
def test_green_equals_bridge_covariance(n):
    for I in all_isets(n):
        if is_admissible(I):
            assert green_function(n, I).piece == cov_bridge(n, i_to_j(I))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_duality_exactly_for_dual_sets(n):
    sets = all_isets(n)
    greens = {I: green_function(n, I) for I in sets}
    for I1, I2 in product(sets, sets):
        assert check_duality(greens[I1], greens[I2]) == (I2 == dual_set(I1))


def test_duality_n4_against_dual_and_neighbours():
    sets = all_isets(4)
    rng = random.Random(4)
    for I1 in sets:
        g1 = green_function(4, I1)
        D = dual_set(I1)
        assert check_duality(g1, green_function(4, D))
        for I2 in rng.sample(sets, 8):
            if I2 != D:
                assert not check_duality(g1, green_function(4, I2))


@pytest.mark.parametrize("n", range(1, 5))
def test_injectivity(n):
    sets = all_isets(n)
    pieces = [green_function(n, I).piece for I in sets]
    for a, b in product(range(len(sets)), repeat=2):
        assert ((pieces[a] - pieces[b]).is_zero()) == (a == b)


def test_duality_requires_same_order():
    with pytest.raises(ValueError):
        check_duality(green_function(1, [0]), green_function(2, [0, 1]))


def test_green_difference_n3():
    d = green_difference(3, [1, 4, 5], [2, 3, 5])
    expected = BiPoly({(4, 3): F(1, 72), (3, 4): F(-1, 72)})
    assert d.lower == expected and d.upper == expected
    assert green_difference(3, [1, 4, 5], [1, 4, 5]).is_zero()


def test_bvp_examples():
    assert bvp_solve(1, [0], UniPoly([1])) == UniPoly([0, F(1, 2), F(-1, 2)])
    assert bvp_solve(2, [2, 3], UniPoly()).is_zero()
    assert bvp_solve(2, [0, 1], UniPoly([1])) == UniPoly([0, 0, F(1, 24), F(-1, 12), F(1, 24)])


@pytest.mark.parametrize("n", [1, 2, 3])
def test_bvp_matches_direct_integration(n):
    rng = random.Random(10 + n)
    for I in all_isets(n):
        u = UniPoly([F(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(rng.randint(1, 4))])
        assert bvp_solve(n, I, u) == bvp_by_integration(n, I.elems, u)


@pytest.mark.parametrize("n", range(1, 5))
def test_bvp_verify_passes_on_solutions(n):
    rng = random.Random(n)
    sets = all_isets(n)
    for I in rng.sample(sets, min(len(sets), 12)):
        u = UniPoly([F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(5)])
        v = bvp_solve(n, I, u)
        assert v.degree <= max(u.degree, 0) + 2 * n
        assert bvp_verify(v, u, n, I).passed


def test_bvp_verify_failures_and_trivial():
    rep = bvp_verify(UniPoly([0, 1]), UniPoly(), 1, [0])
    assert not rep.passed and rep.bc1_values == [1]
    assert bvp_verify(UniPoly(), UniPoly(), 2, [0, 1]).passed
    bad = bvp_verify(UniPoly([0, 0, 1]), UniPoly([1]), 1, [1])
    assert not bad.passed and not bad.ode_residual.is_zero()


def test_maple_style_report_n3():
    rep = green_report(3, [1, 4, 5])
    lines = rep.lines()
    assert "Green function for s<t: GI_1(s,t) = -1/120 s^5 - 1/72 s^4 t^3 + 1/24 s^4 t + 1/18 s^3 t^3 - 1/12 s^3 t^2" in lines
    assert lines[3].endswith("= -1/120 s^5 + 1/24 s^4 t - 1/72 s^3 t^4 + 1/18 s^3 t^3 - 1/12 s^3 t^2")
    assert rep.symmetric is False
    assert rep.I2 == IndexSetI(3, [2, 3, 5])
    assert rep.dual_lt and rep.dual_gt
    assert rep.diff_gt == BiPoly({(4, 3): F(1, 72), (3, 4): F(-1, 72)})
    assert rep.diff_lt == BiPoly({(4, 3): F(-1, 72), (3, 4): F(1, 72)})


def test_report_normalizations_differ_by_sign():
    a = green_report(3, [1, 4, 5], "maple")
    b = green_report(3, [1, 4, 5], "theorem")
    assert a.green_lt == -b.green_lt
    assert green_report(2, [0, 3], "maple").green_lt == green_report(2, [0, 3], "theorem").green_lt
    with pytest.raises(ValueError):
        green_report(2, [0, 3], "other")


def test_brownian_bridge_report():
    rep = green_report(1, [0], "theorem")
    assert rep.green_lt == BiPoly({(1, 0): 1, (1, 1): -1})
    assert rep.symmetric
