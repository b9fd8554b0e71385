"""Exact bridges of iterated Brownian integrals and their Green functions."""
from .bridge_cov import (
    BridgeModel,
    EmptyJ,
    bridge_model,
    cov_bridge,
    cov_xn,
    cross_cov,
    drift_polys,
    gram_matrix,
    phi_psi,
    psi_tilde,
    q_polynomial,
    wronskian_sum_check,
)
from .exact_core import BiPoly, PiecewiseBiPoly, RatMatrix, Rational, Singular, UniPoly
from .green_bvp import (
    BvpReport,
    GreenFunction,
    bvp_solve,
    bvp_verify,
    check_duality,
    green_difference,
    green_function,
    green_report,
    is_symmetric,
)
from .hermite import HermiteSpec, LUFactors, hermite_basis, hermite_solve, lu_factorize_a0
from .index_sets import (
    BadIndexSet,
    IndexSetI,
    IndexSetJ,
    NotABridge,
    dual_set,
    enumerate_sets,
    i_to_j,
    is_admissible,
    j_to_i,
)
from .prediction import BadHorizon, PredictionModel, predict, verify_prediction

__version__ = "0.1.0"
