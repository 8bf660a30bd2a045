"""Hard-edge eigenvalue-gap probabilities for Laguerre beta-ensembles.

Exact evaluation via Jack-polynomial hypergeometric series, independent
torus/contour quadrature routes, double-gamma asymptotic constants,
large-deviation formulas, and Monte Carlo sampling of the bidiagonal
matrix model — each quantity computable along at least two independent
routes so results can be cross-validated.
"""

from __future__ import annotations

from .barnes import (
    a_const,
    b_const,
    duality_constants,
    f_beta_half,
    gamma2,
    log_a_const,
    log_b_const,
    log_f_beta_half,
    log_gamma2,
    log_morris_value,
    log_tau_hard,
    log_tau_hard_n,
    morris_value,
    tau_hard,
    tau_hard_n,
)
from .contour import (
    ContourSpec,
    hard_contour_E0,
    hard_contour_E0_parts,
    torus_E0_finiteN,
    torus_E0_hard,
)
from .errors import (
    BetagapError,
    CancellationError,
    LowerParameterPoleError,
    NonConvergenceError,
    ParameterQuantizationError,
    QuadratureError,
    ResourceLimitError,
)
from .gap import (
    AsymptoticForm,
    GapQuery,
    LinearStatistic,
    asymptotic_E0,
    asymptotic_En,
    asymptotic_En_ratio,
    char_poly_moment_asympt,
    duality_check,
    exact_E0_finiteN,
    exact_E0_finiteN_detailed,
    exact_E0_hard,
    exact_E0_hard_detailed,
    exact_En_finiteN,
    exact_En_hard,
    exact_En_hard_detailed,
    large_deviation_E0,
    linstat_mean,
    linstat_variance,
    log_large_deviation_E0,
    log_multi_F01_asympt,
    log_norm_ratio_exact,
    log_norm_ratio_stirling,
    multi_F01_asympt,
    rescale_endpoint,
    scale_to_hard_edge,
    smallest_eigenvalue_pdf,
)
from .hypergeom import ArgBlocks, HypergeomSpec, SeriesResult, pFq_alpha
from .jack import jack_C_eval, jack_in_monomial_basis, monomial_eval
from .mc import (
    EnsembleSpec,
    McEstimate,
    estimate_gap,
    sample_bidiagonal,
    sample_smallest,
    sample_spectrum,
    smallest_eigenvalues,
)
from .partitions import (
    gen_pochhammer,
    hook_norm,
    jack_C_at_identity,
    partitions_of_weight,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # errors
    "BetagapError",
    "CancellationError",
    "LowerParameterPoleError",
    "NonConvergenceError",
    "ParameterQuantizationError",
    "QuadratureError",
    "ResourceLimitError",
    # partitions / jack / hypergeom
    "partitions_of_weight",
    "hook_norm",
    "gen_pochhammer",
    "jack_C_at_identity",
    "jack_C_eval",
    "jack_in_monomial_basis",
    "monomial_eval",
    "ArgBlocks",
    "HypergeomSpec",
    "SeriesResult",
    "pFq_alpha",
    # barnes constants
    "log_gamma2",
    "gamma2",
    "log_f_beta_half",
    "f_beta_half",
    "log_tau_hard",
    "tau_hard",
    "log_a_const",
    "a_const",
    "log_tau_hard_n",
    "tau_hard_n",
    "duality_constants",
    "log_b_const",
    "b_const",
    "log_morris_value",
    "morris_value",
    # gap probabilities
    "GapQuery",
    "AsymptoticForm",
    "LinearStatistic",
    "rescale_endpoint",
    "exact_E0_hard",
    "exact_E0_hard_detailed",
    "exact_E0_finiteN",
    "exact_E0_finiteN_detailed",
    "exact_En_hard",
    "exact_En_hard_detailed",
    "exact_En_finiteN",
    "smallest_eigenvalue_pdf",
    "asymptotic_E0",
    "asymptotic_En",
    "asymptotic_En_ratio",
    "linstat_mean",
    "linstat_variance",
    "char_poly_moment_asympt",
    "large_deviation_E0",
    "log_large_deviation_E0",
    "log_norm_ratio_exact",
    "log_norm_ratio_stirling",
    "scale_to_hard_edge",
    "multi_F01_asympt",
    "log_multi_F01_asympt",
    "duality_check",
    # quadrature routes
    "ContourSpec",
    "torus_E0_finiteN",
    "torus_E0_hard",
    "hard_contour_E0",
    "hard_contour_E0_parts",
    # monte carlo
    "EnsembleSpec",
    "McEstimate",
    "sample_bidiagonal",
    "sample_spectrum",
    "sample_smallest",
    "smallest_eigenvalues",
    "estimate_gap",
]
