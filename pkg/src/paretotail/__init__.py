"""Pareto-type tail expansions for extreme order statistics.

From a tail model 1 - F(x) = x^{-alpha} (c_0 + c_1 x^{-beta} + ...) this
package builds quantile power series near u = 1 and asymptotic expansions in
powers of (1/n, n^{-beta/alpha}) for joint moments, covariances and third
cumulants of the largest order statistics, and checks them against
independent quadrature and Monte Carlo oracles.
"""

from .errors import (
    CapabilityError,
    InfiniteMomentError,
    ParetoTailError,
    SingularInputError,
    UnsupportedOrderError,
)
from .series import (
    BellTable,
    FormalSeries,
    bell_partial_ordinary,
    binomial_coefficient,
    falling_factorial,
    rising_factorial,
    series_exp,
    series_general_power,
    series_log,
    series_multiply,
    series_power,
)
from .inversion import invert_series, invert_series_exponential
from .quantile import (
    QuantilePowerSeries,
    TailModel,
    eval_quantile_partial,
    quantile_from_known,
    quantile_series,
)
from .betamoments import (
    RankSpec,
    beta_ratio,
    gamma_ratio,
    gamma_ratio_coeffs,
    gamma_ratio_eval,
    joint_beta_moment,
    n_free_factor,
    suffix_sums,
)
from .expansion import (
    CovarianceReport,
    ExpansionSeries,
    MomentQuery,
    cj_coeff,
    covariance_expansion,
    dm_coeffs,
    evaluate_expansion,
    leading_product_moment,
    mean_expansion,
    moment_expansion,
    normalized_moment_expansion,
    pair_moment_expansion,
    third_cumulant_expansion,
)
from .catalog import (
    CATALOG_NAMES,
    DistributionSpec,
    cdf,
    exact_quantile,
    make_rng,
    parse_distribution,
    sample,
    tail_of,
    upper_quantile,
)
from .oracle import (
    OracleResult,
    RateFit,
    convergence_rate_probe,
    mc_third_cumulant,
    mc_top_order_stats,
    order_stat_density,
    quad_joint_moment,
    quad_moment,
)
from .ledger import LEDGER, TypoEntry, ledger_rows

__version__ = "0.1.0"

__all__ = [
    "ParetoTailError",
    "SingularInputError",
    "InfiniteMomentError",
    "UnsupportedOrderError",
    "CapabilityError",
    "FormalSeries",
    "BellTable",
    "bell_partial_ordinary",
    "binomial_coefficient",
    "rising_factorial",
    "falling_factorial",
    "series_power",
    "series_log",
    "series_exp",
    "series_multiply",
    "series_general_power",
    "invert_series",
    "invert_series_exponential",
    "TailModel",
    "QuantilePowerSeries",
    "quantile_series",
    "quantile_from_known",
    "eval_quantile_partial",
    "RankSpec",
    "suffix_sums",
    "gamma_ratio",
    "beta_ratio",
    "joint_beta_moment",
    "n_free_factor",
    "gamma_ratio_coeffs",
    "gamma_ratio_eval",
    "MomentQuery",
    "ExpansionSeries",
    "CovarianceReport",
    "cj_coeff",
    "moment_expansion",
    "normalized_moment_expansion",
    "dm_coeffs",
    "mean_expansion",
    "pair_moment_expansion",
    "covariance_expansion",
    "third_cumulant_expansion",
    "leading_product_moment",
    "evaluate_expansion",
    "DistributionSpec",
    "parse_distribution",
    "tail_of",
    "exact_quantile",
    "upper_quantile",
    "cdf",
    "sample",
    "make_rng",
    "CATALOG_NAMES",
    "OracleResult",
    "RateFit",
    "order_stat_density",
    "quad_moment",
    "quad_joint_moment",
    "mc_top_order_stats",
    "mc_third_cumulant",
    "convergence_rate_probe",
    "TypoEntry",
    "LEDGER",
    "ledger_rows",
]
