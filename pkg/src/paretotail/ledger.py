"""Machine-readable record of corrected source-material misprints.

Every entry pairs a printed formula fragment with the form this package
derives and uses, and names the test that arbitrates.  The derivation
machinery is the ground truth; printed displays are treated as cross-checks
and corrected where they disagree.
"""

from __future__ import annotations

from dataclasses import dataclass, asdict

__all__ = ["TypoEntry", "LEDGER", "ledger_rows"]


@dataclass(frozen=True)
class TypoEntry:
    id: str
    where: str
    printed: str
    derived: str
    verified_by: str


LEDGER = (
    TypoEntry(
        "log-series-denominator",
        "log-of-series coefficient display",
        "-sum_i B_{ri}(x) (-lambda)^i / i!",
        "-sum_i B_{ri}(x) (-lambda)^i / i",
        "tests/test_series.py::test_log_matches_analytic_composition",
    ),
    TypoEntry(
        "reversion-first-coefficient-sign",
        "series reversion, first corrected coefficient",
        "xstar_1 = +x_0^{-a-2} x_1",
        "xstar_1 = -x_0^{-a-2} x_1",
        "tests/test_inversion.py::test_low_order_closed_forms",
    ),
    TypoEntry(
        "reversion-third-coefficient-degree",
        "series reversion, third corrected coefficient",
        "term x_1^2/2 inside xstar_3",
        "term x_1^3/2 (cubic, by homogeneity of the reversion)",
        "tests/test_inversion.py::test_low_order_closed_forms",
    ),
    TypoEntry(
        "quantile-third-coefficient-grouping",
        "quantile power series, third coefficient display",
        "ambiguous grouping '(psi+1)_2/6 (psi+3a/2)(a+1)' with c_0^2 c_2",
        "coefficient regenerated from the reversion kernel, not transcribed",
        "tests/test_closed_forms.py::test_quantile_coefficients_exact",
    ),
    TypoEntry(
        "pair-leading-coefficient-inverse",
        "two-variable leading coefficient, unit tail index case",
        "c_0^2 (s_1 - 1)^{-1} s_2",
        "c_0^2 (s_1 - 1)^{-1} s_2^{-1}",
        "tests/test_expansion.py::test_pair_leading_coefficient",
    ),
    TypoEntry(
        "leading-coefficient-tail-power",
        "leading-terms display for the joint moment",
        "C_0(s : psi) = c_0 B(s : -psibar)",
        "C_0(s : psi) = c_0^{psibar_1} B(s : -psibar)",
        "tests/test_expansion.py::test_scale_equivariance",
    ),
    TypoEntry(
        "covariance-tail-term-power",
        "covariance display, tail-correction term",
        "Covar = F_0 + F_1/n + E_c F_2 / n",
        "Covar = F_0 + F_1/n + E_c F_2 / n^a",
        "tests/test_acceptance.py::test_frechet_covariance_rate",
    ),
    TypoEntry(
        "covariance-unit-case-factor",
        "covariance display specialized to the unit tail index",
        "<s_1>_2^{-1} s_2^{-1} (s - n^{-1} s_1)",
        "<s_1>_2^{-1} s_2^{-1} (1 - n^{-1} s_1)",
        "tests/test_acceptance.py::test_frechet_covariance_rate",
    ),
    TypoEntry(
        "mean-second-order-coefficient",
        "Cauchy-type mean display, second-order coefficient",
        "-n^{-2} pi^2 (s+1)",
        "-n^{-2} pi^2 (s+1)/3",
        "tests/test_acceptance.py::test_cauchy_mean_rate",
    ),
    TypoEntry(
        "product-moment-first-order-sign",
        "equal-power product moment, 1/n correction",
        "{1 + n^{-1} <k>_2 / 2} B_{k0}",
        "{1 - n^{-1} <k>_2 / 2} B_{k0}",
        "tests/test_expansion.py::test_product_moment_first_order",
    ),
    TypoEntry(
        "product-moment-leading-index",
        "equal-power product moment, leading coefficient",
        "B_{k0} = prod_i 1/(s_1 - k + 1)",
        "B_{k0} = prod_i 1/(s_i - k + i)",
        "tests/test_expansion.py::test_product_moment_leading",
    ),
    TypoEntry(
        "product-moment-correction-direction",
        "equal-power product moment, general tail-correction factor",
        "falling factorial <s_j - k + j + 1>_{a-1} in B_{kj}",
        "rising factorial (s_j - k + j + 1)_{a-1}",
        "tests/test_closed_forms.py::test_bkj_table_exact",
    ),
    TypoEntry(
        "pair-correction-table-garbled",
        "tail-correction table for pairs, unit gap case",
        "B_22 = 1/s_2, B_22 = 1/s_2, B_22 = s_1 (duplicated labels)",
        "B_21 = 1/s_2, B_22 = 1/s_1",
        "tests/test_closed_forms.py::test_bkj_table_exact",
    ),
    TypoEntry(
        "single-correction-line",
        "tail-correction table for singles",
        "B_1. = B_11 - 1 (not interpretable)",
        "B_11 from the general formula; B_1. = B_11",
        "tests/test_closed_forms.py::test_bkj_table_exact",
    ),
    TypoEntry(
        "third-cumulant-leading-divisor",
        "third-cumulant display, leading coefficient",
        "kappa_0 = 2(s_1 + s_2 - 2) D(s_1 s_2 s_3) (division sign dropped)",
        "kappa_0 = 2(s_1 + s_2 - 2)/D(s_1 s_2 s_3)",
        "tests/test_closed_forms.py::test_third_cumulant_closed_forms",
    ),
    TypoEntry(
        "tail-slope-constant-definition",
        "unit tail index example, correction constant",
        "E_c = c_0^{-a-1} c_0",
        "E_c = c_0^{-a-1} c_1",
        "tests/test_closed_forms.py::test_covariance_closed_forms",
    ),
    TypoEntry(
        "pair-second-order-sign",
        "pair moment second-order coefficient, unit gap case",
        "d_2(s : 1,1) = C_2(s : 1,1) - D_{2,s} H_c + c_0^{-2} c_1^2",
        "d_2(s : 1,1) = C_2(s : 1,1) = D_{2,s} H_c + c_0^{-2} c_1^2",
        "tests/test_closed_forms.py::test_pair_d2_closed_form",
    ),
    TypoEntry(
        "quad-correction-sum-garbled",
        "tail-correction table for quadruples, sum line",
        "B_4. numerator contains 's_2 - 4 s_2 + 4' (garbled)",
        "B_4. = B_41 + B_42 + B_43 + B_44 from the general formula",
        "tests/test_closed_forms.py::test_bkj_table_exact",
    ),
    TypoEntry(
        "cauchy-second-coefficient-denominator",
        "Cauchy quantile coefficients, second entry",
        "C_{2 psi} = psi pi^{4-psi} {1/5 + (psi - 5)/a}",
        "C_{2 psi} = psi pi^{4-psi} {1/5 + (psi - 5)/18}",
        "tests/test_closed_forms.py::test_cauchy_coefficient_closed_forms",
    ),
    TypoEntry(
        "cauchy-third-coefficient-display",
        "Cauchy quantile coefficients, third entry",
        "C_{3 psi} = -psi pi^{6-psi} {1/105 - 2 psi/15 + (psi+1)_2/162}",
        "regenerated from the reversion kernel (printed braces do not "
        "reproduce the kernel value at psi = 1)",
        "tests/test_closed_forms.py::test_cauchy_coefficient_closed_forms",
    ),
    TypoEntry(
        "third-cumulant-first-order",
        "third-cumulant display, 1/n coefficient",
        "kappa_1 = 2{s_2(1 - 2 s_1) + s_1 - s_1^2}/D, i.e. -8/3 at s=(3,2,1)",
        "kappa_1 = 2{s_2(1 - 2 s_1) + 2 s_1 - s_1^2}/D, i.e. -13/6 at s=(3,2,1)",
        "tests/test_acceptance.py::test_third_cumulant_mc",
    ),
    TypoEntry(
        "stable-tail-coefficient-prefactor",
        "stable-law tail coefficients",
        "c_i = a_{i+1}(alpha, gamma) gamma^{-1} (i+1)^{-1}",
        "c_i = a_{i+1}(alpha, gamma) alpha^{-1} (i+1)^{-1}",
        "tests/test_catalog.py::test_levy_tail_coefficients",
    ),
    TypoEntry(
        "one-sided-stable-orientation",
        "one-sided stable sampler capability note",
        "positive (one-sided) case at gamma = alpha",
        "positive (one-sided) case at gamma = -alpha",
        "tests/test_catalog.py::test_positive_stable_sampler_matches_levy",
    ),
    TypoEntry(
        "f-density-power",
        "F-distribution density display",
        "x^{M/2} (1 + nu x)^{-gamma} g_{MN}, giving tail index N/2 - 1",
        "x^{M/2 - 1} (1 + nu x)^{-gamma} g_{MN}, giving tail index N/2",
        "tests/test_catalog.py::test_f_dist_tail_matches_cdf",
    ),
    TypoEntry(
        "f-tail-coefficient-power",
        "F-distribution tail coefficients",
        "d_i = h_{MN} binom(-gamma, i) nu^{i}",
        "d_i = h_{MN} binom(-gamma, i) nu^{-i}, with c_i = d_i/(N/2 + i)",
        "tests/test_catalog.py::test_f_dist_tail_matches_cdf",
    ),
    TypoEntry(
        "student-t-undefined-symbol",
        "Student t tail coefficients, third entry",
        "c_3 written with an undefined symbol G_N",
        "general d_i formula with the density constant g_N",
        "tests/test_catalog.py::test_student_t_reduces_to_cauchy",
    ),
    TypoEntry(
        "display-numbering-gap",
        "display numbering in the source text",
        "one display label is skipped in sequence",
        "no formula lost; numbering gap only",
        "tests/test_cli.py::test_typos_schema",
    ),
)


def ledger_rows() -> list:
    """Ledger as a list of plain dicts (CSV/JSON payload)."""
    return [asdict(e) for e in LEDGER]
