"""Exact finite-n moments of uniform order statistics.

E prod (1 - U_{n,r_i})^{theta_i} factorizes into beta-function ratios, one
per rank gap, each carrying the cumulative tail sum of the exponents.  The
n-dependence separates into a single gamma ratio, leaving an n-free factor
that drives the asymptotic expansions.

All rank arguments are integers here, so beta ratios are evaluated by the
pole-free product form; gamma ratios fall back to log-gamma only for
non-integer shifts.
"""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InfiniteMomentError, UnsupportedOrderError
from .series import rising_factorial

__all__ = [
    "RankSpec",
    "suffix_sums",
    "gamma_ratio",
    "falling_general",
    "beta_ratio",
    "merge_ties",
    "joint_beta_moment",
    "n_free_factor",
    "gamma_ratio_coeffs",
    "gamma_ratio_eval",
]


@dataclass(frozen=True)
class RankSpec:
    """Sample size n and nondecreasing ranks r_1 <= ... <= r_k in [1, n]."""

    n: int
    r: tuple

    def __post_init__(self):
        object.__setattr__(self, "r", tuple(self.r))
        if self.n < 1:
            raise ValueError(f"sample size must be >= 1, got {self.n}")
        prev = 1
        for ri in self.r:
            if not (prev <= ri <= self.n):
                raise ValueError(
                    f"ranks must be nondecreasing within [1, {self.n}], got {self.r}"
                )
            prev = ri

    @property
    def s(self) -> tuple:
        """Depths below the maximum: s_i = n - r_i."""
        return tuple(self.n - ri for ri in self.r)


def suffix_sums(theta: Sequence) -> tuple:
    """Cumulative sums from each index outward: out[i] = sum_{j >= i} theta[j]."""
    out = []
    acc = 0
    for t in reversed(tuple(theta)):
        acc = acc + t
        out.append(acc)
    return tuple(reversed(out))


def _is_integral(x) -> bool:
    if isinstance(x, numbers.Integral):
        return True
    if isinstance(x, float):
        return x.is_integer()
    return False


def gamma_ratio(x, t):
    """Gamma(x + t) / Gamma(x), stable across scalar types.

    Integer t uses the plain product; float arguments use log-gamma; anything
    else (sympy expressions) is handed to sympy's gamma.
    """
    if _is_integral(t):
        t = int(t)
        if t >= 0:
            return rising_factorial(x, t)
        denom = rising_factorial(x + t, -t)
        if denom == 0:
            raise InfiniteMomentError(f"gamma ratio pole at Gamma({x}+{t})/Gamma({x})")
        if isinstance(denom, numbers.Integral):
            return Fraction(1, denom)
        return 1 / denom
    if isinstance(x, (int, float)) and isinstance(t, (int, float)):
        if x + t <= 0 or x <= 0:
            raise InfiniteMomentError(
                f"gamma ratio outside the positive domain: x={x}, t={t}"
            )
        return math.exp(math.lgamma(x + t) - math.lgamma(x))
    import sympy

    return sympy.gamma(x + t) / sympy.gamma(x)


def falling_general(x, t):
    """<x>_t = Gamma(x+1)/Gamma(x-t+1) for arbitrary real t."""
    return gamma_ratio(x - t + 1, t)


def beta_ratio(alpha, beta, theta):
    """b(alpha, beta : theta) = B(alpha, beta + theta) / B(alpha, beta).

    This is the theta-th moment of a Beta(beta, alpha) variable, so it is
    declared infinite when beta + theta <= 0.  For integer alpha, beta the
    product form prod_{j=beta}^{alpha+beta-1} (1 + theta/j)^{-1} is used.
    """
    if _is_integral(alpha) and _is_integral(beta):
        alpha, beta = int(alpha), int(beta)
        if alpha < 0 or beta < 1:
            raise ValueError(f"need alpha >= 0 and beta >= 1, got ({alpha}, {beta})")
        if isinstance(theta, numbers.Real) and beta + theta <= 0:
            raise InfiniteMomentError(
                f"moment b({alpha}, {beta} : {theta}) is infinite (beta + theta <= 0)"
            )
        if _is_integral(theta):
            th = int(theta)
            out = Fraction(1)
            for j in range(beta, alpha + beta):
                out *= Fraction(j, j + th)
            return out
        out = 1
        for j in range(beta, alpha + beta):
            out = out * j / (j + theta)
        return out
    if not alpha > 0 or not beta > 0:
        raise ValueError(f"beta ratio needs alpha, beta > 0, got ({alpha}, {beta})")
    if beta + theta <= 0:
        raise InfiniteMomentError(
            f"moment b({alpha}, {beta} : {theta}) is infinite (beta + theta <= 0)"
        )
    return gamma_ratio(beta, theta) / gamma_ratio(alpha + beta, theta)


def merge_ties(r: Sequence[int], theta: Sequence):
    """Collapse tied ranks by summing their exponents."""
    out_r: list = []
    out_t: list = []
    for ri, ti in zip(r, theta):
        if out_r and ri == out_r[-1]:
            out_t[-1] = out_t[-1] + ti
        else:
            out_r.append(ri)
            out_t.append(ti)
    return tuple(out_r), tuple(out_t)


def joint_beta_moment(ranks: RankSpec, theta: Sequence):
    """E prod (1 - U_{n,r_i})^{theta_i} for uniform order statistics.

    Evaluates the product of beta ratios over rank gaps with the suffix sums
    of theta; tied ranks are merged first.
    """
    if len(theta) != len(ranks.r):
        raise ValueError(
            f"theta has {len(theta)} entries for {len(ranks.r)} ranks"
        )
    r, th = merge_ties(ranks.r, theta)
    tbar = suffix_sums(th)
    out = 1
    prev = 0
    for i, (ri, tb) in enumerate(zip(r, tbar)):
        si = ranks.n - ri
        if isinstance(tb, numbers.Real) and si + 1 + tb <= 0:
            raise InfiniteMomentError(
                f"moment infinite at index {i + 1}: n - r + 1 + thetabar = "
                f"{si + 1 + tb} <= 0"
            )
        out = out * beta_ratio(ri - prev, si + 1, tb)
        prev = ri
    return out


def n_free_factor(s: Sequence[int], theta: Sequence):
    """n-free factor B(s : thetabar) in the factorization
    b_n(r : thetabar) = B(s : thetabar) * n! / Gamma(n + 1 + thetabar_1).

    B(s : thetabar) = Gamma(s_1 + 1 + thetabar_1) / s_1!
                      * prod_{i>=2} b(s_{i-1} - s_i, s_i + 1 : thetabar_i)
    for nonincreasing depths s_1 >= ... >= s_k >= 0.
    """
    s = tuple(s)
    if len(theta) != len(s):
        raise ValueError(f"theta has {len(theta)} entries for {len(s)} depths")
    if any(s[i] < s[i + 1] for i in range(len(s) - 1)) or (s and s[-1] < 0):
        raise ValueError(f"depths must be nonincreasing and >= 0, got {s}")
    tbar = suffix_sums(theta)
    if isinstance(tbar[0], numbers.Real) and s[0] + 1 + tbar[0] <= 0:
        raise InfiniteMomentError(
            f"moment infinite: s_1 + 1 + thetabar_1 = {s[0] + 1 + tbar[0]} <= 0"
        )
    out = gamma_ratio(s[0] + 1, tbar[0])
    for i in range(1, len(s)):
        out = out * beta_ratio(s[i - 1] - s[i], s[i] + 1, tbar[i])
    return out


# Coefficients of n! / Gamma(n+1+theta) = n^{-theta} sum_i e_i(theta) n^{-i},
# each a polynomial in theta assembled from rising factorials.
_E_MAX = 7


def _e_poly(i: int, t):
    if i == 0:
        return 1 + 0 * t
    if i == 1:
        return -rising_factorial(t, 2) / 2
    if i == 2:
        return rising_factorial(t, 3) * (3 * t + 1) / 24
    if i == 3:
        return -rising_factorial(t, 4) * rising_factorial(t, 2) / 48
    if i == 4:
        return rising_factorial(t, 5) * (15 * t**3 + 30 * t**2 + 5 * t - 2) / 5760
    if i == 5:
        return (
            -rising_factorial(t, 6)
            * rising_factorial(t, 2)
            * (3 * t**2 + 7 * t - 2)
            / 11520
        )
    if i == 6:
        return (
            rising_factorial(t, 7)
            * (63 * t**5 + 315 * t**4 + 315 * t**3 - 91 * t**2 - 42 * t + 16)
            / 2903040
        )
    if i == 7:
        return (
            -rising_factorial(t, 8)
            * rising_factorial(t, 2)
            * (9 * t**4 + 54 * t**3 + 51 * t**2 - 58 * t + 16)
            / 5806080
        )
    raise UnsupportedOrderError(f"e-series coefficients stop at index {_E_MAX}")


def gamma_ratio_coeffs(theta, imax: int) -> list:
    """e_0(theta) .. e_imax(theta); the table stops at index 7."""
    if not 0 <= imax <= _E_MAX:
        raise UnsupportedOrderError(
            f"imax must lie in [0, {_E_MAX}], got {imax}"
        )
    return [_e_poly(i, theta) for i in range(imax + 1)]


def gamma_ratio_eval(n: int, theta, imax: int):
    """Exact n!/Gamma(n+1+theta) next to its truncated asymptotic series."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    if n + 1 + theta <= 0:
        raise InfiniteMomentError(
            f"n!/Gamma(n+1+theta) pole: n + 1 + theta = {n + 1 + theta} <= 0"
        )
    exact = 1 / gamma_ratio(n + 1, theta)
    coeffs = gamma_ratio_coeffs(theta, imax)
    series = n ** (-theta) * sum(e * n ** (-i) for i, e in enumerate(coeffs))
    return exact, series
