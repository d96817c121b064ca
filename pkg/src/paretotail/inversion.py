"""Series reversion on a stretched exponent grid.

Given the forward relation v/u = sum_i x_i u^{i*a} with x_0 != 0, produce
the coefficients of (u/v)^k = sum_i xstar_i v^{i*a}.  This is a Lagrange
reversion in which every series lives on the grid of powers of u^a or v^a,
so coefficients can be indexed by the integer i throughout.
"""

from __future__ import annotations

import math

from .errors import SingularInputError
from .series import (
    FormalSeries,
    from_exponential,
    rising_factorial,
)
from .series import BellTable

__all__ = ["invert_series", "invert_series_exponential"]


def invert_series(x: FormalSeries, a, k: int) -> FormalSeries:
    """Coefficients xstar_0 .. xstar_m of (u/v)^k as a series in v^a.

    For each index i, with n = k + a*i,

        xstar_i = k * x_0^{-n} * sum_{j=1..i} (n+1)_{j-1} B_{ij}(x)
                  * (-x_0)^{-j} / j!

    and xstar_0 = x_0^{-k}.  The j = 0 term of the defining sum contributes
    only at i = 0.
    """
    if k < 1 or k != int(k):
        raise ValueError(f"k must be a positive integer, got {k}")
    if isinstance(a, float) and not math.isfinite(a):
        raise ValueError("exponent gap a must be finite")
    x0 = x[0]
    if x0 == 0:
        raise SingularInputError("forward series has zero constant term")

    table = BellTable(x)
    out = [x0 ** (-k)]
    for i in range(1, x.order + 1):
        n = k + a * i
        acc = 0
        for j in range(1, i + 1):
            acc = acc + (
                rising_factorial(n + 1, j - 1)
                * table.value(i, j)
                * (-x0) ** (-j)
                / math.factorial(j)
            )
        out.append(k * x0 ** (-n) * acc)
    return FormalSeries(out)


def invert_series_exponential(y: FormalSeries, a, k: int) -> FormalSeries:
    """Exponential-view reversion: ystar_i with (u/v)^k = sum ystar_i v^{ia}/(ia)!.

    Thin rescaling wrapper around :func:`invert_series` via x_j = y_j / j!;
    requires the grid points i*a to be nonnegative integers.
    """
    x = from_exponential(y)
    xstar = invert_series(x, a, k)
    out = []
    for i, c in enumerate(xstar.coeffs):
        g = a * i
        if g != int(g) or g < 0:
            raise ValueError(
                "exponential reversion needs integer grid points i*a, "
                f"got {g} at i={i}"
            )
        out.append(math.factorial(int(g)) * c)
    return FormalSeries(out)
