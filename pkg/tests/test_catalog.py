"""Distribution catalog: tail coefficients, quantiles, samplers."""

import math

import numpy as np
import pytest

from paretotail.catalog import (
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
from paretotail.errors import CapabilityError, UnsupportedOrderError


def survival_partial(tail, x, order):
    """Truncated tail series sum_{i<=order} c_i x^{-alpha-i*beta}."""
    return sum(
        tail.c[i] * x ** (-tail.alpha - i * tail.beta) for i in range(order + 1)
    )


def test_parse_distribution():
    assert parse_distribution("cauchy") == DistributionSpec("cauchy")
    assert parse_distribution(" student_t( 3 ) ") == DistributionSpec(
        "student_t", (3.0,)
    )
    assert parse_distribution("stable(0.5,-0.5)") == DistributionSpec(
        "stable", (0.5, -0.5)
    )
    with pytest.raises(ValueError):
        parse_distribution("pareto(2")
    with pytest.raises(ValueError):
        parse_distribution("gaussian")


def test_spec_validation():
    with pytest.raises(ValueError):
        DistributionSpec("cauchy", (1.0,))
    with pytest.raises(ValueError):
        DistributionSpec("student_t", (0.5,))
    with pytest.raises(ValueError):
        DistributionSpec("f_dist", (3.0, 2.0))
    with pytest.raises(ValueError):
        DistributionSpec("stable", (1.5, 0.5))
    with pytest.raises(ValueError):
        DistributionSpec("stable", (0.5, 0.5))
    with pytest.raises(ValueError):
        DistributionSpec("frechet", (-1.0,))


def test_capability_flags():
    assert DistributionSpec("pareto", (2.0,)).has_exact_quantile
    assert not DistributionSpec("student_t", (3.0,)).has_exact_quantile
    assert DistributionSpec("f_dist", (3.0, 5.0)).has_numeric_quantile
    assert DistributionSpec("stable", (0.5, -0.5)).has_sampler
    assert not DistributionSpec("stable", (0.5, 0.0)).has_sampler
    with pytest.raises(CapabilityError):
        upper_quantile(DistributionSpec("stable", (0.5, -0.5)), 0.1)
    with pytest.raises(CapabilityError):
        sample(DistributionSpec("stable", (0.5, 0.0)), make_rng(1), 2)
    with pytest.raises(UnsupportedOrderError):
        tail_of(DistributionSpec("cauchy"), 13)


def test_tail_matches_survival():
    # truncated tail series vs the true survival function, with the first
    # omitted coefficient bounding the defect
    cases = [
        "pareto(1.5)",
        "cauchy",
        "student_t(3)",
        "f_dist(3,5)",
        "frechet(2)",
    ]
    for text in cases:
        dist = parse_distribution(text)
        tail = tail_of(dist, 4)
        for x in (5.0, 10.0, 20.0):
            true = 1.0 - cdf(dist, x)
            approx = survival_partial(tail, x, 3)
            bound = 2 * abs(tail.c[4]) * x ** (-tail.alpha - 4 * tail.beta)
            assert abs(approx - true) <= bound + 1e-13, (text, x)


def test_f_dist_tail_matches_cdf():
    # M = 2 closed form: 1 - F = (1 + nu x)^{-N/2} pins the tail index and
    # the sign of the nu power in the coefficients
    dist = DistributionSpec("f_dist", (2.0, 6.0))
    tail = tail_of(dist, 5)
    nu = 2.0 / 6.0
    assert tail.alpha == pytest.approx(3.0)
    for i in range(6):
        # binom(-3, i) nu^{-3-i} from the binomial expansion of the survival
        want = (-1.0) ** i * math.comb(i + 2, i) * nu ** (-3.0 - i)
        assert tail.c[i] == pytest.approx(want, rel=1e-12)
    for x in (4.0, 9.0):
        true = (1 + nu * x) ** (-3.0)
        assert 1.0 - cdf(dist, x) == pytest.approx(true, rel=1e-10)
        approx = survival_partial(tail, x, 5)
        next_term = math.comb(8, 6) * nu ** (-9.0) * x ** (-9.0)
        assert abs(approx - true) <= 2 * next_term
    # non-closed-form cases against the scipy survival function
    from scipy.stats import f as scipy_f

    for M, N in ((3, 5), (1, 4)):
        dist = DistributionSpec("f_dist", (float(M), float(N)))
        tail = tail_of(dist, 4)
        assert tail.alpha == pytest.approx(N / 2)
        for x in (15.0, 30.0):
            true = float(scipy_f.sf(x, M, N))
            approx = survival_partial(tail, x, 3)
            bound = 2 * abs(tail.c[4]) * x ** (-tail.alpha - 4 * tail.beta)
            assert abs(approx - true) <= bound + 1e-13


def test_student_t_reduces_to_cauchy():
    t1 = tail_of(DistributionSpec("student_t", (1.0,)), 6)
    ca = tail_of(DistributionSpec("cauchy"), 6)
    assert t1.alpha == ca.alpha and t1.beta == ca.beta
    for a, b in zip(t1.c, ca.c):
        assert a == pytest.approx(b, rel=1e-12)


def test_levy_tail_coefficients():
    # one-sided positive stable at alpha = 1/2 is the Levy law with survival
    # erf(1/(2 sqrt(x))); its expansion fixes the alpha^{-1} prefactor
    tail = tail_of(DistributionSpec("stable", (0.5, -0.5)), 4)
    root_pi = math.sqrt(math.pi)
    assert tail.c[0] == pytest.approx(1.0 / root_pi, rel=1e-12)
    assert tail.c[1] == pytest.approx(0.0, abs=1e-14)
    assert tail.c[2] == pytest.approx(-1.0 / (12 * root_pi), rel=1e-12)
    assert tail.c[3] == pytest.approx(0.0, abs=1e-14)
    assert tail.c[4] == pytest.approx(1.0 / (160 * root_pi), rel=1e-12)
    # direct check against the erf survival at a concrete point
    x = 30.0
    true = math.erf(0.5 / math.sqrt(x))
    approx = survival_partial(tail, x, 4)
    next_term = x ** (-3.5) / (896 * root_pi)  # z^7/21 term of erf
    assert abs(approx - true) <= 2 * next_term


def test_positive_stable_sampler_matches_levy():
    dist = DistributionSpec("stable", (0.5, -0.5))
    draws = sample(dist, make_rng(7), 200_000)
    assert np.all(draws > 0)
    for x in (0.5, 2.0, 10.0):
        want = math.erfc(0.5 / math.sqrt(x))
        got = float(np.mean(draws <= x))
        assert got == pytest.approx(want, abs=4 / math.sqrt(len(draws)))


def test_inverse_cdf_samplers_match_cdf():
    rng_seed = 11
    for text in ("pareto(2)", "cauchy", "frechet(1.5)", "student_t(4)"):
        dist = parse_distribution(text)
        draws = np.asarray(sample(dist, make_rng(rng_seed), 100_000))
        for q in (0.25, 0.75, 0.95):
            x = exact_quantile(dist, q) if dist.has_exact_quantile else float(
                upper_quantile(dist, 1 - q)
            )
            got = float(np.mean(draws <= x))
            assert got == pytest.approx(q, abs=4 / math.sqrt(len(draws))), text


def test_quantile_cdf_roundtrip():
    for text in ("pareto(1.5)", "cauchy", "frechet(2)", "f_dist(3,5)"):
        dist = parse_distribution(text)
        for u in (0.3, 0.9, 0.999):
            x = exact_quantile(dist, u)
            assert cdf(dist, x) == pytest.approx(u, rel=1e-9)
    with pytest.raises(ValueError):
        exact_quantile(parse_distribution("cauchy"), 1.0)


def test_make_rng_streams():
    a = make_rng(3, 0).random(4)
    b = make_rng(3, 0).random(4)
    c = make_rng(3, 1).random(4)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)


def test_catalog_names_round_trip():
    for name in CATALOG_NAMES:
        assert parse_distribution(str_default(name)).name == name


def str_default(name):
    defaults = {
        "pareto": "pareto(1)",
        "cauchy": "cauchy",
        "student_t": "student_t(3)",
        "f_dist": "f_dist(3,5)",
        "stable": "stable(0.5,-0.5)",
        "frechet": "frechet(1)",
    }
    return defaults[name]
