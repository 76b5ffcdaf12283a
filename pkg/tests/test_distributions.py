"""Family registry checks: validation, moments, CDFs, standardized
tails, and samplers.

Tail literals were frozen from scipy.stats (cdf/sf and exact pmf sums
computed independently of this package's special functions).
"""

import json
import math

import numpy as np
import pytest
from scipy import stats

import anticonc as ac
from anticonc import FamilyId, ParamSet
from anticonc.errors import DomainError


def rng_from(seed):
    return np.random.Generator(np.random.PCG64(seed))


class TestValidate:
    def test_ok_uniform(self):
        assert ac.validate(ac.uniform(0.0, 1.0)) == []

    def test_pareto_needs_r_above_two(self):
        problems = ac.validate(ac.pareto(2.0, 1.0))
        assert any("r must exceed 2" in p for p in problems)

    def test_student_t_needs_three_dof(self):
        problems = ac.validate(ac.student_t(2))
        assert any("n must be >= 3" in p for p in problems)

    def test_degenerate_lattice_parameters_rejected(self):
        # zero variance breaks the standardized tail
        assert ac.validate(ac.binomial(5, 1.0))
        assert ac.validate(ac.neg_binomial(2.0, 1.0))
        assert ac.validate(ac.hypergeometric(10, 10, 3))
        assert ac.validate(ac.hypergeometric(3, 10, 10))

    def test_structural_problems_are_reported_not_raised(self):
        ps = ParamSet(FamilyId.EXPONENTIAL, {"rate": 1.0})
        problems = ac.validate(ps)
        assert any("missing parameter 'lambda'" in p for p in problems)
        assert any("unexpected parameter 'rate'" in p for p in problems)
        ps = ParamSet(FamilyId.POISSON, {"lambda": math.nan})
        assert ac.validate(ps)

    def test_integer_fields_enforced(self):
        assert ac.validate(ParamSet(FamilyId.BINOMIAL, {"n": 2.5, "p": 0.3}))

    def test_operations_raise_on_invalid(self):
        with pytest.raises(DomainError):
            ac.moments(ac.pareto(2.0, 1.0))
        with pytest.raises(DomainError):
            ac.tail_probability(ac.student_t(2), 1.0)


class TestMoments:
    def test_exponential(self):
        m = ac.moments(ac.exponential(2.0))
        assert (m.mean, m.variance) == (0.5, 0.25)

    def test_student_t(self):
        m = ac.moments(ac.student_t(4))
        assert (m.mean, m.variance) == (0.0, 2.0)

    def test_hypergeometric_two_point(self):
        m = ac.moments(ac.hypergeometric(9, 10, 1))
        assert m.mean == pytest.approx(0.9, abs=1e-15)
        assert m.variance == pytest.approx(0.09, abs=1e-15)

    @pytest.mark.parametrize("ps,mean,var", [
        (ac.uniform(-1.0, 2.0), 0.5, 0.75),
        (ac.gaussian(1.5, 2.0), 1.5, 4.0),
        (ac.binomial(20, 0.3), 6.0, 4.2),
        (ac.poisson(4.0), 4.0, 4.0),
        (ac.neg_binomial(2.5, 0.4), 3.75, 9.375),
        (ac.gamma_family(2.5, 1.5), 3.75, 5.625),
        (ac.pareto(3.0, 1.0), 1.5, 0.75),
        (ac.beta_family(2.0, 5.0), 2.0 / 7.0, 10.0 / (49.0 * 8.0)),
    ])
    def test_closed_form_moments(self, ps, mean, var):
        m = ac.moments(ps)
        assert m.mean == pytest.approx(mean, rel=1e-14)
        assert m.variance == pytest.approx(var, rel=1e-14)

    def test_weibull_log_space_matches_direct_gamma(self):
        m = ac.moments(ac.weibull(1.7, 0.8))
        scale = 0.8 ** (-1 / 1.7)
        mean = scale * math.gamma(1 + 1 / 1.7)
        var = scale * scale * (math.gamma(1 + 2 / 1.7) - math.gamma(1 + 1 / 1.7) ** 2)
        assert m.mean == pytest.approx(mean, rel=1e-13)
        assert m.variance == pytest.approx(var, rel=1e-13)

    def test_log_normal(self):
        m = ac.moments(ac.log_normal(0.2, 0.6))
        assert m.mean == pytest.approx(math.exp(0.2 + 0.18), rel=1e-14)
        want = math.exp(0.4 + 0.36) * (math.exp(0.36) - 1.0)
        assert m.variance == pytest.approx(want, rel=1e-13)

    def test_all_valid_families_have_positive_variance(self):
        panel = [ac.uniform(0, 1), ac.exponential(1), ac.gaussian(0, 1),
                 ac.student_t(3), ac.binomial(1, 0.5), ac.poisson(0.1),
                 ac.neg_binomial(1, 0.99), ac.hypergeometric(1, 2, 1),
                 ac.gamma_family(0.01, 1), ac.pareto(2.001, 1),
                 ac.weibull(0.5, 1), ac.log_normal(0, 0.1), ac.beta_family(1, 0.01)]
        for ps in panel:
            assert ac.moments(ps).variance > 0


class TestCdf:
    def test_student_t_symmetric_center(self):
        assert ac.cdf(ac.student_t(3), 0.0) == 0.5

    def test_pareto_closed_form(self):
        assert ac.cdf(ac.pareto(3.0, 1.0), 2.0) == pytest.approx(0.875, rel=1e-14)

    def test_poisson_atom_at_zero(self):
        assert ac.cdf(ac.poisson(0.01), 0.0) == pytest.approx(math.exp(-0.01), rel=1e-14)

    def test_discrete_cdf_is_right_continuous(self):
        ps = ac.binomial(5, 0.4)
        below = ac.cdf(ps, 2.0 - 1e-9)
        at = ac.cdf(ps, 2.0)
        assert at > below  # the atom at 2 is included at x = 2
        assert at == pytest.approx(float(stats.binom.cdf(2, 5, 0.4)), abs=1e-13)

    @pytest.mark.parametrize("ps,dist", [
        (ac.gamma_family(2.5, 1.5), stats.gamma(2.5, scale=1.5)),
        (ac.beta_family(2.0, 5.0), stats.beta(2.0, 5.0)),
        (ac.weibull(1.7, 0.8), stats.weibull_min(1.7, scale=0.8 ** (-1 / 1.7))),
        (ac.log_normal(0.2, 0.6), stats.lognorm(0.6, scale=math.exp(0.2))),
        (ac.student_t(7), stats.t(7)),
    ])
    def test_matches_scipy_on_a_grid(self, ps, dist):
        for q in (0.05, 0.3, 0.5, 0.8, 0.99):
            x = float(dist.ppf(q))
            assert ac.cdf(ps, x) == pytest.approx(float(dist.cdf(x)), abs=1e-12)

    def test_unbounded_support_far_tails(self):
        for ps in (ac.gaussian(0, 1), ac.student_t(3), ac.exponential(1.0),
                   ac.poisson(4.0), ac.neg_binomial(2.5, 0.4)):
            assert ac.cdf(ps, 1e15) >= 1.0 - 1e-12
        for ps in (ac.gaussian(0, 1), ac.student_t(3)):
            assert ac.cdf(ps, -1e15) <= 1e-12

    def test_monotone_on_grid(self):
        for ps in (ac.uniform(-1, 2), ac.pareto(3, 1), ac.poisson(4.0),
                   ac.hypergeometric(30, 100, 20)):
            m = ac.moments(ps)
            sd = math.sqrt(m.variance)
            xs = np.linspace(m.mean - 5 * sd, m.mean + 5 * sd, 101)
            vals = [ac.cdf(ps, float(x)) for x in xs]
            assert all(u <= v + 1e-13 for u, v in zip(vals, vals[1:]))


# frozen from scipy.stats: cdf(mu - y*sd) + sf(mu + y*sd), or the exact
# inclusive pmf sum for the lattice families
TAIL_CASES = [
    (ac.uniform(-1.0, 2.0), 0.5, 0.7113248654051871),
    (ac.uniform(-1.0, 2.0), 1.0, 0.42264973081037416),
    (ac.uniform(-1.0, 2.0), 2.0, 0.0),
    (ac.exponential(1.3), 0.5, 0.6165995004357964),
    (ac.exponential(1.3), 1.0, 0.1353352832366127),
    (ac.exponential(1.3), 2.0, 0.049787068367863944),
    (ac.gaussian(0.5, 2.0), 1.0, 0.31731050786291415),
    (ac.gaussian(0.5, 2.0), 2.0, 0.04550026389635839),
    (ac.student_t(5), 1.0, 0.25316999510032273),
    (ac.student_t(5), 2.0, 0.04931308767365261),
    (ac.pareto(3.0, 1.0), 1.0, 0.07549910270124748),
    (ac.pareto(4.0, 2.0), 0.5, 0.4760653140701938),
    (ac.gamma_family(2.5, 1.5), 1.0, 0.2764034857772476),
    (ac.weibull(1.7, 0.8), 1.0, 0.3143626546574064),
    (ac.log_normal(0.2, 0.6), 2.0, 0.04455272605037915),
    (ac.beta_family(2.0, 5.0), 1.0, 0.3379880598960504),
    (ac.binomial(20, 0.3), 1.0, 0.22041826738070958),
    (ac.poisson(4.0), 0.5, 0.8046331851868355),
    (ac.neg_binomial(2.5, 0.4), 2.0, 0.05279663098021237),
    (ac.hypergeometric(30, 100, 20), 1.0, 0.41379613366255175),
    (ac.hypergeometric(99, 100, 1), 1.0, 0.01),
]


class TestTailProbability:
    @pytest.mark.parametrize("ps,y,want", TAIL_CASES)
    def test_frozen_values(self, ps, y, want):
        got = ac.tail_probability(ps, y)
        assert got.probability == pytest.approx(want, abs=5e-13)
        assert 0.0 <= got.probability <= 1.0
        assert got.abs_error_bound >= 0.0
        assert got.method in {"closed-form", "special-function", "pmf-sum",
                              "quadrature", "monte-carlo"}

    def test_lattice_point_exactly_on_boundary_counts(self):
        # Binomial(4, 1/2): mu = 2, sd = 1, y = 2 puts k in {0, 4} at
        # exactly two standard deviations; inclusive tail = 2/16
        got = ac.tail_probability(ac.binomial(4, 0.5), 2.0)
        assert got.probability == pytest.approx(0.125, abs=1e-14)

    def test_nonincreasing_in_y(self):
        for ps, _, _ in TAIL_CASES[::3]:
            tails = [ac.tail_probability(ps, float(y)).probability
                     for y in np.linspace(0.05, 4.0, 40)]
            assert all(u >= v - 1e-12 for u, v in zip(tails, tails[1:]))

    def test_continuous_tail_approaches_one_as_y_vanishes(self):
        for ps in (ac.uniform(0, 1), ac.exponential(2.0), ac.gaussian(0, 1),
                   ac.student_t(4), ac.gamma_family(2.5, 1.5), ac.pareto(3, 1),
                   ac.weibull(1.7, 0.8), ac.log_normal(0.2, 0.6),
                   ac.beta_family(2, 5)):
            assert ac.tail_probability(ps, 1e-9).probability >= 1.0 - 1e-6

    def test_witness_ray_extremes_stay_finite(self):
        # far down the degenerate rays, where the plain-float moments overflow
        assert ac.tail_probability(ac.weibull(0.005, 1.0), 1.0).probability <= 1e-10
        assert ac.tail_probability(ac.log_normal(0.0, 25.0), 1.0).probability <= 1e-10

    def test_rejects_bad_y(self):
        with pytest.raises(DomainError):
            ac.tail_probability(ac.gaussian(0, 1), 0.0)
        with pytest.raises(DomainError):
            ac.tail_probability(ac.gaussian(0, 1), -1.0)


class TestSample:
    def test_replay_is_bit_identical(self):
        for ps in (ac.gaussian(0, 1), ac.poisson(4.0), ac.gamma_family(2.5, 1.5),
                   ac.hypergeometric(30, 100, 20)):
            a = ac.sample(ps, rng_from(42), size=1000)
            b = ac.sample(ps, rng_from(42), size=1000)
            assert np.array_equal(a, b)

    def test_scalar_draw_is_a_float(self):
        value = ac.sample(ac.exponential(1.0), rng_from(7))
        assert isinstance(value, float) and value > 0

    def test_uniform_symmetric_mean(self):
        draws = ac.sample(ac.uniform(-1.0, 1.0), rng_from(11), size=10**6)
        assert abs(float(np.mean(draws))) < 0.002

    def test_poisson_sample_variance(self):
        draws = ac.sample(ac.poisson(4.0), rng_from(12), size=10**6)
        assert float(np.var(draws)) == pytest.approx(4.0, abs=0.02)

    @pytest.mark.parametrize("ps", [
        ac.uniform(-1.0, 2.0), ac.exponential(1.3), ac.gaussian(0.5, 2.0),
        ac.student_t(5), ac.binomial(20, 0.3), ac.poisson(4.0),
        ac.neg_binomial(2.5, 0.4), ac.hypergeometric(30, 100, 20),
        ac.gamma_family(2.5, 1.5), ac.pareto(6.0, 2.0), ac.weibull(1.7, 0.8),
        ac.log_normal(0.2, 0.6), ac.beta_family(2.0, 5.0),
    ])
    def test_sampler_matches_moments(self, ps):
        n = 10**6
        draws = np.asarray(ac.sample(ps, rng_from(1234), size=n), dtype=float)
        m = ac.moments(ps)
        se_mean = math.sqrt(m.variance / n)
        assert abs(float(draws.mean()) - m.mean) <= 5.0 * se_mean
        s2 = float(draws.var(ddof=1))
        m4 = float(np.mean((draws - draws.mean()) ** 4))
        se_var = math.sqrt(max(m4 - s2 * s2, 0.0) / n)
        assert abs(s2 - m.variance) <= 5.0 * se_var


class TestParamSetJson:
    def test_wire_format_round_trip(self):
        ps = ac.exponential(2.5)
        data = json.loads(ps.to_json())
        assert data == {"family": "exponential", "params": {"lambda": 2.5}}
        assert ParamSet.from_json(ps.to_json()) == ps

    def test_greek_letters_are_spelled_out(self):
        assert set(ac.gamma_family(1.0, 2.0).params) == {"alpha", "beta"}
        assert set(ac.weibull(1.0, 2.0).params) == {"alpha", "lambda"}
        assert set(ac.hypergeometric(3, 10, 2).params) == {"M", "N", "n"}

    def test_kebab_case_family_names(self):
        assert FamilyId.STUDENT_T.value == "student-t"
        assert FamilyId.NEG_BINOMIAL.value == "neg-binomial"
        assert FamilyId.LOG_NORMAL.value == "log-normal"
        assert ParamSet.from_json(
            '{"family": "neg-binomial", "params": {"r": 1, "p": 0.5}}'
        ).family is FamilyId.NEG_BINOMIAL

    def test_unknown_family_rejected(self):
        with pytest.raises(DomainError):
            ParamSet.from_json('{"family": "cauchy", "params": {}}')
