"""Registry of the thirteen distribution families.

Parameter validation, exact moments, CDFs, standardized-tail
probabilities P(|X - mu| >= y * sigma), and seeded samplers.  Continuous
tails come from closed-form CDF/survival pairs (special functions where
needed); discrete tails are exact complements of an interior pmf sum
evaluated in log space.

The |X - mu| >= y*sigma event is inclusive: an integer lattice point at
exactly y standard deviations from the mean belongs to the tail.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Optional, Union

import numpy as np

from .errors import DomainError, InternalError
from .specfun import (
    clamp_probability,
    log_gamma,
    reg_inc_beta,
    reg_inc_gamma_lower,
    std_normal_cdf,
)

__all__ = [
    "FamilyId",
    "ParamSet",
    "Moments",
    "TailResult",
    "validate",
    "moments",
    "cdf",
    "tail_probability",
    "sample",
    "uniform",
    "exponential",
    "gaussian",
    "student_t",
    "binomial",
    "poisson",
    "neg_binomial",
    "hypergeometric",
    "gamma_family",
    "pareto",
    "weibull",
    "log_normal",
    "beta_family",
]


class FamilyId(str, Enum):
    """Closed enumeration of the supported families (kebab-case on the wire)."""

    UNIFORM = "uniform"
    EXPONENTIAL = "exponential"
    GAUSSIAN = "gaussian"
    STUDENT_T = "student-t"
    BINOMIAL = "binomial"
    POISSON = "poisson"
    NEG_BINOMIAL = "neg-binomial"
    HYPERGEOMETRIC = "hypergeometric"
    GAMMA = "gamma"
    PARETO = "pareto"
    WEIBULL = "weibull"
    LOG_NORMAL = "log-normal"
    BETA = "beta"


PARAM_FIELDS: dict[FamilyId, tuple[str, ...]] = {
    FamilyId.UNIFORM: ("a", "b"),
    FamilyId.EXPONENTIAL: ("lambda",),
    FamilyId.GAUSSIAN: ("mu", "sigma"),
    FamilyId.STUDENT_T: ("n",),
    FamilyId.BINOMIAL: ("n", "p"),
    FamilyId.POISSON: ("lambda",),
    FamilyId.NEG_BINOMIAL: ("r", "p"),
    FamilyId.HYPERGEOMETRIC: ("M", "N", "n"),
    FamilyId.GAMMA: ("alpha", "beta"),
    FamilyId.PARETO: ("r", "A"),
    FamilyId.WEIBULL: ("alpha", "lambda"),
    FamilyId.LOG_NORMAL: ("alpha", "sigma"),
    FamilyId.BETA: ("p", "q"),
}

_INTEGER_FIELDS: dict[FamilyId, tuple[str, ...]] = {
    FamilyId.STUDENT_T: ("n",),
    FamilyId.BINOMIAL: ("n",),
    FamilyId.HYPERGEOMETRIC: ("M", "N", "n"),
}

DISCRETE_FAMILIES = frozenset({
    FamilyId.BINOMIAL,
    FamilyId.POISSON,
    FamilyId.NEG_BINOMIAL,
    FamilyId.HYPERGEOMETRIC,
})


def _as_family(family: Union[FamilyId, str]) -> FamilyId:
    if isinstance(family, FamilyId):
        return family
    try:
        return FamilyId(family)
    except ValueError:
        known = ", ".join(f.value for f in FamilyId)
        raise DomainError(f"unknown family {family!r}; expected one of: {known}") from None


@dataclass(frozen=True)
class ParamSet:
    """A family tag plus its parameter record.

    Wire format: {"family": "<kebab-case>", "params": {...}} with the
    field names of PARAM_FIELDS ("lambda", "alpha", ... spelled out).
    """

    family: FamilyId
    params: Mapping[str, float]

    def __getitem__(self, key: str) -> float:
        return self.params[key]

    def to_json_dict(self) -> dict:
        return {"family": self.family.value, "params": dict(self.params)}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "ParamSet":
        if not isinstance(data, Mapping) or "family" not in data or "params" not in data:
            raise DomainError('parameter JSON must look like {"family": ..., "params": {...}}')
        family = _as_family(data["family"])
        params = data["params"]
        if not isinstance(params, Mapping):
            raise DomainError('"params" must be a JSON object')
        return cls(family=family, params=dict(params))

    @classmethod
    def from_json(cls, text: str) -> "ParamSet":
        return cls.from_json_dict(json.loads(text))


# convenience constructors (lambda is a keyword, hence `lam`)

def uniform(a: float, b: float) -> ParamSet:
    return ParamSet(FamilyId.UNIFORM, {"a": a, "b": b})


def exponential(lam: float) -> ParamSet:
    return ParamSet(FamilyId.EXPONENTIAL, {"lambda": lam})


def gaussian(mu: float, sigma: float) -> ParamSet:
    return ParamSet(FamilyId.GAUSSIAN, {"mu": mu, "sigma": sigma})


def student_t(n: int) -> ParamSet:
    return ParamSet(FamilyId.STUDENT_T, {"n": n})


def binomial(n: int, p: float) -> ParamSet:
    return ParamSet(FamilyId.BINOMIAL, {"n": n, "p": p})


def poisson(lam: float) -> ParamSet:
    return ParamSet(FamilyId.POISSON, {"lambda": lam})


def neg_binomial(r: float, p: float) -> ParamSet:
    return ParamSet(FamilyId.NEG_BINOMIAL, {"r": r, "p": p})


def hypergeometric(M: int, N: int, n: int) -> ParamSet:
    return ParamSet(FamilyId.HYPERGEOMETRIC, {"M": M, "N": N, "n": n})


def gamma_family(alpha: float, beta: float) -> ParamSet:
    return ParamSet(FamilyId.GAMMA, {"alpha": alpha, "beta": beta})


def pareto(r: float, A: float) -> ParamSet:
    return ParamSet(FamilyId.PARETO, {"r": r, "A": A})


def weibull(alpha: float, lam: float) -> ParamSet:
    return ParamSet(FamilyId.WEIBULL, {"alpha": alpha, "lambda": lam})


def log_normal(alpha: float, sigma: float) -> ParamSet:
    return ParamSet(FamilyId.LOG_NORMAL, {"alpha": alpha, "sigma": sigma})


def beta_family(p: float, q: float) -> ParamSet:
    return ParamSet(FamilyId.BETA, {"p": p, "q": q})


@dataclass(frozen=True)
class Moments:
    mean: float
    variance: float


@dataclass(frozen=True)
class TailResult:
    """P(|X - mu| >= y*sigma) plus how it was computed."""

    probability: float
    method: str  # closed-form | special-function | pmf-sum | quadrature | monte-carlo
    abs_error_bound: float

    def to_json_dict(self) -> dict:
        return {
            "probability": self.probability,
            "method": self.method,
            "abs_error_bound": self.abs_error_bound,
        }


def validate(ps: ParamSet) -> list[str]:
    """Check every parameter invariant; the violations are the return value.

    An empty list means the ParamSet is valid.  Structural problems
    (wrong field names, non-numeric values) are reported the same way.
    """
    family = ps.family
    fields = PARAM_FIELDS[family]
    problems: list[str] = []
    got = set(ps.params)
    expected = set(fields)
    for name in sorted(expected - got):
        problems.append(f"missing parameter {name!r}")
    for name in sorted(got - expected):
        problems.append(f"unexpected parameter {name!r}")
    for name in fields:
        if name not in ps.params:
            continue
        value = ps.params[name]
        if not isinstance(value, (int, float)) or isinstance(value, bool) or not math.isfinite(value):
            problems.append(f"parameter {name!r} must be a finite number, got {value!r}")
    if problems:
        return problems

    for name in _INTEGER_FIELDS.get(family, ()):
        if float(ps.params[name]) != math.floor(ps.params[name]):
            problems.append(f"{name} must be an integer")
    if problems:
        return problems

    p = ps.params
    if family is FamilyId.UNIFORM:
        if not p["a"] < p["b"]:
            problems.append("a must be < b")
    elif family is FamilyId.EXPONENTIAL:
        if not p["lambda"] > 0:
            problems.append("lambda must be positive")
    elif family is FamilyId.GAUSSIAN:
        if not p["sigma"] > 0:
            problems.append("sigma must be positive")
    elif family is FamilyId.STUDENT_T:
        if p["n"] < 3:
            problems.append("n must be >= 3 (variance requires n >= 3)")
    elif family is FamilyId.BINOMIAL:
        if p["n"] < 1:
            problems.append("n must be >= 1")
        # p = 1 would make the variance zero, which the standardized tail cannot use
        if not 0 < p["p"] < 1:
            problems.append("p must lie in (0, 1)")
    elif family is FamilyId.POISSON:
        if not p["lambda"] > 0:
            problems.append("lambda must be positive")
    elif family is FamilyId.NEG_BINOMIAL:
        if not p["r"] > 0:
            problems.append("r must be positive")
        if not 0 < p["p"] < 1:
            problems.append("p must lie in (0, 1); p = 1 is degenerate (zero variance)")
    elif family is FamilyId.HYPERGEOMETRIC:
        M, N, n = p["M"], p["N"], p["n"]
        if M < 1 or N < 1 or n < 1:
            problems.append("M, N, n must be positive integers")
        else:
            if M > N:
                problems.append("M must be <= N")
            if n > N:
                problems.append("n must be <= N")
            if M == N or n == N:
                problems.append("M = N or n = N makes the variance zero")
    elif family is FamilyId.GAMMA:
        if not p["alpha"] > 0:
            problems.append("alpha must be positive")
        if not p["beta"] > 0:
            problems.append("beta must be positive")
    elif family is FamilyId.PARETO:
        if not p["r"] > 2:
            problems.append("r must exceed 2 for finite variance")
        if not p["A"] > 0:
            problems.append("A must be positive")
    elif family is FamilyId.WEIBULL:
        if not p["alpha"] > 0:
            problems.append("alpha must be positive")
        if not p["lambda"] > 0:
            problems.append("lambda must be positive")
    elif family is FamilyId.LOG_NORMAL:
        if not p["sigma"] > 0:
            problems.append("sigma must be positive")
    elif family is FamilyId.BETA:
        if not p["p"] > 0:
            problems.append("p must be positive")
        if not p["q"] > 0:
            problems.append("q must be positive")
    return problems


def require_valid(ps: ParamSet) -> None:
    problems = validate(ps)
    if problems:
        raise DomainError(f"invalid {ps.family.value} parameters: " + "; ".join(problems))


def _log_expm1(d: float) -> float:
    """log(expm1(d)) for d > 0 without overflow."""
    if d < 30.0:
        return math.log(math.expm1(d))
    return d + math.log1p(-math.exp(-d))


def _weibull_log_moments(alpha: float, lam: float) -> tuple[float, float]:
    """(log mean, log sd) of the Weibull, computed entirely in log space."""
    lg1 = log_gamma(1.0 + 1.0 / alpha)
    lg2 = log_gamma(1.0 + 2.0 / alpha)
    log_mean = -math.log(lam) / alpha + lg1
    delta = lg2 - 2.0 * lg1
    log_sd = -math.log(lam) / alpha + lg1 + 0.5 * _log_expm1(delta)
    return log_mean, log_sd


def _lognormal_log_moments(alpha: float, sigma: float) -> tuple[float, float]:
    s2 = sigma * sigma
    log_mean = alpha + 0.5 * s2
    log_sd = alpha + 0.5 * s2 + 0.5 * _log_expm1(s2)
    return log_mean, log_sd


def moments(ps: ParamSet) -> Moments:
    """Exact mean and variance; always positive variance for valid parameters."""
    require_valid(ps)
    p = ps.params
    f = ps.family
    if f is FamilyId.UNIFORM:
        a, b = p["a"], p["b"]
        return Moments((a + b) / 2.0, (b - a) ** 2 / 12.0)
    if f is FamilyId.EXPONENTIAL:
        lam = p["lambda"]
        return Moments(1.0 / lam, 1.0 / (lam * lam))
    if f is FamilyId.GAUSSIAN:
        return Moments(p["mu"], p["sigma"] ** 2)
    if f is FamilyId.STUDENT_T:
        n = float(p["n"])
        return Moments(0.0, n / (n - 2.0))
    if f is FamilyId.BINOMIAL:
        n, pr = float(p["n"]), p["p"]
        return Moments(n * pr, n * pr * (1.0 - pr))
    if f is FamilyId.POISSON:
        lam = p["lambda"]
        return Moments(lam, lam)
    if f is FamilyId.NEG_BINOMIAL:
        r, pr = p["r"], p["p"]
        q = 1.0 - pr
        return Moments(r * q / pr, r * q / (pr * pr))
    if f is FamilyId.HYPERGEOMETRIC:
        M, N, n = float(p["M"]), float(p["N"]), float(p["n"])
        mean = n * M / N
        var = n * (M / N) * (1.0 - M / N) * (N - n) / (N - 1.0)
        return Moments(mean, var)
    if f is FamilyId.GAMMA:
        al, be = p["alpha"], p["beta"]
        return Moments(al * be, al * be * be)
    if f is FamilyId.PARETO:
        r, A = p["r"], p["A"]
        return Moments(r * A / (r - 1.0), r * A * A / ((r - 2.0) * (r - 1.0) ** 2))
    if f is FamilyId.WEIBULL:
        log_mean, log_sd = _weibull_log_moments(p["alpha"], p["lambda"])
        mean = math.exp(log_mean) if log_mean < 709.0 else math.inf
        var = math.exp(2.0 * log_sd) if 2.0 * log_sd < 709.0 else math.inf
        return Moments(mean, var)
    if f is FamilyId.LOG_NORMAL:
        log_mean, log_sd = _lognormal_log_moments(p["alpha"], p["sigma"])
        mean = math.exp(log_mean) if log_mean < 709.0 else math.inf
        var = math.exp(2.0 * log_sd) if 2.0 * log_sd < 709.0 else math.inf
        return Moments(mean, var)
    if f is FamilyId.BETA:
        pp, qq = p["p"], p["q"]
        s = pp + qq
        return Moments(pp / s, pp * qq / (s * s * (s + 1.0)))
    raise InternalError(f"unhandled family {f!r}")


# --- pmf machinery for the discrete families ------------------------------

def _log_binom_coeff(n: int, k: int) -> float:
    # exact big-int comb keeps lattice pmfs at 1-ulp accuracy; log_gamma
    # handles sizes where the integer route would be wasteful
    if n <= 10**6:
        return math.log(math.comb(n, k))
    return log_gamma(n + 1.0) - log_gamma(k + 1.0) - log_gamma(n - k + 1.0)


def _support(ps: ParamSet) -> tuple[int, Optional[int]]:
    """Integer support [kmin, kmax]; kmax None means unbounded above."""
    p = ps.params
    f = ps.family
    if f is FamilyId.BINOMIAL:
        return 0, int(p["n"])
    if f is FamilyId.POISSON or f is FamilyId.NEG_BINOMIAL:
        return 0, None
    if f is FamilyId.HYPERGEOMETRIC:
        M, N, n = int(p["M"]), int(p["N"]), int(p["n"])
        return max(0, n - (N - M)), min(M, n)
    raise InternalError(f"{f!r} is not discrete")


def _log_pmf(ps: ParamSet, k: int) -> float:
    """Log pmf at integer k (must lie inside the support)."""
    p = ps.params
    f = ps.family
    if f is FamilyId.BINOMIAL:
        n, pr = int(p["n"]), p["p"]
        return (_log_binom_coeff(n, k) + k * math.log(pr)
                + (n - k) * math.log1p(-pr))
    if f is FamilyId.POISSON:
        lam = p["lambda"]
        return k * math.log(lam) - lam - log_gamma(k + 1.0)
    if f is FamilyId.NEG_BINOMIAL:
        # pmf(l) = C(r+l-1, l) p^r q^l with real r > 0
        r, pr = p["r"], p["p"]
        q = 1.0 - pr
        if k == 0:
            return r * math.log(pr)
        return (log_gamma(r + k) - log_gamma(r) - log_gamma(k + 1.0)
                + r * math.log(pr) + k * math.log(q))
    if f is FamilyId.HYPERGEOMETRIC:
        M, N, n = int(p["M"]), int(p["N"]), int(p["n"])
        return (_log_binom_coeff(M, k) + _log_binom_coeff(N - M, n - k)
                - _log_binom_coeff(N, n))
    raise InternalError(f"{f!r} is not discrete")


def _pmf_tail_ratio_bound(ps: ParamSet, k: int) -> Optional[float]:
    """Upper bound on pmf(j+1)/pmf(j) for all j >= k, when one exists."""
    p = ps.params
    f = ps.family
    if f is FamilyId.POISSON:
        return p["lambda"] / (k + 1.0)
    if f is FamilyId.NEG_BINOMIAL:
        q = 1.0 - p["p"]
        return max(q * (p["r"] + k) / (k + 1.0), q)
    return None


_DISCRETE_LOOP_CAP = 10**7
_MASS_TRUNCATION = 1e-16


def _discrete_sum(ps: ParamSet, kmin: int, kmax: Optional[int], upper: float,
                  mean: float, keep) -> float:
    """Sum pmf(k) for integer k in [kmin, min(kmax, floor(upper))] with keep(k).

    Unbounded sums stop once a geometric bound shows the remaining mass is
    below the 1e-15 truncation budget.
    """
    k_end = math.floor(upper)
    if kmax is not None:
        k_end = min(k_end, kmax)
    total = 0.0
    k = kmin
    steps = 0
    while k <= k_end:
        lp = _log_pmf(ps, k)
        val = math.exp(lp) if lp > -745.0 else 0.0
        if keep is None or keep(k):
            total += val
        if kmax is None and k > mean and 0.0 < val:
            rho = _pmf_tail_ratio_bound(ps, k)
            if rho is not None and rho < 1.0 and val * rho / (1.0 - rho) < _MASS_TRUNCATION:
                break
        k += 1
        steps += 1
        if steps > _DISCRETE_LOOP_CAP:
            raise InternalError(f"discrete summation exceeded {_DISCRETE_LOOP_CAP} terms")
    return total


def cdf(ps: ParamSet, x: float) -> float:
    """P(X <= x); right-continuous with the atom at x for discrete families."""
    require_valid(ps)
    if not math.isfinite(x):
        raise DomainError(f"cdf requires finite x, got {x!r}")
    p = ps.params
    f = ps.family
    if f is FamilyId.UNIFORM:
        a, b = p["a"], p["b"]
        if x <= a:
            return 0.0
        if x >= b:
            return 1.0
        return (x - a) / (b - a)
    if f is FamilyId.EXPONENTIAL:
        return -math.expm1(-p["lambda"] * x) if x > 0.0 else 0.0
    if f is FamilyId.GAUSSIAN:
        return std_normal_cdf((x - p["mu"]) / p["sigma"])
    if f is FamilyId.STUDENT_T:
        from .anticoncentration import student_t_cdf  # single source for the t CDF
        return student_t_cdf(int(p["n"]), x)
    if f is FamilyId.GAMMA:
        if x <= 0.0:
            return 0.0
        return reg_inc_gamma_lower(p["alpha"], x / p["beta"])
    if f is FamilyId.PARETO:
        r, A = p["r"], p["A"]
        if x <= A:
            return 0.0
        return -math.expm1(r * math.log(A / x))
    if f is FamilyId.WEIBULL:
        if x <= 0.0:
            return 0.0
        return -math.expm1(-p["lambda"] * x ** p["alpha"])
    if f is FamilyId.LOG_NORMAL:
        if x <= 0.0:
            return 0.0
        return std_normal_cdf((math.log(x) - p["alpha"]) / p["sigma"])
    if f is FamilyId.BETA:
        if x <= 0.0:
            return 0.0
        if x >= 1.0:
            return 1.0
        return reg_inc_beta(x, p["p"], p["q"])
    if f in DISCRETE_FAMILIES:
        kmin, kmax = _support(ps)
        if x < kmin:
            return 0.0
        mean = moments(ps).mean
        total = _discrete_sum(ps, kmin, kmax, x, mean, keep=None)
        return clamp_probability(total, context="discrete cdf")
    raise InternalError(f"unhandled family {f!r}")


def _survival(ps: ParamSet, x: float) -> float:
    """P(X >= x) for continuous families, in closed form where cheap."""
    p = ps.params
    f = ps.family
    if f is FamilyId.UNIFORM:
        a, b = p["a"], p["b"]
        if x <= a:
            return 1.0
        if x >= b:
            return 0.0
        return (b - x) / (b - a)
    if f is FamilyId.EXPONENTIAL:
        return math.exp(-p["lambda"] * x) if x > 0.0 else 1.0
    if f is FamilyId.GAUSSIAN:
        return std_normal_cdf((p["mu"] - x) / p["sigma"])
    if f is FamilyId.STUDENT_T:
        from .anticoncentration import student_t_cdf
        return student_t_cdf(int(p["n"]), -x)
    if f is FamilyId.GAMMA:
        if x <= 0.0:
            return 1.0
        return 1.0 - reg_inc_gamma_lower(p["alpha"], x / p["beta"])
    if f is FamilyId.PARETO:
        r, A = p["r"], p["A"]
        if x <= A:
            return 1.0
        return math.exp(r * math.log(A / x))
    if f is FamilyId.WEIBULL:
        if x <= 0.0:
            return 1.0
        return math.exp(-p["lambda"] * x ** p["alpha"])
    if f is FamilyId.LOG_NORMAL:
        if x <= 0.0:
            return 1.0
        return std_normal_cdf((p["alpha"] - math.log(x)) / p["sigma"])
    if f is FamilyId.BETA:
        if x <= 0.0:
            return 1.0
        if x >= 1.0:
            return 0.0
        return reg_inc_beta(1.0 - x, p["q"], p["p"])
    raise InternalError(f"{f!r} has no continuous survival")


_METHOD_BY_FAMILY = {
    FamilyId.UNIFORM: ("closed-form", 1e-14),
    FamilyId.EXPONENTIAL: ("closed-form", 1e-14),
    FamilyId.GAUSSIAN: ("special-function", 1e-13),
    FamilyId.STUDENT_T: ("special-function", 1e-12),
    FamilyId.GAMMA: ("special-function", 1e-12),
    FamilyId.PARETO: ("closed-form", 1e-14),
    FamilyId.WEIBULL: ("closed-form", 1e-13),
    FamilyId.LOG_NORMAL: ("special-function", 1e-13),
    FamilyId.BETA: ("special-function", 1e-12),
}


def _log_add_exp(a: float, b: float) -> float:
    hi, lo = (a, b) if a >= b else (b, a)
    if hi == -math.inf:
        return -math.inf
    return hi + math.log1p(math.exp(lo - hi))


def _tail_from_log_scale(ps: ParamSet, y: float, log_mean: float, log_sd: float) -> float:
    """Tail for positive-support families whose moments may overflow a double.

    Works with log(mu), log(sigma) so Weibull/log-normal tails stay exact
    arbitrarily far along their witness rays.
    """
    p = ps.params
    f = ps.family
    s = math.log(y) + log_sd  # log(y * sigma)
    log_hi = _log_add_exp(s, log_mean)
    if f is FamilyId.WEIBULL:
        al, lam = p["alpha"], p["lambda"]
        e = al * log_hi
        upper = math.exp(-lam * math.exp(e)) if e < 709.0 else 0.0
    else:  # log-normal
        alp, sig = p["alpha"], p["sigma"]
        upper = std_normal_cdf((alp - log_hi) / sig)
    if log_mean <= s:
        lower = 0.0  # mu - y*sigma <= 0: nothing below on positive support
    else:
        log_lo = log_mean + math.log1p(-math.exp(s - log_mean))
        if f is FamilyId.WEIBULL:
            e = p["alpha"] * log_lo
            lower = -math.expm1(-p["lambda"] * math.exp(e)) if e < 709.0 else 1.0
        else:
            lower = std_normal_cdf((log_lo - p["alpha"]) / p["sigma"])
    return clamp_probability(lower + upper, context="log-scale tail")


def tail_probability(ps: ParamSet, y: float) -> TailResult:
    """Exact P(|X - mu| >= y * sigma) with mu, sigma^2 from moments().

    Continuous families: cdf(mu - y*sigma) + P(X >= mu + y*sigma); the
    boundary has measure zero.  Discrete families: one minus the pmf sum
    over integers strictly inside (mu - y*sigma, mu + y*sigma), so lattice
    points at exactly y standard deviations count toward the tail.
    """
    require_valid(ps)
    if not (isinstance(y, (int, float)) and math.isfinite(y) and y > 0.0):
        raise DomainError(f"tail_probability requires y > 0, got {y!r}")
    f = ps.family

    if f is FamilyId.WEIBULL:
        log_mean, log_sd = _weibull_log_moments(ps.params["alpha"], ps.params["lambda"])
        prob = _tail_from_log_scale(ps, y, log_mean, log_sd)
        method, err = _METHOD_BY_FAMILY[f]
        return TailResult(prob, method, err)
    if f is FamilyId.LOG_NORMAL:
        log_mean, log_sd = _lognormal_log_moments(ps.params["alpha"], ps.params["sigma"])
        prob = _tail_from_log_scale(ps, y, log_mean, log_sd)
        method, err = _METHOD_BY_FAMILY[f]
        return TailResult(prob, method, err)

    m = moments(ps)
    sd = math.sqrt(m.variance)
    lo = m.mean - y * sd
    hi = m.mean + y * sd

    if f in DISCRETE_FAMILIES:
        kmin, kmax = _support(ps)
        k0 = max(kmin, math.ceil(lo))
        inner = _discrete_sum(ps, k0, kmax, hi, m.mean,
                              keep=lambda k: abs(k - m.mean) < y * sd)
        prob = clamp_probability(1.0 - inner, context="discrete tail")
        return TailResult(prob, "pmf-sum", 1e-13)

    prob = clamp_probability(cdf(ps, lo) + _survival(ps, hi), context="continuous tail")
    method, err = _METHOD_BY_FAMILY[f]
    return TailResult(prob, method, err)


def sample(ps: ParamSet, rng: np.random.Generator, size=None):
    """Draw variates with the family's law from a caller-owned generator.

    Returns a float (or int for discrete families) when size is None,
    otherwise an ndarray.  Deterministic given the generator state; the
    light-tailed continuous families use explicit inverse-CDF transforms,
    Student's t uses the normal-over-chi construction, and the remaining
    families use the generator's native (rejection/summation) methods.
    """
    require_valid(ps)
    p = ps.params
    f = ps.family
    scalar = size is None
    if f is FamilyId.UNIFORM:
        out = p["a"] + (p["b"] - p["a"]) * rng.random(size)
    elif f is FamilyId.EXPONENTIAL:
        out = -np.log1p(-rng.random(size)) / p["lambda"]
    elif f is FamilyId.GAUSSIAN:
        out = p["mu"] + p["sigma"] * rng.standard_normal(size)
    elif f is FamilyId.STUDENT_T:
        n = int(p["n"])
        z = rng.standard_normal(size)
        v = rng.chisquare(n, size)
        out = z / np.sqrt(v / n)
    elif f is FamilyId.BINOMIAL:
        out = rng.binomial(int(p["n"]), p["p"], size)
    elif f is FamilyId.POISSON:
        out = rng.poisson(p["lambda"], size)
    elif f is FamilyId.NEG_BINOMIAL:
        out = rng.negative_binomial(p["r"], p["p"], size)
    elif f is FamilyId.HYPERGEOMETRIC:
        M, N, n = int(p["M"]), int(p["N"]), int(p["n"])
        out = rng.hypergeometric(M, N - M, n, size)
    elif f is FamilyId.GAMMA:
        out = rng.gamma(p["alpha"], p["beta"], size)
    elif f is FamilyId.PARETO:
        out = p["A"] * (1.0 - rng.random(size)) ** (-1.0 / p["r"])
    elif f is FamilyId.WEIBULL:
        e = -np.log1p(-rng.random(size))
        out = (e / p["lambda"]) ** (1.0 / p["alpha"])
    elif f is FamilyId.LOG_NORMAL:
        out = np.exp(p["alpha"] + p["sigma"] * rng.standard_normal(size))
    elif f is FamilyId.BETA:
        out = rng.beta(p["p"], p["q"], size)
    else:
        raise InternalError(f"unhandled family {f!r}")
    if scalar:
        return float(out)
    return out
