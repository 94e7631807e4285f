"""Catalog of closed-form sharp constants for weighted Fourier inequalities.

Every constant is a ratio of Gamma functions times explicit powers; each is
evaluated as ``exp(fsum of signed log-gamma terms)`` so that huge and tiny
Gamma values never meet in floating point. Hypotheses are strict
inequalities checked with zero tolerance: every boundary case is a Gamma
pole or a divergent integral, so nothing sensible lives there.

The formula identifiers exported in ``FORMULA_PARAMS`` are the shared
vocabulary of the CLI and the verification reports.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

from .errors import DomainError, HypothesisViolation
from .special import digamma, log_gamma

__all__ = [
    "InequalityParams",
    "ConstantResult",
    "FORMULA_PARAMS",
    "evaluate",
    "pitt_c",
    "stein_weiss_b",
    "herbst_c",
    "hardy_rellich_c",
    "riesz_norm",
    "log_uncertainty_d",
    "sw_diag_d",
    "weighted_sobolev_c",
    "davies_hinz_a",
    "grad_f",
    "davies_hinz_b",
    "mixed_g",
    "mixed_sobolev_c",
    "mixed_grad_c",
    "iterated_e",
    "iterated_hardy_c",
    "riesz_composition_const",
]

_LN_PI = math.log(math.pi)
_LN_2 = math.log(2.0)

_OK_CERT = "hypotheses verified"
# sharpness of the odd-order family is established at sigma = 0 and the
# constant is stated for general sigma; nonzero sigma keeps the caveat
# visible so downstream reports stay honest.
_SIGMA_CERT = ("hypotheses verified; sharpness established at sigma = 0, "
               "constant stated for general sigma")


@dataclass(frozen=True)
class InequalityParams:
    """Echo record of the parameters a constant was evaluated at.

    Field roles vary per formula: ``m`` is the second dimension in the mixed
    homogeneity family, ``gamma_w``/``order_m`` are the Davies-Hinz weight
    exponent and iteration order, ``lam`` is the kernel singularity exponent
    (derived wherever a constraint fixes it, an input only for the Riesz
    composition), ``mu`` the second composition exponent.
    """

    n: int
    p: float | None = None
    alpha: float | None = None
    beta: float | None = None
    sigma: float | None = None
    rho: float | None = None
    gamma_w: float | None = None
    order_m: int | None = None
    m: int | None = None
    lam: float | None = None
    mu: float | None = None

    @cached_property
    def p_conj(self) -> float:
        if self.p is None:
            raise DomainError("p is not set for these parameters")
        return self.p / (self.p - 1.0)

    def as_dict(self) -> dict[str, float]:
        """Flat name -> number record, using the reporting vocabulary."""
        out: dict[str, float] = {"n": self.n}
        for field_name, key in (("m", "m"), ("p", "p"), ("alpha", "alpha"),
                                ("beta", "beta"), ("sigma", "sigma"),
                                ("rho", "rho"), ("gamma_w", "gamma"),
                                ("order_m", "m"), ("lam", "lambda"),
                                ("mu", "mu")):
            val = getattr(self, field_name)
            if val is not None:
                out[key] = val
        return out


@dataclass(frozen=True)
class ConstantResult:
    value: float
    formula_id: str
    params_echo: InequalityParams
    log_value: float
    certificate: str = _OK_CERT


def _lg(x: float) -> float:
    return float(log_gamma(x))


def _require(formula_id: str, conditions) -> None:
    """conditions: iterable of (satisfied, description). Raises listing all failures."""
    failures = [desc for ok, desc in conditions if not ok]
    if failures:
        raise HypothesisViolation(formula_id, failures)


def _int_dim(formula_id: str, value, name: str) -> int:
    if not isinstance(value, (int,)) or isinstance(value, bool) or value < 1:
        raise HypothesisViolation(formula_id,
                                  [f"{name} must be an integer dimension >= 1, got {value!r}"])
    return value


def _finite_p(formula_id: str, p) -> float:
    p = float(p)
    if not (math.isfinite(p) and p > 1.0):
        raise HypothesisViolation(formula_id, [f"p must satisfy 1 < p < oo, got {p}"])
    return p


def _log_ratio(prefactor: float, numerator, denominator) -> float:
    # numerator/denominator log terms accumulated ascending by magnitude,
    # a fixed ordering so repeated runs agree to the bit
    num = sorted((_lg(a) for a in numerator), key=abs)
    den = sorted((_lg(a) for a in denominator), key=abs)
    return prefactor + math.fsum(num) - math.fsum(den)


def _result(formula_id: str, params: InequalityParams, log_value: float,
            certificate: str = _OK_CERT) -> ConstantResult:
    return ConstantResult(value=math.exp(log_value), formula_id=formula_id,
                          params_echo=params, log_value=log_value,
                          certificate=certificate)


# ---------------------------------------------------------------------------
# Fourier-side constants
# ---------------------------------------------------------------------------

def pitt_c(n: int, alpha: float) -> ConstantResult:
    """pi^alpha [Gamma((n-alpha)/4) / Gamma((n+alpha)/4)]^2, 0 <= alpha < n."""
    n = _int_dim("pitt_c", n, "n")
    alpha = float(alpha)
    _require("pitt_c", [(0.0 <= alpha, "0 <= alpha"), (alpha < n, "alpha < n")])
    log_value = _log_ratio(alpha * _LN_PI,
                           [0.25 * (n - alpha)] * 2,
                           [0.25 * (n + alpha)] * 2)
    return _result("pitt_c", InequalityParams(n=n, alpha=alpha), log_value)


def stein_weiss_b(n: int, alpha: float) -> ConstantResult:
    n = _int_dim("stein_weiss_b", n, "n")
    alpha = float(alpha)
    _require("stein_weiss_b", [(0.0 < alpha, "0 < alpha"), (alpha < n, "alpha < n")])
    log_value = _log_ratio(0.5 * n * _LN_PI,
                           [0.5 * alpha, 0.25 * (n - alpha), 0.25 * (n - alpha)],
                           [0.5 * (n - alpha), 0.25 * (n + alpha), 0.25 * (n + alpha)])
    return _result("stein_weiss_b", InequalityParams(n=n, alpha=alpha), log_value)


def herbst_c(n: int, p: float, alpha: float) -> ConstantResult:
    n = _int_dim("herbst_c", n, "n")
    p = _finite_p("herbst_c", p)
    alpha = float(alpha)
    _require("herbst_c", [(0.0 < alpha, "0 < alpha"), (alpha < n, "alpha < n")])
    pc = p / (p - 1.0)
    s = 0.5 / p
    sc = 0.5 / pc
    log_value = _log_ratio(0.5 * n * _LN_PI,
                           [alpha * s, (n - alpha) * s, n * sc],
                           [0.5 * n - alpha * s, n * sc + alpha * s, n * s])
    params = InequalityParams(n=n, p=p, alpha=alpha, lam=n - alpha / p)
    return _result("herbst_c", params, log_value)


def hardy_rellich_c(n: int, p: float, alpha: float) -> ConstantResult:
    n = _int_dim("hardy_rellich_c", n, "n")
    p = _finite_p("hardy_rellich_c", p)
    alpha = float(alpha)
    _require("hardy_rellich_c", [(0.0 <= alpha, "0 <= alpha"), (alpha < n, "alpha < n")])
    log_value = _hardy_rellich_log_raw(n, p, alpha)
    return _result("hardy_rellich_c", InequalityParams(n=n, p=p, alpha=alpha),
                   log_value)


def _hardy_rellich_log_raw(n: int, p: float, alpha: float) -> float:
    """The bracket of hardy_rellich_c without hypothesis checks.

    Extended to slightly negative alpha so difference stencils can probe the
    derivative at alpha = 0 (all Gamma arguments stay positive there).
    """
    pc = p / (p - 1.0)
    return _log_ratio(-(alpha / p) * _LN_2,
                      [(n - alpha) / (2.0 * p), 0.5 * n / pc],
                      [0.5 * n / pc + alpha / (2.0 * p), 0.5 * n / p])


def riesz_norm(n: int, a: float) -> float:
    """Normalization c with (-Delta)^{-a/2} = c (|x|^{-(n-a)} * .), 0 < a < n."""
    n = _int_dim("riesz_norm", n, "n")
    a = float(a)
    _require("riesz_norm", [(0.0 < a, "0 < a"), (a < n, "a < n")])
    return math.exp(_log_ratio(-a * _LN_2 - 0.5 * n * _LN_PI,
                               [0.5 * (n - a)], [0.5 * a]))


def log_uncertainty_d(n: int, p: float) -> float:
    """ln 2 + (psi(n/2p) + psi(n/2p'))/2; symmetric in p <-> p', may be negative."""
    n = _int_dim("log_uncertainty_d", n, "n")
    p = _finite_p("log_uncertainty_d", p)
    pc = p / (p - 1.0)
    return _LN_2 + 0.5 * (float(digamma(0.5 * n / p)) + float(digamma(0.5 * n / pc)))


# ---------------------------------------------------------------------------
# Stein-Weiss diagonal family
# ---------------------------------------------------------------------------

def sw_diag_d(n: int, p: float, alpha: float, beta: float) -> ConstantResult:
    n = _int_dim("sw_diag_d", n, "n")
    p = _finite_p("sw_diag_d", p)
    alpha, beta = float(alpha), float(beta)
    pc = p / (p - 1.0)
    _require("sw_diag_d", [
        (alpha < n / p, "alpha < n/p"),
        (beta < n / pc, "beta < n/p'"),
        (alpha + beta > 0.0, "alpha + beta > 0"),
        (alpha + beta < n, "alpha + beta < n"),
    ])
    log_value = _log_ratio(
        0.5 * n * _LN_PI,
        [0.5 * (alpha + beta), 0.5 * n / p - 0.5 * alpha, 0.5 * n / pc - 0.5 * beta],
        [0.5 * (n - alpha - beta), 0.5 * n / pc + 0.5 * alpha, 0.5 * n / p + 0.5 * beta])
    params = InequalityParams(n=n, p=p, alpha=alpha, beta=beta,
                              lam=n - alpha - beta)
    return _result("sw_diag_d", params, log_value)


def weighted_sobolev_c(n: int, p: float, alpha: float, beta: float) -> ConstantResult:
    n = _int_dim("weighted_sobolev_c", n, "n")
    p = _finite_p("weighted_sobolev_c", p)
    alpha, beta = float(alpha), float(beta)
    pc = p / (p - 1.0)
    _require("weighted_sobolev_c", [
        (alpha + beta > 0.0, "alpha + beta > 0"),
        (alpha + beta < n, "alpha + beta < n"),
        (alpha < n / p, "alpha < n/p"),
        (beta < n / pc, "beta < n/p'"),
    ])
    log_value = _log_ratio(
        -(alpha + beta) * _LN_2,
        [0.5 * n / p - 0.5 * alpha, 0.5 * n / pc - 0.5 * beta],
        [0.5 * n / pc + 0.5 * alpha, 0.5 * n / p + 0.5 * beta])
    return _result("weighted_sobolev_c",
                   InequalityParams(n=n, p=p, alpha=alpha, beta=beta), log_value)


def davies_hinz_a(n: int, p: float, gamma_w: float, order_m: int) -> ConstantResult:
    """Constant for the |Delta^m| family, exposed in (gamma, m) directly.

    Admissibility is inherited from weighted_sobolev_c at alpha =
    gamma/p + 2m, beta = -gamma/p; order_m = 0 degenerates to an empty
    Gamma ratio and is accepted with value exactly 1.
    """
    n = _int_dim("davies_hinz_a", n, "n")
    p = _finite_p("davies_hinz_a", p)
    gamma_w = float(gamma_w)
    if not isinstance(order_m, int) or isinstance(order_m, bool) or order_m < 0:
        raise HypothesisViolation("davies_hinz_a",
                                  [f"m must be an integer >= 0, got {order_m!r}"])
    pc = p / (p - 1.0)
    conditions = [
        (gamma_w < n - 2.0 * order_m * p, "gamma < n - 2mp (alpha < n/p)"),
        (gamma_w > -n * p / pc, "gamma > -np/p' (beta < n/p')"),
    ]
    if order_m >= 1:
        conditions.append((2 * order_m < n, "2m < n"))
    _require("davies_hinz_a", conditions)
    bracket = _log_ratio(0.0,
                         [(n - gamma_w) / (2.0 * p) - order_m,
                          0.5 * n / pc + gamma_w / (2.0 * p)],
                         [0.5 * n / pc + gamma_w / (2.0 * p) + order_m,
                          (n - gamma_w) / (2.0 * p)])
    log_value = -2.0 * order_m * p * _LN_2 + p * bracket
    params = InequalityParams(n=n, p=p, gamma_w=gamma_w, order_m=order_m)
    return _result("davies_hinz_a", params, log_value)


def grad_f(n: int, p: float, alpha: float, beta: float, sigma: float) -> ConstantResult:
    n = _int_dim("grad_f", n, "n")
    p = _finite_p("grad_f", p)
    alpha, beta, sigma = float(alpha), float(beta), float(sigma)
    pc = p / (p - 1.0)
    lam = n + 1.0 - alpha - beta - sigma
    _require("grad_f", [
        (lam > 0.0, "lambda = n+1-alpha-beta-sigma > 0"),
        (lam < n, "lambda < n (alpha+beta+sigma > 1)"),
        (alpha < n / p, "alpha < n/p"),
        # tested as written in the prefactor so rounding can't sneak past
        (n / p + beta - 1.0 > 0.0, "beta > 1 - n/p (K2 integrable)"),
        (beta < n / pc, "beta < n/p'"),
        (beta + sigma - 1.0 < n / pc, "beta + sigma - 1 < n/p'"),
    ])
    bs = 0.5 * (beta + sigma - 1.0)
    log_value = _log_ratio(
        0.5 * n * _LN_PI - math.log(n / p + beta - 1.0),
        [0.5 * (alpha + beta + sigma - 1.0), 0.5 * n / p - 0.5 * alpha,
         0.5 * n / pc - bs],
        [0.5 * lam, 0.5 * n / pc + 0.5 * alpha, 0.5 * n / p + bs])
    params = InequalityParams(n=n, p=p, alpha=alpha, beta=beta, sigma=sigma,
                              lam=lam)
    cert = _OK_CERT if sigma == 0.0 else _SIGMA_CERT
    return _result("grad_f", params, log_value, cert)


def davies_hinz_b(n: int, p: float, gamma_w: float, order_m: int) -> ConstantResult:
    """Gradient companion of davies_hinz_a, via alpha = gamma/p + 2m + 1,
    beta = -gamma/p, sigma = 0; order_m = 0 is the degenerate first rung."""
    n = _int_dim("davies_hinz_b", n, "n")
    p = _finite_p("davies_hinz_b", p)
    gamma_w = float(gamma_w)
    if not isinstance(order_m, int) or isinstance(order_m, bool) or order_m < 0:
        raise HypothesisViolation("davies_hinz_b",
                                  [f"m must be an integer >= 0, got {order_m!r}"])
    pc = p / (p - 1.0)
    conditions = [
        (gamma_w < n - (2.0 * order_m + 1.0) * p, "gamma < n - (2m+1)p (alpha < n/p)"),
        (gamma_w > -n * p / pc, "gamma > -np/p' (beta < n/p')"),
        (gamma_w < n - p, "gamma < n - p (K2 integrable)"),
    ]
    if order_m >= 1:
        conditions.append((2 * order_m < n, "2m < n"))
    _require("davies_hinz_b", conditions)
    bracket = _log_ratio(0.0,
                         [(n - gamma_w) / (2.0 * p) - order_m - 0.5,
                          0.5 * n / pc + gamma_w / (2.0 * p) + 0.5],
                         [0.5 * n / pc + gamma_w / (2.0 * p) + order_m + 0.5,
                          (n - gamma_w) / (2.0 * p) + 0.5])
    log_value = -(2.0 * order_m + 1.0) * p * _LN_2 + p * bracket
    params = InequalityParams(n=n, p=p, gamma_w=gamma_w, order_m=order_m)
    return _result("davies_hinz_b", params, log_value)


# ---------------------------------------------------------------------------
# Mixed homogeneity family
# ---------------------------------------------------------------------------

def _mixed_conditions(formula_id, n, m, p, alpha, beta):
    pc = p / (p - 1.0)
    _require(formula_id, [
        (alpha < m / p, "alpha < m/p"),
        (beta < m / pc, "beta < m/p'"),
        (alpha + beta > 0.0, "alpha + beta > 0"),
        (alpha + beta < m, "alpha + beta < m"),
    ])


def mixed_g(n: int, m: int, p: float, alpha: float, beta: float) -> ConstantResult:
    n = _int_dim("mixed_g", n, "n")
    m = _int_dim("mixed_g", m, "m")
    p = _finite_p("mixed_g", p)
    alpha, beta = float(alpha), float(beta)
    _mixed_conditions("mixed_g", n, m, p, alpha, beta)
    pc = p / (p - 1.0)
    log_value = _log_ratio(
        0.5 * (n + m) * _LN_PI,
        [0.5 * (alpha + beta), 0.5 * m / p - 0.5 * alpha, 0.5 * m / pc - 0.5 * beta],
        [0.5 * (n + m - alpha - beta), 0.5 * m / pc + 0.5 * alpha,
         0.5 * m / p + 0.5 * beta])
    params = InequalityParams(n=n, m=m, p=p, alpha=alpha, beta=beta,
                              lam=n + m - alpha - beta)
    return _result("mixed_g", params, log_value)


def mixed_sobolev_c(n: int, m: int, p: float, alpha: float, beta: float) -> ConstantResult:
    n = _int_dim("mixed_sobolev_c", n, "n")
    m = _int_dim("mixed_sobolev_c", m, "m")
    p = _finite_p("mixed_sobolev_c", p)
    alpha, beta = float(alpha), float(beta)
    _mixed_conditions("mixed_sobolev_c", n, m, p, alpha, beta)
    pc = p / (p - 1.0)
    log_value = _log_ratio(
        -(alpha + beta) * _LN_2,
        [0.5 * m / p - 0.5 * alpha, 0.5 * m / pc - 0.5 * beta],
        [0.5 * m / pc + 0.5 * alpha, 0.5 * m / p + 0.5 * beta])
    return _result("mixed_sobolev_c",
                   InequalityParams(n=n, m=m, p=p, alpha=alpha, beta=beta),
                   log_value)


def mixed_grad_c(n: int, m: int, p: float, alpha: float, beta: float) -> ConstantResult:
    n = _int_dim("mixed_grad_c", n, "n")
    m = _int_dim("mixed_grad_c", m, "m")
    p = _finite_p("mixed_grad_c", p)
    alpha, beta = float(alpha), float(beta)
    _mixed_conditions("mixed_grad_c", n, m, p, alpha, beta)
    pc = p / (p - 1.0)
    log_value = _log_ratio(
        -(alpha + beta) * _LN_2,
        [0.5 * m / p - 0.5 * alpha, 0.5 * m / pc - 0.5 * beta + 0.5],
        [0.5 * m / pc + 0.5 * alpha, 0.5 * m / p + 0.5 * beta + 0.5])
    return _result("mixed_grad_c",
                   InequalityParams(n=n, m=m, p=p, alpha=alpha, beta=beta),
                   log_value)


# ---------------------------------------------------------------------------
# Iterated family and Riesz composition
# ---------------------------------------------------------------------------

def _iterated_conditions(formula_id, n, p, alpha, sigma, rho):
    pc = p / (p - 1.0)
    _require(formula_id, [
        (alpha > 0.0, "alpha > 0"),
        (alpha < n / pc, "alpha < n/p'"),
        (sigma > 0.0, "sigma > 0"),
        (sigma < n, "sigma < n"),
        (rho - sigma > -n / p, "rho - sigma > -n/p"),
        (rho < n / pc, "rho < n/p'"),
    ])


def iterated_e(n: int, p: float, alpha: float, sigma: float, rho: float) -> ConstantResult:
    n = _int_dim("iterated_e", n, "n")
    p = _finite_p("iterated_e", p)
    alpha, sigma, rho = float(alpha), float(sigma), float(rho)
    _iterated_conditions("iterated_e", n, p, alpha, sigma, rho)
    pc = p / (p - 1.0)
    np2, npc2 = 0.5 * n / p, 0.5 * n / pc
    log_value = _log_ratio(
        n * _LN_PI,
        [0.5 * alpha, 0.5 * sigma, np2, npc2 - 0.5 * alpha, npc2 - 0.5 * rho,
         np2 + 0.5 * rho - 0.5 * sigma],
        [0.5 * (n - alpha), 0.5 * (n - sigma), npc2, np2 + 0.5 * alpha,
         np2 + 0.5 * rho, npc2 - 0.5 * rho + 0.5 * sigma])
    params = InequalityParams(n=n, p=p, alpha=alpha, sigma=sigma, rho=rho,
                              beta=alpha + sigma - rho)
    return _result("iterated_e", params, log_value)


def iterated_hardy_c(n: int, p: float, alpha: float, sigma: float, rho: float) -> ConstantResult:
    n = _int_dim("iterated_hardy_c", n, "n")
    p = _finite_p("iterated_hardy_c", p)
    alpha, sigma, rho = float(alpha), float(sigma), float(rho)
    _iterated_conditions("iterated_hardy_c", n, p, alpha, sigma, rho)
    _require("iterated_hardy_c", [(p < n, "p < n")])
    pc = p / (p - 1.0)
    np2, npc2 = 0.5 * n / p, 0.5 * n / pc
    log_value = _log_ratio(
        -(alpha + sigma) * _LN_2,
        [np2, npc2 - 0.5 * alpha, npc2 - 0.5 * rho, np2 + 0.5 * rho - 0.5 * sigma],
        [npc2, np2 + 0.5 * alpha, np2 + 0.5 * rho, npc2 - 0.5 * rho + 0.5 * sigma])
    params = InequalityParams(n=n, p=p, alpha=alpha, sigma=sigma, rho=rho,
                              beta=alpha + sigma - rho)
    return _result("iterated_hardy_c", params, log_value)


def riesz_composition_const(n: int, lam: float, mu: float) -> ConstantResult:
    """|x|^{-lam} * |x|^{-mu} = const |x|^{-(lam+mu-n)}, the composition identity."""
    n = _int_dim("riesz_composition", n, "n")
    lam, mu = float(lam), float(mu)
    _require("riesz_composition", [
        (0.0 < lam, "0 < lambda"),
        (lam < n, "lambda < n"),
        (0.0 < mu, "0 < mu"),
        (mu < n, "mu < n"),
        (lam + mu > n, "lambda + mu > n"),
    ])
    log_value = _log_ratio(
        0.5 * n * _LN_PI,
        [0.5 * (n - lam), 0.5 * (n - mu), 0.5 * (lam + mu - n)],
        [0.5 * lam, 0.5 * mu, 0.5 * (2.0 * n - lam - mu)])
    return _result("riesz_composition", InequalityParams(n=n, lam=lam, mu=mu),
                   log_value)


# ---------------------------------------------------------------------------
# Dispatch table: formula_id -> (callable, argument names in CLI order)
# ---------------------------------------------------------------------------

FORMULA_PARAMS: dict[str, tuple] = {
    "pitt_c": (pitt_c, ("n", "alpha")),
    "stein_weiss_b": (stein_weiss_b, ("n", "alpha")),
    "herbst_c": (herbst_c, ("n", "p", "alpha")),
    "hardy_rellich_c": (hardy_rellich_c, ("n", "p", "alpha")),
    "log_uncertainty_d": (log_uncertainty_d, ("n", "p")),
    "sw_diag_d": (sw_diag_d, ("n", "p", "alpha", "beta")),
    "weighted_sobolev_c": (weighted_sobolev_c, ("n", "p", "alpha", "beta")),
    "davies_hinz_a": (davies_hinz_a, ("n", "p", "gamma_w", "order_m")),
    "grad_f": (grad_f, ("n", "p", "alpha", "beta", "sigma")),
    "davies_hinz_b": (davies_hinz_b, ("n", "p", "gamma_w", "order_m")),
    "mixed_g": (mixed_g, ("n", "m", "p", "alpha", "beta")),
    "mixed_sobolev_c": (mixed_sobolev_c, ("n", "m", "p", "alpha", "beta")),
    "mixed_grad_c": (mixed_grad_c, ("n", "m", "p", "alpha", "beta")),
    "iterated_e": (iterated_e, ("n", "p", "alpha", "sigma", "rho")),
    "iterated_hardy_c": (iterated_hardy_c, ("n", "p", "alpha", "sigma", "rho")),
    "riesz_composition": (riesz_composition_const, ("n", "lam", "mu")),
}


def evaluate(formula_id: str, **params):
    """Evaluate a catalog constant by identifier.

    Returns a ConstantResult, except for log_uncertainty_d which is a plain
    (possibly negative) real. Unknown identifiers raise DomainError before
    any computation.
    """
    if formula_id not in FORMULA_PARAMS:
        raise DomainError(f"unknown formula_id {formula_id!r}")
    fn, names = FORMULA_PARAMS[formula_id]
    missing = [name for name in names if name not in params]
    extra = [name for name in params if name not in names]
    if missing or extra:
        parts = []
        if missing:
            parts.append("missing " + ", ".join(missing))
        if extra:
            parts.append("unexpected " + ", ".join(extra))
        raise DomainError(f"{formula_id}: bad parameter set: " + "; ".join(parts))
    return fn(**{name: params[name] for name in names})
