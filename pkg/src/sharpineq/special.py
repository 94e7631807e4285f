"""Self-contained special-function kernel.

Everything downstream (the constants catalog, the reduction kernels, the
radial transforms) evaluates Gamma-function expressions as ``exp(sum of
log_gamma terms)``, so ``log_gamma`` is the accuracy anchor of the package.
The implementations here use only elementary operations:

* ``log_gamma`` / ``digamma``: Stirling's asymptotic series after an upward
  recurrence shift to x >= 12, evaluated in extended precision where the
  platform provides it.
* ``bessel_j``: ascending series for small argument, Hankel's asymptotic
  expansion for large argument, and Miller's downward recurrence (normalized
  by the Neumann sum) for the band where the ascending series would lose too
  many digits to cancellation.

All functions accept scalars or numpy arrays in their numeric argument and
return matching shapes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

__all__ = [
    "AccuracyBudget",
    "log_gamma",
    "gamma",
    "digamma",
    "bessel_j",
    "sphere_area",
]

# Extended-precision scalar type for the Stirling core. On x86-64 this is the
# 80-bit format; where longdouble == double the routines degrade gracefully
# to ~1e-13 relative instead of ~1e-15.
_WIDE = np.longdouble

_LN_SQRT_2PI = 0.9189385332046727417803297364056176398

# B_{2k} / (2k (2k-1)), k = 1..8: the Stirling series for ln Gamma.
_LGAMMA_COEFFS = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
)

# B_{2k} / (2k), k = 1..7: the Stirling series for digamma.
_DIGAMMA_COEFFS = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
)

_STIRLING_CUT = 12.0
_MAX_EXP_ARG = 709.0  # exp overflows just above this

_LGAMMA_COEFFS_W = tuple(_WIDE(c) for c in _LGAMMA_COEFFS)
_DIGAMMA_COEFFS_W = tuple(_WIDE(c) for c in _DIGAMMA_COEFFS)
_LN_SQRT_2PI_W = _WIDE(_LN_SQRT_2PI)


@dataclass(frozen=True)
class AccuracyBudget:
    """Caps for series evaluation: target relative error and term count.

    target_rel_err must lie in (0, 1e-6]; max_terms must be at least 16.
    """

    target_rel_err: float = 1e-13
    max_terms: int = 512

    def __post_init__(self):
        if not (0.0 < self.target_rel_err <= 1e-6):
            raise DomainError(
                f"target_rel_err must be in (0, 1e-6], got {self.target_rel_err}")
        if self.max_terms < 16:
            raise DomainError(f"max_terms must be >= 16, got {self.max_terms}")


_DEFAULT_BUDGET = AccuracyBudget()


def _as_positive_array(x, name: str):
    arr = np.asarray(x, dtype=float)
    if arr.size and not np.all(np.isfinite(arr) & (arr > 0.0)):
        raise DomainError(f"{name} requires finite positive argument")
    return arr


def _maybe_scalar(out: np.ndarray, like) -> float | np.ndarray:
    if np.ndim(like) == 0:
        return float(out)
    return out


def _log_gamma_scalar(x: float) -> float:
    y = _WIDE(x)
    prod = _WIDE(1.0)
    while y < _STIRLING_CUT:
        prod *= y
        y += 1
    z = 1.0 / (y * y)
    series = _WIDE(0.0)
    for c in reversed(_LGAMMA_COEFFS_W):
        series = series * z + c
    return float((y - 0.5) * np.log(y) - y + _LN_SQRT_2PI_W
                 + series / y - np.log(prod))


def _digamma_scalar(x: float) -> float:
    y = _WIDE(x)
    shift = _WIDE(0.0)
    while y < _STIRLING_CUT:
        shift += 1.0 / y
        y += 1
    z = 1.0 / (y * y)
    series = _WIDE(0.0)
    for c in reversed(_DIGAMMA_COEFFS_W):
        series = series * z + c
    return float(np.log(y) - 0.5 / y - series * z - shift)


def log_gamma(x):
    """Natural log of Gamma(x) for real x > 0.

    Upward recurrence to x >= 12, then the Stirling series; the dominant
    (x - 1/2) ln x term is formed in extended precision so the result is
    accurate to a few ulps of ln Gamma across [1e-3, 1e4].
    """
    if np.ndim(x) == 0:
        xf = float(x)
        if not (math.isfinite(xf) and xf > 0.0):
            raise DomainError("log_gamma requires finite positive argument")
        return _log_gamma_scalar(xf)
    arr = _as_positive_array(x, "log_gamma")
    y = arr.astype(_WIDE).ravel()
    prod = np.ones_like(y)
    mask = y < _STIRLING_CUT
    while mask.any():
        prod[mask] *= y[mask]
        y[mask] += 1
        mask = y < _STIRLING_CUT
    z = 1.0 / (y * y)
    series = np.zeros_like(y)
    for c in reversed(_LGAMMA_COEFFS):
        series = series * z + _WIDE(c)
    series /= y
    out = (y - 0.5) * np.log(y) - y + _WIDE(_LN_SQRT_2PI) + series - np.log(prod)
    out = out.astype(float).reshape(arr.shape)
    return _maybe_scalar(out, x)


def gamma(x):
    """Gamma(x) = exp(log_gamma(x)); overflow raises rather than saturating."""
    lg = np.asarray(log_gamma(x), dtype=float)
    if np.any(lg > _MAX_EXP_ARG):
        raise OverflowError(
            "gamma overflows double precision; use log_gamma instead")
    out = np.exp(lg)
    return _maybe_scalar(out, x)


def digamma(x):
    """Digamma (logarithmic derivative of Gamma) for real x > 0."""
    if np.ndim(x) == 0:
        xf = float(x)
        if not (math.isfinite(xf) and xf > 0.0):
            raise DomainError("digamma requires finite positive argument")
        return _digamma_scalar(xf)
    arr = _as_positive_array(x, "digamma")
    y = arr.astype(_WIDE).ravel()
    shift = np.zeros_like(y)
    mask = y < _STIRLING_CUT
    while mask.any():
        shift[mask] += 1.0 / y[mask]
        y[mask] += 1
        mask = y < _STIRLING_CUT
    z = 1.0 / (y * y)
    series = np.zeros_like(y)
    for c in reversed(_DIGAMMA_COEFFS):
        series = series * z + _WIDE(c)
    out = np.log(y) - 0.5 / y - series * z - shift
    out = out.astype(float).reshape(arr.shape)
    return _maybe_scalar(out, x)


def sphere_area(n: int) -> float:
    """Surface measure of the unit sphere in R^n: 2 pi^{n/2} / Gamma(n/2)."""
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise DomainError(f"sphere_area requires an integer dimension >= 1, got {n!r}")
    return float(np.exp(math.log(2.0) + 0.5 * n * math.log(math.pi)
                        - log_gamma(0.5 * n)))


# ---------------------------------------------------------------------------
# Bessel J of real nonnegative order
# ---------------------------------------------------------------------------

def _series_j(nu: float, x: np.ndarray, budget: AccuracyBudget) -> np.ndarray:
    """Ascending series with compensated summation (cancellation-safe inputs)."""
    out = np.zeros_like(x)
    if x.size == 0:
        return out
    lead = np.exp(nu * np.log(0.5 * x) - log_gamma(nu + 1.0)) if nu > 0 \
        else np.exp(-log_gamma(1.0)) * np.ones_like(x)
    q = -0.25 * x * x
    term = lead.copy()
    acc = term.copy()
    comp = np.zeros_like(x)
    for k in range(1, budget.max_terms):
        term = term * q / (k * (nu + k))
        # Kahan step
        yk = term - comp
        t = acc + yk
        comp = (t - acc) - yk
        acc = t
        if np.all(np.abs(term) <= 1e-18 * (np.abs(acc) + np.abs(lead))):
            break
    return acc


def _asymptotic_j(nu: float, x: np.ndarray,
                  budget: AccuracyBudget) -> tuple[np.ndarray, np.ndarray]:
    """Hankel's expansion J ~ sqrt(2/(pi x)) (P cos chi - Q sin chi).

    Returns (values, quality) where quality is the smallest retained term
    relative to the unit envelope; elements with poor quality should be
    recomputed by another branch.
    """
    mu = 4.0 * nu * nu
    inv_x = 1.0 / x
    # a_{k+1} = a_k (mu - (2k+1)^2) / (8 (k+1)); term_k = a_k / x^k
    p_acc = np.ones_like(x)
    q_acc = np.zeros_like(x)
    term = np.ones_like(x)
    prev_mag = np.full_like(x, np.inf)
    min_mag = np.full_like(x, np.inf)
    active = np.ones(x.shape, dtype=bool)
    for k in range(budget.max_terms):
        factor = (mu - (2 * k + 1) ** 2) / (8.0 * (k + 1))
        term = np.where(active, term * factor * inv_x, term)
        mag = np.abs(term)
        growing = mag >= prev_mag
        # freeze elements whose terms stopped decreasing
        newly_done = active & growing & (k >= 2)
        active &= ~newly_done
        min_mag = np.where(active, np.minimum(min_mag, mag), min_mag)
        contrib = np.where(active, term, 0.0)
        if k % 2 == 0:  # odd overall index: Q series (a_1/x, a_3/x^3, ...)
            sign = 1.0 if (k // 2) % 2 == 0 else -1.0
            q_acc = q_acc + sign * contrib
        else:  # even overall index >= 2: P series
            sign = -1.0 if (k // 2) % 2 == 0 else 1.0
            p_acc = p_acc + sign * contrib
        prev_mag = mag
        converged = mag <= 1e-18
        active &= ~converged
        if not active.any():
            break
    chi = x - (0.5 * nu + 0.25) * math.pi
    env = np.sqrt(2.0 / (math.pi * x))
    vals = env * (p_acc * np.cos(chi) - q_acc * np.sin(chi))
    quality = np.where(np.isfinite(min_mag), min_mag, 0.0)
    return vals, quality


def _miller_j(nu: float, x: np.ndarray) -> np.ndarray:
    """Miller's downward recurrence, vectorized over x (scalar order).

    Normalization: (x/2)^mu = sum_k (mu + 2k) Gamma(mu + k)/k! J_{mu+2k}(x)
    for fractional part mu in (0, 1); for integer order the classical
    1 = J_0 + 2 sum J_{2k} is the mu -> 0 limit handled separately.
    """
    out = np.zeros_like(x)
    if x.size == 0:
        return out
    m0 = int(math.floor(nu))
    mu = nu - m0
    integer_order = mu < 1e-14
    x_max = float(np.max(x))
    start = m0 + int(math.ceil(1.2 * x_max)) + 45
    if start % 2:
        start += 1  # even offset so the normalization sum lands on mu + 2k

    # normalization coefficients c_k for k = 0..start//2
    n_coeff = start // 2 + 1
    coeff = np.empty(n_coeff)
    if integer_order:
        coeff[0] = 1.0
        coeff[1:] = 2.0
    else:
        coeff[0] = math.exp(log_gamma(mu + 1.0))
        for k in range(1, n_coeff):
            coeff[k] = coeff[k - 1] * (mu + 2 * k) * (mu + k - 1) \
                / ((mu + 2 * k - 2) * k)

    jp = np.zeros_like(x)          # J at order q+1 (scaled)
    jc = np.full_like(x, 1e-305)   # J at order q (scaled)
    norm = np.zeros_like(x)
    target = np.zeros_like(x)
    safe_x = np.where(x > 0, x, 1.0)
    for q_off in range(start, -1, -1):
        q = mu + q_off
        if q_off % 2 == 0:
            norm = norm + coeff[q_off // 2] * jc
        if q_off == m0:
            target = jc.copy()
        jm = (2.0 * q / safe_x) * jc - jp
        jp, jc = jc, jm
        big = np.abs(jc) > 1e250
        if big.any():
            scale = np.where(big, 1e-250, 1.0)
            jp *= scale
            jc *= scale
            norm *= scale
            target *= scale
    if integer_order:
        denom = norm
        out = np.where(denom != 0, target / np.where(denom != 0, denom, 1.0), 0.0)
    else:
        out = target * np.exp(mu * np.log(0.5 * safe_x)) \
            / np.where(norm != 0, norm, 1.0)
    return np.where(x > 0, out, 1.0 if nu == 0 else 0.0)


def _series_is_safe(nu: float, x: np.ndarray) -> np.ndarray:
    """Predict whether the ascending series keeps cancellation under ~1e5.

    The largest series term sits near k* = (-nu + sqrt(nu^2 + x^2)) / 2; the
    achievable absolute error is a few ulps of that term, so the ratio of
    max term to the result scale bounds the digits lost.
    """
    with np.errstate(divide="ignore"):
        lx = np.log(np.where(x > 0, 0.5 * x, 1.0))
    k_star = 0.5 * (-nu + np.hypot(nu, x))
    ln_max = (nu + 2.0 * k_star) * lx \
        - log_gamma(k_star + 1.0) - log_gamma(nu + k_star + 1.0)
    ln_first = nu * lx - log_gamma(nu + 1.0)
    ln_env = 0.5 * np.log(2.0 / (math.pi * np.maximum(x, nu + 1.0)))
    ln_scale = np.where(x < nu + 1.0, ln_first, ln_env)
    return (ln_max - ln_scale) < math.log(1e5)


def bessel_j(order: float, x, budget: AccuracyBudget | None = None):
    """Bessel function of the first kind, real order >= 0, argument x >= 0."""
    if budget is None:
        budget = _DEFAULT_BUDGET
    nu = float(order)
    if not (math.isfinite(nu) and nu >= 0.0):
        raise DomainError(f"bessel_j requires order >= 0, got {order!r}")
    arr = np.asarray(x, dtype=float)
    if arr.size and not np.all(np.isfinite(arr) & (arr >= 0.0)):
        raise DomainError("bessel_j requires finite argument >= 0")
    flat = arr.ravel()
    out = np.empty_like(flat)

    zero = flat == 0.0
    out[zero] = 1.0 if nu == 0.0 else 0.0

    crossover = 12.0 + 2.0 * nu
    pos = ~zero
    asym_mask = pos & (flat >= crossover)
    small_mask = pos & ~asym_mask

    need_miller = np.zeros(flat.shape, dtype=bool)
    if asym_mask.any():
        vals, quality = _asymptotic_j(nu, flat[asym_mask], budget)
        ok = quality <= 1e-12
        idx = np.flatnonzero(asym_mask)
        out[idx[ok]] = vals[ok]
        need_miller[idx[~ok]] = True
    if small_mask.any():
        xs = flat[small_mask]
        safe = _series_is_safe(nu, xs)
        idx = np.flatnonzero(small_mask)
        if safe.any():
            out[idx[safe]] = _series_j(nu, xs[safe], budget)
        need_miller[idx[~safe]] = True
    if need_miller.any():
        out[need_miller] = _miller_j(nu, flat[need_miller])

    out = out.reshape(arr.shape)
    return _maybe_scalar(out, x)
