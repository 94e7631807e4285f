"""One-dimensional quadrature engines.

Three rules cover everything the package integrates:

* ``tanh_sinh``: double-exponential rule on a finite interval, the workhorse
  for endpoint singularities. In ``from_endpoints`` mode the integrand is
  called with the distances to the two endpoints instead of the abscissa,
  so factors like (1 - s^2)^{-1/2} can be formed without cancellation.
* ``integrate_panels``: composite Gauss-Legendre over caller-chosen panel
  edges, for smooth integrands with known structure (Bessel oscillations).
* ``integrate_decaying``: unit Gauss-Legendre panels marched toward
  +infinity until the tail stops contributing.

Integrands must accept numpy arrays; every engine hands them the full node
set of a refinement level at once.
"""

from __future__ import annotations

import math

import numpy as np
from numpy.polynomial.legendre import leggauss

from .errors import DomainError, QuadratureError

__all__ = [
    "gauss_legendre",
    "panel_nodes",
    "integrate_panels",
    "tanh_sinh",
    "integrate_decaying",
]

_GL_CACHE: dict[int, tuple[np.ndarray, np.ndarray]] = {}

# Deepest double-exponential node, expressed as a bound on pi*sinh(u).
# e^{-690} is still normal, so endpoint distances stay representable and
# weight-times-value products cannot silently flush to zero.
_DE_EXPONENT_CAP = 690.0


def gauss_legendre(order: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights on [-1, 1], cached per order."""
    if not isinstance(order, (int, np.integer)) or order < 1:
        raise DomainError(f"gauss_legendre order must be a positive integer, got {order!r}")
    key = int(order)
    if key not in _GL_CACHE:
        _GL_CACHE[key] = leggauss(key)
    return _GL_CACHE[key]


def panel_nodes(edges, order: int = 10) -> tuple[np.ndarray, np.ndarray]:
    """Composite Gauss-Legendre nodes and weights over consecutive panels."""
    edges = np.asarray(edges, dtype=float)
    if edges.ndim != 1 or edges.size < 2:
        raise DomainError("panel_nodes requires at least two edges")
    if not np.all(np.diff(edges) > 0):
        raise DomainError("panel edges must be strictly increasing")
    x0, w0 = gauss_legendre(order)
    mid = 0.5 * (edges[1:] + edges[:-1])
    half = 0.5 * np.diff(edges)
    x = (mid[:, None] + half[:, None] * x0[None, :]).ravel()
    w = (half[:, None] * w0[None, :]).ravel()
    return x, w


def integrate_panels(f, edges, order: int = 10) -> float:
    x, w = panel_nodes(edges, order)
    vals = np.asarray(f(x), dtype=float)
    return math.fsum(w * vals)


def _de_weighted_values(f, u, mid, r, from_endpoints):
    """w(u) * f(node(u)) for the map x = mid + r tanh((pi/2) sinh u)."""
    v = 0.5 * math.pi * np.sinh(u)
    w = r * 0.5 * math.pi * np.cosh(u) / np.cosh(v) ** 2
    if from_endpoints:
        # x - a = r (1 + tanh v) and b - x = r (1 - tanh v), both exact
        da = 2.0 * r / (1.0 + np.exp(-2.0 * v))
        db = 2.0 * r / (1.0 + np.exp(2.0 * v))
        vals = np.asarray(f(da, db), dtype=float)
    else:
        vals = np.asarray(f(mid + r * np.tanh(v)), dtype=float)
    return w * vals


def tanh_sinh(f, a: float, b: float, *, rel_tol: float = 1e-13,
              max_level: int = 12, from_endpoints: bool = False,
              boundary_rel: float = 1e-6) -> float:
    """Double-exponential quadrature of f over (a, b).

    With ``from_endpoints=True`` the integrand is called as ``f(da, db)``
    where ``da = x - a`` and ``db = b - x``; this is the form to use when
    either endpoint is singular. Raises QuadratureError when refinement
    stalls, when the integrand is non-finite at a node, or when the
    transformed integrand has not decayed at the truncation boundary (the
    signature of a non-integrable singularity).
    """
    if not (b > a) or not (math.isfinite(a) and math.isfinite(b)):
        raise DomainError(f"tanh_sinh requires finite a < b, got ({a}, {b})")
    r = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    u_max = math.asinh(_DE_EXPONENT_CAP / math.pi)

    def level_nodes(h, new_only):
        k_max = int(math.floor(u_max / h))
        ks = np.arange(-k_max, k_max + 1)
        if new_only:
            ks = ks[ks % 2 != 0]
        return ks * h

    h = 1.0
    g = _de_weighted_values(f, level_nodes(h, False), mid, r, from_endpoints)
    if not np.all(np.isfinite(g)):
        raise QuadratureError("integrand is non-finite under the double-exponential map")
    total = math.fsum(g)
    estimate = h * total
    edge = max(abs(g[0]), abs(g[-1]))
    for level in range(1, max_level + 1):
        h *= 0.5
        g = _de_weighted_values(f, level_nodes(h, True), mid, r, from_endpoints)
        if not np.all(np.isfinite(g)):
            raise QuadratureError("integrand is non-finite under the double-exponential map")
        total += math.fsum(g)
        new_estimate = h * total
        edge = max(edge, abs(g[0]), abs(g[-1]))
        diff = abs(new_estimate - estimate)
        estimate = new_estimate
        if level >= 2 and diff <= rel_tol * abs(estimate) + 1e-300:
            if h * edge > boundary_rel * abs(estimate) + 1e-300:
                raise QuadratureError(
                    "transformed integrand has not decayed at the truncation "
                    "boundary; the integral is divergent or too singular",
                    best=estimate, error_bound=h * edge)
            return estimate
    raise QuadratureError(
        f"tanh_sinh failed to converge within {max_level} refinements",
        best=estimate, error_bound=diff)


def integrate_decaying(f, a: float, *, order: int = 16, panel_width: float = 1.0,
                       tail_rel: float = 1e-15, max_panels: int = 2000) -> float:
    """March unit panels from a toward +infinity until the tail is spent.

    Stops after two consecutive panels each contribute below tail_rel of
    the accumulated value; raises QuadratureError when the budget runs out
    first (slow decay or divergence).
    """
    if panel_width <= 0:
        raise DomainError("panel_width must be positive")
    x0, w0 = gauss_legendre(order)
    acc = 0.0
    quiet = 0
    for k in range(max_panels):
        lo = a + k * panel_width
        x = lo + 0.5 * panel_width * (x0 + 1.0)
        vals = np.asarray(f(x), dtype=float)
        if not np.all(np.isfinite(vals)):
            raise QuadratureError(f"integrand is non-finite on panel [{lo}, {lo + panel_width}]")
        contrib = 0.5 * panel_width * float(np.dot(w0, vals))
        acc += contrib
        if abs(contrib) <= tail_rel * (abs(acc) + 1e-300):
            quiet += 1
            if quiet >= 2:
                return acc
        else:
            quiet = 0
    raise QuadratureError(
        f"tail had not decayed after {max_panels} panels", best=acc)
