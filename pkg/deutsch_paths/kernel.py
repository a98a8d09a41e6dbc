"""Kernel-method generating functions for paths with no upper boundary.

With F(z,u) = sum_j f_j(z) u^j, the functional equation has kernel
z(u-1)^2 + (u-1)(z-1) + z = z(u-1-r1)(u-1-r2). Under z = v/(1+v+v^2) the roots
are r1 = 1/v and r2 = v. r1 is never materialized: every occurrence is
rewritten through 1/(z(1+r1)) = (1+v+v^2)/(1+v).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from deutsch_paths.common.config import Config
from deutsch_paths.common.errors import ConsistencyError, InvalidSpecError
from deutsch_paths.polys import BivarPoly
from deutsch_paths.series import TruncatedSeries, Var, motzkin_v, v_to_z, v_var

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KernelRoots:
    """The small kernel root r2(z), z*r2^2 + (z-1)*r2 + z = 0."""

    r2: TruncatedSeries

    @property
    def order(self) -> int:
        return self.r2.order

    def residual(self) -> TruncatedSeries:
        """z*r2^2 + (z-1)*r2 + z; zero up to the truncation order."""
        z = TruncatedSeries.variable(self.order, Var.Z)
        return z * self.r2 * self.r2 + (z - 1) * self.r2 + z


def check_levels(**levels: int) -> None:
    for name, value in levels.items():
        if value < 0:
            raise InvalidSpecError(f"{name} must be nonnegative, got {value}")


def roots_r2(order: int) -> KernelRoots:
    """r2 = (1 - z - sqrt(1-2z-3z^2)) / (2z), cross-checked against v(z)."""
    if order < 2:
        raise InvalidSpecError(f"roots_r2 needs order at least 2, got {order}")
    # one extra coefficient is consumed by the division by z
    z = TruncatedSeries.variable(order + 1, Var.Z)
    disc = 1 - 2 * z - 3 * z * z
    numerator = 1 - z - disc.sqrt()
    r2 = (numerator / 2).shift_down()
    if r2 != motzkin_v(order):
        raise ConsistencyError("square-root formula for r2 disagrees with the fixed point v(z)")
    return KernelRoots(r2=r2)


def kernel_identity(t: int) -> bool:
    """Check u^t(1-u) + v(1+v)^t = (u-1-v) * (-v sum_k (1+v)^(t-1-k) u^k - u^t) exactly."""
    check_levels(t=t)
    u, v = BivarPoly.u(), BivarPoly.v()
    left = u ** t * (1 - u) + v * (1 + v) ** t
    quotient = -(u ** t)
    for k in range(t):
        quotient = quotient - v * (1 + v) ** (t - 1 - k) * u ** k
    right = (u - 1 - v) * quotient
    passed = left == right
    _logger.debug("kernel_identity t=%d: %s", t, "pass" if passed else "FAIL")
    return passed


def F_total(t: int, order: int) -> TruncatedSeries:
    """F(z,1) = (1+r2)^t r2 / z, paths from t to any end level."""
    check_levels(t=t)
    r2 = roots_r2(order + 1).r2
    zF = (1 + r2) ** t * r2
    return zF.shift_down()


def f_unbounded_sum(t: int, j: int, order: int) -> TruncatedSeries:
    """f_j(z) = [u^j] of the kernel-method product, evaluated term by term.

    With 1/(z(1+r1)^(l+1)) = (1+v+v^2) v^l / (1+v)^(l+1) the coefficient of
    u^j is a finite sum over the polynomial part's u^k, k <= min(j, t-1), plus
    the u^t term when t <= j.
    """
    check_levels(t=t, j=j)
    n_v = Config.v_order(order)
    v = v_var(n_v)
    q = 1 + v + v * v

    def tail(ell: int) -> TruncatedSeries:
        return q * v ** ell * (1 + v) ** (-(ell + 1))

    total = TruncatedSeries.constant(0, n_v, Var.V)
    for k in range(min(j, t - 1) + 1):
        total = total + v * (1 + v) ** (t - 1 - k) * tail(j - k)
    if t <= j:
        total = total + tail(j - t)
    return v_to_z(total, order)


def closed_unbounded_v(t: int, j: int, n_v: int) -> TruncatedSeries:
    """f_j as a series in v; phi_limit in strip.py reuses it."""
    v = v_var(n_v)
    q = 1 + v + v * v
    if j < t:
        return (1 + v) ** (t - j - 2) * (1 - v ** (j + 1)) * v * q / (1 - v)
    return v ** (j - t) * (1 - v ** (t + 2)) * q / ((1 - v) * (1 + v) ** (j - t + 2))


def f_unbounded_closed(t: int, j: int, order: int) -> TruncatedSeries:
    """Simplified closed form of f_j(z), split at j < t / j >= t."""
    check_levels(t=t, j=j)
    return v_to_z(closed_unbounded_v(t, j, Config.v_order(order)), order)


def special_case_t0(j: int, order: int) -> TruncatedSeries:
    """t = 0: f_j = (1+v+v^2) v^j / (1+v)^(j+1)."""
    check_levels(j=j)
    v = v_var(Config.v_order(order))
    return v_to_z((1 + v + v * v) * v ** j * (1 + v) ** (-(j + 1)), order)


def special_case_j0(t: int, order: int) -> TruncatedSeries:
    """j = 0, t >= 1: f_0 = v(1+v+v^2)(1+v)^(t-2), read as a series even at t = 1."""
    if t < 1:
        raise InvalidSpecError(f"the j=0 special case needs t >= 1, got {t}")
    v = v_var(Config.v_order(order))
    return v_to_z(v * (1 + v + v * v) * (1 + v) ** (t - 2), order)
