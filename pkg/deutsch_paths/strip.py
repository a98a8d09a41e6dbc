"""Paths in a strip 0..m-1: the banded linear system and its closed forms.

The generating functions phi_0..phi_{m-1} of paths from t solve A phi = e_t,
where A has 1 on the diagonal, -z on the subdiagonal and -z everywhere above
the diagonal. The module solves the system two independent ways (Gaussian
elimination over series, and exact determinants for Cramer's rule) and
evaluates the closed forms in v for comparison.

Two-case formulas use the j >= t branch when j == t.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

from deutsch_paths.common.config import Config
from deutsch_paths.common.errors import ConsistencyError, InvalidSpecError
from deutsch_paths.kernel import check_levels, closed_unbounded_v
from deutsch_paths.polys import Poly
from deutsch_paths.series import TruncatedSeries, Var, v_to_z, v_var

_logger = logging.getLogger(__name__)


def _check_strip(m: int, **levels: int) -> None:
    if m < 1:
        raise InvalidSpecError(f"strip size m must be at least 1, got {m}")
    for name, value in levels.items():
        if value < 0 or value > m - 1:
            raise InvalidSpecError(f"{name}={value} outside the strip 0..{m - 1}")


# ─── The linear system ───────────────────────────────────────────────────────

@dataclass(frozen=True)
class PolyMatrix:
    """Square matrix of integer polynomials in z; rows of Poly entries."""

    rows: Tuple[Tuple[Poly, ...], ...]

    @property
    def m(self) -> int:
        return len(self.rows)

    def entry(self, i: int, k: int) -> Poly:
        return self.rows[i][k]

    def replace_column(self, j: int, t: int) -> PolyMatrix:
        """Column j replaced by the unit vector e_t (the Cramer numerator)."""
        _check_strip(self.m, j=j, t=t)
        one, zero = Poly.constant(1), Poly()
        return PolyMatrix(tuple(
            tuple((one if i == t else zero) if k == j else e for k, e in enumerate(row))
            for i, row in enumerate(self.rows)
        ))

    def __str__(self) -> str:
        return "\n".join("(" + ", ".join(str(e) for e in row) + ")" for row in self.rows)


def build_system(m: int, t: int) -> Tuple[PolyMatrix, int]:
    """The m x m system matrix and the row index of the unit right-hand side."""
    _check_strip(m, t=t)
    one, minus_z, zero = Poly.constant(1), -Poly.z(), Poly()

    def _entry(i: int, k: int) -> Poly:
        if i == k:
            return one
        if k == i - 1 or k > i:
            return minus_z
        return zero

    rows = tuple(tuple(_entry(i, k) for k in range(m)) for i in range(m))
    return PolyMatrix(rows), t


@dataclass(frozen=True)
class StripSolution:
    """phi[j]: paths from t to j inside the strip, as series in z."""

    phi: Tuple[TruncatedSeries, ...]
    t: int
    m: int
    order: int


def solve_series(m: int, t: int, order: int) -> StripSolution:
    """Gaussian elimination over truncated series in z.

    Every pivot is 1 + O(z), so no row exchanges are needed; a non-unit pivot
    means the system was built wrong.
    """
    mat, rhs_row = build_system(m, t)
    a: List[List[TruncatedSeries]] = [
        [e.to_series(order) for e in row] for row in mat.rows
    ]
    b = [TruncatedSeries.constant(1 if i == rhs_row else 0, order) for i in range(m)]

    for col in range(m):
        pivot = a[col][col]
        if pivot.coefficient(0) == 0:
            raise ConsistencyError(f"pivot {col} of the strip system has zero constant term")
        for row in range(col + 1, m):
            if all(c == 0 for c in a[row][col].coeffs):
                continue
            factor = a[row][col] / pivot
            for k in range(col, m):
                a[row][k] = a[row][k] - factor * a[col][k]
            b[row] = b[row] - factor * b[col]

    phi: List[Optional[TruncatedSeries]] = [None] * m
    for row in range(m - 1, -1, -1):
        acc = b[row]
        for k in range(row + 1, m):
            acc = acc - a[row][k] * phi[k]
        phi[row] = acc / a[row][row]

    for j, series in enumerate(phi):
        series.to_counts()
        if series.coefficient(0) != (1 if j == t else 0):
            raise ConsistencyError(f"phi_{j} has constant term {series.coefficient(0)} with t={t}")
    _logger.debug("solve_series m=%d t=%d order=%d", m, t, order)
    return StripSolution(phi=tuple(phi), t=t, m=m, order=order)


# ─── Determinants ────────────────────────────────────────────────────────────

def det_poly(mat: PolyMatrix) -> Poly:
    """Exact determinant by fraction-free (Bareiss) elimination over Z[z]."""
    n = mat.m
    if n == 1:
        return mat.entry(0, 0)
    a = [list(row) for row in mat.rows]
    prev_pivot = Poly.constant(1)
    sign = 1
    for k in range(n - 1):
        pivot_row = k
        while a[pivot_row][k].is_zero():
            pivot_row += 1
            if pivot_row == n:
                return Poly()
        if pivot_row != k:
            a[pivot_row], a[k] = a[k], a[pivot_row]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (pivot * a[i][j] - a[i][k] * a[k][j]).exact_div(prev_pivot)
            a[i][k] = Poly()
        prev_pivot = pivot
    return sign * a[n - 1][n - 1]


def det_system_poly(m: int) -> Poly:
    """D_m as an exact polynomial in z."""
    mat, _ = build_system(m, 0)
    return det_poly(mat)


def det_replaced_poly(m: int, t: int, j: int) -> Poly:
    """Exact determinant of the system matrix with column j replaced by e_t."""
    mat, _ = build_system(m, t)
    return det_poly(mat.replace_column(j, t))


def det_Dm_closed(m: int, order: int) -> TruncatedSeries:
    """D_m = (1+v)^(m-1) / (1+v+v^2)^m * (1-v^(m+2)) / (1-v), as a series in v."""
    _check_strip(m)
    v = v_var(order)
    q = 1 + v + v * v
    return (1 + v) ** (m - 1) * q ** (-m) * (1 - v ** (m + 2)) / (1 - v)


def det_recursion_check(
    m_max: int,
    order: int = Config.det_order,
    dm: Callable[[int, int], TruncatedSeries] = det_Dm_closed,
) -> bool:
    """(1+v+v^2)^2 D_{m+2} - (1+v+v^2)(1+v)^2 D_{m+1} + v(1+v)^2 D_m = 0 for m <= m_max-2.

    `dm` supplies D_m; swapping in a perturbed one is the negative control.
    """
    if m_max < 1:
        raise InvalidSpecError(f"m_max must be at least 1, got {m_max}")
    v = v_var(order)
    q = 1 + v + v * v
    p2 = (1 + v) ** 2
    zero = TruncatedSeries.constant(0, order, Var.V)
    for m in range(1, m_max - 1):
        residual = q * q * dm(m + 2, order) - q * p2 * dm(m + 1, order) + v * p2 * dm(m, order)
        if residual != zero:
            _logger.info("determinant recursion fails at m=%d", m)
            return False
    return True


def det_D_replaced(m: int, t: int, j: int, order: int) -> TruncatedSeries:
    """D(m;t,j): the Cramer numerator in closed form, as a series in v."""
    _check_strip(m, t=t, j=j)
    v = v_var(order)
    q = 1 + v + v * v
    denom = (1 - v) ** 2 * q ** (m - 1)
    if j < t:
        num = (1 + v) ** (t - j - 3 + m) * (1 - v ** (j + 1)) * v * (1 - v ** (m - t))
        return num / denom
    num = v ** (j - t) * (1 - v ** (t + 2)) * (1 - v ** (1 - j + m))
    return num / (denom * (1 + v) ** (j - t + 3 - m))


# ─── Generating functions ────────────────────────────────────────────────────

def _phi_closed_v(m: int, t: int, j: int, n_v: int) -> TruncatedSeries:
    v = v_var(n_v)
    q = 1 + v + v * v
    if j < t:
        return ((1 + v) ** (t - j - 2) * (1 - v ** (j + 1)) * v * (1 - v ** (m - t)) * q
                / ((1 - v) * (1 - v ** (m + 2))))
    return (v ** (j - t) * (1 - v ** (t + 2)) * (1 - v ** (1 - j + m)) * q
            / ((1 - v) * (1 + v) ** (j - t + 2) * (1 - v ** (m + 2))))


def phi_closed(m: int, t: int, j: int, order: int) -> TruncatedSeries:
    """Paths from t to j in the strip 0..m-1, from the closed form in v."""
    _check_strip(m, t=t, j=j)
    return v_to_z(_phi_closed_v(m, t, j, Config.v_order(order)), order)


def phi_cramer(m: int, t: int, j: int, order: int) -> TruncatedSeries:
    """D(m;t,j) / D_m mapped to z."""
    _check_strip(m, t=t, j=j)
    n_v = Config.v_order(order)
    return v_to_z(det_D_replaced(m, t, j, n_v) / det_Dm_closed(m, n_v), order)


def phi_limit(t: int, j: int, order: int) -> TruncatedSeries:
    """The m -> infinity limit of phi_closed: no upper boundary."""
    check_levels(t=t, j=j)
    return v_to_z(closed_unbounded_v(t, j, Config.v_order(order)), order)


def phi_shifted(h: Optional[int], t: Optional[int], i: int, order: int) -> TruncatedSeries:
    """Paths from 0 to i between lower boundary -t and upper boundary h.

    h=None or t=None lets that boundary go to infinity; every factor carrying
    the missing bound drops out. For finite bounds this is phi_closed with
    m = h+t+1 and j = i+t.
    """
    if h is not None and h < 0:
        raise InvalidSpecError(f"upper boundary h must be nonnegative, got {h}")
    if t is not None and t < 0:
        raise InvalidSpecError(f"lower depth t must be nonnegative, got {t}")
    if (t is not None and i < -t) or (h is not None and i > h):
        raise InvalidSpecError(f"end level i={i} outside [{'-inf' if t is None else -t}, {'inf' if h is None else h}]")

    n_v = Config.v_order(order)
    v = v_var(n_v)
    q = 1 + v + v * v
    one = TruncatedSeries.constant(1, n_v, Var.V)

    def bound(exponent: Optional[int]) -> TruncatedSeries:
        return one if exponent is None else 1 - v ** exponent

    both = None if h is None or t is None else h + t + 3
    if i < 0:
        lower = None if t is None else i + t + 1
        upper = None if h is None else h + 1
        gf = (1 + v) ** (-i - 2) * bound(lower) * v * bound(upper) * q / ((1 - v) * bound(both))
    else:
        lower = None if t is None else t + 2
        upper = None if h is None else 2 - i + h
        gf = v ** i * bound(lower) * bound(upper) * q / ((1 - v) * (1 + v) ** (i + 2) * bound(both))
    return v_to_z(gf, order)
