"""Truncated formal power series over exact rationals.

Every value carries its variable tag (z or v) and an explicit truncation
order. Binary operations require matching tags and truncate to the smaller
order of the two operands. The bridge between the tags is the substitution
z = v/(1+v+v^2), whose compositional inverse v(z) has Motzkin-number
coefficients.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

from deutsch_paths.common.errors import (
    ConsistencyError,
    InvalidSpecError,
    NonUnitError,
    TruncationError,
    VariableMismatchError,
)

Scalar = Union[int, Fraction]


class Var(enum.Enum):
    Z = "z"
    V = "v"


@dataclass(frozen=True)
class TruncatedSeries:
    """c_0 + c_1 x + ... + c_{N-1} x^{N-1} + O(x^N), with x = var."""

    var: Var
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) < 1:
            raise InvalidSpecError("truncation order must be at least 1")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    # ─── Constructors ─────────────────────────────────────────────────────────

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[Scalar], order: int, var: Var = Var.Z) -> TruncatedSeries:
        """Build a series of the given order, padding with zeros or cutting off."""
        if order < 1:
            raise InvalidSpecError(f"truncation order must be at least 1, got {order}")
        values = list(coeffs)[:order]
        values.extend([0] * (order - len(values)))
        return cls(var, tuple(values))

    @classmethod
    def constant(cls, c: Scalar, order: int, var: Var = Var.Z) -> TruncatedSeries:
        return cls.from_coefficients([c], order, var)

    @classmethod
    def monomial(cls, k: int, order: int, var: Var = Var.Z, c: Scalar = 1) -> TruncatedSeries:
        """c * x^k; vanishes entirely when k is at or beyond the order."""
        if k < 0:
            raise InvalidSpecError(f"monomial exponent must be nonnegative, got {k}")
        return cls.from_coefficients([0] * k + [c], order, var)

    @classmethod
    def variable(cls, order: int, var: Var = Var.Z) -> TruncatedSeries:
        return cls.monomial(1, order, var)

    # ─── Accessors ────────────────────────────────────────────────────────────

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def coefficient(self, n: int) -> Fraction:
        """Return c_n. Indices outside 0..order-1 are an error, never zero."""
        if n < 0 or n >= self.order:
            raise TruncationError(f"coefficient {n} requested from a series of order {self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> TruncatedSeries:
        if order < 1 or order > self.order:
            raise TruncationError(f"cannot truncate a series of order {self.order} to order {order}")
        return TruncatedSeries(self.var, self.coeffs[:order])

    def shift_down(self) -> TruncatedSeries:
        """Exact division by the variable; the constant term must be zero."""
        if self.coeffs[0] != 0:
            raise ConsistencyError(f"cannot divide by {self.var.value}: constant term is {self.coeffs[0]}")
        if self.order < 2:
            raise TruncationError("dividing an order-1 series by its variable leaves no coefficients")
        return TruncatedSeries(self.var, self.coeffs[1:])

    def to_counts(self) -> list[int]:
        """Coefficients as Python ints; they must be nonnegative integers."""
        counts = []
        for n, c in enumerate(self.coeffs):
            if c.denominator != 1 or c < 0:
                raise ConsistencyError(f"coefficient {n} is {c}, not a nonnegative integer")
            counts.append(int(c))
        return counts

    # ─── Arithmetic ───────────────────────────────────────────────────────────

    def _check_var(self, other: TruncatedSeries) -> None:
        if other.var is not self.var:
            raise VariableMismatchError(f"series in {self.var.value} combined with series in {other.var.value}")

    def _coerce(self, other) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            self._check_var(other)
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries.constant(other, self.order, self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        return TruncatedSeries(self.var, tuple(a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.var, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * n
        for i in range(n):
            if a[i] == 0:
                continue
            ai = a[i]
            for k in range(n - i):
                if b[k]:
                    out[i + k] += ai * b[k]
        return TruncatedSeries(self.var, tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        b0 = other.coeffs[0]
        if b0 == 0:
            raise NonUnitError(f"division by a series in {self.var.value} with zero constant term")
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        q: list[Fraction] = []
        for k in range(n):
            acc = a[k]
            for i in range(1, k + 1):
                if b[i]:
                    acc -= b[i] * q[k - i]
            q.append(acc / b0)
        return TruncatedSeries(self.var, tuple(q))

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def inverse(self) -> TruncatedSeries:
        return TruncatedSeries.constant(1, self.order, self.var) / self

    def __pow__(self, e: int) -> TruncatedSeries:
        if not isinstance(e, int):
            return NotImplemented
        base = self
        if e < 0:
            if self.coeffs[0] == 0:
                raise NonUnitError(f"negative power {e} of a series with zero constant term")
            base = self.inverse()
            e = -e
        result = TruncatedSeries.constant(1, self.order, self.var)
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def sqrt(self) -> TruncatedSeries:
        """The square root with constant term +1."""
        if self.coeffs[0] != 1:
            raise NonUnitError(f"square root needs constant term 1, got {self.coeffs[0]}")
        a = self.coeffs
        s = [Fraction(1)]
        for n in range(1, self.order):
            acc = a[n] - sum(s[k] * s[n - k] for k in range(1, n))
            s.append(acc / 2)
        return TruncatedSeries(self.var, tuple(s))

    def compose(self, g: TruncatedSeries) -> TruncatedSeries:
        """self(g), tagged with g's variable; g must have zero constant term."""
        if g.coeffs[0] != 0:
            raise NonUnitError(f"composition with a series whose constant term is {g.coeffs[0]}")
        n = min(self.order, g.order)
        inner = g.truncate(n)
        result = TruncatedSeries.constant(self.coeffs[n - 1], n, g.var)
        for k in range(n - 2, -1, -1):
            result = result * inner + self.coeffs[k]
        return result

    def __str__(self) -> str:
        x = self.var.value
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mono = x if k == 1 else f"{x}^{k}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        terms.append(f"O({x}^{self.order})")
        return " + ".join(terms)


# ─── The substitution z = v/(1+v+v^2) ────────────────────────────────────────

@lru_cache(maxsize=None)
def motzkin_v(order: int) -> TruncatedSeries:
    """v(z): the series with v(0) = 0 solving v = z(1 + v + v^2).

    Coefficients are filled one at a time: [z^n] of z(1 + v + v^2) only uses
    coefficients of v below n.
    """
    if order < 1:
        raise InvalidSpecError(f"truncation order must be at least 1, got {order}")
    v = [0] * order
    for n in range(1, order):
        v[n] = (1 if n == 1 else 0) + v[n - 1] + sum(v[a] * v[n - 1 - a] for a in range(1, n - 1))
    return TruncatedSeries(Var.Z, tuple(v))


def v_var(order: int) -> TruncatedSeries:
    """The variable v itself, truncated at the given order."""
    return TruncatedSeries.variable(order, Var.V)


@lru_cache(maxsize=None)
def zeta_v(order: int) -> TruncatedSeries:
    """z written in v: v/(1+v+v^2)."""
    v = v_var(order)
    return v / (1 + v + v * v)


def v_to_z(g: TruncatedSeries, order: int) -> TruncatedSeries:
    """Expand a series in v as a series in z, via v = v(z)."""
    if g.var is not Var.V:
        raise VariableMismatchError(f"v_to_z expects a series in v, got one in {g.var.value}")
    return g.compose(motzkin_v(order))


def z_to_v(f: TruncatedSeries, order: int) -> TruncatedSeries:
    """Expand a series in z as a series in v, via z = v/(1+v+v^2)."""
    if f.var is not Var.Z:
        raise VariableMismatchError(f"z_to_v expects a series in z, got one in {f.var.value}")
    return f.compose(zeta_v(order))
