"""Exact integer polynomials: univariate in z, and bivariate in (u, v)."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Tuple

from deutsch_paths.common.errors import ConsistencyError
from deutsch_paths.series import TruncatedSeries, Var


def _strip(coeffs: Iterable[int]) -> tuple:
    values = [int(c) for c in coeffs]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


@dataclass(frozen=True)
class Poly:
    """Polynomial in z with integer coefficients, lowest degree first.

    The zero polynomial has no coefficients.
    """

    coeffs: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @classmethod
    def constant(cls, c: int) -> Poly:
        return cls((c,))

    @classmethod
    def z(cls) -> Poly:
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return Poly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Poly(tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

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
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for k, b in enumerate(other.coeffs):
                    out[i + k] += a * b
        return Poly(tuple(out))

    __rmul__ = __mul__

    def exact_div(self, d: Poly) -> Poly:
        """Quotient self / d, which must be a polynomial with integer coefficients."""
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return Poly()
        if self.degree < d.degree:
            raise ConsistencyError(f"{self} is not divisible by {d}")
        lc = d.coeffs[-1]
        rem = list(self.coeffs)
        q = [0] * (self.degree - d.degree + 1)
        for k in range(len(q) - 1, -1, -1):
            c = rem[k + d.degree]
            if c % lc:
                raise ConsistencyError(f"{self} is not divisible by {d} over the integers")
            qc = c // lc
            q[k] = qc
            if qc:
                for i, di in enumerate(d.coeffs):
                    rem[k + i] -= qc * di
        if any(rem):
            raise ConsistencyError(f"{self} is not divisible by {d}")
        return Poly(tuple(q))

    def to_series(self, order: int, var: Var = Var.Z) -> TruncatedSeries:
        return TruncatedSeries.from_coefficients(self.coeffs, order, var)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")


# ─── Bivariate polynomials in (u, v) ─────────────────────────────────────────

Exponent = Tuple[int, int]


@dataclass(frozen=True)
class BivarPoly:
    """Exact polynomial in (u, v); terms are ((deg_u, deg_v), coefficient) pairs.

    Terms are kept sorted and never carry a zero coefficient, so equality of
    values is equality of polynomials.
    """

    terms: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "terms", self._normalize(dict(self.terms)))

    @staticmethod
    def _normalize(terms: Mapping[Exponent, int]) -> tuple:
        return tuple(sorted((exp, int(c)) for exp, c in terms.items() if c != 0))

    @classmethod
    def from_dict(cls, terms: Mapping[Exponent, int]) -> BivarPoly:
        return cls(tuple(terms.items()))

    @classmethod
    def constant(cls, c: int) -> BivarPoly:
        return cls((((0, 0), c),))

    @classmethod
    def u(cls) -> BivarPoly:
        return cls((((1, 0), 1),))

    @classmethod
    def v(cls) -> BivarPoly:
        return cls((((0, 1), 1),))

    def as_dict(self) -> Dict[Exponent, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _coerce(self, other) -> BivarPoly:
        if isinstance(other, BivarPoly):
            return other
        if isinstance(other, int):
            return BivarPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: Dict[Exponent, int] = defaultdict(int, self.terms)
        for exp, c in other.terms:
            acc[exp] += c
        return BivarPoly.from_dict(acc)

    __radd__ = __add__

    def __neg__(self):
        return BivarPoly(tuple((exp, -c) for exp, c in self.terms))

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
        acc: Dict[Exponent, int] = defaultdict(int)
        for (i1, j1), c1 in self.terms:
            for (i2, j2), c2 in other.terms:
                acc[(i1 + i2, j1 + j2)] += c1 * c2
        return BivarPoly.from_dict(acc)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result = BivarPoly.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result
