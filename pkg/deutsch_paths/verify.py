"""Verification suites: closed forms against the oracle and the linear solve.

Each suite returns a SuiteResult; a failing case is recorded, never raised.
The strip closed form is injectable so a deliberately broken one can serve as
a negative control.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional

from deutsch_paths import kernel, oracle, strip
from deutsch_paths.common.config import Config
from deutsch_paths.common.errors import DeutschPathsError, InvalidSpecError
from deutsch_paths.series import TruncatedSeries, Var, motzkin_v, z_to_v

_logger = logging.getLogger(__name__)

PhiClosed = Callable[[int, int, int, int], TruncatedSeries]


@dataclass(frozen=True)
class VerifyBounds:
    m_max: int = Config.verify_m_max
    t_max: int = Config.verify_t_max
    n_max: int = Config.verify_n_max
    trunc: int = Config.verify_trunc
    kernel_t_max: int = Config.kernel_t_max

    def __post_init__(self):
        for name in ("m_max", "t_max", "n_max", "trunc", "kernel_t_max"):
            if getattr(self, name) < 1:
                raise InvalidSpecError(f"{name} must be at least 1, got {getattr(self, name)}")


@dataclass
class SuiteResult:
    name: str
    passed: bool
    cases: int
    failures: List[str] = field(default_factory=list)


class _Tally:
    def __init__(self, name: str):
        self.name = name
        self.cases = 0
        self.failures: List[str] = []

    def check(self, label: str, thunk: Callable[[], bool]) -> None:
        self.cases += 1
        try:
            ok = thunk()
        except DeutschPathsError as e:
            ok = False
            label = f"{label}: {e}"
        if not ok:
            _logger.debug("%s failed: %s", self.name, label)
            self.failures.append(label)

    def fail(self, label: str) -> None:
        self.cases += 1
        self.failures.append(label)

    def result(self) -> SuiteResult:
        return SuiteResult(self.name, not self.failures, self.cases, self.failures)


def faulty_phi_closed(m: int, t: int, j: int, order: int) -> TruncatedSeries:
    """phi_closed with the strip size off by one, used as a negative control."""
    return strip.phi_closed(m + 1, t, j, order)


# ─── Suites ──────────────────────────────────────────────────────────────────

def suite_kernel(bounds: VerifyBounds, phi: PhiClosed) -> SuiteResult:
    tally = _Tally("kernel")
    for t in range(bounds.kernel_t_max + 1):
        tally.check(f"t={t}", lambda t=t: kernel.kernel_identity(t))
    return tally.result()


def suite_roots(bounds: VerifyBounds, phi: PhiClosed) -> SuiteResult:
    tally = _Tally("roots")
    order = Config.root_order
    tally.check("sqrt formula = v(z)", lambda: kernel.roots_r2(order).r2 == motzkin_v(order))
    zero = TruncatedSeries.constant(0, order, Var.Z)
    tally.check("kernel residual vanishes", lambda: kernel.roots_r2(order).residual() == zero)
    return tally.result()


def suite_determinant(bounds: VerifyBounds, phi: PhiClosed) -> SuiteResult:
    tally = _Tally("determinant")
    order = Config.det_order

    def _in_v(poly):
        return z_to_v(poly.to_series(order), order)

    for m in range(1, Config.det_m_max + 1):
        tally.check(
            f"D_{m}",
            lambda m=m: _in_v(strip.det_system_poly(m)) == strip.det_Dm_closed(m, order),
        )
    for m in range(1, bounds.m_max + 1):
        for t in range(m):
            for j in range(m):
                tally.check(
                    f"D({m};{t},{j})",
                    lambda m=m, t=t, j=j: _in_v(strip.det_replaced_poly(m, t, j))
                    == strip.det_D_replaced(m, t, j, order),
                )
    return tally.result()


def suite_recursion(bounds: VerifyBounds, phi: PhiClosed) -> SuiteResult:
    tally = _Tally("recursion")
    tally.check("closed-form D_m", lambda: strip.det_recursion_check(Config.det_m_max))

    def _perturbed(m: int, order: int) -> TruncatedSeries:
        return strip.det_Dm_closed(m, order) + TruncatedSeries.monomial(m, order, Var.V)

    tally.check(
        "perturbed D_m rejected",
        lambda: not strip.det_recursion_check(Config.det_m_max, dm=_perturbed),
    )
    return tally.result()


def suite_cramer(bounds: VerifyBounds, phi: PhiClosed) -> SuiteResult:
    tally = _Tally("cramer")
    order = bounds.trunc
    for m in range(1, bounds.m_max + 1):
        for t in range(m):
            try:
                solution = strip.solve_series(m, t, order)
            except DeutschPathsError as e:
                tally.fail(f"m={m} t={t} elimination: {e}")
                continue
            for j in range(m):
                tally.check(
                    f"m={m} t={t} j={j} elimination = closed form",
                    lambda m=m, t=t, j=j, s=solution: s.phi[j] == phi(m, t, j, order),
                )
                tally.check(
                    f"m={m} t={t} j={j} elimination = Cramer quotient",
                    lambda m=m, t=t, j=j, s=solution: s.phi[j] == strip.phi_cramer(m, t, j, order),
                )
    return tally.result()


def suite_oracle(bounds: VerifyBounds, phi: PhiClosed) -> SuiteResult:
    tally = _Tally("oracle")
    order = bounds.n_max + 1
    for t in range(bounds.t_max + 1):
        for j in range(bounds.t_max + 1):
            spec = oracle.StripSpec(t, j)
            expected = oracle.count_series(spec, order).to_counts()
            tally.check(
                f"unbounded t={t} j={j} closed",
                lambda t=t, j=j, e=expected: kernel.f_unbounded_closed(t, j, order).to_counts() == e,
            )
            tally.check(
                f"unbounded t={t} j={j} kernel sum",
                lambda t=t, j=j, e=expected: kernel.f_unbounded_sum(t, j, order).to_counts() == e,
            )
    for m in range(1, bounds.m_max + 1):
        for t in range(m):
            for j in range(m):
                expected = oracle.count_series(oracle.StripSpec(t, j, m), order).to_counts()
                tally.check(
                    f"strip m={m} t={t} j={j}",
                    lambda m=m, t=t, j=j, e=expected: phi(m, t, j, order).to_counts() == e,
                )
    return tally.result()


def suite_special(bounds: VerifyBounds, phi: PhiClosed) -> SuiteResult:
    tally = _Tally("special")
    order = bounds.trunc
    for j in range(bounds.t_max + 1):
        expected = oracle.count_series(oracle.StripSpec(0, j), order).to_counts()
        tally.check(
            f"t=0 j={j}",
            lambda j=j, e=expected: kernel.special_case_t0(j, order).to_counts() == e
            and kernel.special_case_t0(j, order) == kernel.f_unbounded_closed(0, j, order),
        )
    for t in range(1, bounds.t_max + 1):
        expected = oracle.count_series(oracle.StripSpec(t, 0), order).to_counts()
        tally.check(
            f"j=0 t={t}",
            lambda t=t, e=expected: kernel.special_case_j0(t, order).to_counts() == e
            and kernel.special_case_j0(t, order) == kernel.f_unbounded_closed(t, 0, order),
        )
    return tally.result()


def suite_shifted(bounds: VerifyBounds, phi: PhiClosed) -> SuiteResult:
    tally = _Tally("shifted")
    order = bounds.trunc
    top = Config.shifted_max
    for h in range(top + 1):
        for t in range(top + 1):
            for i in range(-t, h + 1):
                tally.check(
                    f"h={h} t={t} i={i}",
                    lambda h=h, t=t, i=i: strip.phi_shifted(h, t, i, order) == phi(h + t + 1, t, i + t, order),
                )
    return tally.result()


def suite_stabilization(bounds: VerifyBounds, phi: PhiClosed) -> SuiteResult:
    tally = _Tally("stabilization")
    top = Config.stabilization_max
    for t in range(top + 1):
        for j in range(top + 1):
            for n in range(Config.stabilization_n_max + 1):
                m = max(t + n + 1, j + 1)
                tally.check(
                    f"t={t} j={j} n={n} m={m}",
                    lambda t=t, j=j, n=n, m=m: phi(m, t, j, n + 1) == strip.phi_limit(t, j, n + 1),
                )
    return tally.result()


def suite_rowsum(bounds: VerifyBounds, phi: PhiClosed) -> SuiteResult:
    tally = _Tally("rowsum")
    order = bounds.trunc

    def _row_sum(t: int) -> bool:
        total = TruncatedSeries.constant(0, order, Var.Z)
        for j in range(t + order + 1):
            total = total + kernel.f_unbounded_closed(t, j, order)
        return total == kernel.F_total(t, order)

    for t in range(bounds.t_max + 1):
        tally.check(f"t={t}", lambda t=t: _row_sum(t))
    return tally.result()


SUITES: Dict[str, Callable[[VerifyBounds, PhiClosed], SuiteResult]] = {
    "kernel": suite_kernel,
    "roots": suite_roots,
    "determinant": suite_determinant,
    "recursion": suite_recursion,
    "cramer": suite_cramer,
    "oracle": suite_oracle,
    "special": suite_special,
    "shifted": suite_shifted,
    "stabilization": suite_stabilization,
    "rowsum": suite_rowsum,
}


def run_suites(
    bounds: Optional[VerifyBounds] = None,
    names: Optional[Iterable[str]] = None,
    phi: PhiClosed = strip.phi_closed,
) -> List[SuiteResult]:
    """Run the named suites (all of them by default) in registry order."""
    bounds = bounds or VerifyBounds()
    selected = set(names) if names else set(SUITES)
    unknown = selected - set(SUITES)
    if unknown:
        raise InvalidSpecError(f"unknown suite(s): {', '.join(sorted(unknown))}")
    results = []
    for name, suite in SUITES.items():
        if name not in selected:
            continue
        result = suite(bounds, phi)
        _logger.info("suite %s: %s (%d cases)", name, "pass" if result.passed else "FAIL", result.cases)
        results.append(result)
    return results
