"""Ground-truth path counts by dynamic programming plus exhaustive enumeration.

From level l a step goes to l+1 (up) or to any level l' with 0 <= l' < l
(a down-step of size l - l'). With an upper bound m-1, up-steps out of the
strip are forbidden.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import accumulate
from typing import List, Optional, Tuple

from deutsch_paths.common.config import Config
from deutsch_paths.common.errors import InvalidSpecError
from deutsch_paths.series import TruncatedSeries, Var

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StripSpec:
    """Start level t, end level j, and upper boundary m-1 (m=None: unbounded)."""

    t: int
    j: int
    m: Optional[int] = None

    def __post_init__(self):
        self.validate()

    def validate(self) -> None:
        if self.t < 0 or self.j < 0:
            raise InvalidSpecError(f"levels must be nonnegative (t={self.t}, j={self.j})")
        if self.m is None:
            return
        if self.m < 1:
            raise InvalidSpecError(f"strip size m must be at least 1, got {self.m}")
        if self.t > self.m - 1 or self.j > self.m - 1:
            raise InvalidSpecError(
                f"levels t={self.t}, j={self.j} outside the strip 0..{self.m - 1}"
            )

    @property
    def bounded(self) -> bool:
        return self.m is not None

    def describe(self) -> str:
        upper = "unbounded" if self.m is None else f"upper boundary {self.m - 1}"
        return f"t={self.t}, j={self.j}, {upper}"


@dataclass(frozen=True)
class CountTable:
    """rows[s][l]: number of s-step paths from t to level l."""

    t: int
    m: Optional[int]
    rows: Tuple[Tuple[int, ...], ...]

    @property
    def steps(self) -> int:
        return len(self.rows) - 1

    @property
    def height(self) -> int:
        """Highest level represented in the grid."""
        return len(self.rows[0]) - 1

    def cell(self, s: int, level: int) -> int:
        if level < 0:
            raise InvalidSpecError(f"negative level {level}")
        if level > self.height:
            return 0
        return self.rows[s][level]

    def row_sum(self, s: int) -> int:
        return sum(self.rows[s])


def _validate_steps(n: int) -> None:
    if n < 0:
        raise InvalidSpecError(f"number of steps must be nonnegative, got {n}")


def count_table(n: int, t: int, m: Optional[int] = None) -> CountTable:
    """Forward DP over n steps; suffix sums make each step linear in the height.

    Unbounded strips use working height t+n, the highest level an n-step path
    can reach.
    """
    _validate_steps(n)
    StripSpec(t, t, m)
    height = t + n if m is None else m - 1

    row = [0] * (height + 1)
    row[t] = 1
    rows = [tuple(row)]
    for _ in range(n):
        # above[l] = sum of row[k] for k > l
        above = list(accumulate(reversed(row)))[::-1][1:] + [0]
        new = [above[0]]
        for level in range(1, height + 1):
            new.append(row[level - 1] + above[level])
        row = new
        rows.append(tuple(row))
    _logger.debug("count_table: n=%d t=%d m=%s height=%d", n, t, m, height)
    return CountTable(t=t, m=m, rows=tuple(rows))


def count_paths(n: int, spec: StripSpec) -> int:
    """Exact number of n-step Deutsch paths from spec.t to spec.j."""
    return count_table(n, spec.t, spec.m).cell(n, spec.j)


def count_walks(n: int, t: int, m: Optional[int] = None) -> int:
    """Number of n-step paths from t staying in bounds, whatever the end level."""
    return count_table(n, t, m).row_sum(n)


def count_series(spec: StripSpec, order: int) -> TruncatedSeries:
    """Series in z whose n-th coefficient is count_paths(n, spec), n < order."""
    if order < 1:
        raise InvalidSpecError(f"truncation order must be at least 1, got {order}")
    _logger.debug("count_series: %s, order %d", spec.describe(), order)
    table = count_table(order - 1, spec.t, spec.m)
    return TruncatedSeries.from_coefficients(
        [table.cell(s, spec.j) for s in range(order)], order, Var.Z
    )


def enumerate_paths(n: int, spec: StripSpec) -> List[Tuple[int, ...]]:
    """Every legal n-step sequence of level increments from spec.t to spec.j."""
    _validate_steps(n)
    if n > Config.max_enumeration_steps:
        raise InvalidSpecError(
            f"enumeration limited to {Config.max_enumeration_steps} steps, got {n}"
        )
    top = None if spec.m is None else spec.m - 1
    paths: List[Tuple[int, ...]] = []

    def _walk(level: int, remaining: int, prefix: List[int]) -> None:
        # only up-steps climb, one level each
        if level + remaining < spec.j:
            return
        if remaining == 0:
            if level == spec.j:
                paths.append(tuple(prefix))
            return
        if top is None or level < top:
            prefix.append(1)
            _walk(level + 1, remaining - 1, prefix)
            prefix.pop()
        for d in range(1, level + 1):
            prefix.append(-d)
            _walk(level - d, remaining - 1, prefix)
            prefix.pop()

    _walk(spec.t, n, [])
    return paths
