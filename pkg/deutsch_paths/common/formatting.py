from __future__ import annotations

import csv
import io
import json
import logging
from datetime import datetime
from typing import Optional, Sequence

import pytz

from .config import Config

_logger = logging.getLogger(__name__)


def _timezone(name: str):
    try:
        return pytz.timezone(name)
    except pytz.UnknownTimeZoneError:
        _logger.warning("unknown timezone %r, using UTC", name)
        return pytz.utc


_tz = _timezone(Config.timezone)


def now_local() -> datetime:
    return datetime.now(_tz)


def format_datetime_local(dt: Optional[datetime] = None, fmt: str = "%d %b %Y %H:%M %Z") -> str:
    if dt is None:
        dt = now_local()
    elif dt.tzinfo is None:
        dt = _tz.localize(dt)
    return dt.strftime(fmt)


def format_section_header(title: str) -> str:
    return f"**{title}**"


def format_list_item(text: str, indent: int = 0) -> str:
    prefix = "  " * indent
    return f"{prefix}- {text}"


def _record(command: str, params: dict, coefficients) -> str:
    return json.dumps({"command": command, "params": params, "coefficients": coefficients})


def format_coefficients(values: Sequence[int], fmt: str, command: str, params: dict) -> str:
    """Coefficient list as text (comma-separated), json, or csv (n,coefficient rows).

    Integers are always written in full as decimal strings.
    """
    decimals = [str(int(c)) for c in values]
    if fmt == "json":
        return _record(command, params, decimals)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "coefficient"])
        writer.writerows([n, c] for n, c in enumerate(decimals))
        return buf.getvalue().rstrip("\n")
    return ",".join(decimals)


def format_grid(rows: Sequence[Sequence[int]], fmt: str, command: str, params: dict) -> str:
    """count[n][level] grid; csv has a header row then one row per step count."""
    decimals = [[str(int(c)) for c in row] for row in rows]
    if fmt == "json":
        return _record(command, params, decimals)
    width = len(decimals[0]) if decimals else 0
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n"] + [str(level) for level in range(width)])
        writer.writerows([str(n)] + row for n, row in enumerate(decimals))
        return buf.getvalue().rstrip("\n")
    cell = max((len(c) for row in decimals for c in row), default=1)
    lines = [f"n={n:<3} " + " ".join(c.rjust(cell) for c in row) for n, row in enumerate(decimals)]
    return "\n".join(lines)


def format_suites(results: Sequence, fmt: str, title: str) -> str:
    """Verification report: one line per suite, or {"suites": [...]} as json."""
    if fmt == "json":
        return json.dumps({"suites": [
            {"name": r.name, "pass": r.passed, "cases": r.cases} for r in results
        ]})
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["suite", "pass", "cases"])
        writer.writerows([r.name, "true" if r.passed else "false", r.cases] for r in results)
        return buf.getvalue().rstrip("\n")
    lines = [format_section_header(title), f"Time: {format_datetime_local()}", ""]
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(format_list_item(f"{r.name}: {status} ({r.cases} cases)"))
        for failure in r.failures[:5]:
            lines.append(format_list_item(failure, indent=1))
        if len(r.failures) > 5:
            lines.append(format_list_item(f"... {len(r.failures) - 5} more", indent=1))
    return "\n".join(lines)
