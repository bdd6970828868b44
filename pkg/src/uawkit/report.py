"""Check reports shared by the verification suites and the CLI."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from . import __version__

__all__ = ["Check", "Report", "timed_check"]


@dataclass
class Check:
    id: str
    status: str  # pass | fail | skip
    residual: str | None = None
    ms: float | None = None
    detail: str | None = None

    @property
    def passed(self):
        return self.status != "fail"

    def to_dict(self, timings=False):
        d = {"id": self.id, "status": self.status}
        if self.residual is not None:
            d["residual"] = self.residual
        if self.detail is not None:
            d["detail"] = self.detail
        if timings and self.ms is not None:
            d["ms"] = round(self.ms, 3)
        return d


@dataclass
class Report:
    suite: str
    checks: list = field(default_factory=list)
    seed: int | None = None
    version: str = __version__

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if c.status == "fail"]

    def add(self, check):
        self.checks.append(check)
        return check

    def extend(self, other):
        self.checks.extend(other.checks)
        return self

    def get(self, check_id):
        for c in self.checks:
            if c.id == check_id:
                return c
        raise KeyError(check_id)

    def to_dict(self, timings=False):
        return {
            "suite": self.suite,
            "checks": [c.to_dict(timings) for c in sorted(self.checks, key=lambda c: c.id)],
            "seed": self.seed,
            "version": self.version,
        }

    def to_json(self, timings=False):
        return json.dumps(self.to_dict(timings), sort_keys=True, indent=2)

    def format_table(self, timings=False):
        lines = []
        width = max((len(c.id) for c in self.checks), default=10)
        for c in sorted(self.checks, key=lambda c: c.id):
            line = f"{c.id:<{width}}  {c.status.upper():<4}"
            if timings and c.ms is not None:
                line += f"  {c.ms:9.1f} ms"
            if c.detail:
                line += f"  {c.detail}"
            lines.append(line)
            if c.residual is not None:
                lines.append(f"{'':<{width}}  residual: {c.residual}")
        n_fail = len(self.failures())
        lines.append(f"{self.suite}: {len(self.checks) - n_fail}/{len(self.checks)} passed")
        return "\n".join(lines)


def timed_check(check_id, fn):
    """Run ``fn()`` returning ``(ok, residual, detail)`` and wrap it in a Check.

    ``residual`` is any printable object (ignored on success).  Exceptions
    are reported as failures carrying the exception text.
    """
    t0 = time.perf_counter()
    try:
        ok, residual, detail = fn()
    except Exception as exc:  # reported, not raised: a failing check is data
        ms = (time.perf_counter() - t0) * 1000
        return Check(check_id, "fail", residual=None, ms=ms, detail=f"{type(exc).__name__}: {exc}")
    ms = (time.perf_counter() - t0) * 1000
    if ok:
        return Check(check_id, "pass", ms=ms, detail=detail)
    return Check(check_id, "fail", residual=None if residual is None else str(residual), ms=ms, detail=detail)
