"""Verification reports and a deterministic grid runner."""
from __future__ import annotations

import csv
import io
import itertools
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Optional, Sequence

PASS, FAIL, SKIP = "pass", "fail", "skip"


@dataclass
class PointResult:
    point: dict
    status: str
    lhs: Optional[str] = None
    rhs: Optional[str] = None


@dataclass
class VerificationReport:
    identity: str
    grid: dict = field(default_factory=dict)
    results: list = field(default_factory=list)

    @property
    def tested(self) -> int:
        return sum(1 for r in self.results if r.status != SKIP)

    @property
    def skipped(self) -> int:
        return sum(1 for r in self.results if r.status == SKIP)

    @property
    def failed(self) -> int:
        return sum(1 for r in self.results if r.status == FAIL)

    @property
    def passed(self) -> bool:
        return self.failed == 0

    def __bool__(self):
        return self.passed

    def add(self, point: dict, status: str, lhs=None, rhs=None) -> None:
        self.results.append(PointResult(dict(point), status,
                                        None if lhs is None else str(lhs),
                                        None if rhs is None else str(rhs)))

    def failures(self) -> list[dict]:
        return [{"point": r.point, "lhs": r.lhs, "rhs": r.rhs}
                for r in self.results if r.status == FAIL]

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "grid": self.grid,
            "tested": self.tested,
            "skipped": self.skipped,
            "failed": self.failed,
            "failures": self.failures(),
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    def csv_rows(self) -> list[list]:
        keys: list[str] = []
        for r in self.results:
            for k in r.point:
                if k not in keys:
                    keys.append(k)
        rows = [keys + ["status", "lhs", "rhs"]]
        for r in self.results:
            rows.append([r.point.get(k, "") for k in keys]
                        + [r.status, r.lhs or "", r.rhs or ""])
        return rows

    def to_csv(self) -> str:
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(self.csv_rows())
        return buf.getvalue()

    def summary(self) -> str:
        state = "PASS" if self.passed else "FAIL"
        return (f"{self.identity}: {state} tested={self.tested} "
                f"skipped={self.skipped} failed={self.failed}")


def merge(identity: str, reports: Sequence[VerificationReport]) -> VerificationReport:
    out = VerificationReport(identity, {r.identity: r.grid for r in reports})
    for r in reports:
        for res in r.results:
            out.results.append(PointResult({"check": r.identity, **res.point},
                                           res.status, res.lhs, res.rhs))
    return out


def grid_points(grid: dict[str, Sequence[int]]) -> list[dict]:
    """Cartesian product of named ranges, in lexicographic key order."""
    keys = list(grid)
    return [dict(zip(keys, vals)) for vals in itertools.product(*(grid[k] for k in keys))]


def _chunked(fn, chunk):
    return [fn(p) for p in chunk]


def run_grid(identity: str, points: Iterable[dict],
             check: Callable[[dict], tuple], grid: Optional[dict] = None,
             jobs: int = 1) -> VerificationReport:
    """Apply ``check`` to every point; it returns ``(status, lhs, rhs)``.

    With ``jobs > 1`` points are farmed out to worker processes, so
    ``check`` must be picklable.  Results keep the input order either way.
    """
    points = list(points)
    rep = VerificationReport(identity, _grid_repr(grid or {}))
    if jobs > 1 and len(points) > 1:
        size = max(1, len(points) // (jobs * 8))
        chunks = [points[i:i + size] for i in range(0, len(points), size)]
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            outs = list(ex.map(_chunked, itertools.repeat(check), chunks))
        results = [r for chunk in outs for r in chunk]
    else:
        results = [check(p) for p in points]
    for p, (status, lhs, rhs) in zip(points, results):
        rep.add(p, status, lhs, rhs)
    return rep


def _grid_repr(grid: dict) -> dict[str, Any]:
    out = {}
    for k, v in grid.items():
        if isinstance(v, range) and v.step == 1 and len(v):
            out[k] = [v.start, v.stop - 1]
        else:
            out[k] = v if isinstance(v, (int, str)) else list(v)
    return out
