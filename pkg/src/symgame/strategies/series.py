"""Bookkeeping shared by the path and cycle breakers.

Coordinates here are *line* coordinates: edges ``1..n`` of the path in the
orientation the breaker works in (after the reflection normalisation), so
that the code reads like the proof.  A component is an :class:`Interval` of
consecutive edges; the distance between two disjoint intervals on a path is
the number of edges strictly between them.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import asdict, dataclass, field
from typing import Optional

from ..errors import InvariantViolation


@dataclass(frozen=True)
class Interval:
    """A component viewed as the run of edges ``lo..hi`` on the line."""

    lo: int
    hi: int

    @property
    def size(self) -> int:
        return self.hi - self.lo + 1

    def __contains__(self, e) -> bool:
        return self.lo <= e <= self.hi

    def __str__(self):
        return f"[{self.lo}..{self.hi}]"


def gap(x: Interval, y: Interval) -> int:
    """Path distance between disjoint components = edges strictly between them."""
    if x.hi < y.lo:
        return y.lo - x.hi - 1
    if y.hi < x.lo:
        return x.lo - y.hi - 1
    raise ValueError(f"intervals {x} and {y} overlap")


def between(x: Interval, lo_wall: int, hi_wall: int) -> bool:
    """``x`` lies strictly inside the open edge range (lo_wall, hi_wall)."""
    return lo_wall < x.lo and x.hi < hi_wall


def run_containing(edges: set, e: int) -> Interval:
    lo = hi = e
    while lo - 1 in edges:
        lo -= 1
    while hi + 1 in edges:
        hi += 1
    return Interval(lo, hi)


def runs(edges: set) -> list:
    out = []
    for e in sorted(edges):
        if e - 1 not in edges:
            out.append(run_containing(edges, e))
    return out


def colored_between(colored: set, x: Interval, y: Interval) -> bool:
    lo, hi = (x.hi, y.lo) if x.hi < y.lo else (y.hi, x.lo)
    if hi - lo - 1 < len(colored):
        return any(e in colored for e in range(lo + 1, hi))
    return any(lo < e < hi for e in colored)


@dataclass
class SeriesRecord:
    j: int
    phase: str
    s: Optional[int] = None
    f: Optional[int] = None
    s_b: Optional[int] = None
    f_b: Optional[int] = None
    comp: Optional[Interval] = None
    comp_b: Optional[Interval] = None
    case: Optional[str] = None
    rule: Optional[str] = None
    conforming: bool = True
    a_moves: list = field(default_factory=list)
    b_moves: list = field(default_factory=list)
    note: Optional[str] = None

    def to_json(self) -> dict:
        d = asdict(self)
        d["comp"] = str(self.comp) if self.comp else None
        d["comp_b"] = str(self.comp_b) if self.comp_b else None
        return d


@dataclass
class DistinctivePair:
    """Two red components plus their blue counterparts."""

    c: Interval
    d: Interval
    c_prime: Interval
    d_prime: Interval
    distance: int

    def conditions(self, colored: set, distance_fn=gap) -> tuple:
        """The three defining conditions, evaluated on the current position."""
        c1 = self.distance != 2
        c2 = not colored_between(colored, self.c, self.d)
        c3 = distance_fn(self.c_prime, self.d_prime) != self.distance or \
            colored_between(colored, self.c_prime, self.d_prime)
        return c1, c2, c3

    def to_json(self) -> dict:
        return {"c": str(self.c), "d": str(self.d), "c_prime": str(self.c_prime),
                "d_prime": str(self.d_prime), "distance": self.distance}


@dataclass
class SeriesLedger:
    """Everything the breaker knows about the series it has played, plus the proof checks."""

    n: int
    t: int
    strict: bool = True
    regime: bool = True
    t_prime: Optional[int] = None
    l: Optional[int] = None
    phase: str = "one"
    mirrored: bool = False
    records: list = field(default_factory=list)
    pairs: list = field(default_factory=list)
    passed: Counter = field(default_factory=Counter)
    skipped: Counter = field(default_factory=Counter)
    violations: list = field(default_factory=list)
    events: list = field(default_factory=list)
    fallback: Optional[dict] = None

    # checks whose proofs need n > 14t; outside that regime they are recorded, not enforced
    REGIME_ONLY = frozenset({
        "claim1.2", "claim1.3", "claim1.5", "claim2.cond1", "claim3.1", "claim3.2", "claim4.3",
        "round_budget",
    })

    @property
    def log_n(self) -> float:
        return math.log2(self.n)

    def check(self, name: str, ok: bool, detail: str = "") -> bool:
        if ok:
            self.passed[name] += 1
            return True
        enforced = self.regime or name not in self.REGIME_ONLY
        self.violations.append({"check": name, "detail": detail, "enforced": enforced,
                                "series": len(self.records)})
        if self.strict and enforced:
            raise InvariantViolation(f"{name} failed on n={self.n}: {detail}", self)
        return False

    def skip(self, name: str) -> None:
        self.skipped[name] += 1

    def event(self, kind: str, **info) -> None:
        self.events.append({"kind": kind, **info})

    @property
    def enforced_violations(self) -> list:
        return [v for v in self.violations if v["enforced"]]

    def to_json(self) -> dict:
        return {
            "n": self.n, "t": self.t, "t_prime": self.t_prime, "l": self.l, "phase": self.phase,
            "regime": self.regime, "mirrored": self.mirrored,
            "series": [r.to_json() for r in self.records],
            "pairs": [p.to_json() for p in self.pairs],
            "passed": dict(self.passed), "skipped": dict(self.skipped),
            "violations": self.violations, "events": self.events, "fallback": self.fallback,
        }

    def dumps(self) -> str:
        """One JSON object per series, then a summary line."""
        lines = [json.dumps(r.to_json()) for r in self.records]
        summary = self.to_json()
        summary.pop("series")
        lines.append(json.dumps(summary))
        return "\n".join(lines)
