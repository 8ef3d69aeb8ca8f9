"""Experiment configuration, the bounds table and result persistence.

A run is described by one flat :class:`ExperimentConfig` (JSON file, command
line flags override single fields).  Every (n, seed) cell is one game; rows
come back in config order whatever order the worker pool finishes them in,
so the same config produces the same CSV byte for byte.  Wall-clock times
are only written when ``timing`` is switched on, for the same reason.
"""

from __future__ import annotations

import csv
import io
import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields
from typing import Optional

from .engine import play_sym
from .errors import ParameterError
from .graphs import make_graph
from .strategies import STRATEGIES, make_strategy

CSV_HEADER = ["n", "family", "variant", "a_strategy", "b_strategy", "seed", "rounds",
              "lower_bound", "upper_bound", "pass", "elapsed_ms"]
BREAKERS = ("breaker-path", "breaker-cycle", "breaker-kn")


def lower_bound(family: str, n: int) -> float:
    """Logarithmic lower bounds: 1/2 log(n-1) - 1 on P_n, 1/2 log n - 1/2 on C_n."""
    if family == "path":
        return 0.5 * math.log2(n - 1) - 1 if n > 1 else -1.0
    if family == "cycle":
        return 0.5 * math.log2(n) - 0.5
    raise ParameterError(f"no lower bound for family {family!r}")


def upper_bound(n: int) -> float:
    """Leading term 3.5 log^2 n of the breaker's round count."""
    return 3.5 * math.log2(n) ** 2


def parse_range(text: str) -> list:
    """``"9..201"``, ``"9,11,15"`` or ``"9..201:8"`` (step) -> list of ints."""
    out = []
    for part in str(text).split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part:
            span, _, step = part.partition(":")
            lo, hi = (int(x) for x in span.split(".."))
            out.extend(range(lo, hi + 1, int(step) if step else 1))
        else:
            out.append(int(part))
    return out


@dataclass
class ExperimentConfig:
    family: str = "path"
    ns: list = field(default_factory=lambda: [9, 17, 33, 65])
    odd: bool = True
    variant: str = "sym"
    a_strategy: str = "breaker-path"
    b_strategy: str = "translated"
    seeds: list = field(default_factory=lambda: [0])
    round_limit: Optional[int] = None
    workers: int = 1
    timing: bool = False
    out: Optional[str] = None

    def __post_init__(self):
        if isinstance(self.ns, str):
            self.ns = parse_range(self.ns)
        if isinstance(self.seeds, (str, int)):
            self.seeds = parse_range(str(self.seeds))

    def validate(self) -> "ExperimentConfig":
        if self.family not in ("path", "cycle"):
            raise ParameterError("the bounds table covers paths and cycles")
        for name, side in ((self.a_strategy, "A"), (self.b_strategy, "B")):
            if name not in STRATEGIES:
                raise ParameterError(f"unknown strategy {name!r}")
            if side not in STRATEGIES[name][0]:
                raise ParameterError(f"strategy {name!r} cannot play {side}")
        if not self.seeds:
            raise ParameterError("seeds must be given explicitly")
        if self.variant not in ("sym", "sym_plus"):
            raise ParameterError(f"unknown variant {self.variant!r}")
        return self

    @property
    def cells(self) -> list:
        ns = [n for n in self.ns if n % 2 == 1] if self.odd else list(self.ns)
        return [(n, s) for n in ns for s in self.seeds]

    @classmethod
    def from_json(cls, path: str) -> "ExperimentConfig":
        with open(path) as fh:
            data = json.load(fh)
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ParameterError(f"unknown config fields {sorted(unknown)}")
        return cls(**data)

    def override(self, **flags) -> "ExperimentConfig":
        data = asdict(self)
        data.update({k: v for k, v in flags.items() if v is not None})
        return ExperimentConfig(**data)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


@dataclass
class ResultRow:
    n: int
    family: str
    variant: str
    a_strategy: str
    b_strategy: str
    seed: int
    rounds: int
    lower_bound: float
    upper_bound: float
    passed: bool
    elapsed_ms: Optional[int] = None
    winner: Optional[str] = None

    def recompute_pass(self) -> bool:
        """rounds > lower bound, and rounds <= the upper column."""
        return self.lower_bound < self.rounds <= self.upper_bound

    def csv_fields(self) -> list:
        return [self.n, self.family, self.variant, self.a_strategy, self.b_strategy, self.seed, self.rounds,
                f"{self.lower_bound:.4f}", f"{self.upper_bound:.4f}", str(self.passed).lower(),
                "" if self.elapsed_ms is None else self.elapsed_ms]


def run_cell(config: ExperimentConfig, n: int, seed: int) -> ResultRow:
    """One game.  ``upper_bound`` is 3.5 log^2 n for breaker rows, floor(|E|/2) otherwise."""
    g = make_graph(config.family, n)
    a = make_strategy(config.a_strategy, g, "A")
    b = make_strategy(config.b_strategy, g, "B")
    t0 = time.perf_counter()
    outcome, _ = play_sym(g, a, b, config.variant, config.round_limit, seed)
    elapsed = int(1000 * (time.perf_counter() - t0))
    lo = lower_bound(config.family, n)
    hi = upper_bound(n) if config.a_strategy in BREAKERS else float(g.edge_count // 2)
    row = ResultRow(n, config.family, config.variant, config.a_strategy, config.b_strategy, seed,
                    outcome.survived_rounds, lo, hi, False, elapsed if config.timing else None, outcome.winner)
    row.passed = row.recompute_pass()
    return row


def _run_cell_args(args):
    return run_cell(*args)


def run_experiment(config: ExperimentConfig) -> list:
    config.validate()
    jobs = [(config, n, s) for n, s in config.cells]
    if config.workers <= 1:
        return [run_cell(*j) for j in jobs]
    with ProcessPoolExecutor(max_workers=config.workers) as pool:
        return list(pool.map(_run_cell_args, jobs))


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow(r.csv_fields())
    return buf.getvalue()


def write_rows(rows, path: Optional[str]) -> str:
    text = rows_to_csv(rows)
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    return text
