"""Incremental re-optimization under node arrivals.

Each growth step appends new nodes (ids stay stable), recomputes the
betweenness-driven costs and the coverage matrix from scratch, and
re-solves the LP warm-started from the previous fractional solution
padded with zeros for the new nodes.  Every step emits a verified cover.
"""

from __future__ import annotations

import csv
import time
from dataclasses import dataclass, field

import numpy as np

from .centrality import CostParams
from .errors import InvalidSpec, ShrinkNotSupported
from .graphs import Graph
from .lp import SolverConfig
from .selection import SelectionParams, select_static


@dataclass(frozen=True)
class AttachPolicy:
    """How a new node picks its m >= 1 endpoints among existing nodes."""

    kind: str  # "uniform" or "preferential"
    m: int = 2

    def __post_init__(self):
        if self.kind not in ("uniform", "preferential"):
            raise InvalidSpec(f"unknown attachment kind {self.kind!r}")
        if self.m < 1:
            raise InvalidSpec("attachment count m must be >= 1")


def UniformAttach(m: int = 2) -> AttachPolicy:
    return AttachPolicy("uniform", m)


def PreferentialAttach(m: int = 2) -> AttachPolicy:
    return AttachPolicy("preferential", m)


@dataclass(frozen=True)
class GrowthStep:
    count: int = 1
    policy: AttachPolicy = field(default_factory=PreferentialAttach)

    def __post_init__(self):
        if self.count < 1:
            raise InvalidSpec("each growth step must add at least one node")


@dataclass(frozen=True)
class GrowthSchedule:
    steps: tuple[GrowthStep, ...]
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))


def single_node_schedule(t: int, policy: AttachPolicy | None = None,
                         seed: int = 0) -> GrowthSchedule:
    """t steps of one node each, the shape used in the growth figures."""
    policy = policy or PreferentialAttach()
    return GrowthSchedule(tuple(GrowthStep(1, policy) for _ in range(t)), seed)


@dataclass(frozen=True)
class StepRecord:
    t: int
    n: int
    selected: frozenset[int]
    solve_ms: float
    warm: bool
    objective: float
    feasible: bool


@dataclass(frozen=True)
class DynamicTrace:
    records: tuple[StepRecord, ...]

    def write_csv(self, path) -> None:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(trace_csv_header())
            for rec in self.records:
                writer.writerow(trace_csv_row(rec))


def trace_csv_header() -> list[str]:
    return ["t", "n", "selected_count", "selected_ids", "solve_ms", "warm",
            "objective", "feasible"]


def trace_csv_row(rec: StepRecord) -> list:
    ids = ";".join(str(v) for v in sorted(rec.selected))
    return [rec.t, rec.n, len(rec.selected), ids, f"{rec.solve_ms:.3f}",
            str(rec.warm).lower(), repr(rec.objective), str(rec.feasible).lower()]


def pad_warm_start(x_prev: np.ndarray, n_new: int) -> np.ndarray:
    """Copy the old solution and zero the entries of newly added nodes."""
    x_prev = np.asarray(x_prev, dtype=np.float64)
    if n_new < len(x_prev):
        raise ShrinkNotSupported(
            f"cannot shrink a warm start from {len(x_prev)} to {n_new}"
        )
    out = np.zeros(n_new)
    out[:len(x_prev)] = x_prev
    return out


def _attach_edges(g: Graph, policy: AttachPolicy, new_id: int,
                  rng: np.random.Generator) -> list[tuple[int, int]]:
    m = min(policy.m, g.n)
    if policy.kind == "uniform":
        targets = rng.choice(g.n, size=m, replace=False)
    else:
        weights = g.degrees.astype(np.float64) + 1.0
        targets = rng.choice(g.n, size=m, replace=False,
                             p=weights / weights.sum())
    return [(int(t), new_id) for t in targets]


def grow(g: Graph, step: GrowthStep, rng: np.random.Generator) -> Graph:
    """Apply one growth step; every new node gets >= 1 edge so the graph
    stays connected."""
    for _ in range(step.count):
        edges = _attach_edges(g, step.policy, g.n, rng)
        g = g.with_new_nodes(1, edges)
    return g


def run_dynamic(g0: Graph, schedule: GrowthSchedule,
                params: SelectionParams = SelectionParams(),
                cost_params: CostParams = CostParams(),
                solver_config: SolverConfig = SolverConfig(),
                use_warm_start: bool = True) -> DynamicTrace:
    """Cold-solve the initial graph, then grow and warm-start re-solve.

    With ``use_warm_start=False`` every step solves cold; the trace is
    otherwise identical (objectives agree to solver tolerance), which is
    the comparison the growth benchmark makes.
    """
    rng = np.random.default_rng(schedule.seed)
    records = []
    g = g0
    t0 = time.perf_counter()
    nexus, solution = select_static(g, params, cost_params, solver_config)
    elapsed = (time.perf_counter() - t0) * 1000.0
    records.append(StepRecord(0, g.n, nexus.selected, elapsed, False,
                              solution.objective, nexus.feasible))
    x_prev = solution.x
    for t, step in enumerate(schedule.steps, start=1):
        g = grow(g, step, rng)
        warm = pad_warm_start(x_prev, g.n) if use_warm_start else None
        config = SolverConfig(
            feas_tol=solver_config.feas_tol,
            opt_tol=solver_config.opt_tol,
            max_iterations=solver_config.max_iterations,
            warm_start=warm,
        )
        t0 = time.perf_counter()
        nexus, solution = select_static(g, params, cost_params, config)
        elapsed = (time.perf_counter() - t0) * 1000.0
        records.append(StepRecord(t, g.n, nexus.selected, elapsed,
                                  use_warm_start, solution.objective,
                                  nexus.feasible))
        x_prev = solution.x
    return DynamicTrace(tuple(records))
