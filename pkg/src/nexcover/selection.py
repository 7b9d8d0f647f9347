"""Turning fractional solutions into verified nexus sets.

Pipeline: solve the covering LP, keep entries above the threshold, then
repair.  Thresholding alone cannot guarantee a cover (on odd cycles the
LP optimum is x = 1/3 everywhere and a 0.5 threshold selects nothing),
so a repair pass always runs and the returned set carries a verified
feasibility certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import _kernels
from .centrality import CostParams, CostVector, betweenness, cost_vector
from .errors import InvalidSpec, OutOfRange, SizeLimit
from .graphs import Graph, build_coverage_matrix
from .lp import FractionalSolution, LpProblem, SolverConfig, solve

EXACT_SIZE_LIMIT = 20


class RepairPolicy(Enum):
    GREEDY = "greedy"
    FREQUENCY = "frequency"


@dataclass(frozen=True)
class SelectionParams:
    delta: float = 0.5
    repair: RepairPolicy = RepairPolicy.GREEDY

    def __post_init__(self):
        if not 0.0 < self.delta < 1.0:
            raise InvalidSpec(f"delta must lie in (0,1), got {self.delta}")


@dataclass(frozen=True)
class NexusSet:
    """A selection with its cost and a feasibility certificate."""

    selected: frozenset[int]
    total_cost: float
    feasible: bool


def verify_cover(g: Graph, s: set[int] | frozenset[int]) -> bool:
    """True iff every node is in s or adjacent to a member of s."""
    for v in s:
        if not 0 <= v < g.n:
            raise OutOfRange(f"node {v} not in 0..{g.n - 1}")
    indptr, indices = g.coverage_csr
    covered = np.zeros(g.n, dtype=bool)
    for v in s:
        covered[indices[indptr[v]:indptr[v + 1]]] = True
    return bool(covered.all())


def threshold(solution: FractionalSolution, delta: float) -> set[int]:
    """Indices with x_i strictly above delta."""
    return set(np.flatnonzero(solution.x > delta).tolist())


def repair(g: Graph, partial: set[int], cost: CostVector,
           policy: RepairPolicy = RepairPolicy.GREEDY,
           fractional: np.ndarray | None = None) -> set[int]:
    """Extend ``partial`` into a feasible cover.

    GREEDY repeatedly adds the node with the best newly-covered-per-cost
    ratio (ties to the lowest id).  FREQUENCY applies the classic
    frequency rounding x_i >= 1/f with f the largest closed neighborhood,
    which is feasible whenever ``fractional`` satisfies the covering
    constraints; the threshold is scaled by the realized row minimum so
    the guarantee survives solver tolerance.
    """
    indptr, indices = g.coverage_csr
    if policy is RepairPolicy.FREQUENCY:
        if fractional is None:
            raise InvalidSpec("frequency rounding needs the fractional solution")
        f = float(np.diff(indptr).max())
        row_min = min(
            float(fractional[indices[indptr[u]:indptr[u + 1]]].sum())
            for u in range(g.n)
        )
        cut = min(1.0, row_min) / f
        result = set(np.flatnonzero(fractional >= cut).tolist()) | set(partial)
        return result

    covered = np.zeros(g.n, dtype=bool)
    selected = np.zeros(g.n, dtype=bool)
    for v in partial:
        selected[v] = True
        covered[indices[indptr[v]:indptr[v + 1]]] = True
    if not covered.all():
        _kernels.greedy_extend(indptr, indices, cost.values, covered, selected)
    return set(np.flatnonzero(selected).tolist()) | set(partial)


def exact_solver(g: Graph, cost: CostVector) -> NexusSet:
    """Minimum-cost cover by branch and bound; ties pick the
    lexicographically smallest id sequence.  Only for n <= 20."""
    n = g.n
    if n > EXACT_SIZE_LIMIT:
        raise SizeLimit(f"exact solver is limited to n <= {EXACT_SIZE_LIMIT}")
    indptr, indices = g.coverage_csr
    nbr_mask = [0] * n
    for v in range(n):
        m = 0
        for u in indices[indptr[v]:indptr[v + 1]]:
            m |= 1 << int(u)
        nbr_mask[v] = m
    full = (1 << n) - 1
    c = cost.values
    best_cost = float("inf")
    best_seq: tuple[int, ...] | None = None

    def descend(covered: int, seq: tuple[int, ...], acc: float):
        nonlocal best_cost, best_seq
        if acc > best_cost:
            return
        if covered == full:
            ordered = tuple(sorted(seq))
            if acc < best_cost or (acc == best_cost
                                   and (best_seq is None or ordered < best_seq)):
                best_cost = acc
                best_seq = ordered
            return
        # branch on the candidates covering the lowest uncovered node
        uncovered = ~covered & full
        u = (uncovered & -uncovered).bit_length() - 1
        for v in range(n):
            if nbr_mask[v] >> u & 1:
                descend(covered | nbr_mask[v], seq + (v,), acc + c[v])

    descend(0, (), 0.0)
    sel = frozenset(best_seq)
    return NexusSet(selected=sel, total_cost=float(sum(c[v] for v in sorted(sel))),
                    feasible=True)


def _single_node_result() -> tuple[NexusSet, FractionalSolution]:
    sol = FractionalSolution(x=np.ones(1), objective=0.0, iterations=0,
                             converged=True, max_infeasibility=0.0)
    return NexusSet(selected=frozenset({0}), total_cost=0.0, feasible=True), sol


def select_with_cost(g: Graph, cost: CostVector,
                     params: SelectionParams = SelectionParams(),
                     solver_config: SolverConfig = SolverConfig(),
                     ) -> tuple[NexusSet, FractionalSolution]:
    """LP -> threshold -> repair -> verify, with an explicit cost vector."""
    problem = LpProblem(build_coverage_matrix(g), cost.values)
    solution = solve(problem, solver_config)
    picked = threshold(solution, params.delta)
    picked = repair(g, picked, cost, params.repair, fractional=solution.x)
    feasible = verify_cover(g, picked)
    if not feasible and params.repair is RepairPolicy.FREQUENCY:
        # solver returned a badly infeasible iterate; fall back to greedy
        picked = repair(g, picked, cost, RepairPolicy.GREEDY)
        feasible = verify_cover(g, picked)
    total = float(sum(cost.values[v] for v in sorted(picked)))
    return NexusSet(selected=frozenset(picked), total_cost=total,
                    feasible=feasible), solution


def select_static(g: Graph,
                  params: SelectionParams = SelectionParams(),
                  cost_params: CostParams = CostParams(),
                  solver_config: SolverConfig = SolverConfig(),
                  ) -> tuple[NexusSet, FractionalSolution]:
    """Full static pipeline with the centrality-driven cost.

    Single-node graphs short-circuit to S = {0}: the cost is undefined at
    degree zero and no LP is needed.
    """
    if g.n == 1:
        return _single_node_result()
    cost = cost_vector(g, betweenness(g), cost_params)
    return select_with_cost(g, cost, params, solver_config)
