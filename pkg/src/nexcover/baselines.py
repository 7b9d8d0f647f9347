"""Greedy and genetic-algorithm baselines for the coverage problem.

Both run with either cost profile: plain degree (1/deg^2) or the full
centrality-driven cost.  The GA is a deliberately textbook configuration
(tournament selection, uniform crossover, bit-flip mutation, small
elitism) evaluated individual by individual; it is a reference point,
not a tuned competitor.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import _kernels
from .centrality import CostParams, CostVector, betweenness, cost_vector
from .errors import DegenerateGraph, InvalidSpec
from .graphs import Graph
from .selection import NexusSet, RepairPolicy, repair, verify_cover


class CostProfile(Enum):
    DEGREE = "degree"
    CENTRALITY = "centrality"


def profile_cost(g: Graph, profile: CostProfile,
                 cost_params: CostParams = CostParams()) -> CostVector:
    """Cost vector for a profile; degree drops the betweenness term."""
    if profile is CostProfile.CENTRALITY:
        return cost_vector(g, betweenness(g), cost_params)
    deg = g.degrees.astype(np.float64)
    if g.n == 1 or (deg == 0).any():
        raise DegenerateGraph("degree cost undefined with isolated nodes")
    values = 1.0 / deg ** 2
    values.flags.writeable = False
    return CostVector(values)


def greedy_cover(g: Graph, cost: CostVector) -> NexusSet:
    """Weighted greedy set cover: best newly-covered-per-cost node each
    round, ties to the lowest id."""
    indptr, indices = g.coverage_csr
    covered = np.zeros(g.n, dtype=bool)
    selected = np.zeros(g.n, dtype=bool)
    _kernels.greedy_extend(indptr, indices, cost.values, covered, selected)
    sel = frozenset(np.flatnonzero(selected).tolist())
    total = float(sum(cost.values[v] for v in sorted(sel)))
    return NexusSet(selected=sel, total_cost=total,
                    feasible=verify_cover(g, sel))


@dataclass(frozen=True)
class GaConfig:
    population: int = 50
    generations: int = 100
    tournament_size: int = 3
    crossover_rate: float = 0.9
    mutation_rate: float | None = None  # None means 1/n per bit
    elitism: int = 2
    infeasibility_penalty: float | None = None  # None means n * max cost
    seed: int = 0

    def __post_init__(self):
        if self.population < 2:
            raise InvalidSpec("population must be >= 2")
        if not 0.0 <= self.crossover_rate <= 1.0:
            raise InvalidSpec("crossover rate must lie in [0,1]")
        if self.mutation_rate is not None and not 0.0 <= self.mutation_rate <= 1.0:
            raise InvalidSpec("mutation rate must lie in [0,1]")


def ga_cover(g: Graph, cost: CostVector, config: GaConfig = GaConfig()) -> NexusSet:
    """Binary-chromosome GA; the best individual is greedily repaired to
    feasibility before return.  Bit-identical trajectory for a fixed seed."""
    n = g.n
    c = cost.values
    rng = np.random.default_rng(config.seed)
    indptr, indices = g.coverage_csr
    mut_rate = config.mutation_rate if config.mutation_rate is not None else 1.0 / n
    penalty = (config.infeasibility_penalty
               if config.infeasibility_penalty is not None
               else n * float(c.max()))

    def fitness(chrom: np.ndarray) -> float:
        covered = np.zeros(n, dtype=bool)
        for v in np.flatnonzero(chrom):
            covered[indices[indptr[v]:indptr[v + 1]]] = True
        uncovered = n - int(covered.sum())
        return float(chrom @ c) + penalty * uncovered

    population = [rng.random(n) < 0.5 for _ in range(config.population)]
    fits = [fitness(ch) for ch in population]
    best_idx = int(np.argmin(fits))
    best = population[best_idx].copy()
    best_fit = fits[best_idx]

    for _ in range(config.generations):
        ranked = np.argsort(fits, kind="stable")
        offspring = [population[ranked[e]].copy() for e in range(config.elitism)]
        while len(offspring) < config.population:
            pair = []
            for _ in range(2):
                contenders = rng.integers(0, config.population,
                                          size=config.tournament_size)
                w = contenders[int(np.argmin([fits[j] for j in contenders]))]
                pair.append(population[w])
            if rng.random() < config.crossover_rate:
                mask = rng.random(n) < 0.5
                kids = (np.where(mask, pair[1], pair[0]),
                        np.where(mask, pair[0], pair[1]))
            else:
                kids = (pair[0].copy(), pair[1].copy())
            for kid in kids:
                kid ^= rng.random(n) < mut_rate
                offspring.append(kid)
        population = offspring[:config.population]
        fits = [fitness(ch) for ch in population]
        gen_best = int(np.argmin(fits))
        if fits[gen_best] < best_fit:
            best_fit = fits[gen_best]
            best = population[gen_best].copy()

    picked = set(np.flatnonzero(best).tolist())
    picked = repair(g, picked, cost, RepairPolicy.GREEDY)
    total = float(sum(c[v] for v in sorted(picked)))
    return NexusSet(selected=frozenset(picked), total_cost=total,
                    feasible=verify_cover(g, picked))
