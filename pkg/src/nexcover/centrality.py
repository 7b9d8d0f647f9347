"""Betweenness centrality and the centrality-driven selection cost.

The cost of selecting node v is

    1 / (deg(v)^2 * ln(1 + C_B(v) + eps))

with C_B the exact unnormalized betweenness (each unordered pair counted
once, endpoints excluded).  Natural logarithm throughout; any other base
would rescale all costs uniformly without changing the optimizer set.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import DegenerateGraph, InvalidSpec
from .graphs import Graph


@dataclass(frozen=True)
class CentralityVector:
    """Per-node betweenness values; leaves and complete-graph nodes are 0."""

    values: np.ndarray


@dataclass(frozen=True)
class CostParams:
    """epsilon keeps the logarithm away from zero for zero-betweenness nodes."""

    epsilon: float = 1e-6

    def __post_init__(self):
        if self.epsilon <= 0:
            raise InvalidSpec(f"epsilon must be > 0, got {self.epsilon}")


@dataclass(frozen=True)
class CostVector:
    """Strictly positive per-node selection costs."""

    values: np.ndarray


def betweenness(g: Graph) -> CentralityVector:
    """Exact betweenness of every node via per-source shortest-path counting.

    Runs in O(n*m) on the unweighted graph.  Pairs {s, t} are unordered and
    counted once; paths ending at v contribute nothing to v.
    """
    indptr, indices = g.adjacency_csr
    values = _kernels.brandes_centrality(indptr, indices, g.n)
    values.flags.writeable = False
    return CentralityVector(values)


def cost_vector(g: Graph, cb: CentralityVector,
                params: CostParams = CostParams()) -> CostVector:
    """Selection costs from degree and betweenness.

    Raises
    ------
    DegenerateGraph
        If the graph has a single node or an isolated node (deg = 0 makes
        the cost undefined; single-node graphs are handled by the caller).
    """
    if g.n == 1:
        raise DegenerateGraph("cost undefined for a single-node graph")
    deg = g.degrees.astype(np.float64)
    if (deg == 0).any():
        raise DegenerateGraph("cost undefined for isolated nodes")
    if len(cb.values) != g.n:
        raise InvalidSpec("centrality vector length does not match graph")
    values = 1.0 / (deg ** 2 * np.log1p(cb.values + params.epsilon))
    values.flags.writeable = False
    return CostVector(values)
