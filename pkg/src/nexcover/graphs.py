"""Graph representation, coverage matrix, and the random-graph generators.

All graphs are undirected, simple, and use dense integer node ids
0..n-1.  Every generator in this module returns a connected graph and is
fully reproducible from its seed.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import ConnectivityFailure, InvalidSpec, OutOfRange

ER_RETRY_BUDGET = 1000


class Graph:
    """Immutable undirected simple graph.

    Parameters
    ----------
    n : int
        Node count, >= 1.
    edges : iterable of (u, v)
        Unordered pairs with u != v; duplicates are rejected.
    """

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 1:
            raise InvalidSpec(f"node count must be >= 1, got {n}")
        canon = set()
        for u, v in edges:
            if u == v:
                raise InvalidSpec(f"self-loop at node {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidSpec(f"edge ({u},{v}) outside 0..{n - 1}")
            pair = (u, v) if u < v else (v, u)
            if pair in canon:
                raise InvalidSpec(f"duplicate edge {pair}")
            canon.add(pair)
        self.n = n
        self.edges = tuple(sorted(canon))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def degrees(self) -> np.ndarray:
        deg = np.zeros(self.n, dtype=np.int64)
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        deg.flags.writeable = False
        return deg

    def degree(self, v: int) -> int:
        """Number of edges incident to v."""
        if not 0 <= v < self.n:
            raise OutOfRange(f"node {v} not in 0..{self.n - 1}")
        return int(self.degrees[v])

    @cached_property
    def adjacency_csr(self) -> tuple[np.ndarray, np.ndarray]:
        """Open-neighborhood CSR arrays (indptr, indices), self excluded."""
        return self._build_csr(include_self=False)

    @cached_property
    def coverage_csr(self) -> tuple[np.ndarray, np.ndarray]:
        """Closed-neighborhood CSR arrays (indptr, indices), self included."""
        return self._build_csr(include_self=True)

    def _build_csr(self, include_self: bool) -> tuple[np.ndarray, np.ndarray]:
        n = self.n
        deg = self.degrees.copy()
        if include_self:
            deg = deg + 1
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(deg, out=indptr[1:])
        indices = np.empty(indptr[-1], dtype=np.int64)
        fill = indptr[:-1].copy()
        if include_self:
            for v in range(n):
                indices[fill[v]] = v
                fill[v] += 1
        for u, v in self.edges:
            indices[fill[u]] = v
            fill[u] += 1
            indices[fill[v]] = u
            fill[v] += 1
        # sorted neighbor lists make kernel traversal order canonical
        for v in range(n):
            indices[indptr[v]:indptr[v + 1]].sort()
        indptr.flags.writeable = False
        indices.flags.writeable = False
        return indptr, indices

    def is_connected(self) -> bool:
        if self.n == 1:
            return True
        indptr, indices = self.adjacency_csr
        seen = np.zeros(self.n, dtype=bool)
        stack = [0]
        seen[0] = True
        while stack:
            u = stack.pop()
            for w in indices[indptr[u]:indptr[u + 1]]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(int(w))
        return bool(seen.all())

    def with_new_nodes(self, k: int, new_edges: Sequence[tuple[int, int]]) -> "Graph":
        """Return a copy with k extra nodes (ids n..n+k-1) and extra edges."""
        return Graph(self.n + k, list(self.edges) + list(new_edges))

    def __eq__(self, other) -> bool:
        return (isinstance(other, Graph) and self.n == other.n
                and self.edges == other.edges)

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class CoverageMatrix:
    """Binary matrix with entries[u][v] = 1 iff v covers u (v == u or adjacent)."""

    entries: np.ndarray

    @property
    def n(self) -> int:
        return self.entries.shape[0]


def build_coverage_matrix(g: Graph) -> CoverageMatrix:
    """Adjacency matrix plus identity: row u lists every node covering u."""
    a = np.eye(g.n, dtype=np.uint8)
    for u, v in g.edges:
        a[u, v] = 1
        a[v, u] = 1
    a.flags.writeable = False
    return CoverageMatrix(a)


class GraphFamily(str, Enum):
    TREE = "tree"
    ERDOS_RENYI = "erdos-renyi"
    BARABASI_ALBERT = "barabasi-albert"
    INTERNET_AS = "internet-as"


@dataclass(frozen=True)
class GeneratorSpec:
    """Parameters for one random-graph draw.

    p is required for Erdős–Rényi (in (0, 1]); m for Barabási–Albert
    (1 <= m < n).  The other families take no extra parameters.
    """

    family: GraphFamily
    n: int
    seed: int
    p: float | None = None
    m: int | None = None

    def __post_init__(self):
        if self.n < 1:
            raise InvalidSpec(f"n must be >= 1, got {self.n}")
        fam = GraphFamily(self.family)
        object.__setattr__(self, "family", fam)
        if fam is GraphFamily.ERDOS_RENYI:
            if self.n > 1 and (self.p is None or not 0.0 < self.p <= 1.0):
                raise InvalidSpec(f"Erdős–Rényi needs p in (0,1], got {self.p}")
        elif fam is GraphFamily.BARABASI_ALBERT:
            if self.n > 1 and (self.m is None or not 1 <= self.m < self.n):
                raise InvalidSpec(
                    f"Barabási–Albert needs 1 <= m < n, got m={self.m}, n={self.n}"
                )


def default_er_probability(n: int) -> float:
    """Benchmark default edge probability, twice the connectivity threshold."""
    if n <= 2:
        return 1.0
    return min(1.0, 2.0 * math.log(n) / n)


def generate(spec: GeneratorSpec) -> Graph:
    """Draw one connected graph; identical specs give identical edge sets."""
    rng = np.random.default_rng(spec.seed)
    if spec.n == 1:
        return Graph(1, [])
    if spec.family is GraphFamily.TREE:
        return _random_tree(spec.n, rng)
    if spec.family is GraphFamily.ERDOS_RENYI:
        return _erdos_renyi(spec.n, spec.p, rng)
    if spec.family is GraphFamily.BARABASI_ALBERT:
        return _barabasi_albert(spec.n, spec.m, rng)
    return _internet_as(spec.n, rng)


def decode_prufer(sequence: Sequence[int], n: int) -> Graph:
    """Decode a Prüfer sequence of length n-2 into its labeled tree."""
    if n < 2:
        raise InvalidSpec("Prüfer decoding needs n >= 2")
    seq = list(sequence)
    if len(seq) != n - 2:
        raise InvalidSpec(f"sequence length must be n-2={n - 2}, got {len(seq)}")
    if any(not 0 <= s < n for s in seq):
        raise InvalidSpec("sequence labels must lie in 0..n-1")
    remaining_deg = [1] * n
    for s in seq:
        remaining_deg[s] += 1
    leaves = [v for v in range(n) if remaining_deg[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for s in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, s))
        remaining_deg[s] -= 1
        if remaining_deg[s] == 1:
            heapq.heappush(leaves, s)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return Graph(n, edges)


def _random_tree(n: int, rng: np.random.Generator) -> Graph:
    if n == 2:
        return Graph(2, [(0, 1)])
    seq = rng.integers(0, n, size=n - 2).tolist()
    return decode_prufer(seq, n)


def _erdos_renyi(n: int, p: float, rng: np.random.Generator) -> Graph:
    iu, ju = np.triu_indices(n, k=1)
    for _ in range(ER_RETRY_BUDGET):
        mask = rng.random(iu.size) < p
        g = Graph(n, zip(iu[mask].tolist(), ju[mask].tolist()))
        if g.is_connected():
            return g
    raise ConnectivityFailure(
        f"no connected G({n},{p}) draw within {ER_RETRY_BUDGET} attempts"
    )


def _barabasi_albert(n: int, m: int, rng: np.random.Generator) -> Graph:
    # repeated-endpoint list gives degree-proportional target sampling
    edges = []
    targets = list(range(m))
    repeated: list[int] = []
    for v in range(m, n):
        for t in targets:
            edges.append((t, v))
        repeated.extend(targets)
        repeated.extend([v] * len(targets))
        picked: set[int] = set()
        while len(picked) < min(m, v + 1):
            picked.add(repeated[int(rng.integers(0, len(repeated)))])
        targets = sorted(picked)
    return Graph(n, edges)


# Simplified three-tier topology: a tier-1 clique, tier-2 providers
# attaching preferentially into the core, and single/dual-homed tier-3
# leaves on the least-loaded providers.
IAS_TIER1_FRACTION = 0.05
IAS_TIER2_FRACTION = 0.35
IAS_DUAL_HOME_PROB = 0.15


def _internet_as(n: int, rng: np.random.Generator) -> Graph:
    n1 = max(1, round(IAS_TIER1_FRACTION * n))
    n2 = max(1, math.ceil(IAS_TIER2_FRACTION * n)) if n - n1 >= 2 else 0
    n2 = min(n2, n - n1)
    edges = []
    deg = np.zeros(n)
    for i in range(n1):
        for j in range(i + 1, n1):
            edges.append((i, j))
            deg[i] += 1
            deg[j] += 1
    for v in range(n1, n1 + n2):
        weights = deg[:v] + 1.0
        t = int(rng.choice(v, p=weights / weights.sum()))
        edges.append((t, v))
        deg[t] += 1
        deg[v] += 1
    providers = np.arange(n1, n1 + n2) if n2 else np.arange(n1)
    for v in range(n1 + n2, n):
        k = 2 if rng.random() < IAS_DUAL_HOME_PROB else 1
        k = min(k, len(providers))
        weights = 1.0 / (1.0 + deg[providers])
        chosen = rng.choice(providers, size=k, replace=False,
                            p=weights / weights.sum())
        for t in chosen:
            edges.append((int(t), v))
            deg[int(t)] += 1
            deg[v] += 1
    return Graph(n, edges)


def write_edge_list(g: Graph, path) -> None:
    """Plain-text edge list: first line ``n <count>``, then one u-v pair per line."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"n {g.n}\n")
        for u, v in g.edges:
            fh.write(f"{u} {v}\n")


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().split()
        if len(header) != 2 or header[0] != "n":
            raise InvalidSpec(f"bad edge-list header in {path}")
        n = int(header[1])
        edges = []
        for line in fh:
            line = line.strip()
            if not line:
                continue
            u, v = line.split()
            edges.append((int(u), int(v)))
    return Graph(n, edges)
