"""Box-constrained covering LP:  min c'x  s.t.  Ax >= 1,  0 <= x <= 1.

``solve`` is a restarted primal-dual (PDHG) method specialised to the
coverage structure.  Each covering row is pre-scaled by the cheapest cost
in its closed neighborhood, which bounds every optimal dual by 1 in the
scaled space and makes step sizes meaningful across the huge dynamic
range the centrality cost can produce (leaf costs ~1e6 next to hub costs
~1e-1).  Restarts follow the averaged-iterate scheme with an adaptive
primal/dual step-balance weight.

``reference_solve`` is an independent dense simplex used as a test
oracle.  It starts from the always-feasible vertex x = 1 (the coverage
matrix has a unit diagonal), so no phase-1 is needed, and pivots with
Bland's rule for determinism and cycle-freedom.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from . import _kernels
from .errors import DimensionMismatch, SizeLimit
from .graphs import CoverageMatrix

REFERENCE_SIZE_LIMIT = 50
_CHECK_INTERVAL = 128
_RESTART_SUFFICIENT = 0.2
_RESTART_NECESSARY = 0.8
_OMEGA_CLAMP = 4.0


@dataclass(frozen=True)
class LpProblem:
    """Coverage matrix plus positive cost vector; always feasible (x = 1)."""

    coverage: CoverageMatrix
    cost: np.ndarray

    def __post_init__(self):
        n = self.coverage.n
        cost = np.asarray(self.cost, dtype=np.float64)
        if cost.shape != (n,):
            raise DimensionMismatch(
                f"cost has shape {cost.shape}, coverage is {n}x{n}"
            )
        if not (np.isfinite(cost).all() and (cost > 0).all()):
            raise DimensionMismatch("costs must be finite and strictly positive")
        object.__setattr__(self, "cost", cost)

    @property
    def n(self) -> int:
        return self.coverage.n


@dataclass(frozen=True)
class SolverConfig:
    feas_tol: float = 1e-6
    opt_tol: float = 1e-6
    max_iterations: int = 10_000
    warm_start: np.ndarray | None = None

    def __post_init__(self):
        if self.feas_tol <= 0 or self.opt_tol <= 0:
            raise DimensionMismatch("tolerances must be positive")


@dataclass(frozen=True)
class FractionalSolution:
    """LP output: x in [0,1]^n plus convergence diagnostics."""

    x: np.ndarray
    objective: float
    iterations: int
    converged: bool
    max_infeasibility: float


def _coverage_sparse(coverage: CoverageMatrix) -> sp.csr_matrix:
    return sp.csr_matrix(coverage.entries.astype(np.float64))


def _kkt(A: sp.csr_matrix, c: np.ndarray, x: np.ndarray, y_unscaled: np.ndarray):
    """Primal residual, primal objective, and relative duality gap.

    Any y >= 0 yields the valid dual bound  1'y - sum_j max(0, (A'y - c)_j)
    because the box multipliers can be read off in closed form.
    """
    pres = float(np.maximum(0.0, 1.0 - A @ x).max())
    pobj = float(c @ x)
    dobj = float(y_unscaled.sum() - np.maximum(0.0, A @ y_unscaled - c).sum())
    relgap = abs(pobj - dobj) / (1.0 + abs(pobj) + abs(dobj))
    return pres, pobj, relgap


def solve(problem: LpProblem, config: SolverConfig = SolverConfig()) -> FractionalSolution:
    """Solve the covering LP to the configured tolerances.

    Deterministic for fixed inputs and config.  A warm start (projected
    onto the box; duals always start cold) can change the iteration count
    but not the returned optimum beyond the tolerances.  On hitting
    ``max_iterations`` the best iterate found is returned with
    ``converged=False``.
    """
    n = problem.n
    c = problem.cost
    if config.warm_start is not None:
        w = np.asarray(config.warm_start, dtype=np.float64)
        if w.shape != (n,):
            raise DimensionMismatch(
                f"warm start has shape {w.shape}, problem has n={n}"
            )
        x = np.clip(w, 0.0, 1.0)
    else:
        x = np.zeros(n)

    A = _coverage_sparse(problem.coverage)
    indptr = A.indptr.astype(np.int64)
    indices = A.indices.astype(np.int64)
    degp1 = np.diff(indptr).astype(np.float64)

    # cheapest candidate covering each row bounds that row's optimal dual
    chat = np.empty(n)
    for u in range(n):
        chat[u] = c[indices[indptr[u]:indptr[u + 1]]].min()
    colsum = np.zeros(n)
    for u in range(n):
        colsum[indices[indptr[u]:indptr[u + 1]]] += chat[u]

    omega = 1.0
    tau = 1.0 / (colsum * omega)
    ssc = omega / degp1
    y = np.zeros(n)
    xsum = np.zeros(n)
    ysum = np.zeros(n)

    it = 0
    since_restart = 0
    restarts_err = np.inf
    prev_err = np.inf
    x_restart, y_restart = x.copy(), y.copy()
    best_err = np.inf
    best = (x.copy(), float(c @ x), 1.0)

    while it < config.max_iterations:
        k = min(_CHECK_INTERVAL, config.max_iterations - it)
        _kernels.pdhg_block(indptr, indices, c, chat, x, y, xsum, ysum,
                            tau, ssc, k)
        it += k
        since_restart += k

        x_avg = xsum / since_restart
        y_avg = ysum / since_restart
        cur = _kkt(A, c, x, chat * y)
        avg = _kkt(A, c, x_avg, chat * y_avg)
        for (pres, pobj, relgap), xx in ((cur, x), (avg, x_avg)):
            err = max(pres, relgap)
            if err < best_err:
                best_err = err
                best = (xx.copy(), pobj, pres)
            if pres <= config.feas_tol and relgap <= config.opt_tol:
                return FractionalSolution(
                    x=xx.copy(), objective=pobj, iterations=it,
                    converged=True, max_infeasibility=pres,
                )

        err_cur = max(cur[0], cur[2])
        err_avg = max(avg[0], avg[2])
        cand_err = min(err_cur, err_avg)
        restart = (
            cand_err <= _RESTART_SUFFICIENT * restarts_err
            or (cand_err <= _RESTART_NECESSARY * restarts_err
                and cand_err > prev_err)
            or since_restart >= max(2048, it // 3)
        )
        if restart:
            if err_avg <= err_cur:
                x_new, y_new = x_avg.copy(), y_avg.copy()
            else:
                x_new, y_new = x.copy(), y.copy()
            dx = float(np.linalg.norm(x_new - x_restart))
            dy = float(np.linalg.norm(y_new - y_restart))
            if cand_err <= _RESTART_NECESSARY * restarts_err and dx > 1e-10 and dy > 1e-10:
                step = np.clip(0.5 * np.log(dy / dx / omega),
                               -np.log(_OMEGA_CLAMP), np.log(_OMEGA_CLAMP))
                omega = float(np.clip(omega * np.exp(step), 1e-8, 1e8))
                tau = 1.0 / (colsum * omega)
                ssc = omega / degp1
            x_restart, y_restart = x_new.copy(), y_new.copy()
            x, y = x_new, y_new
            xsum = np.zeros(n)
            ysum = np.zeros(n)
            since_restart = 0
            restarts_err = cand_err
        prev_err = cand_err

    xx, pobj, pres = best
    return FractionalSolution(
        x=xx, objective=pobj, iterations=it, converged=False,
        max_infeasibility=pres,
    )


def reference_solve(problem: LpProblem) -> FractionalSolution:
    """Dense bounded-variable simplex, exact to rounding. Test oracle only.

    Standard form uses surplus s on the covering rows and box slacks w:

        A x - s = 1,   x + w = 1,   x, s, w >= 0.

    The vertex x = 1, s = A1 - 1 >= 0, w = 0 is feasible with a block
    triangular basis, so the method starts there directly.
    """
    n = problem.n
    if n > REFERENCE_SIZE_LIMIT:
        raise SizeLimit(f"reference solver is limited to n <= {REFERENCE_SIZE_LIMIT}")
    A = problem.coverage.entries.astype(np.float64)
    c = problem.cost

    ncols = 3 * n  # order: x (0..n-1), s (n..2n-1), w (2n..3n-1)
    nrows = 2 * n  # covering rows then box rows
    T = np.zeros((nrows, ncols + 1))
    T[:n, :n] = A
    T[:n, n:2 * n] = -np.eye(n)
    T[:n, ncols] = 1.0
    T[n:, :n] = np.eye(n)
    T[n:, 2 * n:3 * n] = np.eye(n)
    T[n:, ncols] = 1.0

    cost_full = np.zeros(ncols)
    cost_full[:n] = c
    basis = np.concatenate([np.arange(n, 2 * n), np.arange(n)])  # s rows, x rows

    # put the tableau in canonical form for the starting basis
    for i in range(n):  # covering row i has basic s_i with coefficient -1
        T[i] *= -1.0
        T[i] += A[i] @ T[n:]  # eliminate the basic x variables from row i
    # rows n.. already canonical for basic x_i

    tol = 1e-11
    pivots = 0
    max_pivots = 200_000
    while True:
        z = cost_full[basis] @ T[:, :ncols] - cost_full  # negated reduced costs
        entering = -1
        for j in range(ncols):  # Bland: lowest eligible index
            if z[j] > tol:
                entering = j
                break
        if entering < 0:
            break
        col = T[:, entering]
        ratios = np.full(nrows, np.inf)
        positive = col > tol
        ratios[positive] = T[positive, ncols] / col[positive]
        rmin = ratios.min()
        if not np.isfinite(rmin):
            raise RuntimeError("covering LP cannot be unbounded")
        leave = -1
        for i in range(nrows):  # Bland: lowest basis index among ties
            if ratios[i] <= rmin + tol and (leave < 0 or basis[i] < basis[leave]):
                leave = i
        T[leave] /= T[leave, entering]
        factors = T[:, entering].copy()
        factors[leave] = 0.0
        T -= np.outer(factors, T[leave])
        basis[leave] = entering
        pivots += 1
        if pivots > max_pivots:
            raise RuntimeError("simplex pivot budget exhausted")

    full = np.zeros(ncols)
    full[basis] = T[:, ncols]
    x = np.clip(full[:n], 0.0, 1.0)
    pres = float(np.maximum(0.0, 1.0 - A @ x).max())
    return FractionalSolution(
        x=x, objective=float(c @ x), iterations=pivots, converged=True,
        max_infeasibility=pres,
    )
