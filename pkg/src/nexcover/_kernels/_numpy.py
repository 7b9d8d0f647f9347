"""Pure numpy/scipy kernels, the fallback for NEXCOVER_BACKEND=numpy."""

import numpy as np
import scipy.sparse as sp


def _csr(indptr, indices, n):
    data = np.ones(len(indices))
    return sp.csr_matrix((data, indices, indptr), shape=(n, n))


def brandes_centrality(indptr, indices, n):
    """Batched level-synchronous Brandes over the open adjacency CSR.

    Sources are processed in chunks; each chunk runs a vectorised BFS
    (path counting) followed by the backward dependency sweep.
    """
    A = _csr(indptr, indices, n)
    cb = np.zeros(n)
    chunk = 128
    for lo in range(0, n, chunk):
        hi = min(lo + chunk, n)
        s = hi - lo
        sources = np.arange(lo, hi)
        dist = np.full((s, n), -1, dtype=np.int64)
        sigma = np.zeros((s, n))
        dist[np.arange(s), sources] = 0
        sigma[np.arange(s), sources] = 1.0
        frontiers = []
        front = np.zeros((s, n), dtype=bool)
        front[np.arange(s), sources] = True
        level = 0
        while front.any():
            frontiers.append(front)
            contrib = (sigma * front) @ A
            new = (contrib > 0) & (dist < 0)
            dist[new] = level + 1
            sigma[new] = contrib[new]
            front = new
            level += 1
        delta = np.zeros((s, n))
        for lvl in range(len(frontiers) - 1, 0, -1):
            front = frontiers[lvl]
            prev = frontiers[lvl - 1]
            coeff = np.zeros((s, n))
            np.divide(1.0 + delta, sigma, out=coeff, where=front)
            delta += sigma * ((coeff * front) @ A) * prev
        total = np.zeros((s, n))
        for front in frontiers[1:]:
            total += delta * front
        total[np.arange(s), sources] = 0.0
        cb += total.sum(axis=0)
    return 0.5 * cb


def pdhg_block(indptr, indices, c, chat, x, y, xsum, ysum, tau, ssc, k):
    """Vectorised twin of the numba block; mutates x, y, xsum, ysum."""
    n = x.shape[0]
    A = _csr(indptr, indices, n)
    for _ in range(k):
        xn = np.clip(x - tau * (c - A @ (chat * y)), 0.0, 1.0)
        d = 2.0 * xn - x
        np.maximum(y + ssc * (1.0 - A @ d), 0.0, out=y)
        x[:] = xn
        xsum += x
        ysum += y


def greedy_extend(indptr, indices, cost, covered, selected):
    """Round-based greedy completion; ties resolve to the lowest id."""
    n = cost.shape[0]
    A = _csr(indptr, indices, n)
    added = []
    while not covered.all():
        newcov = A @ (~covered).astype(np.float64)
        ratio = np.where(newcov > 0, newcov / cost, -1.0)
        v = int(np.argmax(ratio))
        selected[v] = True
        added.append(v)
        covered[indices[indptr[v]:indptr[v + 1]]] = True
    return np.array(added, dtype=np.int64)
