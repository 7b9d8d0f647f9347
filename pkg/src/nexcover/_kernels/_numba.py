"""Numba-compiled kernels. See package docstring for the shared contract."""

import numpy as np
from numba import njit


@njit(cache=True)
def brandes_centrality(indptr, indices, n):
    """Exact unnormalized betweenness over the open adjacency CSR.

    One BFS + dependency accumulation per source; unordered pairs are
    obtained by halving the ordered-pair total at the end.
    """
    cb = np.zeros(n)
    dist = np.empty(n, np.int64)
    sigma = np.empty(n)
    delta = np.empty(n)
    order = np.empty(n, np.int64)
    for s in range(n):
        for i in range(n):
            dist[i] = -1
            sigma[i] = 0.0
            delta[i] = 0.0
        dist[s] = 0
        sigma[s] = 1.0
        head = 0
        tail = 1
        order[0] = s
        while head < tail:
            v = order[head]
            head += 1
            dv = dist[v]
            sv = sigma[v]
            for t in range(indptr[v], indptr[v + 1]):
                w = indices[t]
                if dist[w] < 0:
                    dist[w] = dv + 1
                    order[tail] = w
                    tail += 1
                if dist[w] == dv + 1:
                    sigma[w] += sv
        # walk the BFS order backwards, pushing dependencies to predecessors
        for idx in range(tail - 1, 0, -1):
            w = order[idx]
            coeff = (1.0 + delta[w]) / sigma[w]
            dw = dist[w]
            for t in range(indptr[w], indptr[w + 1]):
                v = indices[t]
                if dist[v] == dw - 1:
                    delta[v] += sigma[v] * coeff
            cb[w] += delta[w]
    return 0.5 * cb


@njit(cache=True)
def pdhg_block(indptr, indices, c, chat, x, y, xsum, ysum, tau, ssc, k):
    """Run k primal-dual iterations in place over the closed adjacency CSR.

    Covering row u is pre-scaled by chat[u] (the cheapest cost in u's
    closed neighborhood), so y holds the scaled dual; the unscaled dual is
    chat * y.  xsum/ysum accumulate iterates for the restart averages.
    """
    n = x.shape[0]
    xn = np.empty(n)
    d = np.empty(n)
    for _ in range(k):
        for i in range(n):
            acc = 0.0
            for t in range(indptr[i], indptr[i + 1]):
                u = indices[t]
                acc += chat[u] * y[u]
            v = x[i] - tau[i] * (c[i] - acc)
            if v < 0.0:
                v = 0.0
            elif v > 1.0:
                v = 1.0
            xn[i] = v
            d[i] = 2.0 * v - x[i]
        for i in range(n):
            acc = 0.0
            for t in range(indptr[i], indptr[i + 1]):
                acc += d[indices[t]]
            w = y[i] + ssc[i] * (1.0 - acc)
            if w < 0.0:
                w = 0.0
            y[i] = w
        for i in range(n):
            x[i] = xn[i]
            xsum[i] += xn[i]
            ysum[i] += y[i]


@njit(cache=True)
def greedy_extend(indptr, indices, cost, covered, selected):
    """Greedy cover completion: repeatedly add the node maximizing
    (newly covered count) / cost until everything is covered.

    Ties break toward the lowest node id.  Mutates covered/selected and
    returns the added ids in pick order.
    """
    n = cost.shape[0]
    remaining = 0
    for i in range(n):
        if not covered[i]:
            remaining += 1
    added = []
    while remaining > 0:
        best = -1
        best_ratio = 0.0
        for v in range(n):
            cnt = 0
            for t in range(indptr[v], indptr[v + 1]):
                if not covered[indices[t]]:
                    cnt += 1
            if cnt == 0:
                continue
            ratio = cnt / cost[v]
            if ratio > best_ratio:
                best_ratio = ratio
                best = v
        selected[best] = True
        added.append(best)
        for t in range(indptr[best], indptr[best + 1]):
            u = indices[t]
            if not covered[u]:
                covered[u] = True
                remaining -= 1
    return np.array(added, dtype=np.int64)
