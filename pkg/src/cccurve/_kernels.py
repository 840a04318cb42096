"""Per-source BFS kernels compiled with numba.

Sources are split into a fixed number of contiguous blocks.  Each block
accumulates into its own row and rows are summed in block order, so the
floating-point result does not depend on how many threads run the blocks.
"""

import os

import numba
import numpy as np
from numba import njit, prange

# try TBB last: old system TBB builds only produce a warning
if "NUMBA_THREADING_LAYER_PRIORITY" not in os.environ:
    numba.config.THREADING_LAYER_PRIORITY = ["omp", "workqueue", "tbb"]

# Fixed, independent of the thread count.
MAX_BLOCKS = 32


def n_blocks(n):
    return max(1, min(n, MAX_BLOCKS))


@njit(cache=True, parallel=True)
def bfs_distance_sums(ptr, idx, n, nblocks):
    """For each source: vertices reached (incl. itself), sum of distances,
    sum of reciprocal distances."""
    reach = np.zeros(n, dtype=np.int64)
    dsum = np.zeros(n, dtype=np.float64)
    hsum = np.zeros(n, dtype=np.float64)
    for b in prange(nblocks):
        lo = b * n // nblocks
        hi = (b + 1) * n // nblocks
        dist = np.full(n, -1, dtype=np.int64)
        queue = np.empty(n, dtype=np.int64)
        for s in range(lo, hi):
            dist[s] = 0
            queue[0] = s
            head, tail = 0, 1
            total = 0.0
            harm = 0.0
            while head < tail:
                v = queue[head]
                head += 1
                dv = dist[v]
                for e in range(ptr[v], ptr[v + 1]):
                    w = idx[e]
                    if dist[w] < 0:
                        dist[w] = dv + 1
                        queue[tail] = w
                        tail += 1
                        total += dv + 1
                        harm += 1.0 / (dv + 1)
            reach[s] = tail
            dsum[s] = total
            hsum[s] = harm
            for i in range(tail):
                dist[queue[i]] = -1
    return reach, dsum, hsum


@njit(cache=True, parallel=True)
def brandes(ptr, idx, n, kmax, nblocks):
    """Shortest-path accumulation from every source, depth-limited to kmax.

    Returns ``(between, through, total)``: ``between[v]`` is the summed pair
    dependency sigma_st(v)/sigma_st, ``through[v]`` the summed count
    sigma_st(v), both over ordered pairs (s, t) with s != v != t and
    d(s, t) <= kmax; ``total`` is the summed sigma_st over reachable pairs.
    ``kmax < 0`` means no depth limit.
    """
    between_b = np.zeros((nblocks, n), dtype=np.float64)
    through_b = np.zeros((nblocks, n), dtype=np.float64)
    total_b = np.zeros(nblocks, dtype=np.float64)
    for b in prange(nblocks):
        lo = b * n // nblocks
        hi = (b + 1) * n // nblocks
        dist = np.full(n, -1, dtype=np.int64)
        sigma = np.zeros(n, dtype=np.float64)
        delta = np.zeros(n, dtype=np.float64)
        paths = np.zeros(n, dtype=np.float64)
        order = np.empty(n, dtype=np.int64)
        brow = between_b[b]
        trow = through_b[b]
        for s in range(lo, hi):
            dist[s] = 0
            sigma[s] = 1.0
            order[0] = s
            head, tail = 0, 1
            while head < tail:
                v = order[head]
                head += 1
                dv = dist[v]
                if kmax >= 0 and dv >= kmax:
                    continue
                for e in range(ptr[v], ptr[v + 1]):
                    w = idx[e]
                    if dist[w] < 0:
                        dist[w] = dv + 1
                        order[tail] = w
                        tail += 1
                    if dist[w] == dv + 1:
                        sigma[w] += sigma[v]
            # reverse BFS order: successors are final before their parents
            for i in range(tail - 1, -1, -1):
                v = order[i]
                dv = dist[v]
                for e in range(ptr[v], ptr[v + 1]):
                    w = idx[e]
                    if dist[w] == dv + 1:
                        delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w])
                        paths[v] += 1.0 + paths[w]
                if v != s:
                    brow[v] += delta[v]
                    trow[v] += sigma[v] * paths[v]
                    total_b[b] += sigma[v]
            for i in range(tail):
                v = order[i]
                dist[v] = -1
                sigma[v] = 0.0
                delta[v] = 0.0
                paths[v] = 0.0
    between = np.zeros(n, dtype=np.float64)
    through = np.zeros(n, dtype=np.float64)
    total = 0.0
    for b in range(nblocks):
        between += between_b[b]
        through += through_b[b]
        total += total_b[b]
    return between, through, total
