"""Resumable depth-first Hamiltonian tour kernel over the binary k-cube.

The kernel works on plain numpy arrays so it can be compiled by numba; when
numba is missing the same code runs as ordinary Python (slowly).  All state
lives in a ``KernelState``-style bundle of arrays owned by the caller, which
lets the driver run the search in node chunks, check wall time between
chunks, and resume exactly where it stopped.
"""
import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f

# kernel return codes
FOUND = 0
EXHAUSTED = 1
PAUSED = 2

# stats slots
NODES = 0
BACKTRACKS = 1
MAX_DEPTH = 2
DEPTH = 3
START_FREE = 4


@njit(cache=True)
def _is_visited(visited, w):
    return (visited[w >> 6] >> np.uint64(w & 63)) & np.uint64(1)


@njit(cache=True)
def _set_visited(visited, w):
    visited[w >> 6] |= np.uint64(1) << np.uint64(w & 63)


@njit(cache=True)
def _clear_visited(visited, w):
    visited[w >> 6] &= ~(np.uint64(1) << np.uint64(w & 63))


@njit(cache=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def _canonical_second(w, d):
    # w = first ^ second move; canonical iff its set bits form a prefix of
    # the low block [0, d) and a prefix of the high block [d, k)
    low = w & ((1 << d) - 1)
    high = w >> d
    return (low & (low + 1)) == 0 and (high & (high + 1)) == 0


@njit(cache=True)
def _order_candidates(masks, visited, v, row):
    """Fill ``row`` with mask indices sorted by the number of unvisited
    neighbours of their target, ties by index; visited targets go last."""
    m = masks.shape[0]
    deg = np.empty(m, dtype=np.int64)
    for i in range(m):
        w = v ^ masks[i]
        if _is_visited(visited, w):
            deg[i] = 1 << 40
            continue
        c = 0
        for j in range(m):
            if not _is_visited(visited, w ^ masks[j]):
                c += 1
        deg[i] = c * m + i
    idx = np.argsort(deg)
    for i in range(m):
        row[i] = idx[i]


@njit(cache=True)
def run(masks, n_vertices, d, closed, symmetry, least_degree,
        path, nxt, visited, order, stats, node_stop, prefix_len):
    """Advance the search until a tour is completed, the space is exhausted,
    or ``stats[NODES]`` reaches ``node_stop``.

    ``path[:prefix_len]`` is a forced prefix (used by the parallel driver);
    the search never backtracks into it.  When a tour is returned, the state
    is left so that the next call continues with the following tour.
    """
    m = masks.shape[0]
    depth = stats[DEPTH]
    start_free = stats[START_FREE]
    floor = prefix_len - 1
    last = n_vertices - 1
    while True:
        if depth < floor:
            stats[DEPTH] = depth
            stats[START_FREE] = start_free
            return EXHAUSTED
        v = path[depth]
        i = nxt[depth]
        if i >= m:
            # retreat from v
            if depth > floor:
                _clear_visited(visited, v)
                if _popcount(v) == d:
                    start_free += 1
                stats[BACKTRACKS] += 1
            depth -= 1
            continue
        nxt[depth] = i + 1
        if symmetry and depth == 0 and i > 0:
            nxt[depth] = m
            continue
        if least_degree and not (symmetry and depth == 0):
            w = v ^ masks[order[depth, i]]
        else:
            w = v ^ masks[i]
        if _is_visited(visited, w):
            continue
        if symmetry and depth == 1 and not _canonical_second(w, d):
            continue
        if stats[NODES] >= node_stop:
            nxt[depth] = i
            stats[DEPTH] = depth
            stats[START_FREE] = start_free
            return PAUSED
        stats[NODES] += 1
        _set_visited(visited, w)
        if _popcount(w) == d:
            start_free -= 1
        depth += 1
        path[depth] = w
        nxt[depth] = 0
        if depth > stats[MAX_DEPTH]:
            stats[MAX_DEPTH] = depth
        if depth == last:
            nxt[depth] = m
            closes = _popcount(w) == d
            if closes == closed:
                stats[DEPTH] = depth
                stats[START_FREE] = start_free
                return FOUND
        elif closed and start_free == 0:
            # no unvisited neighbour of the start is left to close on
            nxt[depth] = m
        elif least_degree:
            _order_candidates(masks, visited, w, order[depth])
