"""Backtracking search for Hamiltonian tours of the Hamming-distance-d graph
on the binary k-cube.

Vertices are k-bit words; a jump XORs the current word with one of the
C(k, d) weight-d masks.  The engine always starts at the all-zero vertex
(the graph is vertex transitive) and, with symmetry breaking on, also fixes
the first jump and canonicalises the second one under the coordinate
permutations that keep the first jump in place.  Ordering heuristics only
reorder candidates, and the single pruning rule in closed mode (stop once
every neighbour of the start is used) discards only branches that cannot
close, so an exhausted search is a proof that no tour exists.
"""
from __future__ import annotations

import enum
import itertools
import time
from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import _kernel
from .errors import ConfigError, DomainError, RangeError
from .model import MAX_BINARY_K, Closure, Tour

DEFAULT_NODE_LIMIT = 10**12
_ORDER_TABLE_LIMIT = 1 << 27


class Ordering(enum.Enum):
    LEXICOGRAPHIC = "lexicographic"
    LEAST_DEGREE_FIRST = "least-degree"


class Verdict(enum.Enum):
    FOUND = "Found"
    NO_TOUR_EXISTS = "NoTourExists"
    LIMIT_REACHED = "LimitReached"


@dataclass(frozen=True)
class SearchConfig:
    """Search parameters.

    ``d > k`` is accepted and answered with NoTourExists without search.
    ``solutions_wanted=None`` enumerates every tour.
    """

    k: int
    d: int
    mode: Closure = Closure.CLOSED
    node_limit: int = DEFAULT_NODE_LIMIT
    time_limit: float | None = None
    ordering: Ordering = Ordering.LEXICOGRAPHIC
    symmetry_breaking: bool = True
    solutions_wanted: int | None = 1

    def __post_init__(self):
        if not 1 <= self.k <= MAX_BINARY_K:
            raise ConfigError(f"k must lie in [1, {MAX_BINARY_K}], got {self.k}")
        if self.d < 1:
            raise ConfigError(f"d must be positive, got {self.d}")
        if self.node_limit < 1:
            raise ConfigError("node_limit must be at least 1")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ConfigError("time_limit must be positive")
        if self.solutions_wanted is not None and self.solutions_wanted < 1:
            raise ConfigError("solutions_wanted must be at least 1 (or None for all)")
        if not isinstance(self.mode, Closure) or not isinstance(self.ordering, Ordering):
            raise ConfigError("mode and ordering must be Closure and Ordering members")


@dataclass
class SearchStats:
    nodes: int = 0
    max_depth: int = 0
    backtracks: int = 0
    elapsed_ms: float = 0.0


@dataclass
class SearchOutcome:
    verdict: Verdict
    tours: list[Tour] = field(default_factory=list)
    stats: SearchStats = field(default_factory=SearchStats)
    note: str = ""

    def record(self) -> dict:
        """Machine-readable summary with a stable field set."""
        return {
            "verdict": self.verdict.value,
            "nodes": self.stats.nodes,
            "depth": self.stats.max_depth,
            "elapsed_ms": round(self.stats.elapsed_ms, 3),
            "backtracks": self.stats.backtracks,
            "tours": len(self.tours),
        }


def build_move_masks(k: int, d: int) -> list[int]:
    """The C(k, d) weight-d masks, in lexicographic order of their bit sets."""
    if not 1 <= d <= k:
        raise DomainError(f"need 1 <= d <= k, got d={d}, k={k}")
    return [sum(1 << i for i in bits) for bits in itertools.combinations(range(k), d)]


def gf2_rank(vectors) -> int:
    basis: list[int] = []
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    return len(basis)


def _structural_refutation(cfg: SearchConfig) -> str | None:
    """Reason the move graph has no Hamiltonian cycle/path at all, if any."""
    if cfg.d > cfg.k:
        return f"no weight-{cfg.d} masks exist in {cfg.k} bits"
    # the move graph is a Cayley graph of Z_2^k; it is connected iff the
    # masks span the whole group
    rank = gf2_rank(build_move_masks(cfg.k, cfg.d))
    if rank < cfg.k:
        return f"the jumps span a rank-{rank} subgroup, so the move graph is disconnected"
    return None


class _State:
    """Kernel arrays for one (possibly prefixed) search."""

    def __init__(self, cfg: SearchConfig, masks: np.ndarray, prefix=(0,)):
        n_vertices = 1 << cfg.k
        m = masks.shape[0]
        self.least_degree = cfg.ordering is Ordering.LEAST_DEGREE_FIRST
        if self.least_degree and n_vertices * m > _ORDER_TABLE_LIMIT:
            raise ConfigError(
                f"least-degree ordering needs a {n_vertices} x {m} table; use lexicographic"
            )
        self.path = np.zeros(n_vertices, dtype=np.int32)
        self.nxt = np.zeros(n_vertices, dtype=np.int32)
        self.visited = np.zeros(max(1, n_vertices >> 6), dtype=np.uint64)
        self.order = np.zeros((n_vertices, m) if self.least_degree else (1, 1), dtype=np.int32)
        self.stats = np.zeros(5, dtype=np.int64)
        start_free = m
        for depth, w in enumerate(prefix):
            self.path[depth] = w
            _kernel._set_visited(self.visited, w)
            if w.bit_count() == cfg.d:
                start_free -= 1
        self.prefix_len = len(prefix)
        last = self.prefix_len - 1
        if self.least_degree:
            _kernel._order_candidates(masks, self.visited, prefix[-1], self.order[last])
        self.stats[_kernel.NODES] = len(prefix)
        self.stats[_kernel.MAX_DEPTH] = last
        self.stats[_kernel.DEPTH] = last
        self.stats[_kernel.START_FREE] = start_free


def _search(cfg: SearchConfig, prefix=(0,), progress=None, progress_interval=10**7, chunk=None) -> SearchOutcome:
    began = time.perf_counter()
    stats = SearchStats()
    refutation = _structural_refutation(cfg)
    if refutation is not None:
        stats.elapsed_ms = (time.perf_counter() - began) * 1e3
        return SearchOutcome(Verdict.NO_TOUR_EXISTS, [], stats, refutation)

    masks = np.array(build_move_masks(cfg.k, cfg.d), dtype=np.int64)
    state = _State(cfg, masks, prefix)
    n_vertices = 1 << cfg.k
    closed = cfg.mode is Closure.CLOSED
    if chunk is None:
        chunk = max(256, (1 << 20) // (masks.shape[0] if state.least_degree else 1))
    next_report = progress_interval
    tours: list[Tour] = []
    code = _kernel.PAUSED
    while True:
        done = int(state.stats[_kernel.NODES])
        if done >= cfg.node_limit:
            code = _kernel.PAUSED
            break
        if cfg.time_limit is not None and time.perf_counter() - began > cfg.time_limit:
            code = _kernel.PAUSED
            break
        code = _kernel.run(
            masks, n_vertices, cfg.d, closed, cfg.symmetry_breaking, state.least_degree,
            state.path, state.nxt, state.visited, state.order, state.stats,
            min(cfg.node_limit, done + chunk), state.prefix_len,
        )
        if progress is not None and state.stats[_kernel.NODES] >= next_report:
            next_report += progress_interval
            progress(_snapshot(state, began))
        if code == _kernel.FOUND:
            tours.append(Tour.from_words(cfg.k, state.path.astype(np.int64), cfg.d, cfg.mode))
            if cfg.solutions_wanted is not None and len(tours) >= cfg.solutions_wanted:
                break
        elif code == _kernel.EXHAUSTED:
            break

    stats = _snapshot(state, began)
    if tours:
        verdict = Verdict.FOUND
    elif code == _kernel.EXHAUSTED:
        verdict = Verdict.NO_TOUR_EXISTS
    else:
        verdict = Verdict.LIMIT_REACHED
    return SearchOutcome(verdict, tours, stats)


def _snapshot(state: _State, began: float) -> SearchStats:
    return SearchStats(
        nodes=int(state.stats[_kernel.NODES]),
        max_depth=int(state.stats[_kernel.MAX_DEPTH]),
        backtracks=int(state.stats[_kernel.BACKTRACKS]),
        elapsed_ms=(time.perf_counter() - began) * 1e3,
    )


def find_tours(
    config: SearchConfig,
    progress: Callable[[SearchStats], None] | None = None,
    progress_interval: int = 10**7,
) -> SearchOutcome:
    """Depth-first search for tours from the all-zero vertex.

    ``progress`` is called with a stats snapshot roughly every
    ``progress_interval`` expanded nodes.  Budgets never raise: running out
    yields LimitReached (or Found, if some tours were already collected).
    """
    if not isinstance(config, SearchConfig):
        raise ConfigError("find_tours expects a SearchConfig")
    return _search(config, (0,), progress, progress_interval)


def _prefixes(cfg: SearchConfig, masks: list[int]) -> list[tuple[int, int, int]]:
    firsts = masks[:1] if cfg.symmetry_breaking else masks
    out = []
    for v1 in firsts:
        for mask in masks:
            v2 = v1 ^ mask
            if v2 == 0:
                continue
            if cfg.symmetry_breaking and not _kernel._canonical_second(v2, cfg.d):
                continue
            out.append((0, v1, v2))
    return out


def _run_prefix(args):
    cfg, prefix = args
    return _search(cfg, prefix)


def find_tours_parallel(config: SearchConfig, jobs: int) -> SearchOutcome:
    """Split the search by its first two jumps and run the parts in processes.

    Parts are merged in the order the sequential search would visit them, so
    when every part finishes inside its budget the result equals
    ``find_tours(config)``.  Budgets apply per part.
    """
    if jobs < 1:
        raise ConfigError("jobs must be at least 1")
    if jobs == 1 or config.k < 2 or _structural_refutation(config) is not None:
        return find_tours(config)
    began = time.perf_counter()
    prefixes = _prefixes(config, build_move_masks(config.k, config.d))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(_run_prefix, [(config, p) for p in prefixes]))
    tours: list[Tour] = []
    stats = SearchStats()
    limited = False
    for part in parts:
        stats.nodes += part.stats.nodes - 2  # the shared root and first jump
        stats.backtracks += part.stats.backtracks
        stats.max_depth = max(stats.max_depth, part.stats.max_depth)
        limited |= part.verdict is Verdict.LIMIT_REACHED
        tours.extend(part.tours)
    # nodes for the shared prefix (root and, per distinct first jump, one expansion)
    stats.nodes += 1 + len({p[1] for p in prefixes})
    stats.elapsed_ms = (time.perf_counter() - began) * 1e3
    if config.solutions_wanted is not None:
        tours = tours[: config.solutions_wanted]
    if tours:
        verdict = Verdict.FOUND
    elif limited:
        verdict = Verdict.LIMIT_REACHED
    else:
        verdict = Verdict.NO_TOUR_EXISTS
    return SearchOutcome(verdict, tours, stats)


def count_tours_small(k: int, d: int) -> int:
    """Directed closed Hamiltonian tours from the all-zero vertex, no symmetry
    reduction, counted by dynamic programming over visited sets.

    Deliberately shares no code with the search engine; it serves as its oracle.
    """
    if k > 4:
        raise RangeError("count_tours_small is limited to k <= 4")
    if k < 1 or d < 1:
        raise DomainError("need k >= 1 and d >= 1")
    size = 2**k
    adjacent = [
        [w for w in range(size) if bin(v ^ w).count("1") == d] for v in range(size)
    ]
    if size == 2:
        return 1 if 1 in adjacent[0] else 0
    full = (1 << size) - 1
    # ways[visited][end]: directed paths from vertex 0 covering `visited`
    ways: dict[int, dict[int, int]] = {1: {0: 1}}
    for visited in range(1, full + 1, 2):
        ends = ways.pop(visited, None)
        if not ends:
            continue
        if visited == full:
            return sum(c for v, c in ends.items() if 0 in adjacent[v])
        for v, c in ends.items():
            for w in adjacent[v]:
                if not visited >> w & 1:
                    row = ways.setdefault(visited | 1 << w, {})
                    row[w] = row.get(w, 0) + c
    return 0


__all__ = [
    "Ordering",
    "SearchConfig",
    "SearchOutcome",
    "SearchStats",
    "Verdict",
    "build_move_masks",
    "count_tours_small",
    "find_tours",
    "find_tours_parallel",
    "gf2_rank",
]
