"""Moving rules: ways a jump of squared length L splits across coordinates.

A rule is the multiset of nonzero coordinate changes of one jump, kept in
non-increasing order.  Zero components are dropped, so the canonical (0, 3)
threeleaper move is just the rule (3,).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .model import GridSpec, LeaperSpec


@dataclass(frozen=True, order=True)
class MovingRule:
    deltas: tuple[int, ...]

    def __post_init__(self):
        d = tuple(int(x) for x in self.deltas)
        if not d or min(d) < 1:
            raise DomainError("a moving rule needs at least one positive delta")
        object.__setattr__(self, "deltas", tuple(sorted(d, reverse=True)))

    @property
    def L(self) -> int:
        return sum(x * x for x in self.deltas)

    def __len__(self):
        return len(self.deltas)

    def __str__(self):
        return "(" + ",".join(map(str, self.deltas)) + ")"


def enumerate_rules(L: int, max_component: int, max_length: int) -> list[MovingRule]:
    """All multisets of integers in [1, max_component], at most ``max_length``
    of them, whose squares sum to ``L``.

    Returned sorted in decreasing lexicographic order of the delta tuples.
    """
    if L < 1 or max_component < 1:
        raise DomainError("need L >= 1 and max_component >= 1")
    found: list[tuple[int, ...]] = []
    prefix: list[int] = []

    def extend(remaining: int, cap: int):
        if remaining == 0:
            found.append(tuple(prefix))
            return
        if len(prefix) == max_length:
            return
        # even with every further delta equal to cap we must reach remaining
        if remaining > cap * cap * (max_length - len(prefix)):
            return
        for x in range(min(cap, math.isqrt(remaining)), 0, -1):
            prefix.append(x)
            extend(remaining - x * x, x)
            prefix.pop()

    extend(L, max_component)
    return [MovingRule(d) for d in found]


def rules_for_grid(leaper: LeaperSpec, grid: GridSpec) -> list[MovingRule]:
    """Rules the leaper can actually use on ``grid``."""
    return enumerate_rules(leaper.L, grid.n - 1, grid.k) if grid.n > 1 else []
