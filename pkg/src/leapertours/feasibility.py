"""Parity and degeneracy tests deciding when no closed tour can exist.

A leaper whose a + b is even only ever changes a vertex's coordinate sum by
an even amount, so it is trapped in the parity class of its start vertex and
can never cover the grid.  On binary grids two further obstructions exist: a
jump longer than k is impossible, and a jump of exactly k pairs every vertex
with its complement and nothing else.
"""
from __future__ import annotations

import enum
from collections.abc import Sequence
from dataclasses import dataclass

from .errors import DomainError, RangeError
from .model import LeaperSpec, Parity

_CODE_LIMIT = 2**63 - 1


class Status(enum.Enum):
    INFEASIBLE_PARITY = "InfeasibleParity"
    INFEASIBLE_NO_MOVE = "InfeasibleNoMove"
    INFEASIBLE_TWO_CYCLE = "InfeasibleTwoCycle"
    KNOWN_TOUR = "KnownTour"
    SEARCHABLE = "Searchable"

    @property
    def infeasible(self) -> bool:
        return self.value.startswith("Infeasible")


@dataclass(frozen=True)
class FeasibilityVerdict:
    status: Status
    reason: str
    parity_class_sizes: tuple[int, int]


# (squared length, smallest k) pairs with closed tours on C(2, k) for every
# k >= that bound.  Wazir, threeleaper and zebra come from the Gray code and
# lifting constructions.  The knight entry is only what this package verifies
# itself: search finds a closed tour at k = 6 and lifting carries it upward
# (tests/test_feasibility.py re-derives it).
KNOWN_TOURS: dict[int, int] = {
    1: 1,
    5: 6,
    9: 11,
    13: 15,
}


def rule_parity(deltas: Sequence[int]) -> Parity:
    if not deltas or not any(deltas):
        raise DomainError("a moving rule needs at least one nonzero delta")
    if any(x < 0 for x in deltas):
        raise DomainError("deltas are magnitudes and must be natural numbers")
    return Parity.of(sum(deltas))


def parity_class_sizes(n: int, k: int) -> tuple[int, int]:
    """(even, odd) vertex counts of C(n, k)."""
    if n < 1 or k < 1:
        raise DomainError("need n >= 1 and k >= 1")
    total = n**k
    if total > _CODE_LIMIT:
        raise RangeError(f"C({n},{k}) is too large to count")
    return (total + 1) // 2, total // 2


def classify(leaper: LeaperSpec, k: int) -> FeasibilityVerdict:
    """Closed-tour feasibility of ``leaper`` on C(2, k)."""
    if k < 1:
        raise DomainError("k must be positive")
    sizes = parity_class_sizes(2, k)
    L = leaper.L
    if (leaper.a + leaper.b) % 2 == 0:
        return FeasibilityVerdict(
            Status.INFEASIBLE_PARITY,
            f"{leaper} has an even move: it stays on the {sizes[0]} vertices of its "
            f"start's parity and cannot reach the other {sizes[1]}",
            sizes,
        )
    if L > k:
        return FeasibilityVerdict(
            Status.INFEASIBLE_NO_MOVE,
            f"on C(2,{k}) a jump of squared length {L} needs {L} coordinate flips, "
            f"but only {k} coordinates exist",
            sizes,
        )
    if L == k and k > 1:
        return FeasibilityVerdict(
            Status.INFEASIBLE_TWO_CYCLE,
            f"with L = k = {k} every vertex reaches only its complement, so the "
            f"move graph is a perfect matching on {2**k} vertices",
            sizes,
        )
    bound = KNOWN_TOURS.get(L)
    if bound is not None and k >= bound:
        return FeasibilityVerdict(
            Status.KNOWN_TOUR,
            f"closed tours of squared step {L} exist on C(2,k) for every k >= {bound}",
            sizes,
        )
    return FeasibilityVerdict(
        Status.SEARCHABLE,
        f"no parity or degeneracy obstruction; existence on C(2,{k}) is left to search",
        sizes,
    )
