"""Closed tours built by construction rather than search.

``lift_tour`` is the duplicate-mirror-reverse step: copy a closed tour of the
k-cube onto both faces of the (k+1)-cube, complement d-1 coordinates of the
upper copy, walk the upper copy backwards and stitch the two together.  The
two stitching jumps change the d-1 complemented coordinates plus the new one,
so they have length d like every other jump.  With d = 1 the mask is empty
and the lift is exactly the reflected Gray code recursion.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, PreconditionError
from .model import MAX_BINARY_K, Closure, GridSpec, Tour, low_mask
from .tourio import Expect, verify_tour


@dataclass(frozen=True)
class LiftSpec:
    """Step length and the complement mask applied to the upper copy."""

    d: int
    mask: int

    @classmethod
    def default(cls, d: int) -> "LiftSpec":
        """Complement the lowest d-1 coordinates (x1 .. x_{d-1})."""
        if d < 1:
            raise DomainError("step must be positive")
        return cls(d, low_mask(d - 1))


def gray_tour(k: int) -> Tour:
    """Closed wazir tour of C(2, k): the reflected binary Gray code."""
    if k < 1:
        raise DomainError("k must be positive")
    if k > MAX_BINARY_K:
        raise DomainError(f"k = {k} exceeds {MAX_BINARY_K}")
    words = np.array([0, 1], dtype=np.int64)
    for j in range(1, k):
        words = np.concatenate([words, words[::-1] | (1 << j)])
    return Tour.from_words(k, words, step=1, closure=Closure.CLOSED)


def _check_closed_binary(tour: Tour, d: int) -> None:
    if not tour.grid.is_binary:
        raise PreconditionError("lifting needs a binary tour")
    report = verify_tour(tour, d, Expect.CLOSED)
    if not report.valid:
        raise PreconditionError(f"source is not a closed step-{d} tour: {report.violation}")


def lift_tour(tour: Tour, spec: LiftSpec, *, check: bool = True) -> Tour:
    """Closed tour of C(2, k+1) from a closed tour of C(2, k).

    The first half is ``tour`` with x_{k+1} = 0; the second half is
    ``tour XOR spec.mask`` reversed, with x_{k+1} = 1.  Pass ``check=False``
    to skip re-verifying a source already known to be good.
    """
    k = tour.k
    if spec.mask < 0 or spec.mask >> k:
        raise PreconditionError(f"mask {spec.mask:#x} reaches beyond the {k} source coordinates")
    if spec.mask.bit_count() != spec.d - 1:
        raise PreconditionError(
            f"mask weight {spec.mask.bit_count()} must be d - 1 = {spec.d - 1}"
        )
    if k + 1 > MAX_BINARY_K:
        raise PreconditionError(f"cannot lift beyond k = {MAX_BINARY_K}")
    if check:
        _check_closed_binary(tour, spec.d)
    words = tour.vertices
    upper = (words[::-1] ^ spec.mask) | (1 << k)
    return Tour(GridSpec(2, k + 1), np.concatenate([words, upper]), spec.d, Closure.CLOSED)


def lift_to(tour: Tour, d: int, target_k: int) -> Tour:
    """Lift with the default mask until the tour lives on C(2, target_k)."""
    if target_k < tour.k:
        raise PreconditionError(f"target k = {target_k} is below the source k = {tour.k}")
    _check_closed_binary(tour, d)
    spec = LiftSpec.default(d)
    out = tour if tour.step == d and tour.closure is Closure.CLOSED else Tour(
        tour.grid, tour.vertices, d, Closure.CLOSED
    )
    while out.k < target_k:
        out = lift_tour(out, spec, check=False)
    return out
