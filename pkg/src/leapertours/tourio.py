"""Plain-text tour files and the tour verifier.

File format: one vertex per line as a k-character string over {0, 1}; the
leftmost character is coordinate x1.  Lines starting with '#' and blank lines
are ignored.  Line endings are '\\n' on output; '\\r\\n' is accepted on input.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, FormatError
from .model import Closure, GridSpec, Tour


class Expect(enum.Enum):
    CLOSED = "closed"
    OPEN = "open"
    EITHER = "either"


class ReportStatus(enum.Enum):
    VALID_CLOSED = "ValidClosed"
    VALID_OPEN = "ValidOpen"
    INVALID = "Invalid"


class ViolationKind(enum.Enum):
    DUPLICATE_VERTEX = "DuplicateVertex"
    MISSING_VERTEX = "MissingVertex"
    BAD_STEP = "BadStep"
    BAD_CLOSURE = "BadClosure"


@dataclass(frozen=True)
class Violation:
    """First defect found, scanning the tour front to back.

    ``index`` is the tour position of the offending vertex: the repeated
    occurrence for DuplicateVertex, the vertex entered by the bad jump for
    BadStep, the last position for BadClosure, and the tour length (where the
    next vertex should have been) for MissingVertex.
    """

    kind: ViolationKind
    index: int
    detail: str = ""


@dataclass(frozen=True)
class VerificationReport:
    status: ReportStatus
    violation: Violation | None
    step: int
    closing_distance: int

    @property
    def valid(self) -> bool:
        return self.status is not ReportStatus.INVALID

    @property
    def closure(self) -> Closure | None:
        return {
            ReportStatus.VALID_CLOSED: Closure.CLOSED,
            ReportStatus.VALID_OPEN: Closure.OPEN,
        }.get(self.status)


def _edge_distances(grid: GridSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if grid.is_binary:
        return np.bitwise_count(a ^ b).astype(np.int64)
    total = np.zeros(a.shape, dtype=np.int64)
    a, b = a.copy(), b.copy()
    for _ in range(grid.k):
        a, da = np.divmod(a, grid.n)
        b, db = np.divmod(b, grid.n)
        total += (da - db) ** 2
    return total


def verify_tour(tour: Tour, d: int, expect: Expect | str = Expect.EITHER) -> VerificationReport:
    """Check that ``tour`` visits every vertex once with squared step ``d``.

    Never trusts ``tour.closure``; the closing jump is measured.  Violations
    are returned in the report, not raised.
    """
    expect = Expect(expect)
    grid = tour.grid
    codes = tour.vertices
    size = codes.shape[0]
    steps = _edge_distances(grid, codes[:-1], codes[1:])
    closing = int(_edge_distances(grid, codes[-1:], codes[:1])[0])
    measured = int(steps[0])

    first_dup = size
    order = np.argsort(codes, kind="stable")
    ranked = codes[order]
    repeats = np.nonzero(ranked[1:] == ranked[:-1])[0]
    if repeats.size:
        first_dup = int(order[repeats + 1].min())
    bad = np.nonzero(steps != d)[0]
    first_bad = int(bad[0]) + 1 if bad.size else size

    def invalid(kind, index, detail):
        return VerificationReport(ReportStatus.INVALID, Violation(kind, index, detail), measured, closing)

    if first_dup < size and first_dup <= first_bad:
        v = grid.decode(int(codes[first_dup]))
        return invalid(ViolationKind.DUPLICATE_VERTEX, first_dup, f"vertex {v} seen before")
    if first_bad < size:
        return invalid(
            ViolationKind.BAD_STEP,
            first_bad,
            f"squared jump {int(steps[first_bad - 1])} from position {first_bad - 1}, expected {d}",
        )
    if size < grid.size:
        present = np.zeros(grid.size, dtype=bool)
        present[codes] = True
        gone = grid.decode(int(np.argmin(present)))
        return invalid(
            ViolationKind.MISSING_VERTEX, size, f"{grid.size - size} vertices never visited, e.g. {gone}"
        )
    closed = closing == d
    if expect is Expect.CLOSED and not closed:
        return invalid(ViolationKind.BAD_CLOSURE, size - 1, f"closing jump {closing}, expected {d}")
    if expect is Expect.OPEN and closed:
        return invalid(ViolationKind.BAD_CLOSURE, size - 1, f"closing jump equals the step {d}")
    status = ReportStatus.VALID_CLOSED if closed else ReportStatus.VALID_OPEN
    return VerificationReport(status, None, measured, closing)


def parse_tour_file(data: bytes | str) -> Tour:
    """Read a tour file.  The result carries no step or closure tag."""
    if isinstance(data, bytes):
        try:
            data = data.decode("ascii")
        except UnicodeDecodeError as exc:
            raise FormatError(f"non-ASCII byte at offset {exc.start}") from None
    width = None
    rows = []
    for lineno, raw in enumerate(data.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if width is None:
            width = len(line)
        elif len(line) != width:
            raise FormatError(f"expected {width} characters, found {len(line)}", lineno)
        if line.strip("01"):
            raise FormatError(f"non-binary character in {line!r}", lineno)
        rows.append(line)
    if not rows:
        raise FormatError("file holds no vertices")
    if len(rows) < 2:
        raise FormatError("a tour needs at least two vertices")
    bits = np.frombuffer("".join(rows).encode("ascii"), dtype=np.uint8).reshape(len(rows), width) - ord("0")
    weights = np.left_shift(np.int64(1), np.arange(width, dtype=np.int64))
    return Tour(GridSpec(2, width), bits.astype(np.int64) @ weights)


def write_tour_file(tour: Tour) -> bytes:
    if not tour.grid.is_binary:
        raise DomainError("only binary tours have a file representation")
    k = tour.k
    bits = (tour.vertices[:, None] >> np.arange(k, dtype=np.int64)) & 1
    out = np.empty((len(tour), k + 1), dtype=np.uint8)
    out[:, :k] = bits + ord("0")
    out[:, k] = ord("\n")
    return out.tobytes()


def strip_prose(data: bytes | str) -> str:
    """Reduce a raw solution dump to the tour format.

    Drops every line that is not a pure binary string (prose headers, labels)
    and a final line that repeats the start vertex, as printed by searches
    that list the closing return.
    """
    if isinstance(data, bytes):
        data = data.decode("utf-8", errors="replace")
    rows = [ln.strip() for ln in data.splitlines()]
    rows = [ln for ln in rows if ln and not ln.strip("01")]
    if len(rows) > 2 and rows[-1] == rows[0]:
        rows.pop()
    return "".join(r + "\n" for r in rows)
