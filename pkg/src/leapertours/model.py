"""Grid, vertex, leaper and tour types plus exact distance primitives.

Vertices are k-tuples of naturals.  On binary grids they are also handled as
k-bit words in which coordinate x1 sits in the least significant bit; every
tour stores its vertices as mixed-radix codes with the same digit order, so
for n = 2 the code of a vertex *is* its word.  Distances are kept squared so
all comparisons stay in integer arithmetic.
"""
from __future__ import annotations

import enum
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Union

import numpy as np

from .errors import DimensionError, DomainError, RangeError

MAX_BINARY_K = 30
MAX_SIDE = 64
_CODE_LIMIT = 2**62

Vertex = tuple[int, ...]
VertexLike = Union[int, Sequence[int]]


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"

    @classmethod
    def of(cls, value: int) -> "Parity":
        return cls.EVEN if value % 2 == 0 else cls.ODD


class Closure(enum.Enum):
    CLOSED = "closed"
    OPEN = "open"


@dataclass(frozen=True)
class GridSpec:
    """The grid C(n, k) = {0, ..., n-1}^k."""

    n: int
    k: int

    def __post_init__(self):
        if self.n < 1 or self.k < 1:
            raise DomainError(f"grid needs n >= 1 and k >= 1, got n={self.n}, k={self.k}")
        if self.n > MAX_SIDE:
            raise RangeError(f"side length {self.n} exceeds {MAX_SIDE}")
        if self.n**self.k > _CODE_LIMIT:
            raise RangeError(f"C({self.n},{self.k}) has more than 2^62 vertices")

    @property
    def size(self) -> int:
        return self.n**self.k

    @property
    def is_binary(self) -> bool:
        return self.n == 2

    def encode(self, v: Sequence[int]) -> int:
        if len(v) != self.k:
            raise DimensionError(f"vertex has {len(v)} coordinates, grid has k={self.k}")
        code = 0
        for c in reversed(v):
            if not 0 <= c < self.n:
                raise DomainError(f"coordinate {c} outside [0, {self.n})")
            code = code * self.n + c
        return code

    def decode(self, code: int) -> Vertex:
        out = []
        for _ in range(self.k):
            code, c = divmod(code, self.n)
            out.append(c)
        return tuple(out)

    def vertices(self):
        """All vertex codes in increasing order."""
        return np.arange(self.size, dtype=np.int64)


@dataclass(frozen=True)
class LeaperSpec:
    """An (a, b)-leaper; ``L`` is its squared jump length."""

    a: int
    b: int
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise DomainError("leaper components must be natural numbers")
        if self.a == 0 and self.b == 0:
            raise DomainError("(0, 0) is not a leaper")

    @property
    def L(self) -> int:
        return self.a * self.a + self.b * self.b

    def __str__(self):
        label = f"({self.a},{self.b})-leaper"
        return f"{self.name} {label}" if self.name else label


LEAPERS = {
    "wazir": LeaperSpec(0, 1, "wazir"),
    "ferz": LeaperSpec(1, 1, "ferz"),
    "dabbaba": LeaperSpec(0, 2, "dabbaba"),
    "knight": LeaperSpec(1, 2, "knight"),
    "alfil": LeaperSpec(2, 2, "alfil"),
    "threeleaper": LeaperSpec(0, 3, "threeleaper"),
    "camel": LeaperSpec(1, 3, "camel"),
    "zebra": LeaperSpec(2, 3, "zebra"),
    "tripper": LeaperSpec(3, 3, "tripper"),
}


def _as_tuple(v: VertexLike) -> Vertex:
    return tuple(int(c) for c in v)


def squared_distance(u: Sequence[int], v: Sequence[int]) -> int:
    if len(u) != len(v):
        raise DimensionError(f"cannot compare a {len(u)}-vertex with a {len(v)}-vertex")
    return sum((a - b) * (a - b) for a, b in zip(u, v))


def to_word(v: Sequence[int]) -> int:
    """Pack a binary vertex into a word, x1 in bit 0."""
    word = 0
    for i, c in enumerate(v):
        if c not in (0, 1):
            raise DomainError(f"coordinate {c} is not binary")
        word |= c << i
    return word


def from_word(word: int, k: int) -> Vertex:
    if word < 0 or word >> k:
        raise DomainError(f"word {word:#x} has bits outside the low {k}")
    return tuple((word >> i) & 1 for i in range(k))


def hamming_distance(u: VertexLike, v: VertexLike) -> int:
    """Number of differing coordinates of two binary vertices (tuples or words)."""
    if isinstance(u, (int, np.integer)) and isinstance(v, (int, np.integer)):
        if u < 0 or v < 0:
            raise DomainError("words must be non-negative")
        return (int(u) ^ int(v)).bit_count()
    u, v = _as_tuple(u), _as_tuple(v)
    if len(u) != len(v):
        raise DimensionError(f"cannot compare a {len(u)}-vertex with a {len(v)}-vertex")
    return (to_word(u) ^ to_word(v)).bit_count()


def vertex_parity(v: VertexLike) -> Parity:
    if isinstance(v, (int, np.integer)):
        return Parity.of(int(v).bit_count())
    return Parity.of(sum(v))


def xor_mask(v: VertexLike, mask: int, k: int | None = None):
    """Complement the coordinates selected by ``mask``.

    Words come back as words, tuples as tuples.  For words pass ``k`` to have
    the mask range checked.
    """
    if isinstance(v, (int, np.integer)):
        if k is not None and mask >> k:
            raise DomainError(f"mask {mask:#x} has bits at positions >= {k}")
        return int(v) ^ mask
    v = _as_tuple(v)
    if mask < 0 or mask >> len(v):
        raise DomainError(f"mask {mask:#x} has bits at positions >= {len(v)}")
    return from_word(to_word(v) ^ mask, len(v))


def low_mask(width: int) -> int:
    return (1 << width) - 1


@dataclass(frozen=True, eq=False)
class Tour:
    """An ordered sequence of grid vertices, stored as mixed-radix codes.

    ``step`` is the squared jump length and ``closure`` the closed/open tag.
    Both may be None for tours read from untrusted input; only the verifier
    decides them.
    """

    grid: GridSpec
    vertices: np.ndarray
    step: int | None = None
    closure: Closure | None = None

    def __post_init__(self):
        arr = np.ascontiguousarray(self.vertices, dtype=np.int64)
        if arr.ndim != 1:
            raise DomainError("tour vertices must be a flat sequence of codes")
        if arr.shape[0] < 2:
            raise DomainError("a tour holds at least two vertices")
        if arr.min() < 0 or arr.max() >= self.grid.size:
            raise DomainError(f"vertex code outside C({self.grid.n},{self.grid.k})")
        arr.setflags(write=False)
        object.__setattr__(self, "vertices", arr)

    @classmethod
    def from_coords(cls, grid: GridSpec, coords, step=None, closure=None) -> "Tour":
        return cls(grid, np.array([grid.encode(c) for c in coords], dtype=np.int64), step, closure)

    @classmethod
    def from_words(cls, k: int, words, step=None, closure=None) -> "Tour":
        return cls(GridSpec(2, k), np.asarray(words, dtype=np.int64), step, closure)

    @property
    def k(self) -> int:
        return self.grid.k

    def __len__(self):
        return self.vertices.shape[0]

    def coords(self) -> list[Vertex]:
        return [self.grid.decode(int(c)) for c in self.vertices]

    def start(self) -> Vertex:
        return self.grid.decode(int(self.vertices[0]))

    def end(self) -> Vertex:
        return self.grid.decode(int(self.vertices[-1]))

    def __eq__(self, other):
        if not isinstance(other, Tour):
            return NotImplemented
        return (
            self.grid == other.grid
            and self.step == other.step
            and self.closure == other.closure
            and np.array_equal(self.vertices, other.vertices)
        )

    __hash__ = None

    def __repr__(self):
        return (f"Tour(C({self.grid.n},{self.grid.k}), {len(self)} vertices, "
                f"step={self.step}, closure={self.closure and self.closure.value})")
