"""Hamiltonian Euclidean tours of fairy chess leapers on binary grids C(2, k)."""
from .construct import LiftSpec, gray_tour, lift_to, lift_tour
from .errors import (
    ConfigError,
    DimensionError,
    DomainError,
    FormatError,
    LeaperError,
    PreconditionError,
    RangeError,
)
from .feasibility import FeasibilityVerdict, Status, classify, parity_class_sizes, rule_parity
from .model import (
    LEAPERS,
    Closure,
    GridSpec,
    LeaperSpec,
    Parity,
    Tour,
    from_word,
    hamming_distance,
    squared_distance,
    to_word,
    vertex_parity,
    xor_mask,
)
from .rules import MovingRule, enumerate_rules, rules_for_grid
from .search import (
    Ordering,
    SearchConfig,
    SearchOutcome,
    SearchStats,
    Verdict,
    build_move_masks,
    count_tours_small,
    find_tours,
    find_tours_parallel,
)
from .tourio import (
    Expect,
    ReportStatus,
    VerificationReport,
    Violation,
    ViolationKind,
    parse_tour_file,
    strip_prose,
    verify_tour,
    write_tour_file,
)

__version__ = "0.1.0"
