"""Hebbian associative memory with fragment-indexed spreading recall."""

from .core import (
    StateCensus,
    complement,
    decode,
    encode,
    fixed_point_census,
    fixed_points,
    is_stored,
    sgn,
    train,
)
from .errors import (
    CapExceededError,
    ContractViolationError,
    DimensionMismatchError,
    InvalidVectorError,
    InvalidWeightMatrixError,
    ParseError,
    SearchSpaceExceededError,
    SpreadMemError,
)
from .generator import Fragment, RecallTrace, UpdateOrder, decompose, ordered_recall, recall
from .search import (
    CapacityReport,
    GeneratorRecord,
    ascending_policy,
    canonical,
    find_one_bit_generators,
    local_spread_census,
    minimal_prefix_generator,
    one_bit_capacity,
    single_seed_outcomes,
)
from .spread import (
    InterconnectionGraph,
    SpreadResult,
    build_graph,
    local_spread,
    spread_policy,
    spread_then_recall,
)

__version__ = "0.1.0"
