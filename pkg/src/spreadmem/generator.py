"""Spread-matrix decomposition and clamped sequential recall.

Neuron indices in :class:`Fragment` and :class:`UpdateOrder` are 1-based, as
they are written in generator notation such as ``(4)1325``.  Arrays are
indexed from 0; the conversion happens inside this module only.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .core import BipolarVector, as_bipolar, check_weight_matrix, sgn
from .errors import (
    ContractViolationError,
    DimensionMismatchError,
    InvalidVectorError,
    InvalidWeightMatrixError,
)

PartialState = tuple[Optional[int], ...]


@dataclass(frozen=True)
class Fragment:
    """Clamped partial assignment: ``assignments`` is a tuple of
    ``(neuron, value)`` pairs with 1-based neuron indices."""

    assignments: tuple[tuple[int, int], ...]
    n: int

    def __post_init__(self):
        pairs = tuple((int(i), int(v)) for i, v in self.assignments)
        object.__setattr__(self, "assignments", pairs)
        if self.n < 1:
            raise DimensionMismatchError(f"network size must be positive, got {self.n}")
        if not 1 <= len(pairs) <= self.n:
            raise ContractViolationError(
                f"fragment must clamp between 1 and {self.n} neurons, got {len(pairs)}"
            )
        seen = set()
        for i, v in pairs:
            if not 1 <= i <= self.n:
                raise DimensionMismatchError(f"neuron {i} is outside 1..{self.n}")
            if i in seen:
                raise ContractViolationError(f"neuron {i} is clamped twice")
            if v not in (1, -1):
                raise InvalidVectorError(f"neuron {i} clamped to {v}; values must be +1 or -1")
            seen.add(i)

    @classmethod
    def prefix(cls, values: Iterable[int], n: int) -> "Fragment":
        """Clamp ``values`` onto neurons ``1..k``."""
        vals = as_bipolar(values)
        return cls(tuple((i + 1, v) for i, v in enumerate(vals)), n)

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.assignments)

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(v for _, v in self.assignments)

    @property
    def is_prefix(self) -> bool:
        return self.indices == tuple(range(1, len(self) + 1))

    def __len__(self):
        return len(self.assignments)


@dataclass(frozen=True)
class UpdateOrder:
    """A permutation of ``1..n``; the first ``seed_count`` entries are clamped."""

    order: tuple[int, ...]
    seed_count: int = 1

    def __post_init__(self):
        order = tuple(int(i) for i in self.order)
        object.__setattr__(self, "order", order)
        n = len(order)
        if sorted(order) != list(range(1, n + 1)):
            raise ContractViolationError(f"{order} is not a permutation of 1..{n}")
        if not 1 <= self.seed_count <= n:
            raise ContractViolationError(f"seed_count must lie in 1..{n}, got {self.seed_count}")

    @property
    def n(self) -> int:
        return len(self.order)

    @property
    def seeds(self) -> tuple[int, ...]:
        return self.order[: self.seed_count]

    @classmethod
    def identity(cls, n: int, seed_count: int = 1) -> "UpdateOrder":
        return cls(tuple(range(1, n + 1)), seed_count)

    @classmethod
    def seed_first(cls, seeds: Sequence[int], n: int) -> "UpdateOrder":
        """Seeds first (in the given order), then the remaining neurons ascending."""
        rest = [i for i in range(1, n + 1) if i not in set(seeds)]
        return cls(tuple(seeds) + tuple(rest), len(seeds))


@dataclass(frozen=True)
class RecallTrace:
    """Partial states visited during recall.  ``steps[0]`` holds only the
    clamped neurons; each later step determines one more.  Undetermined
    neurons are ``None``."""

    steps: tuple[PartialState, ...]
    result: BipolarVector

    def rendered(self) -> list[tuple[int, ...]]:
        """Steps with undetermined neurons shown as 0."""
        return [tuple(0 if x is None else x for x in s) for s in self.steps]


def check_spread_matrix(b) -> np.ndarray:
    arr = np.asarray(b)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise InvalidWeightMatrixError(f"spread matrix must be square, got shape {arr.shape}")
    arr = arr.astype(np.int64)
    if np.any(np.triu(arr) != 0):
        raise InvalidWeightMatrixError("spread matrix is not strictly lower triangular")
    return arr


def decompose(t) -> np.ndarray:
    """Strictly lower-triangular ``B`` with ``B + B.T == T``."""
    t = check_weight_matrix(t)
    return np.tril(t, k=-1)


def recall(b, fragment: Fragment) -> tuple[BipolarVector, RecallTrace]:
    """Complete a prefix fragment with the spread matrix.

    Neurons ``k+1..n`` are set in ascending order, each from the neurons
    before it: ``v[j] = sgn(sum_{i<j} B[j, i] v[i])``.
    """
    b = check_spread_matrix(b)
    n = b.shape[0]
    if fragment.n != n:
        raise DimensionMismatchError(f"fragment is for {fragment.n} neurons, matrix has {n}")
    if not fragment.is_prefix:
        raise ContractViolationError(
            "recall needs a prefix fragment (neurons 1..k); use ordered_recall for "
            f"fragment on neurons {list(fragment.indices)}"
        )
    state: list[Optional[int]] = [None] * n
    for i, v in fragment.assignments:
        state[i - 1] = v
    steps = [tuple(state)]
    for j in range(len(fragment), n):
        h = sum(int(b[j, i]) * state[i] for i in range(j))
        state[j] = sgn(h)
        steps.append(tuple(state))
    result = tuple(state)
    return result, RecallTrace(tuple(steps), result)


def ordered_recall(t, seeds: Fragment, order: UpdateOrder) -> tuple[BipolarVector, RecallTrace]:
    """Complete ``seeds`` following ``order``.

    Each neuron after the seeds takes the sign of its weighted input from the
    neurons already determined.  With the identity order and a prefix
    fragment this is exactly :func:`recall` on ``decompose(t)``.
    """
    t = check_weight_matrix(t)
    n = t.shape[0]
    if seeds.n != n or order.n != n:
        raise DimensionMismatchError(
            f"network has {n} neurons, fragment {seeds.n}, order {order.n}"
        )
    if order.seeds != seeds.indices:
        raise ContractViolationError(
            f"order starts with seeds {list(order.seeds)} but fragment clamps {list(seeds.indices)}"
        )
    state: list[Optional[int]] = [None] * n
    h = np.zeros(n, dtype=np.int64)
    for i, v in seeds.assignments:
        state[i - 1] = v
        h += t[:, i - 1] * v
    steps = [tuple(state)]
    for j in order.order[order.seed_count:]:
        v = sgn(h[j - 1])
        state[j - 1] = v
        h += t[:, j - 1] * v
        steps.append(tuple(state))
    result = tuple(state)
    return result, RecallTrace(tuple(steps), result)
