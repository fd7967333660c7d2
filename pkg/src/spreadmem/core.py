"""Bipolar vectors, Hebbian training, the storage test and the fixed-point census.

Vectors are plain tuples of ``+1``/``-1`` ints so they hash, compare exactly and
print the way they are written.  Weight matrices are ``int64`` numpy arrays;
all arithmetic stays in the integers so ``sgn(0)`` is never a rounding question.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    CapExceededError,
    DimensionMismatchError,
    InvalidVectorError,
    InvalidWeightMatrixError,
)

BipolarVector = tuple[int, ...]

DEFAULT_CENSUS_CAP = 20
_CHUNK = 1 << 16


def sgn(x) -> int:
    """Sign threshold with ``sgn(0) == +1``."""
    return 1 if x >= 0 else -1


def sgn_array(x: np.ndarray) -> np.ndarray:
    return np.where(np.asarray(x) >= 0, 1, -1).astype(np.int64)


def as_bipolar(values: Iterable[int]) -> BipolarVector:
    """Validate *values* and return them as a bipolar tuple."""
    out = []
    for i, v in enumerate(values):
        if v not in (1, -1) or isinstance(v, bool):
            raise InvalidVectorError(
                f"entry {i + 1} is {v!r}; bipolar entries must be +1 or -1"
            )
        out.append(int(v))
    if not out:
        raise InvalidVectorError("a bipolar vector needs at least one entry")
    return tuple(out)


def complement(v: Sequence[int]) -> BipolarVector:
    return tuple(-x for x in v)


def as_memory_set(memories: Iterable[Iterable[int]]) -> list[BipolarVector]:
    """Validate a list of memories: nonempty, bipolar, all the same length."""
    mems = [as_bipolar(m) for m in memories]
    if not mems:
        raise InvalidVectorError("a memory set needs at least one memory")
    n = len(mems[0])
    for k, m in enumerate(mems[1:], start=2):
        if len(m) != n:
            raise DimensionMismatchError(
                f"memory #{k} has {len(m)} entries, memory #1 has {n}"
            )
    return mems


def check_weight_matrix(t) -> np.ndarray:
    """Return *t* as an int64 array after checking it is square, symmetric and
    zero on the diagonal."""
    arr = np.asarray(t)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise InvalidWeightMatrixError(f"weight matrix must be square, got shape {arr.shape}")
    if not np.issubdtype(arr.dtype, np.integer):
        if not np.all(np.equal(np.mod(arr, 1), 0)):
            raise InvalidWeightMatrixError("weight matrix entries must be integers")
    arr = arr.astype(np.int64)
    if not np.array_equal(arr, arr.T):
        raise InvalidWeightMatrixError("weight matrix is not symmetric")
    if np.any(np.diag(arr) != 0):
        raise InvalidWeightMatrixError("weight matrix has a nonzero diagonal")
    return arr


def train(memories: Iterable[Iterable[int]]) -> np.ndarray:
    """Hebbian outer-product rule: ``T = sum_k x_k x_k^T`` with the diagonal zeroed."""
    x = np.array(as_memory_set(memories), dtype=np.int64)
    t = x.T @ x
    np.fill_diagonal(t, 0)
    return t


def _check_dims(t: np.ndarray, v: Sequence[int]) -> None:
    if len(v) != t.shape[0]:
        raise DimensionMismatchError(
            f"vector has {len(v)} entries but the network has {t.shape[0]} neurons"
        )


def is_stored(t, v: Sequence[int]) -> bool:
    """True iff ``v == sgn(T v)`` elementwise (one synchronous pass)."""
    t = check_weight_matrix(t)
    v = as_bipolar(v)
    _check_dims(t, v)
    x = np.array(v, dtype=np.int64)
    return bool(np.array_equal(sgn_array(t @ x), x))


def encode(v: Sequence[int]) -> int:
    """Binary code of a bipolar vector: +1 -> 1, -1 -> 0, neuron 1 is the MSB."""
    code = 0
    for x in v:
        code = (code << 1) | (1 if x == 1 else 0)
    return code


def decode(code: int, n: int) -> BipolarVector:
    return tuple(1 if (code >> (n - 1 - i)) & 1 else -1 for i in range(n))


def _states(codes: np.ndarray, n: int) -> np.ndarray:
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)
    bits = (codes[:, None] >> shifts[None, :]) & 1
    return 2 * bits - 1


def fixed_points(t, cap: int = DEFAULT_CENSUS_CAP) -> list[BipolarVector]:
    """Every bipolar state ``v`` with ``v == sgn(T v)``, in ascending code order."""
    t = check_weight_matrix(t)
    n = t.shape[0]
    if n > cap:
        raise CapExceededError(
            f"census over 2^{n} states refused: n={n} exceeds the cap of {cap}"
        )
    found = []
    total = 1 << n
    for start in range(0, total, _CHUNK):
        codes = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        s = _states(codes, n)
        fixed = np.all(sgn_array(s @ t) == s, axis=1)
        found.extend(int(c) for c in codes[fixed])
    return [decode(c, n) for c in found]


@dataclass(frozen=True)
class StateCensus:
    """Fixed points of a network sorted into trained memories, complements of
    trained memories, and everything else (spurious).  Trained memories that
    are not fixed points go to ``nonfixed_trained``."""

    stored: list[BipolarVector]
    complements: list[BipolarVector]
    spurious: list[BipolarVector]
    nonfixed_trained: list[BipolarVector]
    _fixed: frozenset = field(default=frozenset(), repr=False, compare=False)
    _trained: frozenset = field(default=frozenset(), repr=False, compare=False)

    @property
    def fixed(self) -> list[BipolarVector]:
        return sorted(self.stored + self.complements + self.spurious, key=encode)

    def classify(self, v: Sequence[int]) -> str:
        """One of ``stored``, ``complement``, ``spurious``, ``nonfixed_trained``
        or ``transient`` (not a fixed point and not trained)."""
        v = tuple(v)
        if v in self._fixed:
            if v in self._trained:
                return "stored"
            if complement(v) in self._trained:
                return "complement"
            return "spurious"
        if v in self._trained:
            return "nonfixed_trained"
        return "transient"


def fixed_point_census(t, memories, cap: int = DEFAULT_CENSUS_CAP) -> StateCensus:
    t = check_weight_matrix(t)
    mems = as_memory_set(memories)
    _check_dims(t, mems[0])
    trained = set(mems)
    fps = fixed_points(t, cap)
    fixed = set(fps)

    stored, comps, spurious = [], [], []
    for v in fps:
        if v in trained:
            stored.append(v)
        elif complement(v) in trained:
            comps.append(v)
        else:
            spurious.append(v)
    nonfixed = sorted({m for m in mems if m not in fixed}, key=encode)
    return StateCensus(stored, comps, spurious, nonfixed, frozenset(fixed), frozenset(trained))
