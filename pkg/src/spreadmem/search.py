"""Exhaustive generator search at small n.

* :func:`minimal_prefix_generator` -- shortest prefix whose recall gives a target.
* :func:`find_one_bit_generators` -- every (seed neuron, update order) whose
  ordered recall from a single clamped bit gives a target.
* :func:`one_bit_capacity` -- what the 2n single-bit seeds produce under one
  order policy.
* :func:`local_spread_census` -- every vector reachable from one clamped bit
  under any order, reduced modulo complement and cyclic shift.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

from .core import (
    DEFAULT_CENSUS_CAP,
    BipolarVector,
    StateCensus,
    as_bipolar,
    check_weight_matrix,
    fixed_point_census,
    sgn,
)
from .errors import DimensionMismatchError, SearchSpaceExceededError
from .generator import Fragment, UpdateOrder, check_spread_matrix, ordered_recall, recall

DEFAULT_SEARCH_MAX_N = 8

OrderPolicy = Callable[[int, int], UpdateOrder]


@dataclass(frozen=True)
class GeneratorRecord:
    label: str
    target: BipolarVector
    fragment: Fragment
    order: UpdateOrder
    minimal: bool
    generated: bool = True  # False when only the full vector reproduces the target

    def replay(self, t) -> BipolarVector:
        result, _ = ordered_recall(t, self.fragment, self.order)
        return result


@dataclass(frozen=True)
class CapacityEntry:
    seed: int
    value: int
    order: UpdateOrder
    result: BipolarVector
    classification: str


@dataclass(frozen=True)
class CapacityReport:
    entries: tuple[CapacityEntry, ...]
    distinct_count: int
    bound: int


def ascending_policy(seed: int, n: int) -> UpdateOrder:
    """Seed first, then every other neuron in ascending index order."""
    return UpdateOrder.seed_first((seed,), n)


def canonical(v: Sequence[int]) -> BipolarVector:
    """Smallest member of the orbit of ``v`` under complement and cyclic shift,
    comparing entrywise with +1 ranked before -1."""
    v = tuple(v)
    n = len(v)
    orbit = [tuple(s * x for x in v[k:] + v[:k]) for s in (1, -1) for k in range(n)]
    return min(orbit, key=_lex_key)


def _lex_key(v: Sequence[int]) -> tuple[int, ...]:
    return tuple(0 if x == 1 else 1 for x in v)


def _check_target(n: int, target) -> BipolarVector:
    target = as_bipolar(target)
    if len(target) != n:
        raise DimensionMismatchError(f"target has {len(target)} entries, network has {n}")
    return target


def _check_search_size(n: int, max_n: int) -> None:
    if n > max_n:
        raise SearchSpaceExceededError(
            f"order search over n={n} neurons refused (max_n={max_n}); "
            "the space grows as n!"
        )


def minimal_prefix_generator(b, target, label: str = "target") -> GeneratorRecord:
    """Smallest ``k`` such that clamping ``target[:k]`` and recalling with ``b``
    returns ``target``.  ``k == n`` always works; the record then has
    ``generated=False``."""
    b = check_spread_matrix(b)
    n = b.shape[0]
    target = _check_target(n, target)
    for k in range(1, n + 1):
        fragment = Fragment.prefix(target[:k], n)
        result, _ = recall(b, fragment)
        if result == target:
            break
    return GeneratorRecord(
        label, target, fragment, UpdateOrder.identity(n, k), minimal=True, generated=k < n
    )


def find_one_bit_generators(
    t, target, max_n: int = DEFAULT_SEARCH_MAX_N, label: str = "target"
) -> list[GeneratorRecord]:
    """All single-seed generators of ``target``, sorted by seed then order.

    The seed value is the target's own value at the seed neuron.  A branch of
    the order tree is dropped as soon as the next neuron comes out different
    from the target, since clamped and computed values never change later.
    """
    t = check_weight_matrix(t)
    n = t.shape[0]
    target = _check_target(n, target)
    _check_search_size(n, max_n)
    cols = [[int(x) for x in t[:, j]] for j in range(n)]
    records = []

    def dfs(h: list[int], remaining: list[int], path: list[int]):
        if not remaining:
            order = UpdateOrder(tuple(i + 1 for i in path), 1)
            fragment = Fragment(((path[0] + 1, target[path[0]]),), n)
            records.append(GeneratorRecord(label, target, fragment, order, minimal=True))
            return
        for pos, j in enumerate(remaining):
            v = sgn(h[j])
            if v != target[j]:
                continue
            col = cols[j]
            dfs(
                [h[k] + col[k] * v for k in range(n)],
                remaining[:pos] + remaining[pos + 1:],
                path + [j],
            )

    for s in range(n):
        v = target[s]
        dfs([cols[s][k] * v for k in range(n)], [j for j in range(n) if j != s], [s])
    return records


def one_bit_capacity(
    t,
    memories,
    order_policy: OrderPolicy = ascending_policy,
    census: StateCensus | None = None,
    cap: int = DEFAULT_CENSUS_CAP,
) -> CapacityReport:
    """Recall from each of the 2n single-bit seeds under ``order_policy`` and
    classify every result against the fixed-point census."""
    t = check_weight_matrix(t)
    n = t.shape[0]
    if census is None:
        census = fixed_point_census(t, memories, cap)
    entries = []
    for seed in range(1, n + 1):
        order = order_policy(seed, n)
        for value in (1, -1):
            result, _ = ordered_recall(t, Fragment(((seed, value),), n), order)
            entries.append(CapacityEntry(seed, value, order, result, census.classify(result)))
    distinct = len({e.result for e in entries})
    return CapacityReport(tuple(entries), distinct, 2 * n)


def single_seed_outcomes(t, max_n: int = DEFAULT_SEARCH_MAX_N) -> set[BipolarVector]:
    """Every vector produced by ordered recall from one clamped bit, over all
    seeds, both seed values and all completion orders."""
    t = check_weight_matrix(t)
    n = t.shape[0]
    _check_search_size(n, max_n)
    cols = [[int(x) for x in t[:, j]] for j in range(n)]
    full = (1 << n) - 1

    # The completion from a partial state depends only on which neurons are
    # set and their values, not on the order they were set in.
    @lru_cache(maxsize=None)
    def outcomes(mask: int, state: tuple[int, ...]) -> frozenset:
        if mask == full:
            return frozenset((state,))
        h = [sum(cols[i][k] * state[i] for i in range(n) if mask >> i & 1) for k in range(n)]
        found = set()
        for j in range(n):
            if mask >> j & 1:
                continue
            nxt = list(state)
            nxt[j] = sgn(h[j])
            found |= outcomes(mask | 1 << j, tuple(nxt))
        return frozenset(found)

    results = set()
    for s in range(n):
        for v in (1, -1):
            state = [0] * n
            state[s] = v
            results |= outcomes(1 << s, tuple(state))
    return results


def local_spread_census(t, max_n: int = DEFAULT_SEARCH_MAX_N) -> list[BipolarVector]:
    """Canonical classes (see :func:`canonical`) of :func:`single_seed_outcomes`,
    sorted with +1 before -1."""
    return sorted({canonical(v) for v in single_seed_outcomes(t, max_n)}, key=_lex_key)
