"""Interconnection graph, local spreading from a single neuron, and the
spread-then-recall pipeline.

A spread grows a fragment one neuron at a time along nonzero connections.
Which inactive neighbour joins next is decided by connection strength to the
active set (or by distance, when neuron coordinates are supplied).  The new
neuron copies the sign carried by its strongest active connection; ``rule="sum"``
instead takes the sign of the full weighted input from the active set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Optional

from .core import BipolarVector, check_weight_matrix, sgn
from .errors import ContractViolationError, DimensionMismatchError
from .generator import Fragment, UpdateOrder, decompose, ordered_recall, recall

Coordinates = Mapping[int, tuple[float, float]]

RULES = ("strongest", "sum")


@dataclass(frozen=True)
class Edge:
    i: int
    j: int
    weight: int

    @property
    def sign(self) -> str:
        return "positive" if self.weight > 0 else "negative"


@dataclass(frozen=True)
class InterconnectionGraph:
    n: int
    edges: tuple[Edge, ...]

    def neighbors(self, i: int) -> list[int]:
        out = [e.j for e in self.edges if e.i == i] + [e.i for e in self.edges if e.j == i]
        return sorted(out)

    def to_matrix(self) -> list[list[int]]:
        m = [[0] * self.n for _ in range(self.n)]
        for e in self.edges:
            m[e.i - 1][e.j - 1] = m[e.j - 1][e.i - 1] = e.weight
        return m

    def to_dot(self, name: str = "interconnection") -> str:
        lines = [f"graph {name} {{"]
        lines += [f"  n{i};" for i in range(1, self.n + 1)]
        for e in self.edges:
            color = "blue" if e.weight > 0 else "red"
            lines.append(
                f"  n{e.i} -- n{e.j} [color={color}, label={e.weight}, penwidth={abs(e.weight)}];"
            )
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_graph(t) -> InterconnectionGraph:
    """One undirected edge per nonzero off-diagonal entry, 1-based ends with i < j."""
    t = check_weight_matrix(t)
    n = t.shape[0]
    edges = tuple(
        Edge(i + 1, j + 1, int(t[i, j]))
        for i in range(n)
        for j in range(i + 1, n)
        if t[i, j] != 0
    )
    return InterconnectionGraph(n, edges)


@dataclass(frozen=True)
class SpreadResult:
    fragment: Fragment
    visit_order: tuple[int, ...]
    parents: tuple[Optional[int], ...]  # recruiting neighbour per visit; None for the seed
    stalled: bool


def local_spread(
    t,
    seed: int,
    value: int,
    size: int,
    coords: Coordinates | None = None,
    rule: str = "strongest",
) -> SpreadResult:
    """Grow a fragment of ``size`` neurons outward from ``seed``.

    The next neuron is the inactive graph neighbour of the active set with the
    largest total ``|T[j, i]|`` over active ``i`` (smallest index on ties).
    With ``coords`` the nearest neighbour by Euclidean distance to any active
    neuron is taken instead.  ``stalled`` is set when no inactive neighbour
    is left before ``size`` is reached.
    """
    t = check_weight_matrix(t)
    n = t.shape[0]
    if not 1 <= seed <= n:
        raise DimensionMismatchError(f"seed {seed} is outside 1..{n}")
    if value not in (1, -1):
        raise ContractViolationError(f"seed value must be +1 or -1, got {value}")
    if not 1 <= size <= n:
        raise ContractViolationError(f"spread size must lie in 1..{n}, got {size}")
    if rule not in RULES:
        raise ContractViolationError(f"unknown spread rule {rule!r}; choose from {RULES}")
    if coords is not None:
        missing = [i for i in range(1, n + 1) if i not in coords]
        if missing:
            raise DimensionMismatchError(f"no coordinates for neurons {missing}")

    w = [[int(x) for x in row] for row in t]
    values = {seed - 1: value}
    visit = [seed - 1]
    parents: list[Optional[int]] = [None]
    stalled = False
    while len(visit) < size:
        candidates = [
            j for j in range(n) if j not in values and any(w[j][i] for i in visit)
        ]
        if not candidates:
            stalled = True
            break
        if coords is None:
            j = min(candidates, key=lambda j: (-sum(abs(w[j][i]) for i in visit), j))
        else:
            j = min(
                candidates,
                key=lambda j: (min(_distance(coords, j + 1, i + 1) for i in visit), j),
            )
        linked = [i for i in visit if w[j][i]]
        parent = max(linked, key=lambda i: abs(w[j][i]))  # max keeps the earliest on ties
        if rule == "strongest":
            values[j] = sgn(w[j][parent] * values[parent])
        else:
            values[j] = sgn(sum(w[j][i] * values[i] for i in visit))
        visit.append(j)
        parents.append(parent + 1)

    fragment = Fragment(tuple((i + 1, values[i]) for i in visit), n)
    return SpreadResult(fragment, tuple(i + 1 for i in visit), tuple(parents), stalled)


def _distance(coords: Coordinates, a: int, b: int) -> float:
    (xa, ya), (xb, yb) = coords[a], coords[b]
    return math.hypot(xa - xb, ya - yb)


def spread_order(spread: SpreadResult) -> UpdateOrder:
    """Visit order with the spread clamped, followed by the rest ascending."""
    return UpdateOrder.seed_first(spread.visit_order, spread.fragment.n)


def spread_then_recall(
    t,
    seed: int,
    value: int,
    size: int,
    coords: Coordinates | None = None,
    rule: str = "strongest",
) -> BipolarVector:
    """Locally spread a fragment from one neuron, clamp it, and recall the rest."""
    t = check_weight_matrix(t)
    n = t.shape[0]
    spread = local_spread(t, seed, value, size, coords, rule)
    frag = spread.fragment
    if sorted(frag.indices) == list(range(1, len(frag) + 1)):
        result, _ = recall(decompose(t), Fragment(tuple(sorted(frag.assignments)), n))
    else:
        result, _ = ordered_recall(t, frag, spread_order(spread))
    return result


def spread_policy(t, coords: Coordinates | None = None):
    """Order policy for :func:`spreadmem.search.one_bit_capacity`: the full
    local-spread visit order from the seed (the rest ascending if it stalls)."""
    t = check_weight_matrix(t)

    def policy(seed: int, n: int) -> UpdateOrder:
        # Neighbour selection ignores the seed value, so +1 stands in for both.
        spread = local_spread(t, seed, 1, n, coords)
        return UpdateOrder(spread_order(spread).order, 1)

    return policy
