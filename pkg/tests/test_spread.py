import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spreadmem.core import train
from spreadmem.errors import ContractViolationError, DimensionMismatchError
from spreadmem.search import one_bit_capacity
from spreadmem.spread import build_graph, local_spread, spread_policy, spread_then_recall

from conftest import EX1_MEMORIES, EX1_T, EX2_MEMORIES, EX2_T
from strategies import memory_sets


def test_graph_example1():
    g = build_graph(EX1_T)
    assert len(g.edges) == 10
    edges = {(e.i, e.j): e for e in g.edges}
    assert edges[(3, 4)].weight == 3 and edges[(3, 4)].sign == "positive"
    assert edges[(1, 3)].weight == -1 and edges[(1, 3)].sign == "negative"


def test_graph_example2():
    g = build_graph(EX2_T)
    assert len(g.edges) == 6
    pos = {(e.i, e.j) for e in g.edges if e.sign == "positive"}
    assert pos == {(1, 4), (2, 3)}
    assert all(e.weight == 3 for e in g.edges if e.sign == "positive")
    assert all(e.weight == -1 for e in g.edges if e.sign == "negative")


def test_graph_zero_matrix():
    assert build_graph(np.zeros((3, 3), int)).edges == ()


@given(memory_sets(max_n=9))
def test_graph_roundtrip(mems):
    t = train(mems)
    g = build_graph(t)
    np.testing.assert_array_equal(g.to_matrix(), t)
    assert all(e.weight != 0 and e.i < e.j for e in g.edges)


def test_dot_export():
    dot = build_graph(EX2_T).to_dot()
    assert dot.startswith("graph interconnection {\n")
    assert "  n1;\n" in dot and "  n4;\n" in dot
    assert "n1 -- n4 [color=blue, label=3, penwidth=3];" in dot
    assert "n1 -- n2 [color=red, label=-1, penwidth=1];" in dot
    assert dot.endswith("}\n")


def test_spread_example1_size3():
    res = local_spread(EX1_T, 1, 1, 3)
    assert res.fragment.assignments == ((1, 1), (2, 1), (3, -1))
    assert res.visit_order == (1, 2, 3)
    assert not res.stalled


def test_spread_example1_size2():
    res = local_spread(EX1_T, 1, 1, 2)
    assert res.fragment.assignments == ((1, 1), (2, 1))


def test_sum_rule_differs_on_neuron3():
    # Summing over both active neurons gives -1*1 + 1*1 = 0 -> +1 on neuron 3.
    res = local_spread(EX1_T, 1, 1, 3, rule="sum")
    assert res.fragment.assignments == ((1, 1), (2, 1), (3, 1))


def test_size2_never_yields_one_minus_one():
    # Whichever neighbour is picked, neuron 2 copies sgn(T[2,1] * +1) = +1.
    for rule in ("strongest", "sum"):
        for coords in (None, {1: (0, 0), 2: (1, 0), 3: (5, 0), 4: (6, 0), 5: (7, 0)}):
            frag = local_spread(EX1_T, 1, 1, 2, coords, rule).fragment
            assert (2, -1) not in frag.assignments


def test_spread_size1():
    res = local_spread(EX1_T, 4, -1, 1)
    assert res.fragment.assignments == ((4, -1),)
    assert not res.stalled


def test_spread_stalls_on_disconnected():
    t = np.zeros((3, 3), int)
    res = local_spread(t, 2, 1, 3)
    assert res.stalled and res.visit_order == (2,)


def test_spread_coordinates_choose_nearest():
    coords = {1: (0, 0), 2: (9, 0), 3: (1, 0), 4: (2, 0), 5: (3, 0)}
    res = local_spread(EX1_T, 1, 1, 5, coords)
    assert res.visit_order == (1, 3, 4, 5, 2)


def test_spread_coordinates_missing():
    with pytest.raises(DimensionMismatchError):
        local_spread(EX1_T, 1, 1, 2, {1: (0, 0)})


@pytest.mark.parametrize("kwargs", [
    dict(seed=0, value=1, size=1),
    dict(seed=6, value=1, size=1),
    dict(seed=1, value=0, size=1),
    dict(seed=1, value=1, size=0),
    dict(seed=1, value=1, size=6),
    dict(seed=1, value=1, size=2, rule="nearest"),
])
def test_spread_invalid(kwargs):
    with pytest.raises((ContractViolationError, DimensionMismatchError)):
        local_spread(EX1_T, **kwargs)


@settings(max_examples=150, deadline=None)
@given(memory_sets(max_n=8), st.data())
def test_spread_locality_and_determinism(mems, data):
    t = train(mems)
    n = len(mems[0])
    seed = data.draw(st.integers(1, n))
    value = data.draw(st.sampled_from([1, -1]))
    size = data.draw(st.integers(1, n))
    res = local_spread(t, seed, value, size)
    assert res == local_spread(t, seed, value, size)
    assert res.visit_order[0] == seed
    assert res.fragment.indices == res.visit_order
    for k, j in enumerate(res.visit_order[1:], start=1):
        earlier = res.visit_order[:k]
        assert any(t[j - 1, i - 1] != 0 for i in earlier)
        assert res.parents[k] in earlier
    assert res.stalled == (len(res.visit_order) < size)


def test_spread_then_recall_examples():
    assert spread_then_recall(EX1_T, 1, 1, 3) == EX1_MEMORIES[2]
    assert spread_then_recall(EX1_T, 1, 1, 1) == EX1_MEMORIES[0]
    assert spread_then_recall(EX2_T, 1, -1, 1) == EX2_MEMORIES[2]


def test_spread_then_recall_non_prefix_fragment():
    # From neuron 4 the spread is not a prefix, so recall follows the visit order.
    res = local_spread(EX1_T, 4, -1, 2)
    assert res.visit_order == (4, 3)
    out = spread_then_recall(EX1_T, 4, -1, 2)
    assert out[3] == -1 and out[2] == -1


def test_spread_policy_in_capacity():
    t = train(EX1_MEMORIES)
    rep = one_bit_capacity(t, EX1_MEMORIES, spread_policy(t))
    assert rep.distinct_count <= rep.bound
    for e in rep.entries:
        assert e.order.order[0] == e.seed
