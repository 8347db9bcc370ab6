from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from oddcycles.graph import (
    Digraph,
    GraphError,
    Walk,
    cycle_walk,
    enumerate_cycles,
    extract_odd_cycle_from_closed_odd_walk,
    find_directed_odd_cycle,
    find_odd_x_walk,
    has_directed_odd_cycle,
    is_odd_x_walk,
    normalize_cycle,
    odd_x_walk_exists,
    scc,
    underlying_bipartition,
)
from oddcycles.instances import cycle, splitting_example
from oddcycles.walls import generate_cylindrical_wall, generate_parity_counterexample

from conftest import digraphs, digraphs_with_set
from oracles import all_cycles, odd_cycles, odd_x_walk_by_lengths


def test_self_loops_are_rejected():
    with pytest.raises(GraphError):
        Digraph.from_edges(2, [(0, 0)])


def test_out_of_range_ids_are_rejected():
    with pytest.raises(GraphError):
        Digraph.from_edges(2, [(0, 2)])


def test_parallel_edges_collapse():
    g = Digraph.from_edges(2, [(0, 1), (0, 1), (1, 0)])
    assert g.m == 2 and g.edges == ((0, 1), (1, 0))


def test_walk_flags():
    w = Walk((0, 1, 2, 0))
    assert w.closed and w.length == 3 and w.parity == 1
    assert w.is_cycle() and not w.is_path()
    assert Walk((0, 1, 2)).is_path()
    assert w.is_walk_in(cycle(3))
    assert not Walk((0, 2)).is_walk_in(cycle(3))


def test_scc_of_path_is_singletons_in_order():
    g = Digraph.from_edges(3, [(0, 1), (1, 2)])
    assert scc(g).components == ((0,), (1,), (2,))


def test_scc_of_triangle():
    assert scc(cycle(3)).components == ((0, 1, 2),)


def test_scc_of_splitting_example():
    d, _ = splitting_example()
    assert scc(d).components == ((0, 1, 2, 3), (4,))


def test_scc_respects_removed_vertices():
    part = scc(cycle(3), removed=[1])
    assert part.component[1] == -1
    assert part.components == ((2,), (0,))


def test_bipartition_of_four_cycle():
    assert underlying_bipartition(cycle(4)) == ((0, 2), (1, 3))


def test_bipartition_of_triangle_is_absent():
    assert underlying_bipartition(cycle(3)) is None


def test_bipartition_of_wall_two():
    g, _ = generate_cylindrical_wall(2)
    parts = underlying_bipartition(g)
    assert parts is not None
    side = {v: i for i, part in enumerate(parts) for v in part}
    assert all(side[u] != side[v] for u, v in g.edges)


def test_odd_cycle_detection_examples():
    assert has_directed_odd_cycle(cycle(3))
    assert not has_directed_odd_cycle(cycle(4))
    assert has_directed_odd_cycle(generate_parity_counterexample(3))


def test_find_odd_cycle_on_triangle():
    assert find_directed_odd_cycle(cycle(3)) == Walk((0, 1, 2, 0))


def test_find_odd_cycle_absent_in_wall():
    g, _ = generate_cylindrical_wall(2)
    assert find_directed_odd_cycle(g) is None


def test_find_odd_cycle_prefers_least_triangle():
    g = Digraph.from_edges(6, [(3, 4), (4, 5), (5, 3), (0, 1), (1, 2), (2, 0)])
    assert find_directed_odd_cycle(g) == Walk((0, 1, 2, 0))
    assert find_directed_odd_cycle(g, removed=[1]) == Walk((3, 4, 5, 3))


def test_extract_from_single_triangle():
    w = Walk((0, 1, 2, 0))
    assert extract_odd_cycle_from_closed_odd_walk(w) == w


def test_extract_from_triangle_with_spliced_two_cycle():
    # 0 -> 1 -> 2 -> 0 -> 3 -> 0 has length 5
    w = Walk((0, 1, 2, 0, 3, 0))
    assert extract_odd_cycle_from_closed_odd_walk(w) == Walk((0, 1, 2, 0))


def test_extract_from_four_plus_three():
    w = Walk((0, 1, 2, 3, 0, 4, 5, 0))
    c = extract_odd_cycle_from_closed_odd_walk(w)
    assert c.is_cycle() and c.length == 3 and set(c.vertices) == {0, 4, 5}


def test_extract_rejects_even_walk():
    with pytest.raises(ValueError):
        extract_odd_cycle_from_closed_odd_walk(Walk((0, 1, 0)))


def test_odd_x_walk_examples():
    d, xs = splitting_example()
    walk = find_odd_x_walk(d, xs)
    assert walk is not None and walk.length == 3
    assert is_odd_x_walk(d, xs, Walk((0, 1, 3, 4)))
    assert not odd_x_walk_exists(d, xs, forbidden=[0])
    assert not odd_x_walk_exists(Digraph.from_edges(4, []), [0, 1, 2])


def test_closed_x_walks_count():
    g = cycle(3)
    w = find_odd_x_walk(g, [0])
    assert w == Walk((0, 1, 2, 0))


def test_enumerate_cycles_counts():
    assert list(enumerate_cycles(cycle(3))) == [(0, 1, 2)]
    bi = Digraph.from_edges(3, [(u, v) for u in range(3) for v in range(3) if u != v])
    assert len(list(enumerate_cycles(bi, odd_only=True))) == 2
    assert len(list(enumerate_cycles(bi))) == 5


# frozen from the brute-force enumerator in tests/oracles.py
FROZEN_ODD_CYCLE_COUNTS = {2: 55, 3: 6328}


@pytest.mark.parametrize("n", [2, 3])
def test_counterexample_odd_cycle_counts(n):
    g = generate_parity_counterexample(n)
    count = sum(1 for _ in enumerate_cycles(g, odd_only=True))
    assert count == FROZEN_ODD_CYCLE_COUNTS[n] == len(odd_cycles(g))


# -- properties ----------------------------------------------------------------


@given(digraphs(max_n=6))
def test_cycle_enumeration_matches_brute_force(g):
    ours = sorted((normalize_cycle(c) for c in enumerate_cycles(g)), key=lambda c: (len(c), c))
    assert ours == all_cycles(g)


@given(digraphs(max_n=6))
def test_witness_always_verifies(g):
    c = find_directed_odd_cycle(g)
    assert (c is not None) == bool(odd_cycles(g))
    if c is not None:
        assert c.closed and c.parity == 1 and c.is_cycle() and c.is_walk_in(g)


@given(digraphs(max_n=7))
def test_scc_order_is_topological(g):
    part = scc(g)
    assert all(part.component[u] <= part.component[v] for u, v in g.edges)
    assert sorted(v for c in part.components for v in c) == list(range(g.n))


@given(digraphs(min_n=2, max_n=6), st.data())
def test_extracted_cycle_is_subwalk(g, data):
    c = find_directed_odd_cycle(g)
    if c is None:
        return
    # splice closed detours into the cycle at random positions
    seq = list(c.vertices)
    for _ in range(data.draw(st.integers(0, 3))):
        i = data.draw(st.integers(0, len(seq) - 2))
        v = seq[i]
        succ = g.out_adj[v]
        back = [u for u in succ if v in g.out_adj[u]]
        if back:
            u = data.draw(st.sampled_from(back))
            seq[i + 1 : i + 1] = [u, v]
    walk = Walk(tuple(seq))
    out = extract_odd_cycle_from_closed_odd_walk(walk)
    assert out.is_cycle() and out.parity == 1
    assert set(out.edges()) <= set(walk.edges())


@given(digraphs_with_set(max_n=6, min_size=1))
def test_odd_x_walk_exists_matches_length_programme(case):
    g, xs = case
    assert odd_x_walk_exists(g, xs) == odd_x_walk_by_lengths(g, xs)
    w = find_odd_x_walk(g, xs)
    if w is not None:
        assert is_odd_x_walk(g, xs, w)


@given(digraphs_with_set(max_n=6, min_size=1), st.data())
def test_odd_x_walks_monotone_under_edge_addition(case, data):
    g, xs = case
    u = data.draw(st.integers(0, g.n - 1))
    v = data.draw(st.integers(0, g.n - 1))
    if u == v:
        return
    bigger = g.with_edges([(u, v)])
    assert odd_x_walk_exists(g, xs) <= odd_x_walk_exists(bigger, xs)


def test_cycle_walk_closes():
    assert cycle_walk((2, 0, 1)) == Walk((2, 0, 1, 2))
    assert normalize_cycle((2, 0, 1)) == (0, 1, 2)
