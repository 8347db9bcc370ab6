from __future__ import annotations

import dataclasses
import itertools
import random

import pytest
from hypothesis import given, settings

from oddcycles.graph import Digraph, Walk
from oddcycles.instances import (
    bidirected_complete,
    cycle,
    hitting_set_instance,
    reroute_instance,
)
from oddcycles.structure import (
    BudgetExceeded,
    Certificate,
    CertificateError,
    HypothesisError,
    InstanceTooLarge,
    RerouteError,
    bramble_from_linked_set,
    certify,
    cycles_certificate,
    enumerate_directed_odd_cycles,
    find_well_linked_violation,
    hitting_set_from_walk_cover,
    is_k_linked,
    is_r_well_linked,
    majority_component,
    nu2_exact,
    reroute_to_odd_cycles,
    tau_exact,
    well_linked_local_step,
)
from oddcycles.walls import generate_cylindrical_wall, generate_parity_counterexample

from conftest import digraphs
from oracles import (
    has_odd_closed_walk,
    min_odd_cycle_transversal,
    nu2_by_milp,
    odd_cycles,
    random_digraph,
)

TWO_TRIANGLES = Digraph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
BOWTIE = Digraph.from_edges(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])


# -- certificates -----------------------------------------------------------


def test_certify_refuses_false_claims():
    with pytest.raises(CertificateError):
        certify(cycle(3), kind="cover", subject="tau", value=0, witnesses=((),))
    with pytest.raises(CertificateError):
        certify(cycle(3), kind="bogus", subject="x", value=0, witnesses=())


def test_certificate_rejects_duplicate_cycles():
    cert = Certificate("packing", "nu2", 2, ((0, 1, 2), (1, 2, 0)))
    assert not cert.verify(cycle(3))


# -- well-linked and linked sets --------------------------------------------


def test_bidirected_k4_is_well_linked():
    assert is_r_well_linked(bidirected_complete(4), range(4), 1) is True


def test_path_ends_are_not_well_linked():
    g = Digraph.from_edges(3, [(0, 1), (1, 2)])
    cert = is_r_well_linked(g, [0, 2], 1)
    assert isinstance(cert, Certificate) and cert.verified
    assert cert.kind == "well-linked-violation"
    assert cert.extra["direction"] == "backward" and cert.value == 0


def test_well_linked_modes_and_sampling():
    g = bidirected_complete(14)
    assert is_r_well_linked(g, range(14), 2, samples=50) is True
    assert is_r_well_linked(g, range(6), 1, mode="all") is True
    with pytest.raises(ValueError):
        is_r_well_linked(g, range(4), 1, mode="some")


def test_bidirected_k5_is_two_linked():
    assert is_k_linked(bidirected_complete(5), range(5), 2) is True


def test_two_triangles_tie_is_not_linked():
    cert = is_k_linked(TWO_TRIANGLES, range(6), 1)
    assert isinstance(cert, Certificate) and cert.witnesses == ((),)


def test_well_linked_implies_linked():
    # a 1-well-linked set of order 5 is 1-linked
    rng = random.Random(41)
    hits = 0
    for _ in range(150):
        n = rng.randint(5, 7)
        g = random_digraph(n, rng.choice((0.6, 0.8)), rng)
        ts = rng.sample(range(n), 5)
        if is_r_well_linked(g, ts, 1) is True:
            hits += 1
            assert is_k_linked(g, ts, 1) is True
    assert hits > 10


# -- brambles ---------------------------------------------------------------


def test_bramble_of_k5():
    g = bidirected_complete(5)
    bramble = bramble_from_linked_set(g, range(5), 2)
    sets = set(bramble.elements)
    assert sets == {frozenset(range(5))} | {frozenset(range(5)) - {v} for v in range(5)}
    assert all(bramble.strongly_connected)
    for a, b in itertools.combinations(bramble.elements, 2):
        assert a & b
    assert bramble.touching(g) and bramble.is_cover(range(5))
    # no single vertex covers it: C_{v} avoids v
    assert not any(bramble.is_cover([v]) for v in range(5))


def test_bramble_needs_linked_set():
    with pytest.raises(ValueError):
        bramble_from_linked_set(TWO_TRIANGLES, range(6), 1)


# -- the local Menger step for minimum transversals -------------------------


def _two_blobs(rng: random.Random) -> Digraph:
    # two dense pieces joined by a few one-way edges, so transversals split
    left, right = rng.randint(3, 4), 3
    a = random_digraph(left, 0.6, rng)
    b = random_digraph(right, 0.6, rng)
    edges = list(a.edges) + [(u + left, v + left) for u, v in b.edges]
    edges += [(rng.randrange(left), left + rng.randrange(right)) for _ in range(rng.randint(0, 2))]
    return Digraph.from_edges(left + right, edges)


def test_local_step_on_random_small_digraphs():
    rng = random.Random(7)
    violations = 0
    for _ in range(200):
        g = _two_blobs(rng) if rng.random() < 0.5 else random_digraph(rng.randint(3, 7), 0.4, rng)
        tau, cover = tau_exact(g)
        assert tau == min_odd_cycle_transversal(g)
        ts = cover.witnesses[0]
        if len(ts) < 2:
            continue
        cert = find_well_linked_violation(g, ts, 1)
        if cert is None:
            continue
        violations += 1
        step = well_linked_local_step(g, cert)
        assert step.is_transversal
        assert not has_odd_closed_walk(g, step.assembled)
        # T is minimum, so the assembled set cannot beat it
        assert len(step.assembled) >= len(ts)
    assert violations > 0


# -- hitting set ------------------------------------------------------------


def test_hitting_set_on_bipartite_wall():
    g, wall = generate_cylindrical_wall(3)
    nails = [v for v in wall.nails if wall.colour[v] == 0]
    ts = sorted(wall.vertices())[:5]
    out = hitting_set_from_walk_cover(g, ts, wall, nails, (), 2)
    assert out.vertices == ()
    assert set(ts) <= set(out.majority)


@pytest.mark.parametrize("seed", range(8))
def test_hitting_set_engineered(seed):
    ins = hitting_set_instance(seed)
    out = hitting_set_from_walk_cover(ins.g, ins.ts, ins.wall, ins.nails, ins.xs, ins.t)
    assert not has_odd_closed_walk(ins.g, out.vertices)
    assert len(out.vertices) <= len(ins.xs) + len(set(ins.ts) - set(out.majority))
    assert out.flags["nails_on_wall"] and out.flags["nails_one_side"]
    assert len(out.vertices) >= min_odd_cycle_transversal(ins.g)


def test_hitting_set_errors():
    ins = hitting_set_instance(0)
    with pytest.raises(ValueError, match="below t"):
        hitting_set_from_walk_cover(ins.g, ins.ts, ins.wall, ins.nails, ins.xs, len(ins.xs))
    with pytest.raises(HypothesisError) as info:
        hitting_set_from_walk_cover(ins.g, (), ins.wall, ins.nails, ins.xs, ins.t)
    assert info.value.reason == "t-not-transversal"


def test_hitting_set_rejects_uncovering_x():
    # a triangle whose vertices are all nails has an odd nail-walk
    g = cycle(3)
    with pytest.raises(ValueError, match="cover"):
        hitting_set_from_walk_cover(g, [0], None, [0, 1, 2], (), 2)


def test_hitting_set_reports_odd_majority_component():
    # nails 3, 4 are isolated, so X = {} covers odd nail-walks, yet the
    # strong component holding T is the triangle itself
    g = Digraph.from_edges(5, [(0, 1), (1, 2), (2, 0)])
    with pytest.raises(HypothesisError) as info:
        hitting_set_from_walk_cover(g, [0, 1, 2], None, [3, 4], (), 1)
    assert info.value.reason == "hx-contains-odd-cycle"
    assert info.value.witness == Walk((0, 1, 2, 0))


def test_hitting_set_without_majority():
    with pytest.raises(HypothesisError) as info:
        hitting_set_from_walk_cover(TWO_TRIANGLES, [0, 3], None, [], (), 1)
    assert info.value.reason == "no-majority-component"
    assert majority_component(TWO_TRIANGLES, [0, 1, 3]) == (0, 1, 2)


# -- rerouting --------------------------------------------------------------


@pytest.mark.parametrize("k", [1, 2])
@pytest.mark.parametrize("seed", range(5))
def test_reroute_produces_odd_cycles(k, seed):
    ins = reroute_instance(k, w=6, seed=seed)
    cert = reroute_to_odd_cycles(ins.wall, ins.region, ins.linkage)
    assert cert.verified and cert.value == k and len(cert.witnesses) == k
    g = ins.wall.host
    seen: dict[int, int] = {}
    for c in cert.witnesses:
        assert len(c) % 2 == 1 and len(set(c)) == len(c)
        assert all(b in g.out_adj[a] for a, b in zip(c, c[1:] + c[:1]))
        for v in c:
            seen[v] = seen.get(v, 0) + 1
    assert max(seen.values()) <= 2


def test_reroute_rejects_endpoint_off_window():
    ins = reroute_instance(1, w=6, seed=0)
    # a window two columns to the side misses the chord's endpoints
    first = 1 if ins.region.first_column > 2 else ins.wall.order - 1
    region = dataclasses.replace(ins.region, first_column=first)
    with pytest.raises(RerouteError) as info:
        reroute_to_odd_cycles(ins.wall, region, ins.linkage)
    assert info.value.reason == "endpoint-off-W*"


def test_reroute_rejects_window_outside_wall():
    ins = reroute_instance(1, w=6, seed=0)
    region = dataclasses.replace(ins.region, first_row=12)
    with pytest.raises(RerouteError) as info:
        reroute_to_odd_cycles(ins.wall, region, ins.linkage)
    assert info.value.reason == "reserved-region-conflict"


# -- exact oracles ----------------------------------------------------------


def test_nu2_examples():
    assert nu2_exact(cycle(3))[0] == 1
    assert nu2_exact(BOWTIE)[0] == 2
    assert nu2_exact(cycle(4))[0] == 0


def test_nu2_on_counterexample_three():
    # overlapping odd cycles despite one at a time
    value, cert = nu2_exact(generate_parity_counterexample(3))
    assert value == 3 and cert.verified
    assert value >= 2


def test_nu2_budget():
    with pytest.raises(BudgetExceeded):
        nu2_exact(generate_parity_counterexample(3), cycle_budget=10)


def test_tau_examples():
    assert tau_exact(cycle(4))[0] == 0
    assert tau_exact(cycle(3))[0] == 1
    assert tau_exact(TWO_TRIANGLES)[0] == 2
    assert tau_exact(BOWTIE)[0] == 1


def test_tau_budget():
    with pytest.raises(InstanceTooLarge):
        tau_exact(generate_parity_counterexample(3), node_budget=3)


def test_enumeration_examples():
    assert len(enumerate_directed_odd_cycles(cycle(3)).cycles) == 1
    assert len(enumerate_directed_odd_cycles(bidirected_complete(3)).cycles) == 2
    g2 = generate_parity_counterexample(2)
    enum = enumerate_directed_odd_cycles(g2)
    assert list(enum.cycles) == odd_cycles(g2)
    part = enumerate_directed_odd_cycles(g2, limit=5)
    assert part.truncated and len(part.cycles) == 5


def test_cycles_certificate_verifies():
    cert = cycles_certificate(BOWTIE)
    assert cert.kind == "enumeration" and cert.value == 2 and cert.verified


@settings(max_examples=80)
@given(digraphs(max_n=6))
def test_nu2_matches_integer_programme(g):
    value, cert = nu2_exact(g)
    assert value == nu2_by_milp(g)
    assert cert.verify(g)


@given(digraphs(max_n=6))
def test_tau_is_minimum(g):
    value, cert = tau_exact(g)
    assert value == min_odd_cycle_transversal(g)
    ys = cert.witnesses[0]
    assert not has_odd_closed_walk(g, ys)
    for smaller in itertools.combinations(range(g.n), value - 1) if value else ():
        assert has_odd_closed_walk(g, smaller)


@given(digraphs(max_n=6))
def test_nu2_and_tau_vanish_together(g):
    assert (nu2_exact(g)[0] == 0) == (tau_exact(g)[0] == 0) == (not odd_cycles(g))
