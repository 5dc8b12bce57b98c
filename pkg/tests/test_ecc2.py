"""Matching-based decision for eccentricity-2 targets."""

import random

import pytest

from conftest import random_connected_graph
from cupstack.graphs import Configuration, Graph, shells, verify_plan
from cupstack.ecc2 import (diam2_decide, ecc2_decide, ecc2_plan,
                           plan_from_matching)
from cupstack.families import (complete_graph, cycle_graph, multipartite_graph,
                               petersen_graph, star_graph)
from cupstack.matching import Matching
from cupstack.oracle import oracle_decide


def test_petersen_every_target_true():
    g = petersen_graph()
    for r in range(g.n):
        w = ecc2_decide(g, r)
        assert w.decision
        n2 = set(shells(g, r)[2])
        assert len(n2) == 6 and n2 <= w.matching.vertices()
        assert w.matching.size >= 3


def test_star_leaf_false():
    g = star_graph(3)
    for leaf in (1, 2, 3):
        w = ecc2_decide(g, leaf)
        assert not w.decision and w.matching is None


def test_k33_true():
    g = multipartite_graph([3, 3])
    for r in range(6):
        assert ecc2_decide(g, r).decision


def test_requires_eccentricity_two():
    with pytest.raises(ValueError):
        ecc2_decide(complete_graph(4), 0)
    with pytest.raises(ValueError):
        ecc2_decide(cycle_graph(7), 0)


def test_plan_from_matching_c5():
    g = cycle_graph(5)
    plan = plan_from_matching(g, 0, Matching.of([(2, 3)]))
    assert [(m.src, m.dst) for m in plan.moves] == [
        (2, 3), (3, 0), (1, 0), (4, 0)]
    assert verify_plan(g, plan)


def test_plan_from_matching_k3_dominating():
    g = complete_graph(3)
    plan = plan_from_matching(g, 0, Matching.of([]))
    assert [(m.src, m.dst) for m in plan.moves] == [(1, 0), (2, 0)]
    assert verify_plan(g, plan)


def test_plan_from_matching_rejects_unsaturated():
    g = cycle_graph(5)
    with pytest.raises(ValueError, match="not matched"):
        plan_from_matching(g, 0, Matching.of([]))


def test_petersen_plan_accepted():
    g = petersen_graph()
    for r in range(g.n):
        plan = ecc2_plan(g, r)
        assert plan is not None and verify_plan(g, plan)


def test_diam2_verdicts():
    assert all(w.decision for w in diam2_decide(petersen_graph()).values())
    verdicts = diam2_decide(multipartite_graph([4, 2]))
    assert [verdicts[r].decision for r in range(6)] == [
        False, False, False, False, True, True]
    with pytest.raises(ValueError):
        diam2_decide(cycle_graph(7))


def test_witness_structure_is_consistent():
    g = petersen_graph()
    w = ecc2_decide(g, 0)
    n2 = set(shells(g, 0)[2])
    for comp in w.critical_components:
        assert set(comp) <= n2
    comp_sets = [set(c) for c in w.ge.I_components]
    for a, ci in w.assignment:
        assert a in w.ge.A and 0 <= ci < len(comp_sets)


def test_tree_criterion():
    # For a tree whose root has eccentricity 2 the verdict has a closed
    # form: true iff every neighbor of the root has degree at most 2
    # (each grandchild leaf then pairs with its unique parent).
    rng = random.Random(1414)
    checked = 0
    for _ in range(300):
        n = rng.randint(3, 10)
        parents = [rng.randrange(i) for i in range(1, n)]
        g = Graph(n, [(i + 1, p) for i, p in enumerate(parents)])
        for r in range(n):
            if max(g.bfs_from(r)) != 2:
                continue
            expected = all(len(g.adj[v]) <= 2 for v in g.adj[r])
            assert ecc2_decide(g, r).decision == expected
            checked += 1
    assert checked > 50


def test_agrees_with_oracle_random():
    rng = random.Random(60660)
    checked = 0
    for _ in range(250):
        g = random_connected_graph(rng, rng.randint(3, 6))
        ones = Configuration.all_ones(g.n)
        for r in range(g.n):
            sh = shells(g, r)
            if len(sh) != 3:
                continue
            w = ecc2_decide(g, r)
            assert w.decision == oracle_decide(g, ones, r)
            if w.decision:
                assert verify_plan(g, plan_from_matching(g, r, w.matching))
            checked += 1
    assert checked > 100
