"""Exhaustive packing oracle: frozen small cases plus consistency sweeps."""

import random

import pytest

from treepack import (
    BudgetExceededError,
    GraphError,
    Mode,
    PackingBudget,
    SteinerInstance,
    build,
    complete_symmetric,
    disjoint_paths_undirected,
    enumerate_minimal_trees,
    global_tree_connectivity,
    lambda_local,
    max_packing,
    two_linkage_directed,
)


def sym_c4():
    return build(4, [(0, 1), (1, 0), (1, 2), (2, 1), (2, 3), (3, 2), (3, 0), (0, 3)])


def test_minimal_trees_complete_triangle():
    inst = SteinerInstance(complete_symmetric(3), frozenset({0, 1, 2}), 0)
    trees = enumerate_minimal_trees(inst)
    assert sorted(t.arcs for t in trees) == [
        ((0, 1), (0, 2)),
        ((0, 1), (1, 2)),
        ((0, 2), (2, 1)),
    ]


def test_minimal_trees_directed_triangle():
    d = build(3, [(0, 1), (1, 2), (2, 0)])
    inst = SteinerInstance(d, frozenset({0, 2}), 0)
    trees = enumerate_minimal_trees(inst)
    assert [t.arcs for t in trees] == [((0, 1), (1, 2))]


def test_minimal_trees_have_terminal_leaves():
    rng = random.Random(21)
    for _ in range(40):
        n = rng.randint(2, 5)
        arcs = [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < 0.5]
        d = build(n, arcs)
        S = frozenset(rng.sample(range(n), rng.randint(2, n)))
        r = rng.choice(sorted(S))
        inst = SteinerInstance(d, S, r)
        for t in enumerate_minimal_trees(inst):
            t.validate()
            assert t.root == r
            assert S <= t.vertices()
            assert t.leaves() <= S


def test_max_packing_cycle():
    d = build(5, [(i, (i + 1) % 5) for i in range(5)])
    inst = SteinerInstance(d, frozenset({0, 2}), 0)
    assert max_packing(inst, Mode.ARC).value == 1
    assert max_packing(inst, Mode.VERTEX).value == 1


def test_max_packing_complete_graphs():
    for n in (3, 4, 5):
        d = complete_symmetric(n)
        inst = SteinerInstance(d, frozenset(range(n)), 0)
        for mode in (Mode.VERTEX, Mode.ARC):
            ans = max_packing(inst, mode)
            assert ans.value == n - 1
            assert ans.certificate is not None
            ans.certificate.validate()
            assert len(ans.certificate) == n - 1


def test_max_packing_sym_cycle_subset():
    inst = SteinerInstance(sym_c4(), frozenset({0, 1, 2}), 0)
    ans = max_packing(inst, Mode.VERTEX)
    assert ans.value == 2
    ans.certificate.validate()


def test_max_packing_zero_when_unreachable():
    d = build(3, [(1, 0), (2, 1)])
    inst = SteinerInstance(d, frozenset({0, 2}), 0)
    ans = max_packing(inst, Mode.ARC)
    assert ans.value == 0
    assert ans.certificate is None or len(ans.certificate) == 0


def test_vertex_value_never_exceeds_arc_value():
    rng = random.Random(22)
    for _ in range(60):
        n = rng.randint(2, 5)
        arcs = [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < 0.5]
        d = build(n, arcs)
        S = frozenset(rng.sample(range(n), rng.randint(2, n)))
        r = rng.choice(sorted(S))
        inst = SteinerInstance(d, S, r)
        va = max_packing(inst, Mode.ARC)
        vv = max_packing(inst, Mode.VERTEX)
        assert vv.value <= va.value
        s_min = min(lambda_local(d, r, s).value for s in S if s != r)
        assert va.value <= s_min
        for ans in (va, vv):
            if ans.certificate is not None:
                ans.certificate.validate()
                assert len(ans.certificate) == ans.value


def test_two_terminal_packing_equals_local_connectivity():
    # with S = {r, s} arc-disjoint trees are arc-disjoint r->s paths
    rng = random.Random(23)
    for _ in range(60):
        n = rng.randint(2, 5)
        arcs = [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < 0.5]
        d = build(n, arcs)
        r, s = rng.sample(range(n), 2)
        inst = SteinerInstance(d, frozenset({r, s}), r)
        assert max_packing(inst, Mode.ARC).value == lambda_local(d, r, s).value


def test_global_tree_connectivity_complete():
    k4 = complete_symmetric(4)
    for mode in (Mode.VERTEX, Mode.ARC):
        ans = global_tree_connectivity(k4, 3, mode)
        assert ans.value == 3
        assert ans.witness_set == ((0, 1, 2), 0)


def test_global_tree_connectivity_zero_short_circuit():
    d = build(4, [(0, 1), (1, 2), (2, 3)])
    ans = global_tree_connectivity(d, 2, Mode.ARC)
    assert ans.value == 0


def test_global_tree_connectivity_rejects_bad_k():
    d = complete_symmetric(3)
    with pytest.raises(GraphError):
        global_tree_connectivity(d, 1, Mode.ARC)
    with pytest.raises(GraphError):
        global_tree_connectivity(d, 4, Mode.ARC)


def test_budget_enforced():
    d = complete_symmetric(5)
    inst = SteinerInstance(d, frozenset({0, 1}), 0)
    with pytest.raises(BudgetExceededError):
        max_packing(inst, Mode.ARC, PackingBudget(max_n=4))
    with pytest.raises(BudgetExceededError):
        max_packing(inst, Mode.ARC, PackingBudget(max_arcs=10))
    with pytest.raises(BudgetExceededError):
        global_tree_connectivity(d, 2, Mode.ARC, PackingBudget(max_n=4))


def test_tiny_tree_cap_still_exact_enough():
    # caps force the fallback search; values must not change on small inputs
    tight = PackingBudget(tree_cap=2, mis_cap=1)
    for n in (3, 4):
        d = complete_symmetric(n)
        inst = SteinerInstance(d, frozenset(range(n)), 0)
        assert max_packing(inst, Mode.ARC, tight).value == n - 1


def test_disjoint_paths_undirected():
    d = sym_c4()
    assert disjoint_paths_undirected(d, [(0, 2), (1, 3)], frozenset()) is None
    got = disjoint_paths_undirected(d, [(0, 2)], frozenset())
    assert got == [[0, 1, 2]] or got == [[0, 3, 2]]
    # avoiding vertex 1 forces the other side
    got = disjoint_paths_undirected(d, [(0, 2)], frozenset({1}))
    assert got == [[0, 3, 2]]
    assert disjoint_paths_undirected(d, [(0, 2)], frozenset({1, 3})) is None


def test_disjoint_paths_share_no_vertices():
    d = complete_symmetric(6)
    got = disjoint_paths_undirected(d, [(0, 1), (2, 3), (4, 5)], frozenset())
    assert got is not None
    seen = set()
    for (s, t), p in zip([(0, 1), (2, 3), (4, 5)], got):
        assert p[0] == s and p[-1] == t
        for v in p:
            assert v not in seen
            seen.add(v)


def test_disjoint_paths_repeated_endpoint():
    # same source twice needs two openings at that vertex
    star = build(4, [(0, 1), (1, 0), (0, 2), (2, 0), (0, 3), (3, 0)])
    got = disjoint_paths_undirected(star, [(1, 0), (2, 0)], frozenset())
    assert got is not None
    assert sorted(len(p) for p in got) == [2, 2]


def test_two_linkage():
    bottleneck = build(5, [(0, 4), (4, 1), (2, 4), (4, 3)])
    assert two_linkage_directed(bottleneck, 0, 1, 2, 3) is None
    k5 = complete_symmetric(5)
    got = two_linkage_directed(k5, 0, 1, 2, 3)
    assert got is not None
    p1, p2 = got
    assert p1[0] == 0 and p1[-1] == 1
    assert p2[0] == 2 and p2[-1] == 3
    assert not set(p1) & set(p2)
    with pytest.raises(GraphError):
        two_linkage_directed(k5, 0, 1, 1, 2)
