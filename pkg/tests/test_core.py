"""Digraph container, instance, and certificate validation tests."""

import random

import pytest

from treepack import (
    CertificateError,
    Digraph,
    GraphError,
    Mode,
    OutTree,
    SteinerInstance,
    TreePacking,
    build,
    complement,
    complete_bipartite_symmetric,
    complete_symmetric,
    is_eulerian,
    is_symmetric,
    reverse,
)


def test_build_basic():
    d = build(3, [(0, 1), (1, 2)])
    assert d.n == 3
    assert d.arcs == ((0, 1), (1, 2))
    assert d.has_arc(0, 1)
    assert not d.has_arc(1, 0)
    assert d.successors(1) == [2]
    assert d.predecessors(1) == [0]
    assert d.out_degree(0) == 1
    assert d.in_degree(2) == 1


def test_build_rejects_bad_arcs():
    with pytest.raises(GraphError):
        build(2, [(0, 0)])
    with pytest.raises(GraphError):
        build(2, [(0, 2)])
    with pytest.raises(GraphError):
        build(2, [(0, 1), (0, 1)])
    with pytest.raises(GraphError):
        build(-1, [])


def test_multigraph_allows_parallel_arcs():
    d = build(2, [(0, 1), (0, 1)], require_simple=False)
    assert d.n == 2
    assert len(d.arcs) == 2
    assert not d.simple
    assert d.out_degree(0) == 2


def test_arc_pairs_and_arcs_within():
    d = build(4, [(0, 1), (1, 2), (2, 0), (3, 0)])
    assert d.arc_pairs == frozenset({(0, 1), (1, 2), (2, 0), (3, 0)})
    within = d.arcs_within({0, 1, 2})
    assert sorted(d.arcs[i] for i in within) == [(0, 1), (1, 2), (2, 0)]


def test_drop_arcs():
    d = build(3, [(0, 1), (1, 2), (2, 0)])
    e = d.drop_arcs([1])
    assert e.arcs == ((0, 1), (2, 0))
    assert d.arcs == ((0, 1), (1, 2), (2, 0))


def test_value_semantics():
    a = build(3, [(0, 1), (1, 2)])
    b = build(3, [(0, 1), (1, 2)])
    assert a == b
    assert hash(a) == hash(b)
    assert a != build(3, [(0, 1)])
    # arc ids are positional, so ordering is part of the value
    c = build(3, [(1, 2), (0, 1)])
    assert a != c
    assert a.arc_pairs == c.arc_pairs


def test_complement_and_reverse():
    d = build(3, [(0, 1), (1, 2)])
    c = complement(d)
    assert c.arc_pairs == frozenset({(0, 2), (1, 0), (2, 0), (2, 1)})
    r = reverse(d)
    assert r.arc_pairs == frozenset({(1, 0), (2, 1)})
    full = complete_symmetric(4)
    assert complement(full).arcs == ()


def test_complement_is_involution():
    rng = random.Random(7)
    for _ in range(30):
        n = rng.randint(1, 6)
        arcs = [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < 0.4]
        d = build(n, arcs)
        assert complement(complement(d)) == d


def test_symmetry_predicates():
    assert is_symmetric(complete_symmetric(4))
    assert is_symmetric(build(2, []))
    assert not is_symmetric(build(2, [(0, 1)]))
    assert is_symmetric(complete_bipartite_symmetric(2, 3))


def test_eulerian_predicate():
    cycle = build(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert is_eulerian(cycle)
    assert is_eulerian(complete_symmetric(3))
    assert not is_eulerian(build(3, [(0, 1), (1, 2)]))
    # balanced but disconnected on non-isolated vertices
    two_cycles = build(4, [(0, 1), (1, 0), (2, 3), (3, 2)])
    assert not is_eulerian(two_cycles)
    # isolated vertices are fine
    padded = build(5, [(0, 1), (1, 2), (2, 0)])
    assert is_eulerian(padded)


def test_complete_generators():
    k4 = complete_symmetric(4)
    assert len(k4.arcs) == 12
    assert all(k4.has_arc(u, v) for u in range(4) for v in range(4) if u != v)
    b23 = complete_bipartite_symmetric(2, 3)
    assert b23.n == 5
    assert len(b23.arcs) == 12
    assert not b23.has_arc(0, 1)
    assert b23.has_arc(0, 2) and b23.has_arc(2, 0)


def test_instance_validation():
    d = complete_symmetric(3)
    inst = SteinerInstance(d, frozenset({0, 1}), 0)
    assert inst.k == 2
    with pytest.raises(GraphError):
        SteinerInstance(d, frozenset({0, 1}), 2)  # root outside S
    with pytest.raises(GraphError):
        SteinerInstance(d, frozenset({0}), 0)  # too small
    with pytest.raises(GraphError):
        SteinerInstance(d, frozenset({0, 5}), 0)  # out of range


def test_out_tree_validate():
    t = OutTree(0, ((0, 1), (1, 2)))
    t.validate()
    assert t.vertices() == frozenset({0, 1, 2})
    assert t.leaves() == frozenset({2})
    with pytest.raises(CertificateError):
        OutTree(0, ((1, 2),)).validate()  # not connected from root
    with pytest.raises(CertificateError):
        OutTree(0, ((0, 1), (2, 1))).validate()  # in-degree 2
    with pytest.raises(CertificateError):
        OutTree(0, ((1, 0),)).validate()  # arc into root


def test_out_tree_sorted_equality():
    a = OutTree(0, ((0, 2), (0, 1)))
    b = OutTree(0, ((0, 1), (0, 2)))
    assert a == b


def test_packing_validate_vertex_mode():
    d = complete_symmetric(3)
    inst = SteinerInstance(d, frozenset({0, 1, 2}), 0)
    good = TreePacking(
        (OutTree(0, ((0, 1), (1, 2))), OutTree(0, ((0, 2), (2, 1)))),
        Mode.VERTEX,
        inst,
    )
    good.validate()
    assert good.is_valid()
    assert len(good) == 2


def test_packing_rejects_arc_overlap():
    d = complete_symmetric(3)
    inst = SteinerInstance(d, frozenset({0, 1, 2}), 0)
    bad = TreePacking(
        (OutTree(0, ((0, 1), (1, 2))), OutTree(0, ((0, 1), (0, 2)))),
        Mode.ARC,
        inst,
    )
    with pytest.raises(CertificateError):
        bad.validate()
    assert not bad.is_valid()


def test_packing_rejects_shared_internal_vertex():
    # arc-disjoint trees that share the non-terminal vertex 3
    d = complete_symmetric(5)
    inst = SteinerInstance(d, frozenset({0, 1}), 0)
    t1 = OutTree(0, ((0, 3), (3, 1)))
    t2 = OutTree(0, ((0, 2), (2, 3), (3, 4), (4, 1)))
    with pytest.raises(CertificateError):
        TreePacking((t1, t2), Mode.VERTEX, inst).validate()
    # the same pair is fine if only arcs must be disjoint
    TreePacking((t1, t2), Mode.ARC, inst).validate()


def test_packing_rejects_wrong_root_and_missing_terminal():
    d = complete_symmetric(3)
    inst = SteinerInstance(d, frozenset({0, 1, 2}), 0)
    with pytest.raises(CertificateError):
        TreePacking((OutTree(1, ((1, 0), (1, 2))),), Mode.ARC, inst).validate()
    with pytest.raises(CertificateError):
        TreePacking((OutTree(0, ((0, 1),)),), Mode.ARC, inst).validate()


def test_packing_rejects_foreign_arc():
    d = build(3, [(0, 1), (1, 2)])
    inst = SteinerInstance(d, frozenset({0, 2}), 0)
    with pytest.raises(CertificateError):
        TreePacking((OutTree(0, ((0, 2),)),), Mode.ARC, inst).validate()


def test_packing_multigraph_uses_arc_ids():
    d = build(2, [(0, 1), (0, 1)], require_simple=False)
    inst = SteinerInstance(d, frozenset({0, 1}), 0)
    t1 = OutTree(0, ((0, 1),), arc_ids=(0,))
    t2 = OutTree(0, ((0, 1),), arc_ids=(1,))
    TreePacking((t1, t2), Mode.ARC, inst).validate()
    clash = TreePacking(
        (OutTree(0, ((0, 1),), arc_ids=(0,)), OutTree(0, ((0, 1),), arc_ids=(0,))),
        Mode.ARC,
        inst,
    )
    with pytest.raises(CertificateError):
        clash.validate()


def test_empty_packing_is_valid():
    d = build(2, [(0, 1)])
    inst = SteinerInstance(d, frozenset({0, 1}), 0)
    p = TreePacking((), Mode.ARC, inst)
    p.validate()
    assert len(p) == 0
