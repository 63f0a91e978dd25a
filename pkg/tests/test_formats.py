"""Text format round-trips and error reporting."""

import random

import pytest

from treepack import (
    FormatError,
    Mode,
    SteinerInstance,
    build,
    complete_packing,
    complete_symmetric,
    parse_digraph,
    parse_flexible,
    parse_hypergraph,
    parse_instance,
    parse_tripartite,
    to_dot,
    write_digraph,
    write_instance,
)


def test_parse_digraph_basic():
    d = parse_digraph("# cycle\nn 3\n\na 0 1\na 1 2\na 2 0\n")
    assert d.n == 3
    assert d.arc_pairs == {(0, 1), (1, 2), (2, 0)}


def test_parse_digraph_errors_name_the_line():
    with pytest.raises(FormatError, match="line 2"):
        parse_digraph("n 3\na 0 0\n")
    with pytest.raises(FormatError, match="line 3"):
        parse_digraph("n 3\na 0 1\na 0 1\n")
    with pytest.raises(FormatError, match="line 1"):
        parse_digraph("a 0 1\nn 3\n")
    with pytest.raises(FormatError, match="line 2"):
        parse_digraph("n 2\na 0 5\n")
    with pytest.raises(FormatError, match="missing n"):
        parse_digraph("# empty\n")
    with pytest.raises(FormatError, match="integer"):
        parse_digraph("n x\n")
    with pytest.raises(FormatError, match="unknown tag"):
        parse_digraph("n 2\nz 0 1\n")


def test_parse_digraph_rejects_instance_lines():
    with pytest.raises(FormatError):
        parse_digraph("n 3\na 0 1\nS 0 1\nr 0\n")


def test_parse_instance():
    inst = parse_instance("n 4\na 0 1\na 1 2\nS 0 2 1\nr 0\n")
    assert inst.terminals == frozenset({0, 1, 2})
    assert inst.root == 0
    with pytest.raises(FormatError, match="missing S"):
        parse_instance("n 2\na 0 1\nr 0\n")
    with pytest.raises(FormatError, match="missing r"):
        parse_instance("n 2\na 0 1\nS 0 1\n")
    with pytest.raises(FormatError, match="root is not"):
        parse_instance("n 3\na 0 1\nS 0 1\nr 2\n")
    with pytest.raises(FormatError, match="two terminals"):
        parse_instance("n 3\na 0 1\nS 0\nr 0\n")


def test_parse_flexible():
    d, S, r = parse_flexible("n 2\na 0 1\n")
    assert S is None and r is None
    d, S, r = parse_flexible("n 2\na 0 1\nS 0 1\nr 1\n")
    assert S == frozenset({0, 1}) and r == 1


def test_round_trip_canonical():
    rng = random.Random(51)
    for _ in range(40):
        n = rng.randint(1, 6)
        arcs = [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < 0.4]
        d = build(n, sorted(arcs))
        text = write_digraph(d)
        assert text.endswith("\n")
        assert parse_digraph(text) == d
        assert write_digraph(parse_digraph(text)) == text


def test_round_trip_instance():
    d = complete_symmetric(4)
    inst = SteinerInstance(d, frozenset({0, 2, 3}), 2)
    text = write_instance(inst)
    back = parse_instance(text)
    assert back.graph == d
    assert back.terminals == inst.terminals
    assert back.root == inst.root
    assert write_instance(back) == text


def test_parse_hypergraph():
    n, edges = parse_hypergraph("hn 4\nhe 0 1\nhe 1 2 3\n")
    assert n == 4
    assert edges == [frozenset({0, 1}), frozenset({1, 2, 3})]
    with pytest.raises(FormatError):
        parse_hypergraph("hn 2\nhe 0\n")
    with pytest.raises(FormatError):
        parse_hypergraph("he 0 1\n")


def test_parse_tripartite():
    q, edges = parse_tripartite("q 2\ne 0 2\ne 1 0\n")
    assert q == 2
    assert (0, 2) in edges and (0, 1) in edges
    with pytest.raises(FormatError, match="differ"):
        parse_tripartite("q 1\ne 1 1\n")
    with pytest.raises(FormatError):
        parse_tripartite("q 1\ne 0 3\n")


def test_to_dot():
    d = build(3, [(0, 1), (1, 2)])
    text = to_dot(d)
    assert text.startswith("digraph")
    assert "0 -> 1" in text
    pk = complete_packing(3, (0, 1, 2), 0)
    deco = to_dot(pk.instance.graph, pk)
    assert 'label="t1"' in deco and 'label="t2"' in deco
