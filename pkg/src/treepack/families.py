"""Extremal families with known packing values and explicit certificates.

Each constructor returns small structured instances used to pin down the
boundary behaviour of the packing parameters: complete hosts achieve the
maximum possible value with an explicit packing, glued cliques force a
bottleneck through one cut vertex, joins of a clique with an independent
set meet their degree bound, and a Hamiltonian decomposition of the
complete bipartite graph yields complementary pairs whose packing values
add up one short of the extremes.
"""

from __future__ import annotations

from typing import NamedTuple

from .core import (
    Digraph,
    GraphError,
    Mode,
    OutTree,
    SteinerInstance,
    TreePacking,
    build,
    complement,
    complete_symmetric,
)


def complete_packing(n: int, terminals, root: int) -> TreePacking:
    """A packing of n - 1 internally disjoint (S, r)-trees in the complete
    symmetric digraph on n vertices, one tree through every non-root
    vertex.  This meets the trivial upper bound, so it certifies that
    every packing parameter of the complete host equals n - 1."""
    host = complete_symmetric(n)
    inst = SteinerInstance(host, frozenset(terminals), root)
    S = set(inst.terminals)
    r = inst.root
    trees = []
    for u in range(n):
        if u == r:
            continue
        if u in S:
            arcs = [(r, u)] + [(u, s) for s in sorted(S) if s not in (r, u)]
        else:
            arcs = [(r, u)] + [(u, s) for s in sorted(S) if s != r]
        trees.append(OutTree(root=r, arcs=tuple(arcs)))
    packing = TreePacking(tuple(trees), Mode.VERTEX, inst)
    packing.validate()
    return packing


def glued_cliques(t: int) -> Digraph:
    """Two symmetric cliques of order t sharing exactly the cut vertex
    t - 1, on vertices 0..2t-2.  Every tree for terminals on both sides
    must pass through the cut vertex, which pins the internally disjoint
    packing value at 1 while the arc-disjoint one stays large."""
    if t < 4:
        raise GraphError("glued_cliques needs t >= 4")
    arcs = set()
    left = range(t)
    right = range(t - 1, 2 * t - 1)
    for side in (left, right):
        for u in side:
            for v in side:
                if u != v:
                    arcs.add((u, v))
    return build(2 * t - 1, sorted(arcs))


def join_family(k: int, n: int) -> Digraph:
    """Symmetric join of a clique on 0..k-1 with an independent set on
    k..n-1: all arcs inside the clique plus all arcs between the two
    sides, both directions.  The independent side keeps every global
    packing parameter at exactly k."""
    if k < 1:
        raise GraphError("join_family needs k >= 1")
    if n < 3 * k:
        raise GraphError("join_family needs n >= 3k")
    arcs = []
    for u in range(k):
        for v in range(n):
            if u != v:
                arcs.append((u, v))
                if v >= k:
                    arcs.append((v, u))
    return build(n, sorted(arcs))


def ham_decompose_bipartite(a: int) -> list[tuple[int, ...]]:
    """Decomposition of the complete symmetric bipartite digraph on
    a + a vertices into a directed Hamiltonian cycles.

    Sides are 0..a-1 and a..2a-1.  Cycle j alternates sides, pairing
    vertex i with vertex a + (i + j) mod a.  Cycles are returned as
    vertex sequences (the closing arc back to the first vertex is
    implicit), with the aligned cycle j = 0 placed last.
    """
    if a < 2:
        raise GraphError("ham_decompose_bipartite needs a >= 2")
    cycles = []
    for j in list(range(1, a)) + [0]:
        seq = []
        for i in range(a):
            seq.append(i)
            seq.append(a + (i + j) % a)
        cycles.append(tuple(seq))
    return cycles


def ham_decomposition_ok(a: int) -> bool:
    """Direct arc accounting for ``ham_decompose_bipartite``: every cycle
    is Hamiltonian and alternates sides, the cycles are pairwise
    arc-disjoint, and together they cover the complete symmetric
    bipartite digraph exactly."""
    cycles = ham_decompose_bipartite(a)
    if len(cycles) != a:
        return False
    seen: set[tuple[int, int]] = set()
    for seq in cycles:
        if len(seq) != 2 * a or len(set(seq)) != 2 * a:
            return False
        if any((seq[i] < a) == (seq[(i + 1) % len(seq)] < a) for i in range(len(seq))):
            return False
        arcs = _cycle_arcs(seq)
        if seen & set(arcs):
            return False
        seen.update(arcs)
    want = {(u, v) for u in range(a) for v in range(a, 2 * a)}
    want |= {(v, u) for u, v in want}
    return seen == want


class NgPair(NamedTuple):
    """A digraph together with its complement."""

    d: Digraph
    complement: Digraph


def _cycle_arcs(seq: tuple[int, ...]) -> list[tuple[int, int]]:
    return [(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq))]


def nordhaus_gaddum_pair(a: int) -> NgPair:
    """A complementary pair on 2a vertices whose packing values sum to
    one less than the complete host's.

    ``d`` is the union of all but one cycle of the bipartite Hamiltonian
    decomposition, so it packs a - 1 arc-disjoint trees and no more.  Its
    complement packs a; ``nordhaus_gaddum_branchings`` builds the
    certificate.
    """
    if a < 2:
        raise GraphError("nordhaus_gaddum_pair needs a >= 2")
    cycles = ham_decompose_bipartite(a)
    arcs = sorted(arc for seq in cycles[:-1] for arc in _cycle_arcs(seq))
    d = build(2 * a, arcs)
    return NgPair(d, complement(d))


def nordhaus_gaddum_branchings(a: int) -> tuple[OutTree, ...]:
    """a arc-disjoint spanning out-branchings, rooted at vertex 0, of the
    complement half of ``nordhaus_gaddum_pair(a)``.  Spanning branchings
    contain an (S, r)-tree for every terminal choice, so they witness
    that every arc-disjoint packing value of the complement is at least a.
    """
    comp = nordhaus_gaddum_pair(a).complement
    aid = {pair: i for i, pair in enumerate(comp.arcs)}

    def tree(pairs) -> OutTree:
        pairs = tuple(sorted(pairs))
        return OutTree(root=0, arcs=pairs, arc_ids=tuple(aid[p] for p in pairs))

    side_b = range(a, 2 * a)
    branchings = []
    for hub in range(1, a):
        pairs = [(0, hub)]
        pairs += [(hub, j) for j in range(1, a) if j != hub]
        pairs += [(hub, a + hub)]
        pairs += [(a + hub, v) for v in side_b if v != a + hub]
        branchings.append(tree(pairs))
    last = [(0, a)]
    last += [(a, v) for v in side_b if v != a]
    last += [(a + i, (i + 1) % a) for i in range(a) if (i + 1) % a != 0]
    branchings.append(tree(last))
    return tuple(branchings)
