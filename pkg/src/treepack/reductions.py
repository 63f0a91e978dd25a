"""Hardness gadget generators with brute-force source-problem solvers.

Each ``*_reduce`` function turns an instance of a known hard problem into
a packing instance whose answer is forced to agree with the source
problem, and each has a matching brute-force solver for the source
problem so the equivalence can be checked exhaustively at desk scale.
The generators are deterministic, label every vertex they add, and
validate their preconditions loudly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .core import (
    Digraph,
    GraphError,
    Mode,
    SteinerInstance,
    build,
    is_eulerian,
)


@dataclass(frozen=True)
class ReductionOutput:
    """A generated packing instance together with the threshold the
    source problem pins down: the source instance is positive exactly
    when the packing value reaches ``threshold``.  ``provenance`` names
    every vertex the gadget added, and ``mode`` says which disjointness
    notion the equivalence is stated for."""

    instance: SteinerInstance
    threshold: int
    provenance: dict[int, str] = field(compare=False)
    mode: Mode = Mode.VERTEX


@dataclass(frozen=True)
class Hypergraph:
    """Vertices 0..n-1 and a tuple of hyperedges, each a frozenset of at
    least two vertices."""

    n: int
    edges: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise GraphError("need at least one vertex")
        norm = tuple(frozenset(e) for e in self.edges)
        object.__setattr__(self, "edges", norm)
        for e in norm:
            if len(e) < 2:
                raise GraphError("hyperedges need at least two vertices")
            if any(not 0 <= x < self.n for x in e):
                raise GraphError("hyperedge vertex out of range")


@dataclass(frozen=True)
class TripartiteInstance:
    """Tripartite vertex set of size 3q: part A is 0..q-1, part B is
    q..2q-1, part C is 2q..3q-1.  Edges are undirected pairs of distinct
    vertices and may also run inside a part."""

    q: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.q < 1:
            raise GraphError("need q >= 1")
        norm = []
        seen = set()
        for a, b in self.edges:
            a, b = int(a), int(b)
            if not (0 <= a < 3 * self.q and 0 <= b < 3 * self.q):
                raise GraphError(f"edge ({a}, {b}) out of range")
            if a == b:
                raise GraphError(f"edge ({a}, {b}) is a loop")
            key = (min(a, b), max(a, b))
            if key in seen:
                raise GraphError(f"duplicate edge ({a}, {b})")
            seen.add(key)
            norm.append(key)
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def part_a(self) -> range:
        return range(self.q)

    @property
    def part_b(self) -> range:
        return range(self.q, 2 * self.q)

    @property
    def part_c(self) -> range:
        return range(2 * self.q, 3 * self.q)

    def has_edge(self, x: int, y: int) -> bool:
        return (min(x, y), max(x, y)) in set(self.edges)


def amplify_3_2(base: SteinerInstance, k: int, l: int, mode: Mode = Mode.VERTEX) -> ReductionOutput:
    """Lift a three-terminal, two-tree instance to any k >= 3 terminals
    and l >= 2 trees without changing the answer.

    The output graph packs l trees exactly when the base packs 2: l - 2
    trees come for free through private hub pairs, and the two remaining
    trees are forced back into the base graph.  The same construction
    works for both disjointness modes.
    """
    if len(base.terminals) != 3:
        raise GraphError("amplification starts from a three-terminal instance")
    if k < 3:
        raise GraphError("need k >= 3")
    if l < 2:
        raise GraphError("need l >= 2")
    d0 = base.graph
    r = base.root
    s1, s2 = sorted(base.terminals - {r})
    n0 = d0.n
    u = [n0 + i for i in range(l - 2)]
    w = [n0 + (l - 2) + i for i in range(l - 2)]
    extra = [n0 + 2 * (l - 2) + j for j in range(k - 3)]
    provenance = {}
    for i, v in enumerate(u):
        provenance[v] = f"u{i + 1}"
    for i, v in enumerate(w):
        provenance[v] = f"w{i + 1}"
    for j, v in enumerate(extra):
        provenance[v] = f"s{j + 3}"
    terminals = [r, s1, s2] + extra
    arcs = list(d0.arcs)
    for ui, wi in zip(u, w):
        arcs.append((r, ui))
        arcs.append((ui, wi))
        for s in terminals:
            if s != r:
                arcs.append((wi, s))
    for sa in (s1, s2):
        for sj in extra:
            arcs.append((sa, sj))
    d = build(n0 + 2 * (l - 2) + (k - 3), arcs)
    inst = SteinerInstance(d, frozenset(terminals), r)
    return ReductionOutput(inst, l, provenance, mode)


def cllm_reduce(g: TripartiteInstance, k: int = 3) -> ReductionOutput:
    """Packing instance equivalent to partitioning a tripartite graph
    into connected part-transversal triples.

    Edges become 2-cycles.  A root adjacent to part A and terminals
    adjacent to parts B and C force every tree in an internally disjoint
    packing of size q to occupy exactly one connected triple.
    """
    if k < 3:
        raise GraphError("need k >= 3")
    q = g.q
    r = 3 * q
    terms = [r] + [3 * q + 1 + j for j in range(k - 1)]
    arcs = []
    for a, b in g.edges:
        arcs.append((a, b))
        arcs.append((b, a))
    for a in g.part_a:
        arcs.append((r, a))
        arcs.append((a, r))
    s1 = terms[1]
    for b in g.part_b:
        arcs.append((s1, b))
        arcs.append((b, s1))
    for sj in terms[2:]:
        for c in g.part_c:
            arcs.append((sj, c))
            arcs.append((c, sj))
    d = build(3 * q + k, sorted(arcs))
    provenance = {r: "r"}
    for j, v in enumerate(terms[1:]):
        provenance[v] = f"s{j + 1}"
    inst = SteinerInstance(d, frozenset(terms), r)
    return ReductionOutput(inst, q, provenance, Mode.VERTEX)


def cllm_solve(g: TripartiteInstance) -> tuple[tuple[int, int, int], ...] | None:
    """Brute-force the triple partition problem by trying all pairs of
    matchings between the parts.  Returns the witness triples, one vertex
    from each part with a connected induced subgraph, or None."""
    q = g.q
    pairs = set(g.edges)

    def joined(x: int, y: int) -> bool:
        return (min(x, y), max(x, y)) in pairs

    for sigma in itertools.permutations(range(q)):
        for tau in itertools.permutations(range(q)):
            triples = []
            for i in range(q):
                a, b, c = i, q + sigma[i], 2 * q + tau[i]
                if joined(a, b) + joined(b, c) + joined(a, c) < 2:
                    break
                triples.append((a, b, c))
            else:
                return tuple(triples)
    return None


def hypergraph_reduce(h: Hypergraph, l: int) -> ReductionOutput:
    """Packing instance equivalent to 2-colouring a hypergraph so that
    no hyperedge is monochromatic.

    Vertices 0..n-1 carry the hypergraph's vertices; each hyperedge
    becomes a terminal adjacent to its members; a root is adjacent to all
    hypergraph vertices; l - 2 hubs adjacent to the root and to every
    edge-terminal absorb all but two trees.  The remaining two trees
    2-colour the vertices by the root's out-neighbourhoods.
    """
    if l < 2:
        raise GraphError("need l >= 2")
    if not h.edges:
        raise GraphError("need at least one hyperedge")
    n, es = h.n, h.edges
    m = len(es)
    r = n + m
    hubs = [n + m + 1 + i for i in range(l - 2)]
    arcs = []
    for j, e in enumerate(es):
        ev = n + j
        for x in sorted(e):
            arcs.append((x, ev))
            arcs.append((ev, x))
    for hub in hubs:
        arcs.append((r, hub))
        arcs.append((hub, r))
        for j in range(m):
            arcs.append((hub, n + j))
            arcs.append((n + j, hub))
    for x in range(n):
        arcs.append((r, x))
        arcs.append((x, r))
    d = build(n + m + 1 + (l - 2), sorted(arcs))
    provenance = {n + j: f"e{j}" for j in range(m)}
    provenance[r] = "r"
    for i, hub in enumerate(hubs):
        provenance[hub] = f"u{i + 1}"
    terminals = frozenset([r] + [n + j for j in range(m)])
    inst = SteinerInstance(d, terminals, r)
    return ReductionOutput(inst, l, provenance, Mode.VERTEX)


def hypergraph_2color(h: Hypergraph) -> tuple[int, ...] | None:
    """Brute-force proper 2-colourability.  Returns one colour per vertex
    with no monochromatic hyperedge, or None."""
    for colouring in range(1 << h.n):
        if all(
            any(colouring >> x & 1 for x in e) and any(not colouring >> x & 1 for x in e)
            for e in h.edges
        ):
            return tuple(colouring >> x & 1 for x in range(h.n))
    return None


def eulerian_kappa_reduce(
    h: Digraph, s1: int, t1: int, s2: int, t2: int, k: int, l: int
) -> ReductionOutput:
    """Eulerian packing instance equivalent to a directed two-linkage.

    ``h`` must be degree-balanced with four distinct marked vertices.
    The gadget adds a root, l - 2 hub vertices feeding all terminals, and
    k - 1 terminals wired so that two trees of an internally disjoint
    packing of size l must route vertex-disjoint s1 -> t1 and s2 -> t2
    paths through ``h``.  The output graph is checked to be Eulerian,
    which requires every component of ``h`` to touch the marked vertices.
    """
    if k < 3:
        raise GraphError("need k >= 3")
    if l < 2:
        raise GraphError("need l >= 2")
    marked = (s1, t1, s2, t2)
    if len(set(marked)) != 4:
        raise GraphError("the four marked vertices must be distinct")
    if any(not 0 <= v < h.n for v in marked):
        raise GraphError("marked vertex out of range")
    for v in range(h.n):
        if h.in_degree(v) != h.out_degree(v):
            raise GraphError("the source digraph must be degree-balanced")
    r = h.n
    vs = [h.n + 1 + i for i in range(l - 2)]
    us = [h.n + 1 + (l - 2) + j for j in range(k - 1)]
    u1, u2 = us[0], us[1]
    arcs = list(h.arcs)
    arcs += [
        (r, s1),
        (r, s2),
        (t1, u1),
        (u1, t1),
        (t2, u2),
        (u2, t2),
        (s1, u2),
        (s2, u1),
        (u1, r),
        (u2, r),
    ]
    for v in vs:
        arcs.append((r, v))
        arcs.append((v, r))
        for u in us:
            arcs.append((v, u))
            arcs.append((u, v))
    # terminals u3.. hang off s1 and s2, never off u1 or u2: a return arc
    # into u1 or u2 would let two trees cover every terminal without ever
    # crossing h, making the instance a yes regardless of the linkage.
    # The backward arcs into s1 and s2 only restore degree balance; a tree
    # reaching uj already went through its si, so they close no shortcut.
    for si in (s1, s2):
        for uj in us[2:]:
            arcs.append((si, uj))
            arcs.append((uj, si))
    d = build(h.n + 1 + (l - 2) + (k - 1), arcs)
    if not is_eulerian(d):
        raise GraphError(
            "gadget output is not Eulerian; every component of the source "
            "must touch the marked vertices"
        )
    provenance = {r: "r"}
    for i, v in enumerate(vs):
        provenance[v] = f"v{i + 1}"
    for j, u in enumerate(us):
        provenance[u] = f"u{j + 1}"
    inst = SteinerInstance(d, frozenset([r] + us), r)
    return ReductionOutput(inst, l, provenance, Mode.VERTEX)
