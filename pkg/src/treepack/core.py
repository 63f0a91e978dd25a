"""Digraph container and rooted-tree certificate types.

Vertices are dense integers ``0..n-1``.  Arcs are ordered ``(tail, head)``
pairs kept in insertion order; an arc's position in that list is its
identity, which keeps parallel arcs distinguishable in graphs produced by
internal transformations.  Public constructors reject parallel arcs, and
loops are never allowed.

Everything defined here is immutable after construction.
"""

from __future__ import annotations

import enum
from collections import Counter, deque
from dataclasses import dataclass


class GraphError(ValueError):
    """Malformed graph, instance, or constructor argument."""


class CertificateError(ValueError):
    """A tree or packing certificate failed validation."""


class Mode(enum.Enum):
    """Disjointness requirement for a tree packing.

    ``ARC``: trees may share vertices but no arc.
    ``VERTEX``: trees additionally share no vertex outside the terminal
    set (internally disjoint packing).
    """

    ARC = "arc"
    VERTEX = "vertex"


class Digraph:
    """Immutable directed graph without loops, with optional parallel arcs.

    ``simple`` reports whether the arc list is duplicate free.  Adjacency is
    indexed once at construction, so degree and neighbourhood queries are
    cheap.  Treat instances as read-only.
    """

    __slots__ = ("n", "arcs", "simple", "_out", "_in", "_pairs")

    def __init__(self, n: int, arcs, require_simple: bool = True):
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        arcs = tuple((int(t), int(h)) for t, h in arcs)
        out: list[list[int]] = [[] for _ in range(n)]
        inc: list[list[int]] = [[] for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        for idx, (t, h) in enumerate(arcs):
            if not (0 <= t < n and 0 <= h < n):
                raise GraphError(f"arc ({t},{h}) out of range for n={n}")
            if t == h:
                raise GraphError(f"loop at vertex {t}")
            if (t, h) in seen and require_simple:
                raise GraphError(f"duplicate arc ({t},{h})")
            seen.add((t, h))
            out[t].append(idx)
            inc[h].append(idx)
        self.n = n
        self.arcs = arcs
        self.simple = len(seen) == len(arcs)
        self._out = tuple(tuple(a) for a in out)
        self._in = tuple(tuple(a) for a in inc)
        self._pairs = frozenset(seen)

    # ---- queries ----

    def out_arcs(self, v: int) -> tuple[int, ...]:
        return self._out[v]

    def in_arcs(self, v: int) -> tuple[int, ...]:
        return self._in[v]

    def out_degree(self, v: int) -> int:
        return len(self._out[v])

    def in_degree(self, v: int) -> int:
        return len(self._in[v])

    def successors(self, v: int) -> list[int]:
        return [self.arcs[i][1] for i in self._out[v]]

    def predecessors(self, v: int) -> list[int]:
        return [self.arcs[i][0] for i in self._in[v]]

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self._pairs

    @property
    def arc_pairs(self) -> frozenset[tuple[int, int]]:
        return self._pairs

    def arcs_within(self, vertices) -> tuple[int, ...]:
        """Arc ids of the subdigraph induced by ``vertices``."""
        vs = set(vertices)
        return tuple(i for i, (t, h) in enumerate(self.arcs) if t in vs and h in vs)

    def drop_arcs(self, arc_ids) -> "Digraph":
        """Copy of the graph without the given arcs (same vertex set)."""
        drop = set(arc_ids)
        keep = [a for i, a in enumerate(self.arcs) if i not in drop]
        return Digraph(self.n, keep, require_simple=False)

    # ---- value semantics ----

    def __eq__(self, other) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.arcs == other.arcs

    def __hash__(self) -> int:
        return hash((self.n, self.arcs))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={len(self.arcs)})"


def build(n: int, arcs, require_simple: bool = True) -> Digraph:
    """Validating constructor; rejects loops, out-of-range endpoints, and
    (by default) duplicate arcs."""
    return Digraph(n, arcs, require_simple=require_simple)


def complement(d: Digraph) -> Digraph:
    """Complement on the same vertex set: arcs become non-arcs and vice
    versa, loops excluded.  Requires a simple input."""
    if not d.simple:
        raise GraphError("complement requires a simple digraph")
    arcs = [
        (u, v)
        for u in range(d.n)
        for v in range(d.n)
        if u != v and not d.has_arc(u, v)
    ]
    return Digraph(d.n, arcs)


def reverse(d: Digraph) -> Digraph:
    """Reverse every arc, preserving multiplicities."""
    return Digraph(d.n, [(h, t) for (t, h) in d.arcs], require_simple=False)


def is_symmetric(d: Digraph) -> bool:
    """True iff for every arc (u,v) the arc (v,u) is present too."""
    return all((h, t) in d.arc_pairs for (t, h) in d.arcs)


def _non_isolated(d: Digraph) -> list[int]:
    return [v for v in range(d.n) if d.out_degree(v) or d.in_degree(v)]


def _reach(d: Digraph, start: int, forward: bool) -> set[int]:
    seen = {start}
    dq = deque([start])
    while dq:
        v = dq.popleft()
        nxt = d.successors(v) if forward else d.predecessors(v)
        for w in nxt:
            if w not in seen:
                seen.add(w)
                dq.append(w)
    return seen


def is_eulerian(d: Digraph) -> bool:
    """Every vertex balanced (in-degree equals out-degree, counting
    multiplicities) and the non-isolated part strongly connected.  A graph
    with no arcs counts as Eulerian."""
    if any(d.out_degree(v) != d.in_degree(v) for v in range(d.n)):
        return False
    live = _non_isolated(d)
    if not live:
        return True
    root = live[0]
    forward = _reach(d, root, True)
    backward = _reach(d, root, False)
    return all(v in forward and v in backward for v in live)


def complete_symmetric(n: int) -> Digraph:
    """All n(n-1) ordered pairs."""
    if n < 1:
        raise GraphError("complete digraph needs at least one vertex")
    return Digraph(n, [(u, v) for u in range(n) for v in range(n) if u != v])


def complete_bipartite_symmetric(a: int, b: int) -> Digraph:
    """Vertices 0..a-1 on one side, a..a+b-1 on the other, arcs both ways
    across, none inside a side."""
    if a < 1 or b < 1:
        raise GraphError("both sides must be nonempty")
    arcs = []
    for u in range(a):
        for v in range(a, a + b):
            arcs.append((u, v))
            arcs.append((v, u))
    return Digraph(a + b, arcs)


@dataclass(frozen=True)
class SteinerInstance:
    """A host digraph, a terminal set S with at least two vertices, and a
    root r in S."""

    graph: Digraph
    terminals: frozenset[int]
    root: int

    def __post_init__(self):
        object.__setattr__(self, "terminals", frozenset(self.terminals))
        if len(self.terminals) < 2:
            raise GraphError("terminal set needs at least two vertices")
        if any(not (0 <= v < self.graph.n) for v in self.terminals):
            raise GraphError("terminal out of range")
        if self.root not in self.terminals:
            raise GraphError("root must be a terminal")

    @property
    def k(self) -> int:
        return len(self.terminals)


@dataclass(frozen=True)
class OutTree:
    """Out-tree given by its root and arc list.

    ``arc_ids`` optionally records which host arcs the tree uses, which is
    what disjointness means when the host has parallel arcs.  Arcs are
    stored sorted, so equal trees compare equal.
    """

    root: int
    arcs: tuple[tuple[int, int], ...]
    arc_ids: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "arcs", tuple(sorted((int(t), int(h)) for t, h in self.arcs)))
        if self.arc_ids is not None:
            object.__setattr__(self, "arc_ids", tuple(sorted(self.arc_ids)))

    def vertices(self) -> frozenset[int]:
        vs = {self.root}
        for t, h in self.arcs:
            vs.add(t)
            vs.add(h)
        return frozenset(vs)

    def leaves(self) -> frozenset[int]:
        tails = {t for t, _ in self.arcs}
        return frozenset(v for v in self.vertices() if v not in tails and v != self.root)

    def validate(self) -> None:
        """Check the arc set really forms an out-tree rooted at ``root``."""
        indeg = Counter(h for _, h in self.arcs)
        if indeg.get(self.root, 0) != 0:
            raise CertificateError("root has an incoming arc")
        for v, c in indeg.items():
            if c != 1:
                raise CertificateError(f"vertex {v} has in-degree {c} in tree")
        children: dict[int, list[int]] = {}
        for t, h in self.arcs:
            children.setdefault(t, []).append(h)
        seen = {self.root}
        dq = deque([self.root])
        while dq:
            v = dq.popleft()
            for w in children.get(v, ()):
                if w in seen:
                    raise CertificateError("tree arcs contain a cycle")
                seen.add(w)
                dq.append(w)
        if seen != set(self.vertices()):
            raise CertificateError("tree is not connected from its root")


@dataclass(frozen=True)
class TreePacking:
    """A collection of (S, r)-trees claimed pairwise disjoint under ``mode``."""

    trees: tuple[OutTree, ...]
    mode: Mode
    instance: SteinerInstance

    def __post_init__(self):
        object.__setattr__(self, "trees", tuple(self.trees))

    def validate(self) -> None:
        inst = self.instance
        g = inst.graph
        keys: list[frozenset] = []
        verts: list[frozenset[int]] = []
        for t in self.trees:
            t.validate()
            if t.root != inst.root:
                raise CertificateError("tree root differs from instance root")
            vs = t.vertices()
            if not inst.terminals <= vs:
                raise CertificateError("tree misses a terminal")
            if g.simple:
                for a in t.arcs:
                    if a not in g.arc_pairs:
                        raise CertificateError(f"tree uses missing arc {a}")
                keys.append(frozenset(t.arcs))
            else:
                if t.arc_ids is None:
                    raise CertificateError("multi-arc host requires arc ids on trees")
                for i in t.arc_ids:
                    if not (0 <= i < len(g.arcs)):
                        raise CertificateError("tree arc id out of range")
                if sorted(g.arcs[i] for i in t.arc_ids) != list(t.arcs):
                    raise CertificateError("tree arc ids disagree with arc pairs")
                keys.append(frozenset(t.arc_ids))
            verts.append(vs)
        for i in range(len(self.trees)):
            for j in range(i + 1, len(self.trees)):
                if keys[i] & keys[j]:
                    raise CertificateError(f"trees {i} and {j} share an arc")
                if self.mode is Mode.VERTEX:
                    shared = verts[i] & verts[j]
                    if not shared <= inst.terminals:
                        raise CertificateError(
                            f"trees {i} and {j} share non-terminal vertices {sorted(shared - inst.terminals)}"
                        )

    def is_valid(self) -> bool:
        try:
            self.validate()
        except CertificateError:
            return False
        return True

    def __len__(self) -> int:
        return len(self.trees)
