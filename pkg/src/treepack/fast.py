"""Fast engines for special graph classes.

Two engines live here.  ``eulerian_lambda`` computes the arc-disjoint
packing number of an Eulerian digraph directly from local arc
connectivities, with no search at all.  ``symmetric_kappa_decide``
decides whether a symmetric digraph packs a given number of internally
disjoint rooted Steiner trees, returning an explicit packing on success;
its running time is exponential only in the number of terminals and
trees, not in the size of the host graph.

The symmetric engine works by decomposition.  Fix terminal set S and
root r.  In any packing by inclusion-minimal trees, the arcs joining two
terminals split into an unused class and one class per tree, and each
tree is described by a skeleton: an out-tree on S plus at most |S| - 2
branch vertices, whose leaves are terminals and whose non-terminal
vertices have at least two children.  A skeleton arc is either one of
the tree's assigned terminal-to-terminal arcs or a request for a
directed path that avoids every terminal internally and every arc
between terminals.  Because the host is symmetric, all requests can be
served simultaneously exactly when the underlying undirected graph links
them by fully vertex-disjoint paths, which ``disjoint_paths_undirected``
decides.  The engine therefore enumerates canonical feasible arc
partitions, compatible skeleton tuples, and joint path realisations,
memoising each layer, and reassembles the trees from the successful
realisation.
"""

from __future__ import annotations

import itertools
from collections import Counter, deque
from dataclasses import dataclass

from .core import (
    GraphError,
    Mode,
    OutTree,
    SteinerInstance,
    TreePacking,
    is_eulerian,
    is_symmetric,
)
from .connectivity import _UnitFlow, lambda_local
from .exact import BudgetExceededError, disjoint_paths_undirected


class NotEulerianError(GraphError):
    """Raised when the Eulerian engine is handed a non-Eulerian digraph."""


class NotSymmetricError(GraphError):
    """Raised when the symmetric engine is handed a non-symmetric digraph."""


class PartitionBudgetError(BudgetExceededError):
    """Raised when the arc partition space exceeds the configured budget."""


def eulerian_lambda(inst: SteinerInstance) -> int:
    """Maximum number of arc-disjoint (S, r)-trees of an Eulerian digraph.

    Equals the smallest local arc connectivity from the root to another
    terminal.  Value only; for a certificate packing use the exact search
    with this value as the known target.
    """
    d = inst.graph
    if not is_eulerian(d):
        raise NotEulerianError("eulerian_lambda requires an Eulerian digraph")
    return min(
        lambda_local(d, inst.root, s).value
        for s in sorted(inst.terminals - {inst.root})
    )


@dataclass(frozen=True)
class Skeleton:
    """Shape of one tree in a packing: terminal-to-terminal arc ids used
    directly, non-terminal branch vertices, and the path requests the
    host graph still has to serve.  ``cost`` is a lower bound on the
    non-terminal vertices the realised tree will consume."""

    root: int
    branch: tuple[int, ...]
    arcs: tuple[tuple[int, int], ...]
    direct: tuple[int, ...]
    requests: tuple[tuple[int, int], ...]
    cost: int


@dataclass(frozen=True)
class ArcPartition:
    """Partition of the terminal-induced arc ids: ``parts[0]`` is unused,
    ``parts[i]`` belongs to tree i."""

    parts: tuple[tuple[int, ...], ...]


def _vertex_flow_bound(inst: SteinerInstance) -> int:
    """Cheap upper bound on the internally disjoint packing value: the
    root-to-terminal paths of a packing are vertex-disjoint outside S."""
    d = inst.graph
    S = inst.terminals

    def exit_node(v: int) -> int:
        return 2 * v if v in S else 2 * v + 1

    best = None
    for s in sorted(S - {inst.root}):
        net = _UnitFlow(2 * d.n)
        for v in range(d.n):
            if v not in S:
                net.add(2 * v, 2 * v + 1)
        for t, h in d.arcs:
            net.add(exit_node(t), 2 * h)
        f = net.maxflow(exit_node(inst.root), 2 * s)
        if best is None or f < best:
            best = f
            if best == 0:
                break
    return 0 if best is None else best


class _SymCtx:
    """Shared state of one symmetric-engine run: the host with the
    terminal-induced arcs removed, plus the memo tables."""

    def __init__(self, inst: SteinerInstance):
        d = inst.graph
        self.inst = inst
        self.d = d
        self.r = inst.root
        self.S_set = set(inst.terminals)
        self.S_sorted = sorted(inst.terminals)
        self.k = len(self.S_set)
        self.within = tuple(sorted(d.arcs_within(self.S_set)))
        self.d_minus = d.drop_arcs(self.within)
        self.internal_budget = d.n - self.k
        self.arc_id = {pair: i for i, pair in enumerate(d.arcs)}
        # a branch vertex needs an incoming path plus two outgoing ones,
        # each through a different neighbour
        self.branch_cands = [
            v
            for v in range(d.n)
            if v not in self.S_set and len(self.d_minus.successors(v)) >= 3
        ]
        self._reach: dict[tuple[int, int], bool] = {}
        self._skels: dict[tuple[int, ...], list[tuple[Skeleton, int]]] = {}
        self._links: dict[tuple[tuple[int, int], ...], list[list[int]] | None] = {}

    def reachable(self, u: int, v: int) -> bool:
        """Is there a u -> v path in the reduced host whose internal
        vertices are all non-terminals?"""
        key = (u, v)
        hit = self._reach.get(key)
        if hit is not None:
            return hit
        seen = {u}
        dq = deque([u])
        found = False
        while dq and not found:
            x = dq.popleft()
            for y in self.d_minus.successors(x):
                if y == v:
                    found = True
                    break
                if y not in self.S_set and y not in seen:
                    seen.add(y)
                    dq.append(y)
        self._reach[key] = found
        return found

    def skeletons(self, content: tuple[int, ...]) -> list[tuple[Skeleton, int]]:
        hit = self._skels.get(content)
        if hit is None:
            hit = _build_skeletons(self, content)
            self._skels[content] = hit
        return hit

    def linkage(self, requests: tuple[tuple[int, int], ...]):
        """Vertex-disjoint paths serving the requests jointly, aligned
        with the request order, or None.  Results are memoised on the
        sorted request multiset."""
        if not requests:
            return []
        order = sorted(range(len(requests)), key=lambda i: requests[i])
        key = tuple(requests[i] for i in order)
        if key in self._links:
            found = self._links[key]
        else:
            endpoints = {v for p in key for v in p}
            found = disjoint_paths_undirected(
                self.d_minus, list(key), self.S_set - endpoints
            )
            self._links[key] = found
        if found is None:
            return None
        aligned: list[list[int] | None] = [None] * len(requests)
        for pos, i in enumerate(order):
            aligned[i] = found[pos]
        return aligned


def _build_skeletons(ctx: _SymCtx, content: tuple[int, ...]) -> list[tuple[Skeleton, int]]:
    d = ctx.d
    forced: dict[int, int] = {}
    for aid in content:
        u, v = d.arcs[aid]
        if v == ctx.r or v in forced:
            return []
        forced[v] = u
    out: list[tuple[Skeleton, int]] = []
    for size in range(0, ctx.k - 1):
        for R in itertools.combinations(ctx.branch_cands, size):
            verts = ctx.S_sorted + list(R)
            assign = [v for v in verts if v != ctx.r]
            parent: dict[int, int] = {}
            children: Counter = Counter()
            requests: list[tuple[int, int]] = []
            cost_box = [size]

            def closes_cycle(tail: int, head: int) -> bool:
                cur = tail
                while cur in parent:
                    cur = parent[cur]
                    if cur == head:
                        return True
                return False

            def rec(i: int):
                if i == len(assign):
                    if all(children[x] >= 2 for x in R):
                        arcs = tuple(sorted((parent[v], v) for v in assign))
                        out.append(
                            (
                                Skeleton(
                                    root=ctx.r,
                                    branch=R,
                                    arcs=arcs,
                                    direct=content,
                                    requests=tuple(requests),
                                    cost=cost_box[0],
                                ),
                                sum(1 << v for v in R),
                            )
                        )
                    return
                v = assign[i]
                cands = [forced[v]] if v in forced else [u for u in verts if u != v]
                for u in cands:
                    if closes_cycle(u, v):
                        continue
                    is_request = v not in forced
                    extra = 0
                    if is_request:
                        if not ctx.reachable(u, v):
                            continue
                        extra = 1 if (u in ctx.S_set and v in ctx.S_set) else 0
                        if cost_box[0] + extra > ctx.internal_budget:
                            continue
                        requests.append((u, v))
                        cost_box[0] += extra
                    parent[v] = u
                    children[u] += 1
                    rec(i + 1)
                    children[u] -= 1
                    del parent[v]
                    if is_request:
                        requests.pop()
                        cost_box[0] -= extra

            rec(0)
    return out


def _feasible_add(pm: dict[int, int], u: int, v: int, root: int) -> bool:
    # one tree cannot take two arcs into the same head, an arc into its
    # root, or an arc closing a cycle
    if v == root or v in pm:
        return False
    cur = u
    while cur in pm:
        cur = pm[cur]
        if cur == v:
            return False
    return True


def _iter_feasible_partitions(ctx: _SymCtx, l: int):
    """Canonical assignments of the terminal-induced arcs to classes
    0..l, class 0 unused.  Classes 1..l are exchangeable, so labels are
    restricted-growth: a new nonzero label may only be one past the
    largest used so far.  Per-class tree feasibility is enforced during
    assignment."""
    arcs = ctx.within
    m = len(arcs)
    labels = [0] * m
    maps: list[dict[int, int]] = [dict() for _ in range(l + 1)]

    def rec(j: int, max_used: int):
        if j == m:
            parts: list[list[int]] = [[] for _ in range(l + 1)]
            for idx, aid in enumerate(arcs):
                parts[labels[idx]].append(aid)
            yield tuple(tuple(p) for p in parts)
            return
        u, v = ctx.d.arcs[arcs[j]]
        for p in range(1, min(max_used + 1, l) + 1):
            if _feasible_add(maps[p], u, v, ctx.r):
                maps[p][v] = u
                labels[j] = p
                yield from rec(j + 1, max(max_used, p))
                del maps[p][v]
        labels[j] = 0
        yield from rec(j + 1, max_used)

    yield from rec(0, 0)


def _check_partition_budget(within_count: int, l: int, max_partitions: int) -> None:
    if (l + 1) ** within_count > max_partitions:
        raise PartitionBudgetError(
            f"up to {(l + 1) ** within_count} arc partitions exceed the "
            f"budget of {max_partitions}"
        )


def iter_arc_partitions(inst: SteinerInstance, l: int, max_partitions: int = 10**8):
    """Public view of the canonical feasible partition enumeration."""
    if l < 1:
        raise GraphError("need at least one tree class")
    ctx = _SymCtx(inst)
    _check_partition_budget(len(ctx.within), l, max_partitions)
    for parts in _iter_feasible_partitions(ctx, l):
        yield ArcPartition(parts)


def _assemble(ctx: _SymCtx, skeletons: list[Skeleton], paths) -> TreePacking:
    g = ctx.d
    trees = []
    pos = 0
    for sk in skeletons:
        pairs = [g.arcs[aid] for aid in sk.direct]
        for _ in sk.requests:
            p = paths[pos]
            pos += 1
            pairs += [(p[j], p[j + 1]) for j in range(len(p) - 1)]
        pairs = tuple(sorted(pairs))
        trees.append(
            OutTree(
                root=ctx.r,
                arcs=pairs,
                arc_ids=tuple(ctx.arc_id[x] for x in pairs),
            )
        )
    packing = TreePacking(tuple(trees), Mode.VERTEX, ctx.inst)
    packing.validate()
    return packing


def _search_partition(ctx: _SymCtx, parts, l: int) -> TreePacking | None:
    """Complete one partition to a packing: pick a skeleton per class
    with disjoint branch vertices, then serve all path requests jointly."""
    skel_lists = [ctx.skeletons(parts[i]) for i in range(1, l + 1)]
    if any(not lst for lst in skel_lists):
        return None
    chosen: list[Skeleton] = []

    def rec(i: int, used_mask: int, cost: int, requests: tuple, floor: int):
        if i == l:
            paths = ctx.linkage(requests)
            if paths is None:
                return None
            return _assemble(ctx, chosen, paths)
        # classes with equal content are exchangeable; forcing the
        # skeleton index to be nondecreasing kills the duplicate orderings
        start = floor if i > 0 and parts[i + 1] == parts[i] == () else 0
        lst = skel_lists[i]
        for idx in range(start, len(lst)):
            sk, mask = lst[idx]
            if mask & used_mask:
                continue
            c2 = cost + sk.cost
            if c2 > ctx.internal_budget:
                continue
            chosen.append(sk)
            res = rec(i + 1, used_mask | mask, c2, requests + sk.requests, idx)
            if res is not None:
                return res
            chosen.pop()
        return None

    return rec(0, 0, 0, (), 0)


def skeleton_search(inst: SteinerInstance, l: int, partition: ArcPartition) -> TreePacking | None:
    """Packing of l internally disjoint trees whose terminal-induced arc
    sets equal the given partition classes, or None."""
    if not is_symmetric(inst.graph):
        raise NotSymmetricError("skeleton_search requires a symmetric digraph")
    if l < 1:
        raise GraphError("need l >= 1")
    parts = tuple(tuple(sorted(p)) for p in partition.parts)
    if len(parts) != l + 1:
        raise GraphError("partition must have l + 1 classes")
    ctx = _SymCtx(inst)
    flat = sorted(a for p in parts for a in p)
    if flat != list(ctx.within):
        raise GraphError("partition must cover the terminal-induced arcs exactly once")
    return _search_partition(ctx, parts, l)


def symmetric_kappa_decide(
    inst: SteinerInstance, l: int, max_partitions: int = 10**8
) -> TreePacking | None:
    """Search a symmetric digraph for l internally disjoint (S, r)-trees.

    Returns a validated packing of exactly l trees, or None when none
    exists.  Refuses instances whose arc partition space exceeds
    ``max_partitions``.
    """
    if not is_symmetric(inst.graph):
        raise NotSymmetricError("symmetric_kappa_decide requires a symmetric digraph")
    if l < 1:
        raise GraphError("need l >= 1")
    # a certain no from the flow bound never needs the partition sweep,
    # so it is answered before the budget refusal
    if _vertex_flow_bound(inst) < l:
        return None
    ctx = _SymCtx(inst)
    _check_partition_budget(len(ctx.within), l, max_partitions)
    for parts in _iter_feasible_partitions(ctx, l):
        res = _search_partition(ctx, parts, l)
        if res is not None:
            return res
    return None
