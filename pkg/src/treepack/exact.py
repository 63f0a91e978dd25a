"""Exact search for maximum rooted Steiner tree packings.

These are the ground-truth oracles: exponential-time but exact, usable
directly at desk scale and serving as the reference every fast engine,
extremal family, and reduction in the package is checked against.

Outline.  An (S, r)-tree is inclusion-minimal exactly when all of its
leaves are terminals, and any packing can be shrunk tree by tree to
minimal trees without creating conflicts, so only minimal trees matter.
The search enumerates them (a choice of one in-arc per non-root vertex
over each vertex superset of S), builds a conflict relation (shared arc,
or shared non-terminal vertex when the packing must be internally
disjoint), and finds a maximum set of pairwise compatible trees by branch
and bound seeded with a greedy packing and bounded above by a min-cut
style flow bound plus a greedy clique cover.  When the tree count
explodes past a cap, the search falls back to an incremental depth-first
packing construction over lexicographically increasing trees, which is
slower but never materialises the full tree list.
"""

from __future__ import annotations

import itertools
from collections import Counter, deque
from dataclasses import dataclass

from .core import (
    CertificateError,
    Digraph,
    GraphError,
    Mode,
    OutTree,
    SteinerInstance,
    TreePacking,
    is_symmetric,
)
from .connectivity import _UnitFlow


class BudgetExceededError(RuntimeError):
    """The instance is larger than the configured exact-search budget."""


@dataclass(frozen=True)
class PackingBudget:
    """Size guards for the exact search.

    ``max_n``/``max_arcs`` bound the host graph, ``tree_cap`` bounds how
    many minimal trees get materialised before the search switches to the
    incremental fallback, and ``mis_cap`` bounds the size of the conflict
    graph the branch and bound is willing to build rows for.
    """

    max_n: int = 12
    max_arcs: int = 40
    tree_cap: int = 50_000
    mis_cap: int = 20_000


DEFAULT_BUDGET = PackingBudget()


@dataclass(frozen=True)
class PackingAnswer:
    value: int
    certificate: TreePacking


@dataclass(frozen=True)
class GlobalAnswer:
    """Minimum packing value over all (S, r) choices of a given size, with
    the lexicographically smallest minimising pair as witness."""

    value: int
    witness_set: tuple[tuple[int, ...], int]


def _check_budget(d: Digraph, budget: PackingBudget) -> None:
    if d.n > budget.max_n or len(d.arcs) > budget.max_arcs:
        raise BudgetExceededError(
            f"instance n={d.n}, arcs={len(d.arcs)} exceeds budget "
            f"n<={budget.max_n}, arcs<={budget.max_arcs}"
        )


def _reach_set(d: Digraph, start: int) -> set[int]:
    seen = {start}
    dq = deque([start])
    while dq:
        v = dq.popleft()
        for w in d.successors(v):
            if w not in seen:
                seen.add(w)
                dq.append(w)
    return seen


def _coreach_set(d: Digraph, targets) -> set[int]:
    seen = set(targets)
    dq = deque(seen)
    while dq:
        v = dq.popleft()
        for w in d.predecessors(v):
            if w not in seen:
                seen.add(w)
                dq.append(w)
    return seen


class _TreeSpace:
    """Enumerator for inclusion-minimal (S, r)-trees of one instance.

    Trees are produced as ``(key, arc_mask, vertex_mask, arc_ids)`` where
    the key is a total order token: enumeration is strictly increasing in
    it, and the order does not depend on which arcs or vertices are
    currently banned, so a caller can resume strictly after a given tree
    while arcs get knocked out around it.
    """

    def __init__(self, inst: SteinerInstance):
        g = inst.graph
        self.graph = g
        self.root = inst.root
        self.terminals = inst.terminals
        self.S_sorted = sorted(inst.terminals)
        self.S_mask = 0
        for v in inst.terminals:
            self.S_mask |= 1 << v
        reach = _reach_set(g, inst.root)
        self.feasible = all(s in reach for s in inst.terminals)
        coreach = _coreach_set(g, inst.terminals - {inst.root})
        # only vertices on some root-to-terminal route can sit inside a minimal tree
        self.extras = [
            v
            for v in range(g.n)
            if v not in inst.terminals and v in reach and v in coreach
        ]
        self._subsets = sorted(
            range(1 << len(self.extras)), key=lambda m: (bin(m).count("1"), m)
        )
        self._subset_vmask = []
        for m in self._subsets:
            vm = 0
            for i, v in enumerate(self.extras):
                if m >> i & 1:
                    vm |= 1 << v
            self._subset_vmask.append(vm)
        self._in_arcs = [
            tuple((aid, g.arcs[aid][0]) for aid in sorted(g.in_arcs(v)))
            for v in range(g.n)
        ]

    def iter_trees(self, banned_arcs: int = 0, banned_verts: int = 0, start_after=None):
        if not self.feasible:
            return
        start_rank = start_after[0] if start_after is not None else 0
        for rank in range(start_rank, len(self._subsets)):
            evmask = self._subset_vmask[rank]
            if evmask & banned_verts:
                continue
            vset_mask = self.S_mask | evmask
            assign = [
                v
                for v in range(self.graph.n)
                if (vset_mask >> v & 1) and v != self.root
            ]
            cands = []
            dead = False
            for v in assign:
                cs = [
                    (aid, t)
                    for (aid, t) in self._in_arcs[v]
                    if (vset_mask >> t & 1) and not (banned_arcs >> aid & 1)
                ]
                if not cs:
                    dead = True
                    break
                cands.append(cs)
            if dead:
                continue
            resume_vec = None
            if start_after is not None and rank == start_after[0]:
                resume_vec = start_after[1]
            yield from self._assign(rank, vset_mask, evmask, assign, cands, resume_vec)

    def _assign(self, rank, vset_mask, evmask, assign, cands, resume_vec):
        parent: dict[int, int] = {}
        child_count: Counter = Counter()
        vec: list[int] = []
        extras_here = [v for v in self.extras if evmask >> v & 1]

        def cycles(tail: int, head: int) -> bool:
            cur = tail
            while cur in parent:
                cur = parent[cur]
                if cur == head:
                    return True
            return False

        def rec(i: int, tight: bool):
            if i == len(assign):
                if tight:
                    return
                if all(child_count[x] >= 1 for x in extras_here):
                    amask = 0
                    for aid in vec:
                        amask |= 1 << aid
                    yield (rank, tuple(vec)), amask, vset_mask, tuple(sorted(vec))
                return
            v = assign[i]
            floor_aid = resume_vec[i] if tight else -1
            for aid, t in cands[i]:
                if aid < floor_aid:
                    continue
                if cycles(t, v):
                    continue
                parent[v] = t
                child_count[t] += 1
                vec.append(aid)
                yield from rec(i + 1, tight and aid == floor_aid)
                vec.pop()
                child_count[t] -= 1
                del parent[v]

        yield from rec(0, resume_vec is not None)


def _tree_from_ids(g: Digraph, root: int, arc_ids) -> OutTree:
    return OutTree(root=root, arcs=tuple(g.arcs[i] for i in arc_ids), arc_ids=tuple(arc_ids))


def enumerate_minimal_trees(inst: SteinerInstance) -> list[OutTree]:
    """All inclusion-minimal (S, r)-trees, each listed once."""
    space = _TreeSpace(inst)
    return [
        _tree_from_ids(inst.graph, inst.root, aids)
        for _, _, _, aids in space.iter_trees()
    ]


def _packing_bound(space: _TreeSpace, mode: Mode, banned_arcs: int = 0, banned_verts: int = 0) -> int:
    """Flow upper bound on the packing value: every tree in the packing
    carries a root-to-s path, and those paths are arc-disjoint (plus
    disjoint outside S in vertex mode), so a capacity-1 cut bounds it."""
    g = space.graph
    r = space.root
    split = set()
    if mode is Mode.VERTEX:
        split = {v for v in range(g.n) if v not in space.terminals}

    def exit_node(v: int) -> int:
        return 2 * v + 1 if v in split else 2 * v

    best = None
    for s in space.S_sorted:
        if s == space.root:
            continue
        net = _UnitFlow(2 * g.n)
        for v in split:
            if not banned_verts >> v & 1:
                net.add(2 * v, 2 * v + 1)
        for aid, (t, h) in enumerate(g.arcs):
            if banned_arcs >> aid & 1:
                continue
            if (banned_verts >> t & 1) or (banned_verts >> h & 1):
                continue
            net.add(exit_node(t), 2 * h)
        f = net.maxflow(exit_node(r), 2 * s)
        if best is None or f < best:
            best = f
            if best == 0:
                return 0
    return 0 if best is None else best


def _greedy_pack(space: _TreeSpace, mode: Mode, limit: int) -> list:
    chosen = []
    ba = 0
    bv = 0
    while len(chosen) < limit:
        item = next(space.iter_trees(ba, bv), None)
        if item is None:
            break
        chosen.append(item)
        ba |= item[1]
        if mode is Mode.VERTEX:
            bv |= item[2] & ~space.S_mask
    return chosen


class _StopSearch(Exception):
    pass


def _mis_max(space: _TreeSpace, items: list, mode: Mode, flow_ub: int, seed: list, stop_at):
    """Maximum independent set in the tree conflict graph."""
    items = sorted(items, key=lambda it: (bin(it[1]).count("1"), it[1]))
    T = len(items)
    by_arc: dict[int, int] = {}
    by_int: dict[int, int] = {}
    for i, it in enumerate(items):
        bit = 1 << i
        for aid in it[3]:
            by_arc[aid] = by_arc.get(aid, 0) | bit
        if mode is Mode.VERTEX:
            m = it[2] & ~space.S_mask
            while m:
                b = m & -m
                by_int[b.bit_length() - 1] = by_int.get(b.bit_length() - 1, 0) | bit
                m ^= b
    nbr = []
    for i, it in enumerate(items):
        row = 0
        for aid in it[3]:
            row |= by_arc[aid]
        if mode is Mode.VERTEX:
            m = it[2] & ~space.S_mask
            while m:
                b = m & -m
                row |= by_int[b.bit_length() - 1]
                m ^= b
        nbr.append(row & ~(1 << i))
    min_arc = [it[3][0] for it in items]

    index_of = {it[1]: i for i, it in enumerate(items)}
    best_sel = [index_of[it[1]] for it in seed]
    best_size = len(best_sel)
    target = flow_ub if stop_at is None else min(flow_ub, stop_at)
    if best_size >= target:
        return best_size, [items[i] for i in best_sel], best_size >= flow_ub

    def cover_reaches(cand: int, need: int) -> bool:
        # greedy clique cover: trees sharing their smallest arc form a clique,
        # so an independent set cannot exceed the number of distinct smallest arcs
        seen = set()
        while cand:
            b = cand & -cand
            seen.add(min_arc[b.bit_length() - 1])
            if len(seen) >= need:
                return True
            cand ^= b
        return False

    sel: list[int] = []

    def rec(cand: int, size: int):
        nonlocal best_size, best_sel
        if size > best_size:
            best_size = size
            best_sel = sel.copy()
            if best_size >= target:
                raise _StopSearch
        while cand:
            if not cover_reaches(cand, best_size - size + 1):
                return
            b = cand & -cand
            i = b.bit_length() - 1
            sel.append(i)
            rec(cand & ~nbr[i] & ~b, size + 1)
            sel.pop()
            cand ^= b

    stopped = False
    try:
        rec((1 << T) - 1, 0)
    except _StopSearch:
        stopped = True
    exact = (not stopped) or best_size >= flow_ub
    return best_size, [items[i] for i in best_sel], exact


def _dfs_pack(space: _TreeSpace, mode: Mode, flow_ub: int, seed: list, stop_at):
    """Complete depth-first packing over lexicographically increasing
    minimal trees; the fallback when enumeration would explode."""
    best = list(seed)
    target = flow_ub if stop_at is None else min(flow_ub, stop_at)
    stopped = False

    def rec(ba: int, bv: int, chosen: list, after) -> bool:
        nonlocal best, stopped
        if len(chosen) > len(best):
            best = list(chosen)
        if len(best) >= target:
            stopped = True
            return True
        if len(chosen) + _packing_bound(space, mode, ba, bv) <= len(best):
            return False
        for item in space.iter_trees(ba, bv, start_after=after):
            nbv = bv | (item[2] & ~space.S_mask) if mode is Mode.VERTEX else bv
            chosen.append(item)
            done = rec(ba | item[1], nbv, chosen, item[0])
            chosen.pop()
            if done:
                return True
        return False

    if len(best) < target:
        rec(0, 0, [], None)
    else:
        stopped = True
    exact = (not stopped) or len(best) >= flow_ub
    return len(best), best, exact


def _search(inst: SteinerInstance, mode: Mode, budget: PackingBudget, stop_at):
    """Returns (value, tree items, exact).  With ``stop_at`` given the
    search may return early once it has certified value >= stop_at, in
    which case ``exact`` is False unless the flow bound was reached."""
    space = _TreeSpace(inst)
    flow_ub = _packing_bound(space, mode)
    if flow_ub == 0:
        return 0, [], True
    limit = flow_ub if stop_at is None else min(flow_ub, stop_at)
    greedy = _greedy_pack(space, mode, limit)
    if len(greedy) >= flow_ub:
        return len(greedy), greedy, True
    if stop_at is not None and len(greedy) >= stop_at:
        return len(greedy), greedy, False
    items = []
    overflow = False
    for item in space.iter_trees():
        items.append(item)
        if len(items) > budget.tree_cap:
            overflow = True
            break
    if overflow or len(items) > budget.mis_cap:
        return _dfs_pack(space, mode, flow_ub, greedy, stop_at)
    if not items:
        return 0, [], True
    return _mis_max(space, items, mode, flow_ub, greedy, stop_at)


def max_packing(inst: SteinerInstance, mode: Mode, budget: PackingBudget = DEFAULT_BUDGET) -> PackingAnswer:
    """Exact maximum number of pairwise disjoint (S, r)-trees, with a
    validated certificate packing of that size."""
    _check_budget(inst.graph, budget)
    value, items, _ = _search(inst, mode, budget, None)
    trees = tuple(_tree_from_ids(inst.graph, inst.root, it[3]) for it in items)
    packing = TreePacking(trees, mode, inst)
    packing.validate()
    return PackingAnswer(value, packing)


def global_tree_connectivity(d: Digraph, k: int, mode: Mode, budget: PackingBudget = DEFAULT_BUDGET) -> GlobalAnswer:
    """Minimum of the packing value over every terminal set of size k and
    every root inside it.  Witness ties break to the lexicographically
    smallest (S, r)."""
    if not 2 <= k <= d.n:
        raise GraphError(f"k must be between 2 and n={d.n}")
    _check_budget(d, budget)
    best = None
    witness = None
    for S in itertools.combinations(range(d.n), k):
        terminals = frozenset(S)
        for r in S:
            inst = SteinerInstance(d, terminals, r)
            value, _, exact = _search(inst, mode, budget, stop_at=best)
            if best is not None and not exact and value >= best:
                continue
            if best is None or value < best:
                best = value
                witness = (tuple(S), r)
                if best == 0:
                    return GlobalAnswer(0, witness)
    return GlobalAnswer(best, witness)


# ---- disjoint path solvers ----


def _iter_paths_shortest_first(adj, s: int, t: int, banned: set):
    """Simple s..t paths in an undirected adjacency structure, internal
    vertices outside ``banned``, enumerated shortest first."""
    if s == t:
        return
    n = len(adj)
    for length in range(1, n):
        path = [s]
        on_path = {s}

        def dfs(v):
            arcs_so_far = len(path) - 1
            if arcs_so_far == length:
                return
            for w in adj[v]:
                if w == t:
                    if arcs_so_far + 1 == length:
                        yield path + [t]
                    continue
                if w in banned or w in on_path:
                    continue
                path.append(w)
                on_path.add(w)
                yield from dfs(w)
                path.pop()
                on_path.remove(w)

        yield from dfs(s)


def disjoint_paths_undirected(d: Digraph, pairs, avoid) -> list[list[int]] | None:
    """Fully vertex-disjoint connection in the underlying graph of a
    symmetric digraph.

    Finds, for each (s_i, t_i), a path whose internal vertices avoid the
    set ``avoid``, every endpoint of every pair, and every vertex of every
    other path.  Repeated endpoints are handled by giving each occurrence
    its own copy of the vertex, inheriting all its adjacencies.  Returns
    paths as vertex lists in the original labelling, or None.
    """
    if not is_symmetric(d):
        raise GraphError("disjoint_paths_undirected requires a symmetric digraph")
    pairs = [(int(a), int(b)) for a, b in pairs]
    for a, b in pairs:
        if not (0 <= a < d.n and 0 <= b < d.n):
            raise GraphError("path endpoint out of range")
    if not pairs:
        return []
    avoid = frozenset(avoid)
    occ = Counter(v for p in pairs for v in p)

    labels: list[int] = []
    copies: dict[int, list[int]] = {}
    for v in range(d.n):
        if v in occ:
            copies[v] = []
            for _ in range(occ[v]):
                copies[v].append(len(labels))
                labels.append(v)
        elif v not in avoid:
            copies[v] = [len(labels)]
            labels.append(v)
        else:
            copies[v] = []
    und = [set(d.successors(v)) for v in range(d.n)]
    adj: list[list[int]] = []
    for node, v in enumerate(labels):
        adj.append([w for u in und[v] for w in copies[u]])

    endpoint_nodes = set()
    pair_nodes = []
    cursor = {v: 0 for v in occ}
    for a, b in pairs:
        na = copies[a][cursor[a]]
        cursor[a] += 1
        nb = copies[b][cursor[b]]
        cursor[b] += 1
        pair_nodes.append((na, nb))
        endpoint_nodes.add(na)
        endpoint_nodes.add(nb)

    def route(i: int, used: set):
        if i == len(pairs):
            return []
        s, t = pair_nodes[i]
        blocked = used | (endpoint_nodes - {s, t})
        for path in _iter_paths_shortest_first(adj, s, t, blocked):
            rest = route(i + 1, used | set(path))
            if rest is not None:
                return [path] + rest
        return None

    node_paths = route(0, set())
    if node_paths is None:
        return None
    return [[labels[x] for x in p] for p in node_paths]


def _bfs_directed_path(d: Digraph, s: int, t: int, banned: set) -> list[int] | None:
    if s in banned or t in banned:
        return None
    prev = {s: None}
    dq = deque([s])
    while dq:
        v = dq.popleft()
        if v == t:
            path = []
            while v is not None:
                path.append(v)
                v = prev[v]
            return path[::-1]
        for w in d.successors(v):
            if w not in prev and w not in banned:
                prev[w] = v
                dq.append(w)
    return None


def two_linkage_directed(d: Digraph, s1: int, t1: int, s2: int, t2: int):
    """Vertex-disjoint directed paths s1->t1 and s2->t2 through four
    distinct terminals, found by exhausting candidate first paths and
    checking reachability for the second.  Returns (path1, path2) or None."""
    terms = (s1, t1, s2, t2)
    if len(set(terms)) != 4:
        raise GraphError("two-linkage needs four distinct terminals")
    if any(not (0 <= v < d.n) for v in terms):
        raise GraphError("terminal out of range")

    path: list[int] = [s1]
    on_path = {s1}

    def dfs():
        v = path[-1]
        if v == t1:
            yield list(path)
            return
        for w in d.successors(v):
            if w in on_path or w in (s2, t2):
                continue
            path.append(w)
            on_path.add(w)
            yield from dfs()
            path.pop()
            on_path.remove(w)

    for p1 in dfs():
        p2 = _bfs_directed_path(d, s2, t2, banned=set(p1))
        if p2 is not None:
            return p1, p2
    return None
