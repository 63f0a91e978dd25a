"""Local and global connectivity via unit-capacity augmenting flows.

``lambda_local`` counts arc-disjoint paths, ``kappa_local`` internally
disjoint paths (standard vertex splitting, so a direct arc contributes one
path on its own).  Both return the paths themselves, recovered from a flow
decomposition, so callers can re-check the answer.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .core import Digraph, GraphError, OutTree


@dataclass(frozen=True)
class FlowResult:
    """Connectivity value plus a witness family of paths (vertex lists)."""

    value: int
    paths: tuple[tuple[int, ...], ...]


class _UnitFlow:
    """Unit-capacity max flow by repeated BFS augmentation."""

    def __init__(self, nodes: int):
        self.nodes = nodes
        self.to: list[int] = []
        self.cap: list[int] = []
        self.adj: list[list[int]] = [[] for _ in range(nodes)]

    def add(self, u: int, v: int) -> int:
        slot = len(self.to)
        self.adj[u].append(slot)
        self.to.append(v)
        self.cap.append(1)
        self.adj[v].append(slot + 1)
        self.to.append(u)
        self.cap.append(0)
        return slot

    def _augment(self, s: int, t: int) -> bool:
        prev = [-1] * self.nodes
        prev[s] = -2
        dq = deque([s])
        while dq:
            v = dq.popleft()
            if v == t:
                break
            for slot in self.adj[v]:
                w = self.to[slot]
                if self.cap[slot] > 0 and prev[w] == -1:
                    prev[w] = slot
                    dq.append(w)
        if prev[t] == -1:
            return False
        v = t
        while v != s:
            slot = prev[v]
            self.cap[slot] -= 1
            self.cap[slot ^ 1] += 1
            v = self.to[slot ^ 1]
        return True

    def maxflow(self, s: int, t: int) -> int:
        value = 0
        while self._augment(s, t):
            value += 1
        return value

    def flowing_pairs(self) -> list[tuple[int, int]]:
        """Forward arcs carrying flow, as (tail, head) node pairs."""
        out = []
        for slot in range(0, len(self.to), 2):
            if self.cap[slot] == 0:
                u = self.to[slot + 1]
                out.append((u, self.to[slot]))
        return out


def _decompose_paths(flow_pairs, s: int, t: int, value: int) -> list[list[int]]:
    """Split a unit flow into s->t paths, silently discarding flow cycles."""
    succ: dict[int, list[int]] = {}
    for u, v in flow_pairs:
        succ.setdefault(u, []).append(v)
    paths = []
    for _ in range(value):
        path = [s]
        pos = {s: 0}
        cur = s
        while cur != t:
            nxt = succ[cur].pop()
            if nxt in pos:
                cut = pos[nxt]
                for v in path[cut + 1:]:
                    del pos[v]
                path = path[: cut + 1]
                cur = nxt
                continue
            path.append(nxt)
            pos[nxt] = len(path) - 1
            cur = nxt
        paths.append(path)
    return paths


def lambda_local(d: Digraph, x: int, y: int) -> FlowResult:
    """Maximum number of pairwise arc-disjoint x->y paths."""
    if x == y:
        raise GraphError("endpoints must differ")
    net = _UnitFlow(d.n)
    for t, h in d.arcs:
        net.add(t, h)
    value = net.maxflow(x, y)
    paths = _decompose_paths(net.flowing_pairs(), x, y, value)
    return FlowResult(value, tuple(tuple(p) for p in paths))


def kappa_local(d: Digraph, x: int, y: int) -> FlowResult:
    """Maximum number of x->y paths that are internally disjoint (no shared
    vertex besides the endpoints, no shared arc)."""
    if x == y:
        raise GraphError("endpoints must differ")
    # split v into entry node 2v and exit node 2v+1; endpoints stay whole
    def entry(v: int) -> int:
        return 2 * v

    def exit_(v: int) -> int:
        return 2 * v if v in (x, y) else 2 * v + 1

    net = _UnitFlow(2 * d.n)
    for v in range(d.n):
        if v not in (x, y):
            net.add(entry(v), 2 * v + 1)
    for t, h in d.arcs:
        net.add(exit_(t), entry(h))
    value = net.maxflow(exit_(x), entry(y))
    raw = _decompose_paths(net.flowing_pairs(), exit_(x), entry(y), value)
    paths = []
    for nodes in raw:
        path = []
        for node in nodes:
            v = node // 2
            if not path or path[-1] != v:
                path.append(v)
        paths.append(tuple(path))
    return FlowResult(value, tuple(paths))


def global_lambda(d: Digraph) -> int:
    """Arc-strong connectivity: min over ordered pairs of lambda_local."""
    if d.n < 2:
        raise GraphError("global connectivity needs at least two vertices")
    best = None
    for x in range(d.n):
        for y in range(d.n):
            if x == y:
                continue
            v = lambda_local(d, x, y).value
            if best is None or v < best:
                best = v
                if best == 0:
                    return 0
    return best


def global_kappa(d: Digraph) -> int:
    """Vertex-strong connectivity.  With every ordered pair adjacent the
    value is n-1 by convention; otherwise the minimum of kappa_local over
    non-adjacent ordered pairs."""
    if d.n < 2:
        raise GraphError("global connectivity needs at least two vertices")
    best = None
    for x in range(d.n):
        for y in range(d.n):
            if x == y or d.has_arc(x, y):
                continue
            v = kappa_local(d, x, y).value
            if best is None or v < best:
                best = v
                if best == 0:
                    return 0
    return d.n - 1 if best is None else best


def is_strong(d: Digraph) -> bool:
    if d.n <= 1:
        return True
    seen = {0}
    dq = deque([0])
    while dq:
        v = dq.popleft()
        for w in d.successors(v):
            if w not in seen:
                seen.add(w)
                dq.append(w)
    if len(seen) != d.n:
        return False
    seen = {0}
    dq = deque([0])
    while dq:
        v = dq.popleft()
        for w in d.predecessors(v):
            if w not in seen:
                seen.add(w)
                dq.append(w)
    return len(seen) == d.n


def find_out_branching(d: Digraph, r: int) -> OutTree | None:
    """Spanning out-tree rooted at r, or None when some vertex is
    unreachable.  Breadth-first, so paths from the root are shortest."""
    if not (0 <= r < d.n):
        raise GraphError("root out of range")
    parent_arc: dict[int, int] = {}
    seen = {r}
    dq = deque([r])
    while dq:
        v = dq.popleft()
        for aid in d.out_arcs(v):
            w = d.arcs[aid][1]
            if w not in seen:
                seen.add(w)
                parent_arc[w] = aid
                dq.append(w)
    if len(seen) != d.n:
        return None
    ids = tuple(sorted(parent_arc.values()))
    return OutTree(root=r, arcs=tuple(d.arcs[i] for i in ids), arc_ids=ids)
