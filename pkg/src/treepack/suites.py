"""Verification suites over generated corpora.

Each suite replays one family of published identities or inequalities on
randomly generated or exhaustively enumerated digraphs, comparing fast
engines, constructions, and closed forms against the exact search.  A
suite returns a ``SuiteResult`` holding one ``CheckRecord`` per check;
failing records carry a reproducer in instance-file syntax so the
violation can be replayed from disk.

All randomness flows through one ``random.Random`` seeded per run, so
every report is reproducible from (suite, seed, sizes).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .core import (
    Digraph,
    Mode,
    SteinerInstance,
    build,
    complement,
    complete_symmetric,
    is_eulerian,
    is_symmetric,
)
from .connectivity import global_kappa, global_lambda, is_strong
from .exact import (
    DEFAULT_BUDGET,
    PackingBudget,
    global_tree_connectivity,
    max_packing,
    two_linkage_directed,
)
from .fast import eulerian_lambda, symmetric_kappa_decide
from .families import (
    ham_decomposition_ok,
    nordhaus_gaddum_branchings,
    nordhaus_gaddum_pair,
)
from .formats import write_digraph, write_instance
from .reductions import (
    Hypergraph,
    TripartiteInstance,
    amplify_3_2,
    cllm_reduce,
    cllm_solve,
    eulerian_kappa_reduce,
    hypergraph_2color,
    hypergraph_reduce,
)

SUITE_NAMES = (
    "bounds",
    "monotonicity",
    "characterization",
    "eulerian-agreement",
    "symmetric-agreement",
    "reductions",
    "nordhaus-gaddum",
)


@dataclass
class CheckRecord:
    """One verified fact: what was checked, on what, and the outcome."""

    index: int
    label: str
    ok: bool
    detail: str
    reproducer: str | None = None


@dataclass
class SuiteResult:
    suite: str
    seed: int
    records: list[CheckRecord] = field(default_factory=list)

    def add(self, label: str, ok: bool, detail: str, reproducer: str | None = None) -> None:
        self.records.append(CheckRecord(len(self.records), label, ok, detail, reproducer))

    @property
    def passed(self) -> int:
        return sum(1 for r in self.records if r.ok)

    @property
    def failed(self) -> int:
        return sum(1 for r in self.records if not r.ok)

    @property
    def ok(self) -> bool:
        return self.failed == 0 and bool(self.records)

    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if not r.ok]


# ---- corpus generators ----

def random_digraph(rng: random.Random, n: int) -> Digraph:
    p = rng.choice((0.2, 0.3, 0.4, 0.5, 0.6, 0.8))
    arcs = [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p]
    return build(n, arcs)


def random_symmetric(rng: random.Random, n: int) -> Digraph:
    p = rng.choice((0.3, 0.4, 0.5, 0.7))
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                arcs.append((u, v))
                arcs.append((v, u))
    return build(n, sorted(arcs))


def random_eulerian(rng: random.Random, n: int) -> Digraph:
    """Union of arc-disjoint directed cycles, every cycle after the first
    anchored at an already covered vertex.  Balanced plus weakly
    connected gives strongly connected, so the result is Eulerian."""
    for _ in range(60):
        arcset: set[tuple[int, int]] = set()
        covered: list[int] = []
        ok = True
        for ci in range(rng.randint(1, 3)):
            size = rng.randint(2, n)
            if ci == 0:
                verts = rng.sample(range(n), size)
            else:
                anchor = rng.choice(covered)
                rest = [v for v in range(n) if v != anchor]
                verts = [anchor] + rng.sample(rest, size - 1)
                rng.shuffle(verts)
            cyc = [(verts[i], verts[(i + 1) % size]) for i in range(size)]
            if any(a in arcset for a in cyc):
                ok = False
                break
            arcset.update(cyc)
            covered = sorted({v for a in arcset for v in a})
        if ok and arcset:
            d = build(n, sorted(arcset))
            if is_eulerian(d):
                return d
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def random_hypergraph(rng: random.Random) -> Hypergraph:
    n = rng.randint(2, 5)
    edges = []
    for _ in range(rng.randint(1, 3)):
        size = rng.randint(2, min(3, n))
        edges.append(frozenset(rng.sample(range(n), size)))
    return Hypergraph(n, tuple(edges))


def random_tripartite(rng: random.Random) -> TripartiteInstance:
    q = rng.randint(1, 2)
    p = rng.choice((0.3, 0.5, 0.7))
    edges = [
        (u, v)
        for u in range(3 * q)
        for v in range(u + 1, 3 * q)
        if rng.random() < p
    ]
    return TripartiteInstance(q, tuple(edges))


def random_balanced_marked(rng: random.Random) -> tuple[Digraph, tuple[int, int, int, int]]:
    """Degree-balanced linkage source: a union of arc-disjoint cycles,
    each through at least one of the four marked vertices 0..3."""
    n = rng.randint(4, 6)
    marked = (0, 1, 2, 3)
    for _ in range(60):
        arcset: set[tuple[int, int]] = set()
        ok = True
        for _ in range(rng.randint(1, 3)):
            size = rng.randint(2, n)
            anchor = rng.choice(marked)
            rest = [v for v in range(n) if v != anchor]
            verts = [anchor] + rng.sample(rest, size - 1)
            rng.shuffle(verts)
            cyc = [(verts[i], verts[(i + 1) % size]) for i in range(size)]
            if any(a in arcset for a in cyc):
                ok = False
                break
            arcset.update(cyc)
        if ok and arcset:
            return build(n, sorted(arcset)), marked
    return build(n, [(i, (i + 1) % 4) for i in range(4)]), marked


def _iso_pair_masks(n: int) -> list[int]:
    """One adjacency bitmask per isomorphism class of undirected graphs
    on n labelled vertices (canonical form: minimum relabelled mask)."""
    pairs = list(itertools.combinations(range(n), 2))
    index = {pq: i for i, pq in enumerate(pairs)}
    perm_maps = []
    for perm in itertools.permutations(range(n)):
        perm_maps.append(
            [index[tuple(sorted((perm[p], perm[q])))] for p, q in pairs]
        )
    reps = []
    seen = set()
    for mask in range(1 << len(pairs)):
        canon = min(
            sum(((mask >> i) & 1) << m[i] for i in range(len(pairs)))
            for m in perm_maps
        )
        if canon not in seen:
            seen.add(canon)
            reps.append(canon)
    return reps


def symmetric_iso_classes(nmax: int) -> list[Digraph]:
    """All symmetric digraphs with 2..nmax vertices, one per isomorphism
    class of the underlying undirected graph."""
    out = []
    for n in range(2, nmax + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in _iso_pair_masks(n):
            arcs = []
            for i, (p, q) in enumerate(pairs):
                if (mask >> i) & 1:
                    arcs.append((p, q))
                    arcs.append((q, p))
            out.append(build(n, sorted(arcs)))
    return out


def _graph_repro(d: Digraph, note: str) -> str:
    return f"# {note}\n{write_digraph(d)}"


def _instance_repro(inst: SteinerInstance, note: str) -> str:
    return f"# {note}\n{write_instance(inst)}"


def _min_degrees(d: Digraph) -> int:
    return min(
        min(d.out_degree(v) for v in range(d.n)),
        min(d.in_degree(v) for v in range(d.n)),
    )


# ---- suites ----

def suite_bounds(
    nmax: int = 5,
    samples: int = 200,
    seed: int = 0,
    budget: PackingBudget = DEFAULT_BUDGET,
) -> SuiteResult:
    """Inequality sweep on random digraphs: the packing parameters sit
    under the degree and connectivity bounds, shrink as terminals are
    added, detect strongness, and reach n - 1 only on the complete
    host."""
    rng = random.Random(seed)
    res = SuiteResult("bounds", seed)
    for i in range(samples):
        n = rng.randint(2, nmax)
        d = random_digraph(rng, n)
        mind = _min_degrees(d)
        lam = global_lambda(d)
        kap = global_kappa(d)
        strong = is_strong(d)
        is_complete = len(d.arcs) == n * (n - 1)
        lam_k = {}
        kap_k = {}
        for k in range(2, n + 1):
            lam_k[k] = global_tree_connectivity(d, k, Mode.ARC, budget).value
            kap_k[k] = global_tree_connectivity(d, k, Mode.VERTEX, budget).value
        problems = []
        for k in range(2, n + 1):
            if not kap_k[k] <= lam_k[k] <= mind:
                problems.append(f"chain broken at k={k}: {kap_k[k]},{lam_k[k]},{mind}")
            if lam_k[k] > lam:
                problems.append(f"lambda_{k}={lam_k[k]} above lambda={lam}")
            if n >= kap + k and kap_k[k] > kap:
                problems.append(f"kappa_{k}={kap_k[k]} above kappa={kap}")
            if (lam_k[k] >= 1) != strong:
                problems.append(f"strongness mismatch at k={k}")
            if (kap_k[k] == n - 1) != is_complete:
                problems.append(f"completeness characterization fails at k={k}")
        for k in range(2, n):
            if lam_k[k + 1] > lam_k[k]:
                problems.append(f"lambda not monotone at k={k}")
        detail = (
            f"n={n} arcs={len(d.arcs)} lambda_k={sorted(lam_k.items())} "
            f"kappa_k={sorted(kap_k.items())}"
        )
        if problems:
            res.add("bounds", False, "; ".join(problems), _graph_repro(d, f"bounds sample {i} seed {seed}"))
        else:
            res.add("bounds", True, detail)
    return res


def suite_monotonicity(
    nmax: int = 5,
    samples: int = 60,
    seed: int = 0,
    budget: PackingBudget = DEFAULT_BUDGET,
) -> SuiteResult:
    """Adding terminals never helps, and removing arcs never helps:
    lambda_{k+1} <= lambda_k, and both parameters are monotone under
    spanning subdigraphs."""
    rng = random.Random(seed)
    res = SuiteResult("monotonicity", seed)
    for i in range(samples):
        n = rng.randint(2, nmax)
        d = random_digraph(rng, n)
        keep = [a for a in d.arcs if rng.random() < 0.7]
        sub = build(n, keep)
        problems = []
        prev = None
        for k in range(2, n + 1):
            lk = global_tree_connectivity(d, k, Mode.ARC, budget).value
            kk = global_tree_connectivity(d, k, Mode.VERTEX, budget).value
            lk_sub = global_tree_connectivity(sub, k, Mode.ARC, budget).value
            kk_sub = global_tree_connectivity(sub, k, Mode.VERTEX, budget).value
            if prev is not None and lk > prev:
                problems.append(f"lambda_{k} rose to {lk} from {prev}")
            if lk_sub > lk:
                problems.append(f"subgraph lambda_{k}={lk_sub} above {lk}")
            if kk_sub > kk:
                problems.append(f"subgraph kappa_{k}={kk_sub} above {kk}")
            prev = lk
        if problems:
            res.add(
                "monotonicity",
                False,
                "; ".join(problems),
                _graph_repro(d, f"monotonicity sample {i} seed {seed}"),
            )
        else:
            res.add("monotonicity", True, f"n={n} arcs={len(d.arcs)} sub_arcs={len(keep)}")
    return res


def suite_characterization(
    nmax: int = 5,
    samples: int = 100,
    seed: int = 0,
    budget: PackingBudget = DEFAULT_BUDGET,
) -> SuiteResult:
    """Both parameters hit n - 1 exactly on the complete symmetric host.
    The corpus mixes complete graphs, complete graphs minus one arc, and
    random digraphs so both directions of the equivalence bite."""
    rng = random.Random(seed)
    res = SuiteResult("characterization", seed)
    corpus: list[Digraph] = []
    for n in range(2, nmax + 1):
        full = complete_symmetric(n)
        corpus.append(full)
        if n >= 3:
            drop = rng.randrange(len(full.arcs))
            corpus.append(full.drop_arcs([drop]))
    while len(corpus) < samples:
        corpus.append(random_digraph(rng, rng.randint(2, nmax)))
    for i, d in enumerate(corpus):
        n = d.n
        is_complete = len(d.arcs) == n * (n - 1)
        problems = []
        for k in range(2, n + 1):
            kk = global_tree_connectivity(d, k, Mode.VERTEX, budget).value
            lk = global_tree_connectivity(d, k, Mode.ARC, budget).value
            if (kk == n - 1) != is_complete:
                problems.append(f"kappa_{k}={kk} vs complete={is_complete}")
            if (lk == n - 1) != is_complete:
                problems.append(f"lambda_{k}={lk} vs complete={is_complete}")
        if problems:
            res.add(
                "characterization",
                False,
                "; ".join(problems),
                _graph_repro(d, f"characterization sample {i} seed {seed}"),
            )
        else:
            res.add("characterization", True, f"n={n} arcs={len(d.arcs)} complete={is_complete}")
    return res


def suite_eulerian_agreement(
    nmax: int = 7,
    samples: int = 60,
    seed: int = 0,
    budget: PackingBudget = DEFAULT_BUDGET,
) -> SuiteResult:
    """On Eulerian hosts the arc-disjoint packing number equals the
    smallest root-to-terminal arc connectivity.  Sweeps every terminal
    set of size up to four and every root against the exact search."""
    rng = random.Random(seed)
    res = SuiteResult("eulerian-agreement", seed)
    for i in range(samples):
        n = rng.randint(3, nmax)
        d = random_eulerian(rng, n)
        problems = []
        pairs = 0
        for k in range(2, min(4, n) + 1):
            for S in itertools.combinations(range(n), k):
                for r in S:
                    inst = SteinerInstance(d, frozenset(S), r)
                    fast = eulerian_lambda(inst)
                    exact = max_packing(inst, Mode.ARC, budget).value
                    pairs += 1
                    if fast != exact:
                        problems.append(f"S={S} r={r}: fast {fast} vs exact {exact}")
                    # every tree leaves r and enters each other terminal
                    cap = min(
                        [d.out_degree(r)] + [d.in_degree(s) for s in S if s != r]
                    )
                    if fast > cap:
                        problems.append(f"S={S} r={r}: value {fast} above degree cap {cap}")
        if problems:
            bad = problems[0]
            res.add(
                "eulerian-agreement",
                False,
                f"n={n} arcs={len(d.arcs)}: {bad} (+{len(problems) - 1} more)",
                _graph_repro(d, f"eulerian sample {i} seed {seed}"),
            )
        else:
            res.add("eulerian-agreement", True, f"n={n} arcs={len(d.arcs)} pairs={pairs}")
    return res


def suite_symmetric_agreement(
    nmax: int = 5,
    lmax: int = 3,
    seed: int = 0,
    budget: PackingBudget = DEFAULT_BUDGET,
) -> SuiteResult:
    """The skeleton engine and the exact search agree on every symmetric
    digraph up to nmax vertices (one per isomorphism class), every
    terminal set of size up to four, every root, and every threshold up
    to lmax.  Returned packings are revalidated."""
    res = SuiteResult("symmetric-agreement", seed)
    for d in symmetric_iso_classes(nmax):
        n = d.n
        for k in range(2, min(4, n) + 1):
            for S in itertools.combinations(range(n), k):
                for r in S:
                    inst = SteinerInstance(d, frozenset(S), r)
                    value = max_packing(inst, Mode.VERTEX, budget).value
                    for l in range(1, lmax + 1):
                        packing = symmetric_kappa_decide(inst, l)
                        want = value >= l
                        got = packing is not None
                        ok = got == want
                        if ok and packing is not None:
                            ok = packing.is_valid() and len(packing) == l
                        if ok:
                            res.add(
                                "symmetric-agreement",
                                True,
                                f"n={n} arcs={len(d.arcs)} S={S} r={r} l={l} value={value}",
                            )
                        else:
                            res.add(
                                "symmetric-agreement",
                                False,
                                f"S={S} r={r} l={l}: engine={got} oracle value={value}",
                                _instance_repro(inst, f"symmetric l={l}"),
                            )
    return res


def _provenance_ok(out, source_n: int) -> bool:
    added = out.instance.graph.n - source_n
    names = list(out.provenance.values())
    return len(out.provenance) == added and len(set(names)) == len(names)


def suite_reductions(
    samples: int = 50,
    seed: int = 0,
    budget: PackingBudget | None = None,
) -> SuiteResult:
    """Every hardness gadget agrees with its source problem: the packing
    value reaches the threshold exactly when the brute-force source
    answer is positive.  Also checks the structural promises: outputs are
    simple, the symmetric and Eulerian gadgets have those properties, and
    provenance labels the added vertices bijectively."""
    if budget is None:
        budget = PackingBudget(max_n=14, max_arcs=70)
    rng = random.Random(seed)
    res = SuiteResult("reductions", seed)

    for i in range(samples):
        base_graph = random_digraph(rng, 3)
        base = SteinerInstance(base_graph, frozenset({0, 1, 2}), 0)
        k = rng.choice((3, 4))
        l = rng.choice((2, 3))
        problems = []
        for mode in (Mode.VERTEX, Mode.ARC):
            out = amplify_3_2(base, k, l, mode)
            src = max_packing(base, mode, budget).value >= 2
            got = max_packing(out.instance, mode, budget).value >= out.threshold
            if got != src:
                problems.append(f"{mode.value}: amplified {got} vs base {src}")
            if not out.instance.graph.simple:
                problems.append("output not simple")
            if not _provenance_ok(out, base_graph.n):
                problems.append("provenance not bijective on added vertices")
        if problems:
            res.add(
                "amplify",
                False,
                f"k={k} l={l}: " + "; ".join(problems),
                _instance_repro(base, f"amplify base k={k} l={l}"),
            )
        else:
            res.add("amplify", True, f"base arcs={len(base_graph.arcs)} k={k} l={l}")

    for i in range(samples):
        g = random_tripartite(rng)
        out = cllm_reduce(g, k=rng.choice((3, 4)))
        src = cllm_solve(g) is not None
        got = max_packing(out.instance, Mode.VERTEX, budget).value >= out.threshold
        ok = got == src and out.instance.graph.simple
        ok = ok and is_symmetric(out.instance.graph)
        ok = ok and _provenance_ok(out, 3 * g.q)
        if ok:
            res.add("cllm", True, f"q={g.q} edges={len(g.edges)} positive={src}")
        else:
            res.add(
                "cllm",
                False,
                f"q={g.q} edges={g.edges}: packing {got} vs solver {src}",
                _instance_repro(out.instance, f"cllm q={g.q} threshold {out.threshold}"),
            )

    for i in range(samples):
        h = random_hypergraph(rng)
        l = rng.choice((2, 3))
        out = hypergraph_reduce(h, l)
        src = hypergraph_2color(h) is not None
        got = max_packing(out.instance, Mode.VERTEX, budget).value >= out.threshold
        ok = got == src and out.instance.graph.simple
        ok = ok and is_symmetric(out.instance.graph)
        ok = ok and _provenance_ok(out, h.n)
        if ok:
            res.add("hypergraph", True, f"n={h.n} m={len(h.edges)} l={l} colorable={src}")
        else:
            res.add(
                "hypergraph",
                False,
                f"n={h.n} edges={[sorted(e) for e in h.edges]} l={l}: packing {got} vs solver {src}",
                _instance_repro(out.instance, f"hypergraph l={l}"),
            )

    for i in range(samples):
        h, (s1, t1, s2, t2) = random_balanced_marked(rng)
        k = rng.choice((3, 4))
        l = rng.choice((2, 3))
        try:
            out = eulerian_kappa_reduce(h, s1, t1, s2, t2, k, l)
        except Exception as exc:
            res.add(
                "eulerian-kappa",
                False,
                f"gadget rejected a freshly generated source: {exc}",
                _graph_repro(h, f"eulerian-kappa source k={k} l={l}"),
            )
            continue
        src = two_linkage_directed(h, s1, t1, s2, t2) is not None
        got = max_packing(out.instance, Mode.VERTEX, budget).value >= out.threshold
        ok = got == src and is_eulerian(out.instance.graph)
        ok = ok and out.instance.graph.simple
        ok = ok and _provenance_ok(out, h.n)
        if ok:
            res.add("eulerian-kappa", True, f"h arcs={len(h.arcs)} k={k} l={l} linked={src}")
        else:
            res.add(
                "eulerian-kappa",
                False,
                f"h arcs={sorted(h.arcs)} k={k} l={l}: packing {got} vs linkage {src}",
                _instance_repro(out.instance, f"eulerian-kappa k={k} l={l}"),
            )
    return res


def suite_nordhaus_gaddum(
    amax: int = 3,
    nmax: int = 5,
    samples: int = 40,
    seed: int = 0,
    budget: PackingBudget = DEFAULT_BUDGET,
) -> SuiteResult:
    """The complementary-pair construction meets its closed forms, its
    branching certificate is genuine, and on random complementary pairs
    the zero lower bound is attained exactly when both halves are
    non-strong."""
    rng = random.Random(seed)
    res = SuiteResult("nordhaus-gaddum", seed)
    for a in range(2, amax + 1):
        d, comp = nordhaus_gaddum_pair(a)
        n = 2 * a
        branchings = nordhaus_gaddum_branchings(a)
        problems = []
        if len(branchings) != a:
            problems.append(f"{len(branchings)} branchings, wanted {a}")
        used: set[int] = set()
        for b in branchings:
            try:
                b.validate()
            except Exception as exc:
                problems.append(f"branching invalid: {exc}")
                continue
            if b.root != 0 or b.vertices() != frozenset(range(n)):
                problems.append("branching not spanning from vertex 0")
            if any(not comp.has_arc(t, h) for t, h in b.arcs):
                problems.append("branching uses an arc outside the complement")
            ids = set(b.arc_ids or ())
            if used & ids:
                problems.append("branchings share an arc")
            used |= ids
        for k in range(2, min(4, n) + 1):
            lk = global_tree_connectivity(d, k, Mode.ARC, budget).value
            lk_c = global_tree_connectivity(comp, k, Mode.ARC, budget).value
            if lk != a - 1:
                problems.append(f"lambda_{k}(D)={lk}, wanted {a - 1}")
            if lk_c != a:
                problems.append(f"lambda_{k}(Dc)={lk_c}, wanted {a}")
            if lk + lk_c != 2 * a - 1 or 2 * a - 1 > n - 1:
                problems.append(f"sum identity fails at k={k}")
            if lk * lk_c != a * (a - 1) or a * (a - 1) != ((n - 1) ** 2) // 4:
                problems.append(f"product identity fails at k={k}")
        if not ham_decomposition_ok(a):
            problems.append("hamiltonian decomposition predicate fails")
        if problems:
            res.add("ng-pair", False, f"a={a}: " + "; ".join(problems), _graph_repro(d, f"ng a={a}"))
        else:
            res.add("ng-pair", True, f"a={a} n={n} identities hold for k<=4")
    for i in range(samples):
        n = rng.randint(2, nmax)
        d = random_digraph(rng, n)
        c = complement(d)
        problems = []
        for k in range(2, n + 1):
            lk = global_tree_connectivity(d, k, Mode.ARC, budget).value
            lk_c = global_tree_connectivity(c, k, Mode.ARC, budget).value
            zero = lk + lk_c == 0
            both_nonstrong = not is_strong(d) and not is_strong(c)
            if zero != both_nonstrong:
                problems.append(f"k={k}: sum zero {zero} vs both non-strong {both_nonstrong}")
        if problems:
            res.add(
                "ng-zero",
                False,
                "; ".join(problems),
                _graph_repro(d, f"ng-zero sample {i} seed {seed}"),
            )
        else:
            res.add("ng-zero", True, f"n={n} arcs={len(d.arcs)}")
    return res


def run_suite(name: str, **kwargs) -> SuiteResult:
    """Dispatch a suite by its public name."""
    table = {
        "bounds": suite_bounds,
        "monotonicity": suite_monotonicity,
        "characterization": suite_characterization,
        "eulerian-agreement": suite_eulerian_agreement,
        "symmetric-agreement": suite_symmetric_agreement,
        "reductions": suite_reductions,
        "nordhaus-gaddum": suite_nordhaus_gaddum,
    }
    if name not in table:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    return table[name](**kwargs)
