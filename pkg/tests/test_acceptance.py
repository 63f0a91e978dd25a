"""Acceptance criteria, one test per criterion.

Each test prints a single pass line on success; a failing assertion names
the criterion.  All comparisons are exact (tolerance 0); the three timed
criteria assert their wall-clock caps.
"""

import contextlib
import io
import itertools
import json
import random
import time

from treepack import (
    Mode,
    PackingBudget,
    SteinerInstance,
    build,
    complement,
    complete_packing,
    complete_symmetric,
    eulerian_lambda,
    glued_cliques,
    global_kappa,
    global_lambda,
    global_tree_connectivity,
    ham_decomposition_ok,
    is_eulerian,
    is_symmetric,
    join_family,
    max_packing,
    nordhaus_gaddum_pair,
    parse_instance,
    suite_bounds,
    suite_reductions,
    symmetric_iso_classes,
    symmetric_kappa_decide,
    write_instance,
)
from treepack.cli import EXIT_NEGATIVE, EXIT_OK, main
from treepack.suites import random_eulerian


def _ok(num: int, msg: str) -> None:
    print(f"criterion {num:2d}: PASS - {msg}")


def test_criterion_01_complete_digraphs():
    start = time.monotonic()
    for n in (3, 4, 5):
        for k in range(2, n + 1):
            for mode in (Mode.VERTEX, Mode.ARC):
                got = global_tree_connectivity(complete_symmetric(n), k, mode).value
                assert got == n - 1, f"criterion 1: FAIL - n={n} k={k} {mode}: {got}"
            S = tuple(range(k))
            pk = complete_packing(n, S, 0)
            assert len(pk) == n - 1, f"criterion 1: FAIL - packing n={n} k={k}"
    elapsed = time.monotonic() - start
    assert elapsed < 30, f"criterion 1: FAIL - {elapsed:.1f}s over 30s cap"
    _ok(1, f"complete hosts n=3..5, every k, both modes, value n-1 ({elapsed:.1f}s)")


def test_criterion_02_eulerian_agreement():
    start = time.monotonic()
    rng = random.Random(202)
    graphs = 0
    pairs = 0
    while graphs < 500:
        n = rng.randint(3, 7)
        d = random_eulerian(rng, n)
        assert is_eulerian(d)
        graphs += 1
        for k in range(2, min(4, n) + 1):
            for S in itertools.combinations(range(n), k):
                fs = frozenset(S)
                for r in S:
                    inst = SteinerInstance(d, fs, r)
                    fast = eulerian_lambda(inst)
                    exact = max_packing(inst, Mode.ARC).value
                    pairs += 1
                    assert fast == exact, (
                        f"criterion 2: FAIL - arcs={d.arcs} S={S} r={r}: "
                        f"{fast} vs {exact}"
                    )
    elapsed = time.monotonic() - start
    assert elapsed < 300, f"criterion 2: FAIL - {elapsed:.1f}s over 300s cap"
    _ok(2, f"{graphs} Eulerian hosts, {pairs} (S, r) pairs agree exactly ({elapsed:.1f}s)")


def test_criterion_03_symmetric_agreement():
    start = time.monotonic()
    instances = 0
    for d in symmetric_iso_classes(5):
        n = d.n
        for k in range(2, min(4, n) + 1):
            for S in itertools.combinations(range(n), k):
                fs = frozenset(S)
                for r in S:
                    inst = SteinerInstance(d, fs, r)
                    truth = max_packing(inst, Mode.VERTEX).value
                    for l in (1, 2, 3):
                        pk = symmetric_kappa_decide(inst, l)
                        instances += 1
                        assert (pk is not None) == (truth >= l), (
                            f"criterion 3: FAIL - arcs={d.arcs} S={S} r={r} l={l}"
                        )
                        if pk is not None:
                            assert pk.is_valid() and len(pk) == l
    assert instances >= 300
    elapsed = time.monotonic() - start
    assert elapsed < 600, f"criterion 3: FAIL - {elapsed:.1f}s over 600s cap"
    _ok(3, f"all 51 symmetric classes n<=5, {instances} decisions match oracle ({elapsed:.1f}s)")


def test_criterion_04_glued_cliques():
    d = glued_cliques(4)
    k3 = global_tree_connectivity(d, 3, Mode.VERTEX).value
    assert k3 == 1, f"criterion 4: FAIL - kappa_3 = {k3}"
    k7 = global_tree_connectivity(d, 7, Mode.VERTEX).value
    assert k7 >= 2, f"criterion 4: FAIL - kappa_7 = {k7}"
    _ok(4, f"glued cliques t=4: kappa_3 = 1, kappa_7 = {k7} >= 2")


def test_criterion_05_join_family():
    d = join_family(3, 9)
    budget = PackingBudget(max_arcs=50)
    vals = {}
    for mode in (Mode.VERTEX, Mode.ARC):
        vals[mode] = global_tree_connectivity(d, 3, mode, budget).value
    assert vals[Mode.VERTEX] == 3, f"criterion 5: FAIL - kappa_3 = {vals[Mode.VERTEX]}"
    assert vals[Mode.ARC] == 3, f"criterion 5: FAIL - lambda_3 = {vals[Mode.ARC]}"
    assert global_kappa(d) == 3, "criterion 5: FAIL - kappa"
    assert global_lambda(d) == 3, "criterion 5: FAIL - lambda"
    _ok(5, "join family k=3 n=9: kappa_3 = lambda_3 = kappa = lambda = 3")


def test_criterion_06_nordhaus_gaddum():
    for a in (2, 3):
        d, c = nordhaus_gaddum_pair(a)
        n = d.n
        assert c == complement(d)
        for k in range(2, min(4, n) + 1):
            vd = global_tree_connectivity(d, k, Mode.ARC).value
            vc = global_tree_connectivity(c, k, Mode.ARC).value
            assert vd == a - 1, f"criterion 6: FAIL - a={a} k={k}: lambda_k(D) = {vd}"
            assert vc == a, f"criterion 6: FAIL - a={a} k={k}: lambda_k(D^c) = {vc}"
            assert vd + vc == 2 * a - 1 <= n - 1
            assert vd * vc == a * (a - 1) == ((n - 1) ** 2) // 4
    _ok(6, "pairs a=2,3: lambda_k values a-1 and a, extremal sum and product, k<=4")


def test_criterion_07_reduction_iff():
    res = suite_reductions(samples=50, seed=707)
    per = {}
    for rec in res.records:
        per[rec.label] = per.get(rec.label, 0) + 1
    bad = res.failures()
    assert not bad, f"criterion 7: FAIL - {bad[0].label}: {bad[0].detail}"
    assert all(v >= 50 for v in per.values()), f"criterion 7: FAIL - counts {per}"
    _ok(7, f"{res.passed} reduction sources, 100% iff agreement ({sorted(per)})")


def test_criterion_08_bounds_sweep():
    res = suite_bounds(nmax=5, samples=1000, seed=808)
    bad = res.failures()
    assert not bad, f"criterion 8: FAIL - {bad[0].detail}"
    assert res.passed == 1000
    _ok(8, "1000 random hosts n<=5: all bound, chain, and characterization checks hold")


def test_criterion_09_ham_decomposition():
    for a in range(2, 7):
        assert ham_decomposition_ok(a), f"criterion 9: FAIL - a={a}"
    _ok(9, "bipartite Hamiltonian decompositions verified for a=2..6")


def _corpus(rng):
    """100 instance texts: random, Eulerian, and symmetric hosts."""
    out = []
    while len(out) < 34:
        n = rng.randint(3, 6)
        arcs = [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < 0.5]
        d = build(n, arcs)
        k = rng.randint(2, min(4, n))
        S = frozenset(rng.sample(range(n), k))
        out.append(SteinerInstance(d, S, rng.choice(sorted(S))))
    while len(out) < 67:
        n = rng.randint(3, 7)
        d = random_eulerian(rng, n)
        k = rng.randint(2, min(4, n))
        S = frozenset(rng.sample(range(n), k))
        out.append(SteinerInstance(d, S, rng.choice(sorted(S))))
    while len(out) < 100:
        n = rng.randint(3, 5)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.6]
        d = build(n, [a for u, v in pairs for a in ((u, v), (v, u))])
        k = rng.randint(2, min(4, n))
        S = frozenset(rng.sample(range(n), k))
        out.append(SteinerInstance(d, S, rng.choice(sorted(S))))
    return [write_instance(inst) for inst in out]


def _run_cli(argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        rc = main(argv)
    return rc, buf.getvalue()


def test_criterion_10_cli_contract(tmp_path):
    rng = random.Random(1010)
    texts = _corpus(rng)
    assert len(texts) == 100
    files = []
    for i, text in enumerate(texts):
        # canonical round-trip identity
        assert write_instance(parse_instance(text)) == text, f"criterion 10: FAIL - file {i}"
        p = tmp_path / f"case-{i:03d}.txt"
        p.write_text(text)
        files.append(str(p))

    checked = 0
    for i, f in enumerate(files):
        inst = parse_instance(texts[i])
        for mode in ("arc", "vertex"):
            rc_a, out_a = _run_cli(["compute", "--input", f, "--mode", mode, "--json"])
            rc_e, out_e = _run_cli(
                ["compute", "--input", f, "--mode", mode, "--engine", "exact", "--json"]
            )
            assert rc_a == rc_e == EXIT_OK, f"criterion 10: FAIL - exit codes on {f}"
            va = json.loads(out_a)["value"]
            ve = json.loads(out_e)["value"]
            assert va == ve, f"criterion 10: FAIL - {f} {mode}: auto {va} vs exact {ve}"
            checked += 1
        if is_symmetric(inst.graph):
            for l in (1, 2):
                rc_a, _ = _run_cli(
                    ["compute", "--input", f, "--mode", "vertex", "--l", str(l), "--json"]
                )
                rc_e, _ = _run_cli(
                    [
                        "compute",
                        "--input",
                        f,
                        "--mode",
                        "vertex",
                        "--l",
                        str(l),
                        "--engine",
                        "exact",
                        "--json",
                    ]
                )
                assert rc_a == rc_e in (EXIT_OK, EXIT_NEGATIVE), (
                    f"criterion 10: FAIL - decision mismatch on {f} l={l}: {rc_a} vs {rc_e}"
                )
                checked += 1
    _ok(10, f"100-file canonical round-trip; {checked} auto-vs-exact answers equal")
