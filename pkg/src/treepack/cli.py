"""Command line surface: compute packing parameters on instance files,
generate family and gadget instances with expectation metadata, and run
the verification suites.

Exit codes are a stable contract: 0 success, 1 negative decision for a
threshold query, 2 input error, 3 budget exceeded, 4 verification or
certificate failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .core import (
    CertificateError,
    GraphError,
    Mode,
    SteinerInstance,
    TreePacking,
    complete_bipartite_symmetric,
    complete_symmetric,
    is_eulerian,
    is_symmetric,
)
from .exact import (
    BudgetExceededError,
    DEFAULT_BUDGET,
    PackingBudget,
    global_tree_connectivity,
    max_packing,
    two_linkage_directed,
)
from .fast import eulerian_lambda, symmetric_kappa_decide
from .families import (
    glued_cliques,
    ham_decompose_bipartite,
    join_family,
    nordhaus_gaddum_pair,
)
from .formats import (
    FormatError,
    parse_flexible,
    parse_hypergraph,
    parse_tripartite,
    to_dot,
    write_digraph,
    write_instance,
)
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
from .suites import SUITE_NAMES, run_suite

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_VERIFY = 4


def _fail(msg: str, code: int) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return code


def _parse_vertex_list(text: str) -> list[int]:
    toks = text.replace(",", " ").split()
    if not toks:
        raise FormatError("empty vertex list")
    return [int(t) for t in toks]


def _budget_from_args(args) -> PackingBudget:
    if args.budget_n is None:
        return DEFAULT_BUDGET
    n = args.budget_n
    if n < 2:
        raise FormatError("--budget-n must be at least 2")
    return PackingBudget(max_n=n, max_arcs=n * (n - 1))


def _certificate_json(packing: TreePacking | None):
    if packing is None:
        return None
    return {
        "mode": packing.mode.value,
        "root": packing.instance.root,
        "terminals": sorted(packing.instance.terminals),
        "trees": [[[t, h] for t, h in tree.arcs] for tree in packing.trees],
    }


def _emit(args, rows: list[tuple[str, str]], payload: dict) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
        return
    width = max(len(k) for k, _ in rows)
    for key, val in rows:
        print(f"{key.ljust(width)}  {val}")


def cmd_compute(args) -> int:
    try:
        text = Path(args.input).read_text()
    except OSError as exc:
        return _fail(f"cannot read {args.input}: {exc}", EXIT_INPUT)
    try:
        budget = _budget_from_args(args)
        d, file_terms, file_root = parse_flexible(text)
        mode = Mode.ARC if args.mode == "arc" else Mode.VERTEX
        if args.k is not None and args.set is not None:
            raise FormatError("--k computes over all terminal sets; drop --set")
        terminals = frozenset(_parse_vertex_list(args.set)) if args.set else file_terms
        root = args.root if args.root is not None else file_root
    except (FormatError, GraphError, ValueError) as exc:
        return _fail(str(exc), EXIT_INPUT)

    start = time.perf_counter()
    engine = args.engine
    packing = None
    value = None
    witness = None
    try:
        if args.k is not None:
            if engine in ("eulerian", "symmetric"):
                return _fail(f"--engine {engine} computes a single terminal set, not --k", EXIT_INPUT)
            engine = "exact"
            answer = global_tree_connectivity(d, args.k, mode, budget)
            value = answer.value
            witness = answer.witness_set
            wset, wroot = witness
            packing = max_packing(
                SteinerInstance(d, frozenset(wset), wroot), mode, budget
            ).certificate
        else:
            if terminals is None or root is None:
                return _fail("instance needs S and r (in the file or via --set/--root)", EXIT_INPUT)
            inst = SteinerInstance(d, terminals, root)
            if engine == "auto":
                if mode is Mode.ARC and is_eulerian(d):
                    engine = "eulerian"
                elif mode is Mode.VERTEX and is_symmetric(d) and args.l is not None:
                    engine = "symmetric"
                else:
                    engine = "exact"
            if engine == "eulerian":
                if mode is not Mode.ARC:
                    return _fail("the eulerian engine computes the arc parameter; use --mode arc", EXIT_INPUT)
                if not is_eulerian(d):
                    return _fail("--engine eulerian needs an Eulerian digraph", EXIT_INPUT)
                value = eulerian_lambda(inst)
            elif engine == "symmetric":
                if mode is not Mode.VERTEX or args.l is None:
                    return _fail("the symmetric engine answers vertex-mode threshold queries; use --mode vertex --l", EXIT_INPUT)
                if not is_symmetric(d):
                    return _fail("--engine symmetric needs a symmetric digraph", EXIT_INPUT)
                packing = symmetric_kappa_decide(inst, args.l)
                value = len(packing) if packing is not None else None
            elif engine == "exact":
                answer = max_packing(inst, mode, budget)
                value = answer.value
                packing = answer.certificate
            else:
                return _fail(f"unknown engine {engine!r}", EXIT_INPUT)
            witness = (tuple(sorted(terminals)), root)
    except BudgetExceededError as exc:
        return _fail(str(exc), EXIT_BUDGET)
    except (FormatError, GraphError) as exc:
        return _fail(str(exc), EXIT_INPUT)
    elapsed = time.perf_counter() - start

    try:
        if packing is not None:
            packing.validate()
    except CertificateError as exc:
        return _fail(f"certificate failed revalidation: {exc}", EXIT_VERIFY)

    if args.dot:
        try:
            Path(args.dot).write_text(to_dot(d, packing))
        except OSError as exc:
            return _fail(f"cannot write {args.dot}: {exc}", EXIT_INPUT)

    decision = None
    if args.l is not None:
        if engine == "symmetric":
            decision = packing is not None
        else:
            decision = value >= args.l

    rows = [("engine", engine), ("mode", mode.value)]
    if value is not None:
        rows.append(("value", str(value)))
    if decision is not None:
        rows.append(("decision", "yes" if decision else "no"))
    if witness is not None:
        wset, wroot = witness
        rows.append(("witness", f"S={{{','.join(map(str, wset))}}} r={wroot}"))
    rows.append(("time", f"{elapsed:.3f}s"))
    if packing is not None:
        rows.append(("trees", str(len(packing))))
        for i, tree in enumerate(packing.trees, start=1):
            arcs = " ".join(f"{t}->{h}" for t, h in tree.arcs)
            rows.append((f"tree {i}", arcs))
    payload = {
        "value": value,
        "engine": engine,
        "certificate": _certificate_json(packing),
        "witness_set": [list(witness[0]), witness[1]] if witness else None,
    }
    _emit(args, rows, payload)
    if decision is False:
        return EXIT_NEGATIVE
    return EXIT_OK


def _parse_edge_groups(text: str, arity: int | None) -> list[tuple[int, ...]]:
    groups = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        vals = tuple(int(t) for t in chunk.replace(",", " ").split())
        if arity is not None and len(vals) != arity:
            raise FormatError(f"edge {chunk!r} needs exactly {arity} vertices")
        if arity is None and len(vals) < 2:
            raise FormatError(f"edge {chunk!r} needs at least two vertices")
        groups.append(vals)
    if not groups:
        raise FormatError("no edges given")
    return groups


def _meta_expect(threshold: int, positive: bool | None) -> dict:
    if positive is None:
        return {"threshold": threshold, "source_positive": None, "expect": "unknown (source above budget)"}
    rel = ">=" if positive else "<"
    return {
        "threshold": threshold,
        "source_positive": positive,
        "expect": f"packing value {rel} {threshold}",
    }


def cmd_generate(args) -> int:
    out_dir = Path(args.out)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        return _fail(f"cannot create {out_dir}: {exc}", EXIT_INPUT)
    files: list[tuple[str, str]] = []
    meta: dict
    stem = None
    name = args.generator
    try:
        if name == "complete":
            n = args.n
            inst = SteinerInstance(complete_symmetric(n), frozenset(range(n)), 0)
            files.append((f"complete-{n}.txt", write_instance(inst)))
            meta = {
                "generator": "complete",
                "n": n,
                "expected": {
                    "kappa_k": n - 1,
                    "lambda_k": n - 1,
                    "holds_for_k": [2, n],
                    "any_terminal_set": True,
                },
            }
        elif name == "glued-cliques":
            t = args.t
            d = glued_cliques(t)
            files.append((f"glued-{t}.txt", write_digraph(d)))
            meta = {
                "generator": "glued-cliques",
                "t": t,
                "cut_vertex": t - 1,
                "expected": {
                    "kappa_k_with_terminals_on_both_sides": 1,
                    "holds_for_k": [2, 2 * t - 2],
                    "kappa_full_vertex_set_at_least": t // 2,
                },
            }
        elif name == "join":
            k, n = args.k, args.n
            d = join_family(k, n)
            files.append((f"join-{k}-{n}.txt", write_digraph(d)))
            meta = {
                "generator": "join",
                "k": k,
                "n": n,
                "expected": {
                    "kappa_k": k,
                    "lambda_k": k,
                    "global_kappa": k,
                    "global_lambda": k,
                    "at_k": k,
                },
            }
        elif name == "ng-pair":
            a = args.a
            d, comp = nordhaus_gaddum_pair(a)
            stem = f"ng-pair-{a}"
            files.append((f"ng-pair-{a}-d.txt", write_digraph(d)))
            files.append((f"ng-pair-{a}-comp.txt", write_digraph(comp)))
            meta = {
                "generator": "ng-pair",
                "a": a,
                "n": 2 * a,
                "expected": {
                    "lambda_k_d": a - 1,
                    "lambda_k_complement": a,
                    "sum": 2 * a - 1,
                    "product": a * (a - 1),
                    "holds_for_k": [2, 2 * a],
                },
            }
        elif name == "ham-bipartite":
            a = args.a
            cycles = ham_decompose_bipartite(a)
            files.append((f"ham-bipartite-{a}.txt", write_digraph(complete_bipartite_symmetric(a, a))))
            meta = {
                "generator": "ham-bipartite",
                "a": a,
                "cycles": [list(c) for c in cycles],
                "expected": {"cycle_count": a, "arc_cover": 2 * a * a},
            }
        elif name == "hypergraph-reduce":
            edges = _parse_edge_groups(args.edges, None)
            hn = args.hn if args.hn is not None else max(v for e in edges for v in e) + 1
            h = Hypergraph(hn, tuple(frozenset(e) for e in edges))
            outcome = hypergraph_reduce(h, args.l)
            positive = hypergraph_2color(h) is not None
            files.append((f"hypergraph-reduce-l{args.l}.txt", write_instance(outcome.instance)))
            meta = {
                "generator": "hypergraph-reduce",
                "hn": hn,
                "edges": [sorted(e) for e in h.edges],
                "provenance": {str(v): s for v, s in sorted(outcome.provenance.items())},
                **_meta_expect(outcome.threshold, positive),
            }
        elif name == "cllm-reduce":
            edges = _parse_edge_groups(args.edges, 2)
            g = TripartiteInstance(args.q, tuple(edges))
            outcome = cllm_reduce(g, args.k)
            witness = cllm_solve(g)
            files.append((f"cllm-reduce-q{args.q}.txt", write_instance(outcome.instance)))
            meta = {
                "generator": "cllm-reduce",
                "q": args.q,
                "k": args.k,
                "edges": [list(e) for e in g.edges],
                "witness_triples": [list(t) for t in witness] if witness else None,
                "provenance": {str(v): s for v, s in sorted(outcome.provenance.items())},
                **_meta_expect(outcome.threshold, witness is not None),
            }
        elif name == "eulerian-kappa-reduce":
            text = Path(args.input).read_text()
            h, terms, root = parse_flexible(text)
            if terms is not None or root is not None:
                raise FormatError("linkage source file must be a bare digraph")
            marked = _parse_vertex_list(args.marked)
            if len(marked) != 4:
                raise FormatError("--marked needs exactly four vertices: s1 t1 s2 t2")
            s1, t1, s2, t2 = marked
            outcome = eulerian_kappa_reduce(h, s1, t1, s2, t2, args.k, args.l)
            positive = two_linkage_directed(h, s1, t1, s2, t2) is not None
            files.append((f"eulerian-kappa-reduce-l{args.l}.txt", write_instance(outcome.instance)))
            meta = {
                "generator": "eulerian-kappa-reduce",
                "marked": marked,
                "k": args.k,
                "l": args.l,
                "provenance": {str(v): s for v, s in sorted(outcome.provenance.items())},
                **_meta_expect(outcome.threshold, positive),
            }
        elif name == "amplify":
            text = Path(args.input).read_text()
            d, terms, root = parse_flexible(text)
            if terms is None or root is None:
                raise FormatError("amplification base file needs S and r lines")
            base = SteinerInstance(d, terms, root)
            mode = Mode.ARC if args.mode == "arc" else Mode.VERTEX
            outcome = amplify_3_2(base, args.k, args.l, mode)
            try:
                positive = max_packing(base, mode).value >= 2
            except BudgetExceededError:
                positive = None
            files.append((f"amplify-k{args.k}-l{args.l}.txt", write_instance(outcome.instance)))
            meta = {
                "generator": "amplify",
                "k": args.k,
                "l": args.l,
                "mode": mode.value,
                "provenance": {str(v): s for v, s in sorted(outcome.provenance.items())},
                **_meta_expect(outcome.threshold, positive),
            }
        else:
            return _fail(f"unknown generator {name!r}", EXIT_INPUT)
    except OSError as exc:
        return _fail(str(exc), EXIT_INPUT)
    except (FormatError, GraphError, ValueError) as exc:
        return _fail(str(exc), EXIT_INPUT)
    except BudgetExceededError as exc:
        return _fail(str(exc), EXIT_BUDGET)

    stem = stem or files[0][0].rsplit(".", 1)[0]
    files.append((f"{stem}.meta.json", json.dumps(meta, indent=2, sort_keys=True) + "\n"))
    for fname, content in files:
        path = out_dir / fname
        try:
            path.write_text(content)
        except OSError as exc:
            return _fail(f"cannot write {path}: {exc}", EXIT_INPUT)
        print(path)
    return EXIT_OK


def cmd_verify(args) -> int:
    kwargs = {"seed": args.seed}
    if args.suite in ("bounds", "monotonicity", "characterization", "eulerian-agreement"):
        kwargs["nmax"] = args.nmax
        kwargs["samples"] = args.samples
    elif args.suite == "symmetric-agreement":
        kwargs["nmax"] = min(args.nmax, 5)
        kwargs["lmax"] = args.lmax
    elif args.suite == "reductions":
        kwargs["samples"] = args.samples
    elif args.suite == "nordhaus-gaddum":
        kwargs["amax"] = args.amax
        kwargs["nmax"] = min(args.nmax, 5)
        kwargs["samples"] = args.samples
    try:
        result = run_suite(args.suite, **kwargs)
    except BudgetExceededError as exc:
        return _fail(str(exc), EXIT_BUDGET)
    except ValueError as exc:
        return _fail(str(exc), EXIT_INPUT)

    report_dir = Path(args.report_dir) if args.report_dir else None
    if report_dir is not None:
        from .report import write_suite_report

        csv_path, png_path = write_suite_report(result, report_dir)
        print(f"report {csv_path}")
        print(f"figure {png_path}")
    for rec in result.failures():
        print(f"FAIL [{rec.index}] {rec.label}: {rec.detail}")
        if rec.reproducer is not None:
            target = (report_dir or Path.cwd()) / f"{result.suite}-repro-{rec.index}.txt"
            target.parent.mkdir(parents=True, exist_ok=True)
            target.write_text(rec.reproducer)
            print(f"  reproducer: {target}")
    status = "pass" if result.ok else "FAIL"
    print(
        f"suite {result.suite}: {len(result.records)} checks, "
        f"{result.passed} passed, {result.failed} failed [{status}]"
    )
    return EXIT_OK if result.ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treepack",
        description="Directed Steiner tree packing: compute, generate, verify.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("compute", help="compute a packing parameter on an instance file")
    pc.add_argument("--input", required=True, help="instance file")
    pc.add_argument("--set", help="terminal vertices, e.g. '0 1 2' (overrides the file)")
    pc.add_argument("--root", type=int, help="root vertex (overrides the file)")
    pc.add_argument("--mode", choices=("arc", "vertex"), default="vertex")
    pc.add_argument("--k", type=int, help="global parameter over all terminal sets of size k")
    pc.add_argument("--l", type=int, help="decision threshold: are there at least l trees")
    pc.add_argument("--engine", choices=("auto", "exact", "eulerian", "symmetric"), default="auto")
    pc.add_argument("--budget-n", type=int, dest="budget_n", help="raise the exact-search size budget to n vertices")
    pc.add_argument("--json", action="store_true", help="machine-readable output")
    pc.add_argument("--dot", help="write a DOT rendering of the instance (and certificate) here")
    pc.set_defaults(func=cmd_compute)

    pg = sub.add_parser("generate", help="write family or reduction instances plus metadata")
    gsub = pg.add_subparsers(dest="generator", required=True)

    g = gsub.add_parser("complete", help="complete symmetric digraph instance")
    g.add_argument("--n", type=int, required=True)
    g = gsub.add_parser("glued-cliques", help="two cliques sharing a cut vertex")
    g.add_argument("--t", type=int, required=True)
    g = gsub.add_parser("join", help="clique joined with an independent set")
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--n", type=int, required=True)
    g = gsub.add_parser("ng-pair", help="complementary pair with additive packing values")
    g.add_argument("--a", type=int, required=True)
    g = gsub.add_parser("ham-bipartite", help="complete bipartite host plus its cycle decomposition")
    g.add_argument("--a", type=int, required=True)
    g = gsub.add_parser("hypergraph-reduce", help="packing instance from a 2-colouring question")
    g.add_argument("--edges", required=True, help="semicolon-separated hyperedges, e.g. '0 1;1 2'")
    g.add_argument("--hn", type=int, help="vertex count (default: max index + 1)")
    g.add_argument("--l", type=int, required=True)
    g = gsub.add_parser("cllm-reduce", help="packing instance from a triple partition question")
    g.add_argument("--q", type=int, required=True)
    g.add_argument("--edges", required=True, help="semicolon-separated pairs, e.g. '0 3;3 6'")
    g.add_argument("--k", type=int, default=3)
    g = gsub.add_parser("eulerian-kappa-reduce", help="Eulerian packing instance from a linkage question")
    g.add_argument("--input", required=True, help="bare digraph file with the linkage source")
    g.add_argument("--marked", required=True, help="four vertices: s1 t1 s2 t2")
    g.add_argument("--k", type=int, default=3)
    g.add_argument("--l", type=int, default=2)
    g = gsub.add_parser("amplify", help="lift a three-terminal instance to larger k and l")
    g.add_argument("--input", required=True, help="instance file with |S| = 3")
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--l", type=int, required=True)
    g.add_argument("--mode", choices=("arc", "vertex"), default="vertex")
    for sp in gsub.choices.values():
        sp.add_argument("--out", default=".", help="output directory")
        sp.set_defaults(func=cmd_generate)

    pv = sub.add_parser("verify", help="run a verification suite")
    pv.add_argument("suite", choices=SUITE_NAMES)
    pv.add_argument("--nmax", type=int, default=5)
    pv.add_argument("--samples", type=int, default=100)
    pv.add_argument("--lmax", type=int, default=3)
    pv.add_argument("--amax", type=int, default=3)
    pv.add_argument("--seed", type=int, default=0)
    pv.add_argument("--report-dir", dest="report_dir", help="write CSV, PNG, and reproducers here")
    pv.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
