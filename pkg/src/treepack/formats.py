"""Line-oriented text formats for instances and reduction sources.

Instance files are UTF-8 text: comment lines start with '#', blank lines
are skipped, the first payload line is "n <count>", then zero or more
"a <tail> <head>" arc lines, then optionally "S <v1> <v2> ..." naming the
terminals and "r <v>" naming the root.  Writers emit a canonical form
(arcs sorted lexicographically, no comments) that round-trips
byte-identically.  Hypergraphs use "hn <count>" plus "he <v1> <v2> ..."
lines; tripartite graphs use "q <count>" plus "e <u> <v>" lines with
parts 0..q-1, q..2q-1 and 2q..3q-1.
"""

from __future__ import annotations

from .core import Digraph, Mode, SteinerInstance, TreePacking, build


class FormatError(ValueError):
    """Malformed instance text; the message names the offending line."""


def _payload_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def _int_field(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"line {lineno}: expected an integer, got {tok!r}") from None


def _parse_instance_parts(text: str):
    """Returns (digraph, terminals or None, root or None)."""
    n = None
    arcs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    terminals = None
    root = None
    for lineno, toks in _payload_lines(text):
        tag = toks[0]
        if tag == "n":
            if n is not None:
                raise FormatError(f"line {lineno}: duplicate n line")
            if len(toks) != 2:
                raise FormatError(f"line {lineno}: n takes one count")
            n = _int_field(toks[1], lineno)
            if n < 0:
                raise FormatError(f"line {lineno}: negative vertex count")
            continue
        if n is None:
            raise FormatError(f"line {lineno}: n line must come first")
        if tag == "a":
            if len(toks) != 3:
                raise FormatError(f"line {lineno}: a takes tail and head")
            t = _int_field(toks[1], lineno)
            h = _int_field(toks[2], lineno)
            if not (0 <= t < n and 0 <= h < n):
                raise FormatError(f"line {lineno}: arc endpoint out of range")
            if t == h:
                raise FormatError(f"line {lineno}: loop at vertex {t}")
            if (t, h) in seen:
                raise FormatError(f"line {lineno}: duplicate arc {t} -> {h}")
            seen.add((t, h))
            arcs.append((t, h))
        elif tag == "S":
            if terminals is not None:
                raise FormatError(f"line {lineno}: duplicate S line")
            if len(toks) < 2:
                raise FormatError(f"line {lineno}: S needs at least one vertex")
            vs = [_int_field(x, lineno) for x in toks[1:]]
            if any(not 0 <= v < n for v in vs):
                raise FormatError(f"line {lineno}: terminal out of range")
            if len(set(vs)) != len(vs):
                raise FormatError(f"line {lineno}: repeated terminal")
            terminals = frozenset(vs)
        elif tag == "r":
            if root is not None:
                raise FormatError(f"line {lineno}: duplicate r line")
            if len(toks) != 2:
                raise FormatError(f"line {lineno}: r takes one vertex")
            root = _int_field(toks[1], lineno)
            if not 0 <= root < n:
                raise FormatError(f"line {lineno}: root out of range")
        else:
            raise FormatError(f"line {lineno}: unknown tag {tag!r}")
    if n is None:
        raise FormatError("missing n line")
    return build(n, sorted(arcs)), terminals, root


def parse_digraph(text: str) -> Digraph:
    """Parse a bare digraph file; terminal or root lines are rejected."""
    d, terminals, root = _parse_instance_parts(text)
    if terminals is not None or root is not None:
        raise FormatError("digraph file must not carry S or r lines")
    return d


def parse_flexible(text: str):
    """Parse a digraph file whose S and r lines are both optional.
    Returns (digraph, terminals or None, root or None)."""
    return _parse_instance_parts(text)


def parse_instance(text: str) -> SteinerInstance:
    """Parse a full instance file; S and r lines are required."""
    d, terminals, root = _parse_instance_parts(text)
    if terminals is None:
        raise FormatError("missing S line")
    if root is None:
        raise FormatError("missing r line")
    if root not in terminals:
        raise FormatError("root is not a terminal")
    if len(terminals) < 2:
        raise FormatError("need at least two terminals")
    return SteinerInstance(d, terminals, root)


def write_digraph(d: Digraph) -> str:
    lines = [f"n {d.n}"]
    lines += [f"a {t} {h}" for t, h in sorted(d.arcs)]
    return "\n".join(lines) + "\n"


def write_instance(inst: SteinerInstance) -> str:
    body = write_digraph(inst.graph)
    terms = " ".join(str(v) for v in sorted(inst.terminals))
    return f"{body}S {terms}\nr {inst.root}\n"


def parse_hypergraph(text: str) -> tuple[int, list[frozenset]]:
    n = None
    edges: list[frozenset] = []
    for lineno, toks in _payload_lines(text):
        tag = toks[0]
        if tag == "hn":
            if n is not None:
                raise FormatError(f"line {lineno}: duplicate hn line")
            if len(toks) != 2:
                raise FormatError(f"line {lineno}: hn takes one count")
            n = _int_field(toks[1], lineno)
            continue
        if n is None:
            raise FormatError(f"line {lineno}: hn line must come first")
        if tag != "he":
            raise FormatError(f"line {lineno}: unknown tag {tag!r}")
        if len(toks) < 2:
            raise FormatError(f"line {lineno}: empty hyperedge")
        vs = [_int_field(x, lineno) for x in toks[1:]]
        if any(not 0 <= v < n for v in vs):
            raise FormatError(f"line {lineno}: hyperedge vertex out of range")
        if len(set(vs)) < 2:
            raise FormatError(f"line {lineno}: hyperedge needs two distinct vertices")
        edges.append(frozenset(vs))
    if n is None:
        raise FormatError("missing hn line")
    return n, edges


def parse_tripartite(text: str) -> tuple[int, list[tuple[int, int]]]:
    q = None
    edges: list[tuple[int, int]] = []
    for lineno, toks in _payload_lines(text):
        tag = toks[0]
        if tag == "q":
            if q is not None:
                raise FormatError(f"line {lineno}: duplicate q line")
            if len(toks) != 2:
                raise FormatError(f"line {lineno}: q takes one count")
            q = _int_field(toks[1], lineno)
            continue
        if q is None:
            raise FormatError(f"line {lineno}: q line must come first")
        if tag != "e":
            raise FormatError(f"line {lineno}: unknown tag {tag!r}")
        if len(toks) != 3:
            raise FormatError(f"line {lineno}: e takes two endpoints")
        a = _int_field(toks[1], lineno)
        b = _int_field(toks[2], lineno)
        if not (0 <= a < 3 * q and 0 <= b < 3 * q):
            raise FormatError(f"line {lineno}: edge endpoint out of range")
        if a == b:
            raise FormatError(f"line {lineno}: edge endpoints must differ")
        edges.append((min(a, b), max(a, b)))
    if q is None:
        raise FormatError("missing q line")
    return q, edges


def to_dot(d: Digraph, packing: TreePacking | None = None) -> str:
    """Plain arc-list DOT text.  With a packing, arcs carried by tree i
    are labelled t<i>."""
    owner: dict[tuple[int, int], int] = {}
    if packing is not None:
        for i, tree in enumerate(packing.trees, start=1):
            for pair in tree.arcs:
                owner[pair] = i
    lines = ["digraph g {"]
    for pair in d.arcs:
        t, h = pair
        if pair in owner:
            lines.append(f'  {t} -> {h} [label="t{owner[pair]}"];')
        else:
            lines.append(f"  {t} -> {h};")
    lines.append("}")
    return "\n".join(lines) + "\n"
