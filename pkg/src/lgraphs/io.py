"""Line-oriented text formats for graphs, trees, intervals, bipartite
instances, embeddings and labelings.

Every document starts with a header line naming its kind. ``#`` starts a
comment. Vertex names are whitespace-free tokens; dense ids are assigned
in natural sorted order of the names, so serialization is deterministic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterator, Sequence

from .errors import InputError, ParseError
from .geometry import LEmbedding, LSegment
from .graph import Graph, Labeling, LeafTree, name_key
from .labelers import ConvexBipartite, IntervalSet

KINDS = ("graph", "tree", "intervals", "bipartite", "embedding", "labeling")


def sorted_names(names) -> tuple[str, ...]:
    return tuple(sorted(names, key=name_key))


@dataclass(frozen=True)
class Document:
    """A parsed file: ``payload`` uses dense ids, ``names[id]`` is the external name.

    For trees, ``names`` are node names; the leaf vertex names live in the
    tree's ``leaf_label``.
    """

    kind: str
    payload: Any
    names: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(set(self.names)) != len(self.names):
            raise InputError("document names must be distinct")

    def index(self) -> dict[str, int]:
        return {s: i for i, s in enumerate(self.names)}


class _Line:
    __slots__ = ("no", "tokens", "cols")

    def __init__(self, no: int, raw: str) -> None:
        self.no = no
        body = raw.split("#", 1)[0]
        self.tokens = []
        self.cols = []
        for m in re.finditer(r"\S+", body):
            self.tokens.append(m.group())
            self.cols.append(m.start() + 1)

    def fail(self, code: str, msg: str, tok: int = 0) -> ParseError:
        col = self.cols[tok] if tok < len(self.cols) else 1
        return ParseError(code, msg, self.no, col)

    def int_at(self, tok: int, lo: int | None = None) -> int:
        s = self.tokens[tok]
        try:
            v = int(s)
        except ValueError:
            raise self.fail("BAD_NUMBER", f"expected an integer, got {s!r}", tok) from None
        if lo is not None and v < lo:
            raise self.fail("BAD_NUMBER", f"value {v} must be at least {lo}", tok)
        return v

    def frac_at(self, tok: int) -> Fraction:
        s = self.tokens[tok]
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError):
            raise self.fail("BAD_NUMBER", f"expected a rational like 3/4 or 0.75, got {s!r}", tok) from None


def _lines(text: str) -> Iterator[_Line]:
    for no, raw in enumerate(text.splitlines(), 1):
        ln = _Line(no, raw)
        if ln.tokens:
            yield ln


def _header(lines: list[_Line], kind: str) -> _Line:
    if not lines:
        raise ParseError("BAD_HEADER", f"empty document, expected '{kind}' header", 1, 1)
    head = lines[0]
    if head.tokens[0] != kind:
        raise head.fail("BAD_HEADER", f"expected '{kind}' header, got {head.tokens[0]!r}")
    return head


def _arity(ln: _Line, n: int | Sequence[int], what: str) -> None:
    ok = ln.tokens.__len__() in ((n,) if isinstance(n, int) else n)
    if not ok:
        raise ln.fail("MALFORMED_LINE", f"expected {what}")


def _parse_graph(lines: list[_Line]) -> Document:
    head = _header(lines, "graph")
    _arity(head, 3, "'graph n m'")
    n, m = head.int_at(1, 0), head.int_at(2, 0)
    seen: dict[str, _Line] = {}
    pairs: list[tuple[str, str, _Line]] = []
    keys = set()
    for ln in lines[1:]:
        _arity(ln, (1, 2), "'a b' edge or a single vertex name")
        for t in ln.tokens:
            seen.setdefault(t, ln)
        if len(ln.tokens) == 2:
            a, b = ln.tokens
            if a == b:
                raise ln.fail("SELF_LOOP", f"self-loop at {a!r}", 1)
            key = frozenset((a, b))
            if key in keys:
                raise ln.fail("DUP_EDGE", f"edge {a} {b} listed twice")
            keys.add(key)
            pairs.append((a, b, ln))
    names = sorted_names(seen)
    if len(names) != n:
        raise head.fail("COUNT_MISMATCH", f"header says {n} vertices, found {len(names)}", 1)
    if len(pairs) != m:
        raise head.fail("COUNT_MISMATCH", f"header says {m} edges, found {len(pairs)}", 2)
    idx = {s: i for i, s in enumerate(names)}
    g = Graph.from_edges(n, [(idx[a], idx[b]) for a, b, _ in pairs])
    return Document("graph", g, names)


def _serialize_graph(doc: Document) -> str:
    g: Graph = doc.payload
    out = [f"graph {g.n} {g.m}"]
    for u, v in sorted(g.edges):
        out.append(f"{doc.names[u]} {doc.names[v]}")
    for v in range(g.n):
        if g.degree(v) == 0:
            out.append(doc.names[v])
    return "\n".join(out) + "\n"


def _parse_tree(lines: list[_Line]) -> Document:
    head = _header(lines, "tree")
    _arity(head, 1, "'tree'")
    parent_of: dict[str, str | None] = {}
    where: dict[str, _Line] = {}
    leaf_names: dict[str, str] = {}
    leaf_lines: list[_Line] = []
    for ln in lines[1:]:
        if ln.tokens[0] == "leaf":
            _arity(ln, 3, "'leaf node name'")
            leaf_lines.append(ln)
            node, name = ln.tokens[1], ln.tokens[2]
            if node in leaf_names:
                raise ln.fail("DUP_NAME", f"node {node!r} already has a leaf name", 1)
            if name in leaf_names.values():
                raise ln.fail("DUP_NAME", f"leaf name {name!r} used twice", 2)
            leaf_names[node] = name
            continue
        _arity(ln, 2, "'node parent' or 'node -'")
        node, par = ln.tokens
        if node in parent_of:
            raise ln.fail("DUP_NAME", f"node {node!r} declared twice")
        if par == "-":
            roots = [v for v, p in parent_of.items() if p is None]
            if roots:
                raise ln.fail("DUP_ROOT", f"second root {node!r} (first was {roots[0]!r})")
        parent_of[node] = None if par == "-" else par
        where[node] = ln
    if not parent_of:
        raise _header(lines, "tree").fail("NO_ROOT", "tree has no nodes")
    for node, par in parent_of.items():
        if par is not None and par not in parent_of:
            raise where[node].fail("UNKNOWN_VERTEX", f"parent {par!r} is not declared", 1)
    if not any(p is None for p in parent_of.values()):
        raise head.fail("NO_ROOT", "no node has parent '-'")
    for ln in leaf_lines:
        if ln.tokens[1] not in parent_of:
            raise ln.fail("UNKNOWN_VERTEX", f"node {ln.tokens[1]!r} is not declared", 1)
    names = sorted_names(parent_of)
    idx = {s: i for i, s in enumerate(names)}
    parent = tuple(None if parent_of[s] is None else idx[parent_of[s]] for s in names)
    labels = {idx[node]: name for node, name in leaf_names.items()}
    try:
        tree = LeafTree(parent, labels)
    except InputError as exc:
        raise head.fail("BAD_TREE", str(exc)) from None
    return Document("tree", tree, names)


def _serialize_tree(doc: Document) -> str:
    t: LeafTree = doc.payload
    out = ["tree"]
    for v in range(t.size):
        p = t.parent[v]
        out.append(f"{doc.names[v]} {'-' if p is None else doc.names[p]}")
    for v in sorted(t.leaf_label):
        out.append(f"leaf {doc.names[v]} {t.leaf_label[v]}")
    return "\n".join(out) + "\n"


def _fmt_frac(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _parse_intervals(lines: list[_Line]) -> Document:
    head = _header(lines, "intervals")
    _arity(head, 1, "'intervals'")
    found: dict[str, tuple[Fraction, Fraction]] = {}
    for ln in lines[1:]:
        _arity(ln, 3, "'name a b'")
        name = ln.tokens[0]
        if name in found:
            raise ln.fail("DUP_NAME", f"interval {name!r} given twice")
        a, b = ln.frac_at(1), ln.frac_at(2)
        if not a < b:
            raise ln.fail("BAD_INTERVAL", f"interval [{a}, {b}] needs a < b", 1)
        found[name] = (a, b)
    names = sorted_names(found)
    return Document("intervals", IntervalSet(tuple(found[s] for s in names)), names)


def _serialize_intervals(doc: Document) -> str:
    iv: IntervalSet = doc.payload
    out = ["intervals"]
    for v, (a, b) in enumerate(iv.intervals):
        out.append(f"{doc.names[v]} {_fmt_frac(a)} {_fmt_frac(b)}")
    return "\n".join(out) + "\n"


def _parse_bipartite(lines: list[_Line]) -> Document:
    head = _header(lines, "bipartite")
    _arity(head, 1, "'bipartite'")
    blue: dict[str, tuple[int, _Line]] = {}
    red: dict[str, tuple[list[str], _Line]] = {}
    for ln in lines[1:]:
        tag = ln.tokens[0]
        if tag == "blue":
            _arity(ln, 3, "'blue name rank'")
            name = ln.tokens[1]
            if name in blue or name in red:
                raise ln.fail("DUP_NAME", f"vertex {name!r} declared twice", 1)
            blue[name] = (ln.int_at(2, 1), ln)
        elif tag == "red":
            if len(ln.tokens) < 2:
                raise ln.fail("MALFORMED_LINE", "expected 'red name neighbour...'")
            name = ln.tokens[1]
            if name in blue or name in red:
                raise ln.fail("DUP_NAME", f"vertex {name!r} declared twice", 1)
            nbs = ln.tokens[2:]
            if len(set(nbs)) != len(nbs):
                raise ln.fail("DUP_EDGE", f"red vertex {name!r} lists a neighbour twice", 2)
            red[name] = (nbs, ln)
        else:
            raise ln.fail("MALFORMED_LINE", f"expected 'blue' or 'red', got {tag!r}")
    ranks = sorted(f for f, _ in blue.values())
    if ranks != list(range(1, len(blue) + 1)):
        raise head.fail("BAD_NUMBER", "blue ranks must be exactly 1..|B|")
    for name, (nbs, ln) in red.items():
        for i, b in enumerate(nbs):
            if b not in blue:
                raise ln.fail("UNKNOWN_VERTEX", f"{b!r} is not a blue vertex", 2 + i)
    names = sorted_names(list(blue) + list(red))
    idx = {s: i for i, s in enumerate(names)}
    cb = ConvexBipartite(
        {idx[b]: f for b, (f, _) in blue.items()},
        {idx[r]: frozenset(idx[b] for b in nbs) for r, (nbs, _) in red.items()},
    )
    return Document("bipartite", cb, names)


def _serialize_bipartite(doc: Document) -> str:
    cb: ConvexBipartite = doc.payload
    out = ["bipartite"]
    for b in sorted(cb.rank, key=lambda b: cb.rank[b]):
        out.append(f"blue {doc.names[b]} {cb.rank[b]}")
    for r in sorted(cb.red_neighbors):
        nbs = sorted(cb.red_neighbors[r], key=lambda b: cb.rank[b])
        out.append(" ".join(["red", doc.names[r], *(doc.names[b] for b in nbs)]))
    return "\n".join(out) + "\n"


def _parse_embedding(lines: list[_Line]) -> Document:
    head = _header(lines, "embedding")
    _arity(head, 1, "'embedding'")
    found: dict[str, LSegment] = {}
    for ln in lines[1:]:
        _arity(ln, 5, "'name x y w h'")
        name = ln.tokens[0]
        if name in found:
            raise ln.fail("DUP_NAME", f"segment {name!r} given twice")
        x, y = ln.int_at(1, 0), ln.int_at(2, 0)
        w, h = ln.int_at(3, 1), ln.int_at(4, 1)
        if y - h < 0:
            raise ln.fail("BAD_NUMBER", f"vertical arm of {name!r} rises above y=0", 4)
        found[name] = LSegment(x, y, w, h)
    names = sorted_names(found)
    return Document("embedding", LEmbedding({i: found[s] for i, s in enumerate(names)}), names)


def _serialize_embedding(doc: Document) -> str:
    e: LEmbedding = doc.payload
    out = ["embedding"]
    for v, s in e.items():
        out.append(f"{doc.names[v]} {s.x} {s.y} {s.w} {s.h}")
    return "\n".join(out) + "\n"


def _parse_labeling(lines: list[_Line], names: Sequence[str] | None) -> Document:
    head = _header(lines, "labeling")
    if len(head.tokens) != 1:
        raise head.fail("MALFORMED_LINE", "expected 'labeling'", 1)
    seq: list[tuple[str, _Line, int]] = []
    for ln in lines[1:]:
        for i, t in enumerate(ln.tokens):
            seq.append((t, ln, i))
    if names is None:
        names = sorted_names({t for t, _, _ in seq})
    idx = {s: i for i, s in enumerate(names)}
    order = []
    used = set()
    for t, ln, i in seq:
        if t not in idx:
            raise ln.fail("UNKNOWN_VERTEX", f"{t!r} is not a vertex", i)
        if t in used:
            raise ln.fail("NOT_PERMUTATION", f"{t!r} appears twice", i)
        used.add(t)
        order.append(idx[t])
    if len(order) != len(names):
        missing = [s for s in names if s not in used]
        raise head.fail("NOT_PERMUTATION", f"missing vertices: {' '.join(missing[:5])}")
    return Document("labeling", Labeling(tuple(order)), tuple(names))


def _serialize_labeling(doc: Document) -> str:
    lab: Labeling = doc.payload
    return "labeling\n" + "".join(f"{doc.names[v]}\n" for v in lab.order)


_PARSERS = {
    "graph": _parse_graph,
    "tree": _parse_tree,
    "intervals": _parse_intervals,
    "bipartite": _parse_bipartite,
    "embedding": _parse_embedding,
}
_SERIALIZERS = {
    "graph": _serialize_graph,
    "tree": _serialize_tree,
    "intervals": _serialize_intervals,
    "bipartite": _serialize_bipartite,
    "embedding": _serialize_embedding,
    "labeling": _serialize_labeling,
}


def parse(kind: str, text: str, names: Sequence[str] | None = None) -> Document:
    """Parse ``text`` as a document of ``kind``.

    ``names`` only applies to labelings: it fixes the vertex universe and id
    order, typically taken from the graph the labeling belongs to.
    """
    if kind not in KINDS:
        raise InputError(f"unknown document kind {kind!r}")
    lines = list(_lines(text))
    if kind == "labeling":
        return _parse_labeling(lines, names)
    return _PARSERS[kind](lines)


def sniff(text: str) -> str:
    """Document kind named by the first non-comment line."""
    for ln in _lines(text):
        if ln.tokens[0] in KINDS:
            return ln.tokens[0]
        raise ln.fail("BAD_HEADER", f"unknown document kind {ln.tokens[0]!r}")
    raise ParseError("BAD_HEADER", "empty document", 1, 1)


def serialize(doc: Document) -> str:
    return _SERIALIZERS[doc.kind](doc)


def default_names(n: int) -> tuple[str, ...]:
    return tuple(f"v{i}" for i in range(n))
