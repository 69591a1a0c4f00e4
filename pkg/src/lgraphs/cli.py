"""Command-line interface: ``lgraphs <command> ...``.

Exit status is 0 on success, 1 for a negative verdict (jumping labeling,
invalid embedding, exhausted or over-budget search, graph outside the
requested family) and 2 for unreadable or malformed input.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Sequence, TextIO

from . import io as lio
from .builders import embed_distance_hereditary, embed_leaf_power
from .errors import (
    ConvexityError,
    InputError,
    NotDistanceHereditaryError,
    NotOuterplanarError,
    ParseError,
)
from .geometry import validate_embedding
from .graph import Graph, LeafTree
from .labelers import label_3leaf, label_convex_bipartite, label_interval, label_outerplanar
from .monotone import (
    JUMPING8,
    JUMPING8_NAMES,
    SearchStatus,
    build_monotone,
    enumerate_all_labelings,
    find_nonjumping_labeling,
    is_nonjumping_fast,
    is_nonjumping_naive,
)
from .svg import render_svg


class _Negative(Exception):
    """A well-formed input got a negative verdict."""


def _use_color(stream: TextIO) -> bool:
    flag = os.environ.get("ELL_COLOR")
    if flag is not None:
        return flag != "0"
    return hasattr(stream, "isatty") and stream.isatty()


def _paint(text: str, code: str, stream: TextIO) -> str:
    return f"\x1b[{code}m{text}\x1b[0m" if _use_color(stream) else text


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _load(path: str, kind: str, names: Sequence[str] | None = None) -> lio.Document:
    return lio.parse(kind, _read(path), names)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _leaf_names(t: LeafTree) -> tuple[str, ...]:
    return tuple(t.leaf_label[v] for v in t.sorted_leaves())


def _embedding_for_graph(gdoc: lio.Document, edoc: lio.Document):
    idx = gdoc.index()
    segs = {}
    for v, s in edoc.payload.items():
        name = edoc.names[v]
        if name not in idx:
            raise ParseError("UNKNOWN_VERTEX", f"{name!r} is not a vertex of the graph")
        segs[idx[name]] = s
    missing = [s for s in gdoc.names if idx[s] not in segs]
    if missing:
        raise ParseError("UNKNOWN_VERTEX", f"no segment for vertices: {' '.join(missing[:5])}")
    return segs


def cmd_label(args: argparse.Namespace) -> int:
    fam = args.family
    if fam == "interval":
        doc = _load(args.input, "intervals")
        lab, names = label_interval(doc.payload), doc.names
    elif fam == "convex-bipartite":
        doc = _load(args.input, "bipartite")
        lab, names = label_convex_bipartite(doc.payload), doc.names
    elif fam == "outerplanar":
        doc = _load(args.input, "graph")
        try:
            lab = label_outerplanar(doc.payload)
        except NotOuterplanarError as exc:
            raise _Negative(f"not outerplanar: {exc}") from None
        names = doc.names
    else:
        doc = _load(args.input, "tree")
        _, lab = label_3leaf(doc.payload)
        names = _leaf_names(doc.payload)
    _emit(lio.serialize(lio.Document("labeling", lab, tuple(names))), args.out)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    gdoc = _load(args.graph, "graph")
    ldoc = _load(args.labeling, "labeling", gdoc.names)
    g, lab = gdoc.payload, ldoc.payload
    if args.naive:
        w = is_nonjumping_naive(g, lab)
        ok = w is None
    else:
        ok = is_nonjumping_fast(g, lab)
        w = None if ok else is_nonjumping_naive(g, lab)
    if ok:
        print(_paint("non-jumping", "32", sys.stdout))
        return 0
    i, j, k, l = w.one_based()
    who = " ".join(gdoc.names[lab[p]] for p in w)
    print(_paint("jumping", "31", sys.stdout) + f": witness (i,j,k,l) = ({i},{j},{k},{l}) vertices {who}")
    return 1


def cmd_embed(args: argparse.Namespace) -> int:
    if args.method == "4leaf":
        doc = _load(args.input, "tree")
        _, e = embed_leaf_power(doc.payload, args.power)
        names = _leaf_names(doc.payload)
    else:
        gdoc = _load(args.input, "graph")
        g: Graph = gdoc.payload
        names = gdoc.names
        if args.method == "dh":
            try:
                e = embed_distance_hereditary(g)
            except NotDistanceHereditaryError as exc:
                raise _Negative(f"not distance-hereditary: {exc}") from None
        else:
            if args.labeling:
                lab = _load(args.labeling, "labeling", names).payload
            else:
                res = find_nonjumping_labeling(g, budget=args.budget)
                if res.status is not SearchStatus.FOUND:
                    raise _Negative(f"no non-jumping labeling: {res.status.value}")
                lab = res.labeling
            w = is_nonjumping_naive(g, lab)
            if w is not None:
                raise _Negative(f"labeling is jumping at positions {w.one_based()}")
            e = build_monotone(g, lab)
    _emit(lio.serialize(lio.Document("embedding", e, tuple(names))), args.out)
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    gdoc = _load(args.graph, "graph")
    edoc = _load(args.embedding, "embedding")
    segs = _embedding_for_graph(gdoc, edoc)
    rep = validate_embedding(gdoc.payload, segs)
    if rep.ok:
        print(_paint("ok", "32", sys.stdout) + f": {gdoc.payload.n} segments, {gdoc.payload.m} crossings")
        return 0
    print(_paint("invalid", "31", sys.stdout) + f": {len(rep.violations)} violation(s)")
    for v in rep.violations:
        a, b = gdoc.names[v.u], gdoc.names[v.v]
        print(f"  {a} {b}: {v.kind.value} ({'adjacent' if v.adjacent else 'non-adjacent'})")
    return 1


def cmd_search(args: argparse.Namespace) -> int:
    gdoc = _load(args.graph, "graph")
    g = gdoc.payload
    if args.no_prune:
        census = enumerate_all_labelings(g)
        print(f"checked {census.checked} labelings, {census.nonjumping} non-jumping")
        if census.first is None:
            print("exhausted: jumping graph")
            return 1
        _emit(lio.serialize(lio.Document("labeling", census.first, gdoc.names)), args.out)
        return 0
    res = find_nonjumping_labeling(g, budget=args.budget, jobs=args.jobs)
    if res.status is SearchStatus.FOUND:
        _emit(lio.serialize(lio.Document("labeling", res.labeling, gdoc.names)), args.out)
        return 0
    if res.status is SearchStatus.EXHAUSTED:
        print("exhausted: jumping graph")
    else:
        print(f"budget exceeded after {res.nodes} prefixes; verdict unknown")
    return 1


def cmd_render(args: argparse.Namespace) -> int:
    doc = _load(args.embedding, "embedding")
    idx = doc.index()
    hl = set()
    for name in args.highlight or ():
        if name not in idx:
            raise ParseError("UNKNOWN_VERTEX", f"{name!r} is not in the embedding")
        hl.add(idx[name])
    _emit(render_svg(doc.payload, doc.names, hl), args.out)
    return 0


def cmd_builtin(args: argparse.Namespace) -> int:
    _emit(lio.serialize(lio.Document("graph", JUMPING8, JUMPING8_NAMES)), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lgraphs", description="Build, check and draw L-embeddings.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("label", help="non-jumping labeling for a structured family")
    s.add_argument("--family", required=True, choices=["interval", "convex-bipartite", "outerplanar", "3leaf"])
    s.add_argument("input")
    s.add_argument("--out")
    s.set_defaults(func=cmd_label)

    s = sub.add_parser("verify", help="test whether a labeling is non-jumping")
    s.add_argument("graph")
    s.add_argument("labeling")
    s.add_argument("--naive", action="store_true", help="use the quadratic witness scan")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("embed", help="compute an L-embedding")
    s.add_argument("--method", required=True, choices=["monotone", "dh", "4leaf"])
    s.add_argument("input")
    s.add_argument("labeling", nargs="?")
    s.add_argument("--power", type=int, default=4, choices=[1, 2, 3, 4], help="leaf power for 4leaf")
    s.add_argument("--budget", type=int, help="search budget when no labeling is given")
    s.add_argument("--out")
    s.set_defaults(func=cmd_embed)

    s = sub.add_parser("check", help="validate an embedding against a graph")
    s.add_argument("graph")
    s.add_argument("embedding")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("search", help="find the first non-jumping labeling")
    s.add_argument("graph")
    s.add_argument("--budget", type=int)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--no-prune", action="store_true", help="check all n! labelings")
    s.add_argument("--out")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("render", help="draw an embedding as SVG")
    s.add_argument("embedding")
    s.add_argument("--highlight", nargs="*")
    s.add_argument("--out")
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("builtin", help="emit a built-in instance")
    s.add_argument("name", choices=["jumping8"])
    s.add_argument("--out")
    s.set_defaults(func=cmd_builtin)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Negative as exc:
        print(str(exc), file=sys.stderr)
        return 1
    except ConvexityError as exc:
        print(f"error: not convex: {exc}", file=sys.stderr)
        return 2
    except (ParseError, InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
