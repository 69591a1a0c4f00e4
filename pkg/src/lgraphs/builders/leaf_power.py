"""L-embeddings of k-leaf powers for k <= 4.

The leaf tree is first simplified so every internal node owns exactly one
leaf. Two such leaves are then within distance 4 iff their internal nodes
are within distance 2, so the graph is the square of the internal tree.
That square is drawn by nesting two block layouts that alternate by depth:

* ELL block of ``v``: ``v``'s horizontal arm runs along the top row and the
  children's vertical arms hang across it, forming a staircase clique.
  Each child owns a free rectangle below ``v``'s arm, left of its own
  vertical arm, into which the child's RECT block is slid vertically.
* RECT block of ``u``: the children's horizontal arms cross ``u``'s vertical
  arm on the right. Each child owns a free horizontal band right of all
  child verticals, into which the child's ELL block is slid horizontally.

Grandchildren are then stretched one unit past the grandparent's arm.
All corners sit on even coordinates and all arm ends on odd ones, so no
endpoint can ever touch another arm.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Mapping

from ..errors import InputError
from ..geometry import LEmbedding, LSegment, normalized
from ..graph import Graph, Labeling, LeafTree, graph_from_leaf_tree
from ..monotone import build_monotone
from .distance_hereditary import add_false_twin, add_true_twin, embed_distance_hereditary

DUMMY_PREFIX = "~dummy"


class ConfigKind(enum.Enum):
    RECTANGLE = "rectangle"
    ELL = "ell"


@dataclass(frozen=True)
class SimplifiedLeafTree:
    """Leaf tree where each internal node has exactly one leaf child.

    ``removed_twins`` maps a surviving leaf label to the labels of the
    sibling leaves folded into it; ``dummies`` holds labels of added leaves.
    """

    tree: LeafTree
    removed_twins: Mapping[str, tuple[str, ...]] = field(default_factory=dict)
    dummies: frozenset[str] = frozenset()

    def leaf_child(self, node: int) -> int:
        leaves = [c for c in self.tree.children(node) if self.tree.is_leaf(c)]
        assert len(leaves) == 1, f"node {node} must own exactly one leaf"
        return leaves[0]

    def internal_children(self, node: int) -> list[int]:
        return [c for c in self.tree.children(node) if not self.tree.is_leaf(c)]


def simplify_leaf_tree(raw: LeafTree) -> SimplifiedLeafTree:
    """Fold sibling leaves, give leafless internal nodes a dummy leaf, re-root.

    Among sibling leaves the smallest node id survives. The new root is
    the lowest-id internal node of the input.
    """
    internal = raw.internal_nodes()
    if not internal:
        raise InputError("leaf tree has no internal node")
    adj: dict[int, set[int]] = {}
    labels: dict[int, str] = {}
    removed: dict[str, tuple[str, ...]] = {}
    for p in internal:
        adj.setdefault(p, set())
        leaf_kids = [c for c in raw.children(p) if raw.is_leaf(c)]
        for c in raw.children(p):
            if c in leaf_kids and c != (leaf_kids[0] if leaf_kids else None):
                continue
            adj.setdefault(c, set())
            adj[p].add(c)
            adj[c].add(p)
        if leaf_kids:
            keep = leaf_kids[0]
            labels[keep] = raw.leaf_label[keep]
            if len(leaf_kids) > 1:
                removed[raw.leaf_label[keep]] = tuple(raw.leaf_label[c] for c in leaf_kids[1:])
    taken = set(raw.leaf_label.values())
    dummies = []
    next_id = raw.size
    for p in internal:
        if not any(raw.is_leaf(c) for c in raw.children(p)):
            i = len(dummies)
            name = f"{DUMMY_PREFIX}{i}"
            while name in taken:
                i += 1
                name = f"{DUMMY_PREFIX}{i}"
            taken.add(name)
            dummies.append(name)
            adj[next_id] = {p}
            adj[p].add(next_id)
            labels[next_id] = name
            next_id += 1

    # re-root and compact ids: BFS from the lowest-id internal node
    root = min(internal)
    new_id = {root: 0}
    parent: list[int | None] = [None]
    queue = [root]
    for v in queue:
        for u in sorted(adj[v]):
            if u not in new_id:
                new_id[u] = len(parent)
                parent.append(new_id[v])
                queue.append(u)
    tree = LeafTree(tuple(parent), {new_id[v]: name for v, name in labels.items()})
    return SimplifiedLeafTree(tree, removed, frozenset(dummies))


def fully_connected_embedding(vertices: list[int]) -> LEmbedding:
    """Staircase drawing of a clique, in the given order."""
    if not vertices:
        raise InputError("need at least one vertex")
    k = len(vertices)
    e = build_monotone(Graph.complete(k), Labeling.identity(k))
    return LEmbedding({vertices[i]: e[i] for i in range(k)})


# Segments under construction are mutable [x, y, top, right] lists.
_X, _Y, _TOP, _RIGHT = range(4)


@dataclass
class _Block:
    kind: ConfigKind
    segs: dict[int, list[int]]
    width: int
    height: int
    uncle: int
    cousins: list[int]
    regions: dict[int, tuple[int, int, int, int]]


def _ell_block(v: int, kids: list[tuple[int, _Block]]) -> _Block:
    segs: dict[int, list[int]] = {}
    band = max((b.height for _, b in kids), default=0)
    regions = {}
    x = 0
    cols = []
    for c, blk in kids:
        # slide the child's block so its right edge meets the child's vertical arm
        for node, s in blk.segs.items():
            if node != c:
                segs[node] = [s[_X] + x, s[_Y], s[_TOP], s[_RIGHT] + x]
        for d in blk.cousins:
            segs[d][_TOP] = -1
        regions[c] = (x, 0, x + blk.width, band)
        x += blk.width
        cols.append(x)
    m = len(kids)
    for i, (c, _) in enumerate(kids, 1):
        segs[c] = [cols[i - 1], band + 2 * i, -1, x + 1]
    segs[v] = [0, 0, -1, x + 1]
    return _Block(ConfigKind.ELL, segs, x + 2, band + 2 * m + 2, v, [c for c, _ in kids], regions)


def _rect_block(u: int, kids: list[tuple[int, _Block]]) -> _Block:
    m = len(kids)
    if m == 0:
        return _Block(ConfigKind.RECTANGLE, {u: [2, 2, 1, 3]}, 2, 2, u, [], {})
    start = 2 * m
    right = start + max(b.width for _, b in kids)
    segs: dict[int, list[int]] = {}
    regions = {}
    rows = []
    y = 2
    for d, blk in kids:
        rows.append(y)
        for node, s in blk.segs.items():
            if node != d:
                segs[node] = [s[_X] + start, s[_Y] + y, s[_TOP] + y, s[_RIGHT] + start]
        for c in blk.cousins:
            segs[c][_RIGHT] = right + 1
        regions[d] = (start, y, right, y + blk.height)
        y += blk.height
    for j, (d, _) in enumerate(kids, 1):
        segs[d] = [2 * j, rows[j - 1], 1, right + 1]
    segs[u] = [right, y, 1, right + 1]
    return _Block(ConfigKind.RECTANGLE, segs, right, y, u, [d for d, _ in kids], regions)


def _to_segments(blk: _Block, leaf_of) -> dict[int, LSegment]:
    out = {}
    for node, (x, y, top, right) in blk.segs.items():
        out[leaf_of(node)] = LSegment(x, y, right - x, y - top)
    return out


@dataclass(frozen=True)
class Configuration:
    """Drawing of a node's leaf, its grandchild leaves, and their free regions.

    Keys of ``embedding`` and ``regions`` are leaf node ids of the
    simplified tree. ``regions[c]`` is the open rectangle
    ``(x0, y0, x1, y1)`` reserved for the sub-drawing hanging off cousin ``c``.
    """

    kind: ConfigKind
    uncle: int
    cousins: tuple[int, ...]
    embedding: LEmbedding
    regions: Mapping[int, tuple[int, int, int, int]]


def build_configuration(t: SimplifiedLeafTree, node: int, kind: ConfigKind) -> Configuration:
    """Base-level RECTANGLE or ELL drawing for ``node`` with empty free regions."""
    if t.tree.is_leaf(node):
        raise InputError(f"node {node} is a leaf")
    kind = ConfigKind(kind)
    kids = [(c, _rect_block(c, []) if kind is ConfigKind.ELL else _ell_block(c, []))
            for c in t.internal_children(node)]
    blk = _ell_block(node, kids) if kind is ConfigKind.ELL else _rect_block(node, kids)
    leaf = t.leaf_child
    raw = _to_segments(blk, leaf)
    e = normalized(raw)
    dx = min(s.x for s in raw.values())
    dy = min(s.top for s in raw.values())
    regions = {
        leaf(c): (x0 - dx, y0 - dy, x1 - dx, y1 - dy) for c, (x0, y0, x1, y1) in blk.regions.items()
    }
    return Configuration(kind, leaf(node), tuple(leaf(c) for c in blk.cousins), e, regions)


def _embed_simplified(t: SimplifiedLeafTree) -> dict[str, LSegment]:
    tree = t.tree
    top = tree.root
    order = [top]
    depth = {top: 0}
    for v in order:
        for c in t.internal_children(v):
            depth[c] = depth[v] + 1
            order.append(c)
    blocks: dict[int, _Block] = {}
    for v in reversed(order):
        kids = [(c, blocks.pop(c)) for c in t.internal_children(v)]
        if depth[v] % 2 == 0:
            blocks[v] = _ell_block(v, kids)
        else:
            blocks[v] = _rect_block(v, kids)
    blk = blocks[top]
    leaf = t.leaf_child
    return {tree.leaf_label[leaf(v)]: s for v, s in _to_segments(blk, lambda v: v).items()}


def _square_of_internal_tree(t: SimplifiedLeafTree, k: int) -> tuple[Graph, list[str]]:
    """Graph among the kept leaves of ``t`` for ``k <= 3`` plus their labels."""
    tree = t.tree
    internal = tree.internal_nodes()
    idx = {v: i for i, v in enumerate(internal)}
    names = [tree.leaf_label[t.leaf_child(v)] for v in internal]
    edges = []
    if k == 3:
        for v in internal:
            p = tree.parent[v]
            if p is not None:
                edges.append((idx[p], idx[v]))
    return Graph.from_edges(len(internal), edges), names


def embed_leaf_power(raw: LeafTree, k: int) -> tuple[Graph, LEmbedding]:
    """L-embedding of the k-leaf power of ``raw`` for ``1 <= k <= 4``.

    Vertex ids follow sorted leaf labels, as in :func:`graph_from_leaf_tree`.
    """
    if not 1 <= k <= 4:
        raise InputError("leaf-power embeddings are available for k = 1..4")
    g = graph_from_leaf_tree(raw, k)
    t = simplify_leaf_tree(raw)
    if k == 4:
        by_name = _embed_simplified(t)
    else:
        core, names = _square_of_internal_tree(t, k)
        e = embed_distance_hereditary(core)
        by_name = {names[v]: s for v, s in e.items()}
    for d in t.dummies:
        by_name.pop(d, None)

    vid = {raw.leaf_label[leaf]: i for i, leaf in enumerate(raw.sorted_leaves())}
    e = normalized({vid[name]: s for name, s in by_name.items()})
    add = add_false_twin if k == 1 else add_true_twin
    for keep in sorted(t.removed_twins):
        for name in t.removed_twins[keep]:
            e = add(e, vid[keep], vid[name])
    return g, e


def embed_4leaf(raw: LeafTree) -> tuple[Graph, LEmbedding]:
    """L-embedding of the 4-leaf power of ``raw``."""
    return embed_leaf_power(raw, 4)
