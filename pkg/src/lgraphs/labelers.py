"""Constructive non-jumping labelings for specific graph families."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

import networkx as nx

from .errors import ConvexityError, InputError, NotOuterplanarError
from .graph import Graph, Labeling, LeafTree, graph_from_leaf_tree


@dataclass(frozen=True)
class IntervalSet:
    """Closed intervals ``[a, b]`` with ``a < b``, one per vertex ``0..n-1``."""

    intervals: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self) -> None:
        ivs = tuple((Fraction(a), Fraction(b)) for a, b in self.intervals)
        for v, (a, b) in enumerate(ivs):
            if not a < b:
                raise InputError(f"interval of vertex {v} has a >= b: [{a}, {b}]")
        object.__setattr__(self, "intervals", ivs)

    @property
    def n(self) -> int:
        return len(self.intervals)

    def graph(self) -> Graph:
        """Intersection graph: two closed intervals meet when neither ends before the other starts."""
        order = sorted(range(self.n), key=lambda v: self.intervals[v])
        edges = set()
        # sweep by left endpoint; active intervals are those still open
        active: list[int] = []
        for v in order:
            a, _ = self.intervals[v]
            active = [u for u in active if self.intervals[u][1] >= a]
            for u in active:
                edges.add((u, v) if u < v else (v, u))
            active.append(v)
        return Graph(self.n, frozenset(edges))


def label_interval(iv: IntervalSet) -> Labeling:
    """Order by left endpoint, then right endpoint, then vertex id."""
    return Labeling(tuple(sorted(range(iv.n), key=lambda v: (iv.intervals[v], v))))


@dataclass(frozen=True)
class ConvexBipartite:
    """Bipartite graph with a blue ranking ``rank: blue -> 1..|B|``.

    ``red_neighbors`` maps each red vertex to its blue neighbours. Red and
    blue vertices together must be exactly ``0..n-1``.
    """

    rank: Mapping[int, int]
    red_neighbors: Mapping[int, frozenset[int]]
    _n: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        rank = dict(self.rank)
        reds = {r: frozenset(nb) for r, nb in self.red_neighbors.items()}
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "red_neighbors", reds)
        if set(rank) & set(reds):
            raise InputError("a vertex cannot be both red and blue")
        n = len(rank) + len(reds)
        if set(rank) | set(reds) != set(range(n)):
            raise InputError("red and blue vertices must cover 0..n-1")
        if sorted(rank.values()) != list(range(1, len(rank) + 1)):
            raise InputError("blue ranks must be a bijection onto 1..|B|")
        for r, nb in reds.items():
            if not nb <= set(rank):
                raise InputError(f"red vertex {r} has a non-blue neighbour")
        object.__setattr__(self, "_n", n)

    @property
    def n(self) -> int:
        return self._n

    def graph(self) -> Graph:
        return Graph.from_edges(self.n, [(r, b) for r, nb in self.red_neighbors.items() for b in nb])

    def convexity_gap(self) -> tuple[int, int] | None:
        """First ``(red, blue)`` pair where ``blue`` sits inside red's window but is not a neighbour."""
        by_rank = {f: b for b, f in self.rank.items()}
        for r in sorted(self.red_neighbors):
            nb = self.red_neighbors[r]
            if not nb:
                continue
            ranks = [self.rank[b] for b in nb]
            for f in range(min(ranks), max(ranks) + 1):
                if by_rank[f] not in nb:
                    return r, by_rank[f]
        return None


def label_convex_bipartite(cb: ConvexBipartite) -> Labeling:
    """Reds by decreasing smallest neighbour rank, then blues by rank.

    Reds without neighbours come first. Ties go to the smaller vertex id.
    """
    gap = cb.convexity_gap()
    if gap is not None:
        raise ConvexityError(*gap)
    inf = float("inf")

    def start(r: int) -> float:
        nb = cb.red_neighbors[r]
        return min(cb.rank[b] for b in nb) if nb else inf

    reds = sorted(cb.red_neighbors, key=lambda r: (-start(r), r))
    blues = sorted(cb.rank, key=lambda b: cb.rank[b])
    return Labeling(tuple(reds + blues))


def _block_cycle(vertices: Sequence[int], edges: Sequence[tuple[int, int]]) -> list[int]:
    """Hamiltonian outer cycle of a biconnected outerplanar block.

    Peels degree-2 vertices (joining their neighbours), then reinserts them
    in reverse; each must land between two consecutive cycle vertices.
    """
    if len(vertices) == 2:
        return list(vertices)
    adj: dict[int, set[int]] = {v: set() for v in vertices}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    low = [v for v in adj if len(adj[v]) == 2]
    removed: list[tuple[int, int, int]] = []
    alive = len(adj)
    while alive > 2:
        while low and (low[-1] not in adj or len(adj[low[-1]]) != 2):
            low.pop()
        if not low:
            raise NotOuterplanarError("a block has no vertex of degree 2")
        v = low.pop()
        a, b = sorted(adj.pop(v))
        adj[a].discard(v)
        adj[b].discard(v)
        adj[a].add(b)
        adj[b].add(a)
        alive -= 1
        removed.append((v, a, b))
        for u in (a, b):
            if len(adj[u]) == 2:
                low.append(u)
    a, b = list(adj)
    nxt = {a: b, b: a}
    for v, a, b in reversed(removed):
        if nxt[a] == b:
            nxt[a], nxt[v] = v, b
        elif nxt[b] == a:
            nxt[b], nxt[v] = v, a
        else:
            raise NotOuterplanarError(f"vertex {v} cannot be placed on the outer cycle")
    start = min(vertices)
    cyc = [start]
    while nxt[cyc[-1]] != start:
        cyc.append(nxt[cyc[-1]])
    if cyc[-1] < cyc[1]:
        cyc[1:] = cyc[:0:-1]
    return cyc


def interleaving_pairs(g: Graph, lab: Labeling, limit: int = 1) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Up to ``limit`` edge pairs whose endpoints alternate along the order."""
    pos = lab.position
    spans = sorted((min(pos(u), pos(v)), max(pos(u), pos(v))) for u, v in g.edges)
    out = []
    for x in range(len(spans)):
        i, k = spans[x]
        for y in range(x + 1, len(spans)):
            j, l = spans[y]
            if j >= k:
                break
            if i < j < k < l:
                out.append(((lab[i], lab[k]), (lab[j], lab[l])))
                if len(out) >= limit:
                    return out
    return out


def label_outerplanar(g: Graph) -> Labeling:
    """One-page spine order: no two edges have interleaved endpoints.

    Each block is walked along its outer cycle, and the blocks hanging
    off a cut vertex are spliced in right after that vertex.
    """
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges)
    blocks_at: dict[int, list[int]] = {v: [] for v in range(g.n)}
    cycles: list[list[int]] = []
    for comp in nx.biconnected_components(nxg):
        verts = sorted(comp)
        sub = [e for e in nxg.subgraph(verts).edges()]
        cycles.append(_block_cycle(verts, sub))
        for v in verts:
            blocks_at[v].append(len(cycles) - 1)

    seen_block = [False] * len(cycles)
    placed = [False] * g.n
    order: list[int] = []

    def visit(root: int) -> None:
        # explicit stack of pending vertex lists keeps deep block trees off the C stack
        placed[root] = True
        stack = [iter([root])]
        while stack:
            v = next(stack[-1], None)
            if v is None:
                stack.pop()
                continue
            order.append(v)
            tail = []
            for b in blocks_at[v]:
                if seen_block[b]:
                    continue
                seen_block[b] = True
                cyc = cycles[b]
                at = cyc.index(v)
                for u in cyc[at + 1:] + cyc[:at]:
                    placed[u] = True
                    tail.append(u)
            stack.append(iter(tail))

    for v in range(g.n):
        if not placed[v]:
            visit(v)
    lab = Labeling(tuple(order))
    bad = interleaving_pairs(g, lab)
    if bad:
        raise NotOuterplanarError(f"edges {bad[0][0]} and {bad[0][1]} interleave")
    return lab


def _heights(t: LeafTree) -> list[int]:
    h = [0] * t.size
    for v in sorted(range(t.size), key=t.depth, reverse=True):
        p = t.parent[v]
        if p is not None:
            h[p] = max(h[p], h[v] + 1)
    return h


def label_3leaf(t: LeafTree) -> tuple[Graph, Labeling]:
    """3-leaf power of ``t`` with the leaf order of a shallow-first DFS.

    Children are visited by increasing subtree height, ties in the tree's
    own child order.
    """
    if t.is_leaf(t.root):
        raise InputError("root must be an internal node")
    g = graph_from_leaf_tree(t, 3)
    vid = {leaf: i for i, leaf in enumerate(t.sorted_leaves())}
    h = _heights(t)
    order: list[int] = []
    stack = [t.root]
    while stack:
        v = stack.pop()
        if t.is_leaf(v):
            order.append(vid[v])
            continue
        kids = sorted(enumerate(t.children(v)), key=lambda ic: (h[ic[1]], ic[0]))
        stack.extend(c for _, c in reversed(kids))
    return g, Labeling(tuple(order))
