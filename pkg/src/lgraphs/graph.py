"""Core graph, labeling and leaf-tree types.

Vertices are dense integer ids ``0..n-1``. Human-readable names are kept
out of these types and only attached at the I/O boundary.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

from .errors import InputError


def name_key(name: str) -> tuple:
    """Natural sort key: numeric names first in numeric order, then the rest."""
    return (0, int(name), "") if name.isdigit() else (1, 0, name)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``edges`` holds normalized pairs ``(u, v)`` with ``u < v``.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    _adj: tuple[frozenset[int], ...] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InputError("vertex count must be non-negative")
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for e in self.edges:
            u, v = e
            if u == v:
                raise InputError(f"self-loop at {u}")
            if not (0 <= u < v < self.n):
                raise InputError(f"edge {e} is not normalized or out of range")
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "_adj", tuple(frozenset(s) for s in adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph, normalizing pair order. Duplicate edges are rejected."""
        norm: set[tuple[int, int]] = set()
        for u, v in edges:
            if u == v:
                raise InputError(f"self-loop at {u}")
            e = (u, v) if u < v else (v, u)
            if e in norm:
                raise InputError(f"duplicate edge {e}")
            norm.add(e)
        return cls(n, frozenset(norm))

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, frozenset(combinations(range(n), 2)))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls(n, frozenset((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        if n < 3:
            raise InputError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def induced_subgraph(self, vertices: Sequence[int]) -> tuple[Graph, list[int]]:
        """Subgraph induced on ``vertices``, relabelled ``0..k-1`` in the given order.

        Returns the subgraph and the list mapping new ids back to old ids.
        """
        index = {v: i for i, v in enumerate(vertices)}
        sub = set()
        for v in vertices:
            for u in self._adj[v]:
                if u in index and index[v] < index[u]:
                    sub.add((index[v], index[u]))
        return Graph(len(index), frozenset(sub)), list(vertices)

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [], [s]
            while stack:
                v = stack.pop()
                comp.append(v)
                for u in self._adj[v]:
                    if not seen[u]:
                        seen[u] = True
                        stack.append(u)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def adjacency_bytes(self) -> bytes:
        """Row-major ``n*n`` 0/1 adjacency matrix, for the compiled kernels."""
        buf = bytearray(self.n * self.n)
        for u, v in self.edges:
            buf[u * self.n + v] = 1
            buf[v * self.n + u] = 1
        return bytes(buf)


@dataclass(frozen=True)
class Labeling:
    """A vertex order ``v_1..v_n`` stored 0-based: ``order[p]`` is the vertex at position ``p``."""

    order: tuple[int, ...]
    _pos: tuple[int, ...] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        order = tuple(self.order)
        object.__setattr__(self, "order", order)
        n = len(order)
        pos = [-1] * n
        for p, v in enumerate(order):
            if not (0 <= v < n) or pos[v] != -1:
                raise InputError(f"labeling {order} is not a permutation of 0..{n - 1}")
            pos[v] = p
        object.__setattr__(self, "_pos", tuple(pos))

    @classmethod
    def identity(cls, n: int) -> Labeling:
        return cls(tuple(range(n)))

    def __len__(self) -> int:
        return len(self.order)

    def __iter__(self) -> Iterator[int]:
        return iter(self.order)

    def __getitem__(self, p: int) -> int:
        return self.order[p]

    def position(self, v: int) -> int:
        return self._pos[v]

    def check_for(self, g: Graph) -> None:
        if len(self.order) != g.n:
            raise InputError(f"labeling has {len(self.order)} entries, graph has {g.n} vertices")


class JumpWitness(NamedTuple):
    """Positions ``i<j<k<l`` certifying that ``v_j`` is a jumping vertex."""

    i: int
    j: int
    k: int
    l: int

    def one_based(self) -> tuple[int, int, int, int]:
        return (self.i + 1, self.j + 1, self.k + 1, self.l + 1)


def is_jumping_witness(g: Graph, lab: Labeling, w: JumpWitness) -> bool:
    i, j, k, l = w
    if not (0 <= i < j < k < l < len(lab)):
        raise InputError(f"witness {tuple(w)} is not strictly increasing and in range")
    v = lab.order
    return g.has_edge(v[i], v[k]) and g.has_edge(v[j], v[l]) and not g.has_edge(v[j], v[k])


class Kinship(enum.Enum):
    """Kinship of leaf ``u`` relative to leaf ``v``."""

    SIBLING = "sibling"
    COUSIN = "cousin"
    UNCLE_OF = "uncle-of"  # u is an uncle of v
    NEPHEW_OF = "nephew-of"  # v is an uncle of u
    P_UNCLE_OF = "p-uncle-of"  # u is a p-uncle of v
    P_NEPHEW_OF = "p-nephew-of"  # v is a p-uncle of u
    UNRELATED = "unrelated"


@dataclass(frozen=True)
class LeafTree:
    """Rooted tree given by a parent array; leaves carry external names.

    ``parent[root]`` is ``None``. ``leaf_label`` must be defined on exactly
    the childless nodes and be injective.
    """

    parent: tuple[int | None, ...]
    leaf_label: Mapping[int, str]
    _children: tuple[tuple[int, ...], ...] = field(
        init=False, repr=False, compare=False, hash=False
    )
    _depth: tuple[int, ...] = field(init=False, repr=False, compare=False, hash=False)
    root: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        parent = tuple(self.parent)
        object.__setattr__(self, "parent", parent)
        object.__setattr__(self, "leaf_label", dict(self.leaf_label))
        n = len(parent)
        if n == 0:
            raise InputError("tree has no nodes")
        roots = [v for v, p in enumerate(parent) if p is None]
        if len(roots) != 1:
            raise InputError(f"tree must have exactly one root, found {len(roots)}")
        children: list[list[int]] = [[] for _ in range(n)]
        for v, p in enumerate(parent):
            if p is not None:
                if not (0 <= p < n) or p == v:
                    raise InputError(f"node {v} has invalid parent {p}")
                children[p].append(v)
        root = roots[0]
        depth = [-1] * n
        depth[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for c in children[v]:
                depth[c] = depth[v] + 1
                stack.append(c)
        if min(depth) < 0:
            raise InputError("tree is not connected to its root (cycle or orphan)")
        leaves = {v for v in range(n) if not children[v]}
        if set(self.leaf_label) != leaves:
            raise InputError("leaf labels must be defined on exactly the leaves")
        if len(set(self.leaf_label.values())) != len(leaves):
            raise InputError("leaf labels must be distinct")
        object.__setattr__(self, "_children", tuple(tuple(c) for c in children))
        object.__setattr__(self, "_depth", tuple(depth))
        object.__setattr__(self, "root", root)

    @classmethod
    def from_children(cls, children: Mapping[int, Sequence[int]], n: int, labels: Mapping[int, str]) -> LeafTree:
        parent: list[int | None] = [None] * n
        for p, cs in children.items():
            for c in cs:
                parent[c] = p
        return cls(tuple(parent), labels)

    @property
    def size(self) -> int:
        return len(self.parent)

    def children(self, v: int) -> tuple[int, ...]:
        return self._children[v]

    def depth(self, v: int) -> int:
        return self._depth[v]

    def is_leaf(self, v: int) -> bool:
        return not self._children[v]

    def leaves(self) -> list[int]:
        return [v for v in range(self.size) if not self._children[v]]

    def internal_nodes(self) -> list[int]:
        return [v for v in range(self.size) if self._children[v]]

    def sorted_leaves(self) -> list[int]:
        """Leaves ordered by label; position in this list is the graph vertex id."""
        return sorted(self.leaves(), key=lambda v: name_key(self.leaf_label[v]))

    def ancestor(self, v: int, up: int) -> int | None:
        for _ in range(up):
            p = self.parent[v]
            if p is None:
                return None
            v = p
        return v

    def lca(self, u: int, v: int) -> int:
        du, dv = self._depth[u], self._depth[v]
        while du > dv:
            u = self.parent[u]  # type: ignore[assignment]
            du -= 1
        while dv > du:
            v = self.parent[v]  # type: ignore[assignment]
            dv -= 1
        while u != v:
            u = self.parent[u]  # type: ignore[assignment]
            v = self.parent[v]  # type: ignore[assignment]
        return u

    def distance(self, u: int, v: int) -> int:
        a = self.lca(u, v)
        return self._depth[u] + self._depth[v] - 2 * self._depth[a]

    def height(self, v: int) -> int:
        """Longest downward path (edge count) from ``v`` to a leaf of its subtree."""
        best = 0
        stack = [(v, 0)]
        while stack:
            x, d = stack.pop()
            best = max(best, d)
            stack.extend((c, d + 1) for c in self._children[x])
        return best


def graph_from_leaf_tree(t: LeafTree, k: int) -> Graph:
    """The k-leaf power of ``t``: leaves adjacent iff their tree distance is at most ``k``."""
    if k < 1:
        raise InputError("k must be at least 1")
    leaves = t.sorted_leaves()
    edges = set()
    for a, b in combinations(range(len(leaves)), 2):
        if t.distance(leaves[a], leaves[b]) <= k:
            edges.add((a, b))
    return Graph(len(leaves), frozenset(edges))


def kinship(t: LeafTree, u: int, v: int) -> Kinship:
    """Classify leaf ``u`` against leaf ``v`` by comparing their ancestors."""
    if u == v or not (t.is_leaf(u) and t.is_leaf(v)):
        raise InputError("kinship is defined for two distinct leaves")
    up1, vp1 = t.ancestor(u, 1), t.ancestor(v, 1)
    up2, vp2 = t.ancestor(u, 2), t.ancestor(v, 2)
    up3, vp3 = t.ancestor(u, 3), t.ancestor(v, 3)
    if up1 == vp1:
        return Kinship.SIBLING
    if up2 is not None and up2 == vp2:
        return Kinship.COUSIN
    if vp2 is not None and up1 == vp2:
        return Kinship.UNCLE_OF
    if up2 is not None and vp1 == up2:
        return Kinship.NEPHEW_OF
    if vp3 is not None and up1 == vp3:
        return Kinship.P_UNCLE_OF
    if up3 is not None and vp1 == up3:
        return Kinship.P_NEPHEW_OF
    return Kinship.UNRELATED
