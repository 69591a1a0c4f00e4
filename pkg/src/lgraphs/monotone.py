"""Monotone L-embeddings and non-jumping labelings.

A labeling ``v_1..v_n`` is jumping if some ``i<j<k<l`` has edges
``v_i v_k`` and ``v_j v_l`` but no edge ``v_j v_k``. Non-jumping labelings
are exactly the orders in which a graph can be drawn with L corners on a
diagonal line.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from typing import Mapping, NamedTuple

from . import _core
from .errors import InputError, NotMonotoneError
from .geometry import LEmbedding, LSegment
from .graph import Graph, JumpWitness, Labeling

DEFAULT_BUDGET = 10_000_000
UNBUDGETED_MAX_N = 12

JUMPING8_NAMES = ("III_l", "III_r", "II_l^t", "II_l^b", "II_r^t", "II_r^b", "I_in", "I_out")
JUMPING8 = Graph.from_edges(
    8,
    [
        (0, 2), (0, 3), (1, 4), (1, 5), (2, 4), (3, 5),
        (6, 0), (6, 1), (6, 2), (6, 3), (6, 4), (6, 5),
        (7, 2), (7, 3), (7, 4), (7, 5),
    ],
)


def _adjacency(g: Graph) -> list[frozenset[int]]:
    return [g.neighbors(v) for v in range(g.n)]


def _staircase(g: Graph, lab: Labeling) -> list[tuple[int, int, int, int]]:
    """``(v, j, w, h)`` per vertex: 1-based position and arm lengths of its monotone L."""
    lab.check_for(g)
    pos = [0] * g.n
    for p, v in enumerate(lab.order):
        pos[v] = p + 1
    out = []
    for v in lab.order:
        j = pos[v]
        nb = [pos[u] for u in g.neighbors(v)]
        lo = min(nb, default=j)
        hi = max(nb, default=j)
        h = 2 * (j - lo) + 1 if lo < j else 1
        w = 2 * (hi - j) + 1 if hi > j else 1
        out.append((v, j, w, h))
    return out


def build_monotone(g: Graph, lab: Labeling) -> LEmbedding:
    """Draw ``g`` with the j-th labeled vertex cornered at ``(2j, 2j)``.

    The vertical arm reaches just above the earliest earlier neighbour's
    row and the horizontal arm just past the latest later neighbour's
    column. The drawing is a valid embedding iff ``lab`` is non-jumping.
    """
    return LEmbedding({v: LSegment(2 * j, 2 * j, w, h) for v, j, w, h in _staircase(g, lab)})


def labeling_from_embedding(e: Mapping[int, LSegment]) -> Labeling:
    """Order vertices along the line through their corners.

    Sorts by corner x, or by y when the line is vertical.
    """
    if set(e) != set(range(len(e))):
        raise InputError("embedding vertex ids must be 0..n-1")
    pts = [(v, s.x, s.y) for v, s in e.items()]
    if len(pts) >= 2:
        _, x0, y0 = pts[0]
        other = next(((x, y) for _, x, y in pts[1:] if (x, y) != (x0, y0)), None)
        if other is None:
            raise NotMonotoneError("all corners coincide")
        dx, dy = other[0] - x0, other[1] - y0
        for v, x, y in pts:
            if dx * (y - y0) != dy * (x - x0):
                raise NotMonotoneError(f"corner of vertex {v} at ({x},{y}) is off the corner line")
        if len({(x, y) for _, x, y in pts}) != len(pts):
            raise NotMonotoneError("two vertices share a corner point")
        if dx == 0:
            pts.sort(key=lambda t: t[2])
        else:
            pts.sort(key=lambda t: t[1])
    return Labeling(tuple(v for v, _, _ in pts))


def is_nonjumping_naive(g: Graph, lab: Labeling) -> JumpWitness | None:
    """Lexicographically first jumping witness, or None if ``lab`` is non-jumping."""
    lab.check_for(g)
    w = _core.find_witness(list(lab.order), _adjacency(g))
    return None if w is None else JumpWitness(*w)


def brute_force_witness(g: Graph, lab: Labeling) -> JumpWitness | None:
    """Quartic scan over all position quadruples. Test oracle only."""
    lab.check_for(g)
    o = lab.order
    n = len(o)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if not g.has_edge(o[i], o[k]) or g.has_edge(o[j], o[k]):
                    continue
                for l in range(k + 1, n):
                    if g.has_edge(o[j], o[l]):
                        return JumpWitness(i, j, k, l)
    return None


def is_nonjumping_fast(g: Graph, lab: Labeling) -> bool:
    """Recognize a non-jumping labeling by drawing it and counting crossings.

    The monotone drawing always realizes every edge, so the labeling is
    non-jumping iff the sweep finds exactly one corner per vertex plus one
    crossing per edge, with no crossing between non-adjacent vertices.
    """
    expected = g.m + g.n
    hs = []
    vs = []
    for v, j, w, h in _staircase(g, lab):
        c = 2 * j
        hs.append((c, c, c + w, v))
        vs.append((c, c - h, c, v))
    events = _core.sweep(hs, vs, expected + 1)
    if len(events) != expected:
        return False
    return all(kind == 0 or g.has_edge(a, b) for _, _, kind, a, b, _ in events)


class SearchStatus(enum.Enum):
    FOUND = "found"
    EXHAUSTED = "exhausted"
    BUDGET_EXCEEDED = "budget-exceeded"


_STATUS = {
    _core.FOUND: SearchStatus.FOUND,
    _core.EXHAUSTED: SearchStatus.EXHAUSTED,
    _core.BUDGET: SearchStatus.BUDGET_EXCEEDED,
}


class SearchResult(NamedTuple):
    status: SearchStatus
    labeling: Labeling | None
    nodes: int


def _masks(g: Graph) -> list[int]:
    out = []
    for v in range(g.n):
        m = 0
        for u in g.neighbors(v):
            m |= 1 << u
        out.append(m)
    return out


def _search_branch(args: tuple[int, list[int], int, int]) -> tuple[int, list[int] | None, int]:
    n, masks, budget, first = args
    return _core.search_first(n, masks, budget, first, True)


def find_nonjumping_labeling(
    g: Graph, budget: int | None = None, jobs: int = 1
) -> SearchResult:
    """Lexicographically first non-jumping labeling by pruned depth-first search.

    A prefix is cut as soon as its last vertex ``v`` completes a forced
    witness: some earlier neighbour of ``v`` precedes a non-neighbour of
    ``v`` that still has an unplaced neighbour. ``budget`` caps the number
    of accepted prefixes; with ``jobs > 1`` the search is split by first
    vertex and each branch gets its own budget.
    """
    if budget is None:
        if g.n > UNBUDGETED_MAX_N:
            raise InputError(
                f"refusing to search {g.n} vertices without an explicit budget "
                f"(limit {UNBUDGETED_MAX_N})"
            )
        budget = DEFAULT_BUDGET
    if budget < 0:
        raise InputError("budget must be non-negative")
    if g.n > 64:
        raise InputError("search supports at most 64 vertices")
    masks = _masks(g)
    if jobs <= 1 or g.n <= 1:
        status, order, nodes = _core.search_first(g.n, masks, budget, -1, True)
        lab = Labeling(tuple(order)) if order is not None else None
        return SearchResult(_STATUS[status], lab, nodes)

    tasks = [(g.n, masks, budget, v) for v in range(g.n)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        results = list(pool.map(_search_branch, tasks))
    total = sum(r[2] for r in results)
    # merge in first-vertex order so the lexicographic-first answer wins
    for status, order, _ in results:
        if status == _core.FOUND:
            return SearchResult(SearchStatus.FOUND, Labeling(tuple(order)), total)
        if status == _core.BUDGET:
            return SearchResult(SearchStatus.BUDGET_EXCEEDED, None, total)
    return SearchResult(SearchStatus.EXHAUSTED, None, total)


class Census(NamedTuple):
    checked: int
    nonjumping: int
    first: Labeling | None


def enumerate_all_labelings(g: Graph) -> Census:
    """Check all ``n!`` labelings without pruning. Used to confirm search verdicts."""
    if g.n > 11:
        raise InputError("exhaustive census is limited to 11 vertices")
    checked, good, first = _core.count_all(g.n, _masks(g))
    return Census(checked, good, Labeling(tuple(first)) if first is not None else None)


def prefix_witness(g: Graph, lab: Labeling, length: int) -> JumpWitness | None:
    """Witness inside the subgraph induced by the first ``length`` labeled vertices."""
    prefix = list(lab.order[:length])
    sub, _ = g.induced_subgraph(prefix)
    return is_nonjumping_naive(sub, Labeling.identity(len(prefix)))
