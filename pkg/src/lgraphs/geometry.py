"""L-segment geometry on the integer grid.

Coordinates follow a top-left origin with ``y`` growing downward. An
L-segment with corner ``(x, y)`` has a horizontal arm from ``(x, y)`` to
``(x + w, y)`` and a vertical arm from ``(x, y - h)`` up to the corner.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

from . import _core
from .errors import InputError
from .graph import Graph


@dataclass(frozen=True, order=True)
class LSegment:
    x: int
    y: int
    w: int
    h: int

    def __post_init__(self) -> None:
        if self.w < 1 or self.h < 1:
            raise InputError(f"arm lengths must be positive, got w={self.w} h={self.h}")

    @property
    def corner(self) -> tuple[int, int]:
        return (self.x, self.y)

    @property
    def right(self) -> int:
        return self.x + self.w

    @property
    def top(self) -> int:
        return self.y - self.h

    def translated(self, dx: int, dy: int) -> LSegment:
        return LSegment(self.x + dx, self.y + dy, self.w, self.h)


class CrossingKind(enum.Enum):
    NONE = "none"
    PROPER = "proper"
    CORNER_TOUCH = "corner-touch"
    OVERLAP = "overlap"


class LEmbedding(Mapping[int, LSegment]):
    """Immutable map from vertex id to its L-segment."""

    __slots__ = ("_segs",)

    def __init__(self, segments: Mapping[int, LSegment] | Iterable[tuple[int, LSegment]] = ()) -> None:
        segs = dict(segments)
        for v, s in segs.items():
            if s.x < 0 or s.top < 0:
                raise InputError(f"segment of {v} leaves the non-negative quadrant: {s}")
        self._segs = MappingProxyType(dict(sorted(segs.items())))

    def __getitem__(self, v: int) -> LSegment:
        return self._segs[v]

    def __iter__(self) -> Iterator[int]:
        return iter(self._segs)

    def __len__(self) -> int:
        return len(self._segs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LEmbedding):
            return dict(self._segs) == dict(other._segs)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._segs.items()))

    def __repr__(self) -> str:
        return f"LEmbedding({dict(self._segs)!r})"

    def replace(self, updates: Mapping[int, LSegment]) -> LEmbedding:
        d = dict(self._segs)
        d.update(updates)
        return LEmbedding(d)

    def without(self, vertices: Iterable[int]) -> LEmbedding:
        drop = set(vertices)
        return LEmbedding({v: s for v, s in self._segs.items() if v not in drop})

    def translated(self, dx: int, dy: int) -> LEmbedding:
        return LEmbedding({v: s.translated(dx, dy) for v, s in self._segs.items()})

    def bounding_box(self) -> tuple[int, int, int, int]:
        """``(xmin, ymin, xmax, ymax)`` over all arm points."""
        if not self._segs:
            return (0, 0, 0, 0)
        ss = self._segs.values()
        return (
            min(s.x for s in ss),
            min(s.top for s in ss),
            max(s.right for s in ss),
            max(s.y for s in ss),
        )


def normalized(segs: Mapping[int, LSegment], margin: int = 0) -> LEmbedding:
    """Translate raw segments so the drawing starts at ``(margin, margin)``."""
    if not segs:
        return LEmbedding()
    dx = margin - min(s.x for s in segs.values())
    dy = margin - min(s.top for s in segs.values())
    return LEmbedding({v: s.translated(dx, dy) for v, s in segs.items()})


def _ranges_meet(a0: int, a1: int, b0: int, b1: int) -> bool:
    return a0 <= b1 and b0 <= a1


def crossing(a: LSegment, b: LSegment) -> CrossingKind:
    """Classify how two L-segments meet.

    Parallel arms sharing any point are an overlap. Otherwise each
    horizontal-vertical arm pair is tested; a single hit strictly inside
    both arms is proper, any hit at an arm endpoint is a corner touch.
    """
    if a.y == b.y and _ranges_meet(a.x, a.right, b.x, b.right):
        return CrossingKind.OVERLAP
    if a.x == b.x and _ranges_meet(a.top, a.y, b.top, b.y):
        return CrossingKind.OVERLAP
    hits = []
    for hz, vt in ((a, b), (b, a)):
        if hz.x <= vt.x <= hz.right and vt.top <= hz.y <= vt.y:
            hits.append(hz.x < vt.x < hz.right and vt.top < hz.y < vt.y)
    if not hits:
        return CrossingKind.NONE
    if hits == [True]:
        return CrossingKind.PROPER
    return CrossingKind.CORNER_TOUCH


class Violation(NamedTuple):
    u: int
    v: int
    kind: CrossingKind
    adjacent: bool

    def describe(self) -> str:
        if self.kind is CrossingKind.NONE:
            return f"({self.u},{self.v}) adjacent but segments do not cross"
        if self.kind is CrossingKind.PROPER:
            return f"({self.u},{self.v}) cross but are not adjacent"
        return f"({self.u},{self.v}) {self.kind.value}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def _check_cover(g: Graph, e: Mapping[int, LSegment]) -> None:
    if set(e) != set(range(g.n)):
        raise InputError(
            f"embedding covers vertices {sorted(e)[:10]}..., graph has 0..{g.n - 1}"
        )


def validate_embedding_naive(g: Graph, e: Mapping[int, LSegment]) -> ValidationReport:
    """Check every vertex pair against the single-crossing convention. O(n^2)."""
    _check_cover(g, e)
    bad = []
    for u, v in combinations(range(g.n), 2):
        kind = crossing(e[u], e[v])
        adj = g.has_edge(u, v)
        if kind is CrossingKind.PROPER:
            if not adj:
                bad.append(Violation(u, v, kind, adj))
        elif kind is CrossingKind.NONE:
            if adj:
                bad.append(Violation(u, v, kind, adj))
        else:
            bad.append(Violation(u, v, kind, adj))
    return ValidationReport(tuple(bad))


def _collinear_overlaps(groups: dict[int, list[tuple[int, int, int]]]) -> set[tuple[int, int]]:
    """Pairs of parallel arms on one line whose closed spans share a point."""
    out = set()
    for arms in groups.values():
        arms.sort()
        active: list[tuple[int, int]] = []  # (hi, owner)
        for lo, hi, owner in arms:
            active = [a for a in active if a[0] >= lo]
            for _, other in active:
                out.add((other, owner) if other < owner else (owner, other))
            active.append((hi, owner))
    return out


def validate_embedding(g: Graph, e: Mapping[int, LSegment]) -> ValidationReport:
    """Sweep-line version of :func:`validate_embedding_naive`; same report.

    Runs in ``O((n + k) log n)`` for ``k`` arm intersections, plus the
    collinear-overlap scan.
    """
    _check_cover(g, e)
    rows: dict[int, list[tuple[int, int, int]]] = {}
    cols: dict[int, list[tuple[int, int, int]]] = {}
    for v, s in e.items():
        rows.setdefault(s.y, []).append((s.x, s.right, v))
        cols.setdefault(s.x, []).append((s.top, s.y, v))
    overlap = _collinear_overlaps(rows) | _collinear_overlaps(cols)
    hs, vs = arm_tuples(e)
    hits: dict[tuple[int, int], list[bool]] = {}
    for _, _, kind, a, b, proper in _core.sweep(hs, vs, -1):
        if kind == 1:
            hits.setdefault((a, b) if a < b else (b, a), []).append(bool(proper))
    bad = []
    for pair in sorted(set(hits) | overlap | set(g.edges)):
        u, v = pair
        adj = g.has_edge(u, v)
        if pair in overlap:
            kind = CrossingKind.OVERLAP
        elif pair not in hits:
            kind = CrossingKind.NONE
        elif hits[pair] == [True]:
            kind = CrossingKind.PROPER
        else:
            kind = CrossingKind.CORNER_TOUCH
        if kind is CrossingKind.PROPER and adj or kind is CrossingKind.NONE and not adj:
            continue
        bad.append(Violation(u, v, kind, adj))
    return ValidationReport(tuple(bad))


def intersection_graph(e: Mapping[int, LSegment]) -> Graph:
    """Graph on ``e``'s vertices whose edges are the properly crossing pairs.

    Vertex ids must be ``0..len(e)-1``. Touches and overlaps are not edges.
    """
    n = len(e)
    if set(e) != set(range(n)):
        raise InputError("intersection_graph needs vertex ids 0..n-1")
    hs, vs = arm_tuples(e)
    edges = set()
    for ev in _core.sweep(hs, vs, -1):
        if ev[2] == 1 and ev[5]:
            a, b = ev[3], ev[4]
            edges.add((a, b) if a < b else (b, a))
    return Graph(n, frozenset(edges))


class Arm(NamedTuple):
    """One axis-parallel arm: ``fixed`` is y for horizontals, x for verticals; ``lo..hi`` the span."""

    owner: int
    horizontal: bool
    fixed: int
    lo: int
    hi: int


class SweepEvent(NamedTuple):
    x: int
    y: int
    corner: bool
    h_owner: int
    v_owner: int
    proper: bool

    @property
    def pair(self) -> tuple[int, int]:
        a, b = self.h_owner, self.v_owner
        return (a, b) if a < b else (b, a)


def arms_of(e: Mapping[int, LSegment]) -> list[Arm]:
    out = []
    for v, s in e.items():
        out.append(Arm(v, True, s.y, s.x, s.right))
        out.append(Arm(v, False, s.x, s.top, s.y))
    return out


def arm_tuples(e: Mapping[int, LSegment]):
    """Kernel input: horizontals as ``(y, x1, x2, owner)``, verticals as ``(x, y1, y2, owner)``."""
    hs = [(s.y, s.x, s.right, v) for v, s in e.items()]
    vs = [(s.x, s.top, s.y, v) for v, s in e.items()]
    return hs, vs


def sweep_intersections(arms: Sequence[Arm], limit: int | None = None) -> list[SweepEvent]:
    """Horizontal x vertical arm intersections in sweep order.

    Events are ordered by x, then y, then corner-before-cross, then owner
    ids. With ``limit`` set, enumeration stops after ``limit + 1`` events,
    which is enough for a caller to detect that the limit was exceeded.
    """
    if limit is not None and limit < 0:
        raise InputError("limit must be non-negative")
    hs = [(a.fixed, a.lo, a.hi, a.owner) for a in arms if a.horizontal]
    vs = [(a.fixed, a.lo, a.hi, a.owner) for a in arms if not a.horizontal]
    cap = -1 if limit is None else limit + 1
    return [
        SweepEvent(x, y, kind == 0, ho, vo, bool(pr))
        for x, y, kind, ho, vo, pr in _core.sweep(hs, vs, cap)
    ]


def naive_arm_intersections(arms: Sequence[Arm]) -> list[SweepEvent]:
    """Brute-force oracle for :func:`sweep_intersections`: test every h/v arm pair."""
    hs = [a for a in arms if a.horizontal]
    vs = [a for a in arms if not a.horizontal]
    out = []
    for hz in hs:
        for vt in vs:
            if hz.lo <= vt.fixed <= hz.hi and vt.lo <= hz.fixed <= vt.hi:
                corner = hz.owner == vt.owner
                proper = (not corner) and hz.lo < vt.fixed < hz.hi and vt.lo < hz.fixed < vt.hi
                out.append(SweepEvent(vt.fixed, hz.fixed, corner, hz.owner, vt.owner, proper))
    out.sort(key=lambda ev: (ev.x, ev.y, not ev.corner, ev.h_owner, ev.v_owner))
    return out


class Direction(enum.Enum):
    RIGHT = "right"
    LEFT = "left"
    UP = "up"
    DOWN = "down"


def _expand_raw(segs: dict[int, LSegment], ref: LSegment, d: Direction) -> dict[int, LSegment]:
    out = {}
    rx, ry = ref.x, ref.y
    for v, s in segs.items():
        x, y, w, h = s.x, s.y, s.w, s.h
        if d is Direction.RIGHT:
            # unit slice just right of the reference corner
            if x > rx:
                x += 1
            elif x + w > rx:
                w += 1
        elif d is Direction.LEFT:
            if x < rx:
                x -= 1
                if x + 1 + w >= rx:
                    w += 1
        elif d is Direction.UP:
            if y < ry:
                y -= 1
            elif y - h < ry:
                h += 1
        else:
            if y > ry:
                y += 1
                if y - 1 - h <= ry:
                    h += 1
        out[v] = LSegment(x, y, w, h)
    return out


def expand(e: LEmbedding, ref: int, direction: Direction | str) -> LEmbedding:
    """Open a one-unit empty slice next to ``ref``'s corner.

    RIGHT shifts every corner strictly right of ``ref`` one unit right and
    stretches each horizontal arm that spans the slice (including ``ref``'s
    own). LEFT, UP and DOWN are the mirror images. Crossings, touches and
    overlaps are all preserved and none are created. The result is
    translated back into the non-negative quadrant when needed.
    """
    d = Direction(direction)
    if ref not in e:
        raise InputError(f"reference vertex {ref} not in embedding")
    raw = _expand_raw(dict(e), e[ref], d)
    if min(s.x for s in raw.values()) < 0 or min(s.top for s in raw.values()) < 0:
        dx = max(0, -min(s.x for s in raw.values()))
        dy = max(0, -min(s.top for s in raw.values()))
        raw = {v: s.translated(dx, dy) for v, s in raw.items()}
    return LEmbedding(raw)
