"""Embeddings of distance-hereditary graphs by replaying a pruning sequence."""

from __future__ import annotations

import enum
from typing import NamedTuple

from ..errors import InputError, NotDistanceHereditaryError
from ..geometry import Direction, LEmbedding, LSegment, expand, normalized
from ..graph import Graph

UNIT = LSegment(2, 2, 1, 1)


class StepKind(enum.Enum):
    PENDANT = "pendant"
    TRUE_TWIN = "true-twin"
    FALSE_TWIN = "false-twin"


class PruneStep(NamedTuple):
    kind: StepKind
    removed: int
    anchor: int


def _twin_step(adj: dict[int, set[int]], closed: bool) -> tuple[int, int] | None:
    classes: dict[frozenset[int], list[int]] = {}
    for v in sorted(adj):
        key = frozenset(adj[v] | {v}) if closed else frozenset(adj[v])
        classes.setdefault(key, []).append(v)
    best = None
    for members in classes.values():
        if len(members) >= 2 and (best is None or members[0] < best[0]):
            best = (members[0], members[1])
    return best


def pruning_sequence(g: Graph) -> list[PruneStep]:
    """Peel pendants and twins until a single vertex is left.

    Pendants go first, then true twins, then false twins, each time taking
    the smallest removable id and its smallest partner. When only an edge
    remains it is both a pendant and a true twin; it is recorded with the
    kind of the previous step when that kind applies.
    """
    if g.n == 0:
        return []
    if not g.is_connected():
        raise InputError("pruning needs a connected graph")
    adj = {v: set(g.neighbors(v)) for v in range(g.n)}
    steps: list[PruneStep] = []
    while len(adj) > 1:
        step = None
        if len(adj) == 2:
            a, b = sorted(adj)
            kind = StepKind.TRUE_TWIN if steps and steps[-1].kind is StepKind.TRUE_TWIN else StepKind.PENDANT
            step = PruneStep(kind, a, b)
        if step is None:
            pend = [v for v in sorted(adj) if len(adj[v]) == 1]
            if pend:
                v = pend[0]
                step = PruneStep(StepKind.PENDANT, v, next(iter(adj[v])))
        if step is None:
            pair = _twin_step(adj, closed=True)
            if pair:
                step = PruneStep(StepKind.TRUE_TWIN, *pair)
        if step is None:
            pair = _twin_step(adj, closed=False)
            if pair:
                step = PruneStep(StepKind.FALSE_TWIN, *pair)
        if step is None:
            raise NotDistanceHereditaryError(sorted(adj))
        v = step.removed
        for u in adj.pop(v):
            adj[u].discard(v)
        steps.append(step)
    return steps


def _check_new(e: LEmbedding, anchor: int, new: int) -> None:
    if anchor not in e:
        raise InputError(f"anchor {anchor} is not embedded")
    if new in e:
        raise InputError(f"vertex {new} is already embedded")


def add_pendant(e: LEmbedding, anchor: int, new: int) -> LEmbedding:
    """Add ``new`` crossing only ``anchor``'s horizontal arm."""
    _check_new(e, anchor, new)
    for d in (Direction.RIGHT, Direction.RIGHT, Direction.UP, Direction.DOWN):
        e = expand(e, anchor, d)
    a = e[anchor]
    return e.replace({new: LSegment(a.x + 1, a.y + 1, 1, 2)})


def add_true_twin(e: LEmbedding, anchor: int, new: int) -> LEmbedding:
    """Add ``new`` crossing ``anchor`` and every neighbour of ``anchor``."""
    _check_new(e, anchor, new)
    e = expand(expand(e, anchor, Direction.RIGHT), anchor, Direction.DOWN)
    a = e[anchor]
    assert a.w >= 2, "a right expansion always stretches the anchor's own arm"
    return e.replace({new: LSegment(a.x + 1, a.y + 1, a.w - 1, a.h + 1)})


def add_false_twin(e: LEmbedding, anchor: int, new: int) -> LEmbedding:
    """Add ``new`` crossing exactly the neighbours of ``anchor``."""
    _check_new(e, anchor, new)
    e = expand(expand(e, anchor, Direction.LEFT), anchor, Direction.DOWN)
    a = e[anchor]
    seg = LSegment(a.x - 1, a.y + 1, a.w + 1, a.h + 1)
    if seg.x < 0:
        return LEmbedding(normalized({**dict(e), new: seg}))
    return e.replace({new: seg})


_ADD = {
    StepKind.PENDANT: add_pendant,
    StepKind.TRUE_TWIN: add_true_twin,
    StepKind.FALSE_TWIN: add_false_twin,
}


def replay(start: int, steps: list[PruneStep]):
    """Yield the embedding after each reversed pruning step, starting from one unit L."""
    e = LEmbedding({start: UNIT})
    yield e
    for step in reversed(steps):
        e = _ADD[step.kind](e, step.anchor, step.removed)
        yield e


def _embed_connected(g: Graph) -> LEmbedding:
    steps = pruning_sequence(g)
    start = steps[-1].anchor if steps else 0
    e = None
    for e in replay(start, steps):
        pass
    return e


def juxtapose(parts: list[LEmbedding], gap: int = 2) -> LEmbedding:
    """Place embeddings side by side, left to right, with disjoint bounding boxes."""
    out: dict[int, LSegment] = {}
    x0 = 0
    for part in parts:
        if not len(part):
            continue
        xmin, ymin, xmax, _ = part.bounding_box()
        dx, dy = x0 - xmin, -ymin
        for v, s in part.items():
            out[v] = s.translated(dx, dy)
        x0 += xmax - xmin + gap
    return LEmbedding(out)


def embed_distance_hereditary(g: Graph) -> LEmbedding:
    """L-embedding of a distance-hereditary graph; components sit side by side."""
    parts = []
    for comp in g.components():
        sub, back = g.induced_subgraph(comp)
        e = _embed_connected(sub)
        parts.append(LEmbedding({back[v]: s for v, s in e.items()}))
    return juxtapose(parts)
