"""Pure-Python kernels. Must stay behaviourally identical to ``_ckernels.pyx``."""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from collections import defaultdict
from typing import Collection, Sequence

FOUND, EXHAUSTED, BUDGET = 0, 1, 2


def find_witness(
    order: Sequence[int], adj: Sequence[Collection[int]]
) -> tuple[int, int, int, int] | None:
    """Lexicographically first jumping witness ``(i, j, k, l)`` over positions, or None."""
    n = len(order)
    pos = [0] * n
    for p, v in enumerate(order):
        pos[v] = p
    nb = [sorted(pos[u] for u in adj[order[p]]) for p in range(n)]
    nbset = [set(x) for x in nb]
    maxpos = [x[-1] if x else -1 for x in nb]
    for i in range(n):
        nbi = nb[i]
        if not nbi or nbi[-1] <= i + 1:
            continue
        for j in range(i + 1, n):
            mj = maxpos[j]
            if mj <= j + 1:
                continue
            setj = nbset[j]
            for idx in range(bisect_right(nbi, j), len(nbi)):
                k = nbi[idx]
                if k >= mj:
                    break
                if k not in setj:
                    nbj = nb[j]
                    return (i, j, k, nbj[bisect_right(nbj, k)])
    return None


def search_first(
    n: int, nbmask: Sequence[int], budget: int, first: int = -1, prune: bool = True
) -> tuple[int, list[int] | None, int]:
    """Depth-first search for the lexicographically first non-jumping order.

    ``nbmask[v]`` is the neighbour bitmask of ``v``. With ``first >= 0`` only
    orders starting with that vertex are explored. Returns
    ``(status, order, nodes)`` with status FOUND / EXHAUSTED / BUDGET.
    ``nodes`` counts accepted prefixes.
    """
    order = [0] * n
    full = (1 << n) - 1
    nodes = 0

    def dead(p: int, v: int, placed: int) -> bool:
        # a jumping pattern is forced once v_j misses v_k = v but still has a
        # neighbour outside the prefix while some earlier v_i hits v
        earlier = nbmask[v] & placed
        if not earlier:
            return False
        a = 0
        while not (earlier >> order[a]) & 1:
            a += 1
        outside = full & ~(placed | (1 << v))
        for j in range(a + 1, p):
            u = order[j]
            if not (nbmask[u] >> v) & 1 and nbmask[u] & outside:
                return True
        return False

    def rec(p: int, placed: int) -> int:
        nonlocal nodes
        if p == n:
            return FOUND
        cands = range(n) if not (p == 0 and first >= 0) else (first,)
        for v in cands:
            if (placed >> v) & 1:
                continue
            if prune and dead(p, v, placed):
                continue
            nodes += 1
            if nodes > budget:
                return BUDGET
            order[p] = v
            if not prune and p == n - 1:
                adj = [[u for u in range(n) if (nbmask[w] >> u) & 1] for w in range(n)]
                if find_witness(order, adj) is not None:
                    continue
            r = rec(p + 1, placed | (1 << v))
            if r != EXHAUSTED:
                return r
        return EXHAUSTED

    if n == 0:
        return FOUND, [], 0
    status = rec(0, 0)
    return status, (list(order) if status == FOUND else None), nodes


def count_all(n: int, nbmask: Sequence[int]) -> tuple[int, int, list[int] | None]:
    """Check every one of the n! orders without pruning.

    Returns ``(checked, nonjumping, first_nonjumping_order)``.
    """
    adj = [[u for u in range(n) if (nbmask[w] >> u) & 1] for w in range(n)]
    order = [0] * n
    checked = 0
    good = 0
    first: list[int] | None = None

    def rec(p: int, placed: int) -> None:
        nonlocal checked, good, first
        if p == n:
            checked += 1
            if find_witness(order, adj) is None:
                good += 1
                if first is None:
                    first = list(order)
            return
        for v in range(n):
            if not (placed >> v) & 1:
                order[p] = v
                rec(p + 1, placed | (1 << v))

    rec(0, 0)
    return checked, good, first


class _Fenwick:
    __slots__ = ("n", "tree", "log")

    def __init__(self, n: int) -> None:
        self.n = n
        self.tree = [0] * (n + 1)
        self.log = n.bit_length()

    def add(self, i: int, d: int) -> None:
        i += 1
        while i <= self.n:
            self.tree[i] += d
            i += i & -i

    def prefix(self, i: int) -> int:
        """Sum over slots ``[0, i)``."""
        s = 0
        while i > 0:
            s += self.tree[i]
            i -= i & -i
        return s

    def kth(self, k: int) -> int:
        """Slot index of the k-th (1-based) active slot; ``n`` if none."""
        pos = 0
        for b in range(self.log, -1, -1):
            nxt = pos + (1 << b)
            if nxt <= self.n and self.tree[nxt] < k:
                pos = nxt
                k -= self.tree[nxt]
        return pos


def sweep(
    hs: Sequence[tuple[int, int, int, int]],
    vs: Sequence[tuple[int, int, int, int]],
    limit: int,
) -> list[tuple[int, int, int, int, int, bool]]:
    """Report horizontal/vertical arm intersections in sweep order.

    ``hs`` holds ``(y, x1, x2, owner)``, ``vs`` holds ``(x, y1, y2, owner)``;
    endpoints are inclusive. Events are ``(x, y, kind, h_owner, v_owner, proper)``
    with kind 0 for an L's own corner and 1 otherwise, sorted by
    ``(x, y, kind, h_owner, v_owner)``. At most ``limit`` events are returned
    (``limit < 0`` means unbounded).
    """
    cap = limit if limit >= 0 else len(hs) * len(vs) + 1
    nh = len(hs)
    order = sorted(range(nh), key=lambda i: (hs[i][0], hs[i][3], i))
    slot_of = [0] * nh
    slot_y = [0] * nh
    for s, i in enumerate(order):
        slot_of[i] = s
        slot_y[s] = hs[i][0]
    starts: dict[int, list[int]] = defaultdict(list)
    ends: dict[int, list[int]] = defaultdict(list)
    verts: dict[int, list[int]] = defaultdict(list)
    for i, (_, x1, x2, _) in enumerate(hs):
        starts[x1].append(i)
        ends[x2].append(i)
    for i, v in enumerate(vs):
        verts[v[0]].append(i)
    fen = _Fenwick(nh)
    out: list[tuple[int, int, int, int, int, bool]] = []
    for x in sorted(set(starts) | set(ends) | set(verts)):
        if len(out) >= cap:
            break
        for i in starts.get(x, ()):
            fen.add(slot_of[i], 1)
        group = []
        remaining = cap - len(out)
        for vi in verts.get(x, ()):
            _, y1, y2, vo = vs[vi]
            lo = bisect_left(slot_y, y1)
            hi = bisect_right(slot_y, y2)
            c = fen.prefix(lo)
            taken = 0
            last_y = None
            while True:
                s = fen.kth(c + 1)
                if s >= hi:
                    break
                hy, hx1, hx2, ho = hs[order[s]]
                if taken >= remaining and hy != last_y:
                    break
                if ho == vo:
                    group.append((x, hy, 0, ho, vo, False))
                else:
                    proper = hx1 < x < hx2 and y1 < hy < y2
                    group.append((x, hy, 1, ho, vo, proper))
                last_y = hy
                taken += 1
                c += 1
        group.sort(key=lambda e: e[:5])
        out.extend(group[:remaining])
        for i in ends.get(x, ()):
            fen.add(slot_of[i], -1)
    return out
