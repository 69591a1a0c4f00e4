"""Acceptance criteria, one test per criterion, each printing a PASS/FAIL line.

Run standalone with ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import itertools
import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

from acceptance_log import record  # noqa: E402
from gen import (  # noqa: E402
    random_convex_bipartite,
    random_dh_graph,
    random_graph,
    random_intervals,
    random_labeling,
    random_leaf_tree,
    random_outerplanar,
    random_segments,
)
from lgraphs import _core  # noqa: E402
from lgraphs.builders import embed_4leaf, embed_distance_hereditary, pruning_sequence, replay, simplify_leaf_tree  # noqa: E402
from lgraphs.builders.leaf_power import _embed_simplified  # noqa: E402
from lgraphs.errors import NotDistanceHereditaryError  # noqa: E402
from lgraphs.geometry import (  # noqa: E402
    arms_of,
    intersection_graph,
    naive_arm_intersections,
    sweep_intersections,
    validate_embedding,
    validate_embedding_naive,
)
from lgraphs.graph import Graph, Labeling, graph_from_leaf_tree  # noqa: E402
from lgraphs.labelers import (  # noqa: E402
    interleaving_pairs,
    label_3leaf,
    label_convex_bipartite,
    label_interval,
    label_outerplanar,
)
from lgraphs.monotone import (  # noqa: E402
    JUMPING8,
    SearchStatus,
    build_monotone,
    enumerate_all_labelings,
    find_nonjumping_labeling,
    is_nonjumping_fast,
    is_nonjumping_naive,
    labeling_from_embedding,
    prefix_witness,
)

# every non-jumping (graph, labeling) pair produced by the criteria below
PRODUCED: list[tuple[Graph, Labeling]] = []


def _keep(g: Graph, lab: Labeling) -> None:
    PRODUCED.append((g, lab))


def jumping_graph_certificate() -> tuple[bool, str]:
    t0 = time.perf_counter()
    census = enumerate_all_labelings(JUMPING8)
    pruned = find_nonjumping_labeling(JUMPING8)
    dt = time.perf_counter() - t0
    ok = (
        census.checked == 40320
        and census.nonjumping == 0
        and pruned.status is SearchStatus.EXHAUSTED
        and dt < 60
    )
    return ok, (
        f"{census.checked} labelings checked without pruning, {census.nonjumping} non-jumping; "
        f"pruned search {pruned.status.value} after {pruned.nodes} prefixes; {dt:.2f}s"
    )


def characterization_equivalence() -> tuple[bool, str]:
    rng = random.Random(2)
    disagree = positives = 0
    for t in range(1000):
        n = rng.randint(1, 9)
        g = random_graph(rng, n, rng.random())
        lab = random_labeling(rng, n)
        if t % 2:
            found = find_nonjumping_labeling(g)
            if found.labeling is not None:
                lab = found.labeling
        naive = is_nonjumping_naive(g, lab) is None
        drawn = validate_embedding_naive(g, build_monotone(g, lab)).ok
        fast = is_nonjumping_fast(g, lab)
        disagree += not (naive == drawn == fast)
        if naive:
            positives += 1
            _keep(g, lab)
    return disagree == 0, f"1000 pairs, {positives} non-jumping, {disagree} disagreements"


def grid_bound() -> tuple[bool, str]:
    rng = random.Random(3)
    bad = 0
    for n in range(1, 201):
        ivs = random_intervals(rng, n)
        g, lab = ivs.graph(), label_interval(ivs)
        e = build_monotone(g, lab)
        corners = all(e[v].corner == (2 * j, 2 * j) for j, v in enumerate(lab.order, start=1))
        x0, y0, x1, y1 = e.bounding_box()
        inside = 0 <= x0 and 0 <= y0 and x1 <= 2 * n + 1 and y1 <= 2 * n + 1
        bad += not (corners and inside and is_nonjumping_fast(g, lab))
        _keep(g, lab)
    return bad == 0, f"n = 1..200 interval graphs, {bad} drawings outside [0, 2n+1]^2 or off (2j, 2j)"


def _edge_plus_vertex_verdict(g: Graph, events) -> bool:
    return len(events) == g.m + g.n and all(ev.corner or g.has_edge(*ev.pair) for ev in events)


def sweep_oracle_equivalence() -> tuple[bool, str]:
    rng = random.Random(4)
    mismatched = verdicts = 0
    for t in range(1000):
        n = rng.randint(0, 64)
        if t % 2:
            g = random_graph(rng, n, rng.random() * 0.3)
            e = build_monotone(g, random_labeling(rng, n)) if n else {}
        else:
            e = random_segments(rng, n, 16)
            g = intersection_graph(e) if n else Graph(0, frozenset())
        arms = arms_of(e)
        full = sweep_intersections(arms)
        if full != naive_arm_intersections(arms):
            mismatched += 1
            continue
        truncated = sweep_intersections(arms, limit=g.m + g.n)
        if _edge_plus_vertex_verdict(g, truncated) != _edge_plus_vertex_verdict(g, full):
            mismatched += 1
        verdicts += _edge_plus_vertex_verdict(g, full)
    return mismatched == 0, f"1000 embeddings (n <= 64), {verdicts} positive verdicts, {mismatched} mismatches"


def family_labelers() -> tuple[bool, str]:
    rng = random.Random(5)
    failures = {"interval": 0, "convex": 0, "outerplanar": 0, "3leaf": 0}

    def check(name: str, g: Graph, lab: Labeling) -> None:
        ok = is_nonjumping_naive(g, lab) is None and is_nonjumping_fast(g, lab)
        failures[name] += not ok
        if ok:
            _keep(g, lab)

    for _ in range(500):
        ivs = random_intervals(rng, rng.randint(1, 60))
        check("interval", ivs.graph(), label_interval(ivs))
        cb = random_convex_bipartite(rng, rng.randint(0, 30), rng.randint(0, 30))
        check("convex", cb.graph(), label_convex_bipartite(cb))
        og = random_outerplanar(rng, rng.randint(1, 60), rng.random())
        olab = label_outerplanar(og)
        failures["outerplanar"] += bool(interleaving_pairs(og, olab))
        check("outerplanar", og, olab)
        tg, tlab = label_3leaf(random_leaf_tree(rng, max_leaves=40, max_depth=6))
        check("3leaf", tg, tlab)
    return sum(failures.values()) == 0, "500 instances per family, failures " + ", ".join(
        f"{k}={v}" for k, v in failures.items()
    )


def distance_hereditary_pipeline() -> tuple[bool, str]:
    rng = random.Random(6)
    bad_final = bad_step = steps_checked = 0
    for _ in range(200):
        g = random_dh_graph(rng, rng.randint(1, 100))
        bad_final += not validate_embedding_naive(g, embed_distance_hereditary(g)).ok
        seq = pruning_sequence(g)
        start = seq[-1].anchor if seq else 0
        for e in replay(start, seq):
            sub, ids = g.induced_subgraph(sorted(e))
            bad_step += not validate_embedding(sub, {i: e[v] for i, v in enumerate(ids)}).ok
            steps_checked += 1
    try:
        pruning_sequence(Graph.cycle(5))
        c5_rejected = False
    except NotDistanceHereditaryError:
        c5_rejected = True
    ok = bad_final == 0 and bad_step == 0 and c5_rejected
    return ok, (
        f"200 graphs (n <= 100), {bad_final} invalid outputs, "
        f"{bad_step}/{steps_checked} failed replay steps, C5 rejected={c5_rejected}"
    )


def four_leaf_power_pipeline() -> tuple[bool, str]:
    rng = random.Random(7)
    wrong = dummy_leaks = cross_pairs = 0
    for _ in range(200):
        t = random_leaf_tree(rng, max_leaves=40, max_depth=5)
        g, e = embed_4leaf(t)
        if g != graph_from_leaf_tree(t, 4) or intersection_graph(e) != g or not validate_embedding_naive(g, e).ok:
            wrong += 1
        cross_pairs += sum(
            1 for a, b in itertools.combinations(range(g.n), 2) if not g.has_edge(a, b)
        )
        s = simplify_leaf_tree(t)
        by_name = _embed_simplified(s)
        names = sorted(by_name)
        full = intersection_graph({i: by_name[x] for i, x in enumerate(names)})
        keep = [i for i, x in enumerate(names) if x not in s.dummies]
        kept = intersection_graph({j: by_name[names[i]] for j, i in enumerate(keep)})
        dummy_leaks += kept != full.induced_subgraph(keep)[0]
    ok = wrong == 0 and dummy_leaks == 0
    return ok, (
        f"200 trees (<= 40 leaves, depth <= 5), {wrong} wrong embeddings, "
        f"{cross_pairs} non-edges confirmed, {dummy_leaks} dummy-removal changes"
    )


def prefix_closure() -> tuple[bool, str]:
    rng = random.Random(9)
    violations = labelings = 0
    for _ in range(500):
        n = rng.randint(1, 7)
        g = random_graph(rng, n, rng.random())
        for order in itertools.permutations(range(n)):
            lab = Labeling(order)
            if is_nonjumping_naive(g, lab) is not None:
                continue
            labelings += 1
            if labelings % 50 == 0:
                _keep(g, lab)
            violations += any(prefix_witness(g, lab, i) is not None for i in range(n + 1))
    return violations == 0, f"500 graphs (n <= 7), {labelings} non-jumping labelings, {violations} jumping prefixes"


def round_trip() -> tuple[bool, str]:
    if not PRODUCED:
        characterization_equivalence()
        family_labelers()
    bad = sum(labeling_from_embedding(build_monotone(g, lab)) != lab for g, lab in PRODUCED)
    return bad == 0, f"{len(PRODUCED)} non-jumping labelings, {bad} not recovered from their drawing"


def fast_verifier_scaling() -> tuple[bool, str]:
    n = 100_000
    rng = random.Random(10)
    perm = list(range(n))
    rng.shuffle(perm)
    # path in label order plus short chords, under scrambled vertex ids
    edges = [(perm[i], perm[i + 1]) for i in range(n - 1)]
    edges += [(perm[i], perm[i + 2]) for i in range(0, n - 2, 7)]
    g = Graph.from_edges(n, edges)
    lab = Labeling(tuple(perm))
    t0 = time.perf_counter()
    ok = is_nonjumping_fast(g, lab)
    dt = time.perf_counter() - t0
    return ok and dt < 2.0, f"n={n}, m={g.m}, verdict={ok}, {dt:.2f}s with {_core.BACKEND} kernels"


CRITERIA = [
    (1, jumping_graph_certificate),
    (2, characterization_equivalence),
    (3, grid_bound),
    (4, sweep_oracle_equivalence),
    (5, family_labelers),
    (6, distance_hereditary_pipeline),
    (7, four_leaf_power_pipeline),
    (9, prefix_closure),
    (10, fast_verifier_scaling),
    (8, round_trip),
]


def _run(number: int, fn) -> bool:
    ok, detail = fn()
    record(number, ok, detail)
    return ok


def test_jumping_graph_certificate():
    assert _run(1, jumping_graph_certificate)


def test_characterization_equivalence():
    assert _run(2, characterization_equivalence)


def test_grid_bound():
    assert _run(3, grid_bound)


def test_sweep_oracle_equivalence():
    assert _run(4, sweep_oracle_equivalence)


def test_family_labelers():
    assert _run(5, family_labelers)


def test_distance_hereditary_pipeline():
    assert _run(6, distance_hereditary_pipeline)


def test_four_leaf_power_pipeline():
    assert _run(7, four_leaf_power_pipeline)


def test_prefix_closure():
    assert _run(9, prefix_closure)


def test_fast_verifier_scaling():
    assert _run(10, fast_verifier_scaling)


# last, so it sees every labeling produced above
def test_round_trip():
    assert _run(8, round_trip)


def main() -> int:
    results = [_run(number, fn) for number, fn in CRITERIA]
    return 0 if all(results) else 1


if __name__ == "__main__":
    sys.exit(main())
