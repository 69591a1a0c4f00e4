from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

from gen import random_leaf_tree
from lgraphs.errors import InputError
from lgraphs.graph import (
    Graph,
    JumpWitness,
    Kinship,
    Labeling,
    LeafTree,
    graph_from_leaf_tree,
    is_jumping_witness,
    kinship,
    name_key,
)

# root x(0) with leaf c(1) and internal child y(2) holding leaves a(3), b(4)
XY_TREE = LeafTree((None, 0, 0, 2, 2), {1: "c", 3: "a", 4: "b"})


def test_star_tree_k2_is_triangle():
    t = LeafTree((None, 0, 0, 0), {1: "p", 2: "q", 3: "r"})
    assert graph_from_leaf_tree(t, 2) == Graph.complete(3)


def test_two_level_tree_k3_is_triangle():
    assert graph_from_leaf_tree(XY_TREE, 3) == Graph.complete(3)


def test_two_level_tree_k2_is_single_edge():
    # ids follow sorted label order: a=0, b=1, c=2
    assert graph_from_leaf_tree(XY_TREE, 2) == Graph.from_edges(3, [(0, 1)])


def test_leaf_power_rejects_nonpositive_k():
    with pytest.raises(InputError):
        graph_from_leaf_tree(XY_TREE, 0)


def test_kinship_sibling():
    assert kinship(XY_TREE, 3, 4) is Kinship.SIBLING


def test_kinship_uncle_and_inverse():
    assert kinship(XY_TREE, 1, 3) is Kinship.UNCLE_OF
    assert kinship(XY_TREE, 3, 1) is Kinship.NEPHEW_OF


def test_kinship_unrelated_below_depth_three_ancestor():
    # r -> p -> p1 -> u   and   r -> q -> q1 -> v
    t = LeafTree((None, 0, 0, 1, 2, 3, 4), {5: "u", 6: "v"})
    assert kinship(t, 5, 6) is Kinship.UNRELATED


def test_kinship_rejects_internal_node():
    with pytest.raises(InputError):
        kinship(XY_TREE, 2, 3)


def test_witness_on_path_is_false():
    assert not is_jumping_witness(Graph.path(4), Labeling.identity(4), JumpWitness(0, 1, 2, 3))


def test_witness_on_crossing_pair_is_true():
    g = Graph.from_edges(4, [(0, 2), (1, 3)])
    assert is_jumping_witness(g, Labeling.identity(4), JumpWitness(0, 1, 2, 3))


def test_witness_on_k4_is_false():
    assert not is_jumping_witness(Graph.complete(4), Labeling.identity(4), JumpWitness(0, 1, 2, 3))


def test_labeling_must_be_permutation():
    with pytest.raises(InputError):
        Labeling((0, 0, 1))


def test_graph_rejects_self_loop():
    with pytest.raises(InputError):
        Graph.from_edges(2, [(1, 1)])


def test_tree_rejects_two_roots():
    with pytest.raises(InputError):
        LeafTree((None, None), {0: "a", 1: "b"})


def test_name_key_orders_numbers_numerically():
    assert sorted(["10", "2", "b", "a1"], key=name_key) == ["2", "10", "a1", "b"]


_ADJ3 = {Kinship.SIBLING, Kinship.UNCLE_OF, Kinship.NEPHEW_OF}
_ADJ4 = _ADJ3 | {Kinship.COUSIN, Kinship.P_UNCLE_OF, Kinship.P_NEPHEW_OF}


@pytest.mark.parametrize("k, related", [(3, _ADJ3), (4, _ADJ4)])
def test_leaf_power_adjacency_matches_kinship(k, related):
    rng = random.Random(k)
    for _ in range(60):
        t = random_leaf_tree(rng, max_leaves=rng.randint(2, 60), max_depth=rng.randint(2, 7))
        g = graph_from_leaf_tree(t, k)
        leaves = t.sorted_leaves()
        for a in range(len(leaves)):
            for b in range(a + 1, len(leaves)):
                tag = kinship(t, leaves[a], leaves[b])
                assert g.has_edge(a, b) == (tag in related), (t, a, b, tag)


_INVERSE = {
    Kinship.SIBLING: Kinship.SIBLING,
    Kinship.COUSIN: Kinship.COUSIN,
    Kinship.UNRELATED: Kinship.UNRELATED,
    Kinship.UNCLE_OF: Kinship.NEPHEW_OF,
    Kinship.NEPHEW_OF: Kinship.UNCLE_OF,
    Kinship.P_UNCLE_OF: Kinship.P_NEPHEW_OF,
    Kinship.P_NEPHEW_OF: Kinship.P_UNCLE_OF,
}


@given(st.integers(0, 10_000))
def test_kinship_symmetry(seed):
    t = random_leaf_tree(random.Random(seed), max_leaves=20)
    leaves = t.leaves()
    for u in leaves:
        for v in leaves:
            if u != v:
                assert kinship(t, v, u) is _INVERSE[kinship(t, u, v)]


@given(st.integers(0, 10_000), st.integers(1, 6))
def test_leaf_power_matches_distance(seed, k):
    t = random_leaf_tree(random.Random(seed), max_leaves=15)
    g = graph_from_leaf_tree(t, k)
    leaves = t.sorted_leaves()
    for a in range(len(leaves)):
        for b in range(a + 1, len(leaves)):
            assert g.has_edge(a, b) == (t.distance(leaves[a], leaves[b]) <= k)
