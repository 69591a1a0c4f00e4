"""Constructive L-embeddings for distance-hereditary graphs and leaf powers."""

from .distance_hereditary import (
    PruneStep,
    StepKind,
    add_false_twin,
    add_pendant,
    add_true_twin,
    embed_distance_hereditary,
    juxtapose,
    pruning_sequence,
    replay,
)
from .leaf_power import (
    ConfigKind,
    Configuration,
    SimplifiedLeafTree,
    build_configuration,
    embed_4leaf,
    embed_leaf_power,
    fully_connected_embedding,
    simplify_leaf_tree,
)

__all__ = [
    "ConfigKind",
    "Configuration",
    "PruneStep",
    "SimplifiedLeafTree",
    "StepKind",
    "add_false_twin",
    "add_pendant",
    "add_true_twin",
    "build_configuration",
    "embed_4leaf",
    "embed_distance_hereditary",
    "embed_leaf_power",
    "fully_connected_embedding",
    "juxtapose",
    "pruning_sequence",
    "replay",
    "simplify_leaf_tree",
]
