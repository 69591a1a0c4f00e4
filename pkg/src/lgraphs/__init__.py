"""Monotone and general L-embeddings of graphs.

Core entry points are re-exported here; see the submodules for details.
"""

from __future__ import annotations

from ._core import BACKEND
from .errors import (
    ConvexityError,
    InputError,
    LGraphError,
    NotDistanceHereditaryError,
    NotMonotoneError,
    NotOuterplanarError,
    ParseError,
)
from .geometry import (
    CrossingKind,
    Direction,
    LEmbedding,
    LSegment,
    crossing,
    expand,
    intersection_graph,
    sweep_intersections,
    validate_embedding,
    validate_embedding_naive,
)
from .graph import Graph, JumpWitness, Kinship, Labeling, LeafTree, graph_from_leaf_tree, kinship
from .monotone import (
    JUMPING8,
    build_monotone,
    find_nonjumping_labeling,
    is_nonjumping_fast,
    is_nonjumping_naive,
    labeling_from_embedding,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ConvexityError",
    "CrossingKind",
    "Direction",
    "Graph",
    "InputError",
    "JUMPING8",
    "JumpWitness",
    "Kinship",
    "LEmbedding",
    "LGraphError",
    "LSegment",
    "Labeling",
    "LeafTree",
    "NotDistanceHereditaryError",
    "NotMonotoneError",
    "NotOuterplanarError",
    "ParseError",
    "build_monotone",
    "crossing",
    "expand",
    "find_nonjumping_labeling",
    "graph_from_leaf_tree",
    "intersection_graph",
    "is_nonjumping_fast",
    "is_nonjumping_naive",
    "kinship",
    "labeling_from_embedding",
    "sweep_intersections",
    "validate_embedding",
    "validate_embedding_naive",
]
