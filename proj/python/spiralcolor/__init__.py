"""Spiral-chain decomposition and priority 3-coloring of plane graphs."""

import json

from ._core import (
    CrossCheckError,
    FormatError,
    GraphError,
    PlanarGraph,
    cross_check,
    find_short_cycles,
    gadget_hexagon_triangles,
    gadget_three_triangles_hub,
    gen_random_g6,
    is_g6,
    triangles,
    verify,
)
from . import _core

__all__ = [
    "CrossCheckError",
    "FormatError",
    "GraphError",
    "PlanarGraph",
    "color",
    "cross_check",
    "decompose",
    "exact_3color",
    "find_short_cycles",
    "gadget_hexagon_triangles",
    "gadget_three_triangles_hub",
    "gen_random_g6",
    "hunt",
    "is_g6",
    "triangles",
    "verify",
]


def decompose(graph, start=None, orientation="cw"):
    return json.loads(_core.decompose_json(graph, start, orientation))


def color(graph, start=None, orientation="cw", trace=False):
    return json.loads(_core.color_json(graph, start, orientation, trace))


def exact_3color(graph, budget=10_000_000):
    return json.loads(_core.exact_3color_json(graph, budget))


def hunt(seed=0, count=100, n_min=10, n_max=40, workers=1, strict=False):
    return json.loads(_core.hunt_json(seed, count, n_min, n_max, workers, strict))
