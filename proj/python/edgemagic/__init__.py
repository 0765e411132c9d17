"""Edge-magic labelings of constellations and caterpillar armies."""

import json

from ._core import (
    Forest,
    ForestError,
    InputError,
    Labeling,
    LabelingError,
    army,
    army_labeling,
    army_magic_constant,
    constellation,
    enumerate_odd_constellations,
    export_dot,
    extend_vertex_labeling,
    is_symmetric,
    labeling_from_json,
    labeling_to_json,
    make_forest,
    path,
    predicted_magic_constant,
    standard_labeling,
    symmetric_order,
    verify,
)
from . import _core


def search(forest, super=True, jobs=1, all_constants=False, max_nodes=10_000_000, max_ms=60_000):
    """Exhaustive search. Returns (report dict, Labeling or None)."""
    text, labeling = _core.search(forest, super, jobs, all_constants, max_nodes, max_ms)
    return json.loads(text), labeling


def scan(max_n, jobs=1, max_nodes=10_000_000, max_ms=60_000):
    """Search every odd constellation with at most max_n vertices."""
    return [json.loads(line) for line in _core.scan(max_n, jobs, max_nodes, max_ms)]


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
