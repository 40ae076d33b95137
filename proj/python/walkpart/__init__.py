"""Walk factorization, reduction, dressing and resummed walk sums."""

import json

from ._walkpart import (
    Digraph,
    SingularMatrixError,
    WeightedDigraph,
    all_walks,
    dress,
    dressed_vertex_weight,
    dressed_walk_weight,
    factor,
    irreducible_cycles,
    irreducible_walks,
    is_irreducible,
    kmax,
    nest,
    partition_check,
    reduce,
    resolvent_entry,
    resummed_walk_sum,
    truncated_walk_sum,
    walk_weight,
)
from ._walkpart import factor_json as _factor_json


def factor_tree(graph, walk):
    """Prime factorization of a walk as nested dicts."""
    return json.loads(_factor_json(graph, walk))


__all__ = [
    "Digraph",
    "SingularMatrixError",
    "WeightedDigraph",
    "all_walks",
    "dress",
    "dressed_vertex_weight",
    "dressed_walk_weight",
    "factor",
    "factor_tree",
    "irreducible_cycles",
    "irreducible_walks",
    "is_irreducible",
    "kmax",
    "nest",
    "partition_check",
    "reduce",
    "resolvent_entry",
    "resummed_walk_sum",
    "truncated_walk_sum",
    "walk_weight",
]
