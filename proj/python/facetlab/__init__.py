"""Vertex-facet incidence analysis for pointed polyhedra.

Thin wrapper over the compiled _facetlab module. The heavy lifting
(closure families, Moebius numbers, boundedness, circulant recognition,
face-poset reconstruction) happens in C++.
"""

import json as _json

from ._facetlab import (  # noqa: F401
    FacetlabError,
    IncidenceMatrix,
    analyze_json,
    circulant,
    circulant_realizability,
    closure,
    detect_dim3,
    dimension_from_bounded_facet,
    euler_oracle,
    face_poset_dim3,
    face_poset_simple,
    facets_bounded,
    facets_containing,
    generate,
    graph_class,
    is_bounded,
    is_simple_simplicial,
    longest_chain,
    moebius_number,
    parse,
    rays_simple,
    recognize_circulant,
    serialize,
    validate,
    vertex_graph_edges,
)

__version__ = "0.1.0"


def analyze(matrix, one_indexed=False):
    """Full analysis report as a dict (see the CLI's --json schema)."""
    return _json.loads(analyze_json(matrix, one_indexed))
