"""
Graph module: representation, GraphFile I/O and named families.

Includes:
- Graph type and GraphFile parse/serialize
- BFS connectivity
- Family generators (complete, cycle, path, star, chemical tree, C60)
"""

from .graph_core import (
    Graph,
    GraphError,
    GraphParseError,
    graph_digest,
    is_complete,
    is_connected,
    parse_graph,
    planar_face_sizes,
    read_graph_file,
    serialize_graph,
    to_networkx,
    write_graph_file,
)
from .generators import (
    FAMILIES,
    GraphFamily,
    GraphFamilyError,
    generate,
    parametric_families,
    parse_family,
    resolve_family_name,
)

__all__ = [
    'Graph',
    'GraphError',
    'GraphParseError',
    'GraphFamily',
    'GraphFamilyError',
    'FAMILIES',
    'parse_graph',
    'serialize_graph',
    'read_graph_file',
    'write_graph_file',
    'graph_digest',
    'is_connected',
    'is_complete',
    'to_networkx',
    'planar_face_sizes',
    'generate',
    'parse_family',
    'parametric_families',
    'resolve_family_name',
]
