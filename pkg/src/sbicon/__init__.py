"""Critical arcs and vertices of strongly biconnected digraphs."""

from .connectivity import (
    block_decomposition,
    is_biconnected,
    is_strongly_biconnected,
    is_strongly_connected,
    scss_certificate,
    strongly_connected_components,
)
from .critical import strong_articulation_points, strong_bridges
from .dominators import dominates, dominator_tree, flowgraph_bridges
from .errors import (
    ConstructionError,
    GraphError,
    InternalContradiction,
    ParseError,
    PreconditionError,
)
from .generate import generate
from .graph import Digraph, build, delete_arc, delete_vertex, induced_subgraph, reverse, underlying
from .io import load_fixture, parse_edge_list
from .resilience import (
    augment_to_strongly_biconnected,
    b_articulation_points,
    b_bridges,
    b_bridges_fast,
    classify,
)
from .sbcc import strongly_biconnected_components

__version__ = "0.1.0"
