"""Colourings of finite simplicial complexes, the graphs that encode them,
and the pure Sullivan algebras whose non-ellipticity detects colourability."""

from .colourings import Assignment, ColourScheme, check, chromatic, colour, is_colourable
from .complex import (
    SimplicialComplex,
    face_name,
    faces_of_dim,
    from_facets,
    homogeneity,
    is_connected,
    is_strongly_connected,
    load_complex,
    parse_cx,
    skeleton,
)
from .derived import derive, partition_graph
from .graph import (
    Graph,
    chromatic_number,
    graph_cartesian,
    graph_disjoint_union,
    graph_overlay,
    graph_sum,
    is_connected_graph,
    is_k_colourable,
    verify_colouring,
)
from .partitions import Partition, bcp, chr_s_via_bcp, is_block_connected, is_s_independent
from .reductions import (
    graph_to_complex,
    is_edge_k_colourable,
    is_total_k_colourable,
    reduction_size_report,
    translate_colouring,
)
from .sullivan import (
    CyclotomicElement,
    SullivanPresentation,
    TensorPresentation,
    build_model,
    cyclotomic_poly,
    ellipticity_verdict,
    model_for_scheme,
    witness_check,
)

__version__ = "0.1.0"
