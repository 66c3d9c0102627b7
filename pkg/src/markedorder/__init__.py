"""Marked posets and their marked order polyhedra, computed exactly."""
from types import ModuleType as _ModuleType

from .conditional import (
    Condition,
    LinearConditions,
    TilingMap,
    conditional_hpolyhedron,
    conditional_membership,
    conditions_quotient,
    embed_polyhedron,
    make_conditions,
    minimal_face_dimension,
    tiling_map,
)
from .document import parse_document, serialize_document
from .errors import (
    CycleError,
    EmptyMarkingError,
    MarkedOrderError,
    MarkingNotOrderPreserving,
    NotACoverError,
    NotAFacePartitionError,
    NotCompatibleError,
    NotInPolyhedronError,
    NotPointedError,
    NotStrictError,
    ParseError,
    PartitionError,
    SizeLimitError,
    UnknownElementError,
)
from .faces import (
    FaceLattice,
    enumerate_face_partitions,
    face_partition_diagnostics,
    is_face_partition,
    partition_from_point,
)
from .geometry import (
    construct_vertex,
    dimension,
    disjoint_union,
    face_dimension,
    face_polyhedron,
    facet_table,
    generic_point,
    h_representation,
    is_lattice_polyhedron,
    is_pointed,
    membership,
    minkowski_markings,
    minkowski_sum_check,
    recession_cone,
    vertices,
)
from .hpoly import HPolyhedron
from .marked import (
    MarkedPoset,
    MarkedPosetMap,
    constant_intervals,
    is_redundant_cover,
    is_regular,
    is_strict,
    make_map,
    make_marked_poset,
    pull_back_point,
    quotient,
    regularity_report,
    regularize,
    strictify,
)
from .partitions import (
    Partition,
    block_name,
    is_connected_partition,
    is_p_compatible,
    is_pl_compatible,
    make_partition,
    refines,
    singletons,
)
from .poset import Poset, build_poset

__all__ = sorted(
    name for name, value in globals().items()
    if not name.startswith("_") and not isinstance(value, _ModuleType)
)
