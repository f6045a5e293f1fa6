"""Certified recognition of two-clique graphs and quasi-line graphs."""

from quasiline.errors import (
    CapacityError,
    CompleteGraphError,
    EdgeListError,
    GraphFormatError,
    GraphLengthError,
    PatternError,
    PreconditionError,
    QuasilineError,
    VertexRangeError,
)
from quasiline.forbidden import (
    Corollary2Report,
    Pattern,
    build_pattern,
    corollary2_check,
    find_induced,
    parse_pattern,
    verify_embedding,
)
from quasiline.formats import (
    encode_edge_list,
    encode_graph6,
    parse_edge_list,
    parse_graph6,
    to_dot,
    to_json,
)
from quasiline.graph import Graph, complement, induced_subgraph, neighborhood
from quasiline.recognition import (
    ForbiddenInduced,
    Lemma1Partition,
    OddAntiholeWitness,
    QuasiLineCertificate,
    QuasiLineObstruction,
    TwoCliqueCover,
    check_3k1_c5_free,
    extend_cover,
    incremental_cover,
    lemma1_partition,
    quasi_line,
    two_clique_cover,
    verify_antihole,
    verify_quasi_line_certificate,
    verify_quasi_line_obstruction,
    verify_two_clique_cover,
)

__version__ = "0.1.0"
