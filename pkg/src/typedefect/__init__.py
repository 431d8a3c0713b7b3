"""Type defect of Stanley-Reisner ideals: Betti tables, classifiers, gluing
and Betti lower bounds for linear resolutions, with an independent oracle.
"""

from typedefect.betti import (
    BettiTable,
    InvariantReport,
    betti_table,
    dual_type,
    graph_type,
    induced_type_defects,
    invariant_report,
    modified_type,
    total_betti,
    type_defect,
)
from typedefect.cm import is_2cm, is_cohen_macaulay, is_facet_constructible, is_gorenstein, is_shellable
from typedefect.complexes import (
    SimplicialComplex,
    alexander_dual,
    clique_complex,
    codimension,
    complete_graph,
    cycle_graph,
    dimension,
    f_vector,
    graph,
    h_vector,
    induced,
    join,
    link,
    make_complex,
    minimal_nonfaces,
    path_graph,
    simplex,
    simplex_boundary,
    vset,
)
from typedefect.document import ComplexDocument, ParseError, emit_complex, from_complex, parse_complex
from typedefect.errors import (
    CapacityError,
    DomainError,
    PreconditionError,
    RangeError,
    TypeDefectError,
    VertexRangeError,
)
from typedefect.gluing import GlueReport, TreeishMove, build_treeish_complex, glue, is_treeish_complex, verify_glue_type
from typedefect.graphs import (
    chordality_via_td,
    find_simplicial_vertex,
    is_chordal,
    is_treeish_graph,
    perfect_elimination_order,
    treeish_by_construction,
    treeish_by_td,
)
from typedefect.homology import GF_DEFAULT, QQ, FieldSpec, reduced_homology
from typedefect.linres import (
    betti_lower_bound,
    classify_equality,
    eagon_reiner_check,
    has_linear_resolution,
    h_vector_prediction,
    linear_resolution_classes,
    linear_resolution_complexes,
    seven_condition_check,
)
from typedefect.oracle import enumerate_complexes, koszul_betti_table, koszul_tor

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
