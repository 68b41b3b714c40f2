"""Almost gentle algebras, their trivial extensions, admissible cuts and oriented hypergraphs."""

from .brauer import BrauerConfiguration, configuration_of_pair
from .cuts import AdmissibleCut, admissible_cuts, canonical_cut, count_cuts, cut_algebra, make_cut
from .formats import ParseError, format_pair, format_presentation, parse, parse_source
from .hypergraph import (
    HypergraphIso,
    OrientedHypergraph,
    hypergraph_of,
    hypergraphs_isomorphic,
    invariant_signature,
    reduce_to_configuration,
    truncation_vertices,
)
from .iso import PresentationIso, SearchBudgetExceeded, pairs_isomorphic, presentations_isomorphic
from .pairs import CycleClass, DefiningPair, InvalidPairError, PairRelations, relations_of_pair, validate_pair
from .quiver import (
    Arrow,
    MaximalPath,
    NotAlmostGentleError,
    Path,
    Presentation,
    Quiver,
    ValidationReport,
    basis,
    brute_force_basis,
    dimension,
    has_finite_global_dimension,
    maximal_paths,
    predecessor,
    successor,
    validate,
)
from .trivext import (
    StarAlgebra,
    TBasisElement,
    TrivialExtension,
    direct,
    dual,
    star,
    star_dimension,
    tmult,
    verify_star_iso,
)

__version__ = "0.1.0"

__all__ = [
    "AdmissibleCut",
    "Arrow",
    "BrauerConfiguration",
    "CycleClass",
    "DefiningPair",
    "HypergraphIso",
    "InvalidPairError",
    "MaximalPath",
    "NotAlmostGentleError",
    "OrientedHypergraph",
    "PairRelations",
    "ParseError",
    "Path",
    "Presentation",
    "PresentationIso",
    "Quiver",
    "SearchBudgetExceeded",
    "StarAlgebra",
    "TBasisElement",
    "TrivialExtension",
    "ValidationReport",
    "admissible_cuts",
    "basis",
    "brute_force_basis",
    "canonical_cut",
    "configuration_of_pair",
    "count_cuts",
    "cut_algebra",
    "dimension",
    "direct",
    "dual",
    "format_pair",
    "format_presentation",
    "has_finite_global_dimension",
    "hypergraph_of",
    "hypergraphs_isomorphic",
    "invariant_signature",
    "make_cut",
    "maximal_paths",
    "pairs_isomorphic",
    "parse",
    "parse_source",
    "predecessor",
    "presentations_isomorphic",
    "reduce_to_configuration",
    "relations_of_pair",
    "star",
    "star_dimension",
    "successor",
    "tmult",
    "truncation_vertices",
    "validate",
    "validate_pair",
    "verify_star_iso",
]
