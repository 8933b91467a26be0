"""Exact commutative algebra over a prime field: Groebner bases, the
partial elimination filtration of an ideal, graded Betti numbers through
Koszul homology, and inner projections of classical projective varieties
with their promised rank and depth identities.
"""

from .docs import (
    DocumentError,
    IdealDocument,
    document,
    from_ideal,
    load,
    parse_json,
    parse_text,
)
from .field import DEFAULT_CHAR
from .fixtures import (
    BudgetExceeded,
    gen_variety,
    kinds,
    plucker24,
    rnc,
    scroll,
    segre,
    two_planes_p4,
    veronese,
)
from .geometry import (
    ChainResult,
    ClassificationReport,
    PointedIdeal,
    ProjectionReport,
    beta02,
    classify,
    degree_bound_check,
    hoa_betti,
    ideal_table,
    inner_project,
    lb_quadrics,
    on_variety,
    pointed,
    quadric_span_dim,
    quotient_table,
    successive_project,
    tangent_at,
)
from .groebner import (
    GroebnerBasis,
    Ideal,
    eliminate,
    ideal_contains_ideal,
    ideal_equal,
    normal_form,
    s_polynomial,
)
from .hilbert import HilbertData, hilbert
from .modspec import (
    GradedModuleSpec,
    filtration_step_spec,
    ideal_spec,
    quotient_spec,
    residue_field_spec,
    shifted_ideal_spec,
    subquotient_spec,
)
from .monomial import Block, GrevLex
from .parser import parse_polynomial
from .pei import (
    PEIFiltration,
    SliceDimReport,
    dimension_identity,
    partial_elim,
    stabilization,
)
from .poly import LinearChange, Polynomial, PolyRing, poly_str
from .tor import (
    BettiTable,
    DepthReport,
    MappingConeVerdict,
    TorMapReport,
    betti_window,
    check_n2p,
    get_complex,
    mapping_cone_identity,
    pd_depth,
    quotient_to_ideal_entry,
    tor_inclusion_map,
    tor_quotient_map,
    tor_x0_map,
)
from .verify import (
    CheckResult,
    CHECKS,
    report_json,
    report_text,
    run_checks,
    suite_failed,
    UnknownCheckError,
)

__version__ = "0.1.0"

__all__ = [
    "BettiTable",
    "Block",
    "BudgetExceeded",
    "CHECKS",
    "ChainResult",
    "CheckResult",
    "ClassificationReport",
    "DEFAULT_CHAR",
    "DepthReport",
    "DocumentError",
    "GradedModuleSpec",
    "GrevLex",
    "GroebnerBasis",
    "HilbertData",
    "Ideal",
    "IdealDocument",
    "LinearChange",
    "MappingConeVerdict",
    "PEIFiltration",
    "PointedIdeal",
    "PolyRing",
    "Polynomial",
    "ProjectionReport",
    "SliceDimReport",
    "TorMapReport",
    "UnknownCheckError",
    "beta02",
    "betti_window",
    "check_n2p",
    "classify",
    "degree_bound_check",
    "dimension_identity",
    "document",
    "eliminate",
    "filtration_step_spec",
    "from_ideal",
    "gen_variety",
    "get_complex",
    "hilbert",
    "hoa_betti",
    "ideal_contains_ideal",
    "ideal_equal",
    "ideal_spec",
    "ideal_table",
    "inner_project",
    "kinds",
    "lb_quadrics",
    "load",
    "mapping_cone_identity",
    "normal_form",
    "on_variety",
    "parse_json",
    "parse_polynomial",
    "parse_text",
    "partial_elim",
    "pd_depth",
    "plucker24",
    "pointed",
    "poly_str",
    "quadric_span_dim",
    "quotient_spec",
    "quotient_table",
    "quotient_to_ideal_entry",
    "report_json",
    "report_text",
    "residue_field_spec",
    "rnc",
    "run_checks",
    "s_polynomial",
    "scroll",
    "segre",
    "shifted_ideal_spec",
    "stabilization",
    "subquotient_spec",
    "successive_project",
    "suite_failed",
    "tangent_at",
    "tor_inclusion_map",
    "tor_quotient_map",
    "tor_x0_map",
    "two_planes_p4",
    "veronese",
]
