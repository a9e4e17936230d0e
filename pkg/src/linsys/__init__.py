"""Exact combinatorics of linear systems: incidence structures whose
lines pairwise share at most one point, projective planes over small
fields, exact transversal/domination/2-packing solvers, and the
derivations connecting extremal systems to planes."""

from .core import (
    DegreeProfile,
    Embedding,
    IsoCertificate,
    LinearSystem,
    are_isomorphic,
    closed_neighborhood,
    collinearity_adjacent,
    degree_profile,
    delete_line,
    delete_point,
    drop_isolated,
    embeds_in,
    induced_subsystem,
    is_intersecting,
    is_spanning_subsystem,
    is_uniform,
    new_system,
    pendant_reduction,
    rank,
)
from .constructions import (
    CheckRow,
    ClauseCheck,
    Derivation,
    MembershipReport,
    ReconstructionReport,
    SaturatedPackingReport,
    check_extremal_family,
    check_plane_reconstruction,
    check_saturated_packing,
    derive,
    extend_with_pendant_points,
    triangular_system,
    verification_battery,
)
from .errors import (
    BadIndex,
    DerivationFailed,
    DuplicateLine,
    EmptyLine,
    FormatError,
    LinearityViolation,
    LinsysError,
    NoLines,
    NotIntersecting,
    NotMember,
    NotPrime,
    NotPrimePower,
    NotUniform,
    OddOrder,
    SizeLimit,
)
from .field import FieldTable, make_field
from .formats import (
    dumps_json,
    dumps_plane_json,
    dumps_text,
    loads_json,
    loads_text,
    plane_to_dict,
    system_from_dict,
    system_to_dict,
)
from .geometry import (
    Arc,
    PlaneModel,
    PlaneReport,
    conic_points,
    dual_hyperoval_lines,
    dual_plane,
    hyperoval,
    is_arc,
    normalized_triples,
    projective_plane,
    verify_plane_axioms,
)
from .limits import CAPS_ENV, Caps, DEFAULT_CAPS, caps_from_env
from .solvers import (
    KIND_DOMINATION,
    KIND_TRANSVERSAL,
    KIND_TWO_PACKING,
    PackingGapReport,
    SolveResult,
    check_packing_gap,
    domination_number,
    greedy_transversal,
    transversal_number,
    two_packing_number,
    verify_domination,
    verify_transversal,
    verify_two_packing,
)

__version__ = "0.1.0"

__all__ = [
    "Arc",
    "BadIndex",
    "CAPS_ENV",
    "Caps",
    "CheckRow",
    "ClauseCheck",
    "DEFAULT_CAPS",
    "DegreeProfile",
    "Derivation",
    "DerivationFailed",
    "DuplicateLine",
    "Embedding",
    "EmptyLine",
    "FieldTable",
    "FormatError",
    "IsoCertificate",
    "KIND_DOMINATION",
    "KIND_TRANSVERSAL",
    "KIND_TWO_PACKING",
    "LinearSystem",
    "LinearityViolation",
    "LinsysError",
    "MembershipReport",
    "NoLines",
    "NotIntersecting",
    "NotMember",
    "NotPrime",
    "NotPrimePower",
    "NotUniform",
    "OddOrder",
    "PackingGapReport",
    "PlaneModel",
    "PlaneReport",
    "ReconstructionReport",
    "SaturatedPackingReport",
    "SizeLimit",
    "SolveResult",
    "are_isomorphic",
    "caps_from_env",
    "check_extremal_family",
    "check_packing_gap",
    "check_plane_reconstruction",
    "check_saturated_packing",
    "closed_neighborhood",
    "collinearity_adjacent",
    "conic_points",
    "degree_profile",
    "delete_line",
    "delete_point",
    "derive",
    "domination_number",
    "drop_isolated",
    "dual_hyperoval_lines",
    "dual_plane",
    "dumps_json",
    "dumps_plane_json",
    "dumps_text",
    "embeds_in",
    "extend_with_pendant_points",
    "greedy_transversal",
    "hyperoval",
    "induced_subsystem",
    "is_arc",
    "is_intersecting",
    "is_spanning_subsystem",
    "is_uniform",
    "loads_json",
    "loads_text",
    "make_field",
    "new_system",
    "normalized_triples",
    "pendant_reduction",
    "plane_to_dict",
    "projective_plane",
    "rank",
    "system_from_dict",
    "system_to_dict",
    "transversal_number",
    "triangular_system",
    "two_packing_number",
    "verification_battery",
    "verify_domination",
    "verify_plane_axioms",
    "verify_transversal",
    "verify_two_packing",
]
