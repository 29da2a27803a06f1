"""Exact singularity invariants of cone singularities over polarized surfaces.

Everything is computed in exact arithmetic over Q or a real quadratic
extension Q(sqrt(d)): pseudoeffective thresholds of the pencils s*L -+ K,
valuations of the relative canonical divisors along the vertex blow-up's
negative section, klt/canonical/terminal classification, limiting
m-valuations, multiplier-ideal orders and jumping numbers.
"""

from .exactnum import MixedFieldsError, QuadNum, Rat, squarefree_decompose
from .surface import (
    BranchNotAmpleError,
    BranchNotDivisibleError,
    DimensionMismatchError,
    DivClass,
    NSLattice,
    PolyhedralCone,
    QuadraticCone,
    SurfaceDatum,
    WrongSignatureError,
    double_cover,
    inertia,
    is_effective,
    pairing,
    validate_hodge_index,
)
from .threshold import (
    ConstraintSystem,
    InfeasibleError,
    NotBoundedBelowError,
    ThresholdProblem,
    ThresholdResult,
    bracket_oracle,
    constraint_system,
    feasible_at,
    oracle_bound,
    solve,
)
from .singularity import (
    Classification,
    ConeSingularity,
    JumpingNumbers,
    NoBoundaryExistsError,
    RationalityGuardError,
    SingularityReport,
    analyze,
    classify,
    jumping_numbers,
    limiting_valuation,
    minus_threshold,
    multiplier_ideal_order,
    no_accumulation_check,
    plus_threshold,
    report_to_dict,
    report_to_text,
    val_relative_canonical_minus,
    val_relative_canonical_plus,
)
from .presets import PRESET_IDS, build

__version__ = "0.1.0"

__all__ = [
    "MixedFieldsError",
    "QuadNum",
    "Rat",
    "squarefree_decompose",
    "BranchNotAmpleError",
    "BranchNotDivisibleError",
    "DimensionMismatchError",
    "DivClass",
    "NSLattice",
    "PolyhedralCone",
    "QuadraticCone",
    "SurfaceDatum",
    "WrongSignatureError",
    "double_cover",
    "inertia",
    "is_effective",
    "pairing",
    "validate_hodge_index",
    "ConstraintSystem",
    "InfeasibleError",
    "NotBoundedBelowError",
    "ThresholdProblem",
    "ThresholdResult",
    "bracket_oracle",
    "constraint_system",
    "feasible_at",
    "oracle_bound",
    "solve",
    "Classification",
    "ConeSingularity",
    "JumpingNumbers",
    "NoBoundaryExistsError",
    "RationalityGuardError",
    "SingularityReport",
    "analyze",
    "classify",
    "jumping_numbers",
    "limiting_valuation",
    "minus_threshold",
    "multiplier_ideal_order",
    "no_accumulation_check",
    "plus_threshold",
    "report_to_dict",
    "report_to_text",
    "val_relative_canonical_minus",
    "val_relative_canonical_plus",
    "PRESET_IDS",
    "build",
]
