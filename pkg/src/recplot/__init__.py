"""Exact diagonal-line analysis for recurrence plots of binary substitution fixed points."""

from .substitution import (
    PERIODIC_LABELS,
    PERIODIC_VERDICT,
    CaseLabel,
    Classification,
    CommonAffixes,
    Normalization,
    SequencePrefix,
    Substitution,
    SubstitutionError,
    abelianization,
    classify,
    common_affixes,
    fixed_point_prefix,
    is_primitive,
    normalize,
    parse_substitution,
)
from .language import (
    AllowedWordSet,
    CuttingClass,
    CuttingError,
    CuttingReport,
    LanguageError,
    RecognizabilityConstant,
    RecognizabilityError,
    WordNotAllowedError,
    allowed_words,
    classify_cuttings,
    is_recognizable,
    recognizability_constant,
)
from .patterns import (
    BoundaryLinePattern,
    InnerLinePattern,
    LengthResidueMismatch,
    NotDesubstitutableError,
    PatternChain,
    PatternDecodeError,
    PatternError,
    SeparatorType,
    boundary_is_allowed,
    chain,
    desubstitute,
    desubstitute_boundary,
    enumerate_boundary,
    enumerate_inner,
    induce,
    induce_boundary,
    inner_is_allowed,
    separator_type,
)
from .measures import (
    CylinderMeasureTable,
    MeasureError,
    PairCountMatrix,
    PatternNotAllowedError,
    cylinder_measures,
    pair_matrix,
    pair_measures,
    pattern_density,
)
from .densities import (
    PROVENANCE_DIRECT,
    PROVENANCE_EMPTY_RESIDUE,
    PROVENANCE_EMPTY_ROOT,
    PROVENANCE_SCALED,
    DensityError,
    DensityFamily,
    DensityResult,
    FamilySet,
    NonPrimitiveReport,
    SupportReport,
    boundary_length_support,
    density_families,
    length_support,
    line_density,
    nonprimitive_verdict,
)
from .oracle import (
    APERIODIC_VERDICT,
    KIND_BOTH_EDGES,
    KIND_FAR_EDGE,
    KIND_INNER,
    KIND_START_EDGE,
    BoundCheckItem,
    BoundCheckReport,
    BoundViolationError,
    EmpiricalDensity,
    LineRecord,
    OracleError,
    PrefixTooShort,
    bound_checks,
    empirical_density,
    extract_lines,
    infinite_line_screen,
    lines_through_window,
    word_frequencies,
    word_start_count,
)

__version__ = "0.1.0"

__all__ = [
    "APERIODIC_VERDICT",
    "KIND_BOTH_EDGES",
    "KIND_FAR_EDGE",
    "KIND_INNER",
    "KIND_START_EDGE",
    "PERIODIC_LABELS",
    "PERIODIC_VERDICT",
    "PROVENANCE_DIRECT",
    "PROVENANCE_EMPTY_RESIDUE",
    "PROVENANCE_EMPTY_ROOT",
    "PROVENANCE_SCALED",
    "AllowedWordSet",
    "BoundCheckItem",
    "BoundCheckReport",
    "BoundViolationError",
    "BoundaryLinePattern",
    "CaseLabel",
    "Classification",
    "CommonAffixes",
    "CuttingClass",
    "CuttingError",
    "CuttingReport",
    "CylinderMeasureTable",
    "DensityError",
    "DensityFamily",
    "DensityResult",
    "EmpiricalDensity",
    "FamilySet",
    "InnerLinePattern",
    "LanguageError",
    "LengthResidueMismatch",
    "LineRecord",
    "MeasureError",
    "NonPrimitiveReport",
    "Normalization",
    "NotDesubstitutableError",
    "OracleError",
    "PairCountMatrix",
    "PatternChain",
    "PatternDecodeError",
    "PatternError",
    "PatternNotAllowedError",
    "PrefixTooShort",
    "RecognizabilityConstant",
    "RecognizabilityError",
    "SeparatorType",
    "SequencePrefix",
    "Substitution",
    "SubstitutionError",
    "SupportReport",
    "WordNotAllowedError",
    "abelianization",
    "allowed_words",
    "boundary_is_allowed",
    "boundary_length_support",
    "bound_checks",
    "chain",
    "classify",
    "classify_cuttings",
    "common_affixes",
    "cylinder_measures",
    "density_families",
    "desubstitute",
    "desubstitute_boundary",
    "empirical_density",
    "enumerate_boundary",
    "enumerate_inner",
    "extract_lines",
    "fixed_point_prefix",
    "induce",
    "induce_boundary",
    "infinite_line_screen",
    "inner_is_allowed",
    "is_primitive",
    "is_recognizable",
    "length_support",
    "line_density",
    "lines_through_window",
    "nonprimitive_verdict",
    "normalize",
    "pair_matrix",
    "pair_measures",
    "parse_substitution",
    "pattern_density",
    "recognizability_constant",
    "separator_type",
    "word_frequencies",
    "word_start_count",
]
