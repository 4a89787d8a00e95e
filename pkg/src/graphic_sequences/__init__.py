from .bounds import (
    BoundComparison,
    BoundVerdict,
    Outcome,
    PipelineTrace,
    Reason,
    Stage,
    Verdict,
    bound_comparison,
    classify,
    cz_check,
    cz_reordered_check,
    near_regular_check,
    reordered_sides,
    zz_check,
)
from .eg import EgVerdict, IndexSet, durfee_number, eg_full, eg_inequality, eg_reduced, reduction_indices
from .errors import (
    DegenerateDenominator,
    DegreeExceedsOrder,
    DegreeOutOfRange,
    EmptySequence,
    InfeasibleStats,
    NegativeDegree,
    NotCanonical,
    OracleDisagreement,
    ParameterTooSmall,
    RegularSequence,
)
from .gen import (
    Perturbation,
    SharpnessInstance,
    mixed_corpus,
    random_degree_sequence,
    random_with_stats,
    sharpness_family,
)
from .oracle import CrossCheckReport, Realization, cross_check, enumerate_sequences, havel_hakimi, verify_realization
from .seq_core import (
    DegreeSequence,
    Direction,
    MajorizationResult,
    SequenceStats,
    canonicalize,
    complement,
    majorizes,
    prefix_sums,
    stats,
    strip_zeros,
    threshold_majorant,
)
