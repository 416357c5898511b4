"""Genus ranges of thickened chord diagrams.

Thicken the backbone circle of a chord diagram to an annulus and each
chord to a band; every band end may be attached to the inner or outer
boundary circle, giving 4^n orientable surfaces.  This package computes
the resulting genus values, exhaustive per-n tables of genus ranges up
to word equivalence, end-edge classifications driving the connected-sum
law, conjecture checks, and witness constructions realizing prescribed
ranges, plus a command-line front end (``chordgenus``).
"""

from .errors import (
    AttachmentLengthError,
    BudgetExceededError,
    ChordGenusError,
    EmptyRestrictionError,
    EmptyWordError,
    EnumerationLimitError,
    GapDetectedError,
    MalformedTokenError,
    NotDoubleOccurrenceError,
    NotGuaranteedError,
    TracingConsistencyError,
    VerificationFailedError,
    WordSyntaxError,
)
from .words import (
    ChordPairing,
    ChordWord,
    EquivalenceClass,
    canonical_form,
    concat,
    concat_all,
    contains_nested_triple,
    enumerate_words,
    equivalence_class,
    equivalent,
    genus_doubling_block,
    interleaved_pairs,
    isolated_chords,
    parse,
    power,
    repeated_sequence,
    restrict,
)
from .surface import (
    AttachmentConfig,
    EndEdgeTracing,
    FaceDecomposition,
    RotationSystem,
    Side,
    boundary_count,
    build_rotation_system,
    end_edge_trace,
    genus,
    genus_from_boundary_count,
    trace_faces,
)
from .ranges import (
    ConjectureReport,
    ConnectedSumCheck,
    EndEdgeClass,
    GenusProfile,
    GenusRange,
    RangeTable,
    WitnessResult,
    check_conjectures,
    check_nested_triple_bound,
    classify_end_edge,
    connected_sum_check,
    genus_profile,
    genus_range,
    range_table,
    realization_chart,
    theorem_guarantees,
    witness,
)

__version__ = "0.1.0"

__all__ = [
    "AttachmentConfig",
    "AttachmentLengthError",
    "BudgetExceededError",
    "ChordGenusError",
    "ChordPairing",
    "ChordWord",
    "ConjectureReport",
    "ConnectedSumCheck",
    "EmptyRestrictionError",
    "EmptyWordError",
    "EndEdgeClass",
    "EndEdgeTracing",
    "EnumerationLimitError",
    "EquivalenceClass",
    "FaceDecomposition",
    "GapDetectedError",
    "GenusProfile",
    "GenusRange",
    "MalformedTokenError",
    "NotDoubleOccurrenceError",
    "NotGuaranteedError",
    "RangeTable",
    "RotationSystem",
    "Side",
    "TracingConsistencyError",
    "VerificationFailedError",
    "WitnessResult",
    "WordSyntaxError",
    "boundary_count",
    "build_rotation_system",
    "canonical_form",
    "check_conjectures",
    "check_nested_triple_bound",
    "classify_end_edge",
    "concat",
    "concat_all",
    "connected_sum_check",
    "contains_nested_triple",
    "end_edge_trace",
    "enumerate_words",
    "equivalence_class",
    "equivalent",
    "genus",
    "genus_doubling_block",
    "genus_from_boundary_count",
    "genus_profile",
    "genus_range",
    "interleaved_pairs",
    "isolated_chords",
    "parse",
    "power",
    "range_table",
    "realization_chart",
    "repeated_sequence",
    "restrict",
    "theorem_guarantees",
    "trace_faces",
    "witness",
]
