"""Segments, patterns and typical words of the Thue-Morse sequence."""

from .avoidance import (
    GeneratorSet,
    Witness,
    contains_pattern_instance,
    find_ideal_instance,
    find_witness,
    is_avoided_via_ideal,
    is_unavoidable_binary,
    shur_generators,
    suffix_divergence,
)
from .errors import (
    AlphabetMismatchError,
    EmptyWordError,
    InternalConsistencyError,
    NotASegmentError,
    OutOfRangeError,
    TMError,
)
from .morphisms import IDENTITY, MU, XI, Morphism, apply, compose, enumerate_morphisms, in_mu_xi_monoid, mu_power
from .thuemorse import (
    TmPrefix,
    aligned_occurrences,
    classify_square_root,
    is_segment,
    is_special,
    min_generation,
    minimality_witness,
    mu_preimage,
    recurrence_window,
    segments_of_length,
    tm_prefix,
)
from .typicality import (
    AtypicalSemigroup,
    TypicalityVerdict,
    Verdict,
    atypical_words,
    brute_force_atypical_check,
    build_s0,
    classify,
    export_jorder_dot,
    satisfies_length3_criterion,
    segment_preservation_check,
)
from .words import (
    BINARY,
    Alphabet,
    Word,
    contains_factor,
    exchange,
    has_cube,
    has_overlap,
    last_letter,
    reverse,
    variants,
)

__version__ = "0.1.0"
