"""Open and closed prefixes of Sturmian words."""

from .analysis import (
    BoundaryEvent,
    FactorizationReport,
    RunProfile,
    boundary_classify,
    continuant,
    fibonacci_identities_check,
    oc_from_directive,
    reconstruct_from_oc,
    run_lengths_from_directive,
    run_profile,
    semicentral_prefixes,
    square_factorization,
)
from .errors import (
    EmptyWord,
    InsufficientDirective,
    InvalidDirective,
    InvalidOc,
    InvalidWord,
    LengthGuard,
    NotSturmianOc,
    SturmError,
)
from .sturmian import (
    DirectiveSequence,
    StandardSequencePrefix,
    central_prefixes,
    generate_prefix,
    is_bispecial,
    is_central,
    is_finite_sturmian,
    is_left_special,
    is_right_special,
    is_semicentral,
    is_standard,
    reversed_standard_factor,
    standard_sequence,
)
from .words import (
    border_array,
    is_closed,
    is_palindrome,
    longest_border,
    min_period,
    occurrences,
    oc_sequence,
    reversal,
    runs,
    swap_first_letter,
)

__version__ = "0.1.0"
