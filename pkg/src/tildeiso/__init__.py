"""Isometric words under the swap-and-mismatch edit distance."""

from .distance import (
    EditOp,
    OpKind,
    OpSet,
    apply_op,
    hamming_distance,
    minimal_op_sets,
    tilde_distance,
    tilde_distance_oracle,
)
from .errors import (
    BoundsError,
    BudgetExceededError,
    InapplicableOpError,
    InvalidWordError,
    LengthMismatchError,
    PreconditionError,
    TildeError,
    UnsupportedAlphabetError,
)
from .isometry import (
    ClassificationReport,
    audit_prop2,
    audit_subgraph_distances,
    brute_force_isometric,
    classify,
)
from .overlap import ErrorOverlap, condition_tilde, error_overlaps, ham_error_overlaps, ham_isometric
from .transform import (
    Transformation,
    WitnessVerdict,
    enumerate_minimal_transformations,
    exists_f_free_minimal_transformation,
    is_witness_pair,
)
from .witness import (
    Construction,
    alpha_beta,
    construct_witnesses,
    delta_pair,
    eta_gamma,
    witness_s1eo,
)
from .words import Word, complement, is_f_free, is_factor, prefix, reverse, suffix

__version__ = "0.1.0"
