"""Optimal classical, one-qubit, and entanglement-assisted strategies for
parity-guessing one-bit communication games on balanced question sets."""

from .backends import BACKEND
from .channels import (
    BlochMap,
    SweepResult,
    apply_channel,
    critical_depolarizing,
    crossing_window,
    dephasing_sweep,
)
from .classical import (
    ClassicalStrategy,
    RACStrategy,
    Rational,
    best_decoding,
    best_lift,
    classical_optimum,
    evaluate_classical,
    identity_decoding,
    lift_rac_strategy,
    majority_encoding,
    optimal_rac_strategy,
    per_label_wins,
    rac_optimum,
    rac_value,
)
from .eacc import (
    BellValueReport,
    EACCStrategy,
    classical_embed,
    eacc_seesaw,
    eacc_to_bell,
    evaluate_eacc,
    random_strategy,
    validate_strategy,
)
from .errors import (
    CardinalityMismatchError,
    DimensionMismatchError,
    GracError,
    InvalidEffectError,
    NoCrossingError,
    NotBalancedError,
    UnknownCaseError,
    WidthMismatchError,
    WidthOutOfRangeError,
    WrongCardinalityError,
)
from .mubs import (
    BooleanFn,
    FunctionSet,
    ParityLabel,
    QuadrupleClass,
    are_mutually_unbiased,
    classify_quadruple,
    full_mubs,
    is_balanced,
    is_mubs,
    parity,
    parity_function,
)
from .protocols import REFERENCE_CASES, reference_protocol, reference_value
from .quantum import (
    PMStrategy,
    SeesawReport,
    classical_start_vectors,
    evaluate_pm,
    norm_cancellation_check,
    pm_upper_bound,
    seesaw,
    sign_matrix,
)
from .tables import TABLE_IDS, TableReport, TableRow, representative_set, reproduce_tables

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BellValueReport",
    "BlochMap",
    "BooleanFn",
    "CardinalityMismatchError",
    "ClassicalStrategy",
    "DimensionMismatchError",
    "EACCStrategy",
    "FunctionSet",
    "GracError",
    "InvalidEffectError",
    "NoCrossingError",
    "NotBalancedError",
    "PMStrategy",
    "ParityLabel",
    "QuadrupleClass",
    "REFERENCE_CASES",
    "RACStrategy",
    "Rational",
    "SeesawReport",
    "SweepResult",
    "TABLE_IDS",
    "TableReport",
    "TableRow",
    "UnknownCaseError",
    "WidthMismatchError",
    "WidthOutOfRangeError",
    "WrongCardinalityError",
    "apply_channel",
    "are_mutually_unbiased",
    "best_decoding",
    "best_lift",
    "classical_embed",
    "classical_optimum",
    "classical_start_vectors",
    "classify_quadruple",
    "critical_depolarizing",
    "crossing_window",
    "dephasing_sweep",
    "eacc_seesaw",
    "eacc_to_bell",
    "evaluate_classical",
    "evaluate_eacc",
    "evaluate_pm",
    "full_mubs",
    "identity_decoding",
    "is_balanced",
    "is_mubs",
    "lift_rac_strategy",
    "majority_encoding",
    "norm_cancellation_check",
    "optimal_rac_strategy",
    "parity",
    "parity_function",
    "per_label_wins",
    "pm_upper_bound",
    "rac_optimum",
    "rac_value",
    "random_strategy",
    "reference_protocol",
    "reference_value",
    "representative_set",
    "reproduce_tables",
    "seesaw",
    "sign_matrix",
    "validate_strategy",
    "__version__",
]
