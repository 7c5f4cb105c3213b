"""Quartic-residue sequences of period 2p over F_p: construction,
autocorrelation optimality, and exact k-error linear complexity.

The package builds the balanced binary sequences indexed by a selector of
three quartic classes, gates configurations by the empirical off-peak
autocorrelation test, and determines their k-error linear complexity three
independent ways: an exact support-enumeration oracle, explicit witness
polynomials, and a closed-form predictor, cross-verified by
:func:`cyclolc.complexity.verify_theorems`.
"""

from ._kernel import BACKEND as KERNEL_BACKEND
from .complexity import (
    KErrorResult,
    Prediction,
    VerifyReport,
    kerror_oracle,
    kerror_profile,
    class_combo_multiplicity,
    max_joint_multiplicity,
    predict_aux,
    predict_u,
    verify_theorems,
    verify_witness,
    witness_bound,
)
from .errors import (
    BadOverride,
    BadPeriod,
    CycloError,
    NoQuarticForm,
    NonBinary,
    NotGated,
    NotPrime,
    NoWitnessFound,
    WrongResidueClass,
)
from .gfp_poly import (
    MultiplicityReport,
    PolyFp,
    hasse_eval,
    linear_complexity,
    poly_from_sequence,
    root_multiplicity,
)
from .number_theory import (
    PrimeParams,
    QuarticClasses,
    crt_inverse,
    enumerate_valid_primes,
    find_prime_params,
    quartic_classes,
)
from .sequences import (
    AutocorrProfile,
    SequenceFp,
    Triple,
    autocorrelation_profile,
    build_q,
    build_u,
    build_v,
    gate_configuration,
    gated_params_for_family,
)

__version__ = "0.1.0"
