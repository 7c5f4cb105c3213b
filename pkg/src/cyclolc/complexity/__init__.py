"""k-error linear complexity: exact oracle, closed-form predictor, witness
constructions, and the cross-verification engine."""

from .engine import CheckRow, VerifyReport, class_combo_multiplicity, verify_theorems
from .oracle import DEFAULT_BUDGET, kerror_oracle, kerror_profile, max_joint_multiplicity
from .predictor import Prediction, predict_aux, predict_u
from .results import KErrorResult
from .witness import (
    class_polynomial,
    half_offset_witness,
    lift_even,
    mid_band_witness,
    verify_witness,
    witness_bound,
)

__all__ = [
    "DEFAULT_BUDGET",
    "KErrorResult",
    "Prediction",
    "CheckRow",
    "VerifyReport",
    "kerror_oracle",
    "kerror_profile",
    "max_joint_multiplicity",
    "predict_u",
    "predict_aux",
    "lift_even",
    "verify_witness",
    "witness_bound",
    "mid_band_witness",
    "class_polynomial",
    "half_offset_witness",
    "class_combo_multiplicity",
    "verify_theorems",
]
