"""Support-scan kernel selection.

The compiled extension (built from ``_fast.pyx``) and the pure-Python
module implement the same contract; the compiled one is picked when it
imported cleanly.  ``BACKEND`` records the choice so benchmarks and
diagnostics can report it.
"""

from .pure import (
    ScanProblem,
    build_problem,
    joint_feasible,
    next_combination,
    solve_error_values,
    unrank_combination,
)
from . import pure

try:
    from . import _fast

    scan_range = _fast.scan_range
    best_pair = _fast.best_pair
    BACKEND = "compiled"
except ImportError:  # extension not built; fall back to the reference kernel
    scan_range = pure.scan_range
    best_pair = pure.best_pair
    BACKEND = "pure"

__all__ = [
    "BACKEND",
    "ScanProblem",
    "build_problem",
    "scan_range",
    "best_pair",
    "joint_feasible",
    "solve_error_values",
    "unrank_combination",
    "next_combination",
    "pure",
]
