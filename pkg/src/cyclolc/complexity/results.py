"""Result records shared by the oracle, witness constructors and predictor."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..gfp_poly import PolyFp

__all__ = ["KErrorResult"]


@dataclass(frozen=True)
class KErrorResult:
    """Per-k complexity facts with provenance.

    ``exact`` is set iff lower == upper.  ``witness``, when present, is an
    error polynomial of weight <= k whose addition reaches multiplicities
    (m0, m1), certifying upper = period - m0 - m1.  ``support`` is the
    enumerated support the oracle charged the witness to (first in lex
    order among the optima).
    """

    k: int
    lower: int
    upper: int
    exact: Optional[int]
    method: str
    witness: Optional[PolyFp] = None
    m0: Optional[int] = None
    m1: Optional[int] = None
    support: Optional[tuple[int, ...]] = None
    budget_exceeded: bool = False
    supports_visited: int = 0

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError("lower bound exceeds upper bound")
        if (self.exact is not None) != (self.lower == self.upper):
            raise ValueError("exact must be present iff lower == upper")
        if self.exact is not None and self.exact != self.upper:
            raise ValueError("exact must equal the collapsed bounds")
