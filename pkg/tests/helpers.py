"""Shared test utilities, including the value-enumeration brute-force oracle.

The brute oracle enumerates error values as well as supports and measures
multiplicities through the polynomial layer only, so it shares no code
path with the scan kernel it checks.
"""

from __future__ import annotations

import itertools

from cyclolc.gfp_poly import PolyFp, root_multiplicity
from cyclolc.sequences import SequenceFp


def brute_best_pair(p: int, coeffs, n_positions: int, pos) -> tuple[int, int, int]:
    """Best (m0, m1, m0 + m1) over every error assignment on ``pos``."""
    two_sided = n_positions == 2 * p
    best = (0, 0, -1)
    for values in itertools.product(range(p), repeat=len(pos)):
        work = list(coeffs) + [0] * (n_positions - len(coeffs))
        for t, c in zip(pos, values):
            work[t] = (work[t] + c) % p
        f = PolyFp(p, tuple(work))
        m0 = root_multiplicity(f, 1, p).multiplicity
        m1 = root_multiplicity(f, -1, p).multiplicity if two_sided else 0
        if m0 + m1 > best[2]:
            best = (m0, m1, m0 + m1)
    return best


def brute_kerror(s: SequenceFp, k: int) -> int:
    """Exact L_k by enumerating supports and values; small cases only."""
    p = s.modulus
    n = s.period
    best = -1
    for size in range(min(k, n) + 1):
        for pos in itertools.combinations(range(n), size):
            best = max(best, brute_best_pair(p, s.terms, n, pos)[2])
    return n - best
