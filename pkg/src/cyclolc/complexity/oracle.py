"""Exact k-error linear complexity by support enumeration.

The enumeration runs over supports only: for a fixed support the best
achievable multiplicity pair is a linear-feasibility question solved by the
kernel, so error values never have to be enumerated.  Supports of size
exactly k suffice (feasibility is monotone under support growth), the scan
order is lexicographic, and parallel chunks merge by maximum with the
lex-first achiever, so results are deterministic however the work is split.
"""

from __future__ import annotations

import math
import os
from multiprocessing import Pool
from typing import Iterable, Optional, Sequence

from .. import _kernel
from .._kernel import pure as _pure
from ..errors import BadPeriod
from ..gfp_poly import PolyFp, poly_from_sequence, root_multiplicity
from ..sequences import SequenceFp
from .results import KErrorResult

__all__ = ["DEFAULT_BUDGET", "kerror_oracle", "kerror_profile", "max_joint_multiplicity"]

DEFAULT_BUDGET = 10_000_000

_PARALLEL_THRESHOLD = 300_000  # supports below this are cheaper serial


def _scan_chunk(args):
    prob, k, start, count = args
    return _kernel.scan_range(prob, k, start, count)


def _run_scan(prob, k: int, todo: int, jobs: int):
    """Scan ranks [0, todo); returns the merged kernel tuple."""
    if jobs <= 1 or todo < _PARALLEL_THRESHOLD:
        return _kernel.scan_range(prob, k, 0, todo)
    nchunks = min(jobs * 8, 128)
    step = (todo + nchunks - 1) // nchunks
    chunks = [(prob, k, lo, min(step, todo - lo)) for lo in range(0, todo, step)]
    best = (-1, -1, -1, -1, 0, False)
    visited = 0
    with Pool(processes=jobs) as pool:
        for res in pool.imap(_scan_chunk, chunks):
            visited += res[4]
            if res[0] > best[0]:
                best = res
            if res[5]:  # saturated: later chunks can at most tie at the cap
                pool.terminate()
                break
    return best[0], best[1], best[2], best[3], visited, best[5]


def kerror_oracle(
    s: SequenceFp,
    k: int,
    limit: Optional[int] = DEFAULT_BUDGET,
    jobs: int = 1,
) -> KErrorResult:
    """Exact L_k by scanning all weight-k supports, or a bracket on budget.

    ``limit`` counts supports visited; when the full scan does not fit the
    result is the bracket [0, N - best_found] flagged budget_exceeded,
    never a silently wrong exact value.
    """
    p = s.modulus
    n = s.period
    if n not in (p, 2 * p):
        raise BadPeriod(f"period {n} is neither {p} nor {2 * p}")
    if k < 0:
        raise ValueError("error budget k must be nonnegative")
    k_eff = min(k, n)

    if k_eff >= s.weight:
        # erasing the sequence is the unique cap achiever
        support = tuple(i for i, t in enumerate(s.terms) if t)
        witness = PolyFp(p, tuple((-t) % p for t in s.terms))
        m1 = p if n == 2 * p else 0
        return KErrorResult(
            k=k, lower=0, upper=0, exact=0, method="oracle",
            witness=witness, m0=p, m1=m1, support=support,
        )

    prob = _kernel.build_problem(p, s.terms, n)
    total = math.comb(n, k_eff)
    todo = total if limit is None or total <= limit else limit
    best, bm0, bm1, best_rank, visited, saturated = _run_scan(prob, k_eff, todo, jobs)
    exceeded = todo < total and not saturated

    if best < 0:
        return KErrorResult(
            k=k, lower=0, upper=n, exact=None, method="oracle",
            budget_exceeded=True, supports_visited=visited,
        )

    support = tuple(_pure.unrank_combination(n, k_eff, best_rank))
    values = _pure.solve_error_values(prob, support, bm0, bm1)
    if values is None:
        raise AssertionError("kernel winner is not feasible; kernel bug")
    witness = PolyFp.from_support(p, dict(zip(support, values)))
    if witness.weight > k_eff:
        raise AssertionError("witness weight exceeds the error budget")
    # independent certification of the achieved multiplicities
    reached = poly_from_sequence(s) + witness
    if root_multiplicity(reached, 1, p).multiplicity < bm0 or (
        n == 2 * p and root_multiplicity(reached, -1, p).multiplicity < bm1
    ):
        raise AssertionError("witness fails recheck; kernel bug")

    upper = n - best
    if exceeded:
        return KErrorResult(
            k=k, lower=0, upper=upper, exact=None, method="oracle",
            witness=witness, m0=bm0, m1=bm1, support=support,
            budget_exceeded=True, supports_visited=visited,
        )
    return KErrorResult(
        k=k, lower=upper, upper=upper, exact=upper, method="oracle",
        witness=witness, m0=bm0, m1=bm1, support=support,
        supports_visited=visited,
    )


def kerror_profile(
    s: SequenceFp,
    ks: Iterable[int],
    limit: Optional[int] = DEFAULT_BUDGET,
    jobs: int = 1,
) -> list[KErrorResult]:
    """Oracle rows for each k, spending one shared enumeration budget."""
    remaining = limit
    out = []
    for k in ks:
        res = kerror_oracle(s, k, remaining, jobs)
        if remaining is not None:
            remaining = max(0, remaining - res.supports_visited)
        out.append(res)
    return out


def max_joint_multiplicity(
    poly: PolyFp, support: Iterable[int], period: Optional[int] = None
) -> tuple[int, int, int]:
    """Best (m0, m1, m0 + m1) with errors confined to ``support``.

    The feasibility staircase is monotone: the winning pair and both its
    decrements are checked here as a structural self-test.
    """
    p = poly.modulus
    period = 2 * p if period is None else period
    pos = sorted(set(support))
    if pos and not 0 <= pos[0] <= pos[-1] < period:
        raise ValueError("support positions out of range")
    prob = _kernel.build_problem(p, poly.coeffs, period)
    m0, m1, total = _kernel.best_pair(prob, pos)
    for probe in ((m0, m1), (m0 - 1, m1), (m0, m1 - 1)):
        if probe[0] < 0 or probe[1] < 0:
            continue
        if not _pure.joint_feasible(prob, pos, probe[0], probe[1]):
            raise AssertionError(f"staircase monotonicity violated at {probe}")
    return m0, m1, total
