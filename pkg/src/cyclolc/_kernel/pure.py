"""Pure-Python twin of the compiled support-scan kernel.

``cyclolc._kernel`` selects the compiled module from ``_fast.pyx`` when it
is available and falls back to this one; both implement exactly the same
contract and are cross-checked against each other in the test suite.

Per support the best achievable multiplicity pair (m0 at x = 1, m1 at
x = -1) is found through a residue decomposition mod p: positions t and
t + p act on the two constraint chains through the same binomial columns
C(t mod p, n), so the unknowns collapse to one value per distinct residue
(plus an extra one per residue hit twice).  The first r rows of either
chain then form a generalized Vandermonde matrix at distinct nodes, which
is always invertible, so each support costs one small square solve plus
short violation scans; only the rare coupled middle of the staircase needs
an explicit feasibility search.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "ScanProblem",
    "build_problem",
    "unrank_combination",
    "next_combination",
    "best_pair",
    "scan_range",
    "joint_feasible",
    "solve_error_values",
]


@dataclass(frozen=True)
class ScanProblem:
    """Precomputed constraint data for one target polynomial."""

    p: int
    n_positions: int
    two_sided: bool
    cap_sum: int
    binom: tuple[tuple[int, ...], ...]  # binom[a][n] = C(a, n) mod p for a, n < p
    bplus: tuple[int, ...]  # rhs of the x = 1 chain
    bminus: tuple[int, ...]  # rhs of the x = -1 chain (zeros when one-sided)
    shalf: tuple[int, ...]  # (bplus + bminus) / 2: even-position pins
    thalf: tuple[int, ...]  # (bplus - bminus) / 2: odd-position pins


def build_problem(p: int, coeffs, n_positions: int) -> ScanProblem:
    """Tables for the scan: binomials mod p and both chains' right-hand sides."""
    if n_positions not in (p, 2 * p):
        raise ValueError("n_positions must be p or 2p")
    two_sided = n_positions == 2 * p
    binom = [[0] * p for _ in range(p)]
    binom[0][0] = 1
    for a in range(1, p):
        row, prev = binom[a], binom[a - 1]
        row[0] = 1
        for n in range(1, a + 1):
            row[n] = (prev[n - 1] + prev[n]) % p
    bplus = [0] * p
    bminus = [0] * p
    for i, c in enumerate(coeffs):
        if not c:
            continue
        rho = i % p
        row = binom[rho]
        for n in range(rho + 1):
            b = row[n]
            if b:
                bplus[n] = (bplus[n] - b * c) % p
                if two_sided:
                    # sign (-1)^(i+1): odd positions add, even subtract
                    bminus[n] = (bminus[n] + b * c if i & 1 else bminus[n] - b * c) % p
    inv2 = pow(2, p - 2, p)
    shalf = tuple((bplus[n] + bminus[n]) * inv2 % p for n in range(p))
    thalf = tuple((bplus[n] - bminus[n]) * inv2 % p for n in range(p))
    return ScanProblem(
        p=p,
        n_positions=n_positions,
        two_sided=two_sided,
        cap_sum=2 * p if two_sided else p,
        binom=tuple(tuple(r) for r in binom),
        bplus=tuple(bplus),
        bminus=tuple(bminus),
        shalf=shalf,
        thalf=thalf,
    )


def unrank_combination(n: int, k: int, rank: int) -> list[int]:
    """Lexicographic unranking of k-subsets of range(n)."""
    if not 0 <= rank < math.comb(n, k):
        raise ValueError("rank out of range")
    pos = []
    v = 0
    for slot in range(k):
        while True:
            c = math.comb(n - v - 1, k - slot - 1)
            if rank < c:
                break
            rank -= c
            v += 1
        pos.append(v)
        v += 1
    return pos


def next_combination(pos: list[int], n: int) -> bool:
    """Advance a sorted k-subset of range(n) to its lex successor in place."""
    k = len(pos)
    i = k - 1
    while i >= 0 and pos[i] == n - k + i:
        i -= 1
    if i < 0:
        return False
    pos[i] += 1
    for j in range(i + 1, k):
        pos[j] = pos[j - 1] + 1
    return True


def _solve_prefix(binom, nodes, rhs_tables, p):
    """Solve rows n = 0..r-1 of sum_i C(nodes[i], n) x_i = rhs[n].

    The matrix is a generalized Vandermonde at distinct nodes, hence
    invertible; one elimination serves every rhs table.
    """
    r = len(nodes)
    if r == 0:
        return [[] for _ in rhs_tables]
    nrhs = len(rhs_tables)
    w = r + nrhs
    a = [
        [binom[nodes[i]][n] for i in range(r)] + [rhs[n] for rhs in rhs_tables]
        for n in range(r)
    ]
    for col in range(r):
        piv = col
        while not a[piv][col]:
            piv += 1
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
        prow = a[col]
        inv = pow(prow[col], p - 2, p)
        for cc in range(col, w):
            prow[cc] = prow[cc] * inv % p
        for rr in range(r):
            if rr != col and a[rr][col]:
                f = a[rr][col]
                xrow = a[rr]
                for cc in range(col, w):
                    xrow[cc] = (xrow[cc] - f * prow[cc]) % p
    return [[a[i][r + j] for i in range(r)] for j in range(nrhs)]


def _first_violation(binom, nodes, sol, rhs, p, start):
    """First order n >= start where the pinned solution misses rhs[n]; p if none."""
    for n in range(start, p):
        acc = 0
        for i, node in enumerate(nodes):
            acc += binom[node][n] * sol[i]
        if acc % p != rhs[n]:
            return n
    return p


def _decompose(p, pos):
    """Residue structure of a support.

    Returns distinct residues in first-seen order, a per-residue kind
    (0 lone even position, 1 lone odd, 2 both), and the residue lists of
    the even and odd positions separately.
    """
    rez, kind = [], []
    index = {}
    evens, odds = [], []
    for t in pos:
        rho = t if t < p else t - p
        if t & 1:
            odds.append(rho)
        else:
            evens.append(rho)
        if rho in index:
            kind[index[rho]] = 2
        else:
            index[rho] = len(rez)
            rez.append(rho)
            kind.append(t & 1)
    return rez, kind, evens, odds


def _reduced_rhs(prob, rez, kind, pinned, base):
    """Fold the pinned lone-position values into a chain's right-hand side."""
    p = prob.p
    binom = prob.binom
    out = []
    for n in range(p):
        acc = base[n]
        for i, rho in enumerate(rez):
            kd = kind[i]
            if kd == 2:
                continue
            term = binom[rho][n] * pinned[i]
            acc = acc - term if kd == 0 else acc + term
        out.append(acc % p)
    return out


def _joint_rows(prob, rez, kind, doubles, m0, m1):
    """Augmented rows of the coupled system in the A/B variables.

    Variables: one A per distinct residue, then one B per doubled residue.
    A carries the x = 1 chain; on the x = -1 chain lone positions act as
    +-A (sign by parity) and doubled residues act through their B.
    """
    p = prob.p
    binom = prob.binom
    r = len(rez)
    d = len(doubles)
    nvars = r + d
    bcol = {idx: r + spot for spot, idx in enumerate(doubles)}
    rows = []
    for n in range(m0):
        rows.append([binom[rho][n] for rho in rez] + [0] * d + [prob.bplus[n]])
    for n in range(m1):
        row = [0] * (nvars + 1)
        for i, rho in enumerate(rez):
            c = binom[rho][n]
            if kind[i] == 2:
                row[bcol[i]] = c
            elif kind[i] == 0:
                row[i] = c
            else:
                row[i] = (p - c) % p
        row[nvars] = prob.bminus[n]
        rows.append(row)
    return rows, nvars


def _eliminate(rows, nvars, p):
    """Gauss-Jordan on augmented rows; None if inconsistent, else (rows, pivots)."""
    pivots = []
    rank = 0
    for col in range(nvars):
        piv = None
        for rr in range(rank, len(rows)):
            if rows[rr][col]:
                piv = rr
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        inv = pow(prow[col], p - 2, p)
        for cc in range(col, nvars + 1):
            prow[cc] = prow[cc] * inv % p
        for rr in range(len(rows)):
            if rr != rank and rows[rr][col]:
                f = rows[rr][col]
                xrow = rows[rr]
                for cc in range(col, nvars + 1):
                    xrow[cc] = (xrow[cc] - f * prow[cc]) % p
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    for rr in range(rank, len(rows)):
        if rows[rr][nvars]:
            return None
    return rows[:rank], pivots


def best_pair(prob: ScanProblem, pos, floor: int = -1):
    """Best (m0, m1, m0 + m1) achievable with errors confined to ``pos``.

    With ``floor`` >= 0 the coupled-middle search is cut off once it cannot
    beat the floor; the returned total is then exact only if it exceeds the
    floor, which is all a running-maximum scan needs.
    """
    p = prob.p
    binom = prob.binom
    if not prob.two_sided:
        r = len(pos)
        (sol,) = _solve_prefix(binom, pos, [prob.bplus], p)
        c0 = _first_violation(binom, pos, sol, prob.bplus, p, r)
        return c0, 0, c0

    rez, kind, evens, odds = _decompose(p, pos)
    r = len(rez)
    a_sol, b_sol = _solve_prefix(binom, rez, [prob.bplus, prob.bminus], p)
    c0 = _first_violation(binom, rez, a_sol, prob.bplus, p, r)
    c1 = _first_violation(binom, rez, b_sol, prob.bminus, p, r)

    doubles = [i for i in range(r) if kind[i] == 2]
    dbl_nodes = [rez[i] for i in doubles]
    d = len(dbl_nodes)

    # m0 >= r pins every A; the other chain keeps only the doubled B free.
    rhs1 = _reduced_rhs(prob, rez, kind, a_sol, prob.bminus)
    (bd_sol,) = _solve_prefix(binom, dbl_nodes, [rhs1], p)
    c1pp = _first_violation(binom, dbl_nodes, bd_sol, rhs1, p, d)
    sum1 = c0 + c1pp

    # symmetric branch: m1 >= r pins every B.
    rhs2 = _reduced_rhs(prob, rez, kind, b_sol, prob.bplus)
    (ad_sol,) = _solve_prefix(binom, dbl_nodes, [rhs2], p)
    c0pp = _first_violation(binom, dbl_nodes, ad_sol, rhs2, p, d)
    sum2 = c1 + c0pp

    if sum1 >= sum2:
        best, bm0, bm1 = sum1, c0, c1pp
    else:
        best, bm0, bm1 = sum2, c0pp, c1

    # coupled middle: both m0, m1 < r.  For n < min(m0, m1) the even- and
    # odd-position sums are pinned separately, which bounds the min by the
    # first violation of either pinned half.
    m0cap = min(c0, r - 1)
    m1cap = min(c1, r - 1)
    limit = max(best, floor)
    if m0cap >= 0 and m1cap >= 0 and m0cap + m1cap > limit:
        (e_sol,) = _solve_prefix(binom, evens, [prob.shalf], p)
        ge = _first_violation(binom, evens, e_sol, prob.shalf, p, len(evens))
        (o_sol,) = _solve_prefix(binom, odds, [prob.thalf], p)
        go = _first_violation(binom, odds, o_sol, prob.thalf, p, len(odds))
        gamma = min(ge, go)
        ub3 = min(m0cap + m1cap, gamma + max(m0cap, m1cap))
        done = False
        for total in range(ub3, limit, -1):
            for m0 in range(min(m0cap, total), max(0, total - m1cap) - 1, -1):
                m1 = total - m0
                if min(m0, m1) > gamma:
                    continue
                rows, nvars = _joint_rows(prob, rez, kind, doubles, m0, m1)
                if _eliminate(rows, nvars, p) is not None:
                    best, bm0, bm1 = total, m0, m1
                    done = True
                    break
            if done:
                break
    return bm0, bm1, best


def scan_range(prob: ScanProblem, k: int, start: int, count: int):
    """Scan ``count`` lex-consecutive k-subsets starting at rank ``start``.

    Returns (best_sum, best_m0, best_m1, best_rank, visited, saturated);
    the recorded support is the first one in lex order achieving the
    maximum, and the scan stops early only once the cap is reached (no
    later support can then do better, and the cap achiever is unique).
    """
    n = prob.n_positions
    pos = unrank_combination(n, k, start)
    best = -1
    bm0 = bm1 = -1
    best_rank = -1
    visited = 0
    saturated = False
    rank = start
    for _ in range(count):
        m0, m1, total = best_pair(prob, pos, best)
        visited += 1
        if total > best:
            best, bm0, bm1, best_rank = total, m0, m1, rank
            if best >= prob.cap_sum:
                saturated = True
                break
        rank += 1
        if not next_combination(pos, n):
            break
    return best, bm0, bm1, best_rank, visited, saturated


def joint_feasible(prob: ScanProblem, pos, m0: int, m1: int) -> bool:
    """Can errors on ``pos`` push the multiplicities to at least (m0, m1)?"""
    if not prob.two_sided:
        if m1 > 0:
            raise ValueError("one-sided problems have no x = -1 chain")
        rows = [
            [prob.binom[t][n] for t in pos] + [prob.bplus[n]] for n in range(m0)
        ]
        return _eliminate(rows, len(pos), prob.p) is not None
    rez, kind, _, _ = _decompose(prob.p, pos)
    doubles = [i for i in range(len(rez)) if kind[i] == 2]
    rows, nvars = _joint_rows(prob, rez, kind, doubles, m0, m1)
    return _eliminate(rows, nvars, prob.p) is not None


def solve_error_values(prob: ScanProblem, pos, m0: int, m1: int):
    """One error assignment on ``pos`` reaching (m0, m1), or None.

    Free variables are set to zero, so the result is deterministic; values
    are returned in the order of ``pos``.
    """
    p = prob.p
    if not prob.two_sided:
        if m1 > 0:
            raise ValueError("one-sided problems have no x = -1 chain")
        rows = [
            [prob.binom[t][n] for t in pos] + [prob.bplus[n]] for n in range(m0)
        ]
        solved = _eliminate(rows, len(pos), p)
        if solved is None:
            return None
        red, pivots = solved
        values = [0] * len(pos)
        for i, col in enumerate(pivots):
            values[col] = red[i][len(pos)]
        return values

    rez, kind, _, _ = _decompose(p, pos)
    r = len(rez)
    doubles = [i for i in range(r) if kind[i] == 2]
    rows, nvars = _joint_rows(prob, rez, kind, doubles, m0, m1)
    solved = _eliminate(rows, nvars, p)
    if solved is None:
        return None
    red, pivots = solved
    x = [0] * nvars
    for i, col in enumerate(pivots):
        x[col] = red[i][nvars]
    a_vals = x[:r]
    b_vals = {doubles[i]: x[r + i] for i in range(len(doubles))}
    inv2 = pow(2, p - 2, p)
    index = {}
    for t in pos:
        rho = t if t < p else t - p
        index.setdefault(rho, len(index))
    values = []
    for t in pos:
        rho = t if t < p else t - p
        i = index[rho]
        if kind[i] != 2:
            values.append(a_vals[i])
        else:
            b = b_vals[i]
            if t & 1:
                values.append((a_vals[i] - b) * inv2 % p)
            else:
                values.append((a_vals[i] + b) * inv2 % p)
    return values
