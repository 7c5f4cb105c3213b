"""Cross-checks between the compiled and pure kernels, and of both against
the value-enumeration brute force."""

import itertools
import math
import random

import pytest

from cyclolc import _kernel
from cyclolc._kernel import pure
from cyclolc.gfp_poly import PolyFp, root_multiplicity
from helpers import brute_best_pair

HAVE_COMPILED = _kernel.BACKEND == "compiled"


def test_compiled_backend_present():
    # the production suite depends on the extension; fail loudly if the
    # build silently fell back
    assert HAVE_COMPILED, "compiled kernel missing; run pip install -e . --no-build-isolation"


def test_unrank_matches_itertools():
    for n, k in ((6, 3), (8, 0), (8, 1), (9, 4), (10, 5)):
        combos = list(itertools.combinations(range(n), k))
        for rank, combo in enumerate(combos):
            assert tuple(pure.unrank_combination(n, k, rank)) == combo
    with pytest.raises(ValueError):
        pure.unrank_combination(6, 3, math.comb(6, 3))


def test_next_combination_walks_lex_order():
    n, k = 9, 4
    pos = pure.unrank_combination(n, k, 0)
    seen = [tuple(pos)]
    while pure.next_combination(pos, n):
        seen.append(tuple(pos))
    assert seen == list(itertools.combinations(range(n), k))


def _random_problem(rng, p, n):
    coeffs = [rng.randrange(p) for _ in range(n)]
    return pure.build_problem(p, coeffs, n), coeffs


@pytest.mark.parametrize("p,n", [(5, 10), (13, 26), (13, 13), (29, 58)])
def test_pure_matches_compiled(p, n):
    if not HAVE_COMPILED:
        pytest.skip("extension not built")
    from cyclolc._kernel import _fast

    rng = random.Random(p * 1000 + n)
    prob, _ = _random_problem(rng, p, n)
    for _ in range(250):
        k = rng.randint(0, min(9, n))
        pos = sorted(rng.sample(range(n), k))
        assert pure.best_pair(prob, pos) == _fast.best_pair(prob, pos)
    for k in range(0, 4):
        cnt = min(math.comb(n, k), 400)
        assert pure.scan_range(prob, k, 0, cnt) == _fast.scan_range(prob, k, 0, cnt)


@pytest.mark.parametrize("p,n", [(5, 10), (5, 5), (7, 14)])
def test_kernel_matches_brute_force(p, n):
    rng = random.Random(n * 31 + p)
    for trial in range(4):
        prob, coeffs = _random_problem(rng, p, n)
        for _ in range(25):
            k = rng.randint(0, 3)
            pos = sorted(rng.sample(range(n), k))
            got = _kernel.best_pair(prob, pos)
            want = brute_best_pair(p, coeffs, n, pos)
            assert got[2] == want[2], (coeffs, pos, got, want)


def test_scan_range_chunking_is_consistent():
    rng = random.Random(99)
    prob, _ = _random_problem(rng, 13, 26)
    k = 3
    total = math.comb(26, k)
    whole = _kernel.scan_range(prob, k, 0, total)
    # piecewise scan merged the oracle's way must agree
    best = (-1, -1, -1, -1)
    visited = 0
    for start in range(0, total, 500):
        cnt = min(500, total - start)
        res = _kernel.scan_range(prob, k, start, cnt)
        visited += res[4]
        if res[0] > best[0]:
            best = res[:4]
    assert visited == total
    assert best == whole[:4]


def test_solve_error_values_reaches_pair():
    rng = random.Random(5)
    p, n = 13, 26
    prob, coeffs = _random_problem(rng, p, n)
    for _ in range(40):
        k = rng.randint(0, 6)
        pos = sorted(rng.sample(range(n), k))
        m0, m1, _ = _kernel.best_pair(prob, pos)
        values = pure.solve_error_values(prob, pos, m0, m1)
        assert values is not None
        work = list(coeffs)
        for t, c in zip(pos, values):
            work[t] = (work[t] + c) % p
        reached = PolyFp(p, tuple(work))
        assert root_multiplicity(reached, 1, p).multiplicity >= m0
        assert root_multiplicity(reached, -1, p).multiplicity >= m1


def test_joint_feasible_monotone():
    rng = random.Random(17)
    p, n = 13, 26
    prob, _ = _random_problem(rng, p, n)
    for _ in range(30):
        k = rng.randint(1, 6)
        pos = sorted(rng.sample(range(n), k))
        m0, m1, _ = _kernel.best_pair(prob, pos)
        assert pure.joint_feasible(prob, pos, m0, m1)
        if m0 > 0:
            assert pure.joint_feasible(prob, pos, m0 - 1, m1)
        if m1 > 0:
            assert pure.joint_feasible(prob, pos, m0, m1 - 1)
