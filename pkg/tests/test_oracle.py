import math

import pytest

from cyclolc.complexity import kerror_oracle, kerror_profile, max_joint_multiplicity
from cyclolc.gfp_poly import PolyFp, linear_complexity, poly_from_sequence
from cyclolc.number_theory import find_prime_params
from cyclolc.sequences import SequenceFp, Triple, build_q, build_u, build_v, gated_params_for_family
from helpers import brute_kerror


def test_one_error_p5():
    params = find_prime_params(5)
    u = build_u(params, Triple(0, 1, 2))
    res = kerror_oracle(u, 1)
    assert res.exact == 8
    assert res.witness is not None and res.witness.weight <= 1


def test_k0_equals_linear_complexity():
    params, triples = gated_params_for_family(13)
    for seq in (build_u(params, triples[0]), build_q(params, triples[0]), build_v(params, triples[0])):
        assert kerror_oracle(seq, 0).exact == linear_complexity(seq)


def test_low_band_value_p13():
    params, triples = gated_params_for_family(13)
    res = kerror_oracle(build_u(params, triples[0]), 2)
    assert res.exact == 20
    assert res.m0 is not None and res.m1 is not None
    assert res.m0 + res.m1 == 6


def test_oracle_matches_brute_force_p5():
    params = find_prime_params(5)
    u = build_u(params, Triple(0, 1, 2))
    q = build_q(params, Triple(0, 1, 2))
    v = build_v(params, Triple(0, 1, 2))
    for seq in (u, q, v):
        for k in range(0, 4):
            assert kerror_oracle(seq, k).exact == brute_kerror(seq, k), (seq.kind, k)


def test_erasure_shortcut():
    params = find_prime_params(5)
    u = build_u(params, Triple(0, 1, 2))
    res = kerror_oracle(u, u.weight)
    assert res.exact == 0
    assert res.support == tuple(i for i, t in enumerate(u.terms) if t)
    total = poly_from_sequence(u) + res.witness
    assert total.is_zero()
    v = build_v(params, Triple(0, 1, 2))
    assert kerror_oracle(v, 3).exact == 0  # weight(v) = 3 at p = 5


def test_profile_monotone_p5():
    params = find_prime_params(5)
    u = build_u(params, Triple(0, 1, 2))
    rows = kerror_profile(u, range(0, 11))
    vals = [r.exact for r in rows]
    assert vals[0] == 9
    assert all(a >= b for a, b in zip(vals, vals[1:]))
    assert vals[-1] == 0


def test_budget_bracketing():
    params, triples = gated_params_for_family(13)
    u = build_u(params, triples[0])
    res = kerror_oracle(u, 2, limit=50)
    assert res.budget_exceeded
    assert res.exact is None
    assert res.lower == 0
    assert res.upper >= 20  # the bracket upper can only overshoot the truth
    assert res.supports_visited == 50
    strictres = kerror_oracle(u, 2, limit=None)
    assert strictres.exact == 20


def test_parallel_matches_serial():
    params, triples = gated_params_for_family(13)
    u = build_u(params, triples[0])
    serial = kerror_oracle(u, 4, jobs=1)
    import cyclolc.complexity.oracle as om

    old = om._PARALLEL_THRESHOLD
    om._PARALLEL_THRESHOLD = 100  # force chunked path
    try:
        parallel = kerror_oracle(u, 4, jobs=2)
    finally:
        om._PARALLEL_THRESHOLD = old
    assert serial.exact == parallel.exact == 18
    assert serial.support == parallel.support
    assert (serial.m0, serial.m1) == (parallel.m0, parallel.m1)


def test_max_joint_multiplicity_examples():
    params, triples = gated_params_for_family(13)
    su = poly_from_sequence(build_u(params, triples[0]))
    assert max_joint_multiplicity(su, ()) == (3, 0, 3)

    # (x-1)^2 (x+1) over F_13
    f = PolyFp.from_coeffs(13, [1, -1, -1, 1])
    assert max_joint_multiplicity(f, ()) == (2, 1, 3)

    params5 = find_prime_params(5)
    su5 = poly_from_sequence(build_u(params5, Triple(0, 1, 2)))
    assert max_joint_multiplicity(su5, range(10)) == (5, 5, 10)


def test_oracle_validates_period():
    from cyclolc.errors import BadPeriod

    with pytest.raises(BadPeriod):
        kerror_oracle(SequenceFp(modulus=13, period=5, terms=(1, 0, 0, 0, 0)), 1)
    with pytest.raises(ValueError):
        params = find_prime_params(5)
        kerror_oracle(build_u(params, Triple(0, 1, 2)), -1)
