import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclolc.errors import BadPeriod
from cyclolc.gfp_poly import (
    PolyFp,
    binom_mod,
    hasse_eval,
    linear_complexity,
    poly_from_sequence,
    root_multiplicity,
)
from cyclolc.number_theory import find_prime_params
from cyclolc.sequences import SequenceFp, Triple, build_q, build_u, gated_params_for_family


def poly(p, *coeffs):
    return PolyFp.from_coeffs(p, coeffs)


def times(f, g):
    p = f.modulus
    out = [0] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        for j, b in enumerate(g.coeffs):
            out[i + j] = (out[i + j] + a * b) % p
    return PolyFp(p, tuple(out))


def test_poly_from_u5():
    params = find_prime_params(5)
    f = poly_from_sequence(build_u(params, Triple(0, 1, 2)))
    assert f.coeffs == (1, 0, 1, 0, 0, 0, 1, 1, 0, 1)


def test_poly_from_zero_sequence():
    f = poly_from_sequence(SequenceFp(modulus=5, period=5, terms=(0,) * 5))
    assert f.is_zero()


def test_poly_from_q5():
    params = find_prime_params(5)
    f = poly_from_sequence(build_q(params, Triple(0, 1, 2)))
    assert f.coeffs == (1, 1, 2, 0, 1)


def test_hasse_examples():
    f = poly(13, 0, 0, 0, 0, 0, 1)  # x^5
    assert hasse_eval(f, 2, 1) == 10
    cube = times(times(poly(13, 12, 1), poly(13, 12, 1)), poly(13, 12, 1))  # (x-1)^3
    assert hasse_eval(cube, 2, 1) == 0
    assert hasse_eval(cube, 3, 1) == 1
    g = poly(13, 5, 7, 0, 2)
    assert hasse_eval(g, 0, 1) == g.evaluate(1)
    assert hasse_eval(g, 0, -1) == g.evaluate(13 - 1)


def test_binom_mod_lucas():
    import math

    for m in range(0, 40):
        for n in range(0, 40):
            assert binom_mod(m, n, 5) == math.comb(m, n) % 5


def test_root_multiplicity_examples():
    p = 13
    x_minus_1 = poly(p, p - 1, 1)
    x_plus_1 = poly(p, 1, 1)
    f = x_plus_1
    for _ in range(4):
        f = times(f, x_minus_1)
    rep = root_multiplicity(f, 1, 10)
    assert rep.multiplicity == 4 and rep.cofactor_value != 0

    params = find_prime_params(5)
    su = poly_from_sequence(build_u(params, Triple(0, 1, 2)))
    rep = root_multiplicity(su, 1, 5)
    assert rep.multiplicity == 1 and rep.cofactor_value == 4

    zero = PolyFp(5, (0, 0, 0))
    assert root_multiplicity(zero, 1, 5).multiplicity == 5
    assert root_multiplicity(zero, 1, 5).cofactor_value == 0


def test_multiplicity_cap():
    p = 5
    f = poly(p, p - 1, 1)
    for _ in range(3):
        f = times(f, poly(p, p - 1, 1))
    assert root_multiplicity(f, 1, 2).multiplicity == 2


def test_linear_complexity_values():
    params5 = find_prime_params(5)
    assert linear_complexity(build_u(params5, Triple(0, 1, 2))) == 9
    params13, triples13 = gated_params_for_family(13)
    assert linear_complexity(build_u(params13, triples13[0])) == 23
    assert linear_complexity(build_q(params13, triples13[0])) == 10


def test_linear_complexity_delta_and_period():
    delta = SequenceFp(modulus=13, period=13, terms=(1,) + (0,) * 12)
    assert linear_complexity(delta) == 13
    with pytest.raises(BadPeriod):
        linear_complexity(SequenceFp(modulus=13, period=5, terms=(1, 0, 0, 0, 0)))


@pytest.mark.parametrize("p", [5, 13, 29, 37])
def test_natural_multiplicity_split(p):
    # every gated configuration sits at multiplicity (p-1)/4 at +1 and 0 at -1
    params, triples = gated_params_for_family(p)
    for t in triples:
        su = poly_from_sequence(build_u(params, t))
        assert root_multiplicity(su, 1, p).multiplicity == (p - 1) // 4
        assert root_multiplicity(su, -1, p).multiplicity == 0


def test_linear_complexity_shift_invariant():
    params13, triples13 = gated_params_for_family(13)
    u = build_u(params13, triples13[0])
    base = linear_complexity(u)
    for shift in (1, 5, 17):
        rolled = u.terms[shift:] + u.terms[:shift]
        assert linear_complexity(SequenceFp(u.modulus, u.period, rolled)) == base


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=4), st.integers(min_value=0, max_value=3), st.data())
def test_multiplicity_composes(n_extra, m1, data):
    p = 13
    coeffs = data.draw(st.lists(st.integers(0, p - 1), min_size=1, max_size=6))
    f = PolyFp(p, tuple(coeffs))
    base = root_multiplicity(f, 1, 2 * p).multiplicity
    g = f
    for _ in range(n_extra):
        g = times(g, poly(p, p - 1, 1))
    got = root_multiplicity(g, 1, 2 * p).multiplicity
    if f.is_zero():
        assert got == 2 * p
    else:
        assert got == min(2 * p, base + n_extra)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 12), min_size=1, max_size=20))
def test_hasse_agrees_with_division(coeffs):
    p = 13
    f = PolyFp(p, tuple(coeffs))
    for a in (1, -1):
        m = root_multiplicity(f, a, 2 * p).multiplicity
        if m < 2 * p:
            assert all(hasse_eval(f, n, a) == 0 for n in range(m))
            assert hasse_eval(f, m, a) != 0
