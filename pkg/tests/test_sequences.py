import pytest

from cyclolc.errors import NonBinary, NotGated
from cyclolc.gfp_poly import PolyFp, poly_from_sequence, root_multiplicity
from cyclolc.number_theory import find_prime_params
from cyclolc.sequences import (
    SequenceFp,
    Triple,
    X_FORM_TRIPLES,
    Y_FORM_TRIPLES,
    autocorrelation_profile,
    build_q,
    build_u,
    build_v,
    family_triples,
    gate_configuration,
    gated_params_for_family,
)


def test_triple_validation_and_family():
    assert Triple(0, 1, 2).family == "y-form"
    assert Triple(0, 1, 3).family == "x-form"
    assert Triple(1, 0, 2).family == "other"
    assert Triple.parse("1,2,3").as_tuple() == (1, 2, 3)
    with pytest.raises(ValueError):
        Triple(0, 1, 1)
    with pytest.raises(ValueError):
        Triple(0, 1, 4)
    with pytest.raises(ValueError):
        Triple.parse("0,1")
    assert {t.as_tuple() for t in family_triples("x-form")} == set(X_FORM_TRIPLES)
    assert {t.as_tuple() for t in family_triples("y-form")} == set(Y_FORM_TRIPLES)


def test_build_u_examples():
    params = find_prime_params(5)
    assert build_u(params, Triple(0, 1, 2)).terms == (1, 0, 1, 0, 0, 0, 1, 1, 0, 1)
    assert build_u(params, Triple(0, 1, 3)).terms == (1, 0, 1, 1, 0, 0, 1, 1, 0, 0)
    assert build_u(params, Triple(0, 1, 2)).weight == 5
    assert build_u(params, Triple(0, 1, 3)).weight == 5


def test_build_q_v_examples():
    params = find_prime_params(5)
    q = build_q(params, Triple(0, 1, 2))
    v = build_v(params, Triple(0, 1, 2))
    assert q.terms == (1, 1, 2, 0, 1)
    assert v.terms == (1, 1, 0, 0, 4)
    assert sum(v.terms) % 5 == 1


def test_autocorrelation_examples():
    params = find_prime_params(5)
    prof = autocorrelation_profile(build_u(params, Triple(0, 1, 2)))
    assert prof.values[0] == 10
    assert prof.values[1] == -2 and prof.values[2] == -2 and prof.values[3] == 2
    assert prof.optimal

    bad = autocorrelation_profile(build_u(params, Triple(0, 1, 3)))
    assert bad.values[2] == -6
    assert not bad.optimal

    with pytest.raises(NonBinary):
        autocorrelation_profile(build_q(params, Triple(0, 1, 2)))


def test_autocorrelation_invariants():
    params, triples = gated_params_for_family(13)
    prof = autocorrelation_profile(build_u(params, triples[0]))
    n = len(prof.values)
    assert prof.values[0] == n
    assert all(prof.values[tau] == prof.values[n - tau] for tau in range(1, n))
    assert sum(prof.values[1:]) == -n


def test_gate_examples():
    params = find_prime_params(5)
    assert gate_configuration(params, Triple(0, 1, 2)).gated
    res = gate_configuration(params, Triple(0, 1, 3))
    assert not res.gated and res.reason == "autocorrelation"
    relaxed = find_prime_params(61, strict=False)
    assert gate_configuration(relaxed, Triple(0, 1, 2)).reason == "form"


def test_gated_params_retry():
    params, triples = gated_params_for_family(13)
    assert params.theta == 7  # default root 2 gates nothing at 13
    assert all(gate_configuration(params, t).gated for t in triples)
    with pytest.raises(NotGated):
        gated_params_for_family(13, "y-form")  # 13 is not 1 + 4y^2


@pytest.mark.parametrize("p", [5, 13, 29])
def test_balance_all_triples(p):
    params = find_prime_params(p)
    for trio in X_FORM_TRIPLES + Y_FORM_TRIPLES:
        assert build_u(params, Triple(*trio)).weight == p


@pytest.mark.parametrize("p", [5, 13, 29])
@pytest.mark.parametrize("trio", [(0, 1, 2), (0, 1, 3), (1, 2, 0), (1, 2, 3)])
def test_decomposition_identity(p, trio):
    # S_u = (x^p + 1) S_j + x^p S_m + S_l + 1 holds exactly mod x^2p - 1
    from cyclolc.complexity import class_polynomial

    params = find_prime_params(p)
    triple = Triple(*trio)
    su = poly_from_sequence(build_u(params, triple))
    sj = class_polynomial(params, triple.j)
    sm = class_polynomial(params, triple.m)
    sl = class_polynomial(params, triple.l)
    rhs = sj + sj.shift_mod_two_periods(p) + sm.shift_mod_two_periods(p) + sl
    rhs = rhs + PolyFp.from_support(p, {0: 1})
    width = 2 * p
    lhs = tuple(su.coeffs[i] if i < len(su.coeffs) else 0 for i in range(width))
    got = tuple(rhs.coeffs[i] if i < len(rhs.coeffs) else 0 for i in range(width))
    assert lhs == got


@pytest.mark.parametrize("p", [5, 13, 29])
@pytest.mark.parametrize("trio", [(0, 1, 2), (0, 1, 3)])
def test_chain_congruences(p, trio):
    # u folds onto q along (x-1)^p and onto the signed class combination
    # along (x+1)^p; the v companion matches the latter along (x-1)^p
    from cyclolc.complexity import class_polynomial

    params = find_prime_params(p)
    triple = Triple(*trio)
    su = poly_from_sequence(build_u(params, triple))
    sq = poly_from_sequence(build_q(params, triple))
    sv = poly_from_sequence(build_v(params, triple))
    sm = class_polynomial(params, triple.m)
    sl = class_polynomial(params, triple.l)
    one = PolyFp.from_support(p, {0: 1})

    assert root_multiplicity(su - sq, 1, p).multiplicity == p
    odd_side = sl - sm + one
    assert root_multiplicity(su - odd_side, -1, p).multiplicity == p
    even_side = sm - sl + one
    assert root_multiplicity(even_side - sv, 1, p).multiplicity == p
