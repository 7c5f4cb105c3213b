import pytest

from cyclolc.complexity import kerror_profile, predict_aux, predict_u
from cyclolc.errors import NotGated
from cyclolc.number_theory import find_prime_params
from cyclolc.sequences import Triple, build_q, build_u, build_v, gated_params_for_family


def exact(pred):
    assert pred.kind == "exact", pred
    return pred.value


def bounds(pred):
    assert pred.kind == "range", pred
    return pred.lo, pred.hi


def test_predict_u_band_table_p13():
    params, triples = gated_params_for_family(13)
    t = triples[0]
    assert exact(predict_u(params, t, 0)) == 23
    assert exact(predict_u(params, t, 1)) == 23
    assert exact(predict_u(params, t, 2)) == 20
    assert bounds(predict_u(params, t, 3)) == (17, 20)
    # the mid-band upper bound has no support below the witness weight at
    # p = 13, so k = 4 stays a range (the spec's collapsed value 14 is
    # refuted by the oracle; see the acceptance suite)
    assert bounds(predict_u(params, t, 4)) == (14, 20)
    assert bounds(predict_u(params, t, 5)) == (7, 14)
    assert predict_u(params, t, 6).hi == 14
    assert predict_u(params, t, 8).hi == 8
    assert predict_u(params, t, 13).lo == 0


def test_predict_u_exact_values_large_p():
    params29, triples29 = gated_params_for_family(29)
    t29 = triples29[0]
    assert exact(predict_u(params29, t29, 9)) == 30
    assert bounds(predict_u(params29, t29, 7)) == (38, 44)
    assert bounds(predict_u(params29, t29, 8)) == (30, 44)
    for k in range(2, 7):
        assert exact(predict_u(params29, t29, k)) == 44

    params37, triples37 = gated_params_for_family(37)
    t37 = triples37[0]
    assert t37.family == "y-form"
    for k in (10, 11):
        assert exact(predict_u(params37, t37, k)) == 47
    for k in range(2, 9):
        assert exact(predict_u(params37, t37, k)) == 56


def test_predict_u_one_error_p5():
    params = find_prime_params(5)
    assert exact(predict_u(params, Triple(0, 1, 2), 1)) == 8
    assert exact(predict_u(params, Triple(0, 1, 2), 0)) == 9


def test_predict_u_not_gated():
    params = find_prime_params(13)  # default root gates nothing at 13
    with pytest.raises(NotGated):
        predict_u(params, Triple(0, 1, 3), 2)


def test_predict_aux_q_table():
    assert predict_aux("q", 29, 9).value == 15
    assert predict_aux("q", 29, 0).value == 22
    assert (predict_aux("q", 13, 5).lo, predict_aux("q", 13, 5).hi) == (4, 7)
    assert predict_aux("q", 13, 6).value == 1
    assert predict_aux("q", 13, 8).value == 1
    assert predict_aux("q", 13, 10).value == 0


def test_predict_aux_v_table():
    assert predict_aux("v", 29, 0).value == 29
    assert predict_aux("v", 29, 20).value == 0
    assert predict_aux("v", 29, 3).value == 22
    assert (predict_aux("v", 13, 3).lo, predict_aux("v", 13, 3).hi) == (7, 10)
    assert predict_aux("v", 13, 6).kind == "unknown"
    # window start below the quarter-band witness weight keeps only the
    # lower bound (L_4(v) = 7 exceeds the nominal upper bound at p = 13)
    four = predict_aux("v", 13, 4)
    assert four.lo == 3 and four.hi == 13
    five = predict_aux("v", 13, 5)
    assert (five.lo, five.hi) == (3, 6)
    with pytest.raises(ValueError):
        predict_aux("w", 13, 0)


@pytest.mark.parametrize("kind", ["q", "v"])
def test_aux_predictions_contain_oracle_p13(kind):
    params, triples = gated_params_for_family(13)
    builder = build_q if kind == "q" else build_v
    seq = builder(params, triples[0])
    for row in kerror_profile(seq, range(0, 14), limit=None):
        pred = predict_aux(kind, 13, row.k)
        assert pred.contains(row.exact), (kind, row.k, row.exact, pred)
        if row.exact == 0:
            break


def test_u_predictions_contain_oracle_p5():
    params = find_prime_params(5)
    u = build_u(params, Triple(0, 1, 2))
    for row in kerror_profile(u, range(0, 11), limit=None):
        pred = predict_u(params, Triple(0, 1, 2), row.k)
        assert pred.contains(row.exact), (row.k, row.exact, pred)
