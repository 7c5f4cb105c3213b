import pytest

from cyclolc.complexity import class_combo_multiplicity, verify_theorems
from cyclolc.number_theory import find_prime_params
from cyclolc.sequences import Triple, gated_params_for_family


def test_full_report_p13():
    report = verify_theorems(13, budget=2_000_000, jobs=2)
    fails = [c for c in report.checks if c.status == "fail"]
    assert report.all_passed, fails
    names = {c.name for c in report.checks}
    assert "class-multiplicity" in names
    assert any(n.startswith("one-error") for n in names)
    assert any(n.startswith("witness-certified") for n in names)
    assert "random-class-combos" in names


def test_report_rejects_wrong_form():
    report = verify_theorems(17)
    assert not report.all_passed
    assert report.checks[0].name == "prime-form"
    assert report.checks[0].status == "fail"


def test_report_marks_budget():
    report = verify_theorems(29, budget=100)
    assert report.budget_exhausted
    assert report.all_passed  # nothing checked may fail, much is skipped


def test_pinned_configuration():
    report = verify_theorems(13, triple=Triple(0, 1, 3), theta=2)
    gate_rows = [c for c in report.checks if c.name.startswith("gate")]
    assert gate_rows and gate_rows[0].status == "fail"
    assert not report.all_passed


def test_class_combo_examples():
    params, _ = gated_params_for_family(13)
    assert class_combo_multiplicity((0, 0, 0, 0), params) == 13
    assert class_combo_multiplicity((1, 1, 1, 1), params) == 0


@pytest.mark.parametrize("p", [13, 29])
def test_class_combo_membership_seeded(p):
    import random

    params, _ = gated_params_for_family(p)
    a = (p - 1) // 4
    admissible = {0, a, 2 * a, 3 * a, p}
    rng = random.Random(0)
    for _ in range(100):
        c = tuple(rng.randrange(p) for _ in range(4))
        assert class_combo_multiplicity(c, params) in admissible
