import math
import random

import pytest
from hypothesis import given, strategies as st

from curventropy.kgroup import (
    DUAL_GENERATOR,
    GENERATOR,
    DegenerateClassError,
    KClass,
    QuadrantError,
    act,
    asymptotic_offset,
    euler_form,
    graded_complexity,
    growth_sequence,
    quadrant_trace,
)
from curventropy.sl2z import IDENTITY, Mat2Z, power
from curventropy.words import evaluate, type_m_word

from conftest import matrices

A3 = Mat2Z(1, 1, 1, 2)
ints = st.integers(-10**6, 10**6)
classes = st.builds(KClass, ints, ints)


def test_euler_form_examples():
    assert euler_form(KClass(1, 0), KClass(0, 1)) == 1
    assert euler_form(KClass(3, 7), KClass(3, 7)) == 0
    assert euler_form(KClass(2, -9), KClass(2, 9)) == 36


def test_act_examples():
    assert act(Mat2Z(1, 0, 1, 1), KClass(1, 0)) == KClass(1, 1)
    assert act(IDENTITY, KClass(4, -2)) == KClass(4, -2)
    assert act(Mat2Z(0, 1, -1, 0), KClass(1, 0)) == KClass(0, -1)


@given(matrices, classes, classes)
def test_pairing_equivariance(A, v, w):
    assert euler_form(act(A, v), act(A, w)) == euler_form(v, w)
    assert euler_form(v, w) == -euler_form(w, v)


def test_growth_single_row():
    report = growth_sequence(A3, KClass(0, 1), KClass(1, 0), 1)
    assert len(report.rows) == 1
    # A3 (1,0) = (1,1); chi((0,1),(1,1)) = 0*1 - 1*1
    assert report.rows[0].chi_abs == 1
    assert report.rows[0].estimate == 0.0


def test_growth_chi_matches_power():
    report = growth_sequence(A3, DUAL_GENERATOR, GENERATOR, 30)
    for row in report.rows:
        assert row.chi_abs == abs(euler_form(DUAL_GENERATOR, act(power(A3, row.l), GENERATOR)))


def test_growth_approaches_target():
    report = growth_sequence(A3, L=60)
    gaps = [r.gap for r in report.rows]
    assert all(b < a for a, b in zip(gaps, gaps[1:]))
    # estimate_l - log rho ~ offset / l with offset = log|chi(v, P w)|
    offset = asymptotic_offset(A3, DUAL_GENERATOR, GENERATOR)
    assert report.row(60).l * report.row(60).gap == pytest.approx(offset, rel=1e-6)
    assert report.rows[-1].ratio_estimate == pytest.approx(report.target, abs=1e-12)


def test_growth_trace_eight():
    A = evaluate(type_m_word((2, 3)))
    report = growth_sequence(A, L=60)
    assert report.target == pytest.approx(math.log(4 + math.sqrt(15)), abs=1e-15)
    offset = asymptotic_offset(A, DUAL_GENERATOR, GENERATOR)
    assert 60 * report.gap == pytest.approx(offset, rel=1e-6)


def test_growth_random_type_m_offsets():
    rng = random.Random(11)
    for _ in range(50):
        n = rng.randint(1, 3)
        m = tuple(rng.randint(1, 4) for _ in range(2 * n))
        A = evaluate(type_m_word(m))
        report = growth_sequence(A, L=60)
        l_gap = 60 * (report.row(60).estimate - report.target)
        assert l_gap == pytest.approx(asymptotic_offset(A, DUAL_GENERATOR, GENERATOR), rel=1e-6, abs=1e-9)
        assert report.rows[-1].ratio_estimate == pytest.approx(report.target, abs=1e-9)


def test_growth_exact_digits():
    report = growth_sequence(A3, L=200)
    assert len(str(report.row(200).chi_abs)) > 80


def test_growth_degenerate():
    with pytest.raises(DegenerateClassError):
        growth_sequence(Mat2Z(1, 0, 1, 1), KClass(0, 1), KClass(0, 1), 5)
    with pytest.raises(DegenerateClassError) as info:
        growth_sequence(IDENTITY, KClass(1, 0), KClass(1, 0), 5)
    assert info.value.l == 1
    with pytest.raises(ValueError):
        growth_sequence(A3, L=0)


def test_growth_serialization():
    report = growth_sequence(A3, L=3)
    d = report.to_dict()
    assert d["kind"] == "growth"
    assert [r["chi_abs"] for r in d["rows"]] == ["139", "381", "1004"]
    csv = report.to_csv().splitlines()
    assert csv[0] == "l,chi_abs,estimate,gap,ratio_estimate"
    assert csv[1].startswith("1,139,")


def test_quadrant_examples():
    steps = quadrant_trace((1, 1), KClass(1, 1))
    assert steps[1].cls == KClass(1, -2) and steps[1].signs == "+-"
    assert steps[2].signs == "--"
    assert steps[-1].label == "S^2"
    assert steps[-1].cls == act(A3, KClass(1, 1)) == KClass(2, 3)
    with pytest.raises(ValueError):
        quadrant_trace((1, 1), KClass(1, 0))


def test_quadrant_random():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(1, 4)
        m = tuple(rng.randint(1, 6) for _ in range(2 * n))
        v = KClass(rng.randint(1, 50), rng.randint(1, 50))
        steps = quadrant_trace(m, v)
        signs = [s.signs for s in steps[: 2 * n + 1]]
        assert signs == [("++", "+-", "--", "-+")[k % 4] for k in range(2 * n + 1)]
        assert steps[-1].cls == act(evaluate(type_m_word(m)), v)


def test_quadrant_error_type():
    assert issubclass(QuadrantError, AssertionError)


def test_graded_complexity():
    assert graded_complexity({0: 1}, 3.7) == 1.0
    assert graded_complexity({0: 2, 1: 3}, 0.0) == 5.0
    assert graded_complexity({-1: 1}, 1.0) == pytest.approx(math.e, abs=1e-15)
    assert graded_complexity({}, 1.0) == 0.0


@given(st.dictionaries(st.integers(-20, 20), st.integers(0, 10**6)))
def test_graded_complexity_at_zero(dims):
    assert graded_complexity(dims, 0.0) == sum(dims.values())
