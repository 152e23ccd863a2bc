from fractions import Fraction

import pytest

from freecurve.moduli import (
    at_infinity_tau2,
    b_sk_formula,
    d_mk,
    dimension_bounds,
    dplus_l2_bounds,
    plane_branch_check,
    tau_plus_E,
    tau_report,
)
from freecurve.semigroup import free_structure


def test_tau_report_967():
    rep = tau_report(free_structure((9, 6, 7)))
    assert rep.tau_plus == 3
    assert rep.tau_minus == 15
    assert rep.zero_count == 0
    assert rep.moduli_dim == 15
    assert {d for d in rep.histogram if d > 0} == {1, 2, 4}
    assert sum(rep.histogram.values()) == rep.conductor == 18


def test_tau_report_worked_example():
    rep = tau_report(free_structure((18, 27, 21, 32)))
    assert (rep.tau_plus, rep.tau_minus, rep.zero_count) == (58, 58, 0)


def test_tau_partition():
    for gens in [(2, 3), (4, 6, 13), (6, 9, 7), (10, 36, 183)]:
        rep = tau_report(free_structure(gens))
        assert rep.tau_plus + rep.tau_minus + rep.zero_count == rep.conductor


def test_tau_plus_E_and_d():
    fs = free_structure((9, 6, 7))
    assert tau_plus_E(fs) == 0
    assert d_mk(fs, 2, 0) == 0
    assert d_mk(fs, 2, 1) == 2
    with pytest.raises(ValueError):
        d_mk(fs, 3, 0)
    with pytest.raises(ValueError):
        d_mk(fs, 2, 2)


def test_d_monotone_in_k():
    fs = free_structure((18, 27, 21, 32))
    for m in (2, 3):
        vals = [d_mk(fs, m, k) for k in range(fs.n[m - 1] - 1)]
        assert vals == sorted(vals)


def test_b_sk_records():
    fs = free_structure((9, 6, 7))
    r = b_sk_formula(fs, 2, 1)
    assert (r.brute, r.formula, r.delta, r.sigma, r.gamma) == (0, 1, 1, 1, 1)
    r = b_sk_formula(fs, 2, 2)
    assert (r.brute, r.formula, r.delta, r.sigma, r.gamma) == (1, 2, 1, 1, 2)
    assert r.guard_holds


def test_bounds_967():
    rep = dimension_bounds(free_structure((9, 6, 7)))
    assert (rep.simple_lower, rep.tau_actual, rep.simple_upper) == (0, 3, 6)
    assert rep.refined_lower == 3
    assert rep.holds_simple_lower and rep.holds_simple_upper
    assert rep.holds_refined_lower
    assert rep.L_1 == (2,) and rep.J_m == ()


def test_bounds_4613_refined_overshoot():
    rep = dimension_bounds(free_structure((4, 6, 13)))
    assert (rep.simple_lower, rep.tau_actual, rep.simple_upper) == (0, 2, 2)
    # the refined chain as printed overshoots here; reported, not raised
    assert rep.refined_lower == 3
    assert not rep.holds_refined_lower
    assert "refined lower bound exceeds actual tau+" in rep.notes
    assert rep.J_m == (1,)


def test_bounds_worked_example():
    rep = dimension_bounds(free_structure((18, 27, 21, 32)))
    assert rep.tau_actual == 58
    assert rep.holds_simple_lower and rep.holds_simple_upper


def test_plane_branch_positive():
    rep = plane_branch_check(free_structure((4, 6, 13)))
    assert rep.is_plane_branch
    assert rep.recursion_holds and rep.recursion_holds_top
    assert rep.tau_plus == rep.recursion_value == 2
    assert rep.sum_d_direct == 0 and rep.sum_d_formula == 0

    rep = plane_branch_check(free_structure((8, 12, 26, 55)))
    assert rep.is_plane_branch and rep.recursion_holds
    assert rep.tau_plus == rep.recursion_value == 25
    assert rep.sum_d_direct == 7 and rep.sum_d_formula == Fraction(7)


def test_plane_branch_negative():
    rep = plane_branch_check(free_structure((6, 9, 7)))
    assert not rep.is_plane_branch
    assert not rep.recursion_holds
    assert (rep.tau_plus, rep.recursion_value) == (3, 6)


def test_plane_branch_equivalence_sample():
    # the characterization: plane branch iff tau+ recursion exact at all levels
    for gens in [(4, 6, 13), (4, 6, 25), (6, 9, 7), (9, 6, 7), (8, 12, 26, 55)]:
        rep = plane_branch_check(free_structure(gens))
        assert rep.is_plane_branch == rep.recursion_holds


def test_at_infinity_967():
    rep = at_infinity_tau2(free_structure((9, 6, 7)))
    assert rep.hypotheses_hold
    assert rep.tau2_direct == 3
    assert rep.formula_value == Fraction(13, 3)
    assert rep.delta == Fraction(4, 3)


def test_at_infinity_hypotheses_fail():
    rep = at_infinity_tau2(free_structure((6, 4, 3)))
    assert not rep.hypotheses_hold
    assert rep.formula_value is None


def test_at_infinity_needs_three_generators():
    with pytest.raises(ValueError):
        at_infinity_tau2(free_structure((18, 27, 21, 32)))


def test_triangle_967():
    fs = free_structure((9, 6, 7))
    rep = dplus_l2_bounds(fs, 1)
    assert rep.direct == 2
    assert rep.statement_upper == Fraction(3, 2)
    assert rep.proof_case1_value == Fraction(2)
    assert rep.lower == Fraction(-3, 2)
    assert rep.triangle_C == 1
    rep0 = dplus_l2_bounds(fs, 0)
    assert rep0.direct == 0 and rep0.proof_case1_value == 0
