import pytest

from freecurve.errors import LimitExceededError, NotFreeError, NotMemberError
from freecurve.semigroup import (
    NumericalSemigroup,
    apery_set,
    conductor_recursive,
    free_structure,
    frobenius_bruteforce,
    gcd_tower,
    monomial_curve_equations,
    semigroup_membership,
)


def test_gcd_tower_worked_example():
    e, n = gcd_tower((18, 27, 21, 32))
    assert e == (18, 9, 3, 1)
    assert n == (2, 3, 3)


def test_gcd_tower_pairs():
    assert gcd_tower((2, 3)) == ((2, 1), (2,))
    assert gcd_tower((9, 6, 7)) == ((9, 3, 1), (3, 3))


def test_membership_gaps_of_3_5():
    # gap set of <3,5> is {1,2,4,7}
    members = [v for v in range(10) if semigroup_membership((3, 5), v)]
    assert members == [0, 3, 5, 6, 8, 9]
    assert not semigroup_membership((3, 5), 7)
    assert semigroup_membership((2, 3), 0)


def test_membership_rejects_negative():
    with pytest.raises(ValueError):
        semigroup_membership((2, 3), -1)


def test_free_structure_canonical_tables():
    fs = free_structure((18, 27, 21, 32))
    assert fs.ell == ((3,), (2, 1), (3, 0, 2))
    assert free_structure((4, 6, 13)).ell == ((3,), (5, 1))
    assert free_structure((10, 36, 183)).ell == ((18,), (33, 1))


def test_free_structure_not_free():
    with pytest.raises(NotFreeError) as exc:
        free_structure((3, 5, 7))
    assert exc.value.index == 2


def test_conductors():
    assert free_structure((2, 3)).conductor == 2
    assert free_structure((6, 9, 7)).conductor == 18
    assert free_structure((18, 27, 21, 32)).conductor == 116
    fs = free_structure((4, 6, 13))
    assert conductor_recursive(fs) == 16


def test_frobenius_oracle_agreement():
    for gens in [(2, 3), (4, 6, 13), (6, 9, 7), (18, 27, 21, 32), (10, 36, 183)]:
        assert frobenius_bruteforce(gens) == free_structure(gens).conductor


def test_frobenius_limit_exceeded():
    with pytest.raises(LimitExceededError):
        frobenius_bruteforce((101, 103), limit=50)


def test_apery_sets():
    assert apery_set((2, 3), 2) == [0, 3]
    assert apery_set((6, 7, 9), 6) == [0, 7, 9, 14, 16, 23]
    assert apery_set((9, 6, 7), 7) == [0, 6, 9, 12, 15, 18, 24]


def test_apery_rejects_non_member():
    with pytest.raises(NotMemberError):
        apery_set((3, 5), 7)


def test_equations():
    eqs = monomial_curve_equations(free_structure((18, 27, 21, 32)))
    assert [e.degree for e in eqs] == [54, 63, 96]
    eqs = monomial_curve_equations(free_structure((4, 6, 13)))
    assert [(e.lead, e.tail) for e in eqs] == [((1, 2), (3,)), ((2, 2), (5, 1))]
    assert [e.degree for e in eqs] == [12, 26]


def test_semigroup_invariants():
    with pytest.raises(ValueError):
        NumericalSemigroup(())
    with pytest.raises(ValueError):
        NumericalSemigroup((0, 3))
    with pytest.raises(ValueError):
        NumericalSemigroup((4, 6))  # gcd 2 without a declared scale
    assert NumericalSemigroup((4, 6), scale=2).g == 1


def test_scaled_prefix():
    fs = free_structure((18, 27, 21, 32))
    prev = fs.scaled_prefix(2)
    assert prev.a == (6, 9, 7)
    assert prev.conductor == 18
