import pytest

from freecurve.errors import NonIntegralRelationError
from freecurve.sequences import (
    delta_to_beta,
    enumerate_deltas,
    is_delta_sequence,
    is_plane_branch,
    one_puiseux_family,
)


def test_is_delta_sequence():
    assert is_delta_sequence((36, 26, 465)) == (True, None)
    assert is_delta_sequence((6, 4, 3)) == (True, None)
    assert is_delta_sequence((3, 0)) == (False, "positivity")
    assert is_delta_sequence((4, 6)) == (False, "condition-1")
    assert is_delta_sequence((3, 5)) == (False, "condition-3")
    # 2*1 is not generated by <4,6>
    assert is_delta_sequence((4, 6, 1))[1] == "condition-2"


def test_is_plane_branch():
    assert is_plane_branch((4, 9))
    assert is_plane_branch((4, 6, 13))
    assert not is_plane_branch((6, 9, 7))
    assert not is_plane_branch((3, 5, 7))  # not free in this order


def test_delta_to_beta_branches():
    beta, branch = delta_to_beta((36, 26, 465))
    assert beta.betas == (10, 36, 183) and branch == "R1"
    beta, branch = delta_to_beta((20, 10, 4, 17))
    assert beta.betas == (10, 36, 183) and branch == "R2"
    beta, branch = delta_to_beta((3, 1))
    assert beta.betas == (2, 3) and branch == "R1"


def test_delta_to_beta_rejects():
    with pytest.raises(ValueError):
        delta_to_beta((5,))
    with pytest.raises(ValueError):
        delta_to_beta((10, 36))


def test_enumerate_three_generator_target():
    got = {(d.deltas, d.branch) for d in enumerate_deltas((10, 36, 183))}
    assert got == {
        ((36, 26, 465), "R1"),
        ((20, 10, 4, 17), "R2"),
        ((30, 20, 54, 267), "R2"),
    }


def test_enumerate_round_trips():
    for d in enumerate_deltas((10, 36, 183)):
        beta, branch = delta_to_beta(d.deltas)
        assert beta.betas == (10, 36, 183)
        assert branch == d.branch


def test_enumerate_pairs():
    assert [(d.deltas, d.branch) for d in enumerate_deltas((2, 3))] == [
        ((3, 1), "R1")
    ]
    got = [(d.deltas, d.branch, d.minimal) for d in enumerate_deltas((4, 9))]
    assert got == [
        ((9, 5), "R1", True),
        ((8, 4, 7), "R2", True),
        ((2, 1, 7), "puiseux-family", False),
    ]
    got = {d.deltas for d in enumerate_deltas((5, 12))}
    assert got == {(12, 7), (10, 5, 8), (2, 1, 8)}


def test_enumerate_rejects_non_plane_branch():
    with pytest.raises(ValueError):
        enumerate_deltas((6, 9, 7))


def test_puiseux_family():
    fam = one_puiseux_family(4, 9)
    assert [m.deltas for m in fam] == [(2, 1, 7)]
    assert not fam[0].minimal
    # empty interval falls back to the unique pair
    fam = one_puiseux_family(2, 3)
    assert [m.deltas for m in fam] == [(3, 1)]
    assert fam[0].minimal
    with pytest.raises(ValueError):
        one_puiseux_family(2, 4)
