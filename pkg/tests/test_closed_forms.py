from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from relaysimp import DiamondNetwork, NetworkError, hd_capacity, single_relay_hd, two_relay_hd
from relaysimp.closed_forms import ClosedFormError, closed_form_hd, two_relay_value
from strategies import strength


def test_single_examples():
    assert single_relay_hd(F(1), F(1)) == F(1, 2)
    assert single_relay_hd(F(1), F(1, 2)) == F(1, 3)
    assert single_relay_hd(0, 5) == 0
    assert single_relay_hd(0, 0) == 0
    with pytest.raises(NetworkError):
        single_relay_hd(-1, 1)


def test_two_relay_examples():
    assert two_relay_hd(DiamondNetwork([1, 1], [1, 1])).exact_value == 1
    assert two_relay_hd(DiamondNetwork([1, 0], [1, 0])).exact_value == F(1, 2)
    assert two_relay_hd(DiamondNetwork([0, 0], [0, 0])).value == 0
    with pytest.raises(NetworkError):
        two_relay_hd(DiamondNetwork([1], [1]))


def test_single_matches_lp():
    for ell, r in [(1, 1), (1, 0.5), (3, 0.2), (0, 2)]:
        assert hd_capacity(DiamondNetwork([ell], [r])).value == pytest.approx(single_relay_hd(ell, r), abs=1e-12)


def _lp(l1, l2, r1, r2):
    return hd_capacity(DiamondNetwork([l1, l2], [r1, r2])).value


@given(strength, strength, strength, strength)
def test_matches_lp(l1, l2, r1, r2):
    assert two_relay_value(l1, l2, r1, r2) == pytest.approx(_lp(l1, l2, r1, r2), abs=1e-6)


@given(strength, strength, strength, strength)
def test_relabel_symmetry(l1, l2, r1, r2):
    assert two_relay_value(l1, l2, r1, r2) == pytest.approx(two_relay_value(l2, l1, r2, r1), rel=1e-12, abs=1e-15)


@given(strength, strength, strength, strength)
def test_dominates_single(l1, l2, r1, r2):
    v = two_relay_value(l1, l2, r1, r2)
    assert v >= single_relay_hd(l1, r1) - 1e-12
    assert v >= single_relay_hd(l2, r2) - 1e-12


def test_boundaries_exact():
    # on r1 r2 = l1 l2 and on r1 = r2 the neighbouring branches must agree exactly
    rng = np.random.default_rng(5)
    for _ in range(300):
        l1, l2, r1 = (F(int(x), int(y)) for x, y in zip(rng.integers(1, 20, 3), rng.integers(1, 7, 3)))
        r2 = l1 * l2 / r1
        assert two_relay_value(l1, l2, r1, r2) == two_relay_value(l2, l1, r2, r1)
        r2 = r1
        two_relay_value(l1, l2, r1, r2)


def test_boundaries_float_vs_lp():
    rng = np.random.default_rng(6)
    for _ in range(200):
        l1, l2, r1 = rng.uniform(0.1, 4, 3)
        for r2 in (l1 * l2 / r1, r1):
            assert two_relay_value(l1, l2, r1, r2) == pytest.approx(_lp(l1, l2, r1, r2), abs=1e-9)


def test_ties_in_ell():
    assert two_relay_value(1.0, 1.0, 0.3, 2.0) == pytest.approx(_lp(1.0, 1.0, 0.3, 2.0), abs=1e-12)


def test_dead_relays():
    # a relay with one dead link is useless: the pair reduces to the other relay
    assert two_relay_value(F(3), F(5), F(0), F(2)) == single_relay_hd(F(5), F(2))
    assert two_relay_value(F(0), F(0), F(4), F(2)) == 0


def test_continuity_error_is_reachable():
    from relaysimp import closed_forms

    orig = closed_forms._case_ii
    closed_forms._case_ii = lambda *a: orig(*a) + 1
    try:
        with pytest.raises(ClosedFormError):
            two_relay_value(F(2), F(1), F(1), F(1))
    finally:
        closed_forms._case_ii = orig


def test_closed_form_hd_dispatch():
    assert closed_form_hd(DiamondNetwork([1], [1])) == 0.5
    with pytest.raises(NetworkError):
        closed_form_hd(DiamondNetwork([1, 1, 1], [1, 1, 1]))
