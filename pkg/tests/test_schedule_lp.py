from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from relaysimp import (CapExceeded, DiamondNetwork, NetworkError, Schedule, cut_matrix,
                       evaluate_schedule, fd_capacity, gen_paper_example, gen_random,
                       gen_worst_case_family, hd_capacity, hd_capacity_fixed_schedule,
                       schedule_support, subnetwork)
from relaysimp.schedule_lp import schedule_cut_values
from oracles import grid_oracle
from strategies import networks


def test_examples():
    assert hd_capacity(DiamondNetwork([1, 1], [1, 1])).value == pytest.approx(1, abs=1e-12)
    assert hd_capacity(gen_paper_example("sec3c")).value == pytest.approx(1, abs=1e-2)
    assert hd_capacity(DiamondNetwork([3, 1, 2], [0, 0, 0])).value == 0


def test_positive_when_some_relay_alive():
    net = DiamondNetwork([0, 2, 0], [5, 1e-3, 0])
    assert hd_capacity(net).value > 0


def test_cap():
    with pytest.raises(CapExceeded):
        hd_capacity(gen_random(5, 0), lp_cap=4)


def _witness_value(net, res):
    vals = schedule_cut_values(net, res.schedule)
    return float(vals.min()), float(vals[res.min_cut])


@given(networks(max_n=5))
def test_witnesses_reproduce_value(net):
    res = hd_capacity(net)
    lo, at_cut = _witness_value(net, res)
    assert lo == pytest.approx(res.value, abs=1e-9)
    assert at_cut == pytest.approx(res.value, abs=1e-9)
    # dual certificate: no state beats the value against the cut mixture
    assert res.upper_bound == pytest.approx(res.value, abs=1e-9)
    mix = res.cut_mixture
    M = cut_matrix(net)
    y = np.zeros(M.shape[0])
    for a, p in mix.items():
        y[a] = p
    assert y.sum() == pytest.approx(1, abs=1e-9) and y.min() >= 0
    assert float((y @ M).max()) == pytest.approx(res.upper_bound, abs=1e-12)


@given(networks(max_n=6))
def test_sandwich(net):
    hd = hd_capacity(net).value
    fd = fd_capacity(net).value
    half = evaluate_schedule(net, Schedule.two_state(net.n)).value
    assert half == pytest.approx(fd / 2, abs=1e-12)
    assert half <= hd + 1e-9
    assert hd <= fd + 1e-9


@given(networks(min_n=1, max_n=8))
def test_vertex_support(net):
    res = hd_capacity(net)
    assert schedule_support(res) <= net.n + 1


@given(networks(max_n=5), st.floats(1e-3, 1e3))
def test_scale_covariance(net, alpha):
    a = hd_capacity(net.scaled(alpha)).value
    b = hd_capacity(net).value
    assert a == pytest.approx(alpha * b, rel=1e-9, abs=1e-12)


@given(networks(min_n=1, max_n=3))
def test_grid_oracle(net):
    grid, refined = grid_oracle(list(net.ell), list(net.r))
    v = hd_capacity(net).value
    assert v >= grid - 1e-12
    assert v == pytest.approx(refined, abs=1e-6)


@given(networks(min_n=2, max_n=5), st.data())
def test_fixed_schedule_domination(net, data):
    N = 1 << net.n
    raw = data.draw(st.lists(st.floats(0, 1), min_size=N, max_size=N).filter(lambda w: sum(w) > 0.1))
    lam = Schedule(net.n, {s: w / sum(raw) for s, w in enumerate(raw)})
    keep = data.draw(st.integers(1, net.full_mask))
    fixed = hd_capacity_fixed_schedule(keep, net, lam)
    assert fixed.value <= hd_capacity(subnetwork(net, keep)).value + 1e-9


def test_fixed_schedule_examples():
    net = DiamondNetwork([1, 1], [1, 1])
    lam = Schedule(2, {0b01: 0.5, 0b10: 0.5})
    assert hd_capacity_fixed_schedule([1], net, lam).value == pytest.approx(0.5)
    full = hd_capacity_fixed_schedule([1, 2], net, lam)
    assert full.value == pytest.approx(evaluate_schedule(net, lam).value)
    assert hd_capacity_fixed_schedule([2], net, Schedule.point_mass(2, 0)).value == 0
    with pytest.raises(NetworkError):
        hd_capacity_fixed_schedule([], net, lam)
    with pytest.raises(NetworkError):
        hd_capacity_fixed_schedule([1], net, Schedule.point_mass(3, 0))


def test_schedule_validation_and_marginal():
    with pytest.raises(NetworkError):
        Schedule(2, {0: 0.5})
    with pytest.raises(NetworkError):
        Schedule(2, {4: 1.0})
    with pytest.raises(NetworkError):
        Schedule(2, {0: 1.5, 1: -0.5})
    lam = Schedule(3, {0b000: 0.25, 0b101: 0.25, 0b001: 0.5})
    m = lam.marginal(0b101)
    assert m.weights == {0b00: 0.25, 0b11: 0.25, 0b01: 0.5}
    m = lam.marginal(0b010)
    assert m.weights == {0: 1.0}
    assert Schedule.from_json(lam.to_json()).weights == lam.weights
    assert lam.to_dict() == {"000": 0.25, "100": 0.5, "101": 0.25}
    assert schedule_support(evaluate_schedule(DiamondNetwork([1], [1]), Schedule.point_mass(1, 0))) == 1


def test_sym2_support():
    res = hd_capacity(gen_paper_example("sym2"))
    assert schedule_support(res) <= 3


def test_exact_mode_goldens():
    cases = {"sym2": F(1), "thm2_k1n2": F(2, 3), "single": F(1, 2), "one_live_of_three": F(1, 2),
             "hd_vs_fd_best": F(71, 110)}
    for name, want in cases.items():
        res = hd_capacity(gen_paper_example(name), exact=True)
        assert res.exact_value == want
        assert res.value == pytest.approx(float(want), abs=1e-12)


def test_exact_mode_family():
    # the float basis certifies in rationals and matches the float value
    for n in range(1, 7):
        res = hd_capacity(gen_worst_case_family(n, 1), exact=True)
        assert isinstance(res.exact_value, F)
        assert float(res.exact_value) == pytest.approx(res.value, abs=1e-12)


def test_exact_cap():
    with pytest.raises(CapExceeded):
        hd_capacity(gen_random(9, 0), exact=True)


def test_family_trend():
    vals = [hd_capacity(gen_worst_case_family(n, 1)).value for n in range(1, 11)]
    assert vals[0] == pytest.approx(1 / 3)  # one relay: K/2 = 1/3
    fd = [fd_capacity(gen_worst_case_family(n, 1)).value for n in range(1, 11)]
    assert all(v <= f + 1e-12 for v, f in zip(vals, fd))


def test_presolve_drops_repeats():
    from relaysimp.schedule_lp import presolve

    net = DiamondNetwork([0, 1, 0], [0, 2, 0])
    M = cut_matrix(net)
    Mr, rows, cols = presolve(M)
    assert Mr.shape == (2, 2)
    assert list(rows) == sorted(rows) and rows[0] == 0
    # every original row and column has an identical representative
    for A in range(M.shape[0]):
        assert any(np.array_equal(M[A, cols], Mr[i]) for i in range(len(rows)))
    assert hd_capacity(net).value == pytest.approx(2 / 3, abs=1e-12)


# instances where float pivoting alone failed: dead relays plus strengths ~1e-7 of the largest
HARD = [
    ([0.0, 1.0, 1.192092896e-07, 0.0, 2.0], [0.0, 3.0, 1.192092896e-07, 0.0, 2.0]),
    ([0.0, 0.0, 1.192092896e-07, 0.0625, 1.53125], [0.0, 0.0, 0.03125, 0.0625, 1.53125]),
    ([4.0, 0.0, 0.0, 1e-09, 0.0], [2.0, 0.0, 0.0, 1e-09, 7.0]),
]


@pytest.mark.parametrize("ell,r", HARD)
def test_ill_conditioned_instances(ell, r):
    net = DiamondNetwork(ell, r)
    res = hd_capacity(net)
    exact = hd_capacity(DiamondNetwork([F(x) for x in ell], [F(x) for x in r]), exact=True)
    assert res.value == pytest.approx(float(exact.exact_value), abs=1e-12)
    assert res.upper_bound == pytest.approx(res.value, abs=1e-12)
    assert schedule_support(res) <= net.n + 1


def test_fallback_to_rationals(monkeypatch):
    from relaysimp import _kernels

    def broken(M, **kw):
        raise ArithmeticError("forced")

    monkeypatch.setattr(_kernels, "solve_schedule_lp", broken)
    monkeypatch.setattr(_kernels, "backends", lambda: {})
    net = gen_paper_example("hd_vs_fd_best")
    assert hd_capacity(net).value == pytest.approx(71 / 110, abs=1e-12)
    with pytest.raises(Exception, match="did not converge"):
        hd_capacity(gen_random(9, 0), exact_cap=8)
