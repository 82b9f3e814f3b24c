from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from relaysimp import DiamondNetwork, gen_random, hd_capacity
from relaysimp._kernels import solve_schedule_lp
from relaysimp.closed_forms import two_relay_value
from relaysimp.exact import certify, exact_cut_matrix, solve_exact
from oracles import brute_matrix

small = st.integers(0, 5)


def test_exact_matrix_matches_float():
    net = gen_random(3, 1)
    Mq = exact_cut_matrix(*net.exact_values())
    assert np.array_equal(np.array(Mq, dtype=float), brute_matrix(list(net.ell), list(net.r)))


@given(st.lists(small, min_size=4, max_size=4))
def test_bland_matches_closed_form(v):
    ell, r = [F(v[0]), F(v[1])], [F(v[2]), F(v[3])]
    t, lam, pi, _ = solve_exact(exact_cut_matrix(ell, r))
    assert t == two_relay_value(ell[0], ell[1], r[0], r[1])
    assert sum(lam.values()) == 1 and min(lam.values()) >= 0
    assert sum(pi.values()) == 1 and min(pi.values()) >= 0


@given(st.integers(1, 4), st.data())
def test_certify_float_basis(n, data):
    ell = [F(data.draw(small), data.draw(st.integers(1, 3))) for _ in range(n)]
    r = [F(data.draw(small), data.draw(st.integers(1, 3))) for _ in range(n)]
    Mq = exact_cut_matrix(ell, r)
    P, T, *_ = solve_schedule_lp(np.array(Mq, dtype=float))
    got = certify(Mq, P, T)
    t_ref = solve_exact(Mq)[0]
    if got is not None:
        assert got[0] == t_ref
    res = hd_capacity(DiamondNetwork(ell, r), exact=True)
    assert res.exact_value == t_ref


def test_certify_rejects_suboptimal_basis():
    ell, r = [F(1), F(1)], [F(1), F(1)]
    Mq = exact_cut_matrix(ell, r)
    # all weight on "relay 1 transmits" is feasible but not optimal
    assert certify(Mq, [0b01], [0b10]) is None
    assert certify(Mq, [], []) is None
    t, lam, _, _ = solve_exact(Mq)
    assert t == 1 and lam == {0b01: F(1, 2), 0b10: F(1, 2)}


def test_singular_basis_rejected():
    Mq = exact_cut_matrix([F(0), F(0)], [F(0), F(0)])
    assert certify(Mq, [0, 1], [0, 1]) is None
    assert solve_exact(Mq)[0] == 0


def test_three_relay_exact_matches_float():
    for seed in range(10):
        net = gen_random(3, seed)
        res = hd_capacity(net, exact=True)
        assert float(res.exact_value) == pytest.approx(res.value, abs=1e-12)
