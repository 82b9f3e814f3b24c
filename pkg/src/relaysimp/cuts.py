"""Cut values and the full-duplex min cut.

For a cut A (relays on the destination side) the FD value is
max_{i in A} ell_i + max_{i not in A} r_i, with the max of an empty set = 0.
The HD value in state s uses the masked links: only listening relays keep
their ell and only transmitting relays keep their r.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .network import DEFAULT_FD_CAP, DiamondNetwork, NetworkError, check_mask
from .results import CapacityResult


class CapExceeded(NetworkError):
    pass


@dataclass(frozen=True)
class CutValue:
    value: float
    cut: int
    state: int | None = None


def _max_over(values, mask):
    return max((v for i, v in enumerate(values) if mask >> i & 1), default=0.0)


def fd_cut_value(net: DiamondNetwork, cut: int) -> float:
    cut = check_mask(cut, net.n)
    return _max_over(net.ell, cut) + _max_over(net.r, net.full_mask ^ cut)


def masked_links(net: DiamondNetwork, state: int):
    state = check_mask(state, net.n)
    ell = tuple(0.0 if state >> i & 1 else v for i, v in enumerate(net.ell))
    r = tuple(v if state >> i & 1 else 0.0 for i, v in enumerate(net.r))
    return ell, r


def hd_state_cut_value(net: DiamondNetwork, cut: int, state: int) -> float:
    cut = check_mask(cut, net.n)
    state = check_mask(state, net.n)
    listen = net.full_mask ^ state
    return _max_over(net.ell, cut & listen) + _max_over(net.r, (net.full_mask ^ cut) & state)


def fd_capacity(net: DiamondNetwork, cap: int = DEFAULT_FD_CAP) -> CapacityResult:
    """Min FD cut over all 2^n cuts; ties go to the numerically smallest mask."""
    if net.n > cap:
        raise CapExceeded(f"n = {net.n} exceeds the FD enumeration cap {cap}")
    ell, r = net.arrays()
    value, cut = _kernels.fd_min_cut(ell, r)
    return CapacityResult(value=value, min_cut=cut, mode="FD", n=net.n)


def cut_matrix(net: DiamondNetwork) -> np.ndarray:
    """M[A, s] = hd_state_cut_value(net, A, s) for every cut A and state s."""
    ell, r = net.arrays()
    return _kernels.cut_matrix(ell, r)


def fd_capacity_threshold(net: DiamondNetwork) -> float:
    """FD min cut in O(n log n), for networks beyond the enumeration cap.

    Any cut A can be enlarged to {i : ell_i <= max_A ell} without changing the
    ell term and without raising the r term, so the minimum is attained by one
    of the n + 1 threshold sets.  Enumeration stays the oracle of record.
    """
    ell, r = net.arrays()
    order = np.argsort(ell, kind="stable")
    ls, rs = ell[order], r[order]
    # A = the first m relays in ell order; suffix max of r over the rest
    suf = np.zeros(net.n + 1)
    suf[:-1] = np.maximum.accumulate(rs[::-1])[::-1]
    pre = np.concatenate([[0.0], ls])
    return float(np.min(pre + suf))
