"""Best-k relay selection and the HD/FD ratios of the selected subnetwork."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from itertools import combinations

from .closed_forms import closed_form_hd, single_relay_hd
from .cuts import CapExceeded, fd_capacity, fd_capacity_threshold
from .network import (DEFAULT_FD_CAP, DEFAULT_LP_CAP, DiamondNetwork, NetworkError,
                      family_constant, gen_worst_case_family, subnetwork)
from .schedule_lp import hd_capacity

# a later subset must beat the incumbent by this much (relative) to replace it
TIE_RTOL = 1e-12

SWEEP_HEADER = ("n", "k", "c_hd_kn", "c_hd_full", "c_fd_full", "ratio_hd", "ratio_fd")


@dataclass(frozen=True)
class SelectionReport:
    """Best k-relay subnetwork and its ratios against the full network.

    ``best_subset`` uses the 1-based labels of the network.  ``full_hd`` and
    ``ratio_hd`` are None when the full HD capacity was not computed.
    """

    k: int
    best_subset: tuple
    subset_capacity: float
    full_hd: float | None
    full_fd: float | None
    ratio_hd: float | None
    ratio_fd: float | None
    mode: str = "HD"

    def to_dict(self) -> dict:
        d = asdict(self)
        d["best_subset"] = list(self.best_subset)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def ratio(num, den):
    """num / den, with 1 for a zero denominator (the guarantee holds vacuously)."""
    if den == 0:
        return 1.0
    # an excess within the 1e-9 capacity tolerance is rounding noise; a real one stays visible
    if den < num <= den + 1e-9 * max(1.0, den):
        return 1.0
    return num / den


def _check_k(net, k):
    if not isinstance(k, int) or not 1 <= k <= net.n:
        raise NetworkError(f"k must be an integer in [1:{net.n}], got {k!r}")


def subset_hd(sub: DiamondNetwork, lp_cap: int = DEFAULT_LP_CAP) -> float:
    if sub.n <= 2:
        return closed_form_hd(sub)
    return hd_capacity(sub, lp_cap=lp_cap).value


def _best(net, k, value_of):
    best, arg = 0.0, None
    for keep in combinations(range(1, net.n + 1), k):
        v = value_of(subnetwork(net, keep))
        # relative ties: the earliest subset wins unless beaten by more than rounding
        if arg is None or v > best + TIE_RTOL * abs(best):
            best, arg = v, keep
    return best, tuple(net.labels[i - 1] for i in arg)


def best_k_hd(net: DiamondNetwork, k: int, lp_cap: int = DEFAULT_LP_CAP,
              full: bool = True, fd_cap: int = DEFAULT_FD_CAP) -> SelectionReport:
    """Exhaustive best-k HD selection; ties go to the lexicographically smallest subset.

    Subnetworks with k <= 2 use closed forms; larger ones the LP.  With
    ``full=False`` the full-network HD LP is skipped (for n beyond the cap).
    """
    _check_k(net, k)
    if k > 2 and k > lp_cap:
        raise CapExceeded(f"k = {k} exceeds the LP cap {lp_cap}")
    value, subset = _best(net, k, lambda s: subset_hd(s, lp_cap))
    full_hd = hd_capacity(net, lp_cap=lp_cap).value if full else None
    full_fd = fd_capacity(net, cap=fd_cap).value if net.n <= fd_cap else fd_capacity_threshold(net)
    return SelectionReport(k=k, best_subset=subset, subset_capacity=value, full_hd=full_hd,
                           full_fd=full_fd,
                           ratio_hd=None if full_hd is None else ratio(value, full_hd),
                           ratio_fd=ratio(value, full_fd), mode="HD")


def best_k_fd(net: DiamondNetwork, k: int, fd_cap: int = DEFAULT_FD_CAP) -> SelectionReport:
    """Exhaustive best-k FD selection; the HD fields are left empty."""
    _check_k(net, k)
    if net.n > fd_cap:
        raise CapExceeded(f"n = {net.n} exceeds the FD enumeration cap {fd_cap}")
    value, subset = _best(net, k, lambda s: fd_capacity(s).value)
    full_fd = fd_capacity(net).value
    return SelectionReport(k=k, best_subset=subset, subset_capacity=value, full_hd=None,
                           full_fd=full_fd, ratio_hd=None, ratio_fd=ratio(value, full_fd),
                           mode="FD")


def half_half_single_relay(net: DiamondNetwork, i: int) -> float:
    """Relay i listening half the time and transmitting half the time: min(ell_i, r_i) / 2."""
    if not 1 <= i <= net.n:
        raise NetworkError(f"relay {i} outside [1:{net.n}]")
    return 0.5 * min(net.ell[i - 1], net.r[i - 1])


def family_single_relay_value(n: int, c=1):
    """Common single-relay HD capacity of the worst-case family: K c / (n + 1)."""
    return family_constant(n) * c / (n + 1)


def sweep_family_ratios(n_range, c=1, k_set=(1, 2), columns: str = "all",
                        lp_cap: int = DEFAULT_LP_CAP, fd_cap: int = DEFAULT_FD_CAP):
    """Rows (n, k, c_hd_kn, c_hd_full, c_fd_full, ratio_hd, ratio_fd) on the worst-case family.

    ``columns="all"`` needs the full HD LP, so n is limited by ``lp_cap``.
    ``columns="closed-form"`` leaves the HD-full columns empty (None) and
    runs for any n; the FD min cut then switches to the threshold scan above
    ``fd_cap``.  k = 1 uses all n single-relay closed forms, k = 2 all pairs.
    A k larger than n keeps its row and selects all n relays.
    """
    if columns not in ("all", "closed-form"):
        raise NetworkError(f"unknown column set {columns!r}")
    rows = []
    for n in n_range:
        if columns == "all" and n > lp_cap:
            raise CapExceeded(f"n = {n} exceeds the LP cap {lp_cap}; use closed-form columns")
        ks = list(k_set)
        if any(min(k, n) > 2 for k in ks) and (columns != "all" or n > lp_cap):
            raise CapExceeded("k > 2 needs the LP for every subnetwork")
        net = gen_worst_case_family(n, c)
        c_hd = hd_capacity(net, lp_cap=lp_cap).value if columns == "all" else None
        c_fd = fd_capacity(net, cap=fd_cap).value if n <= fd_cap else fd_capacity_threshold(net)
        for k in ks:
            if min(k, n) == 1:
                ell, r = net.exact_values() if net.exact is not None else (net.ell, net.r)
                sub = float(max(single_relay_hd(a, b) for a, b in zip(ell, r)))
            else:
                sub, _ = _best(net, min(k, n), lambda s: subset_hd(s, lp_cap))
            rows.append({"n": n, "k": k, "c_hd_kn": sub, "c_hd_full": c_hd, "c_fd_full": c_fd,
                         "ratio_hd": None if c_hd is None else ratio(sub, c_hd),
                         "ratio_fd": ratio(sub, c_fd)})
    return rows


def format_number(v) -> str:
    """12 significant digits; empty for missing values."""
    if v is None:
        return ""
    if isinstance(v, (int,)) and not isinstance(v, bool):
        return str(v)
    return f"{float(v):.12g}"


def sweep_to_csv(rows) -> str:
    lines = [",".join(SWEEP_HEADER)]
    for row in rows:
        lines.append(",".join(format_number(row[h]) for h in SWEEP_HEADER))
    return "\n".join(lines) + "\n"

