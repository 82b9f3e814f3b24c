"""Half-duplex approximate capacity: the max-min schedule LP and fixed-schedule evaluation."""
from __future__ import annotations

import numpy as np

from . import _kernels
from .cuts import CapExceeded
from .exact import DEFAULT_EXACT_CAP, certify, exact_cut_matrix, solve_exact
from .network import DEFAULT_LP_CAP, DiamondNetwork, NetworkError, check_mask
from .results import CapacityResult, Schedule

# cuts whose value is within this relative distance of the minimum count as tied
TIE_RTOL = 1e-12
# a float LP answer is trusted when its duality gap is below this (relative, floor 1)
GAP_RTOL = 1e-12
# (perturbation, optimality tolerance) per float attempt
RETRY_TOLERANCES = ((1e-9, 1e-11), (1e-12, 1e-14))


class LPError(ArithmeticError):
    pass


def _argmin_smallest(values, rtol=TIE_RTOL):
    lo = float(np.min(values))
    return int(np.flatnonzero(values <= lo + rtol * max(1.0, abs(lo)))[0]), lo


def tied_min_cuts(values, rtol=1e-9):
    """All cut masks whose value is within ``rtol`` (relative, floor 1) of the minimum."""
    lo = float(np.min(values))
    return [int(a) for a in np.flatnonzero(values <= lo + rtol * max(1.0, abs(lo)))]


def schedule_cut_values(net: DiamondNetwork, schedule: Schedule) -> np.ndarray:
    """Vector over all 2^n cuts of the schedule-weighted HD cut value."""
    if schedule.n != net.n:
        raise NetworkError(f"schedule is over {schedule.n} relays, network has {net.n}")
    ell, r = net.arrays()
    return _kernels.fixed_schedule_cut_values(ell, r, np.array(schedule.states(), dtype=np.int64),
                                              np.array(schedule.probs()))


def evaluate_schedule(net: DiamondNetwork, schedule: Schedule) -> CapacityResult:
    vals = schedule_cut_values(net, schedule)
    cut, value = _argmin_smallest(vals)
    return CapacityResult(value=max(value, 0.0), min_cut=cut, schedule=schedule,
                          mode="HD-fixed-schedule", n=net.n)


def _first_distinct(X):
    """Indices of the first occurrence of every distinct row of X, ascending.

    Rows are grouped by a random projection and the grouping is verified
    exactly; a projection collision falls back to a full lexicographic unique.
    """
    h = X @ np.random.default_rng(12345).random(X.shape[1])
    _, keep, inv = np.unique(h, return_index=True, return_inverse=True)
    if not np.array_equal(X[keep[inv.ravel()]], X):
        _, keep = np.unique(X, axis=0, return_index=True)
    return np.sort(keep)


def presolve(M):
    """Drop repeated cut rows and repeated state columns; returns (M', rows, cols).

    Dead relays and tied strengths make many cuts and states indistinguishable;
    removing the copies leaves the LP unchanged and keeps the basis nonsingular.
    """
    rows = _first_distinct(M)
    cols = _first_distinct(M[rows].T)
    return np.ascontiguousarray(M[np.ix_(rows, cols)]), rows, cols


def _gap_ok(M, P, T, lam, pi, tol=GAP_RTOL):
    """True when the primal/dual pair certifies itself: worst cut within tol of the dual bound."""
    lam, pi = np.maximum(lam, 0.0), np.maximum(pi, 0.0)
    if not len(P) or lam.sum() <= 0 or pi.sum() <= 0:
        return False
    x = np.zeros(M.shape[1])
    x[list(P)] = lam / lam.sum()
    lo = float((M @ x).min())
    hi = float((pi / pi.sum() @ M[list(T)]).max())
    return hi - lo <= tol * max(1.0, abs(hi))


def _solve_reduced(net, Mr, rows, cols, exact_cap):
    """Solve the presolved LP; returns (P, T, lam, pi, iterations) in reduced indices.

    The selected backend is tried first, then with a finer perturbation, then
    the other backend, then (n within the exact cap) the rational Bland
    simplex.  A float answer is kept only if its duality gap closes, which
    catches cycling, leftover perturbation and ill-conditioned bases alike.
    """
    # the LP is positively homogeneous: solve at unit scale so tolerances are relative
    scale = float(Mr.max()) or 1.0
    Ms = Mr / scale
    solvers = [_kernels.solve_schedule_lp] + [m.solve_schedule_lp for m in _kernels.backends().values()
                                              if m.solve_schedule_lp is not _kernels.solve_schedule_lp]
    total = 0
    for solve in solvers:
        for pert, opt_tol in RETRY_TOLERANCES:
            try:
                P, T, lam, pi, it, status = solve(Ms, pert=pert, opt_tol=opt_tol)
            except (ArithmeticError, np.linalg.LinAlgError):
                continue
            total += it
            if status != _kernels.ITER_LIMIT and _gap_ok(Ms, P, T, lam, pi):
                return P, T, lam, pi, total
    if net.n <= exact_cap:
        ell, r = net.exact_values()
        Mq = exact_cut_matrix(ell, r)
        Mq = [[Mq[a][s] for s in cols] for a in rows]
        _, lam_q, pi_q, it = solve_exact(Mq)
        return (list(lam_q), list(pi_q), np.array([float(v) for v in lam_q.values()]),
                np.array([float(v) for v in pi_q.values()]), total + it)
    raise LPError("schedule LP did not converge")


def hd_capacity(net: DiamondNetwork, lp_cap: int = DEFAULT_LP_CAP, exact: bool = False,
                exact_cap: int = DEFAULT_EXACT_CAP) -> CapacityResult:
    """max over schedules of the worst cut's expected HD value.

    The returned schedule is an optimal vertex of the LP, ``min_cut`` a tight
    cut (smallest mask among ties) and ``upper_bound`` the value certified by
    the dual cut distribution.  With ``exact=True`` the optimal basis is
    re-derived in rational arithmetic and ``exact_value`` is filled in.
    """
    if net.n > lp_cap:
        raise CapExceeded(f"n = {net.n} exceeds the LP cap {lp_cap}")
    M = _kernels.cut_matrix(*net.arrays())
    Mr, rows, cols = presolve(M)
    P, T, lam, pi, iters = _solve_reduced(net, Mr, rows, cols, exact_cap)
    P = [int(cols[p]) for p in P]
    T = [int(rows[a]) for a in T]
    lam = np.maximum(lam, 0.0)
    schedule = Schedule(net.n, dict(zip(P, lam / lam.sum())))
    pi = np.maximum(pi, 0.0)
    pi = pi / pi.sum()
    ub = float((pi @ M[T]).max())
    exact_value = None
    if exact:
        if net.n > exact_cap:
            raise CapExceeded(f"n = {net.n} exceeds the exact-arithmetic cap {exact_cap}")
        ell, r = net.exact_values()
        Mq = exact_cut_matrix(ell, r)
        got = certify(Mq, P, T)
        if got is None:
            t, lam_q, pi_q, _ = solve_exact(Mq)
        else:
            t, lam_q, pi_q = got
        exact_value = t
        schedule = Schedule(net.n, {s: float(v) for s, v in lam_q.items() if v > 0})
        pi_q = {a: float(v) for a, v in pi_q.items() if v > 0}
        T, pi = list(pi_q), np.array(list(pi_q.values()))
        ub = float(t)
    x = np.zeros(M.shape[1])
    x[list(schedule.weights)] = schedule.probs()
    cut, value = _argmin_smallest(M @ x)
    return CapacityResult(value=max(value, 0.0), min_cut=cut, schedule=schedule, mode="HD",
                          n=net.n, upper_bound=ub,
                          cut_mixture={int(a): float(p) for a, p in zip(T, pi) if p > 0},
                          exact_value=exact_value, iterations=iters)


def _as_mask(keep, n):
    if isinstance(keep, (int, np.integer)):
        return check_mask(int(keep), n)
    m = 0
    for i in keep:
        if not 1 <= int(i) <= n:
            raise NetworkError(f"relay {i} outside [1:{n}]")
        m |= 1 << (int(i) - 1)
    return m


def hd_capacity_fixed_schedule(subnet_keep, net: DiamondNetwork, lambda_full: Schedule) -> CapacityResult:
    """Rate of the kept relays when they inherit the full network's schedule.

    ``subnet_keep`` is a mask or an iterable of 1-based relay numbers.  The
    schedule is marginalized onto the kept relays and the worst cut of the
    subnetwork under that marginal is returned (cut mask in subnetwork bits).
    """
    from .network import subnetwork

    keep = _as_mask(subnet_keep, net.n)
    if not keep:
        raise NetworkError("cannot keep an empty set of relays")
    if lambda_full.n != net.n:
        raise NetworkError(f"schedule is over {lambda_full.n} relays, network has {net.n}")
    sub = subnetwork(net, keep)
    return evaluate_schedule(sub, lambda_full.marginal(keep))


def schedule_support(result: CapacityResult, tol: float = 1e-9) -> int:
    if result.schedule is None:
        raise NetworkError("result carries no schedule")
    return result.schedule.support(tol)
