"""Independent reference implementations used only by the tests.

Nothing here calls the package's kernels or its simplex: cut values are
evaluated from Python sets, and the HD oracle is a schedule grid followed
by exact vertex enumeration on each candidate support.
"""
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

import numpy as np


def _max(values):
    return max(values, default=0)


def set_cut_value(ell, r, A, S=None):
    """FD (S is None) or HD cut value from sets of 0-based relay indices.

    A: relays on the destination side.  S: relays transmitting.
    """
    n = len(ell)
    rest = set(range(n)) - set(A)
    if S is None:
        return _max(ell[i] for i in A) + _max(r[i] for i in rest)
    listen = set(range(n)) - set(S)
    return _max(ell[i] for i in set(A) & listen) + _max(r[i] for i in rest & set(S))


def all_subsets(n):
    for size in range(n + 1):
        yield from combinations(range(n), size)


def to_mask(subset):
    return sum(1 << i for i in subset)


def brute_fd(ell, r):
    """(min value, smallest minimizing mask) by plain enumeration."""
    best = None
    for A in all_subsets(len(ell)):
        v, m = set_cut_value(ell, r, A), to_mask(A)
        if best is None or v < best[0] or (v == best[0] and m < best[1]):
            best = (v, m)
    return best


def brute_matrix(ell, r):
    n = len(ell)
    N = 1 << n
    M = np.zeros((N, N))
    for A in all_subsets(n):
        for S in all_subsets(n):
            M[to_mask(A), to_mask(S)] = set_cut_value(ell, r, A, S)
    return M


@lru_cache(maxsize=None)
def simplex_grid(m, steps):
    """All points of the (m-1)-simplex with coordinates in multiples of 1/steps."""
    pts = []

    def rec(prefix, left, k):
        if k == 1:
            pts.append(prefix + [left])
            return
        for x in range(left + 1):
            rec(prefix + [x], left - x, k - 1)

    rec([], steps, m)
    return np.array(pts, dtype=float).T / steps


def _vertex_best(Ms):
    """Exact optimum of max_w min_rows (Ms w) over the simplex, by vertex enumeration.

    Unknowns (t, w_1..w_m).  Each vertex makes m of the constraints
    {t = row_A . w} and {w_j = 0} tight, plus sum(w) = 1.
    """
    nc, m = Ms.shape
    rows = []
    for A in range(nc):
        rows.append(np.concatenate([[1.0], -Ms[A]]))
    for j in range(m):
        e = np.zeros(m + 1)
        e[1 + j] = 1.0
        rows.append(e)
    rows = np.array(rows)
    simplex_row = np.concatenate([[0.0], np.ones(m)])
    best, arg = -np.inf, None
    combos = list(combinations(range(len(rows)), m))
    sysA = np.empty((len(combos), m + 1, m + 1))
    for c, idx in enumerate(combos):
        sysA[c, :m] = rows[list(idx)]
        sysA[c, m] = simplex_row
    rhs = np.zeros(m + 1)
    rhs[m] = 1.0
    ok = np.abs(np.linalg.det(sysA)) > 1e-12
    if not ok.any():
        return best, arg
    sol = np.linalg.solve(sysA[ok], np.broadcast_to(rhs, (ok.sum(), m + 1))[..., None])[..., 0]
    t, w = sol[:, 0], sol[:, 1:]
    vals = w @ Ms.T
    feas = (w.min(axis=1) >= -1e-12) & (vals.min(axis=1) >= t - 1e-10)
    if feas.any():
        k = int(np.argmax(np.where(feas, t, -np.inf)))
        best, arg = float(t[k]), w[k]
    return best, arg


def grid_oracle(ell, r, step=100):
    """(best grid value, refined value) over supports of size n + 1.

    The grid value is attained by an explicit feasible schedule, so it is a
    certified lower bound on the optimum; the refinement enumerates every
    vertex of the problem restricted to each support.
    """
    n = len(ell)
    M = brute_matrix(ell, r)
    N = M.shape[1]
    m = min(n + 1, N)
    W = simplex_grid(m, step)
    grid_best, refined = -np.inf, -np.inf
    for sup in combinations(range(N), m):
        Ms = M[:, list(sup)]
        g = float((Ms @ W).min(axis=0).max())
        grid_best = max(grid_best, g)
        v, _ = _vertex_best(Ms)
        refined = max(refined, v)
    return grid_best, max(refined, grid_best)


def frac_single(ell, r):
    ell, r = Fraction(ell), Fraction(r)
    return ell * r / (ell + r) if ell + r else Fraction(0)
