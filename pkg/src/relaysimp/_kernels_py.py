"""Pure numpy kernels.  Same signatures as the compiled ``_core`` module.

Everything here works on raw arrays: ``ell`` and ``r`` are float64 vectors,
masks are ints in [0, 2^n).
"""
import numpy as np

OPTIMAL, ITER_LIMIT, DIRTY = 0, 2, 3
GOLDEN = 0.6180339887498949


def subset_max(w):
    """t[m] = max of w over the bits of m (0 for m = 0)."""
    n = len(w)
    t = np.zeros(1 << n)
    for i in range(n):
        b = 1 << i
        t[b:2 * b] = np.maximum(t[:b], w[i])
    return t


def cut_matrix(ell, r):
    """M[A, s] = max_{i in A, i listens} ell_i + max_{i not in A, i transmits} r_i."""
    ell = np.asarray(ell, dtype=float)
    r = np.asarray(r, dtype=float)
    n = len(ell)
    full = (1 << n) - 1
    L = subset_max(ell)
    R = subset_max(r)
    m = np.arange(1 << n)
    A = m[:, None]
    s = m[None, :]
    return L[A & ~s & full] + R[~A & s & full]


def fd_min_cut(ell, r):
    """(min_A max_{A} ell + max_{A^c} r, smallest argmin mask)."""
    ell = np.asarray(ell, dtype=float)
    r = np.asarray(r, dtype=float)
    n = len(ell)
    full = (1 << n) - 1
    m = np.arange(1 << n)
    vals = subset_max(ell)[m] + subset_max(r)[full ^ m]
    a = int(np.argmin(vals))
    return float(vals[a]), a


def fixed_schedule_cut_values(ell, r, states, weights):
    """Vector over all cuts A of sum_s w_s M[A, s] for a sparse schedule."""
    ell = np.asarray(ell, dtype=float)
    r = np.asarray(r, dtype=float)
    n = len(ell)
    full = (1 << n) - 1
    L = subset_max(ell)
    R = subset_max(r)
    A = np.arange(1 << n)
    out = np.zeros(1 << n)
    for s, w in zip(states, weights):
        s = int(s)
        out += w * (L[A & ~s & full] + R[~A & s & full])
    return out


def _factor(M, P, T, eps):
    """Basis inverse and primal/dual values for the support P and tight cuts T.

    Unknowns (t, lam_P) solve t - M[T,P] lam_P = eps_T and sum(lam_P) = 1.
    The duals (pi_T, sigma) solve the transposed system with costs (1, 0..0):
    pi is a probability vector over the tight cuts and sigma equals t.
    """
    k = len(P)
    B = np.zeros((k + 1, k + 1))
    B[:k, 0] = 1.0
    B[:k, 1:] = -M[np.ix_(T, P)]
    B[k, 1:] = 1.0
    Binv = np.linalg.inv(B)
    sol = Binv @ np.append(eps[T], 1.0)
    dual = Binv[0].copy()
    return Binv, sol[0], sol[1:], dual[:k], dual[k]


def _gram(M, cache, s):
    if s not in cache:
        cache[s] = M.T @ M[:, s]
    return cache[s]


def solve_schedule_lp(M, pert=1e-9, max_iter=0, opt_tol=1e-11):
    """max t  s.t.  t <= (M lam)_A for every row A,  sum(lam) = 1,  lam >= 0.

    Rows of M are cuts and columns are states.  Revised primal simplex over
    schedules: every iterate is a feasible schedule whose worst cut value t
    never decreases.  The basis is (t, lam_P) plus the slacks of the non-tight
    cuts, so only a (k+1) x (k+1) matrix is factorized, with k = |P| = |T|
    the support size.  It is refactorized from scratch every iteration.

    Pricing is exact steepest edge (Gram columns of M are cached per state).
    Degenerate ties are broken by perturbing the cut rows to t <= M lam + eps
    with eps of order ``pert``; a Bland dual simplex pass removes eps at the
    end so the returned vertex is optimal for the unperturbed problem.

    Returns (P, T, lam_P, pi_T, iterations, status).
    """
    M = np.ascontiguousarray(M, dtype=float)
    nc, ns = M.shape
    if max_iter <= 0:
        max_iter = 20 * (nc + ns) + 1000
    eps = pert * ((np.arange(nc) * GOLDEN + 0.5) % 1.0)
    Qd = np.einsum("ij,ij->j", M, M)
    cs = M.sum(axis=0)
    cache = {}
    s0 = int(np.argmax(M.min(axis=0)))
    P = [s0]
    T = [int(np.argmin(M[:, s0] + eps))]
    it = 0
    status = ITER_LIMIT
    while it < max_iter:
        k = len(P)
        Binv, t, lamP, pi, sigma = _factor(M, P, T, eps)
        d = M[T].T @ pi - sigma
        d[P] = 0.0
        cand = np.flatnonzero(d > opt_tol)
        slack_cand = np.flatnonzero(pi < -opt_tol)
        if len(cand) == 0 and len(slack_cand) == 0:
            status = OPTIMAL
            break
        GP = np.stack([_gram(M, cache, p) for p in P], axis=1)
        GPP = GP[P]
        best, ent = -1.0, None
        if len(cand):
            # (dt, dlam_P) per unit of lam_s is Binv[:, :k] M[T,s] - Binv[:, k]
            W = Binv[:, :k] @ M[np.ix_(T, cand)] - Binv[:, k:k + 1]
            dt, dl = W[0], W[1:]
            nrm = (np.einsum("im,ij,jm->m", dl, GPP, dl) + Qd[cand] + nc * dt ** 2
                   + 2 * np.einsum("mi,im->m", GP[cand], dl)
                   - 2 * dt * (cs[P] @ dl) - 2 * dt * cs[cand])
            gam = 1.0 + np.einsum("im,im->m", dl, dl) + dt ** 2 + np.maximum(nrm, 0.0)
            score = d[cand] ** 2 / gam
            j = int(np.argmax(score))
            best, ent = score[j], ("lam", int(cand[j]))
        for i in slack_cand:
            w = -Binv[:, i]
            dt, dl = w[0], w[1:]
            nrm = dl @ GPP @ dl + nc * dt ** 2 - 2 * dt * (cs[P] @ dl)
            gam = dl @ dl + dt ** 2 + max(nrm, 0.0)
            sc = pi[i] ** 2 / max(gam, 1e-300)
            if sc > best:
                best, ent = sc, ("cut", T[i])
        if ent[0] == "lam":
            s = ent[1]
            w = Binv[:, :k] @ M[T, s] - Binv[:, k]
            du = M[:, P] @ w[1:] + M[:, s] - w[0]
        else:
            w = -Binv[:, T.index(ent[1])]
            du = M[:, P] @ w[1:] - w[0]
        inT = np.zeros(nc, bool)
        inT[T] = True
        notT = np.flatnonzero(~inT)
        u = M[np.ix_(notT, P)] @ lamP - t + eps[notT]
        vals = np.concatenate([lamP, u])
        dec = -np.concatenate([w[1:], du[notT]])
        pos = dec > 1e-9 * max(1.0, np.abs(dec).max())
        if not pos.any():
            raise ArithmeticError("unbounded ray in a bounded schedule LP")
        ratio = np.full(len(dec), np.inf)
        ratio[pos] = np.maximum(vals[pos], 0.0) / dec[pos]
        lo = ratio.min()
        ties = np.flatnonzero(ratio <= lo * (1 + 1e-12) + 1e-300)
        L = int(ties[np.argmax(dec[ties])])
        leave = ("lam", P[L]) if L < k else ("cut", int(notT[L - k]))
        _swap(P, T, ent, leave)
        it += 1
    if status == OPTIMAL:
        it, clean = _dual_cleanup(M, P, T, it, it + 20 * (len(P) + 5))
        if not clean:
            status = DIRTY
    _, t, lamP, pi, _ = _factor(M, P, T, np.zeros(nc))
    return list(P), list(T), lamP, pi, it, status


def _swap(P, T, ent, leave):
    if ent[0] == "lam" and leave[0] == "lam":
        P[P.index(leave[1])] = ent[1]
    elif ent[0] == "lam":
        P.append(ent[1])
        T.append(leave[1])
    elif leave[0] == "lam":
        P.remove(leave[1])
        T.remove(ent[1])
    else:
        T[T.index(ent[1])] = leave[1]


def _dual_cleanup(M, P, T, it, max_iter, feas_tol=1e-12):
    """Bland dual simplex with eps = 0.  Keeps pi, sigma dual feasible."""
    nc, ns = M.shape
    zero = np.zeros(nc)
    while it < max_iter:
        k = len(P)
        Binv, t, lamP, pi, sigma = _factor(M, P, T, zero)
        inT = np.zeros(nc, bool)
        inT[T] = True
        notT = np.flatnonzero(~inT)
        u = M[np.ix_(notT, P)] @ lamP - t
        # variable order for Bland: states 0..ns-1, then cut slacks ns+A
        bad = [(P[i], i) for i in range(k) if lamP[i] < -feas_tol]
        bad += [(ns + int(notT[j]), k + j) for j in np.flatnonzero(u < -feas_tol)]
        if not bad:
            return it, True
        _, r = min(bad)
        if r < k:
            h = np.zeros(k + 1)
            h[1 + r] = 1.0
            extra = None
            leave = ("lam", P[r])
        else:
            A = int(notT[r - k])
            h = np.append(-1.0, M[A, P])
            extra = A
            leave = ("cut", A)
        z = -(h @ Binv)
        # rate of the leaving basic variable per unit of each nonbasic variable
        rate_lam = -(z[:k] @ M[T]) + z[k]
        if extra is not None:
            rate_lam = rate_lam + M[extra]
        rate_lam[P] = 0.0
        rate_cut = z[:k]
        d_lam = np.maximum(sigma - M[T].T @ pi, 0.0)
        d_cut = np.maximum(pi, 0.0)
        scale = max(1.0, np.abs(rate_lam).max(), np.abs(rate_cut).max() if k else 0.0)
        pos_l = np.flatnonzero(rate_lam > 1e-9 * scale)
        pos_c = np.flatnonzero(rate_cut > 1e-9 * scale)
        cands = [(d_lam[s] / rate_lam[s], int(s), ("lam", int(s))) for s in pos_l]
        cands += [(d_cut[i] / rate_cut[i], ns + T[i], ("cut", T[i])) for i in pos_c]
        if not cands:
            return it, False
        lo = min(c[0] for c in cands)
        ent = min((c for c in cands if c[0] <= lo * (1 + 1e-9) + 1e-300), key=lambda c: c[1])[2]
        _swap(P, T, ent, leave)
        it += 1
    return it, False
