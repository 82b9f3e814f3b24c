# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels: cut matrix, FD min cut, fixed-schedule cut values and the
structured revised simplex for the schedule LP.

Mirrors ``_kernels_py`` step for step; see there for the algorithm notes.
"""
import numpy as np
cimport numpy as cnp
from libc.math cimport fabs

cnp.import_array()

DEF OPTIMAL = 0
DEF ITER_LIMIT = 2
DEF DIRTY = 3
DEF GOLDEN = 0.6180339887498949


cdef void _subset_max(const double[::1] w, double[::1] t) noexcept nogil:
    cdef Py_ssize_t n = w.shape[0], i, m, b
    t[0] = 0.0
    for i in range(n):
        b = 1 << i
        for m in range(b):
            t[b + m] = t[m] if t[m] > w[i] else w[i]


def subset_max(w):
    w = np.ascontiguousarray(w, dtype=np.float64)
    t = np.zeros(1 << w.shape[0])
    _subset_max(w, t)
    return t


def cut_matrix(ell, r):
    cdef const double[::1] l = np.ascontiguousarray(ell, dtype=np.float64)
    cdef const double[::1] rr = np.ascontiguousarray(r, dtype=np.float64)
    cdef Py_ssize_t n = l.shape[0], N = 1 << n, A, s
    cdef long full = N - 1
    cdef double[::1] L = np.zeros(N)
    cdef double[::1] R = np.zeros(N)
    _subset_max(l, L)
    _subset_max(rr, R)
    out = np.empty((N, N))
    cdef double[:, ::1] M = out
    with nogil:
        for A in range(N):
            for s in range(N):
                M[A, s] = L[A & ~s & full] + R[~A & s & full]
    return out


def fd_min_cut(ell, r):
    cdef const double[::1] l = np.ascontiguousarray(ell, dtype=np.float64)
    cdef const double[::1] rr = np.ascontiguousarray(r, dtype=np.float64)
    cdef Py_ssize_t n = l.shape[0], N = 1 << n, A, best = 0
    cdef long full = N - 1
    cdef double[::1] L = np.zeros(N)
    cdef double[::1] R = np.zeros(N)
    cdef double v, lo
    _subset_max(l, L)
    _subset_max(rr, R)
    lo = L[0] + R[full]
    for A in range(1, N):
        v = L[A] + R[full ^ A]
        if v < lo:
            lo = v
            best = A
    return float(lo), int(best)


def fixed_schedule_cut_values(ell, r, states, weights):
    cdef const double[::1] l = np.ascontiguousarray(ell, dtype=np.float64)
    cdef const double[::1] rr = np.ascontiguousarray(r, dtype=np.float64)
    cdef const long long[::1] st = np.ascontiguousarray(states, dtype=np.int64)
    cdef const double[::1] wt = np.ascontiguousarray(weights, dtype=np.float64)
    cdef Py_ssize_t n = l.shape[0], N = 1 << n, A, j
    cdef long full = N - 1
    cdef long s
    cdef double[::1] L = np.zeros(N)
    cdef double[::1] R = np.zeros(N)
    _subset_max(l, L)
    _subset_max(rr, R)
    out = np.zeros(N)
    cdef double[::1] o = out
    with nogil:
        for j in range(st.shape[0]):
            s = st[j]
            for A in range(N):
                o[A] += wt[j] * (L[A & ~s & full] + R[~A & s & full])
    return out


cdef int _invert(double[:, ::1] G, double[:, ::1] X, Py_ssize_t k) noexcept nogil:
    """X <- G^{-1} by Gauss-Jordan with partial pivoting; G is destroyed."""
    cdef Py_ssize_t i, j, p, c
    cdef double big, f, tmp
    for i in range(k):
        for j in range(k):
            X[i, j] = 1.0 if i == j else 0.0
    for c in range(k):
        p = c
        big = fabs(G[c, c])
        for i in range(c + 1, k):
            if fabs(G[i, c]) > big:
                big = fabs(G[i, c])
                p = i
        if big == 0.0:
            return -1
        if p != c:
            for j in range(k):
                tmp = G[c, j]; G[c, j] = G[p, j]; G[p, j] = tmp
                tmp = X[c, j]; X[c, j] = X[p, j]; X[p, j] = tmp
        f = 1.0 / G[c, c]
        for j in range(k):
            G[c, j] *= f
            X[c, j] *= f
        for i in range(k):
            if i != c and G[i, c] != 0.0:
                f = G[i, c]
                for j in range(k):
                    G[i, j] -= f * G[c, j]
                    X[i, j] -= f * X[c, j]
    return 0


cdef class _Basis:
    """Support P, tight cuts T and the factorized (k+1) x (k+1) basis."""
    cdef double[:, ::1] M
    cdef Py_ssize_t nc, ns, k
    cdef long long[::1] P
    cdef long long[::1] T
    cdef unsigned char[::1] inP
    cdef unsigned char[::1] inT
    cdef double[:, ::1] B
    cdef double[:, ::1] Binv
    cdef double[::1] lam
    cdef double[::1] pi
    cdef double t, sigma

    def __init__(self, double[:, ::1] M):
        self.M = M
        self.nc = M.shape[0]
        self.ns = M.shape[1]
        cdef Py_ssize_t kmax = min(self.nc, self.ns) + 2
        self.k = 0
        self.P = np.zeros(kmax, dtype=np.int64)
        self.T = np.zeros(kmax, dtype=np.int64)
        self.inP = np.zeros(self.ns, dtype=np.uint8)
        self.inT = np.zeros(self.nc, dtype=np.uint8)
        self.B = np.zeros((kmax, kmax))
        self.Binv = np.zeros((kmax, kmax))
        self.lam = np.zeros(kmax)
        self.pi = np.zeros(kmax)

    cdef int factor(self, const double[::1] eps) noexcept nogil:
        cdef Py_ssize_t i, j, k = self.k
        cdef double acc
        for i in range(k + 1):
            for j in range(k + 1):
                self.B[i, j] = 0.0
        for i in range(k):
            self.B[i, 0] = 1.0
            for j in range(k):
                self.B[i, 1 + j] = -self.M[self.T[i], self.P[j]]
            self.B[k, 1 + i] = 1.0
        if _invert(self.B, self.Binv, k + 1) != 0:
            return -1
        acc = self.Binv[0, k]
        for i in range(k):
            acc += self.Binv[0, i] * eps[self.T[i]]
        self.t = acc
        for j in range(k):
            acc = self.Binv[1 + j, k]
            for i in range(k):
                acc += self.Binv[1 + j, i] * eps[self.T[i]]
            self.lam[j] = acc
            self.pi[j] = self.Binv[0, j]
        self.sigma = self.Binv[0, k]
        return 0

    cdef void swap(self, int ent_lam, long long ent, int leave_lam, long long leave) noexcept nogil:
        cdef Py_ssize_t j, i
        if ent_lam and leave_lam:
            for j in range(self.k):
                if self.P[j] == leave:
                    self.P[j] = ent
                    break
            self.inP[leave] = 0
            self.inP[ent] = 1
        elif ent_lam:
            self.P[self.k] = ent
            self.T[self.k] = leave
            self.k += 1
            self.inP[ent] = 1
            self.inT[leave] = 1
        elif leave_lam:
            # order-preserving removals, as list.remove
            for j in range(self.k):
                if self.P[j] == leave:
                    break
            for i in range(j, self.k - 1):
                self.P[i] = self.P[i + 1]
            for j in range(self.k):
                if self.T[j] == ent:
                    break
            for i in range(j, self.k - 1):
                self.T[i] = self.T[i + 1]
            self.k -= 1
            self.inP[leave] = 0
            self.inT[ent] = 0
        else:
            for j in range(self.k):
                if self.T[j] == ent:
                    self.T[j] = leave
                    break
            self.inT[ent] = 0
            self.inT[leave] = 1


def solve_schedule_lp(M_in, double pert=1e-9, long max_iter=0, double opt_tol=1e-11):
    """Compiled twin of ``_kernels_py.solve_schedule_lp``; same return tuple."""
    Mn = np.ascontiguousarray(M_in, dtype=np.float64)
    cdef double[:, ::1] M = Mn
    cdef Py_ssize_t nc = M.shape[0], ns = M.shape[1]
    cdef Py_ssize_t A, s, i, j, k, nv, kmax = min(nc, ns) + 2
    cdef long long ent, leave, p
    cdef int ent_lam, leave_lam
    cdef double acc, d, dt, nrm, gam, sc, best, dmax, lo, v, dl2, quad, cross, csdl
    cdef long it = 0
    cdef int status = ITER_LIMIT
    if max_iter <= 0:
        max_iter = 20 * (nc + ns) + 1000
    cdef double[::1] eps = pert * ((np.arange(nc) * GOLDEN + 0.5) % 1.0)
    cdef double[::1] zero = np.zeros(nc)
    cdef double[::1] Qd = np.einsum("ij,ij->j", Mn, Mn)
    cdef double[::1] cs = Mn.sum(axis=0)
    # Gram columns M^T M[:, s], computed when state s first enters the support
    cdef long long[::1] qslot = np.full(ns, -1, dtype=np.int64)
    qbuf = np.zeros((16, ns))
    cdef double[:, ::1] Qb = qbuf
    cdef Py_ssize_t nq = 0
    cdef _Basis Bs = _Basis(M)
    cdef double[:, ::1] GPP = np.zeros((kmax, kmax))
    cdef double[::1] w = np.zeros(kmax)
    cdef double[::1] vals = np.zeros(kmax + nc)
    cdef double[::1] dec = np.zeros(kmax + nc)
    cdef long long[::1] var = np.zeros(kmax + nc, dtype=np.int64)
    cdef double[::1] colmin = Mn.min(axis=0)

    p = 0
    for s in range(1, ns):
        if colmin[s] > colmin[p]:
            p = s
    leave = 0
    for A in range(1, nc):
        if M[A, p] + eps[A] < M[leave, p] + eps[leave]:
            leave = A
    Bs.swap(1, p, 0, leave)

    while it < max_iter:
        if Bs.factor(eps) != 0:
            raise ArithmeticError("singular basis")
        k = Bs.k
        for i in range(k):
            p = Bs.P[i]
            if qslot[p] < 0:
                if nq == Qb.shape[0]:
                    qbuf = np.concatenate([qbuf, np.zeros_like(qbuf)])
                    Qb = qbuf
                qbuf[nq] = Mn.T @ Mn[:, p]
                qslot[p] = nq
                nq += 1
        for i in range(k):
            for j in range(k):
                GPP[i, j] = Qb[qslot[Bs.P[i]], Bs.P[j]]
        best = -1.0
        ent = -1
        ent_lam = 1
        with nogil:
            for s in range(ns):
                if Bs.inP[s]:
                    continue
                d = -Bs.sigma
                for i in range(k):
                    d += Bs.pi[i] * M[Bs.T[i], s]
                if not d > opt_tol:
                    continue
                for j in range(k + 1):
                    acc = -Bs.Binv[j, k]
                    for i in range(k):
                        acc += Bs.Binv[j, i] * M[Bs.T[i], s]
                    w[j] = acc
                dt = w[0]
                dl2 = 0.0
                quad = 0.0
                cross = 0.0
                csdl = 0.0
                for i in range(k):
                    dl2 += w[1 + i] * w[1 + i]
                    acc = 0.0
                    for j in range(k):
                        acc += GPP[i, j] * w[1 + j]
                    quad += w[1 + i] * acc
                    cross += Qb[qslot[Bs.P[i]], s] * w[1 + i]
                    csdl += cs[Bs.P[i]] * w[1 + i]
                nrm = quad + Qd[s] + nc * dt * dt + 2.0 * cross - 2.0 * dt * csdl - 2.0 * dt * cs[s]
                if nrm < 0.0:
                    nrm = 0.0
                gam = 1.0 + dl2 + dt * dt + nrm
                sc = d * d / gam
                if sc > best:
                    best = sc
                    ent = s
            for j in range(k):
                if not Bs.pi[j] < -opt_tol:
                    continue
                dt = -Bs.Binv[0, j]
                dl2 = 0.0
                quad = 0.0
                csdl = 0.0
                for i in range(k):
                    dl2 += Bs.Binv[1 + i, j] * Bs.Binv[1 + i, j]
                    acc = 0.0
                    for A in range(k):
                        acc += GPP[i, A] * Bs.Binv[1 + A, j]
                    quad += Bs.Binv[1 + i, j] * acc
                    csdl -= cs[Bs.P[i]] * Bs.Binv[1 + i, j]
                nrm = quad + nc * dt * dt - 2.0 * dt * csdl
                if nrm < 0.0:
                    nrm = 0.0
                gam = dl2 + dt * dt + nrm
                if gam < 1e-300:
                    gam = 1e-300
                sc = Bs.pi[j] * Bs.pi[j] / gam
                if sc > best:
                    best = sc
                    ent = Bs.T[j]
                    ent_lam = 0
        if ent < 0:
            status = OPTIMAL
            break
        with nogil:
            if ent_lam:
                for j in range(k + 1):
                    acc = -Bs.Binv[j, k]
                    for i in range(k):
                        acc += Bs.Binv[j, i] * M[Bs.T[i], ent]
                    w[j] = acc
            else:
                for j in range(k):
                    if Bs.T[j] == ent:
                        break
                for i in range(k + 1):
                    w[i] = -Bs.Binv[i, j]
            nv = 0
            for i in range(k):
                vals[nv] = Bs.lam[i]
                dec[nv] = -w[1 + i]
                var[nv] = i
                nv += 1
            for A in range(nc):
                if Bs.inT[A]:
                    continue
                v = eps[A] - Bs.t
                acc = -w[0]
                if ent_lam:
                    acc += M[A, ent]
                for i in range(k):
                    v += M[A, Bs.P[i]] * Bs.lam[i]
                    acc += M[A, Bs.P[i]] * w[1 + i]
                vals[nv] = v
                dec[nv] = -acc
                var[nv] = A
                nv += 1
            dmax = 1.0
            for j in range(nv):
                if fabs(dec[j]) > dmax:
                    dmax = fabs(dec[j])
            lo = -1.0
            for j in range(nv):
                if dec[j] > 1e-9 * dmax:
                    v = (vals[j] if vals[j] > 0.0 else 0.0) / dec[j]
                    if lo < 0.0 or v < lo:
                        lo = v
            leave = -1
            if lo >= 0.0:
                acc = -1.0
                for j in range(nv):
                    if dec[j] > 1e-9 * dmax:
                        v = (vals[j] if vals[j] > 0.0 else 0.0) / dec[j]
                        if v <= lo * (1 + 1e-12) + 1e-300 and dec[j] > acc:
                            acc = dec[j]
                            leave = j
        if leave < 0:
            raise ArithmeticError("unbounded ray in a bounded schedule LP")
        if leave < k:
            Bs.swap(ent_lam, ent, 1, Bs.P[var[leave]])
        else:
            Bs.swap(ent_lam, ent, 0, var[leave])
        it += 1

    if status == OPTIMAL:
        it, clean = _dual_cleanup(Bs, zero, it, it + 20 * (Bs.k + 5))
        if not clean:
            status = DIRTY
    if Bs.factor(zero) != 0:
        raise ArithmeticError("singular basis")
    k = Bs.k
    return ([int(Bs.P[j]) for j in range(k)], [int(Bs.T[j]) for j in range(k)],
            np.array([Bs.lam[j] for j in range(k)]), np.array([Bs.pi[j] for j in range(k)]),
            int(it), status)


cdef tuple _dual_cleanup(_Basis Bs, double[::1] zero, long it, long max_iter, double feas_tol=1e-12):
    """Bland dual simplex on the unperturbed rows."""
    cdef double[:, ::1] M = Bs.M
    cdef Py_ssize_t nc = Bs.nc, ns = Bs.ns, k, i, s, A
    cdef double[::1] z = np.zeros(min(nc, ns) + 2)
    cdef double acc, v, scale, lo, rate, dj
    cdef long long vbad, rsel, extra, ent, vent
    cdef int leave_lam, ent_lam
    while it < max_iter:
        if Bs.factor(zero) != 0:
            raise ArithmeticError("singular basis")
        k = Bs.k
        vbad = -1
        rsel = -1
        for i in range(k):
            if Bs.lam[i] < -feas_tol and (vbad < 0 or Bs.P[i] < vbad):
                vbad = Bs.P[i]
                rsel = i
        for A in range(nc):
            if Bs.inT[A]:
                continue
            v = -Bs.t
            for i in range(k):
                v += M[A, Bs.P[i]] * Bs.lam[i]
            if v < -feas_tol and (vbad < 0 or ns + A < vbad):
                vbad = ns + A
                rsel = -1 - A
        if vbad < 0:
            return it, True
        if rsel >= 0:
            leave_lam = 1
            extra = -1
            for i in range(k + 1):
                z[i] = -Bs.Binv[1 + rsel, i]
        else:
            leave_lam = 0
            extra = -1 - rsel
            for i in range(k + 1):
                acc = Bs.Binv[0, i]
                for s in range(k):
                    acc -= M[extra, Bs.P[s]] * Bs.Binv[1 + s, i]
                z[i] = acc
        scale = 1.0
        for s in range(ns):
            if Bs.inP[s]:
                continue
            rate = _rate_lam(Bs, z, s, extra)
            if fabs(rate) > scale:
                scale = fabs(rate)
        for i in range(k):
            if fabs(z[i]) > scale:
                scale = fabs(z[i])
        lo = -1.0
        for s in range(ns):
            if Bs.inP[s]:
                continue
            rate = _rate_lam(Bs, z, s, extra)
            if rate > 1e-9 * scale:
                v = _dlam(Bs, s) / rate
                if lo < 0.0 or v < lo:
                    lo = v
        for i in range(k):
            if z[i] > 1e-9 * scale:
                v = (Bs.pi[i] if Bs.pi[i] > 0.0 else 0.0) / z[i]
                if lo < 0.0 or v < lo:
                    lo = v
        if lo < 0.0:
            return it, False
        # lowest variable index in the tie set: states first, then cuts
        vent = -1
        ent_lam = 1
        for s in range(ns):
            if Bs.inP[s]:
                continue
            rate = _rate_lam(Bs, z, s, extra)
            if rate > 1e-9 * scale and _dlam(Bs, s) / rate <= lo * (1 + 1e-9) + 1e-300:
                vent = s
                break
        if vent < 0:
            ent_lam = 0
            for i in range(k):
                if z[i] > 1e-9 * scale:
                    v = (Bs.pi[i] if Bs.pi[i] > 0.0 else 0.0) / z[i]
                    if v <= lo * (1 + 1e-9) + 1e-300 and (vent < 0 or Bs.T[i] < vent):
                        vent = Bs.T[i]
        if leave_lam:
            Bs.swap(ent_lam, vent, 1, Bs.P[rsel])
        else:
            Bs.swap(ent_lam, vent, 0, extra)
        it += 1
    return it, False


cdef inline double _rate_lam(_Basis Bs, double[::1] z, Py_ssize_t s, long long extra) noexcept nogil:
    cdef Py_ssize_t i
    cdef double acc = z[Bs.k]
    for i in range(Bs.k):
        acc -= z[i] * Bs.M[Bs.T[i], s]
    if extra >= 0:
        acc += Bs.M[extra, s]
    return acc


cdef inline double _dlam(_Basis Bs, Py_ssize_t s) noexcept nogil:
    cdef Py_ssize_t i
    cdef double acc = Bs.sigma
    for i in range(Bs.k):
        acc -= Bs.pi[i] * Bs.M[Bs.T[i], s]
    return acc if acc > 0.0 else 0.0
