"""Exact rational arithmetic for the schedule LP.

Two services: certifying a floating-point basis (re-solve the small basis
system in Fractions and check primal and dual feasibility exactly), and a
Fraction simplex with Bland's rule for when certification fails.  Both work on
the same (t, lam) formulation as the float solver.
"""
from __future__ import annotations

from fractions import Fraction

DEFAULT_EXACT_CAP = 8


def _subset_max(w):
    t = [Fraction(0)] * (1 << len(w))
    for i, v in enumerate(w):
        b = 1 << i
        for m in range(b):
            t[b + m] = max(t[m], v)
    return t


def exact_cut_matrix(ell, r):
    n = len(ell)
    full = (1 << n) - 1
    L = _subset_max([Fraction(v) for v in ell])
    R = _subset_max([Fraction(v) for v in r])
    N = 1 << n
    return [[L[A & ~s & full] + R[~A & s & full] for s in range(N)] for A in range(N)]


def _inverse(A):
    """Gauss-Jordan inverse over Fractions; None if singular."""
    k = len(A)
    G = [row[:] + [Fraction(int(i == j)) for j in range(k)] for i, row in enumerate(A)]
    for c in range(k):
        p = next((i for i in range(c, k) if G[i][c] != 0), None)
        if p is None:
            return None
        G[c], G[p] = G[p], G[c]
        f = G[c][c]
        G[c] = [v / f for v in G[c]]
        for i in range(k):
            if i != c and G[i][c] != 0:
                g = G[i][c]
                G[i] = [a - g * b for a, b in zip(G[i], G[c])]
    return [row[k:] for row in G]


def _basis(M, P, T):
    k = len(P)
    B = [[Fraction(0)] * (k + 1) for _ in range(k + 1)]
    for i in range(k):
        B[i][0] = Fraction(1)
        for j in range(k):
            B[i][1 + j] = -M[T[i]][P[j]]
        B[k][1 + i] = Fraction(1)
    Binv = _inverse(B)
    if Binv is None:
        return None
    t = Binv[0][k]
    lam = [Binv[1 + j][k] for j in range(k)]
    pi = [Binv[0][j] for j in range(k)]
    sigma = Binv[0][k]
    return Binv, t, lam, pi, sigma


def certify(M, P, T):
    """Exact optimality check of the basis (P, T).

    Returns (t, lam, pi) with Fractions when lam is a feasible schedule with
    worst cut exactly t and pi a cut distribution under which no state beats
    t; otherwise None.
    """
    if len(P) != len(T) or not P:
        return None
    got = _basis(M, P, T)
    if got is None:
        return None
    _, t, lam, pi, sigma = got
    if min(lam) < 0 or min(pi) < 0:
        return None
    for row in M:
        if sum(row[p] * x for p, x in zip(P, lam)) < t:
            return None
    ns = len(M[0])
    for s in range(ns):
        if sum(M[a][s] * y for a, y in zip(T, pi)) > sigma:
            return None
    return t, dict(zip(P, lam)), dict(zip(T, pi))


def solve_exact(M, max_iter=100000):
    """Fraction simplex with Bland's rule.  Returns (t, lam dict, pi dict, iterations)."""
    nc, ns = len(M), len(M[0])
    s0 = max(range(ns), key=lambda s: (min(M[a][s] for a in range(nc)), -s))
    a0 = min(range(nc), key=lambda a: (M[a][s0], a))
    P, T = [s0], [a0]
    for it in range(max_iter):
        k = len(P)
        Binv, t, lam, pi, sigma = _basis(M, P, T)
        inP = set(P)
        ent = None
        # variables: state s has index s, slack of cut A has index ns + A
        for s in range(ns):
            if s not in inP and sum(y * M[a][s] for a, y in zip(T, pi)) > sigma:
                ent = ("lam", s)
                break
        if ent is None:
            neg = [T[i] for i in range(k) if pi[i] < 0]
            if neg:
                ent = ("cut", min(neg))
        if ent is None:
            return t, dict(zip(P, lam)), dict(zip(T, pi)), it
        if ent[0] == "lam":
            s = ent[1]
            w = [sum(Binv[j][i] * M[T[i]][s] for i in range(k)) - Binv[j][k] for j in range(k + 1)]
        else:
            c = T.index(ent[1])
            w = [-Binv[j][c] for j in range(k + 1)]
        inT = set(T)
        best = None
        for i in range(k):
            dec = -w[1 + i]
            if dec > 0:
                key = (lam[i] / dec, P[i])
                if best is None or key < best[0]:
                    best = (key, ("lam", P[i]))
        for a in range(nc):
            if a in inT:
                continue
            du = sum(M[a][P[i]] * w[1 + i] for i in range(k)) - w[0]
            if ent[0] == "lam":
                du += M[a][ent[1]]
            if du < 0:
                u = sum(M[a][P[i]] * lam[i] for i in range(k)) - t
                key = (u / -du, ns + a)
                if best is None or key < best[0]:
                    best = (key, ("cut", a))
        if best is None:
            raise ArithmeticError("unbounded ray in a bounded schedule LP")
        leave = best[1]
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
    raise ArithmeticError("exact simplex hit its iteration limit")
