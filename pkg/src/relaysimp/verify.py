"""Numeric checkers for the simplification lemmas and theorem bounds.

Every checker returns a LemmaVerdict whose witness carries enough data
(partition, schedule, cuts, values) to recompute lhs and rhs independently.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations, permutations

import numpy as np

from .cuts import fd_capacity
from .network import (DEFAULT_LP_CAP, DiamondNetwork, NetworkError, gen_random,
                      mask_from_relays, relays_from_mask, subnetwork)
from .results import Schedule
from .schedule_lp import hd_capacity, hd_capacity_fixed_schedule, schedule_cut_values, tied_min_cuts
from .simplify import best_k_hd

TOL = 1e-9


@dataclass(frozen=True)
class LemmaVerdict:
    lemma_id: str
    holds: bool
    lhs: float
    rhs: float
    witness: dict = field(default_factory=dict)
    applicable: bool = True

    @classmethod
    def compare(cls, lemma_id, lhs, rhs, witness, applicable=True, tol=TOL):
        return cls(lemma_id, bool(lhs <= rhs + tol), float(lhs), float(rhs), witness, applicable)

    def to_dict(self) -> dict:
        return {"lemma_id": self.lemma_id, "holds": self.holds, "applicable": self.applicable,
                "lhs": self.lhs, "rhs": self.rhs, "witness": self.witness}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _partition(net, partition):
    parts = [sorted({int(i) for i in p}) for p in partition]
    if len(parts) != 2 or not parts[0] or not parts[1]:
        raise NetworkError("a partition needs two nonempty parts")
    m1, m2 = mask_from_relays(parts[0], net.n), mask_from_relays(parts[1], net.n)
    if m1 & m2 or (m1 | m2) != net.full_mask:
        raise NetworkError(f"{parts} is not a bipartition of [1:{net.n}]")
    return parts


def bipartitions(n: int):
    """Unordered bipartitions of [1:n] with relay 1 always in the first part."""
    rest = list(range(2, n + 1))
    for size in range(0, n - 1):
        for extra in combinations(rest, size):
            first = [1, *extra]
            yield first, [i for i in rest if i not in extra]


# ---------------------------------------------------------------- partitions

def check_lemma1(net: DiamondNetwork, partition, schedule: Schedule | None = None,
                 lp_cap: int = DEFAULT_LP_CAP, tol: float = TOL) -> LemmaVerdict:
    """C^HD(net) <= C*(N1) + C*(N2) with both parts inheriting the optimal schedule."""
    parts = _partition(net, partition)
    full = None
    if schedule is None:
        full = hd_capacity(net, lp_cap=lp_cap)
        schedule = full.schedule
    value = float(np.min(schedule_cut_values(net, schedule))) if full is None else full.value
    pieces = []
    for p in parts:
        res = hd_capacity_fixed_schedule(p, net, schedule)
        pieces.append({"keep": p, "min_cut": [p[i - 1] for i in relays_from_mask(res.min_cut)],
                       "value": res.value})
    witness = {"partition": parts, "schedule": schedule.to_dict(), "full_value": value,
               "parts": pieces}
    return LemmaVerdict.compare("lemma1", value, sum(x["value"] for x in pieces), witness, tol=tol)


def check_fd_partition(net: DiamondNetwork, partition, tol: float = TOL) -> LemmaVerdict:
    """C^FD(net) <= C^FD(N1) + C^FD(N2)."""
    parts = _partition(net, partition)
    full = fd_capacity(net)
    pieces = []
    for p in parts:
        res = fd_capacity(subnetwork(net, p))
        pieces.append({"keep": p, "min_cut": [p[i - 1] for i in relays_from_mask(res.min_cut)],
                       "value": res.value})
    witness = {"partition": parts, "full_min_cut": list(relays_from_mask(full.min_cut)),
               "parts": pieces}
    return LemmaVerdict.compare("fd_partition", full.value, sum(x["value"] for x in pieces),
                                witness, tol=tol)


# ---------------------------------------------------------------- three-relay lemmas

# the three 2-relay subnetworks of a 3-relay network, in this fixed order
PAIRS = ((1, 2), (1, 3), (2, 3))


def lemma3_pair(cuts):
    """First pair (p, q) of subnetworks (1-based into PAIRS) whose min-cut sizes differ by != 2.

    ``cuts`` holds the three min-cut masks (any bit layout; only the sizes
    matter).  Returns None if no pair qualifies.
    """
    sizes = [bin(c).count("1") for c in cuts]
    for p, q in combinations(range(3), 2):
        if abs(sizes[p] - sizes[q]) != 2:
            return p + 1, q + 1
    return None


def shared_relay(p: int, q: int) -> int:
    common = set(PAIRS[p - 1]) & set(PAIRS[q - 1])
    return common.pop()


def _subnet_cut_sets(net, keep, schedule, mode):
    """Candidate min cuts (masks in subnetwork bits) of the 2-relay subnetwork ``keep``."""
    sub = subnetwork(net, keep)
    if schedule is not None:
        vals = schedule_cut_values(sub, schedule.marginal(mask_from_relays(keep, net.n)))
        return tied_min_cuts(vals)
    if mode == "FD":
        return [fd_capacity(sub).min_cut]
    return [hd_capacity(sub).min_cut]


def check_lemma3(net: DiamondNetwork, mode: str = "HD", schedule: Schedule | None = None):
    """Returns ((p, q), verdict) for the three 2-relay subnetworks of a 3-relay net.

    Min cuts come from each subnetwork's own optimum (FD or HD), or from the
    fixed ``schedule`` when given.  lhs is 0 when a qualifying pair exists and
    1 otherwise, against rhs 0.
    """
    if net.n != 3:
        raise NetworkError("lemma 3 concerns 3-relay networks")
    cuts = []
    for keep in PAIRS:
        cand = _subnet_cut_sets(net, keep, schedule, mode.upper())
        cuts.append(cand[0])
    pair = lemma3_pair(cuts)
    witness = {"mode": mode.upper() if schedule is None else "fixed-schedule",
               "min_cuts": [[keep[i - 1] for i in relays_from_mask(c)] for keep, c in zip(PAIRS, cuts)],
               "pair": None if pair is None else list(pair)}
    return pair, LemmaVerdict.compare("lemma3", 0.0 if pair else 1.0, 0.0, witness)


def _triple(t):
    t = tuple(int(x) for x in t)
    if sorted(t) != [1, 2, 3]:
        raise NetworkError(f"{t} is not a permutation of (1, 2, 3)")
    return t


def check_lemma2(net: DiamondNetwork, triple, schedule: Schedule | None = None,
                 tol: float = TOL) -> LemmaVerdict:
    """C^HD(net) + C*({i}) <= C*({i,j}) + C*({i,k}) under the optimal schedule.

    Applicable when the fixed-schedule min cuts of {i,j} and {i,k} can be
    chosen with sizes differing by != 2; all tied min cuts are tried.
    """
    if net.n != 3:
        raise NetworkError("lemma 2 concerns 3-relay networks")
    i, j, k = _triple(triple)
    value = None
    if schedule is None:
        full = hd_capacity(net)
        schedule, value = full.schedule, full.value
    if value is None:
        value = float(np.min(schedule_cut_values(net, schedule)))
    nij, nik = sorted((i, j)), sorted((i, k))
    cuts_ij = _subnet_cut_sets(net, nij, schedule, "HD")
    cuts_ik = _subnet_cut_sets(net, nik, schedule, "HD")
    ok = [(a, b) for a in cuts_ij for b in cuts_ik
          if abs(bin(a).count("1") - bin(b).count("1")) != 2]
    c_i = hd_capacity_fixed_schedule([i], net, schedule).value
    c_ij = hd_capacity_fixed_schedule(nij, net, schedule).value
    c_ik = hd_capacity_fixed_schedule(nik, net, schedule).value
    chosen = ok[0] if ok else (cuts_ij[0], cuts_ik[0])
    witness = {"triple": [i, j, k], "schedule": schedule.to_dict(), "full_value": value,
               "c_i": c_i, "c_ij": c_ij, "c_ik": c_ik,
               "min_cut_ij": [nij[t - 1] for t in relays_from_mask(chosen[0])],
               "min_cut_ik": [nik[t - 1] for t in relays_from_mask(chosen[1])]}
    return LemmaVerdict.compare("lemma2", value + c_i, c_ij + c_ik, witness,
                                applicable=bool(ok), tol=tol)


def check_lemma_chain(net: DiamondNetwork, tol: float = TOL) -> LemmaVerdict:
    """Re-derive best-2 >= 2/3 C^HD on a 3-relay net from the lemma verdicts.

    Lemma 3 (under the optimal schedule) picks the shared relay i, lemma 2
    bounds C + C*({i}) and lemma 1 on ({i}, {j,k}) bounds C - C*({i}); summed,
    2C <= sum of the three pair values C*, each at most the pair's own HD
    capacity.  lhs = 2C/3, rhs = best pair HD capacity.
    """
    if net.n != 3:
        raise NetworkError("the chain concerns 3-relay networks")
    full = hd_capacity(net)
    lam = full.schedule
    verdict2 = None
    for i in (1, 2, 3):
        j, k = [x for x in (1, 2, 3) if x != i]
        v = check_lemma2(net, (i, j, k), schedule=lam, tol=tol)
        if v.applicable and v.holds:
            verdict2 = v
            break
    if verdict2 is None:
        return LemmaVerdict("chain", False, 2 * full.value / 3, 0.0,
                            {"reason": "no applicable lemma-2 triple"}, applicable=False)
    i, j, k = verdict2.witness["triple"]
    verdict1 = check_lemma1(net, ([i], sorted((j, k))), schedule=lam, tol=tol)
    pair_star = verdict2.witness["c_ij"] + verdict2.witness["c_ik"] + verdict1.witness["parts"][1]["value"]
    best = best_k_hd(net, 2, full=False)
    summed = 2 * full.value <= pair_star + 2 * tol
    witness = {"triple": [i, j, k], "lemma1": verdict1.to_dict(), "lemma2": verdict2.to_dict(),
               "pair_star_sum": pair_star, "best_pair": list(best.best_subset),
               "best_pair_value": best.subset_capacity, "summed_ok": summed}
    v = LemmaVerdict.compare("chain", 2 * full.value / 3, best.subset_capacity, witness, tol=tol)
    if not (summed and verdict1.holds and pair_star <= 3 * best.subset_capacity + 3 * tol):
        v = LemmaVerdict("chain", False, v.lhs, v.rhs, witness)
    return v


# ---------------------------------------------------------------- Table I

def _mx(*xs):
    out = xs[0]
    for x in xs[1:]:
        out = np.maximum(out, x)
    return out


# rows keyed by (A1, A2) over the symbols i, j, k; values are
# (A_F, A_S, printed f, printed g) with l, r dicts indexed by symbol
TABLE1 = {
    ("", ""): ("", "", lambda l, r: _mx(r["i"], r["j"]) + _mx(r["i"], r["k"]),
               lambda l, r: _mx(r["i"], r["j"], r["k"]) + r["i"]),
    ("", "i"): ("", "i", lambda l, r: _mx(r["i"], r["j"]) + l["i"] + r["k"],
                lambda l, r: _mx(r["i"], r["j"], r["k"]) + l["i"]),
    ("", "k"): ("k", "", lambda l, r: _mx(r["i"], r["j"]) + l["k"] + r["i"],
                lambda l, r: l["k"] + _mx(r["i"], r["j"]) + r["i"]),
    ("i", ""): ("", "i", lambda l, r: l["i"] + r["j"] + _mx(r["i"], r["k"]),
                lambda l, r: _mx(r["i"], r["j"], r["k"]) + l["i"]),
    ("i", "i"): ("i", "i", lambda l, r: 2 * l["i"] + r["j"] + r["k"],
                 lambda l, r: 2 * l["i"] + _mx(r["j"], r["k"])),
    ("i", "k"): ("ik", "", lambda l, r: l["i"] + r["j"] + l["k"] + r["i"],
                 lambda l, r: _mx(l["i"], l["k"]) + r["j"] + r["i"]),
    ("i", "ik"): ("ik", "i", lambda l, r: l["i"] + r["j"] + _mx(l["i"], l["k"]),
                  lambda l, r: _mx(l["i"], l["k"]) + r["j"] + l["i"]),
    ("j", ""): ("j", "", lambda l, r: l["j"] + r["i"] + _mx(r["i"], r["k"]),
                lambda l, r: l["j"] + _mx(r["i"], r["k"]) + r["i"]),
    ("j", "i"): ("j", "i", lambda l, r: l["j"] + r["i"] + l["i"] + r["k"],
                 lambda l, r: l["j"] + _mx(r["i"], r["k"]) + l["i"]),
    ("j", "k"): ("jk", "", lambda l, r: l["j"] + 2 * r["i"] + l["k"],
                 lambda l, r: _mx(l["j"], l["k"]) + 2 * r["i"]),
    ("j", "ik"): ("ijk", "", lambda l, r: l["j"] + r["i"] + _mx(l["i"], l["k"]),
                  lambda l, r: _mx(l["i"], l["j"], l["k"]) + r["i"]),
    ("ij", "ik"): ("ijk", "i", lambda l, r: _mx(l["i"], l["j"]) + _mx(l["i"], l["k"]),
                   lambda l, r: _mx(l["i"], l["j"], l["k"]) + l["i"]),
    # the two cases covered by symmetry rather than listed rows
    ("ij", "i"): ("ij", "i", lambda l, r: _mx(l["i"], l["j"]) + l["i"] + r["k"],
                  lambda l, r: _mx(l["i"], l["j"]) + r["k"] + l["i"]),
    ("ij", "k"): ("ijk", "", lambda l, r: _mx(l["i"], l["j"]) + l["k"] + r["i"],
                  lambda l, r: _mx(l["i"], l["j"], l["k"]) + r["i"]),
}
EXCLUDED_ROWS = (("", "ik"), ("ij", ""))
N1, N2, NS, NF = "ij", "ik", "i", "ijk"


def _cut_term(l, r, A, universe):
    """max over A of ell + max over universe minus A of r (empty max = 0)."""
    zero = 0.0 * l["i"]
    la = _mx(zero, *[l[t] for t in A]) if A else zero
    rest = [t for t in universe if t not in A]
    rb = _mx(zero, *[r[t] for t in rest]) if rest else zero
    return la + rb


def f_value(l, r, A1, A2):
    return _cut_term(l, r, A1, N1) + _cut_term(l, r, A2, N2)


def g_value(l, r, AF, AS):
    return _cut_term(l, r, AF, NF) + _cut_term(l, r, AS, NS)


def _symbolic(A, perm):
    names = dict(zip(perm, "ijk"))
    try:
        return "".join(sorted(names[int(x)] for x in A))
    except KeyError as e:
        raise NetworkError(f"relay {e.args[0]} is not in the triple {perm}") from None


def check_table1_row(net: DiamondNetwork, perm, A1, A2, tol: float = TOL) -> LemmaVerdict:
    """f(A1, A2) >= g(A_F, A_S) for the row of (A1, A2), with A1 in {i,j}, A2 in {i,k}.

    f and g are evaluated from their definitions; the printed row formulas are
    evaluated too and must agree with the definitions.
    """
    if net.n != 3:
        raise NetworkError("the table concerns 3-relay networks")
    perm = _triple(perm)
    a1, a2 = _symbolic(A1, perm), _symbolic(A2, perm)
    if not set(a1) <= set(N1) or not set(a2) <= set(N2):
        raise NetworkError(f"A1 must lie in {{i,j}} and A2 in {{i,k}} for triple {perm}")
    if (a1, a2) in EXCLUDED_ROWS:
        raise NetworkError(f"cut sizes differ by 2 for ({a1 or '{}'}, {a2 or '{}'}); no row applies")
    AF, AS, f_print, g_print = TABLE1[(a1, a2)]
    l = {s: net.ell[p - 1] for s, p in zip("ijk", perm)}
    r = {s: net.r[p - 1] for s, p in zip("ijk", perm)}
    f, g = float(f_value(l, r, a1, a2)), float(g_value(l, r, AF, AS))
    fp, gp = float(f_print(l, r)), float(g_print(l, r))
    consistent = bool(abs(f - fp) <= tol and abs(g - gp) <= tol)
    names = dict(zip("ijk", perm))
    witness = {"perm": list(perm), "A1": sorted(names[s] for s in a1),
               "A2": sorted(names[s] for s in a2), "A_F": sorted(names[s] for s in AF),
               "A_S": sorted(names[s] for s in AS), "f": f, "g": g, "printed_f": fp,
               "printed_g": gp, "printed_consistent": consistent}
    v = LemmaVerdict.compare("table1", g, f, witness, tol=tol)
    if not consistent:
        v = LemmaVerdict("table1", False, g, f, witness)
    return v


def table1_grid_check(values, tol: float = TOL):
    """Vectorized table check over the full product grid of 6 parameters.

    Returns {row: (min of f - g, max definition/printed mismatch)} over all
    len(values)**6 assignments of (l_i, l_j, l_k, r_i, r_j, r_k).
    """
    v = np.asarray(values, dtype=float)
    grids = np.meshgrid(*([v] * 6), indexing="ij", sparse=True)
    l = dict(zip("ijk", grids[:3]))
    r = dict(zip("ijk", grids[3:]))
    out = {}
    for (a1, a2), (AF, AS, fp, gp) in TABLE1.items():
        f, g = f_value(l, r, a1, a2), g_value(l, r, AF, AS)
        mism = max(float(np.max(np.abs(f - fp(l, r)))), float(np.max(np.abs(g - gp(l, r)))))
        out[(a1, a2)] = (float(np.min(f - g)), mism)
    return out


# ---------------------------------------------------------------- audits

@dataclass
class AuditReport:
    suite: str
    trials: int
    checked: int = 0
    skipped: int = 0
    failures: list = field(default_factory=list)
    min_slack: float = float("inf")
    notes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def add(self, verdict: LemmaVerdict):
        if not verdict.applicable:
            self.skipped += 1
            return
        self.checked += 1
        self.min_slack = min(self.min_slack, verdict.rhs - verdict.lhs)
        if not verdict.holds:
            self.failures.append(verdict)

    def summary(self) -> str:
        extra = "".join(f" {k}={v}" for k, v in self.notes.items())
        return (f"{self.suite}: {'PASS' if self.ok else 'FAIL'} trials={self.trials} "
                f"checked={self.checked} skipped={self.skipped} failures={len(self.failures)} "
                f"min_slack={self.min_slack:.6g}{extra}")


def _seeds(seed, trials):
    return np.random.default_rng(seed).integers(0, 2**32, size=trials)


def _draw_net(n, s, strength_range=(0.0, 4.0)):
    return gen_random(int(n), int(s), strength_range)


def audit_lemma1(trials: int, seed: int = 0, n_range=(2, 6), tol: float = TOL) -> AuditReport:
    rep = AuditReport("lemma1", trials)
    rng = np.random.default_rng(seed)
    for s in _seeds(seed + 1, trials):
        net = _draw_net(rng.integers(n_range[0], n_range[1] + 1), s)
        lam = hd_capacity(net).schedule
        for part in bipartitions(net.n):
            rep.add(check_lemma1(net, part, schedule=lam, tol=tol))
    return rep


def audit_fd_partition(trials: int, seed: int = 0, n_range=(2, 8), tol: float = TOL) -> AuditReport:
    rep = AuditReport("fd_partition", trials)
    rng = np.random.default_rng(seed)
    for s in _seeds(seed + 1, trials):
        net = _draw_net(rng.integers(n_range[0], n_range[1] + 1), s)
        for part in bipartitions(net.n):
            rep.add(check_fd_partition(net, part, tol=tol))
    return rep


def audit_lemma2(trials: int, seed: int = 0, tol: float = TOL) -> AuditReport:
    rep = AuditReport("lemma2", trials)
    for s in _seeds(seed, trials):
        net = _draw_net(3, s)
        lam = hd_capacity(net).schedule
        for i in (1, 2, 3):
            j, k = [x for x in (1, 2, 3) if x != i]
            rep.add(check_lemma2(net, (i, j, k), schedule=lam, tol=tol))
        rep.add(check_lemma_chain(net, tol=tol))
    return rep


def audit_lemma3(trials: int, seed: int = 0) -> AuditReport:
    rep = AuditReport("lemma3", trials)
    for s in _seeds(seed, trials):
        net = _draw_net(3, s)
        lam = hd_capacity(net).schedule
        for mode, sch in (("HD", None), ("FD", None), ("HD", lam)):
            rep.add(check_lemma3(net, mode=mode, schedule=sch)[1])
    # the combinatorial core over every combination of 2-relay cuts
    for cuts in np.ndindex(4, 4, 4):
        if lemma3_pair([int(c) for c in cuts]) is None:
            rep.failures.append(LemmaVerdict("lemma3", False, 1.0, 0.0, {"cuts": list(map(int, cuts))}))
    rep.notes["cut_combinations"] = 64
    return rep


def audit_table1(trials: int, seed: int = 0, tol: float = TOL) -> AuditReport:
    rep = AuditReport("table1", trials)
    rng = np.random.default_rng(seed)
    rows = list(TABLE1)
    perms = list(permutations((1, 2, 3)))
    for s in _seeds(seed + 1, trials):
        net = _draw_net(3, s)
        perm = perms[rng.integers(len(perms))]
        a1, a2 = rows[rng.integers(len(rows))]
        names = dict(zip("ijk", perm))
        rep.add(check_table1_row(net, perm, [names[c] for c in a1], [names[c] for c in a2], tol=tol))
    return rep


# (theorem, k, n choices, bound, ratio field)
THEOREM_CASES = (
    ("thm1", 1, (2,), 1 / 2, "ratio_hd"),
    ("thm1", 2, (3,), 2 / 3, "ratio_hd"),
    ("thm1", 1, tuple(range(2, 11)), 1 / 4, "ratio_hd"),
    ("thm1", 2, tuple(range(2, 11)), 1 / 2, "ratio_hd"),
    ("thm2", 1, (1,), 1 / 2, "ratio_fd"),
    ("thm2", 1, (2,), 1 / 3, "ratio_fd"),
    ("thm2", 1, tuple(range(1, 11)), 1 / 4, "ratio_fd"),
    ("thm2", 2, (2, 3), 1 / 2, "ratio_fd"),
)


def audit_theorems(trials: int, seed: int = 0, cases=THEOREM_CASES,
                   tol: float = TOL) -> list[AuditReport]:
    reports = []
    for idx, (thm, k, ns, bound, fieldname) in enumerate(cases):
        label = f"{thm}_k{k}_n{ns[0]}" if len(ns) == 1 else f"{thm}_k{k}_n{ns[0]}-{ns[-1]}"
        rep = AuditReport(label, trials)
        rng = np.random.default_rng([seed, idx])
        lo = float("inf")
        for s in rng.integers(0, 2**32, size=trials):
            net = _draw_net(ns[rng.integers(len(ns))], s)
            sel = best_k_hd(net, k, full=fieldname == "ratio_hd")
            q = getattr(sel, fieldname)
            lo = min(lo, q)
            witness = {"ell": list(net.ell), "r": list(net.r), "k": k,
                       "best_subset": list(sel.best_subset), "ratio": q}
            rep.add(LemmaVerdict.compare(label, bound, q, witness, tol=tol))
        rep.notes["min_ratio"] = f"{lo:.6g}"
        rep.notes["bound"] = f"{bound:.6g}"
        reports.append(rep)
    return reports


def conjecture_report(trials: int, seed: int = 0, ns=tuple(range(2, 11))) -> dict:
    """Empirical look at best-2 HD >= FD/2 (reported only, never asserted)."""
    rng = np.random.default_rng([seed, 99])
    lo, arg = float("inf"), None
    for s in rng.integers(0, 2**32, size=trials):
        net = _draw_net(ns[rng.integers(len(ns))], s)
        q = best_k_hd(net, 2, full=False).ratio_fd
        if q < lo:
            lo, arg = q, net.to_dict()
    return {"trials": trials, "min_ratio_fd_k2": lo, "violations_of_half": lo < 0.5 - TOL,
            "argmin_network": arg}


SUITES = ("lemma1", "lemma2", "lemma3", "table1", "fd_partition", "theorems")


def run_suite(suite: str, trials: int, seed: int = 0, tol: float = TOL) -> list[AuditReport]:
    if suite == "lemma1":
        return [audit_lemma1(trials, seed, tol=tol)]
    if suite == "lemma2":
        return [audit_lemma2(trials, seed, tol=tol)]
    if suite == "lemma3":
        return [audit_lemma3(trials, seed)]
    if suite == "table1":
        return [audit_table1(trials, seed, tol=tol)]
    if suite == "fd_partition":
        return [audit_fd_partition(trials, seed, tol=tol)]
    if suite == "theorems":
        return audit_theorems(trials, seed, tol=tol)
    raise NetworkError(f"unknown suite {suite!r}")
