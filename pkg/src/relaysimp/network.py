"""Diamond relay networks: link strengths, bitmask conventions, generators and I/O.

A network with n relays is fully described by two length-n vectors: ``ell``
(source -> relay) and ``r`` (relay -> destination), both in bits per channel
use.  Relays are numbered 1..n in every user-facing place and 0..n-1 inside
the library.

Masks are plain ints.  For a state mask bit i set means relay i+1 transmits
(clear: it listens).  For a cut mask bit i set means relay i+1 sits on the
destination side of the cut.
"""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

StateMask = int
CutMask = int

DEFAULT_LP_CAP = 12
DEFAULT_FD_CAP = 20
DEFAULT_LARGE_R = 100


class NetworkError(ValueError):
    pass


def mask_from_relays(relays: Iterable[int], n: int | None = None) -> int:
    """1-based relay labels -> bitmask."""
    m = 0
    for i in relays:
        i = int(i)
        if i < 1 or (n is not None and i > n):
            raise NetworkError(f"relay index {i} outside [1:{n}]")
        m |= 1 << (i - 1)
    return m


def relays_from_mask(mask: int) -> tuple[int, ...]:
    """Bitmask -> sorted 1-based relay labels."""
    out = []
    i = 0
    while mask >> i:
        if mask >> i & 1:
            out.append(i + 1)
        i += 1
    return tuple(out)


def check_mask(mask: int, n: int) -> int:
    mask = int(mask)
    if mask < 0 or mask >> n:
        raise NetworkError(f"mask {mask:#x} has bits outside the low {n}")
    return mask


def state_to_str(s: int, n: int) -> str:
    # character i is relay i+1; '1' = transmit
    return "".join("1" if s >> i & 1 else "0" for i in range(n))


def state_from_str(text: str) -> int:
    if not text or set(text) - {"0", "1"}:
        raise NetworkError(f"bad state string {text!r}")
    return sum(1 << i for i, ch in enumerate(text) if ch == "1")


def _as_number(x):
    if isinstance(x, bool):
        raise NetworkError("booleans are not link strengths")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    x = float(x)
    return x


@dataclass(frozen=True)
class DiamondNetwork:
    """Immutable relay network.

    ``ell`` and ``r`` are tuples of floats.  When every input was an int or
    Fraction the exact values are kept in ``exact`` for rational certification.
    ``labels`` maps internal positions back to relay labels of a parent network
    (identity for networks that were not cut out of another one).
    """

    ell: tuple
    r: tuple
    labels: tuple = field(default=None, compare=False)
    exact: tuple | None = field(default=None, compare=False, repr=False)

    def __init__(self, ell: Sequence, r: Sequence, labels: Sequence[int] | None = None):
        ell = [_as_number(v) for v in ell]
        r = [_as_number(v) for v in r]
        if len(ell) != len(r):
            raise NetworkError(f"ell has {len(ell)} entries but r has {len(r)}")
        if not ell:
            raise NetworkError("a diamond network needs at least one relay")
        for v in ell + r:
            if not math.isfinite(float(v)) or v < 0:
                raise NetworkError(f"link strength {v!r} must be finite and >= 0")
        exact = None
        if all(isinstance(v, Fraction) for v in ell + r):
            exact = (tuple(ell), tuple(r))
        n = len(ell)
        if labels is None:
            labels = range(1, n + 1)
        labels = tuple(int(i) for i in labels)
        if len(labels) != n or len(set(labels)) != n:
            raise NetworkError("labels must be n distinct relay numbers")
        object.__setattr__(self, "ell", tuple(float(v) for v in ell))
        object.__setattr__(self, "r", tuple(float(v) for v in r))
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "exact", exact)

    @property
    def n(self) -> int:
        return len(self.ell)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def arrays(self):
        return np.array(self.ell, dtype=float), np.array(self.r, dtype=float)

    def exact_values(self):
        """(ell, r) as Fractions; floats convert exactly (binary expansion)."""
        if self.exact is not None:
            return self.exact
        return tuple(Fraction(v) for v in self.ell), tuple(Fraction(v) for v in self.r)

    def scaled(self, alpha: float) -> "DiamondNetwork":
        return DiamondNetwork([alpha * v for v in self.ell], [alpha * v for v in self.r])

    def to_dict(self) -> dict:
        return {"ell": list(self.ell), "r": list(self.r)}

    def __repr__(self):
        return f"DiamondNetwork(ell={list(self.ell)}, r={list(self.r)})"


# ---------------------------------------------------------------- generators

def from_channel_gains(h: Sequence[complex], g: Sequence[complex]) -> DiamondNetwork:
    """ell_i = log2(1+|h_i|^2), r_i = log2(1+|g_i|^2).  Phase is ignored."""
    h = list(h)
    g = list(g)
    if len(h) != len(g):
        raise NetworkError(f"{len(h)} source gains but {len(g)} destination gains")
    if not h:
        raise NetworkError("need at least one relay")
    for z in h + g:
        if not (math.isfinite(complex(z).real) and math.isfinite(complex(z).imag)):
            raise NetworkError(f"non-finite channel gain {z!r}")
    ell = [math.log2(1.0 + abs(complex(z)) ** 2) for z in h]
    r = [math.log2(1.0 + abs(complex(z)) ** 2) for z in g]
    return DiamondNetwork(ell, r)


def family_constant(n: int):
    """K = ceil(m) floor(m) / (ceil(m) + floor(m)) with m = (n+2)/2, as a Fraction."""
    hi = (n + 3) // 2
    lo = (n + 2) // 2
    return Fraction(hi * lo, hi + lo)


def gen_worst_case_family(n: int, c=1) -> DiamondNetwork:
    """ell_i = K c / i and r_i = K c / (n-i+1)."""
    if int(n) != n or n < 1:
        raise NetworkError(f"n must be a positive integer, got {n!r}")
    n = int(n)
    if not c > 0:
        raise NetworkError(f"c must be positive, got {c!r}")
    c = _as_number(c)
    K = family_constant(n)
    if isinstance(c, Fraction):
        ell = [K * c / i for i in range(1, n + 1)]
    else:
        ell = [float(K) * c / i for i in range(1, n + 1)]
    return DiamondNetwork(ell, ell[::-1])


def _catalogue(large_r):
    F = Fraction
    return {
        "sym2": ([1, 1], [1, 1]),
        "sec3c": ([F(1, 3), 1, 1], [large_r, F(2, 3), F(2, 3)]),
        "hd_vs_fd_best": ([1, F(2, 5)], [F(1, 2), F(14, 5)]),
        "thm2_k1n2": ([1, F(1, 2)], [F(1, 2), 1]),
        "single": ([1], [1]),
        "one_live_of_three": ([1, 0, 0], [1, 0, 0]),
        "one_live_of_two": ([1, 0], [1, 0]),
    }


EXAMPLE_NAMES = tuple(_catalogue(DEFAULT_LARGE_R))


def gen_paper_example(name: str, large_r=DEFAULT_LARGE_R) -> DiamondNetwork:
    """Named example networks.  ``large_r`` stands in for the unbounded link of "sec3c"."""
    cat = _catalogue(_as_number(large_r))
    if name not in cat:
        raise NetworkError(f"unknown example {name!r}; known: {', '.join(cat)}")
    ell, r = cat[name]
    return DiamondNetwork(ell, r)


def gen_random(n: int, seed: int, strength_range=(0.0, 4.0)) -> DiamondNetwork:
    lo, hi = (float(v) for v in strength_range)
    if n < 1:
        raise NetworkError("n must be >= 1")
    if lo < 0 or hi < lo:
        raise NetworkError(f"bad strength range {strength_range!r}")
    rng = np.random.default_rng(seed)
    v = rng.uniform(lo, hi, size=(2, n))
    return DiamondNetwork(v[0].tolist(), v[1].tolist())


def subnetwork(net: DiamondNetwork, keep) -> DiamondNetwork:
    """Restrict to the kept relays (a mask or an iterable of 1-based positions).

    Order is preserved and ``labels`` of the result point to the labels of
    ``net``, so repeated restriction composes.
    """
    mask = keep if isinstance(keep, (int, np.integer)) else mask_from_relays(keep, net.n)
    mask = check_mask(mask, net.n)
    if not mask:
        raise NetworkError("cannot keep an empty set of relays")
    idx = [i for i in range(net.n) if mask >> i & 1]
    if net.exact is not None:
        ell = [net.exact[0][i] for i in idx]
        r = [net.exact[1][i] for i in idx]
    else:
        ell = [net.ell[i] for i in idx]
        r = [net.r[i] for i in idx]
    return DiamondNetwork(ell, r, labels=[net.labels[i] for i in idx])


# ----------------------------------------------------------------------- I/O

def _parse_value(v):
    if isinstance(v, str):
        v = v.strip()
        if "/" in v:
            return Fraction(v)
        return float(v)
    return v


def network_from_json(text: str) -> DiamondNetwork:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise NetworkError(f"invalid JSON: {e}") from None
    if not isinstance(obj, dict) or "ell" not in obj or "r" not in obj:
        raise NetworkError('network JSON must be an object with "ell" and "r"')
    if not isinstance(obj["ell"], list) or not isinstance(obj["r"], list):
        raise NetworkError('"ell" and "r" must be arrays')
    try:
        return DiamondNetwork([_parse_value(v) for v in obj["ell"]],
                              [_parse_value(v) for v in obj["r"]])
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise NetworkError(str(e)) from None


def network_from_csv(text: str) -> DiamondNetwork:
    rows = list(csv.reader(io.StringIO(text)))
    rows = [row for row in rows if row and any(c.strip() for c in row)]
    if not rows or [c.strip() for c in rows[0]] != ["i", "ell", "r"]:
        raise NetworkError("CSV network must start with header i,ell,r")
    try:
        body = sorted(((int(a), _parse_value(b), _parse_value(c)) for a, b, c in rows[1:]),
                      key=lambda t: t[0])
    except (ValueError, ZeroDivisionError) as e:
        raise NetworkError(f"bad CSV row: {e}") from None
    if [t[0] for t in body] != list(range(1, len(body) + 1)):
        raise NetworkError("CSV relay column must list 1..n")
    return DiamondNetwork([t[1] for t in body], [t[2] for t in body])


def load_network(path: str) -> DiamondNetwork:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as e:
        raise NetworkError(str(e)) from None
    if path.lower().endswith(".csv") or text.lstrip().startswith("i,"):
        return network_from_csv(text)
    return network_from_json(text)


def network_to_json(net: DiamondNetwork) -> str:
    # plain JSON numbers; exact rationals go through their float value
    def enc(v):
        return int(v) if float(v).is_integer() else float(v)
    return json.dumps({"ell": [enc(v) for v in net.ell], "r": [enc(v) for v in net.r]})
