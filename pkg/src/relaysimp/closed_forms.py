"""Closed-form HD capacities of one- and two-relay diamond networks.

Rational inputs give exact Fractions; float inputs give floats.
"""
from __future__ import annotations

from fractions import Fraction

from .network import DiamondNetwork, NetworkError
from .results import CapacityResult

# relative tolerance for deciding that an instance sits on a case boundary
BOUNDARY_RTOL = 1e-12
# two branches evaluated at a boundary must agree to this relative tolerance
CONTINUITY_RTOL = 1e-9


class ClosedFormError(ArithmeticError):
    pass


def single_relay_hd(ell, r):
    """ell r / (ell + r); 0 when both links are dead."""
    if ell < 0 or r < 0:
        raise NetworkError("link strengths must be nonnegative")
    if ell + r == 0:
        return 0 * ell
    a, b = min(ell, r), max(ell, r)
    # same value, arranged so tiny strengths do not underflow the product
    return a * (b / (a + b))


# each case is grouped around the difference that vanishes on its boundary,
# so the branch stays accurate where its neighbours take over


def _case_i(l1, l2, r1, r2):
    return (l2 * r2 * (l1 - l2) + l1 * r1 * (l2 + r2)) / ((l2 + r2) * (r1 + (l1 - l2)))


def _case_ii(l1, l2, r1, r2):
    return (l2 * r2 * (r1 - r2) + l1 * r1 * (l2 + r2)) / ((l2 + r2) * (l1 + (r1 - r2)))


def _case_iii(l1, l2, r1, r2):
    return (l1 * r1 * (r2 - r1) + l2 * r2 * (l1 + r1)) / ((l1 + r1) * (l2 + (r2 - r1)))


def _close(a, b, rtol):
    return abs(a - b) <= rtol * max(abs(a), abs(b))


def _is_rational(x):
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def two_relay_value(l1, l2, r1, r2):
    """Two-relay HD capacity from raw strengths (any order).

    Rational inputs give an exact Fraction and exact case boundaries.  Float
    inputs are converted to rationals exactly, so no branch can lose digits to
    underflow or cancellation; boundaries then use the float tolerances and
    the result is rounded once.
    """
    if min(l1, l2, r1, r2) < 0:
        raise NetworkError("link strengths must be nonnegative")
    exact = all(_is_rational(x) for x in (l1, l2, r1, r2))
    q = [Fraction(x) for x in (l1, l2, r1, r2)]
    if exact:
        return _two_relay(*q, 0, 0)
    return float(_two_relay(*q, BOUNDARY_RTOL, CONTINUITY_RTOL))


def _two_relay(l1, l2, r1, r2, boundary_rtol, continuity_rtol):
    # a relay with a dead link can never carry flow: the network is the other relay
    if l1 == 0 or r1 == 0 or l2 == 0 or r2 == 0:
        return max(single_relay_hd(l1, r1), single_relay_hd(l2, r2))
    if l1 < l2:
        l1, l2, r1, r2 = l2, l1, r2, r1
    prod_r, prod_l = r1 * r2, l1 * l2
    branches = []
    on_rl = _close(prod_r, prod_l, boundary_rtol)
    if prod_r >= prod_l or on_rl:
        branches.append(_case_i)
    if prod_r <= prod_l or on_rl:
        on_rr = _close(r1, r2, boundary_rtol)
        if r1 >= r2 or on_rr:
            branches.append(_case_ii)
        if r1 <= r2 or on_rr:
            branches.append(_case_iii)
    vals = [f(l1, l2, r1, r2) for f in branches]
    for v in vals[1:]:
        if not _close(v, vals[0], continuity_rtol):
            raise ClosedFormError(f"case branches disagree at a boundary: {[float(x) for x in vals]}")
    return vals[0]


def two_relay_hd(net: DiamondNetwork) -> CapacityResult:
    if net.n != 2:
        raise NetworkError(f"two_relay_hd needs n = 2, got {net.n}")
    exact_value = None
    if net.exact is not None:
        (l1, l2), (r1, r2) = net.exact_values()
        exact_value = two_relay_value(l1, l2, r1, r2)
        value = float(exact_value)
    else:
        (l1, l2), (r1, r2) = net.ell, net.r
        value = float(two_relay_value(l1, l2, r1, r2))
    return CapacityResult(value=value, min_cut=None, mode="HD", n=2, exact_value=exact_value)


def closed_form_hd(net: DiamondNetwork) -> float:
    """HD capacity for n <= 2 without an LP."""
    if net.n == 1:
        return float(single_relay_hd(net.ell[0], net.r[0]))
    if net.n == 2:
        return two_relay_hd(net).value
    raise NetworkError(f"no closed form for n = {net.n}")
