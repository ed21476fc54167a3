"""Detected slope sets on cable spaces and cabled knot complements.

The pipeline maps an input slope set through the inner basis change
into the cable-space coordinates, takes the union of relative
intervals over each connected piece, and maps the answer out through
the outer basis change.  Weak detection computes the union of closed
intervals t; strong detection uses the strict companions; regular
detection is sandwiched between the two.
"""

import enum
import math
from dataclasses import dataclass

from .exact import INF, Arc, ExtRational, IntMobius, SlopeSet, mobius_set_image
from .intervals import cable_interval, extremal_slot_value, special_slope_interval

ONE = ExtRational(1)


class DetectionMode(enum.Enum):
    WEAK = "weak"
    REGULAR = "regular"
    STRONG = "strong"


@dataclass(frozen=True)
class CableParams:
    """Cable parameters p/q with the normalized Bezout pair (r, s).

    Invariants: gcd(p, q) = 1, p*s + q*r = 1, -q < s < 0 < r <= p,
    and r = p only when p = 1.
    """
    p: int
    q: int
    r: int
    s: int

    def __post_init__(self):
        p, q, r, s = self.p, self.q, self.r, self.s
        if q < 2 or p < 1:
            raise ValueError("need p >= 1 and q >= 2")
        if math.gcd(p, q) != 1:
            raise ValueError("p and q must be coprime")
        if p * s + q * r != 1:
            raise ValueError("p*s + q*r must equal 1")
        if not (-q < s < 0 < r <= p):
            raise ValueError("need -q < s < 0 < r <= p")
        if r == p and p != 1:
            raise ValueError("r = p is only allowed when p = 1")

    @property
    def gamma(self):
        return ExtRational(self.q + self.s, self.q)

    @property
    def fiber_slope(self):
        return ExtRational(self.p, self.q)


def bezout(p, q):
    """CableParams for the unique normalized Bezout pair of (p, q)."""
    if q < 2 or p < 1 or math.gcd(p, q) != 1:
        raise ValueError("need coprime p >= 1, q >= 2")
    s = pow(p, -1, q) - q
    r = (1 - p * s) // q
    return CableParams(p, q, r, s)


def inner_basis_map(params):
    """Basis change into cable-space coordinates: p/q -> inf, inf -> -s/q."""
    return IntMobius(params.s, params.r, -params.q, params.p)


def outer_basis_map(params):
    """Basis change out to the cabled knot: -1 -> inf, inf -> pq."""
    pq = params.p * params.q
    return IntMobius(pq, pq + 1, 1, 1)


def infinity_rule(mode, has_fiber):
    """Whether the image set contains inf: the fiber slope passes through."""
    if not isinstance(mode, DetectionMode):
        raise ValueError("mode must be a DetectionMode")
    return bool(has_fiber)


def _xi_plus(params, tau):
    """Sup of t.high over tau' > tau in the same unit cell (attained)."""
    gamma = params.gamma
    tb = tau.frac()
    m1 = ExtRational(-tau.floor() - 1)
    v = extremal_slot_value([(gamma, True), (tb, True)])
    if v is None:
        raise AssertionError("open cell but empty witness search")
    return m1 + v


def _eta_plus(params, tau):
    """Inf of t.low over tau' < tau in the same unit cell (attained)."""
    gamma = params.gamma
    tb = tau.frac()
    m0 = ExtRational(-tau.floor() - 1)
    w = extremal_slot_value([(ONE - gamma, True), (ONE - tb, True)])
    if w is None:
        raise AssertionError("open cell but empty witness search")
    return m0 - w


def _ray_right_weak(params, a, include):
    """Union of t over tau >= a (include) or tau > a."""
    gamma = params.gamma
    omg = ONE - gamma
    tb = a.frac()
    fl = a.floor()
    if tb.num == 0:
        if include:
            return SlopeSet.ray_below(-a, True)
        return SlopeSet.ray_below(-a - gamma, False)
    if tb < omg:
        if include:
            return SlopeSet.ray_below(cable_interval(params, frozenset(), a).t.high, True)
        return SlopeSet.ray_below(_xi_plus(params, a), True)
    return SlopeSet.ray_below(ExtRational(-fl - 1), True)


def _ray_left_weak(params, b, include):
    """Union of t over tau <= b (include) or tau < b."""
    gamma = params.gamma
    omg = ONE - gamma
    tb = b.frac()
    fl = b.floor()
    if tb.num == 0 and not include:
        return SlopeSet.ray_above(-b - gamma, False)
    if tb <= omg:
        return SlopeSet.ray_above(ExtRational(-fl - 1), True)
    if include:
        return SlopeSet.ray_above(cable_interval(params, frozenset(), b).t.low, True)
    return SlopeSet.ray_above(_eta_plus(params, b), True)


def _ray_right_strict(params, a, include):
    """Union of t_strict (J = {1}) over tau >= a (include) or tau > a."""
    gamma = params.gamma
    omg = ONE - gamma
    tb = a.frac()
    fl = a.floor()
    if tb.num == 0:
        return SlopeSet.ray_below(-a - gamma, include)
    if tb < omg:
        xi = cable_interval(params, frozenset({1}), a).t.high
        return SlopeSet.ray_below(xi, False)
    if tb == omg:
        return SlopeSet.ray_below(ExtRational(-fl - 1), include)
    return SlopeSet.ray_below(ExtRational(-fl - 1), False)


def _ray_left_strict(params, b, include):
    """Union of t_strict (J = {1}) over tau <= b (include) or tau < b."""
    gamma = params.gamma
    omg = ONE - gamma
    tb = b.frac()
    fl = b.floor()
    if tb.num == 0:
        return SlopeSet.ray_above(-b - gamma, include)
    if tb < omg:
        return SlopeSet.ray_above(ExtRational(-fl - 1), False)
    if tb == omg:
        return SlopeSet.ray_above(ExtRational(-fl - 1), include)
    eta = cable_interval(params, frozenset({1}), b).t.low
    return SlopeSet.ray_above(eta, False)


def _piece_union(params, piece, strict):
    """Union of intervals over one affine piece of the inner-image set."""
    low, low_closed, high, high_closed = piece
    right = _ray_right_strict if strict else _ray_right_weak
    left = _ray_left_strict if strict else _ray_left_weak
    if low is None and high is None:
        return SlopeSet.reals()
    if low is None:
        return left(params, high, high_closed)
    if high is None:
        return right(params, low, low_closed)
    return right(params, low, low_closed).intersect(
        left(params, high, high_closed))


def cable_detected_set(params, input_set, mode, exactness="auto"):
    """Detected slopes of the cable, given the detected slopes downstairs.

    Returns (slope_set, tag) where tag is "equals" or "contains".  Weak
    mode is always exact.  Strong mode always reports a guaranteed
    subset.  Regular mode reports "equals" when the caller asserts the
    exactness hypothesis (exactness="equals"), when the input is not
    the full circle, or when the result is trivially the full circle.
    """
    if not isinstance(mode, DetectionMode):
        raise ValueError("mode must be a DetectionMode")
    if exactness not in ("auto", "equals", "contains"):
        raise ValueError("exactness must be 'auto', 'equals' or 'contains'")
    has_fiber = input_set.contains(params.fiber_slope)
    inner = mobius_set_image(inner_basis_map(params), input_set)
    inner = inner.without_infinity()
    use_strict = mode is DetectionMode.STRONG
    out = SlopeSet.empty()
    for piece in inner.affine_pieces():
        out = out.union(_piece_union(params, piece, use_strict))
    if infinity_rule(mode, has_fiber):
        out = out.with_infinity()
    result = mobius_set_image(outer_basis_map(params), out)
    if mode is DetectionMode.WEAK:
        tag = "equals"
    elif mode is DetectionMode.STRONG:
        if exactness == "equals":
            raise ValueError("strong mode only guarantees a subset")
        tag = "contains"
    else:
        if exactness == "equals":
            tag = "equals"
        elif exactness == "contains":
            tag = "contains"
        elif not input_set.is_full or result.is_full:
            tag = "equals"
        else:
            tag = "contains"
    return result, tag


def torus_knot_detected(p, q):
    """Detected slopes of the (p, q) torus knot: (regular arc, strong set)."""
    if p < 2 or q < 2 or math.gcd(p, q) != 1:
        raise ValueError("need coprime p, q >= 2")
    params = bezout(p, q)
    res = cable_interval(params, frozenset({1}), ExtRational(params.r, p))
    check = special_slope_interval(params, 0, strict=True)
    if res.t.low != check.low or res.t.high != check.high:
        raise AssertionError("search interval disagrees with closed form")
    g = outer_basis_map(params)
    closed = SlopeSet.interval(res.t.low, res.t.high, True, True)
    regular_set = mobius_set_image(g, closed)
    strong_set = mobius_set_image(g, res.t_strict)
    arcs, isolated_inf = regular_set.arcs()
    if len(arcs) != 1 or isolated_inf:
        raise AssertionError("torus knot image should be a single arc")
    return arcs[0], strong_set


def cable_genus_bound(p, q, g):
    """The slope 2g(K') - 1 = pq - p - q + 2gq of the cabled knot."""
    if p < 2 or q < 2 or math.gcd(p, q) != 1:
        raise ValueError("need coprime p, q >= 2")
    if g < 0:
        raise ValueError("genus must be nonnegative")
    return ExtRational(p * q - p - q + 2 * g * q)
