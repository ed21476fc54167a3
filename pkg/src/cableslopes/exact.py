"""Exact arithmetic on the rational projective circle.

Values live in Q together with a single point at infinity, i.e. the
rational points of RP^1.  Subsets are unions of arcs with rational
endpoints and explicit open/closed flags.  All arithmetic is integer
based; nothing in this module ever rounds.
"""

import math
import re


class ExtRational:
    """A reduced rational number, or the single point at infinity.

    Infinity is stored uniquely as numerator 1, denominator 0.  Finite
    values are stored with a positive denominator and gcd(num, den) = 1.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        if den == 0:
            if num == 0:
                raise ZeroDivisionError("0/0 is not a point of the circle")
            num = 1
        else:
            if den < 0:
                num, den = -num, -den
            g = math.gcd(num, den)
            num //= g
            den //= g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("ExtRational is immutable")

    @property
    def is_infinite(self):
        return self.den == 0

    def floor(self):
        if self.is_infinite:
            raise ValueError("floor of infinity")
        return self.num // self.den

    def frac(self):
        """Fractional part, in [0, 1)."""
        if self.is_infinite:
            raise ValueError("fractional part of infinity")
        return ExtRational(self.num - self.floor() * self.den, self.den)

    def _coerce(self, other):
        if isinstance(other, ExtRational):
            return other
        if isinstance(other, int):
            return ExtRational(other)
        return NotImplemented

    def _finite_pair(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_infinite or other.is_infinite:
            raise ValueError("arithmetic with infinity")
        return other

    def __add__(self, other):
        other = self._finite_pair(other)
        if other is NotImplemented:
            return NotImplemented
        return ExtRational(self.num * other.den + other.num * self.den,
                           self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._finite_pair(other)
        if other is NotImplemented:
            return NotImplemented
        return ExtRational(self.num * other.den - other.num * self.den,
                           self.den * other.den)

    def __rsub__(self, other):
        return ExtRational(other) - self

    def __mul__(self, other):
        other = self._finite_pair(other)
        if other is NotImplemented:
            return NotImplemented
        return ExtRational(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._finite_pair(other)
        if other is NotImplemented:
            return NotImplemented
        if other.num == 0:
            raise ZeroDivisionError("division by zero")
        return ExtRational(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return ExtRational(other) / self

    def __neg__(self):
        if self.is_infinite:
            raise ValueError("arithmetic with infinity")
        return ExtRational(-self.num, self.den)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def _cmp(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_infinite or other.is_infinite:
            raise TypeError("infinity is not ordered")
        return self.num * other.den - other.num * self.den

    def __lt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c >= 0

    def __repr__(self):
        return "ExtRational(%r)" % (str(self),)

    def __str__(self):
        if self.is_infinite:
            return "inf"
        if self.den == 1:
            return str(self.num)
        return "%d/%d" % (self.num, self.den)

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if text in ("inf", "+inf", "-inf"):
            return INF
        if "/" in text:
            a, b = text.split("/", 1)
            return cls(int(a), int(b))
        return cls(int(text))


INF = ExtRational(1, 0)
ZERO = ExtRational(0)
ONE = ExtRational(1)


def rat(num, den=1):
    """Shorthand constructor."""
    return ExtRational(num, den)


class Arc:
    """A connected subset of the rational projective circle.

    The circle is ordered like R with infinity glued between +inf and
    -inf.  An arc records its low and high endpoint, whether each is
    included, and whether its interior passes through infinity:

    - plain arc:  low < high, both finite, the usual interval;
    - point arc:  low == high, both closed;
    - ray:        one endpoint is infinity (the flag there says whether
                  the point at infinity itself belongs to the arc);
    - wrapped arc: ``wraps_infinity`` set, low >= high, covering
      [low, +inf) + {infinity} + (-inf, high];
    - whole line: both endpoints infinite, covering all of Q, plus the
      point at infinity when either flag is closed.
    """

    __slots__ = ("low", "high", "low_closed", "high_closed", "wraps_infinity")

    def __init__(self, low, high, low_closed=True, high_closed=True,
                 wraps_infinity=False):
        if not isinstance(low, ExtRational):
            low = ExtRational(low)
        if not isinstance(high, ExtRational):
            high = ExtRational(high)
        if wraps_infinity:
            if low.is_infinite or high.is_infinite:
                raise ValueError("wrapped arc needs finite endpoints")
            if low == high and (low_closed or high_closed):
                raise ValueError("wrapped arc with equal endpoints must be open")
        elif not low.is_infinite and not high.is_infinite:
            if low > high:
                raise ValueError("low endpoint above high; use wraps_infinity")
            if low == high and not (low_closed and high_closed):
                raise ValueError("degenerate open arc")
        object.__setattr__(self, "low", low)
        object.__setattr__(self, "high", high)
        object.__setattr__(self, "low_closed", bool(low_closed))
        object.__setattr__(self, "high_closed", bool(high_closed))
        object.__setattr__(self, "wraps_infinity", bool(wraps_infinity))

    def __setattr__(self, name, value):
        raise AttributeError("Arc is immutable")

    def __eq__(self, other):
        if not isinstance(other, Arc):
            return NotImplemented
        return (self.low, self.high, self.low_closed, self.high_closed,
                self.wraps_infinity) == (other.low, other.high,
                                         other.low_closed, other.high_closed,
                                         other.wraps_infinity)

    def __hash__(self):
        return hash((self.low, self.high, self.low_closed, self.high_closed,
                     self.wraps_infinity))

    @property
    def is_point(self):
        return (not self.wraps_infinity and self.low == self.high
                and not self.low.is_infinite)

    def contains(self, x):
        if not isinstance(x, ExtRational):
            x = ExtRational(x)
        if self.wraps_infinity:
            if x.is_infinite:
                return True
            if x > self.low or (self.low_closed and x == self.low):
                return True
            return x < self.high or (self.high_closed and x == self.high)
        lo_inf, hi_inf = self.low.is_infinite, self.high.is_infinite
        if lo_inf and hi_inf:
            if x.is_infinite:
                return self.low_closed or self.high_closed
            return True
        if x.is_infinite:
            return (lo_inf and self.low_closed) or (hi_inf and self.high_closed)
        above = lo_inf or x > self.low or (self.low_closed and x == self.low)
        below = hi_inf or x < self.high or (self.high_closed and x == self.high)
        return above and below

    def __repr__(self):
        return "Arc(%s)" % (str(self),)

    def __str__(self):
        if self.wraps_infinity:
            return "%s%s,inf]∪[-inf,%s%s" % (
                "[" if self.low_closed else "(", _endpoint_str(self.low),
                _endpoint_str(self.high), "]" if self.high_closed else ")")
        lo = "-inf" if self.low.is_infinite else str(self.low)
        hi = "inf" if self.high.is_infinite else str(self.high)
        return "%s%s,%s%s" % ("[" if self.low_closed else "(",
                              lo, hi,
                              "]" if self.high_closed else ")")


def _endpoint_str(v):
    return str(v)


_ARC_RE = re.compile(
    r"^\s*([\[(])\s*(-?inf|-?\d+(?:\s*/\s*-?\d+)?)\s*,"
    r"\s*(-?inf|-?\d+(?:\s*/\s*-?\d+)?)\s*([\])])\s*$")


def parse_arc(text):
    """Parse one arc written like ``[1/2,3)`` or ``[-inf,7]``.

    A wrapped arc is written as two rays joined by a union sign, so it
    is parsed at the SlopeSet level, not here.
    """
    m = _ARC_RE.match(text)
    if m is None:
        raise ValueError("cannot parse arc: %r" % (text,))
    lo = ExtRational.parse(m.group(2).replace(" ", ""))
    hi = ExtRational.parse(m.group(3).replace(" ", ""))
    lc = m.group(1) == "["
    hc = m.group(4) == "]"
    if not lo.is_infinite and not hi.is_infinite and lo > hi:
        return Arc(lo, hi, lc, hc, wraps_infinity=True)
    return Arc(lo, hi, lc, hc)


# ---------------------------------------------------------------------------
# SlopeSet: finite unions of arcs, in canonical form.
#
# Internally a set is split into its affine part (a sorted list of disjoint,
# non-touching intervals over Q, possibly unbounded) and a flag saying
# whether the point at infinity belongs.  Interval endpoints are handled in
# "cut" coordinates: the cut (v, 0) sits just below the point v and (v, 1)
# just above it, so every interval becomes half-open in cut space and the
# usual sweep algorithms apply with no open/closed case analysis.
# ---------------------------------------------------------------------------

_MIN = (-1, None, 0)  # below every rational
_MAX = (1, None, 0)   # above every rational


def _cut_lt(a, b):
    if a[0] != b[0]:
        return a[0] < b[0]
    if a[0] != 0:
        return False
    if a[1] == b[1]:
        return a[2] < b[2]
    return a[1] < b[1]


def _cut_le(a, b):
    return not _cut_lt(b, a)


def _low_cut(value, closed):
    if value is None:
        return _MIN
    return (0, value, 0 if closed else 1)


def _high_cut(value, closed):
    if value is None:
        return _MAX
    return (0, value, 1 if closed else 0)


def _merge_cut_intervals(ivs):
    ivs = [iv for iv in ivs if _cut_lt(iv[0], iv[1])]
    ivs.sort(key=_CutKey)
    out = []
    for lo, hi in ivs:
        if out and _cut_le(lo, out[-1][1]):
            if _cut_lt(out[-1][1], hi):
                out[-1] = (out[-1][0], hi)
        else:
            out.append((lo, hi))
    return out


class _CutKey:
    __slots__ = ("iv",)

    def __init__(self, iv):
        self.iv = iv

    def __lt__(self, other):
        a, b = self.iv, other.iv
        if _cut_lt(a[0], b[0]):
            return True
        if _cut_lt(b[0], a[0]):
            return False
        return _cut_lt(a[1], b[1])


class SlopeSet:
    """A finite union of arcs on the rational projective circle.

    Always kept in canonical form: the affine intervals are disjoint,
    non-touching and sorted, so two equal sets compare equal
    structurally.  Instances are immutable; set operations return new
    instances.
    """

    __slots__ = ("_ivs", "_inf")

    def __init__(self, _ivs=(), _inf=False):
        object.__setattr__(self, "_ivs", tuple(_merge_cut_intervals(list(_ivs))))
        object.__setattr__(self, "_inf", bool(_inf))

    def __setattr__(self, name, value):
        raise AttributeError("SlopeSet is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def empty(cls):
        return cls()

    @classmethod
    def full(cls):
        return cls([(_MIN, _MAX)], True)

    @classmethod
    def reals(cls):
        return cls([(_MIN, _MAX)], False)

    @classmethod
    def point(cls, x):
        if not isinstance(x, ExtRational):
            x = ExtRational(x)
        if x.is_infinite:
            return cls([], True)
        return cls([(_low_cut(x, True), _high_cut(x, True))], False)

    @classmethod
    def interval(cls, low, high, low_closed=True, high_closed=True):
        """The affine interval between two finite rationals."""
        if not isinstance(low, ExtRational):
            low = ExtRational(low)
        if not isinstance(high, ExtRational):
            high = ExtRational(high)
        return cls([(_low_cut(low, low_closed), _high_cut(high, high_closed))])

    @classmethod
    def ray_below(cls, high, closed=True):
        if not isinstance(high, ExtRational):
            high = ExtRational(high)
        return cls([(_MIN, _high_cut(high, closed))])

    @classmethod
    def ray_above(cls, low, closed=True):
        if not isinstance(low, ExtRational):
            low = ExtRational(low)
        return cls([(_low_cut(low, closed), _MAX)])

    @classmethod
    def from_arc(cls, arc):
        if arc.wraps_infinity:
            return cls([(_low_cut(arc.low, arc.low_closed), _MAX),
                        (_MIN, _high_cut(arc.high, arc.high_closed))], True)
        lo_inf, hi_inf = arc.low.is_infinite, arc.high.is_infinite
        if lo_inf and hi_inf:
            return cls([(_MIN, _MAX)], arc.low_closed or arc.high_closed)
        if lo_inf:
            return cls([(_MIN, _high_cut(arc.high, arc.high_closed))],
                       arc.low_closed)
        if hi_inf:
            return cls([(_low_cut(arc.low, arc.low_closed), _MAX)],
                       arc.high_closed)
        return cls([(_low_cut(arc.low, arc.low_closed),
                     _high_cut(arc.high, arc.high_closed))])

    @classmethod
    def from_arcs(cls, arcs):
        out = cls.empty()
        for arc in arcs:
            out = out.union(cls.from_arc(arc))
        return out

    # -- queries -------------------------------------------------------

    @property
    def is_empty(self):
        return not self._ivs and not self._inf

    @property
    def is_full(self):
        return self._inf and self._ivs == ((_MIN, _MAX),)

    @property
    def has_infinity(self):
        return self._inf

    def contains(self, x):
        if not isinstance(x, ExtRational):
            x = ExtRational(x)
        if x.is_infinite:
            return self._inf
        lo = _low_cut(x, True)
        hi = _high_cut(x, True)
        for a, b in self._ivs:
            if _cut_le(a, lo) and _cut_le(hi, b):
                return True
        return False

    def __eq__(self, other):
        if not isinstance(other, SlopeSet):
            return NotImplemented
        return self._ivs == other._ivs and self._inf == other._inf

    def __hash__(self):
        return hash((self._ivs, self._inf))

    def __bool__(self):
        return not self.is_empty

    # -- algebra --------------------------------------------------------

    def union(self, other):
        return SlopeSet(self._ivs + other._ivs, self._inf or other._inf)

    __or__ = union

    def complement(self):
        ivs = []
        prev = _MIN
        for lo, hi in self._ivs:
            if _cut_lt(prev, lo):
                ivs.append((prev, lo))
            prev = hi
        if _cut_lt(prev, _MAX):
            ivs.append((prev, _MAX))
        return SlopeSet(ivs, not self._inf)

    def intersect(self, other):
        return self.complement().union(other.complement()).complement()

    __and__ = intersect

    def difference(self, other):
        return self.intersect(other.complement())

    __sub__ = difference

    def issubset(self, other):
        return self.difference(other).is_empty

    def without_infinity(self):
        return SlopeSet(self._ivs, False)

    def with_infinity(self):
        return SlopeSet(self._ivs, True)

    # -- structure -------------------------------------------------------

    def affine_pieces(self):
        """The affine intervals as (low, low_closed, high, high_closed).

        Unbounded ends are reported as (None, False).
        """
        out = []
        for lo, hi in self._ivs:
            if lo == _MIN:
                l, lc = None, False
            else:
                l, lc = lo[1], lo[2] == 0
            if hi == _MAX:
                h, hc = None, False
            else:
                h, hc = hi[1], hi[2] == 1
            out.append((l, lc, h, hc))
        return out

    def arcs(self):
        """Canonical list of arcs covering this set.

        An isolated point at infinity cannot be expressed as an Arc and
        is reported separately: the second element of the returned pair
        is True when infinity belongs to the set but touches no
        unbounded affine piece.  Returns (arc_list, isolated_infinity).
        """
        if self.is_empty:
            return [], False
        if self.is_full:
            return [Arc(INF, INF, True, True)], False
        pieces = self.affine_pieces()
        if not self._inf:
            return [Arc(INF if l is None else l, INF if h is None else h,
                        lc, hc)
                    for l, lc, h, hc in pieces], False
        if not pieces:
            return [], True
        first, last = pieces[0], pieces[-1]
        out = []
        if first[0] is None and last[2] is None and len(pieces) >= 2:
            out.append(Arc(last[0], first[2], last[1], first[3],
                           wraps_infinity=True))
            middle = pieces[1:-1]
            isolated = False
        elif last[2] is None:
            out.append(Arc(last[0], INF, last[1], True))
            middle = pieces[:-1]
            isolated = False
        elif first[0] is None:
            out.append(Arc(INF, first[2], True, first[3]))
            middle = pieces[1:]
            isolated = False
        else:
            middle = pieces
            isolated = True
        for l, lc, h, hc in middle:
            out.append(Arc(INF if l is None else l,
                           INF if h is None else h, lc, hc))
        return out, isolated

    def __repr__(self):
        return "SlopeSet(%s)" % (str(self),)

    def __str__(self):
        if self.is_empty:
            return "{}"
        arcs, isolated_inf = self.arcs()
        parts = []
        for arc in arcs:
            if arc.is_point:
                parts.append("{%s}" % (arc.low,))
            elif arc.low == INF and arc.high == INF and not arc.wraps_infinity:
                if arc.low_closed or arc.high_closed:
                    parts.append("[-inf,inf]")
                else:
                    parts.append("(-inf,inf)")
            else:
                parts.append(str(arc))
        if isolated_inf:
            parts.append("{inf}")
        return " ∪ ".join(parts)


def parse_slope_set(text):
    """Parse a union of arcs separated by the union sign (or 'U')."""
    text = text.strip()
    if text in ("{}", ""):
        return SlopeSet.empty()
    out = SlopeSet.empty()
    for chunk in re.split(r"∪|U", text):
        chunk = chunk.strip()
        if not chunk:
            continue
        if chunk.startswith("{") and chunk.endswith("}"):
            out = out.union(SlopeSet.point(ExtRational.parse(chunk[1:-1])))
        else:
            out = out.union(SlopeSet.from_arc(parse_arc(chunk)))
    return out


# ---------------------------------------------------------------------------
# Integer Moebius maps
# ---------------------------------------------------------------------------

class IntMobius:
    """x -> (a x + b) / (c x + d) with integer entries and nonzero det.

    Acts on the projective circle; a positive determinant preserves the
    circular orientation, a negative one reverses it.
    """

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        if a * d - b * c == 0:
            raise ValueError("degenerate map")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("IntMobius is immutable")

    @property
    def det(self):
        return self.a * self.d - self.b * self.c

    def apply(self, x):
        if not isinstance(x, ExtRational):
            x = ExtRational(x)
        return ExtRational(self.a * x.num + self.b * x.den,
                           self.c * x.num + self.d * x.den)

    def inverse(self):
        return IntMobius(self.d, -self.b, -self.c, self.a)

    def compose(self, other):
        """self after other."""
        return IntMobius(self.a * other.a + self.b * other.c,
                         self.a * other.b + self.b * other.d,
                         self.c * other.a + self.d * other.c,
                         self.c * other.b + self.d * other.d)

    def __eq__(self, other):
        if not isinstance(other, IntMobius):
            return NotImplemented
        return (self.a, self.b, self.c, self.d) == (other.a, other.b,
                                                    other.c, other.d)

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d))

    def __repr__(self):
        return "IntMobius(%d, %d, %d, %d)" % (self.a, self.b, self.c, self.d)


def mobius_apply(m, x):
    return m.apply(x)


def _directed_image(u, uc, v, vc):
    """Image set of a directed arc running from u to v positively."""
    if u.is_infinite and v.is_infinite:
        if uc or vc:
            return SlopeSet.full()
        return SlopeSet.reals()
    if u.is_infinite:
        return SlopeSet([(_MIN, _high_cut(v, vc))], uc)
    if v.is_infinite:
        return SlopeSet([(_low_cut(u, uc), _MAX)], vc)
    if u < v:
        return SlopeSet([(_low_cut(u, uc), _high_cut(v, vc))])
    if u > v:
        return SlopeSet([(_low_cut(u, uc), _MAX),
                         (_MIN, _high_cut(v, vc))], True)
    # equal endpoints of a non-point arc: everything except possibly u
    if uc or vc:
        return SlopeSet.full()
    return SlopeSet.point(u).complement()


def mobius_arc_image(m, arc):
    """Exact image of an arc under a Moebius map, as a SlopeSet.

    The image of a connected arc is the connected arc between the two
    image endpoints, traversed positively when det > 0 and negatively
    when det < 0.
    """
    if arc.is_point:
        return SlopeSet.point(m.apply(arc.low))
    lo_inf, hi_inf = arc.low.is_infinite, arc.high.is_infinite
    if not arc.wraps_infinity and lo_inf and hi_inf:
        if arc.low_closed or arc.high_closed:
            return SlopeSet.full()
        # the affine line: everything except the image of infinity
        return SlopeSet.point(m.apply(INF)).complement()
    u = m.apply(arc.low)
    v = m.apply(arc.high)
    uc, vc = arc.low_closed, arc.high_closed
    if m.det < 0:
        u, v = v, u
        uc, vc = vc, uc
    return _directed_image(u, uc, v, vc)


def mobius_set_image(m, s):
    """Exact image of a SlopeSet under a Moebius map.

    Works piece by piece: each affine interval is an arc avoiding
    infinity, and the point at infinity (when present) maps separately.
    """
    if s.is_empty:
        return SlopeSet.empty()
    if s.is_full:
        return SlopeSet.full()
    out = SlopeSet.empty()
    for l, lc, h, hc in s.affine_pieces():
        arc = Arc(INF if l is None else l, INF if h is None else h, lc, hc)
        out = out.union(mobius_arc_image(m, arc))
    if s.has_infinity:
        out = out.union(SlopeSet.point(m.apply(INF)))
    return out


def slopeset_algebra(op, *operands):
    """Dispatch helper: op in {union, intersect, complement, difference}."""
    if op == "complement":
        (a,) = operands
        return a.complement()
    a, b = operands
    if op == "union":
        return a.union(b)
    if op == "intersect":
        return a.intersect(b)
    if op == "difference":
        return a.difference(b)
    raise ValueError("unknown operation: %r" % (op,))
