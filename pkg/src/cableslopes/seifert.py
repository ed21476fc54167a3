"""Seifert-fibered slope tuples and their normal forms.

A tuple (J; b; gamma_1..gamma_n; tau_1..tau_{r-1}) consists of an
integer b, rational weights gamma_i in (0, 1), rational weights tau_j,
and a set J of tau indices (1-based) marked as strict.  Realisability
of such a tuple is decided in the jn module; this module provides the
bookkeeping that every caller needs first: shifting the tau weights
into [0, 1), discarding forced integral slots, and the derived slot
counts used by the interval formulas.
"""

from dataclasses import dataclass

from .exact import ExtRational


def _as_rat(x):
    return x if isinstance(x, ExtRational) else ExtRational(x)


def _check_gamma(g):
    g = _as_rat(g)
    if g.is_infinite or not (0 < g < 1):
        raise ValueError("gamma weight must lie strictly between 0 and 1: %s" % g)
    return g


@dataclass(frozen=True)
class SeifertTuple:
    """An input tuple (J; b; gamma; tau)."""

    J: frozenset
    b: int
    gammas: tuple
    taus: tuple

    def __post_init__(self):
        object.__setattr__(self, "gammas",
                           tuple(_check_gamma(g) for g in self.gammas))
        taus = tuple(_as_rat(t) for t in self.taus)
        for t in taus:
            if t.is_infinite:
                raise ValueError("tau weight must be finite")
        object.__setattr__(self, "taus", taus)
        J = frozenset(self.J)
        for j in J:
            if not (isinstance(j, int) and 1 <= j <= len(taus)):
                raise ValueError("J must contain 1-based tau indices")
        object.__setattr__(self, "J", J)


def normalize(tup):
    """Shift each tau into [0, 1), absorbing integer parts into b.

    Replacing tau_j by its fractional part and b by b - sum(floor(tau_j))
    leaves realisability unchanged, so every decision can assume
    normalized weights.
    """
    shift = sum(t.floor() for t in tup.taus)
    return SeifertTuple(tup.J, tup.b - shift,
                        tup.gammas, tuple(t.frac() for t in tup.taus))


@dataclass(frozen=True)
class ReducedTuple:
    """A normalized tuple with forced slots stripped.

    ``slots`` lists the surviving constraints as (value, strict) pairs:
    every gamma (always strict) and every tau in (0, 1) (strict exactly
    when its index lies in J).  ``zeros`` counts the tau weights equal
    to 0 whose index is outside J; weights equal to 0 with index in J
    impose no constraint at all and are dropped.  ``kept_indices`` maps
    the surviving tau slots back to 1-based input positions.
    """

    b: int
    slots: tuple
    zeros: int
    kept_indices: tuple


def reduce_integral(tup):
    """Strip forced integral tau slots from a normalized tuple."""
    slots = [(g, True) for g in tup.gammas]
    zeros = 0
    kept = []
    for idx, t in enumerate(tup.taus, start=1):
        if t.num == 0:
            if idx in tup.J:
                continue
            zeros += 1
        else:
            slots.append((t, idx in tup.J))
            kept.append(idx)
    return ReducedTuple(tup.b, tuple(slots), zeros, tuple(kept))


@dataclass(frozen=True)
class DerivedQuantities:
    """Slot counts and the bounds they induce on the free weight.

    For weights gamma_1..gamma_n and tau_1..tau_{r-1} with strict set J:

    - ``r1``: number of non-integral tau weights;
    - ``s0``: number of integral tau weights with index outside J;
    - ``b0``: minus the sum of the tau floors;
    - ``m0`` = b0 - (n + r1 + s0 - 1) and ``m1`` = b0 + s0 - 1, the
      integer translates bounding where a further slot can be chosen.
    """

    n: int
    r1: int
    s0: int
    b0: int
    m0: int
    m1: int


def derived_quantities(gammas, taus, J):
    gammas = tuple(_check_gamma(g) for g in gammas)
    taus = tuple(_as_rat(t) for t in taus)
    J = frozenset(J)
    n = len(gammas)
    r1 = sum(1 for t in taus if t.frac().num != 0)
    s0 = sum(1 for idx, t in enumerate(taus, start=1)
             if t.frac().num == 0 and idx not in J)
    b0 = -sum(t.floor() for t in taus)
    m0 = b0 - (n + r1 + s0 - 1)
    m1 = b0 + s0 - 1
    return DerivedQuantities(n, r1, s0, b0, m0, m1)
