"""Deciding JN-realisability of reduced slope tuples.

A reduced query consists of an integer b, a list of slot constraints
(value in (0,1), strict flag), and a count of zero slots.  Dispatch:

- with zero slots present, realisability is an integer window on b;
- otherwise b outside [1, k-1] is never realisable, 2 <= b <= k-2 is
  always realisable, b = k-1 reduces to b = 1 by complementing every
  slot value, and b = 1 is decided by an exhaustive search for a
  coprime witness pair (A, N) whose multiset {A/N, (N-A)/N, 1/N, ...}
  can be assigned to the slots respecting every inequality.

The witness search is deterministic: ascending N, then ascending A,
then the lexicographically first slot assignment, so reported
witnesses are minimal and stable.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

from .exact import ExtRational
from .seifert import ReducedTuple, SeifertTuple, normalize, reduce_integral

JNQuery = ReducedTuple


class UnsupportedArity(ValueError):
    """Raised for zero-free queries with fewer than three slots."""


@dataclass(frozen=True)
class JNWitness:
    """A realisability certificate for a b=1 query.

    ``assignment`` maps each slot, in input order, to the fraction it
    received out of the multiset {A/N, (N-A)/N, 1/N, ..., 1/N}.
    """

    N: int
    A: int
    assignment: tuple


@dataclass(frozen=True)
class JNResult:
    realizable: bool
    witness: object
    rule: str

    def __bool__(self):
        return self.realizable


def _slot_ints(values):
    out = []
    for value, strict in values:
        if not isinstance(value, ExtRational):
            value = ExtRational(value)
        if not (0 < value < 1):
            raise ValueError("slot value must lie in (0,1): %s" % value)
        out.append((value.num, value.den, bool(strict)))
    return out


def _cap(num, den, strict):
    # largest N with num/den < 1/N (strict) or <= 1/N (non-strict)
    if strict:
        return (den - 1) // num
    return den // num


def search_bound(values):
    """Upper bound on N over all witnesses for the given slots.

    In any witness all but two slots receive 1/N, and a slot of value v
    tolerates 1/N only for N <= floor(1/v) (or strictly below 1/v when
    the slot is strict).  Maximizing over the choice of the two special
    slots bounds N.
    """
    slots = _slot_ints(values)
    k = len(slots)
    if k < 3:
        raise ValueError("need at least 3 slots")
    caps = [_cap(n, d, st) for n, d, st in slots]
    best = 0
    for i in range(k):
        for j in range(i + 1, k):
            rest = min(caps[m] for m in range(k) if m != i and m != j)
            best = max(best, rest)
    return best


def _needs(slots, N):
    # minimal numerator x such that the slot accepts the value x/N
    needs = []
    for num, den, strict in slots:
        t = num * N
        if strict:
            needs.append(t // den + 1)
        else:
            needs.append(-((-t) // den))
    return needs


def witness_search(values):
    """Find the minimal witness for a b=1 query, or None.

    Exhausts N from 2 up to search_bound(values); completeness of that
    bound rests on the remaining slots all receiving 1/N.
    """
    slots = _slot_ints(values)
    k = len(slots)
    if k < 3:
        raise ValueError("need at least 3 slots")
    bound = search_bound(values)
    for N in range(2, bound + 1):
        needs = _needs(slots, N)
        big = [i for i, x in enumerate(needs) if x > 1]
        if len(big) > 2:
            continue
        big_set = set(big)
        for A in range(1, N):
            if math.gcd(A, N) != 1:
                continue
            for i in range(k):
                if needs[i] > A:
                    continue
                for j in range(k):
                    if j == i or needs[j] > N - A:
                        continue
                    if not big_set <= {i, j}:
                        continue
                    assignment = [ExtRational(1, N)] * k
                    assignment[i] = ExtRational(A, N)
                    assignment[j] = ExtRational(N - A, N)
                    return JNWitness(N, A, tuple(assignment))
    return None


@lru_cache(maxsize=1 << 20)
def _decide(b, slot_key, zeros):
    k = len(slot_key)
    total = k + zeros
    if zeros > 0:
        ok = 2 - zeros <= b <= total - 2
        return JNResult(ok, None, "integral-slot-window")
    if k < 3:
        raise UnsupportedArity(
            "unsupported arity: %d slots with no integral slot" % k)
    if b < 1 or b > k - 1:
        return JNResult(False, None, "translation-number-bound")
    if 2 <= b <= k - 2:
        return JNResult(True, None, "interior-window")
    if b == k - 1:
        flipped = tuple((ExtRational(d - n, d), st) for n, d, st in slot_key)
        w = witness_search(flipped)
        return JNResult(w is not None, w, "complement-then-witness")
    values = tuple((ExtRational(n, d), st) for n, d, st in slot_key)
    w = witness_search(values)
    return JNResult(w is not None, w, "witness-search")


def jn_realizable(query):
    """Decide a reduced query (fields b, slots, zeros)."""
    slot_key = tuple((v.num, v.den, st) for v, st in query.slots)
    return _decide(query.b, slot_key, query.zeros)


def decide(J, b, gammas, taus):
    """Decide an arbitrary tuple: normalize, reduce, then dispatch."""
    tup = normalize(SeifertTuple(frozenset(J), b, tuple(gammas), tuple(taus)))
    return jn_realizable(reduce_integral(tup))
