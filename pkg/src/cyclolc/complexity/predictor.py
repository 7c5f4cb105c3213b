"""Closed-form predictions for the k-error complexity profiles.

Every rule known for the construction is applied whenever its k-range
contains k (ranges may be empty at small p) and the results are
intersected; an Exact prediction is the collapse of that intersection.
Band boundaries involving (p-1)/3 are compared exactly in integers.

The mid-band upper bounds (p+1 for the x-form family, 5(p-1)/4+2 for the
y-form) are only applied from the weight of the certifying witness upward
(k >= (p-1)/4 + 2, resp. + 1): below that weight their derivation has no
support, and at p = 13 the bound is in fact false at k = (p-1)/4 + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..errors import NotGated
from ..number_theory import PrimeParams
from ..sequences import Triple, gate_configuration

__all__ = ["Prediction", "predict_u", "predict_aux"]


@dataclass(frozen=True)
class Prediction:
    """Exact value, [lo, hi] range, or unknown, with the rules that fired."""

    kind: str  # "exact" | "range" | "unknown"
    value: int | None
    lo: int | None
    hi: int | None
    rules: tuple[str, ...]

    def contains(self, value: int) -> bool:
        if self.kind == "unknown":
            return True
        if self.hi is None:
            return self.lo <= value
        return self.lo <= value <= self.hi


def _combine(
    facts: list[tuple[int | None, int | None, str]], trivial_hi: int | None = None
) -> Prediction:
    """Intersect (lo, hi, rule) facts; None bounds are unconstrained."""
    if not facts:
        return Prediction(kind="unknown", value=None, lo=None, hi=None, rules=())
    lo = 0
    hi = None
    rules = []
    for flo, fhi, rule in facts:
        if flo is not None:
            lo = max(lo, flo)
        if fhi is not None:
            hi = fhi if hi is None else min(hi, fhi)
        rules.append(rule)
    if hi is None and trivial_hi is not None:
        hi = trivial_hi
        rules.append("trivial-cap")
    if hi is None:
        return Prediction(kind="range", value=None, lo=lo, hi=None, rules=tuple(rules))
    if lo > hi:
        raise AssertionError(f"contradictory prediction rules {rules}: [{lo}, {hi}]")
    if lo == hi:
        return Prediction(kind="exact", value=lo, lo=lo, hi=hi, rules=tuple(rules))
    return Prediction(kind="range", value=None, lo=lo, hi=hi, rules=tuple(rules))


def _ceil_div(num: int, den: int) -> int:
    return -(-num // den)


def predict_aux(kind: str, p: int, k: int) -> Prediction:
    """Full case table for the companion sequences q and v.

    The q table is extended past k = (p-1)/2 by monotonicity and the
    weight of q (complexity 1 until q can be erased outright, 0 after);
    v at k = (p-1)/2 is a genuine gap and stays unknown.
    """
    if kind not in ("q", "v"):
        raise ValueError("kind must be q or v")
    if k < 0:
        raise ValueError("k must be nonnegative")
    a = (p - 1) // 4
    c = (p - 1) // 2
    facts: list[tuple[int | None, int | None, str]] = []
    if kind == "q":
        w = 3 * a + 1
        if k <= a:
            facts.append((3 * a + 1, 3 * a + 1, "aux-q-low"))
        elif 3 * k < p - 1:
            facts.append((c + 1, c + 1, "aux-q-mid"))
        elif 2 * k < p - 1:
            facts.append((a + 1, c + 1, "aux-q-third-window"))
        elif 2 * k == p - 1:
            facts.append((1, 1, "aux-q-half"))
        elif k < w:
            facts.append((1, 1, "aux-tail-monotone"))
        else:
            facts.append((0, 0, "aux-tail-monotone"))
        return _combine(facts, trivial_hi=3 * a + 1)
    # kind == "v"
    if k == 0:
        facts.append((p, p, "aux-v-zero"))
    elif 4 * k < p - 1:
        facts.append((3 * a + 1, 3 * a + 1, "aux-v-low"))
    elif k == a:
        facts.append((_ceil_div(9 * (p - 1), 16), 3 * a + 1, "aux-v-quarter"))
    elif 3 * k < p - 1:
        facts.append((c + 1, c + 1, "aux-v-mid"))
    elif 2 * k < p - 1:
        # the window's upper bound is only derivable past the quarter band;
        # at p = 13 its first k is a+1 where L_k(v) = (p-1)/2 + 1 exceeds it
        facts.append((a, c if k >= a + 2 else None, "aux-v-third-window"))
    elif 2 * k == p - 1:
        return Prediction(kind="unknown", value=None, lo=None, hi=None, rules=("aux-gap",))
    else:
        facts.append((0, 0, "aux-v-erased"))
    return _combine(facts, trivial_hi=p)


@lru_cache(maxsize=None)
def _gate_ok(params: PrimeParams, triple: Triple) -> bool:
    return gate_configuration(params, triple).gated


def predict_u(params: PrimeParams, triple: Triple, k: int, *, check_gate: bool = True) -> Prediction:
    """Intersection of every applicable rule for the period-2p sequence u."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if check_gate and not _gate_ok(params, triple):
        raise NotGated(f"(p={params.p}, theta={params.theta}, {triple.as_tuple()}) is not gated")
    p = params.p
    a = (p - 1) // 4
    c = (p - 1) // 2
    fam = triple.family
    full = (7 * p + 1) // 4
    plateau = 3 * (p - 1) // 2 + 2
    facts: list[tuple[int | None, int | None, str]] = []

    if k == 0:
        facts.append((full, full, "full-complexity"))
    if k == 1:
        one = 8 if p == 5 else full
        facts.append((one, one, "one-error"))
    if 2 <= k and 4 * k < p - 1:
        facts.append((plateau, plateau, "low-band-plateau"))
    if k == a and p > 5:
        facts.append((_ceil_div(21 * (p - 1), 16) + 1, plateau, "quarter-band-bounds"))
    if fam == "x-form":
        if k == a + 1 and p > 5:
            facts.append((p + 1, plateau, "quarter-band-next"))
        if k >= a + 2 and 3 * k < p - 1:
            facts.append((p + 1, p + 1, "mid-band-exact"))
        if 3 * k >= p - 1 and 2 * k < p - 1:
            facts.append((c + 1, None, "upper-band-lower"))
            if k >= a + 2:
                facts.append((None, p + 1, "upper-band-upper"))
        if k == c + 2:
            facts.append((None, c + 2, "half-band-upper"))
    elif fam == "y-form":
        if k >= a + 1 and 3 * k < p - 1:
            facts.append((5 * a + 2, 5 * a + 2, "mid-band-exact"))
        if 3 * k >= p - 1 and 2 * k < p - 1:
            facts.append((c + 1, None, "upper-band-lower"))
            if k >= a + 1:
                facts.append((None, 5 * a + 2, "upper-band-upper"))
        if k == c + 2:
            facts.append((None, 3 * a + 2, "half-band-upper"))
    if k >= c:
        aux = predict_aux("v", p, (k - c) // 2)
        if aux.hi is not None:
            facts.append((None, aux.hi + 1, "aux-shift-upper"))
    # every k admits the definitional cap L_k <= L_0
    return _combine(facts, trivial_hi=full)
