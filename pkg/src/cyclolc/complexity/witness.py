"""Explicit error polynomials certifying upper bounds on L_k.

Three constructions: the half-offset (x^p - 1)/2, optionally sharpened by
an even-lifted period-p error; and one mid-band pattern per family, built
from a class polynomial.  The two representative selectors carry closed
forms; every other gated selector goes through a search of the pattern
space {c0 + c1 x^p + (c2 + c3 x^p) S_n(x)}, which contains both closed
forms.  No witness is ever reported without a numerical multiplicity
recheck.
"""

from __future__ import annotations

import itertools

from .._kernel.pure import _eliminate
from ..errors import NoWitnessFound, NotGated
from ..gfp_poly import PolyFp, hasse_eval, poly_from_sequence, root_multiplicity
from ..number_theory import PrimeParams, quartic_classes
from ..sequences import Triple, build_u, gate_configuration
from .results import KErrorResult

__all__ = [
    "lift_even",
    "verify_witness",
    "class_polynomial",
    "half_offset_witness",
    "mid_band_witness",
    "witness_bound",
]


def lift_even(h: PolyFp) -> PolyFp:
    """Lift odd-degree terms by p: h_i x^a becomes h_i x^(a+p) for odd a.

    The result is an even function as a period-2p polynomial (so it is
    divisible by (x+1)^((p-1)/4) whenever h was by (x-1)^((p-1)/4)) and
    congruent to h mod (x-1)^p since x^(a+p) - x^a = x^a (x-1)^p.
    """
    p = h.modulus
    if h.degree >= p:
        raise ValueError("lift requires degree < p")
    support = {}
    for i, c in enumerate(h.coeffs):
        if c:
            support[i if i % 2 == 0 else i + p] = c
    return PolyFp.from_support(p, support)


def verify_witness(base: PolyFp, f: PolyFp, claim_m0: int, claim_m1: int) -> bool:
    """True iff base + f reaches multiplicity claim_m0 at +1 and claim_m1 at -1."""
    p = base.modulus
    total = base + f
    if root_multiplicity(total, 1, p).multiplicity < claim_m0:
        return False
    return root_multiplicity(total, -1, p).multiplicity >= claim_m1


def class_polynomial(params: PrimeParams, n: int) -> PolyFp:
    """Sum of x^i over the n-th quartic coset of the units mod 2p."""
    return PolyFp.from_support(params.p, {i: 1 for i in quartic_classes(params).h[n]})


def half_offset_witness(params: PrimeParams) -> PolyFp:
    """(x^p - 1)/2 as a weight-2 error polynomial."""
    p = params.p
    inv2 = pow(2, -1, p)
    return PolyFp.from_support(p, {0: p - inv2, p: inv2})


def _mid_formula_x(params: PrimeParams, triple: Triple) -> PolyFp:
    # closed form for the (0,1,3) selector: x^p/2 - (rho+3)/4 - (rho+1) x^p S_m
    p, rho = params.p, params.rho
    inv2 = pow(2, -1, p)
    inv4 = pow(4, -1, p)
    support = {0: (-(rho + 3) * inv4) % p, p: inv2}
    coef = (-(rho + 1)) % p
    for i in quartic_classes(params).h[triple.m]:
        support[(p + i) % (2 * p)] = coef
    return PolyFp.from_support(p, support)


def _mid_formula_y(params: PrimeParams, triple: Triple) -> PolyFp:
    # closed form for the (0,1,2) selector: -1/2 - 2 S_l
    p = params.p
    inv2 = pow(2, -1, p)
    support = {0: p - inv2}
    for i in quartic_classes(params).h[triple.l]:
        support[i] = (p - 2) % p
    return PolyFp.from_support(p, support)


def _pattern_search(
    params: PrimeParams, base: PolyFp, m0_target: int, m1_target: int
) -> PolyFp:
    """Smallest-weight verified witness in the 4-coefficient pattern space."""
    p = params.p
    a = (p - 1) // 4
    one = PolyFp.from_support(p, {0: 1})
    xp = PolyFp.from_support(p, {p: 1})
    best: tuple[int, int, tuple[int, ...]] | None = None  # (weight, n, coeffs)
    for n in range(4):
        sn = class_polynomial(params, n)
        basis = [one, xp, sn, sn.shift_mod_two_periods(p)]
        rows = []
        for order in range(m0_target):
            rows.append(
                [hasse_eval(b, order, 1) for b in basis]
                + [(-hasse_eval(base, order, 1)) % p]
            )
        for order in range(m1_target):
            rows.append(
                [hasse_eval(b, order, -1) for b in basis]
                + [(-hasse_eval(base, order, -1)) % p]
            )
        solved = _eliminate(rows, 4, p)
        if solved is None:
            continue
        red, pivots = solved
        free = [c for c in range(4) if c not in pivots]
        if len(free) <= 2:
            assignments = itertools.product(range(p), repeat=len(free))
        else:
            assignments = [(0,) * len(free)]
        for vals in assignments:
            coeffs = [0, 0, 0, 0]
            for fc, val in zip(free, vals):
                coeffs[fc] = val
            for i, piv in enumerate(pivots):
                acc = red[i][4]
                for fc, val in zip(free, vals):
                    acc -= red[i][fc] * val
                coeffs[piv] = acc % p
            weight = (coeffs[0] != 0) + (coeffs[1] != 0) + a * ((coeffs[2] != 0) + (coeffs[3] != 0))
            if best is None or weight < best[0]:
                best = (weight, n, tuple(coeffs))
    if best is None:
        raise NoWitnessFound(
            f"no pattern solution reaches multiplicities ({m0_target}, {m1_target})"
        )
    _, n, coeffs = best
    sn = class_polynomial(params, n)
    f = PolyFp.from_support(params.p, {0: coeffs[0], params.p: coeffs[1]})
    f = f + PolyFp(p, tuple(c * coeffs[2] % p for c in sn.coeffs))
    f = f + PolyFp(p, tuple(c * coeffs[3] % p for c in sn.shift_mod_two_periods(params.p).coeffs))
    return f


def mid_band_witness(params: PrimeParams, triple: Triple) -> tuple[PolyFp, int, int]:
    """Witness and its certified multiplicity targets for the family mid band.

    x-form targets ((p-1)/2, (p-1)/2), certifying L_k <= p + 1;
    y-form targets ((p-1)/4, (p-1)/2), certifying L_k <= 5(p-1)/4 + 2.
    """
    p = params.p
    a = (p - 1) // 4
    c = (p - 1) // 2
    fam = triple.family
    if fam == "x-form":
        targets = (c, c)
        formula = _mid_formula_x if triple.as_tuple() == (0, 1, 3) else None
    elif fam == "y-form":
        targets = (a, c)
        formula = _mid_formula_y if triple.as_tuple() == (0, 1, 2) else None
    else:
        raise NoWitnessFound(f"no mid-band construction for family {fam!r}")
    base = poly_from_sequence(build_u(params, triple))
    if formula is not None:
        f = formula(params, triple)
        if verify_witness(base, f, *targets):
            return f, targets[0], targets[1]
    f = _pattern_search(params, base, *targets)
    if not verify_witness(base, f, *targets):
        raise NoWitnessFound("pattern search result failed the multiplicity recheck")
    return f, targets[0], targets[1]


def _measured(base: PolyFp, f: PolyFp, k: int, label: str) -> KErrorResult:
    p = base.modulus
    total = base + f
    m0 = root_multiplicity(total, 1, p).multiplicity
    m1 = root_multiplicity(total, -1, p).multiplicity
    upper = 2 * p - m0 - m1
    return KErrorResult(
        k=k, lower=0, upper=upper, exact=None, method=label,
        witness=f, m0=m0, m1=m1,
    )


def witness_bound(
    params: PrimeParams, triple: Triple, k: int, q_error: PolyFp | None = None
) -> KErrorResult:
    """Best witness-certified upper bound on L_k for a gated configuration.

    ``q_error`` may carry a period-p error (weight <= k - 2) achieving a
    known multiplicity for the companion q; its even lift sharpens the
    half-offset witness.  A failed mid-band search falls back to the
    half-offset bound rather than erroring out.
    """
    if not gate_configuration(params, triple).gated:
        raise NotGated(f"(p={params.p}, theta={params.theta}, {triple.as_tuple()}) is not gated")
    p = params.p
    a = (p - 1) // 4
    base = poly_from_sequence(build_u(params, triple))
    candidates = [_measured(base, PolyFp(p, ()), k, "witness-zero")]
    if k >= 2:
        f = half_offset_witness(params)
        if q_error is not None and not q_error.is_zero():
            if q_error.degree >= p or q_error.weight > k - 2:
                raise ValueError("q_error must have degree < p and weight <= k - 2")
            f = f + lift_even(q_error)
        if f.weight <= k:
            candidates.append(_measured(base, f, k, "witness-half-offset"))
    fam = triple.family
    threshold = a + 2 if fam == "x-form" else a + 1
    if fam in ("x-form", "y-form") and k >= threshold:
        try:
            f, m0t, m1t = mid_band_witness(params, triple)
            if f.weight <= k:
                res = _measured(base, f, k, "witness-mid-band")
                if res.m0 < m0t or res.m1 < m1t:
                    raise NoWitnessFound("mid-band witness below its targets")
                candidates.append(res)
        except NoWitnessFound:
            pass  # half-offset candidate stays as the fallback
    return min(candidates, key=lambda r: r.upper)
