"""The balanced period-2p binary sequence u and its period-p companions q
and v, periodic autocorrelation, and the empirical optimality gate.

u places ones on the index set picked out, through the Z_2 x Z_p
correspondence, by three of the four quartic classes: evens carry
{0} u D_m u D_j, odds carry D_l u D_j.  Which (m, j, l) selections can be
optimal depends on the shape of p, and even then only under half of the
primitive roots (replacing theta by an unevenly-powered root relabels the
classes).  Optimality is therefore gated empirically: the off-peak
autocorrelation test is cheap, exact and convention-free.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

import numpy as np

from .errors import NonBinary, NotGated
from .number_theory import PrimeParams, crt_inverse, find_prime_params, primitive_roots, quartic_classes

__all__ = [
    "Triple",
    "SequenceFp",
    "AutocorrProfile",
    "GateResult",
    "X_FORM_TRIPLES",
    "Y_FORM_TRIPLES",
    "family_triples",
    "build_u",
    "build_q",
    "build_v",
    "autocorrelation_profile",
    "gate_configuration",
    "gated_params_for_family",
]

# Selections that can gate for p = x^2 + 4 (case2 primes).
X_FORM_TRIPLES = ((0, 1, 3), (0, 2, 3), (1, 2, 0), (1, 3, 0))
# Selections that can gate for p = 1 + 4y^2 (case1 primes).
Y_FORM_TRIPLES = ((0, 1, 2), (0, 3, 2), (1, 0, 3), (1, 2, 3))


@dataclass(frozen=True)
class Triple:
    """Class selector (m, j, l): pairwise distinct indices in 0..3."""

    m: int
    j: int
    l: int

    def __post_init__(self):
        trio = (self.m, self.j, self.l)
        if any(not 0 <= t <= 3 for t in trio):
            raise ValueError(f"triple entries must lie in 0..3, got {trio}")
        if len(set(trio)) != 3:
            raise ValueError(f"triple entries must be pairwise distinct, got {trio}")

    @classmethod
    def parse(cls, text: str) -> "Triple":
        parts = text.split(",")
        if len(parts) != 3:
            raise ValueError(f"expected 'm,j,l', got {text!r}")
        return cls(*(int(t) for t in parts))

    @property
    def family(self) -> str:
        trio = (self.m, self.j, self.l)
        if trio in X_FORM_TRIPLES:
            return "x-form"
        if trio in Y_FORM_TRIPLES:
            return "y-form"
        return "other"

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.m, self.j, self.l)


def family_triples(family: str) -> tuple[Triple, ...]:
    """The four selectors of a family ("x-form" or "y-form")."""
    if family == "x-form":
        return tuple(Triple(*t) for t in X_FORM_TRIPLES)
    if family == "y-form":
        return tuple(Triple(*t) for t in Y_FORM_TRIPLES)
    raise ValueError(f"unknown family {family!r}")


@dataclass(frozen=True)
class SequenceFp:
    """A periodic sequence of residues mod p."""

    modulus: int
    period: int
    terms: tuple[int, ...]
    kind: str = "generic"

    def __post_init__(self):
        if len(self.terms) != self.period:
            raise ValueError("terms length must equal the period")
        if any(not 0 <= t < self.modulus for t in self.terms):
            raise ValueError("terms must be reduced residues")

    @property
    def weight(self) -> int:
        return sum(1 for t in self.terms if t)

    def is_binary(self) -> bool:
        return all(t in (0, 1) for t in self.terms)


def build_u(params: PrimeParams, triple: Triple) -> SequenceFp:
    """The balanced binary sequence of period 2p for the given selector."""
    p = params.p
    cls = quartic_classes(params)
    even_res = {0} | cls.d[triple.m] | cls.d[triple.j]
    odd_res = cls.d[triple.l] | cls.d[triple.j]
    terms = [0] * (2 * p)
    for rho in even_res:
        terms[crt_inverse(0, rho, p)] = 1
    for rho in odd_res:
        terms[crt_inverse(1, rho, p)] = 1
    return SequenceFp(modulus=p, period=2 * p, terms=tuple(terms), kind="u")


def build_q(params: PrimeParams, triple: Triple) -> SequenceFp:
    """Period-p companion: 2 on D_j, 1 on {0} u D_m u D_l, else 0."""
    p = params.p
    cls = quartic_classes(params)
    terms = [0] * p
    for rho in cls.d[triple.j]:
        terms[rho] = 2
    for rho in {0} | cls.d[triple.m] | cls.d[triple.l]:
        terms[rho] = 1
    return SequenceFp(modulus=p, period=p, terms=tuple(terms), kind="q")


def build_v(params: PrimeParams, triple: Triple) -> SequenceFp:
    """Period-p companion: 1 on {0} u D_m, -1 on D_l, else 0."""
    p = params.p
    cls = quartic_classes(params)
    terms = [0] * p
    for rho in {0} | cls.d[triple.m]:
        terms[rho] = 1
    for rho in cls.d[triple.l]:
        terms[rho] = p - 1
    return SequenceFp(modulus=p, period=p, terms=tuple(terms), kind="v")


@dataclass(frozen=True)
class AutocorrProfile:
    """Periodic autocorrelation AC(0..N-1); optimal means all off-peak in {-2, 2}."""

    values: tuple[int, ...]
    optimal: bool


def autocorrelation_profile(s: SequenceFp) -> AutocorrProfile:
    """AC(tau) = sum_t (-1)^(s_t + s_(t+tau)) for a 0/1-valued sequence."""
    if not s.is_binary():
        raise NonBinary("autocorrelation requires a 0/1 sequence")
    x = 1 - 2 * np.array(s.terms, dtype=np.int64)
    vals = tuple(int(np.dot(x, np.roll(x, -tau))) for tau in range(s.period))
    optimal = all(v in (-2, 2) for v in vals[1:])
    return AutocorrProfile(values=vals, optimal=optimal)


@dataclass(frozen=True)
class GateResult:
    """Verdict of the optimality gate with the failing check, if any."""

    gated: bool
    reason: Optional[str]  # None | "form" | "autocorrelation"
    profile: Optional[AutocorrProfile]


def gate_configuration(params: PrimeParams, triple: Triple) -> GateResult:
    """Form check on p plus the empirical autocorrelation optimality test."""
    if not params.form_valid:
        return GateResult(gated=False, reason="form", profile=None)
    profile = autocorrelation_profile(build_u(params, triple))
    if not profile.optimal:
        return GateResult(gated=False, reason="autocorrelation", profile=profile)
    return GateResult(gated=True, reason=None, profile=profile)


@lru_cache(maxsize=None)
def _gated_params_cached(p: int, trios: tuple[tuple[int, int, int], ...]) -> PrimeParams:
    triples = [Triple(*t) for t in trios]
    for theta in primitive_roots(p):
        params = find_prime_params(p, theta_override=theta)
        if all(gate_configuration(params, t).gated for t in triples):
            return params
    raise NotGated(f"no primitive root mod {p} gates all of {list(trios)}")


def gated_params_for_family(p: int, family: str | None = None) -> tuple[PrimeParams, tuple[Triple, ...]]:
    """Parameters under the smallest primitive root gating a whole family.

    The gate depends on which of the two class labelings theta induces, so
    the default root may fail; ascending retry over all primitive roots is
    deterministic and cheap.  family defaults to the one matching p's case
    flag (x-form for p = x^2 + 4, y-form for p = 1 + 4y^2).
    """
    probe = find_prime_params(p)
    if family is None:
        family = "x-form" if probe.case2 else "y-form"
    triples = family_triples(family)
    if family == "x-form" and not probe.case2:
        raise NotGated(f"{p} is not of the form x^2 + 4")
    if family == "y-form" and not probe.case1:
        raise NotGated(f"{p} is not of the form 1 + 4y^2")
    params = _gated_params_cached(p, tuple(t.as_tuple() for t in triples))
    return params, triples
